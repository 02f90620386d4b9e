"""JSON documents for families, codes and reports.

Families are ``{"version": 1, "alphabet": int | "extensible", "n", "t",
"centers": [...]}`` or the same with ``"pairs": [[a, b], ...]``. Binary
points may be written as hex strings ``"0x..."``; coordinate 1 is the most
significant of the ``n`` low bits. Exact rationals are written as
``{"num": "<int>", "den": "<int>"}``.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

from .core import Alphabet, BallFamily, PairFamily
from .errors import FormatError

VERSION = 1


def read_text(path) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def loads(text: str, source="<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load(path):
    return loads(read_text(path), "<stdin>" if path == "-" else str(path))


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"))


def to_jsonable(obj):
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):  # numpy scalars
        return obj.item()
    return obj


def rational(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def parse_rational(d) -> Fraction:
    try:
        return Fraction(int(d["num"]), int(d["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        raise FormatError(f"not a rational: {d!r}") from None


def point_to_hex(p) -> str:
    v = 0
    for x in p:
        v = (v << 1) | x
    return "0x" + format(v, "0{}x".format(max(1, -(-len(p) // 4))))


def parse_point(raw, n):
    if isinstance(raw, str):
        if not raw.lower().startswith("0x"):
            raise FormatError(f"point string must be hex '0x...', got {raw!r}")
        try:
            v = int(raw, 16)
        except ValueError:
            raise FormatError(f"bad hex point {raw!r}") from None
        if v >> n:
            raise FormatError(f"hex point {raw!r} has bits beyond length {n}")
        return tuple((v >> (n - 1 - k)) & 1 for k in range(n))
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise FormatError(f"point must be a list of integers or a hex string, got {raw!r}")
    return tuple(raw)


def _header(doc):
    if not isinstance(doc, dict):
        raise FormatError("family document must be a JSON object")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported version {doc.get('version')!r}, expected {VERSION}")
    for key in ("alphabet", "n", "t"):
        if key not in doc:
            raise FormatError(f"missing field '{key}'")
    n, t = doc["n"], doc["t"]
    if not isinstance(n, int) or not isinstance(t, int):
        raise FormatError("'n' and 't' must be integers")
    return Alphabet.from_json(doc["alphabet"]), n, t


def family_from_doc(doc):
    """BallFamily for documents with ``centers``, PairFamily for ``pairs``."""
    alphabet, n, t = _header(doc)
    if "centers" in doc:
        centers = tuple(parse_point(c, n) for c in doc["centers"])
        return BallFamily(alphabet, n, t, centers)
    if "pairs" in doc:
        pairs = []
        for pr in doc["pairs"]:
            if not isinstance(pr, list) or len(pr) != 2:
                raise FormatError(f"pair must be [a, b], got {pr!r}")
            pairs.append((parse_point(pr[0], n), parse_point(pr[1], n)))
        return PairFamily(alphabet, n, t, tuple(pairs))
    raise FormatError("family document needs 'centers' or 'pairs'")


def family_to_doc(family) -> dict:
    doc = {"version": VERSION, "alphabet": family.alphabet.to_json(), "n": family.n, "t": family.t}
    if isinstance(family, BallFamily):
        doc["centers"] = [list(c) for c in family.centers]
    else:
        doc["pairs"] = [[list(a), list(b)] for a, b in family.pairs]
    return doc


def points_from_doc(doc):
    """Alphabet, length and point list from ``{"alphabet", "n", "points"}``
    (a ball-family document is accepted too; its centres are the points)."""
    if isinstance(doc, dict) and "points" in doc and "centers" not in doc:
        doc = dict(doc, centers=doc["points"])
        doc.setdefault("t", 0)
    fam = family_from_doc(doc)
    if not isinstance(fam, BallFamily):
        raise FormatError("expected a point list")
    return fam.alphabet, fam.n, list(fam.centers)
