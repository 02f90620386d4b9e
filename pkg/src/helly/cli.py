"""Command-line entry point: ``helly <command> ...``.

Reports go to standard output as JSON (default) or ``key<TAB>value`` lines.
Exit status is 0 on success, 1 when a verdict fails and 2 on usage, budget
or input-format errors. ``-`` reads a file argument from standard input.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

import numpy as np

from . import codes, extremal, families, hitting, jsonio, oracle, prague
from .core import BallFamily, PairFamily
from .errors import (BudgetExceededError, FormatError, HellyError, HypothesisViolatedError,
                     InvariantError)

OK, FAILS, USAGE = 0, 1, 2


class Result:
    def __init__(self, doc, ok=True):
        self.doc = doc
        self.ok = ok


def _default_seed():
    raw = os.environ.get("HELLY_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise FormatError(f"HELLY_SEED must be an integer, got {raw!r}") from None


def _tsv_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return f"{v['num']}/{v['den']}"
    if isinstance(v, (dict, list, tuple)):
        return jsonio.dumps(v)
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return jsonio.dumps(doc)
    doc = jsonio.to_jsonable(doc)
    return "\n".join(f"{k}\t{_tsv_value(doc[k])}" for k in sorted(doc))


# ---------------------------------------------------------------------------
# loaders

def _ball_family(path) -> BallFamily:
    fam = jsonio.family_from_doc(jsonio.load(path))
    if not isinstance(fam, BallFamily):
        raise FormatError("expected a ball family ('centers')")
    return fam


def _pair_family(path) -> PairFamily:
    fam = jsonio.family_from_doc(jsonio.load(path))
    if not isinstance(fam, PairFamily):
        raise FormatError("expected a pair family ('pairs')")
    return fam


def _setseq_doc(system: extremal.SetSequenceSystem):
    return {"version": 1, "kind": "setseq", "n": system.n, "t": system.t, "a": system.a, "b": system.b,
            "m": system.m, "expected_m": extremal.setseq_expected_size(system.n, system.t, system.a, system.b),
            "note": system.note, "A": system.A.tolist(), "B": system.B.tolist()}


def _setseq_from_doc(doc) -> extremal.SetSequenceSystem:
    try:
        n, t, a, b = (int(doc[k]) for k in ("n", "t", "a", "b"))
        A = np.asarray(doc["A"], dtype=np.int64).reshape(-1, n)
        B = np.asarray(doc["B"], dtype=np.int64).reshape(-1, n)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad set-sequence document: {exc}") from None
    return extremal.SetSequenceSystem(n, t, a, b, A, B, doc.get("note", ""))


def _load_code(path) -> codes.Code:
    return codes.Code.from_doc(jsonio.load(path))


# ---------------------------------------------------------------------------
# commands

def cmd_intersect(args):
    fam = _ball_family(args.family)
    cert = families.free_dimension(fam.centers, fam.t)
    point = families.balls_intersect(fam)
    return Result({"intersect": point is not None, "point": None if point is None else list(point),
                   "free": cert.as_dict()})


def cmd_core(args):
    fam = _ball_family(args.family)
    core = families.irredundant_core(fam)
    doc = core.as_dict()
    doc["same_intersection"] = families.same_intersection(fam, core.indices)
    doc["verdict"] = "holds" if doc["same_intersection"] and len(core.indices) <= core.bound else "fails"
    return Result(doc, doc["verdict"] == "holds")


def cmd_free(args):
    fam = _ball_family(args.family)
    cert = families.free_dimension(fam.centers, fam.t)
    doc = cert.as_dict()
    doc["verified"] = cert.verify()
    return Result(doc, doc["verified"])


def cmd_radon(args):
    alphabet, n, pts = jsonio.points_from_doc(jsonio.load(args.points))
    part = families.radon_partition(pts, args.t, alphabet)
    return Result(part.as_dict(), part.verified)


def cmd_hit(args):
    fam = _ball_family(args.family)
    if args.kind == "pairs":
        rep = hitting.fractional_helly_pairs(fam)
        return Result(rep.as_dict(), rep.holds)
    if args.kind == "tuples":
        rep = hitting.fractional_helly_tuples(fam, seed=args.seed)
        return Result(rep.as_dict(), rep.holds)
    if args.p is None or args.q is None:
        raise _Usage("hit pq needs --p and --q")
    try:
        rep = hitting.pq_hitting(fam, args.p, args.q)
    except HypothesisViolatedError as exc:
        return Result({"verdict": "fails", "error": str(exc),
                       "ball": None if exc.ball is None else exc.ball}, False)
    return Result(rep.as_dict(), rep.complete and rep.guarantee)


def cmd_code(args):
    if args.load:
        code = _load_code(args.load)
    elif args.kind == "trivial":
        code = codes.trivial_code(args.k)
    elif args.kind == "hamming":
        code = codes.hamming_code(args.r)
    elif args.kind == "golay":
        code = codes.golay_code()
    else:
        raise _Usage("code needs trivial|hamming|golay or --load FILE")
    if args.extend:
        code = codes.extend_parity(code)
    if args.verify:
        d = codes.verify_min_distance(code)
        return Result({"name": code.name, "n": code.n, "claimed_d": code.claimed_d, "d": d, "size": code.size,
                       "verdict": "holds" if d >= code.claimed_d else "fails"}, d >= code.claimed_d)
    return Result(code.to_doc())


def cmd_build(args):
    kind = args.kind
    if kind == "setseq":
        for k in ("n", "t", "a", "b"):
            if getattr(args, k) is None:
                raise _Usage(f"build setseq needs --{k}")
        return Result(_setseq_doc(extremal.setseq_family(args.n, args.t, args.a, args.b)))
    if args.t is None:
        raise _Usage(f"build {kind} needs --t")
    if kind == "prop21":
        fam = extremal.prop21_family(args.t)
    elif kind == "even":
        fam = extremal.even_weight_family(args.t)
    elif kind == "ternary":
        fam = extremal.ternary_family(args.t)
    else:
        if not args.code:
            raise _Usage("build from-code needs --code FILE")
        fam = extremal.family_from_code(_load_code(args.code), args.t)
    return Result(jsonio.family_to_doc(fam))


def cmd_verify(args):
    doc = jsonio.load(args.family)
    if isinstance(doc, dict) and doc.get("kind") == "setseq":
        v = extremal.verify_setseq(_setseq_from_doc(doc))
    else:
        fam = jsonio.family_from_doc(doc)
        if not isinstance(fam, PairFamily):
            raise FormatError("expected a pair family ('pairs')")
        v = extremal.verify_pair_family(fam, args.mode)
    return Result(v.as_dict(), v.holds)


def cmd_certify(args):
    fam = _pair_family(args.family)
    if args.kind == "dimension":
        cert = extremal.dimension_certificate(fam)
    else:
        cert = extremal.disjoint_events_certificate(fam)
    return Result(cert.as_dict(), cert.holds)


def _embedding_result(e):
    v = prague.verify_threshold_embedding(e)
    doc = e.as_dict()
    doc.update(v.as_dict())
    return Result(doc, v.valid)


def cmd_prague(args):
    kind = args.kind
    if kind == "kneser":
        if args.n is None or args.k is None:
            raise _Usage("prague kneser needs --n and --k")
        return _embedding_result(prague.kneser_embedding(args.n, args.k))
    if kind == "cliques":
        if args.m is None:
            raise _Usage("prague cliques needs --m")
        res = _embedding_result(prague.disjoint_cliques_embedding(args.m))
        if args.m >= 2:
            res.doc["threshold_lower_bound"] = prague.cliques_threshold_lower_bound(args.m)
        return res
    if kind == "clique-plus-vertex":
        if args.n is None:
            raise _Usage("prague clique-plus-vertex needs --n")
        return _embedding_result(prague.clique_plus_vertex_embedding(args.n))
    if kind == "matching":
        if not args.graph:
            raise _Usage("prague matching needs a graph file")
        g = prague.Graph.from_edge_list(jsonio.read_text(args.graph))
        mb = prague.induced_matching_lower_bound(g, exact=False if args.greedy else None)
        return Result(mb.as_dict())
    # cut
    if args.graph:
        doc = jsonio.load(args.graph)
        try:
            U, V = doc["U"], doc["V"]
        except (KeyError, TypeError):
            raise FormatError("cut input needs 'U' and 'V' point lists") from None
    elif args.m is not None:
        e = prague.disjoint_cliques_embedding(args.m)
        U, V = e.points[:args.m], e.points[args.m:]
    else:
        raise _Usage("prague cut needs a points file or --m")
    c = prague.cut_inequality_check(U, V)
    return Result(c.as_dict(), c.holds)


def cmd_oracle(args):
    if args.kind == "helly":
        for k in ("n", "t", "q"):
            if getattr(args, k) is None:
                raise _Usage(f"oracle helly needs --{k}")
        r = oracle.exhaustive_helly(args.n, args.t, args.q)
        return Result(r.as_dict())
    if args.kind == "maxf":
        for k in ("n", "t", "q"):
            if getattr(args, k) is None:
                raise _Usage(f"oracle maxf needs --{k}")
        r = oracle.exhaustive_max_f(args.n, args.t, args.q, args.mode, args.m_cap)
        return Result(r.as_dict())
    if not args.family:
        raise _Usage("oracle intersect needs a family file")
    fam = _ball_family(args.family)
    p = oracle.exhaustive_intersection(fam)
    return Result({"intersect": p is not None, "point": None if p is None else list(p)})


class _Usage(Exception):
    pass


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json", help="output format (default json)")
    common.add_argument("--seed", type=int, default=None, help="random seed (default $HELLY_SEED or 0)")

    p = argparse.ArgumentParser(prog="helly", description="Helly-type experiments for Hamming balls.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("intersect", cmd_intersect,
             "Decide whether the balls share a point; certified by the free dimension, which is non-negative exactly when they do.")
    sp.add_argument("family")
    sp = add("core", cmd_core,
             "Irredundant subfamily with the same intersection; its size never exceeds 2^(t+1).")
    sp.add_argument("family")
    sp = add("free", cmd_free, "Free dimension of the centres with a witness point.")
    sp.add_argument("family")
    sp = add("radon", cmd_radon,
             "Split 2^(t+1)+1 or more points into two parts whose radius-t hulls meet.")
    sp.add_argument("points")
    sp.add_argument("--t", type=int, required=True)

    sp = add("hit", cmd_hit,
             "Hitting sets: one point in many balls from pairwise (pairs) or (t+2)-wise (tuples) "
             "intersection density, or a bounded hitting set under the (p,q) property (pq).")
    sp.add_argument("kind", choices=("pairs", "tuples", "pq"))
    sp.add_argument("family")
    sp.add_argument("--p", type=int)
    sp.add_argument("--q", type=int)

    sp = add("code", cmd_code,
             "Binary codes (all strings, Hamming, Golay); perfect codes give families meeting the weighted bound with equality.")
    sp.add_argument("kind", nargs="?", choices=("trivial", "hamming", "golay"))
    sp.add_argument("--k", type=int, default=4, help="length of the trivial code")
    sp.add_argument("--r", type=int, default=3, help="Hamming code redundancy")
    sp.add_argument("--extend", action="store_true", help="append an overall parity bit")
    sp.add_argument("--verify", action="store_true", help="report the exact minimum distance instead of codewords")
    sp.add_argument("--load", help="read a code document instead of building one")

    sp = add("build", cmd_build,
             "Extremal pair families: 2^(t+1) complementary pairs, the even-weight variant, the ternary 3^t family, "
             "families from codes, and set-sequence systems.")
    sp.add_argument("kind", choices=("prop21", "even", "ternary", "from-code", "setseq"))
    sp.add_argument("--t", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--b", type=int)
    sp.add_argument("--code", help="code document for from-code")

    sp = add("verify", cmd_verify,
             "Check a pair family's distance conditions and report the weight sum, which is at most 1 for valid families.")
    sp.add_argument("family")
    sp.add_argument("--mode", default="f", choices=("f", "fprime", "f-prime"))

    sp = add("certify", cmd_certify,
             "Replay the proof certificates: linear independence of the evaluation polynomials (dimension) "
             "or pairwise disjoint random events (events).")
    sp.add_argument("kind", choices=("dimension", "events"))
    sp.add_argument("family")

    sp = add("prague", cmd_prague,
             "Threshold embeddings (adjacent iff distance >= t) and their lower-bound certificates.")
    sp.add_argument("kind", choices=("kneser", "cliques", "clique-plus-vertex", "matching", "cut"))
    sp.add_argument("graph", nargs="?", help="edge list (matching) or {U, V} points (cut)")
    sp.add_argument("--n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--greedy", action="store_true", help="greedy induced matching even for small graphs")

    sp = add("oracle", cmd_oracle,
             "Exhaustive ground truth: the Helly number (equal to 2^(t+1) when n > t), "
             "largest pair family at a fixed length, and brute-force intersection.")
    sp.add_argument("kind", choices=("helly", "maxf", "intersect"))
    sp.add_argument("family", nargs="?")
    sp.add_argument("--n", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--mode", default="f", choices=("f", "fprime", "f-prime"))
    sp.add_argument("--m-cap", type=int, default=8)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else USAGE
    try:
        if args.seed is None:
            args.seed = _default_seed()
        res = args.func(args)
    except _Usage as exc:
        print(f"helly: {exc}", file=stderr)
        return USAGE
    except BudgetExceededError as exc:
        print(f"helly: budget exceeded: {exc}", file=stderr)
        return USAGE
    except InvariantError as exc:
        print(f"helly: invariant violated: {exc}", file=stderr)
        return FAILS
    except (FormatError, HellyError, ValueError, OSError) as exc:
        print(f"helly: {exc}", file=stderr)
        return USAGE
    print(render(res.doc, args.format), file=stdout)
    return OK if res.ok else FAILS


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
