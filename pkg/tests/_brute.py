"""Plain-Python brute force used as an independent oracle in tests."""
from itertools import combinations, product


def dist(p, q):
    return sum(x != y for x, y in zip(p, q))


def space(q, n):
    return list(product(range(q), repeat=n))


def common_points(centers, t, q):
    n = len(centers[0])
    return [p for p in space(q, n) if all(dist(p, c) <= t for c in centers)]


def free_value(centers, t):
    """Largest |K| such that some x on the other coordinates is within t - |K|
    of every centre there; None for minus infinity."""
    n = len(centers[0])
    best = None
    for size in range(n + 1):
        for Kset in combinations(range(n), size):
            rest = [k for k in range(n) if k not in Kset]
            choices = [sorted({c[k] for c in centers}) for k in rest]
            for x in product(*choices):
                if all(sum(x[j] != c[k] for j, k in enumerate(rest)) <= t - size for c in centers):
                    best = size if best is None else max(best, size)
                    break
    return best


def candidates(centers, t):
    n = len(centers[0])
    choices = [sorted({c[k] for c in centers}) for k in range(n)]
    return sorted(x for x in product(*choices) if all(dist(x, c) <= t for c in centers))


def has_pq_property(centers, t, p, q, qa):
    """Every p of the balls contain q with a common point (exhaustive)."""
    m = len(centers)
    if m < p:
        return has_pq_property(centers, t, m, min(q, m), qa) if m >= q else True
    meets = {}
    for S in combinations(range(m), q):
        meets[S] = bool(common_points([centers[i] for i in S], t, qa))
    for P in combinations(range(m), p):
        if not any(meets[S] for S in combinations(P, q)):
            return False
    return True


def clustered_centers(rng, q, n, t, m, clusters):
    """Centres scattered within distance t of a few random cluster points."""
    seeds = [tuple(int(x) for x in rng.integers(0, q, n)) for _ in range(clusters)]
    out = []
    for _ in range(m):
        c = list(seeds[int(rng.integers(0, clusters))])
        for k in rng.choice(n, size=int(rng.integers(0, min(t, n) + 1)), replace=False):
            c[int(k)] = int(rng.integers(0, q))
        out.append(tuple(c))
    return out
