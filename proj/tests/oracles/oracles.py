"""Independent brute-force and high-precision oracles.

Run `python3 tests/oracles/oracles.py > tests/oracles/frozen.json` to regenerate.
Nothing here shares code with the C++ library.
"""
import itertools
import json
import math
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 40

F5 = [(0, 1, 2), (0, 1, 3), (2, 3, 4)]
K43_MINUS = [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
K43 = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def norm(edges, t, p):
    deg = {}
    for e in edges:
        for s in itertools.combinations(sorted(e), t):
            deg[s] = deg.get(s, 0) + 1
    return sum(d ** p for d in deg.values())


def degree(edges, n, v, t, p):
    rest = [e for e in edges if v not in e]
    return norm(edges, t, p) - norm(rest, t, p)


def contains(host, pattern, n):
    hs = set(tuple(sorted(e)) for e in host)
    k = 1 + max(max(e) for e in pattern)
    for img in itertools.permutations(range(n), k):
        if all(tuple(sorted(img[v] for v in e)) in hs for e in pattern):
            return True
    return False


def canon(edges, n):
    best = None
    for perm in itertools.permutations(range(n)):
        code = sorted(tuple(sorted(perm[v] for v in e)) for e in edges)
        if best is None or code < best:
            best = code
    return tuple(best)


def exact(n, r, family, t, p):
    universe = list(itertools.combinations(range(n), r))
    best = -1.0
    winners = []

    def free_with(edges, new):
        return not any(contains(edges + [new], pat, n) for pat in family)

    def rec(edges, start):
        nonlocal best, winners
        v = norm(edges, t, p)
        if v > best + 1e-9:
            best, winners = v, [list(edges)]
        elif abs(v - best) <= 1e-9:
            winners.append(list(edges))
        for j in range(start, len(universe)):
            if free_with(edges, universe[j]):
                edges.append(universe[j])
                rec(edges, j + 1)
                edges.pop()

    rec([], 0)
    classes = {canon(w, n) for w in winners}
    return best, len(classes)


def colorable(edges, n, parts):
    for colours in itertools.product(range(parts), repeat=n):
        if all(len({colours[v] for v in e}) == len(e) for e in edges):
            return True
    return False


def g_star(p):
    f = lambda x: x ** p * (1 - x) + x * (1 - x) ** p
    xs = [mp.mpf(i) / 4000 for i in range(0, 2001)]
    x0 = max(xs, key=f)
    lo, hi = max(mp.mpf(0), x0 - mp.mpf(1) / 4000), min(mp.mpf(1) / 2, x0 + mp.mpf(1) / 4000)
    for _ in range(200):
        a, b = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if f(a) < f(b):
            lo = a
        else:
            hi = b
    x = (lo + hi) / 2
    return x, f(x)


def h_star(p):
    from scipy.optimize import minimize

    def h(v):
        x1, x2 = v
        x3 = 1 - x1 - x2
        if min(x1, x2, x3) < 0:
            return 1.0
        return -(x1 * x2 * x3 ** p + x1 * x2 ** p * x3 + x1 ** p * x2 * x3)

    best = None
    grid = 60
    for i in range(1, grid):
        for j in range(1, grid - i):
            v = h((i / grid, j / grid))
            if best is None or v < best[0]:
                best = (v, (i / grid, j / grid))
    res = minimize(h, best[1], method="Nelder-Mead", options={"xatol": 1e-14, "fatol": 1e-18, "maxiter": 20000})
    return -res.fun


def f5_pi(p):
    p = mp.mpf(p)
    f = lambda x: min(x ** (1 + p / 2) / 6 ** (p / 2), x * (1 - x) ** p)
    xs = [mp.mpf(i) / 20000 for i in range(1, 20000)]
    x0 = max(xs, key=f)
    lo, hi = x0 - mp.mpf(1) / 20000, x0 + mp.mpf(1) / 20000
    for _ in range(200):
        a, b = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if f(a) < f(b):
            lo = a
        else:
            hi = b
    return f((lo + hi) / 2)


def profile(x):
    i = int(math.floor(1 / (1 - x)))
    return -(i * i - i - 1) / (i * (i + 1)) * x + (i - 1) / (i + 1)


def appendix_g_grid(p):
    # Dense grid oracle over x in [0, 0.999].
    best = 0.0
    steps = 400000
    for k in range(steps + 1):
        x = 0.999 * k / steps
        best = max(best, profile(x) ** p * x ** (1 - p) if x > 0 else (0.0 if p < 1 else 0.0))
    return best


def main_ratio(p):
    return (p * h_star(p - 1) + float(g_star(p)[1])) / ((p + 2) * h_star(p))


def case1_bound(p):
    a = max(2 ** (1 - p), (1 / 8) * ((p - 1) / p) ** (p - 4))
    b = max(2 ** -p, (1 / 8) * (p / (p + 1)) ** (p - 3))
    q = 1 / (p + 2)
    h = q * q * (p * q) ** p + 2 * q * q ** p * (p * q)
    return (3 / (2 * math.e) * a + b) / ((p + 2) * h)


def counterexample(n, eps1):
    m = n // 3
    a = math.floor(eps1 * n + 1e-9)
    V1, V2, V3 = range(0, m), range(m, 2 * m), range(2 * m, 3 * m)
    A1, A2 = set(range(0, a)), set(range(m, m + a))
    u1, u2, star = m + a, 2 * m, n
    edges = []
    for x in V1:
        for y in V2:
            for z in V3:
                if (x in A1 and y == u1 and z == u2) or (x in A1 and y in A2):
                    continue
                edges.append((x, y, z))
    for x in A1:
        for y in A2:
            edges.append((x, y, star))
    edges.append((u1, u2, star))
    return edges


def min_degree_fast(edges, n, p):
    deg = {}
    for e in edges:
        for s in itertools.combinations(e, 2):
            deg[s] = deg.get(s, 0) + 1
    total = sum(d ** p for d in deg.values())
    best = None
    for v in range(n):
        lost = 0.0
        touched = {}
        for e in edges:
            if v in e:
                for s in itertools.combinations(e, 2):
                    touched[s] = touched.get(s, 0) + 1
        for s, c in touched.items():
            lost += deg[s] ** p - (deg[s] - c) ** p
        best = lost if best is None else min(best, lost)
    return best


def main():
    out = {}
    out["f5_shadow_pairs"] = sorted({s for e in F5 for s in itertools.combinations(e, 2)})
    out["f5_norm_t2"] = {str(p): norm(F5, 2, p) for p in (0.5, 2.0, 3.7)}
    out["k43_degree_v0_t2_p2"] = degree(K43, 4, 0, 2, 2)
    out["f5_degrees_t2"] = {str(p): [degree(F5, 5, v, 2, p) for v in range(5)] for p in (0.5, 1.0, 2.0)}
    out["f5_to_k33_colorable"] = colorable(F5, 5, 3)
    k43m = set(K43_MINUS)
    out["f5_to_k43minus_hom"] = any(
        all(tuple(sorted(m[v] for v in e)) in k43m for e in F5) for m in itertools.product(range(4), repeat=5))

    # Non-isomorphic 3-edge 3-graphs on 6 vertices.
    triples = list(itertools.combinations(range(6), 3))
    out["three_edge_classes_n6"] = len({canon(list(es), 6) for es in itertools.combinations(triples, 3)})

    families = {"F5": [F5], "K4_3": [K43], "F5,K43minus": [F5, K43_MINUS]}
    ex = {}
    for name, fam in families.items():
        for p in (1.0, 2.0):
            for n in (3, 4, 5):
                v, classes = exact(n, 3, fam, 2, p)
                ex[f"{name}|{n}|{p}"] = {"value": v, "classes": classes}
    v6, c6 = exact(6, 3, [F5], 2, 1.0)
    ex["F5|6|1.0"] = {"value": v6, "classes": c6}
    out["exact"] = ex
    out["density_f5_p1"] = {str(n): 2 * ex[f"F5|{n}|1.0"]["value"] / n ** 3 for n in (4, 5, 6)}

    # Best composition of 9 into three parts for the (2,6)-norm of the complete 3-partite graph.
    def partite_norm(sizes, p):
        a, b, c = sizes
        return a * b * c ** p + a * b ** p * c + a ** p * b * c
    comps = [(a, b, 9 - a - b) for a in range(1, 8) for b in range(1, 9 - a) if 9 - a - b >= 1]
    best = max(comps, key=lambda s: (partite_norm(s, 6), [-x for x in sorted(s, reverse=True)]))
    out["partite_n9_p6"] = {"sizes": sorted(best, reverse=True), "norm": partite_norm(best, 6)}

    out["g_star"] = {str(p): float(g_star(p)[1]) for p in (1.0, 2.0, 2.5, 3.0, 3.5, 4.0, 6.0, 10.0)}
    out["g_argmax_3_01"] = float(g_star(3.01)[0])
    out["h_star"] = {str(p): h_star(p) for p in (0.5, 1.0, 2.0, 3.7, 8.0)}
    out["f5_pi"] = {str(p): float(f5_pi(p)) for p in (0.1, 0.25, 1 / 6, 0.4, 0.5, 0.75, 1.0)}
    out["appendix_g"] = {str(p): appendix_g_grid(p) for p in (0.0, 0.05, 0.15, 0.3, 0.6, 0.9)}
    out["alpha_gap"] = {
        str(k): str(Fraction(k, k * k - 1) - (Fraction(1, k) + Fraction(1, k ** 3 - k))) for k in (6, 8, 12, 14)}
    out["alpha_vs_same_index_window"] = {
        str(k): str(Fraction(k - 1, k * (k - 2)) - (Fraction(1, k) + Fraction(1, k ** 3 - k))) for k in (6, 8, 12, 14)}
    out["main_ratio"] = {str(p): main_ratio(p) for p in (2.0, 3.0, 5.0, 10.0, 50.0)}
    out["case1_bound"] = {str(p): case1_bound(p) for p in (2.0, 5.0, 7.0, 7.5, 8.0)}
    lo, hi = 7.0, 8.0
    for _ in range(100):
        mid = (lo + hi) / 2
        if case1_bound(mid) < 6.2:
            lo = mid
        else:
            hi = mid
    out["case1_crossing"] = lo
    out["counterexample_min_degree"] = {
        str(n): min_degree_fast(counterexample(n, 0.1), n + 1, 0.5) for n in (30, 60)}
    out["counterexample_edges"] = {str(n): len(counterexample(n, 0.1)) for n in (30, 60)}
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
