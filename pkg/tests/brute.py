"""Deliberately naive reference implementations used as test oracles."""

from itertools import combinations


def relation(e, f):
    (a, b), (c, d) = sorted(e), sorted(f)
    if len({a, b, c, d}) < 4:
        return "shared-endpoint"
    if a > c:
        (a, b), (c, d) = (c, d), (a, b)
    if b < c:
        return "disjoint-ordered"
    if d < b:
        return "nested"
    return "crossing"


def no_pair(edges, bad):
    return all(relation(e, f) != bad for e, f in combinations(edges, 2))


def components(edges):
    edges = [tuple(sorted(e)) for e in edges]
    comp = {}
    for e in edges:
        comp[e] = {e}
    merged = True
    groups = [{e} for e in edges]
    while merged:
        merged = False
        for i, j in combinations(range(len(groups)), 2):
            vi = {v for e in groups[i] for v in e}
            vj = {v for e in groups[j] for v in e}
            if vi & vj:
                groups[i] |= groups.pop(j)
                merged = True
                break
    return groups


def union_ok(edges, bad):
    return all(no_pair(g, bad) for g in components(edges))


def locality(n, parts):
    out = [0] * n
    for p in parts:
        for v in {x for e in p for x in e}:
            out[v - 1] += 1
    return out


def dominates(p, q):
    return (p[0] < q[0] and p[1] < q[1]) or (q[0] < p[0] and q[1] < p[1])
