#!/usr/bin/env python3
"""Regenerate the checked-in edge lists for the Foster and Biggs-Smith graphs.

Foster graph: LCF notation [17, -9, 37, -37, 9, -17]^15 on 90 vertices.

Biggs-Smith graph: PSL(2,17) acting on the 102 right cosets of a subgroup
isomorphic to S4.  The unique self-paired suborbit of length 3 gives the
orbital graph.  The S4 is the first subgroup <x, y> found with o(x) = 4,
o(y) = 3, o(xy) = 2 when scanning normalized matrices in lexicographic order.

Usage: gen_sporadic.py OUTDIR
"""

import sys
from pathlib import Path


def lcf_edges(n, jumps, repeats):
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    k = 0
    for _ in range(repeats):
        for j in jumps:
            edges.add(tuple(sorted((k, (k + j) % n))))
            k += 1
    return n, sorted(edges)


def biggs_smith_edges():
    p = 17

    def norm(m):
        for x in m:
            if x % p:
                if 1 <= x % p <= (p - 1) // 2:
                    return tuple(v % p for v in m)
                return tuple((-v) % p for v in m)
        raise ValueError("zero matrix")

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return norm((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))

    def inv(x):
        a, b, c, d = x
        return norm((d, -b, -c, a))

    elements = sorted({norm((a, b, c, d))
                       for a in range(p) for b in range(p)
                       for c in range(p) for d in range(p)
                       if (a * d - b * c) % p == 1})
    ident = norm((1, 0, 0, 1))

    def order(x):
        k, y = 1, x
        while y != ident:
            y = mul(y, x)
            k += 1
        return k

    def closure(gens, limit):
        seen, frontier = {ident}, [ident]
        while frontier:
            nxt = []
            for s in frontier:
                for g in gens:
                    t = mul(s, g)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
            if len(seen) > limit:
                return None
        return seen

    order4 = [x for x in elements if order(x) == 4]
    order3 = [x for x in elements if order(x) == 3]
    sub = None
    for x in order4:
        for y in order3:
            if order(mul(x, y)) == 2:
                s = closure([x, y], 24)
                if s is not None and len(s) == 24:
                    sub = s
                    break
        if sub:
            break

    coset_of, reps = {}, []
    for x in elements:
        if x not in coset_of:
            for h in sub:
                coset_of[mul(h, x)] = len(reps)
            reps.append(x)

    seen = set()
    for g in elements:
        if g in seen:
            continue
        dc = {mul(mul(h1, g), h2) for h1 in sub for h2 in sub}
        seen |= dc
        if len(dc) == 3 * len(sub) and inv(g) in dc:
            edges = set()
            for i, x in enumerate(reps):
                for d in dc:
                    j = coset_of[mul(d, x)]
                    edges.add((min(i, j), max(i, j)))
            return len(reps), sorted(edges)
    raise RuntimeError("no self-paired suborbit of length 3")


def write(path, header, n, edges):
    with open(path, "w") as out:
        for line in header:
            out.write(f"# {line}\n")
        out.write(f"{n}\n")
        for u, v in edges:
            out.write(f"{u} {v}\n")


def main():
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    n, edges = lcf_edges(90, [17, -9, 37, -37, 9, -17], 15)
    write(outdir / "foster.edges",
          ["Foster graph: cubic, 90 vertices, diameter 8, 5-arc transitive.",
           "Generated by tools/gen_sporadic.py from LCF [17,-9,37,-37,9,-17]^15."],
          n, edges)
    n, edges = biggs_smith_edges()
    write(outdir / "biggs-smith.edges",
          ["Biggs-Smith graph: cubic, 102 vertices, diameter 7, 4-arc transitive.",
           "Generated by tools/gen_sporadic.py as the orbital graph of PSL(2,17)",
           "on the cosets of S4 (self-paired suborbit of length 3)."],
          n, edges)


if __name__ == "__main__":
    main()
