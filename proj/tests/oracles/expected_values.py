#!/usr/bin/env python3
"""Brute-force oracle for the frozen expected values used by the C++ tests.

Everything here is computed from first principles (set enumeration, union-find,
direct formula evaluation) and shares no code with the library.
"""
from fractions import Fraction
from itertools import combinations, product


def components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    blocks = {}
    for v in vertices:
        blocks.setdefault(find(v), set()).add(v)
    return frozenset(frozenset(b) for b in blocks.values())


def simple_graph_minors(vertices, edges):
    """All simple vertex-labeled minors, by 3^|E| contract/delete/keep choices."""
    seen = set()
    for choice in product(range(3), repeat=len(edges)):
        contract = [e for e, c in zip(edges, choice) if c == 0]
        keep = [e for e, c in zip(edges, choice) if c == 2]
        part = components(vertices, contract)
        block_of = {v: b for b in part for v in b}
        adj = frozenset(
            frozenset((block_of[u], block_of[v]))
            for u, v in keep if block_of[u] != block_of[v])
        seen.add((part, adj))
    return seen


def graph_flats(vertices, edges):
    """Flats of the cycle matroid as vertex partitions."""
    rank = lambda A: len(vertices) - len(components(vertices, A))
    flats = set()
    for k in range(len(edges) + 1):
        for A in combinations(edges, k):
            r = rank(A)
            cl = [e for e in edges if rank(list(A) + [e]) == r]
            flats.add(components(vertices, cl))
    return flats


def lattice_minor_count(elements, gens, join):
    total = 0
    for l in elements:
        h = {join(l, g) for g in gens} - {l}
        total += 2 ** len(h)
    return total


def partition_join(p, q):
    verts = set().union(*p)
    edges = []
    for b in list(p) + list(q):
        b = sorted(b)
        edges += [(b[0], x) for x in b[1:]]
    return components(verts, edges)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def fs_partition(p):
    return frozenset(frozenset(b) for b in p)


def polymatroid_closure(n, r, X):
    return frozenset(e for e in range(n) if r[X | (1 << e)] == r[X])


def parallel_closed_pairs(n, r):
    full = (1 << n) - 1
    flats = {sum(1 << e for e in polymatroid_closure(n, r, X)) for X in range(1 << n)}
    total = 0
    for F in flats:
        rest = [e for e in range(n) if not F >> e & 1]
        # parallel classes of r/F (no loops since F is a flat)
        classes = []
        for e in rest:
            for c in classes:
                f = c[0]
                a, b, ab = r[F | 1 << e], r[F | 1 << f], r[F | 1 << e | 1 << f]
                if a == b == ab:
                    c.append(e)
                    break
            else:
                classes.append([e])
        total += 2 ** len(classes)
    return total


def graphic_table(vertices, edges):
    n = len(edges)
    return [len(vertices) - len(components(vertices, [edges[i] for i in range(n) if X >> i & 1]))
            for X in range(1 << n)]


def main():
    k3 = (list("123"), [("1", "2"), ("1", "3"), ("2", "3")])
    tail = (list("1234"), [("1", "2"), ("1", "3"), ("2", "3"), ("3", "4")])
    single = (list("ab"), [("a", "b")])
    k4 = (list("1234"), [(a, b) for a, b in combinations("1234", 2)])
    for name, (v, e) in [("K3", k3), ("triangle-tail", tail), ("single edge", single), ("K4", k4)]:
        minors = simple_graph_minors(v, e)
        flats = graph_flats(v, e)
        lat = lattice_minor_count(flats, [f for f in flats if len(f) == len(v) - 1],
                                  partition_join)
        print(f"graph {name}: simple minors={len(minors)} flats={len(flats)} lattice-minors={lat}")

    for n in (3, 4):
        parts = [fs_partition(p) for p in set_partitions(list(range(1, n + 1)))]
        atoms = [p for p in parts if len(p) == n - 1]
        print(f"Pi_{n}: elements={len(parts)} minors={lattice_minor_count(parts, atoms, partition_join)}")
    for n in (2, 3, 4):
        elems = list(range(1 << n))
        print(f"B_{n}: minors={lattice_minor_count(elems, [1 << i for i in range(n)], lambda a, b: a | b)}")

    print("13/2/4 v 1/23/4 =", sorted(sorted(b) for b in partition_join(
        fs_partition([[1, 3], [2], [4]]), fs_partition([[1], [2, 3], [4]]))))

    rank_three = [0, 1, 2, 2, 2, 3, 3, 3]  # mask order: {},{1},{2},{1,2},{3},{1,3},{2,3},{1,2,3}
    # direct contraction by {1} (bit 0): ground {2,3}
    contr = [rank_three[(Y << 1) | 1] - rank_three[1] for Y in range(4)]
    print("rank_three / {1}:", contr)
    print("rank_three \\ {3}:", rank_three[:4])
    print("rank_three parallel closed pairs:", parallel_closed_pairs(3, rank_three))
    # flats of rank_three: elements {}, {1}, {3}, {1,2}, {1,2,3} with gens {1},{1,2},{3}
    rank_three_flats = [0b000, 0b001, 0b100, 0b011, 0b111]
    def flat_join(a, b):
        return min((f for f in rank_three_flats if f | (a | b) == f), key=lambda f: bin(f).count("1"))
    print("rank_three flats minors:", lattice_minor_count(rank_three_flats, [0b001, 0b011, 0b100], flat_join))
    print("K3 parallel closed pairs:", parallel_closed_pairs(3, graphic_table(*k3)))
    print("zero on 1 elt pairs:", parallel_closed_pairs(1, [0, 0]))

    # Height weighting r = 1 - 2^-k
    for name, heights in [("3-chain", [0, 1, 2]), ("B2", [0, 1, 1, 2])]:
        w = [1 - Fraction(1, 2 ** k) for k in heights]
        scale = 2 ** max(heights)
        print(name, [str(x) for x in w], [int(x * scale) for x in w])

    # poset order minors: sum over ideals J of 2^{|P|-|J|}
    print("2-antichain order minors:", 4 + 2 + 2 + 1, " 2-chain:", 4 + 2 + 1)


main()
