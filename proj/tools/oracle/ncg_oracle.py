#!/usr/bin/env python3
"""Brute-force reference values for the C++ tests.

Groups are built from representations unrelated to the library's tables
(sympy permutation groups, complex 2x2 matrices, unitriangular matrices
mod p) and every quantity is computed by exhaustive search. Clique and
independence numbers come from networkx.

    python3 tools/oracle/ncg_oracle.py > tests/fixtures/oracle_values.json
"""

import cmath
import itertools
import json
import sys

import networkx as nx
from sympy.combinatorics.named_groups import (AlternatingGroup, CyclicGroup,
                                              DihedralGroup, SymmetricGroup)


CLIQUE_MAX_VERTICES = 40


class Group:
    def __init__(self, elements, mul, identity):
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.table = [[self.index[mul(a, b)] for b in self.elements] for a in self.elements]
        self.e = self.index[identity]
        self.n = n


def perm_group(g):
    elems = list(g.generate())
    ident = elems[0] * elems[0] ** -1
    return Group([tuple(p.array_form) for p in elems],
                 lambda a, b: tuple(b[a[i]] for i in range(len(a))),
                 tuple(ident.array_form))


def cyclic_group(m):
    if m == 1:
        return Group([0], lambda a, b: 0, 0)
    return perm_group(CyclicGroup(m))


def dihedral_group(n):
    # sympy's DihedralGroup(1), (2) are C2 and C2xC2 as permutation groups.
    return perm_group(DihedralGroup(n))


def quaternion_group(order):
    n = order // 4
    z = cmath.exp(1j * cmath.pi / n)

    def key(m):
        return tuple(round(v.real, 9) + 0.0 for row in m for v in row) + \
            tuple(round(v.imag, 9) + 0.0 for row in m for v in row)

    def mm(a, b):
        return ((a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
                (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]))

    x = ((z, 0j), (0j, 1 / z))
    y = ((0j, -1 + 0j), (1 + 0j, 0j))
    ident = ((1 + 0j, 0j), (0j, 1 + 0j))
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in (x, y):
                p = mm(m, g)
                if key(p) not in seen:
                    seen[key(p)] = p
                    nxt.append(p)
        frontier = nxt
    keys = sorted(seen)
    return Group(keys, lambda a, b: key(mm(seen[a], seen[b])), key(ident))


def heisenberg_group(p):
    def mul(a, b):
        # [[1,a1,a3],[0,1,a2],[0,0,1]] as (a1, a2, a3)
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)
    return Group(list(itertools.product(range(p), repeat=3)), mul, (0, 0, 0))


def product(g, h):
    elems = [(a, b) for a in range(g.n) for b in range(h.n)]
    return Group(elems, lambda u, v: (g.table[u[0]][v[0]], h.table[u[1]][v[1]]), (g.e, h.e))


def build(spec):
    groups = []
    for term in spec.split("x"):
        fam, param = term.split(":")
        param = int(param)
        groups.append({
            "C": cyclic_group,
            "D": dihedral_group,
            "Q": quaternion_group,
            "H": heisenberg_group,
            "S": lambda d: perm_group(SymmetricGroup(d)),
            "A": lambda d: perm_group(AlternatingGroup(d)),
        }[fam](param))
    g = groups[0]
    for h in groups[1:]:
        g = product(g, h)
    return g


def analyze(spec):
    g = build(spec)
    n, t = g.n, g.table
    commute = [[t[a][b] == t[b][a] for b in range(n)] for a in range(n)]
    center = [a for a in range(n) if all(commute[a])]
    nc = [a for a in range(n) if a not in center]
    graph = nx.Graph()
    graph.add_nodes_from(nc)
    graph.add_edges_from((a, b) for a, b in itertools.combinations(nc, 2) if not commute[a][b])
    cent = {a: frozenset(b for b in range(n) if commute[a][b]) for a in nc}

    def abelian(s):
        return all(commute[x][y] for x in s for y in s)

    def order_of(a):
        k, x = 1, a
        while x != g.e:
            x, k = t[x][a], k + 1
        return k

    def cyclic(s):
        return any(order_of(x) == len(s) for x in s)

    is_ac = all(abelian(c) for c in cent.values())
    comp = nx.complement(graph)
    comps = list(nx.connected_components(comp))
    is_matroid = all(comp.subgraph(c).number_of_edges() == len(c) * (len(c) - 1) // 2 for c in comps)
    # Maximal-clique enumeration blows up on large graphs (H:5 has 20^6).
    small = len(nc) <= CLIQUE_MAX_VERTICES
    omega = max((len(c) for c in nx.find_cliques(graph)), default=0) if small else None
    alpha = max((len(c) for c in nx.find_cliques(comp)), default=0) if small else None
    sizes = sorted({len(c) for c in cent.values()})
    out = {
        "order": n,
        "center_order": len(center),
        "vertices": len(nc),
        "edges": graph.number_of_edges(),
        "is_abelian": not nc,
        "is_ac": is_ac,
        "is_cc": all(cyclic(c) for c in cent.values()),
        "is_matroid": is_matroid,
        "omega": omega,
        "alpha": alpha,
        "degrees": sorted({d for _, d in graph.degree()}),
        "centralizer_orders": sizes,
        "complement_component_sizes": sorted(len(c) for c in comps),
        "distinct_centralizers": len(set(cent.values())),
    }
    if is_ac and nc:
        distinct = set(cent.values())
        out["eq1_rhs"] = (1 - len(distinct)) * len(center) + sum(len(c) for c in distinct)
        out["kregular"] = (n - len(center)) // (sizes[0] - len(center)) if len(sizes) == 1 else None
    return out


SPECS = [
    "C:1", "C:6", "C:9", "D:1", "D:2", "D:3", "D:4", "D:5", "D:6", "D:8",
    "Q:8", "Q:12", "Q:16", "Q:20", "Q:32", "H:2", "H:3", "H:5",
    "S:3", "S:4", "A:4", "A:5",
    "Q:8xC:5", "Q:16xC:3", "D:3xC:2", "D:4xC:2", "Q:8xD:3", "S:3xS:3",
]


def main():
    json.dump({spec: analyze(spec) for spec in SPECS}, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
