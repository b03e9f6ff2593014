"""
Exact search
============

The branch-and-bound oracle gives the true minimum on small graphs.
It is the reference the constructions are checked against.
"""
import math

from pathdecomp import OracleBudget, complete_graph, gen_family, lower_bound, min_path_decomposition, subdivide

for n in range(2, 8):
    r = min_path_decomposition(complete_graph(n))
    print(f"K{n}: p={r.p} nodes={r.nodes_explored} {r.elapsed * 1000:.1f}ms")

###############################################################################
# Random connected graphs stay under ceil(n/2)

for seed in range(10):
    g = gen_family("random_connected", seed=seed, n=8)
    r = min_path_decomposition(g)
    print(seed, lower_bound(g), r.p, math.ceil(g.n / 2))

###############################################################################
# Subdividing an edge leaves the minimum alone

g = gen_family("random_connected", seed=3, n=6)
print([min_path_decomposition(subdivide(g, e)).p for e in g.edges], min_path_decomposition(g).p)

###############################################################################
# A tiny budget gives the incumbent, flagged as not proven optimal

r = min_path_decomposition(gen_family("grid", n=5, t=5), OracleBudget(max_nodes=50))
print(r.p, r.optimal)
