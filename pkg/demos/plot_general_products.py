"""
General products
================

When g has a tight decomposition (n_o(g)/2 paths, e.g. g a tree or an
odd graph) the product g x h splits into at most ceil(n(g) n(h) / 2)
paths for any connected h.
"""
import math

from pathdecomp import (
    assign_virtual_real,
    decompose_odd_graph,
    decompose_path_tree_product,
    decompose_product,
    decompose_tree,
    gen_family,
    lower_bound,
    verify,
)

g = gen_family("random_tree", seed=2, n=6)
h = gen_family("random_connected", seed=5, n=4)
d_g = decompose_tree(g)

###############################################################################
# Which copies of h each path of g carries

a = assign_virtual_real(g, d_g)
for q in a.paths:
    print(q.vertices, ["R" if r else "v" for r in q.real])

d = decompose_product(g, h, d_g)
print("paths:", d.path_count, "bound:", math.ceil(g.n * h.n / 2), verify(d.host, d).valid)

###############################################################################
# Odd first factor

g = gen_family("random_odd", seed=1, n=6)
d = decompose_product(g, h, decompose_odd_graph(g))
print("paths:", d.path_count, "bound:", math.ceil(g.n * h.n / 2))

###############################################################################
# Paths times trees are exact

for n in (4, 5, 6):
    d = decompose_path_tree_product(n, gen_family("random_tree", seed=3, n=7))
    print(n, d.path_count, lower_bound(d.host))
