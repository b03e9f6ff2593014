"""
Products with a path
====================

For the product of a path on m vertices with a connected graph h we get
m * n_o(h) / 2 + n_e(h) paths, and exactly n(h) when h is even.
"""
import math

from pathdecomp import (
    cycle_graph,
    decompose_path_even_product,
    decompose_path_product,
    degree_profile,
    gen_family,
    lower_bound,
)

h = gen_family("random_connected", seed=11, n=6)
prof = degree_profile(h)
print("h:", h.edges, "odd:", prof.n_o, "even:", prof.n_e)
for m in range(2, 7):
    d = decompose_path_product(m, h)
    print(m, d.path_count, m * prof.n_o // 2 + prof.n_e, math.ceil(m * h.n / 2))

###############################################################################
# Even second factor: the count drops to n(h) and meets the lower bound

for k in range(3, 7):
    d = decompose_path_even_product(3, cycle_graph(k))
    print(f"P3 x C{k}:", d.path_count, lower_bound(d.host))
