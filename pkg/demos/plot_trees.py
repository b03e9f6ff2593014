"""
Trees
=====

A tree splits into exactly half as many paths as it has odd vertices.
This script decomposes a few random trees and checks the count against
the exact search.
"""
from pathdecomp import decompose_tree, degree_profile, gen_family, min_path_decomposition, verify

###############################################################################
# A single tree, path by path

t = gen_family("random_tree", seed=4, n=10)
d = decompose_tree(t)
print("edges:", t.edges)
for i, p in enumerate(d.paths):
    print(f"  path {i}: {p}")
print("odd vertices:", degree_profile(t).n_o, "paths:", d.path_count)

###############################################################################
# Every odd vertex ends exactly one path, every even vertex ends none

ends = d.end_counts()
print([ends[v] for v in range(t.n)])
print([t.degree(v) % 2 for v in range(t.n)])

###############################################################################
# Compare against exhaustive search on small trees

for seed in range(8):
    t = gen_family("random_tree", seed=seed, n=8)
    d = decompose_tree(t)
    assert verify(t, d).valid
    print(seed, d.path_count, min_path_decomposition(t).p)
