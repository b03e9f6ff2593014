"""
Grids
=====

The n x t grid with both sides at least 4 splits into n + t - 4 paths,
which matches the odd-vertex bound, so the construction is optimal.
"""
from pathdecomp import decompose_grid, lower_bound, to_dot

print(" n  t  paths  bound")
for n in range(4, 9):
    for t in range(4, 9):
        d = decompose_grid(n, t)
        print(f"{n:2d} {t:2d} {d.path_count:6d} {lower_bound(d.host):6d}")

###############################################################################
# Render the 6 x 4 grid; pipe into ``dot -Tpng`` to look at it

d = decompose_grid(6, 4)
for p in d.paths:
    print([d.host.labels[v] for v in p])
with open("grid_6x4.dot", "w") as fh:
    fh.write(to_dot(d))
