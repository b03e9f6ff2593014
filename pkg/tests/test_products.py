import pytest

from pathdecomp.decomposition import Decomposition, lower_bound, verify
from pathdecomp.errors import (
    BadOrder,
    CorrespondenceMismatch,
    NotATree,
    NotTightDecomposition,
)
from pathdecomp.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    gen_family,
    path_graph,
    star_graph,
)
from pathdecomp.layered import decompose_grid, decompose_path_product
from pathdecomp.oracle import decompose_odd_graph, min_path_decomposition
from pathdecomp.products import (
    SubdivisionMap,
    VirtualRealPath,
    assign_virtual_real,
    contract_decomposition,
    decompose_path_tree_product,
    decompose_product,
    expand_subdivision,
    identity_map,
    subdivision_map,
)
from pathdecomp.trees import decompose_tree

from conftest import seeded_connected, seeded_tree


def test_assign_path():
    p4 = path_graph(4)
    a = assign_virtual_real(p4, Decomposition(p4, ((0, 1, 2, 3),)))
    assert a.paths[0].real == (True,) * 4 and a.real_home == (0, 0, 0, 0)


def test_assign_star():
    k13 = star_graph(3)
    a = assign_virtual_real(k13, Decomposition(k13, ((1, 0, 2), (0, 3))))
    assert a.paths[0].real == (True, False, True)
    assert a.paths[1].real == (True, True)
    assert a.real_home == (1, 0, 0, 1)
    assert sum(q.order - q.virtual_count for q in a.paths) == 4


def test_assign_invariants_on_trees():
    for seed in range(40):
        t = seeded_tree(seed, 2, 10)
        a = assign_virtual_real(t, decompose_tree(t))
        assert sum(q.order - q.virtual_count for q in a.paths) == t.n
        for v in range(t.n):
            homes = [i for i, q in enumerate(a.paths) for x, r in zip(q.vertices, q.real) if x == v and r]
            assert homes == [a.real_home[v]]


def test_assign_seeded_random_mode():
    t = seeded_tree(17, 10, 10)
    d = decompose_tree(t)
    a = assign_virtual_real(t, d, seed=5)
    assert a == assign_virtual_real(t, d, seed=5)
    assert sum(q.order - q.virtual_count for q in a.paths) == t.n


def test_assign_rejects_loose_decomposition():
    c4 = cycle_graph(4)
    with pytest.raises(NotTightDecomposition):
        assign_virtual_real(c4, Decomposition(c4, ((0, 1, 2), (2, 3, 0))))
    p4 = path_graph(4)
    with pytest.raises(NotTightDecomposition):
        assign_virtual_real(p4, Decomposition(p4, ((0, 1), (1, 2, 3))))


def test_virtual_real_path_ends_real():
    with pytest.raises(ValueError):
        VirtualRealPath((0, 1, 2), (True, True, False))


def test_expand_triangle_to_square():
    c3 = complete_graph(3)
    d = min_path_decomposition(c3).witness
    corr = subdivision_map(c3, (0, 1))
    e = expand_subdivision(d, corr)
    assert e.path_count == d.path_count == 2
    assert verify(corr.host, e).valid


def test_expand_identity():
    g = seeded_connected(8, 5, 6)
    d = min_path_decomposition(g).witness
    assert expand_subdivision(d, identity_map(g)) == d


def test_expand_contract_round_trip():
    for seed in range(30):
        g = seeded_connected(seed, 3, 6)
        d = min_path_decomposition(g).witness
        for e in g.edges:
            corr = subdivision_map(g, e)
            big = expand_subdivision(d, corr)
            assert verify(corr.host, big).valid and big.path_count == d.path_count
            assert contract_decomposition(big, corr) == d


def test_expand_rejects_bad_map():
    c3 = complete_graph(3)
    d = min_path_decomposition(c3).witness
    corr = subdivision_map(c3, (0, 1))
    broken = SubdivisionMap(corr.contracted, corr.host, corr.vertex_map,
                            {**corr.edge_paths, (0, 1): (0, 1)})
    with pytest.raises(CorrespondenceMismatch):
        expand_subdivision(d, broken)
    with pytest.raises(CorrespondenceMismatch):
        expand_subdivision(Decomposition(path_graph(2), ((0, 1),)), corr)


def test_product_examples():
    k4 = complete_graph(4)
    d = decompose_product(k4, path_graph(2), decompose_odd_graph(k4))
    assert verify(d.host, d).valid and d.path_count <= 4
    k13 = star_graph(3)
    d = decompose_product(k13, cycle_graph(3), decompose_tree(k13))
    assert verify(d.host, d).valid and d.path_count <= 6
    h = seeded_connected(3, 4, 5)
    p2 = path_graph(2)
    d = decompose_product(p2, h, decompose_tree(p2))
    assert d.path_count == decompose_path_product(2, h).path_count


def test_product_with_trivial_second_factor():
    t = seeded_tree(2, 6, 6)
    d = decompose_product(t, Graph(1, ()), decompose_tree(t))
    assert verify(d.host, d).valid and d.path_count == decompose_tree(t).path_count


def test_product_rejects_loose_decomposition():
    c4 = cycle_graph(4)
    with pytest.raises(NotTightDecomposition):
        decompose_product(c4, path_graph(2), min_path_decomposition(c4).witness)


def test_product_fuzz_with_random_real_homes():
    for seed in range(40):
        g = seeded_tree(seed, 2, 7)
        h = seeded_connected(seed + 1000, 1, 5)
        d = decompose_product(g, h, decompose_tree(g), seed=seed)
        assert verify(d.host, d).valid and d.path_count <= -(-g.n * h.n // 2)
    for seed in range(15):
        g = gen_family("random_odd", seed=seed, n=2 * (1 + seed % 3))
        h = seeded_connected(seed + 2000, 1, 5)
        d = decompose_product(g, h, decompose_odd_graph(g), seed=seed)
        assert verify(d.host, d).valid and d.path_count <= -(-g.n * h.n // 2)


@pytest.mark.parametrize("n,tree,count", [
    (4, star_graph(3), 4),
    (5, path_graph(2), 3),
    (6, star_graph(3), 8),
])
def test_path_tree_examples(n, tree, count):
    d = decompose_path_tree_product(n, tree)
    assert verify(d.host, d).valid and d.path_count == count == lower_bound(d.host)


def test_path_tree_matches_grid():
    assert decompose_path_tree_product(5, path_graph(2)).path_count == decompose_grid(5, 2).path_count


def test_path_tree_errors():
    with pytest.raises(BadOrder):
        decompose_path_tree_product(3, star_graph(3))
    with pytest.raises(NotATree):
        decompose_path_tree_product(4, cycle_graph(4))
