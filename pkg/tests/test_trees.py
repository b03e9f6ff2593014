import pytest

from pathdecomp.decomposition import verify
from pathdecomp.errors import NotATree
from pathdecomp.graph import Graph, cycle_graph, degree_profile, path_graph, relabel, star_graph
from pathdecomp.oracle import min_path_decomposition
from pathdecomp.trees import decompose_tree, leaf_pruning_order

from conftest import seeded_tree


@pytest.mark.parametrize("n", [2, 3, 6, 10])
def test_path_is_one_path(n):
    d = decompose_tree(path_graph(n))
    assert d.path_count == 1 and sorted(d.paths[0]) == list(range(n))


def test_star_and_spider():
    assert decompose_tree(star_graph(3)).path_count == 2
    spider = star_graph(5)
    assert degree_profile(spider).n_o == 6
    d = decompose_tree(spider)
    assert d.path_count == 3 and verify(spider, d).valid


def test_single_vertex():
    d = decompose_tree(Graph(1, ()))
    assert d.paths == ()


def test_not_a_tree():
    with pytest.raises(NotATree):
        decompose_tree(cycle_graph(4))
    with pytest.raises(NotATree):
        decompose_tree(Graph(3, ((0, 1),)))


def test_count_changes_with_leaf_parity():
    t = seeded_tree(5, 12, 12)
    steps = list(reversed(leaf_pruning_order(t)))
    present = [steps[0][1]]
    deg = [0] * t.n
    prev = 0
    for u, v in steps:
        present.append(u)
        sub = relabel(Graph(t.n, tuple(e for e in t.edges if e[0] in present and e[1] in present)),
                      present + [x for x in range(t.n) if x not in present])
        sub = Graph(len(present), sub.edges)
        count = decompose_tree(sub).path_count
        assert count - prev == (0 if deg[v] % 2 else 1)
        deg[u] += 1
        deg[v] += 1
        prev = count


def test_odd_vertices_end_exactly_one_path():
    for seed in range(100):
        t = seeded_tree(seed)
        d = decompose_tree(t)
        assert verify(t, d).valid
        assert d.path_count == degree_profile(t).n_o // 2
        ends = d.end_counts()
        assert all(ends[v] == (1 if t.is_odd(v) else 0) for v in range(t.n))


def test_oracle_agreement_small_trees():
    for seed in range(60):
        t = seeded_tree(seed, 2, 9)
        assert decompose_tree(t).path_count == min_path_decomposition(t).p
