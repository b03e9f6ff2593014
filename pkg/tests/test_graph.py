import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathdecomp.errors import (
    EdgeNotPresent,
    EmptyFactor,
    EndpointOutOfRange,
    InvalidParams,
    ParseError,
    SelfLoop,
)
from pathdecomp.graph import (
    Graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    degree_profile,
    format_edge_list,
    gen_family,
    grid_graph,
    is_connected,
    make_graph,
    parse_edge_list,
    path_graph,
    relabel,
    star_graph,
    subdivide,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


def test_make_graph_examples():
    p2 = make_graph(2, [(0, 1)])
    assert (p2.n, p2.edges) == (2, ((0, 1),))
    c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.m == 4 and all(d == 2 for d in c4.degrees)
    dup = make_graph(4, [(0, 1), (0, 1)])
    assert dup.m == 1 and dup.degrees == (1, 1, 0, 0)


def test_make_graph_errors():
    with pytest.raises(EndpointOutOfRange):
        make_graph(2, [(0, 2)])
    with pytest.raises(SelfLoop):
        make_graph(3, [(1, 1)])


def test_product_examples():
    p2 = path_graph(2)
    c4 = cartesian_product(p2, p2)
    assert c4.n == 4 and c4.m == 4 and set(c4.degrees) == {2}
    g = cartesian_product(path_graph(3), path_graph(3))
    assert (g.n, g.m) == (9, 12)
    assert g.labels[5] == (1, 2)


def test_product_with_k1_is_relabeled_copy():
    k1 = Graph(1, ())
    c5 = cycle_graph(5)
    assert cartesian_product(k1, c5) == c5
    assert cartesian_product(c5, k1) == c5


def test_product_empty_factor():
    with pytest.raises(EmptyFactor):
        cartesian_product(Graph(0, ()), path_graph(2))


@settings(max_examples=60, deadline=None)
@given(graphs(5), graphs(5))
def test_product_degree_and_size_laws(g, h):
    gh = cartesian_product(g, h)
    assert gh.m == g.n * h.m + h.n * g.m
    for a in range(g.n):
        for b in range(h.n):
            assert gh.degree(a * h.n + b) == g.degree(a) + h.degree(b)


def test_product_of_connected_is_connected():
    rng = random.Random(3)
    for _ in range(20):
        g = gen_family("random_connected", seed=rng.randrange(10**6), n=rng.randint(1, 5))
        h = gen_family("random_tree", seed=rng.randrange(10**6), n=rng.randint(1, 5))
        assert is_connected(cartesian_product(g, h))


def test_subdivide_examples():
    p3 = subdivide(path_graph(2), (0, 1))
    assert p3.edges == ((0, 2), (1, 2)) and p3 == relabel(path_graph(3), [0, 2, 1])
    c4 = subdivide(complete_graph(3), (0, 2))
    assert c4.n == 4 and c4.m == 4 and set(c4.degrees) == {2} and is_connected(c4)
    with pytest.raises(EdgeNotPresent):
        subdivide(path_graph(3), (0, 2))


@settings(max_examples=60, deadline=None)
@given(graphs(6), st.data())
def test_subdivide_preserves_parities(g, data):
    if not g.m:
        return
    e = data.draw(st.sampled_from(g.edges))
    s = subdivide(g, e)
    assert s.m == g.m + 1
    assert degree_profile(s).n_o == degree_profile(g).n_o
    assert all(s.degree(v) % 2 == g.degree(v) % 2 for v in range(g.n))
    assert s.degree(g.n) == 2


def test_degree_profile_examples():
    prof = degree_profile(cycle_graph(4))
    assert (prof.n_o, prof.n_e, prof.max_degree) == (0, 4, 2)
    assert degree_profile(grid_graph(6, 4)).n_o == 2 * (6 + 4 - 4)
    k13 = star_graph(3)
    assert degree_profile(cartesian_product(path_graph(6), k13)).n_o == 2 * 4 + (6 - 4) * 4


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_handshake(g):
    prof = degree_profile(g)
    assert prof.n_o % 2 == 0
    assert prof.n_o + prof.n_e == g.n
    assert prof.max_degree == max(prof.degrees)


def test_is_connected_examples():
    assert is_connected(path_graph(5))
    assert not is_connected(make_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, ()))


def test_gen_family_examples():
    assert gen_family("path", n=4) == path_graph(4)
    ev = gen_family("random_even", seed=7, n=5)
    assert degree_profile(ev).n_o == 0 and is_connected(ev)
    od = gen_family("random_odd", seed=1, n=6)
    assert degree_profile(od).n_o == 6 and is_connected(od)


@pytest.mark.parametrize("kind,n", [("random_tree", 9), ("random_connected", 8),
                                    ("random_even", 7), ("random_odd", 8)])
def test_random_families_reproducible_and_valid(kind, n):
    for seed in range(25):
        g = gen_family(kind, seed=seed, n=n)
        assert g == gen_family(kind, seed=seed, n=n)
        assert is_connected(g) and g.n == n
        if kind == "random_tree":
            assert g.m == n - 1
        if kind == "random_even":
            assert all(d % 2 == 0 for d in g.degrees)
        if kind == "random_odd":
            assert all(d % 2 == 1 for d in g.degrees)


def test_gen_family_bad_params():
    with pytest.raises(InvalidParams):
        gen_family("random_odd", n=5)
    with pytest.raises(InvalidParams):
        gen_family("random_even", n=2)
    with pytest.raises(InvalidParams):
        gen_family("nonsense", n=3)
    with pytest.raises(InvalidParams):
        gen_family("path")


def test_edge_list_round_trip():
    g = grid_graph(3, 4)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("3\n0 1\n", 1),
    ("3 2\n0 1\n1 x\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 1\n2 2\n", 2),
    ("3 2\n0 1\n", 2),
])
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
