import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym import sym
from chromsym.graphs import (
    CapExceeded,
    csf_colorings,
    csf_powersum,
    csf_powersum_reference,
    from_edges,
    net,
    parse_graph_spec,
    path,
    path_csf,
    read_edge_list,
    spider,
    spider_ab1,
    spider_csf_reduction,
)
from chromsym.sym import SymElement


def test_constructors():
    assert path(2).edges == frozenset({(1, 2)})
    claw = spider((1, 1, 1))
    assert claw.vertex_count == 4 and sorted(claw.degrees()) == [1, 1, 1, 3]
    s = spider((4, 2, 1))
    assert s.vertex_count == 8 and len(s.edges) == 7
    assert sorted(s.degrees()) == sorted((3, 2, 2, 2, 1, 2, 1, 1))


@pytest.mark.parametrize("legs", [(0, 1), (1, 2), (2, 1.5)])
def test_spider_rejects_non_partitions(legs):
    with pytest.raises(ValueError):
        spider(legs)


def test_graph_validation():
    with pytest.raises(ValueError):
        from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        from_edges(3, [(1, 4)])
    assert from_edges(3, [(1, 2), (2, 1)]).edges == frozenset({(1, 2)})


def test_edge_list_and_specs(tmp_path):
    g = read_edge_list("# a path\n1 2\n\n2 3  # tail\n")
    assert g == path(3)
    f = tmp_path / "g.txt"
    f.write_text("1 2\n1 3\n1 4\n")
    assert parse_graph_spec(f"file:{f}") == spider((1, 1, 1))
    assert parse_graph_spec("claw") == spider((1, 1, 1))
    assert parse_graph_spec("spider:2,2,1") == spider((2, 2, 1))
    assert parse_graph_spec("net") == net()
    for bad in ["cycle:4", "claw:3"]:
        with pytest.raises(ValueError):
            parse_graph_spec(bad)
    with pytest.raises(ValueError):
        read_edge_list("1 2 3\n")


def test_small_power_sum_expansions():
    assert csf_powersum(path(2)) == SymElement(2, "p", {(1, 1): 1, (2,): -1})
    assert csf_powersum(path(3)) == SymElement(3, "p", {(1, 1, 1): 1, (2, 1): -2, (3,): 1})
    assert csf_colorings(path(2)) == SymElement(2, "m", {(1, 1): 2})


CORPUS = [path(n) for n in range(1, 8)] + [
    spider((1, 1, 1)),
    spider((2, 1, 1)),
    spider((2, 2, 1)),
    spider((3, 2, 1)),
    spider((1, 1, 1, 1)),
    net(),
    from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]),
]


@pytest.mark.parametrize("graph", CORPUS, ids=lambda g: f"n{g.vertex_count}e{len(g.edges)}")
def test_subset_and_colouring_routes_agree(graph):
    p = csf_powersum(graph)
    assert p == csf_powersum_reference(graph)
    assert sym.to_monomials(p) == csf_colorings(graph)


def test_parallel_split_matches_serial():
    g = spider((3, 2, 1))
    assert csf_powersum(g, workers=2) == csf_powersum(g)


def test_spider_reductions():
    claw = spider_csf_reduction(1, 1, 1)
    assert sym.to_schur_coeffs(claw) == SymElement(4, "s", {(3, 1): 1, (2, 2): -1, (2, 1, 1): 5, (1, 1, 1, 1): 8})
    assert spider_csf_reduction(2, 2, 1) == csf_powersum(spider((2, 2, 1)))
    for a in range(1, 7):
        for b in range(1, a + 1):
            assert spider_ab1(a, b) == spider_csf_reduction(a, b, 1)
    assert spider_csf_reduction(3, 2, 2) == csf_powersum(spider((3, 2, 2)))


def test_net_is_schur_positive_not_e_positive():
    r = sym.positivity_report(csf_powersum(net()))
    assert r.klass == "schur-positive"


def test_caps():
    with pytest.raises(CapExceeded) as info:
        csf_powersum(path(30))
    assert info.value.estimate == 2 ** 29
    with pytest.raises(CapExceeded):
        csf_colorings(path(9))


@pytest.mark.parametrize("n", range(1, 11))
def test_path_function_matches_subsets(n):
    assert path_csf(n) == csf_powersum(path(n))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 7).flatmap(
    lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]), max_size=9)
    .map(lambda es: (n, es))
))
def test_random_graphs_two_routes(data):
    n, edges = data
    g = from_edges(n, edges)
    p = csf_powersum(g)
    # component sizes always add up to n
    assert all(sum(lam) == n for lam in p.coeffs)
    assert sym.to_monomials(p) == csf_colorings(g)
