import random

import pytest
from hypothesis import given, strategies as st

from gbdq.census import classify
from gbdq.chains import enumerate_interval_chains, validate_chain
from gbdq.graphs import (
    AxiomReport,
    ColoredGraph,
    GraphCertificate,
    InconsistentPropagation,
    build_graph,
    certificate,
    check_all,
    check_axioms_i_iii,
    check_iv_c,
    check_strong_iv,
    connected_components,
    enumerate_flat_chains,
    generating_function,
    omega_graph,
    reconstruct_descents,
    rho_graph,
    tableau_graph,
    to_dot,
)
from gbdq.perm import Permutation
from gbdq.qsym import expand_in_schur, schur_in_q
from gbdq.tableaux import Partition, partitions

ELEVEN = ["35634", "36354", "62354", "62534", "56234", "35654", "35464", "36534", "53464", "53634", "65234"]
NINE = [
    "(3,5)(5,6)(4,5)(2,4)(1,2)",
    "(4,5)(3,4)(4,6)(2,4)(1,2)",
    "(4,5)(3,6)(2,3)(3,4)(1,2)",
    "(3,6)(4,5)(2,3)(3,4)(1,2)",
    "(4,5)(3,6)(2,3)(1,2)(3,4)",
    "(3,6)(4,5)(2,3)(1,2)(3,4)",
    "(3,6)(2,3)(4,5)(3,4)(1,2)",
    "(3,6)(2,3)(4,5)(1,2)(3,4)",
    "(3,6)(2,3)(1,2)(4,5)(3,4)",
]


def interval_graph(text):
    return build_graph(enumerate_interval_chains(Permutation.parse(text)))


def tagged_edges(g, name):
    num = {v: name(g.vertex(v)) for v in range(len(g))}
    return {(tuple(sorted((num[v], num[w]))), i, str(g.tags[v, i])) for v, w, i in g.edges()}


def shuffled(g, seed):
    order = list(range(len(g)))
    random.Random(seed).shuffle(order)
    return g.subgraph(order)


def test_eleven_chain_graph():
    g = interval_graph("(1,4,5,3,2,6)")
    assert len(g) == 11 and len(connected_components(g)) == 1
    edges = tagged_edges(g, lambda c: ELEVEN.index("".join(map(str, c.labels))) + 1)
    assert edges == {
        ((6, 7), 3, "A"), ((1, 7), 4, "A"), ((7, 9), 2, "B"), ((1, 2), 3, "C"),
        ((9, 10), 4, "A"), ((2, 8), 4, "B"), ((8, 10), 2, "C"), ((2, 3), 2, "A"),
        ((5, 10), 3, "A"), ((3, 4), 4, "B"), ((4, 5), 2, "C"), ((4, 11), 3, "B"),
    }
    assert check_all(g).passed
    assert str(expand_in_schur(generating_function(g))) == "s[3,2] + s[3,1,1]"


def test_nine_chain_graph_is_connected():
    g = interval_graph("(1,2,4,5,3,6)")
    edges = tagged_edges(g, lambda c: NINE.index(str(c)) + 1)
    assert edges == {
        ((1, 2), 2, "A"), ((2, 3), 3, "A"), ((3, 7), 2, "C"), ((3, 5), 4, "B"), ((4, 7), 3, "B"),
        ((4, 6), 4, "B"), ((5, 8), 2, "C"), ((8, 9), 3, "B"), ((8, 9), 4, "B"),
    }
    assert len(connected_components(g)) == 1
    assert check_all(g).passed
    assert str(expand_in_schur(generating_function(g))) == "s[2,2,1] + s[2,1,1,1]"


def test_single_vertex():
    g = build_graph([validate_chain([(1, 2), (2, 3), (3, 4)])])
    assert len(g) == 1 and g.edges() == []
    assert check_all(g).passed


def test_certificate_is_invariant_under_vertex_order():
    g = interval_graph("(1,4,5,3,2,6)")
    c = certificate(g)
    for seed in range(5):
        assert certificate(shuffled(g, seed)) == c
    assert GraphCertificate.from_hex(c.hex()) == c


def test_certificate_separates_descents():
    g = interval_graph("(1,4,5,3,2,6)")
    assert certificate(omega_graph(g)) != certificate(g)
    assert certificate(omega_graph(omega_graph(g))) == certificate(g)
    assert certificate(rho_graph(rho_graph(g))) == certificate(g)


@given(st.sampled_from([3, 4, 5]), st.integers(0, 10**6))
def test_class_certificates_are_order_free(n, seed):
    from conftest import level_graph

    _, classes = classify(level_graph(n))
    k = classes[seed % len(classes)]
    assert certificate(shuffled(k.representative, seed)) == k.cert


def test_networkx_agrees_on_isomorphism_classes():
    nx = pytest.importorskip("networkx")
    from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match
    from conftest import level_graph

    comps, classes = classify(level_graph(5))

    def as_nx(h):
        x = nx.MultiGraph()
        for v in range(len(h)):
            fixed = tuple(i for i in h.colors if h.fixed(v, i))
            x.add_node(v, sig=(h.descents[v], fixed))
        for v, w, i in h.edges():
            x.add_edge(v, w, color=i)
        return x

    reps = [as_nx(k.representative) for k in classes]
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            assert not nx.is_isomorphic(reps[a], reps[b], node_match=categorical_node_match("sig", None),
                                        edge_match=categorical_edge_match("color", None))
    assert len(classes) == 27


def test_corrupted_involution_fails_ii_b():
    # two vertices with the same descent set joined by a 2-edge
    g = ColoredGraph(3, [0b01, 0b01], {2: [1, 0]}, ["x", "y"])
    rep = check_axioms_i_iii(g)
    assert rep.status("ii.b") is False
    assert rep.failures["ii.b"]["vertex"] in ("x", "y")
    assert not rep.passed


def test_corrupted_table_is_not_an_involution():
    g = interval_graph("(1,4,5,3,2,6)")
    table = g.phi[3]
    v = next(k for k in range(len(g)) if table[k] != k)
    table[v] = v
    rep = check_axioms_i_iii(g)
    assert not rep.passed and rep.failures


def test_report_bookkeeping():
    rep = AxiomReport()
    rep.touch("i")
    assert rep.status("i") is True and rep.status("iii") is None
    rep.record("i", False, {"vertex": 3})
    rep.record("i", False, {"vertex": 4})
    assert rep.failures["i"] == {"vertex": 3}
    assert rep.as_dict()["axioms"]["i"] is False
    assert rep.as_dict()["witnesses"]["i"] == {"vertex": 3}


def test_descent_reconstruction():
    g = tableau_graph(Partition.of(3, 2))
    masks, comp = reconstruct_descents(g)
    from gbdq.graphs import mask_positions

    got = {mask_positions(m) for m in masks}
    expected = [{2}, {1, 3}, {1, 4}, {2, 4}, {3}]
    assert got in ({frozenset(s) for s in expected}, {frozenset({1, 2, 3, 4} - s) for s in expected})
    assert sorted(masks + comp) == sorted(g.descents + [15 ^ m for m in g.descents])
    h = interval_graph("(1,4,5,3,2,6)")
    masks, comp = reconstruct_descents(h)
    assert h.descents in (masks, comp)
    # a lone vertex is fixed by phi_2, so (i) forces descents at both or neither of 1, 2
    single = ColoredGraph(3, [0b11], {2: [0]}, None)
    assert reconstruct_descents(single)[0] in ([0b11], [0b00])


def test_reconstruction_detects_inconsistency():
    g = ColoredGraph(5, [0] * 4, {2: [1, 0, 2, 3], 3: [0, 3, 2, 1], 4: [1, 0, 3, 2]})
    with pytest.raises(InconsistentPropagation):
        reconstruct_descents(g)
    with pytest.raises(ValueError):
        reconstruct_descents(ColoredGraph(3, [0, 0], {2: [0, 1]}))


def test_flat_four_chain_example():
    c = validate_chain([(2, 7), (4, 5), (1, 2), (3, 4), (5, 6), (4, 5)])
    assert c.endpoint == Permutation.parse("(1,2,7)(3,5)(4,6)")
    g = build_graph([c])
    assert len(g) == 21
    flats = enumerate_flat_chains(g, 4)
    long = [f for f in flats if f.r >= 3]
    assert len(long) == 1 and long[0].r == 3
    assert len({x.transpositions[5] for x in long[0].vertices}) == 1
    assert check_iv_c(g).passed and check_all(g).passed
    assert enumerate_flat_chains(interval_graph("(1,4,5,3,2,6)"), 4) != []
    assert enumerate_flat_chains(build_graph([validate_chain([(1, 2), (2, 3), (3, 4), (4, 5)])]), 4) == []


def test_dot_export():
    g = interval_graph("(1,4,5,3,2,6)")
    dot = to_dot(g)
    assert dot.count("[label=\"(") == 11
    assert 'label="3 (A)" color_i="3" rule="A"' in dot
    empty = ColoredGraph(3, [], {2: []})
    assert to_dot(empty) == "graph G {\n}\n"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_tableau_graphs_are_strong_dual_equivalences(n):
    for lam in partitions(n):
        g = tableau_graph(lam)
        rep = check_axioms_i_iii(g).merge(check_strong_iv(g))
        assert rep.passed, (lam, rep.failures)
        assert check_all(g).passed
        assert len(connected_components(g)) == 1
        assert generating_function(g) == schur_in_q(lam)


def test_tableau_graphs_match_chain_graphs():
    tab = {str(lam): certificate(tableau_graph(lam)) for lam in partitions(5)}
    eleven = interval_graph("(1,4,5,3,2,6)")
    assert certificate(eleven) not in tab.values()
    from conftest import level_graph

    _, classes = classify(level_graph(5))
    singles = {k.function: k.cert for k in classes if "+" not in k.function}
    for f, c in singles.items():
        assert tab[f[1:]] == c


def test_first_four_n5_graphs_are_strong():
    from conftest import level_graph

    _, classes = classify(level_graph(5))
    for k in classes:
        assert check_strong_iv(k.representative).passed == (k.size <= 6)
