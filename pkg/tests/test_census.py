import json
from pathlib import Path

from gbdq.census import orbit_ids, verify_level
from gbdq.cli import corrupt_graph
from gbdq.census import global_graph

GOLDEN = Path(__file__).parent / "golden"


def rows(census):
    return {r.vertices: (r.graphs, r.iso_classes, r.omega_rho_classes) for r in census.rows}


def test_level_three(censuses):
    c = censuses(3)
    assert (c.chains, c.graphs, c.iso_classes, c.omega_rho_classes) == (70, 46, 3, 2)
    assert c.all_schur_positive


def test_level_four(censuses):
    c = censuses(4)
    assert (c.chains, c.graphs, c.iso_classes, c.omega_rho_classes) == (1236, 499, 7, 4)
    assert rows(c) == {1: (90, 2, 1), 2: (101, 1, 1), 3: (298, 2, 1), 5: (10, 2, 1)}
    assert json.loads(c.to_json()) == json.loads((GOLDEN / "census_n4.json").read_text())


def test_level_five(censuses):
    c = censuses(5)
    assert (c.chains, c.graphs, c.omega_rho_classes) == (29400, 5948, 12)
    assert c.iso_classes == 27
    assert rows(c) == {
        1: (394, 2, 1), 4: (1744, 2, 1), 5: (2250, 2, 1), 6: (1306, 1, 1),
        9: (98, 6, 2), 11: (90, 8, 3), 16: (62, 4, 2), 20: (4, 2, 1),
    }
    assert c.all_schur_positive


def test_rule_counts_add_up(censuses, graphs):
    for n in (3, 4, 5):
        c = censuses(n)
        assert sum(c.rule_counts.values()) == c.chains * (n - 2)
        g = graphs(n)
        moved = sum(1 for t in g.phi.values() for v, w in enumerate(t) if v != w)
        assert moved == c.chains * (n - 2) - c.rule_counts["Fixed"]


def test_orbits_are_closed():
    from gbdq.census import classify

    g = global_graph(4)
    _, classes = classify(g)
    ids = orbit_ids(classes)
    assert len(set(ids.values())) == 4
    assert all(ids[ids[k]] == ids[k] for k in ids)


def test_verify_levels(graphs):
    for n in (3, 4, 5):
        rep = verify_level(n, g=graphs(n))
        assert rep.passed, rep.failures
    assert verify_level(5, g=graphs(5), representatives_only=True).passed


def test_negative_control():
    g = global_graph(4)
    corrupt_graph(g)
    rep = verify_level(4, g=g)
    assert not rep.passed
    assert all(w is not None for w in rep.failures.values())
