"""Graph model, twins, caterpillar recognition, and sequence validation."""

import pytest

from tokenslide.graphs import (
    CaterpillarError,
    Graph,
    Move,
    ReconfigSequence,
    find_strong_twins,
    recognize_caterpillar,
    validate_sequence,
)
from tokenslide.intervals import parse_representation


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(1, i) for i in range(2, leaves + 2)])


def test_adjacency_sorted_and_symmetric():
    g = Graph(4, [(3, 1), (1, 2), (2, 3)])
    assert g.adj[1] == (2, 3)
    assert g.adj[3] == (1, 2)
    assert g.adj[4] == ()
    assert g.m == 3


def test_duplicate_edges_collapsed():
    g = Graph(2, [(1, 2), (2, 1), (1, 2)])
    assert g.m == 1


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])


def test_out_of_range_edge_rejected():
    with pytest.raises(ValueError):
        Graph(2, [(1, 3)])


def test_from_representation_k3():
    g = Graph.from_representation(parse_representation("L1 L2 L3 R1 R2 R3"))
    assert g.m == 3
    assert g.is_connected


def test_components_and_connectivity():
    g = Graph(5, [(1, 2), (4, 5)])
    assert g.components() == [[1, 2], [3], [4, 5]]
    assert not g.is_connected
    assert path_graph(4).is_connected


def test_is_independent():
    g = path_graph(4)
    assert g.is_independent({1, 3})
    assert g.is_independent({1, 4})
    assert not g.is_independent({2, 3})
    assert g.is_independent(set())


def test_bfs_distances():
    g = path_graph(8)
    assert g.distance(1, 8) == 7
    assert g.distance(3, 3) == 0
    disconnected = Graph(3, [(1, 2)])
    assert disconnected.bfs_distances(1)[3] == -1


def test_strong_twins_k3():
    g = Graph.from_representation(parse_representation("L1 L2 L3 R1 R2 R3"))
    assert find_strong_twins(g) == [(1, 2), (1, 3), (2, 3)]


def test_strong_twins_p3_empty():
    assert find_strong_twins(path_graph(3)) == []


def test_strong_twins_k2():
    g = Graph.from_representation(parse_representation("L1 L2 R1 R2"))
    assert find_strong_twins(g) == [(1, 2)]


def test_sibling_leaves_are_not_strong_twins():
    # two leaves under one star center share open but not closed neighborhoods
    assert find_strong_twins(star_graph(3)) == []


# -- sequence validation -----------------------------------------------------

def test_validate_single_token_walk():
    g = path_graph(3)
    seq = ReconfigSequence((1,), (Move(1, 2), Move(2, 3)))
    assert validate_sequence(g, [1], [3], seq).ok


def test_validate_rejects_non_edge():
    g = path_graph(3)
    seq = ReconfigSequence((1,), (Move(1, 3),))
    res = validate_sequence(g, [1], [3], seq)
    assert not res.ok
    assert res.step == 1
    assert res.reason == "NOT_AN_EDGE"


def test_validate_order_sensitivity_on_p4():
    g = path_graph(4)
    good = ReconfigSequence((1, 3), (Move(3, 4), Move(1, 2)))
    assert validate_sequence(g, [1, 3], [2, 4], good).ok
    bad = ReconfigSequence((1, 3), (Move(1, 2), Move(3, 4)))
    res = validate_sequence(g, [1, 3], [2, 4], bad)
    assert not res.ok
    assert res.step == 1
    assert res.reason == "NOT_INDEPENDENT"


def test_validate_wrong_initial_and_final():
    g = path_graph(3)
    res = validate_sequence(g, [1], [3], ReconfigSequence((2,), ()))
    assert res.reason == "WRONG_INITIAL_SET"
    res = validate_sequence(g, [1], [3], ReconfigSequence((1,), ()))
    assert res.reason == "WRONG_FINAL_SET"


def test_validate_source_and_target_occupancy():
    g = path_graph(4)
    res = validate_sequence(g, [1, 3], [1, 3], ReconfigSequence((1, 3), (Move(2, 3),)))
    assert res.reason == "SOURCE_NOT_OCCUPIED"
    res = validate_sequence(g, [1, 4], [1, 4], ReconfigSequence((1, 4), (Move(4, 4),)))
    assert res.reason in ("TARGET_OCCUPIED", "NOT_AN_EDGE")


# -- caterpillar recognition -------------------------------------------------

def test_recognize_star():
    cat = recognize_caterpillar(star_graph(3))
    assert cat.spine == (1,)
    assert cat.leaves == ((2, 3, 4),)


def test_recognize_bare_path_endpoints_become_leaves():
    cat = recognize_caterpillar(path_graph(5))
    assert cat.spine == (2, 3, 4)
    assert cat.leaves == ((1,), (), (5,))


def test_recognize_orients_from_lower_end():
    g = Graph(5, [(5, 4), (4, 3), (3, 2), (2, 1)])
    assert recognize_caterpillar(g).spine == (2, 3, 4)


def test_recognize_classic_caterpillar():
    g = Graph(6, [(1, 2), (2, 3), (1, 4), (2, 5), (3, 6)])
    cat = recognize_caterpillar(g)
    assert cat.spine == (1, 2, 3)
    assert cat.leaves == ((4,), (5,), (6,))
    where = cat.locate()
    assert where[2] == (1, "S")
    assert where[6] == (2, "L")


def test_recognize_rejects_spider():
    edges = [(1, 2), (2, 3), (1, 4), (4, 5), (1, 6), (6, 7)]
    with pytest.raises(CaterpillarError) as exc:
        recognize_caterpillar(Graph(7, edges))
    assert exc.value.kind == "NOT_CATERPILLAR"


def test_recognize_rejects_cycle_and_disconnection():
    with pytest.raises(CaterpillarError) as exc:
        recognize_caterpillar(Graph(3, [(1, 2), (2, 3), (3, 1)]))
    assert exc.value.kind == "CYCLIC"
    with pytest.raises(CaterpillarError) as exc:
        recognize_caterpillar(Graph(4, [(1, 2), (3, 4)]))
    assert exc.value.kind == "DISCONNECTED"


def test_recognize_degenerate_small():
    assert recognize_caterpillar(Graph(1, ())).spine == ()
    assert recognize_caterpillar(Graph(2, [(1, 2)])).spine == ()
