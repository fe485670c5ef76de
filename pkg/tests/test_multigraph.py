import pytest

from geoplan.errors import FormatError, UsageError
from geoplan.multigraph import (
    DegreeSequence,
    Multigraph,
    degree,
    degree_sequence,
    double_graph,
    is_connected,
    is_eulerian,
    local_graph,
)


def test_loop_counts_twice():
    g = Multigraph(2, ((0, 0), (0, 1)))
    assert degree(g, 0) == 3
    assert degree(g, 1) == 1
    assert g.incident_edges(0) == [0, 1]
    assert g.is_loop(0) and not g.is_loop(1)


def test_edges_are_normalized():
    g = Multigraph.from_edges(3, [(2, 0), (1, 1)])
    assert g.edges == ((0, 2), (1, 1))


def test_out_of_range_endpoint():
    with pytest.raises(UsageError):
        Multigraph(2, ((0, 2),))


def test_degree_sequence_sorted():
    g = Multigraph(3, ((0, 1), (1, 2), (1, 1)))
    assert degree_sequence(g) == (4, 1, 1)
    assert degree_sequence(g).total == 6


def test_two_pentagon_graph_degrees():
    # u carries a, b, c (loops) and one end of d; v carries the loop e and the other end of d
    g = Multigraph(2, ((0, 0), (0, 0), (0, 0), (0, 1), (1, 1)))
    assert degree_sequence(g) == (7, 3)


def test_connectivity():
    assert is_connected(Multigraph(1, ()))
    assert not is_connected(Multigraph(2, ((0, 0), (1, 1))))
    assert is_connected(Multigraph(3, ((0, 1), (2, 1))))


def test_eulerian():
    assert is_eulerian(Multigraph(1, ((0, 0),)))
    assert is_eulerian(Multigraph(2, ((0, 1), (0, 1))))
    assert not is_eulerian(Multigraph(2, ((0, 1),)))
    # even degrees but disconnected
    assert not is_eulerian(Multigraph(2, ((0, 0), (1, 1))))
    # isolated vertices do not matter
    assert is_eulerian(Multigraph(3, ((0, 1), (1, 0))))
    with pytest.raises(UsageError):
        is_eulerian(Multigraph(2, ()))


def test_double_graph():
    g = Multigraph(2, ((0, 1), (1, 1)))
    dg = double_graph(g)
    assert dg.half_edge_count == 4
    assert dg.copies(1) == (2, 3)
    assert dg.base_edge(3) == 1
    assert degree_sequence(dg.as_multigraph()) == (6, 2)


def test_local_graph_keeps_ids():
    lg = local_graph([5, 7], [(2, 5, 7), (4, 7, 7)])
    assert lg.vertex_ids == (5, 7)
    assert lg.edge_ids == (2, 4)
    assert lg.degree_of(7) == 3


def test_text_round_trip():
    g = Multigraph(3, ((0, 1), (1, 1), (1, 2)))
    assert Multigraph.parse(g.to_text()) == g


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FormatError) as err:
        Multigraph.parse("2 2\n0 1\n0 5\n")
    assert err.value.line == 3
    with pytest.raises(FormatError):
        Multigraph.parse("2 3\n0 1\n")


def test_degree_sequence_shorthand():
    assert DegreeSequence.parse("5,3,2^4") == (5, 3, 2, 2, 2, 2)
    assert DegreeSequence.parse("2^3,6") == (6, 2, 2, 2)
    for bad in ("", "0,2", "a", "2^0", "3,2"):
        with pytest.raises((FormatError, UsageError)):
            DegreeSequence.parse(bad)
