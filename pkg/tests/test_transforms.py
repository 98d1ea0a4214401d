import pytest

from circiso.errors import InvalidR, NotAUnit
from circiso.transforms import (
    ThetaParams,
    adams_image,
    adams_witness,
    format_theta_table,
    theta_graph,
    theta_map,
    theta_period,
    theta_residue,
    theta_table,
)
from circiso.zmod import CirculantGraph

C81 = CirculantGraph(81, (1, 3, 26, 28))
C54 = CirculantGraph(54, (1, 3, 17, 19))


def test_adams_image():
    assert adams_image(CirculantGraph(54, (1, 17, 18, 19)), 5) == CirculantGraph(54, (5, 13, 18, 23))
    assert adams_image(C81, 1) == C81
    with pytest.raises(NotAUnit):
        adams_image(C81, 3)


def test_theta_params():
    p = ThetaParams(81, 3, 29)
    assert (p.m, p.cycle, p.t) == (3, 27, 2)
    with pytest.raises(InvalidR):
        ThetaParams(81, 2, 1)


def test_theta_residue_values():
    p = ThetaParams(81, 3, 3)
    # x = 26 has x mod 3 = 2, so it moves by 2*3*3 = 18
    assert theta_residue(26, p) == 44
    # multiples of m are fixed
    assert all(theta_residue(x, p) == x for x in range(0, 81, 3))


def test_theta_map_is_a_permutation():
    for t in range(27):
        perm = theta_map(ThetaParams(81, 3, t))
        assert sorted(perm) == list(range(81))


def test_theta_graph_images():
    assert theta_graph(C81, 3, 3) == CirculantGraph(81, (3, 10, 17, 37))
    assert theta_graph(C81, 3, 6) == CirculantGraph(81, (3, 8, 19, 35))
    assert theta_graph(C81, 3, 1) is None
    assert theta_graph(C81, 3, 0) == C81


def test_theta_period():
    assert theta_period(C81, 3) == 9
    assert theta_period(C54, 3) == 6
    # period divides n/m
    assert 27 % theta_period(CirculantGraph(81, (3, 7, 20, 34)), 3) == 0


def test_adams_witness_smallest():
    g = CirculantGraph(54, (1, 17, 18, 19))
    assert adams_witness(g, CirculantGraph(54, (5, 13, 18, 23))) == 5
    assert adams_witness(g, g) == 1
    assert adams_witness(C54, CirculantGraph(54, (5, 13, 21, 23))) is None
    assert adams_witness(C54, C81) is None


def test_theta_table_flags_and_all_t():
    table = theta_table(CirculantGraph(81, (1, 26, 28)), 3)
    assert "r-not-in-R" in table["flags"]
    assert len(theta_table(C81, 3, all_t=True)["rows"]) == 27
    assert theta_table(CirculantGraph(27, (1, 3)), 3)["flags"] == ["fewer-than-3-jumps"]


def test_theta_table_type1_label():
    # C54(1,17,18,19) maps to Adam's images of itself
    table = theta_table(CirculantGraph(54, (1, 17, 18, 19)), 3)
    labels = {row["t"]: row["type"] for row in table["rows"]}
    assert "Type-2" not in labels.values()
    assert "Type-1" in labels.values()


def test_format_theta_table_header():
    text = format_theta_table(theta_table(C54, 3))
    assert text.splitlines()[0] == "t | 1 3 17 19 35 37 51 53 | type"
    assert text.splitlines()[3] == "2 | 7 3 29 25 47 43 51 11 | Type-2"
