import pytest

from circiso.errors import InvalidModulus, ZeroJump
from circiso.zmod import (
    CirculantGraph,
    expand_full,
    gcd_profile,
    inverse_unit,
    is_symmetric,
    periodic_cycle_length,
    reflexive_reduce,
    render_full,
    same_spectrum,
    spectrum_invariant,
    units,
)


def test_reflexive_reduce_folds_and_sorts():
    assert reflexive_reduce([53, 37, 35, 19, 17, 3, 1, 51], 54) == (1, 3, 17, 19)
    assert reflexive_reduce([-1, 82], 81) == (1,)
    assert reflexive_reduce([5, 5], 10) == (5,)


def test_reflexive_reduce_zero():
    with pytest.raises(ZeroJump):
        reflexive_reduce([1, 54], 54)


@pytest.mark.parametrize("n", [0, 1, 2, -5, 3.0, True])
def test_bad_modulus(n):
    with pytest.raises(InvalidModulus):
        CirculantGraph(n, (1,))


def test_graph_rejects_noncanonical_jumps():
    with pytest.raises(ValueError):
        CirculantGraph(10, (7,))
    with pytest.raises(ValueError):
        CirculantGraph(10, (3, 1))


def test_expand_full_and_symmetry():
    full = expand_full((1, 3, 26, 28), 81)
    assert sorted(full) == [1, 3, 26, 28, 53, 55, 78, 80]
    assert is_symmetric(full, 81)
    assert not is_symmetric({1, 2, 80}, 81)
    # n/2 is its own negative
    assert expand_full((5,), 10) == frozenset({5})


def test_periodic_cycle_length():
    assert periodic_cycle_length(81, 3) == 27
    assert periodic_cycle_length(54, 18) == 3
    assert periodic_cycle_length(7, 1) == 7
    with pytest.raises(ValueError):
        periodic_cycle_length(10, 0)


def test_units():
    assert units(12) == [1, 5, 7, 11]
    assert len(units(81)) == 54
    assert len(units(54)) == 18
    assert inverse_unit(7, 54) * 7 % 54 == 1


def test_graph_basics():
    g = CirculantGraph.from_residues(54, [53, 37, 35, 19, 17, 3, 1, 51])
    assert str(g) == "C54(1,3,17,19)"
    assert g.degree == 8
    assert g.is_connected
    assert g.neighbors(0) == [1, 3, 17, 19, 35, 37, 51, 53]
    assert g.has_edge(2, 5) and not g.has_edge(2, 4)
    assert len(g.edges()) == 54 * 8 // 2
    assert render_full(g) == "C54(1,3,17,19,35,37,51,53)"
    assert CirculantGraph.from_json(g.to_json()) == g


def test_odd_degree_and_disconnected():
    g = CirculantGraph(10, (2, 5))
    assert g.degree == 3
    assert not CirculantGraph(12, (4, 6)).is_connected


def test_gcd_profile():
    assert gcd_profile(CirculantGraph(81, (1, 3, 26, 28))) == (1, 1, 1, 3)
    assert gcd_profile(CirculantGraph(54, (1, 17, 18, 19))) == (1, 1, 1, 18)


def test_spectrum_invariant():
    # C_n(1) is the cycle: eigenvalues 2 cos(2 pi k / n)
    spec = spectrum_invariant(CirculantGraph(6, (1,)))
    assert spec == (2.0, 1.0, 1.0, -1.0, -1.0, -2.0)
    a = CirculantGraph(54, (1, 3, 17, 19))
    b = CirculantGraph(54, (5, 13, 21, 23))
    assert same_spectrum(a, b)
    assert not same_spectrum(a, CirculantGraph(54, (1, 3, 17, 21)))
