import pytest

from circiso.errors import NotABijection, NotAWitnessVerdict, OrderMismatch
from circiso.oracle import EXCEEDED, NO, YES, brute_force_isomorphic, verify_certificate, witness_to_certificate
from circiso.textio import parse_graph
from circiso.verdicts import IsoVerdict, Step
from circiso.zmod import same_spectrum

G = parse_graph


@pytest.mark.parametrize(
    "a,b",
    [
        ("C27(1,3,8,10)", "C27(2,3,7,11)"),
        ("C54(1,3,17,19)", "C54(5,13,21,23)"),
        ("C16(1,2,7)", "C16(2,3,5)"),
        ("C125(1,5,24,26,49,51)", "C125(5,9,16,34,41,59)"),
        ("C12(1,5)", "C12(1,5)"),
    ],
)
def test_oracle_yes_with_valid_certificate(a, b):
    g1, g2 = G(a), G(b)
    res = brute_force_isomorphic(g1, g2)
    assert res.outcome == YES
    assert verify_certificate(g1, g2, res.certificate)
    assert res.certificate[0] == 0


def test_oracle_no_on_quick_rejects():
    assert brute_force_isomorphic(G("C6(1)"), G("C6(1,2)")).outcome == NO
    assert brute_force_isomorphic(G("C8(1,4)"), G("C8(2,4)")).outcome == NO


def test_oracle_no_by_local_signature():
    g1, g2 = G("C20(1,2,3,8)"), G("C20(1,2,7,8)")
    assert same_spectrum(g1, g2)
    res = brute_force_isomorphic(g1, g2)
    assert (res.outcome, res.nodes) == (NO, 0)


def test_oracle_no_by_refinement():
    # cospectral, same gcd profile, same local signature at 0
    g1, g2 = G("C24(1,2,3,11)"), G("C24(1,3,10,11)")
    assert same_spectrum(g1, g2)
    res = brute_force_isomorphic(g1, g2)
    assert (res.outcome, res.nodes) == (NO, 1)


def test_oracle_budget():
    g1, g2 = G("C27(1,3,8,10)"), G("C27(2,3,7,11)")
    assert brute_force_isomorphic(g1, g2).nodes == 4
    assert brute_force_isomorphic(g1, g2, node_budget=1).outcome == EXCEEDED
    assert brute_force_isomorphic(g1, g2, node_budget=4).outcome == YES


def test_oracle_order_mismatch():
    with pytest.raises(OrderMismatch):
        brute_force_isomorphic(G("C8(1)"), G("C9(1)"))


def test_verify_certificate_rejects():
    g = G("C8(1)")
    assert not verify_certificate(g, g, [0, 2, 4, 6, 1, 3, 5, 7])
    assert verify_certificate(g, G("C8(3)"), [(3 * v) % 8 for v in range(8)])
    assert verify_certificate(g, g, [(-v) % 8 for v in range(8)])
    with pytest.raises(NotABijection):
        verify_certificate(g, g, [0] * 8)
    with pytest.raises(NotABijection):
        verify_certificate(g, g, list(range(7)))


def test_witness_to_certificate_paths():
    g1, g2 = G("C54(1,3,17,19)"), G("C54(5,13,21,23)")
    v = IsoVerdict("Composite", {"depth": 2}, (Step.theta(3, 2), Step.adams(11)))
    assert verify_certificate(g1, g2, witness_to_certificate(v, 54))
    v = IsoVerdict("Type2", {"r": 3, "t": 2}, (Step.theta(3, 2),))
    assert verify_certificate(g1, G("C54(3,7,11,25)"), witness_to_certificate(v, 54))


def test_witness_to_certificate_rejects_non_witness():
    with pytest.raises(NotAWitnessVerdict):
        witness_to_certificate(IsoVerdict("NotIsomorphic"), 10)
    with pytest.raises(NotAWitnessVerdict):
        witness_to_certificate(IsoVerdict("Composite"), 10)


def test_oracle_result_json():
    res = brute_force_isomorphic(G("C5(1)"), G("C5(2)"))
    data = res.to_json()
    assert data["outcome"] == YES
    assert len(data["certificate"]) == 5
