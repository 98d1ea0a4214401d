import pytest

from circiso.errors import BadIndex, DegenerateSet, GcdNotOne, InvalidParams, TheoremViolation
from circiso.families import (
    ExtendedParams,
    FamilyParams,
    annexure_listing,
    annexure_params,
    block_header,
    complement_params,
    extended_family_set,
    family_all,
    family_base_jump,
    family_residues,
    family_set,
    is_prime,
    is_self_complementary,
    verify_family,
)
from circiso.textio import parse_graph


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize(
    "args",
    [(4, 1, 1, 0), (3, 0, 1, 0), (3, 1, 0, 0), (3, 1, 3, 0), (3, 1, 1, 3), (3, 1, 1, -1)],
)
def test_family_params_validation(args):
    with pytest.raises(InvalidParams):
        FamilyParams(*args)


def test_base_jumps():
    fp = FamilyParams(7, 5, 3, 2)
    assert fp.order == 1715
    assert fp.offset == 17
    assert family_base_jump(fp, 1) == 17
    assert family_base_jump(fp, 3) == 227
    with pytest.raises(BadIndex):
        family_base_jump(fp, 0)
    with pytest.raises(BadIndex):
        family_base_jump(fp, 8)


def test_family_set_large():
    fp = FamilyParams(7, 5, 3, 2)
    assert str(family_set(fp, 2)) == "C1715(7,122,123,367,368,612,613,857)"


def test_family_residues_are_symmetric():
    res = family_residues(FamilyParams(3, 1, 1, 0), 1)
    assert sorted(res) == [1, 3, 8, 10, 17, 19, 24, 26]
    assert len(res) == 8


def test_family_small_orders():
    assert [str(g) for g in family_all(FamilyParams(3, 1, 1, 0))] == [
        "C27(1,3,8,10)",
        "C27(3,4,5,13)",
        "C27(2,3,7,11)",
    ]
    assert [str(g) for g in family_all(FamilyParams(2, 2, 1, 0))] == ["C16(1,2,7)", "C16(2,3,5)"]


def test_extended_family():
    ep = ExtendedParams(FamilyParams(3, 2, 1, 0), (2,), coprime=False)
    members = [extended_family_set(ep, i) for i in (1, 2, 3)]
    assert [str(g) for g in members] == ["C54(1,6,17,19)", "C54(6,7,11,25)", "C54(5,6,13,23)"]
    assert verify_family(ep).ok


def test_extended_family_two_multiples():
    ep = ExtendedParams(FamilyParams(3, 2, 1, 0), (1, 2))
    g = family_set(ep, 1)
    assert str(g) == "C54(1,3,6,17,19)"
    assert verify_family(ep).ok


def test_extended_params_validation():
    base = FamilyParams(3, 2, 1, 0)
    with pytest.raises(GcdNotOne):
        ExtendedParams(base, (2, 4))
    with pytest.raises(InvalidParams):
        ExtendedParams(base, ())
    with pytest.raises(InvalidParams):
        ExtendedParams(base, (2, 1))


def test_degenerate_extended_set():
    # 9 = 3*3 collides with nothing but 27 = 3*9 is n/2 itself, still fine;
    # a multiple landing on 0 mod N is degenerate
    with pytest.raises(DegenerateSet):
        family_set(ExtendedParams(FamilyParams(3, 2, 1, 0), (18,), coprime=False), 1)


def test_complement_params():
    assert complement_params(FamilyParams(3, 1, 1, 0)) == FamilyParams(3, 1, 2, 2)
    assert complement_params(FamilyParams(3, 2, 1, 0)) == FamilyParams(3, 2, 2, 5)
    assert complement_params(FamilyParams(3, 2, 2, 1)) == FamilyParams(3, 2, 1, 4)
    fp = FamilyParams(3, 2, 1, 1)
    assert family_all(complement_params(fp)) == family_all(fp)


def test_no_parameter_set_is_its_own_complement():
    # n*p^2 / 2 is a multiple of p, while offsets never are
    for p in (2, 3, 5):
        for n in (1, 2, 4):
            for x in range(1, p):
                for y in range(n * p):
                    fp = FamilyParams(p, n, x, y)
                    assert not is_self_complementary(fp)
                    assert complement_params(fp) != fp


def test_verify_family_report():
    report = verify_family(FamilyParams(5, 1, 2, 1))
    assert report.ok
    data = report.to_json()
    assert data["order"] == 125
    assert len(data["members"]) == 5
    assert set(data["checks"]) == {"theta_cycling", "non_adams", "group_order", "group_members", "invariants"}


def test_theorem_violation_carries_check():
    err = TheoremViolation("closure", "boom")
    assert err.check == "closure"


def test_annexure_layout():
    params = annexure_params(3, 2)
    assert [(fp.x, fp.y) for fp in params] == [(1, 0), (2, 0), (1, 1), (2, 1)]
    assert block_header(params[0]) == (
        "T2_{54,3}(C_{54}(R^{54,1}_i)), p = 3, x = 1, y = 0 and n = 2."
    )
    text = annexure_listing(3, 1)
    assert text.splitlines()[1] == "C27(1,3,8,10,17,19,24,26)"
    blocks = annexure_listing(3, 1, fmt="json")
    assert blocks[0]["members"][0] == "C27(1,3,8,10)"
    with pytest.raises(InvalidParams):
        annexure_listing(4, 1)


def test_annexure_members_parse_back():
    for block in annexure_listing(5, 1, fmt="json"):
        for full, short in zip(block["full_sets"], block["members"]):
            assert str(parse_graph(full)) == short
