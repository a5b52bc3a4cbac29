"""Block Levis: dominance orders, the squeeze set, and the pairing-gap bound."""

from itertools import permutations, product

import pytest

from flagstrata import levi as lv


INTER4 = lv.BlockLevi(4, [(1, 3), (2, 4)])
STD4 = lv.BlockLevi(4, [(1, 2), (3, 4)])
TORUS2 = lv.torus_levi(2)


def test_block_levi_validation():
    with pytest.raises(ValueError):
        lv.BlockLevi(3, [(1, 2)])
    with pytest.raises(ValueError):
        lv.BlockLevi(3, [(1, 2), (2, 3)])
    assert lv.parse_blocks(4, "[[1,3],[2,4]]") == INTER4
    assert str(INTER4) == "[[1,3],[2,4]]"


def test_two_rho():
    assert lv.two_rho(4) == (3, 1, -1, -3)
    assert sum(lv.two_rho(7)) == 0
    assert lv.two_rho_levi(INTER4) == (1, 1, -1, -1)
    assert lv.two_rho_levi(lv.full_levi(3)) == lv.two_rho(3)
    assert lv.two_rho_levi(lv.torus_levi(5)) == (0, 0, 0, 0, 0)


def test_antistandard_examples():
    assert lv.is_antistandard(INTER4)
    assert not lv.is_antistandard(STD4)
    assert lv.is_antistandard(TORUS2)
    assert not lv.is_antistandard(lv.full_levi(3))


def test_interleaved_levi_antistandard_up_to_rank_eight():
    # the odd/even Levi of GL_{2n}; every simple block coroot pairs to exactly 2
    for n in range(1, 5):
        blocks = [tuple(range(1, 2 * n, 2)), tuple(range(2, 2 * n + 1, 2))]
        levi = lv.BlockLevi(2 * n, blocks)
        assert lv.is_antistandard(levi)
        gap = [a - b for a, b in zip(lv.two_rho(2 * n), lv.two_rho_levi(levi))]
        for block in levi.blocks:
            for a, b in zip(block, block[1:]):
                assert gap[a - 1] - gap[b - 1] == 2


def test_dominant_representatives():
    assert lv.dom_g((0, 1, -2)) == (1, 0, -2)
    assert lv.dom_m((3, 0, 1, 2), INTER4) == (3, 2, 1, 0)
    assert lv.dom_m((1, 2), TORUS2) == (1, 2)


def test_dom_m_is_orbit_maximum():
    for levi in (INTER4, STD4, lv.BlockLevi(4, [(1, 2, 4), (3,)])):
        for lam in product(range(-1, 2), repeat=4):
            top = lv.dom_m(lam, levi)
            assert lv.is_dominant_m(top, levi)
            for w_lam in lv.weyl_orbit_m(lam, levi):
                assert lv.leq_m(w_lam, top, levi)


def test_leq_orders():
    assert lv.leq_g((0, 0), (1, -1))
    assert not lv.leq_g((1, -1), (0, 0)) or lv.leq_g((0, 0), (1, -1))
    assert lv.leq_m((1, 0, -1, 0), (1, 0, -1, 0), INTER4)
    assert lv.leq_g((1, 1), (1, 1))
    assert not lv.leq_g((1, 0), (2, 0))
    # inside a block of the interleaved Levi: e_1 - e_3 is a positive coroot
    assert lv.leq_m((0, 0, 0, 0), (1, 0, -1, 0), INTER4)
    assert not lv.leq_m((0, 0, 0, 0), (1, -1, 0, 0), INTER4)


def test_j_set_examples():
    assert lv.j_set((0, 0), (0, 0), TORUS2) == [(0, 0)]
    assert lv.j_set((-1, 0), (0, -1), TORUS2) == [(-1, 0)]
    assert lv.j_set((-1, 0), (1, 0), TORUS2) == []
    with pytest.raises(ValueError):
        lv.j_set((0, 0), (0, 1), TORUS2)


def test_j_set_matches_literal_definition():
    # oracle: scan the whole box and apply the quantifier-free order tests
    levi = INTER4
    for lam in [(0, 0, 0, 0), (1, -1, 0, 0), (-1, 1, 1, -1), (2, 0, -1, -1)]:
        for nu in [(0, 0, 0, 0), (1, 0, 0, -1), (2, 1, -1, -2), (1, 1, -1, -1)]:
            expected = []
            lo, hi = min(nu), max(nu)
            for mu in product(range(lo, hi + 1), repeat=4):
                if sum(mu) != sum(nu):
                    continue
                if not lv.is_dominant_m(mu, levi):
                    continue
                if not all(
                    lv.leq_m(w_lam, mu, levi) for w_lam in lv.weyl_orbit_m(lam, levi)
                ):
                    continue
                if not all(
                    lv.leq_g(tuple(perm), nu) for perm in set(permutations(mu))
                ):
                    continue
                expected.append(mu)
            assert lv.j_set(lam, nu, levi) == sorted(expected)


def test_j_set_monotone_in_nu():
    levi = INTER4
    for lam in [(0, 0, 0, 0), (1, 0, 0, -1), (1, 1, -1, -1)]:
        for nu in [(1, 0, 0, -1), (1, 1, -1, -1)]:
            for nu2 in [(2, 0, 0, -2), (2, 1, -1, -2)]:
                if lv.leq_g(nu, nu2):
                    smaller = set(lv.j_set(lam, nu, levi))
                    bigger = set(lv.j_set(lam, nu2, levi))
                    assert smaller <= bigger


def test_f_val_examples():
    assert lv.f_val((0, 0), TORUS2) == 0
    assert lv.f_val((-1, 0), TORUS2) == -1
    assert lv.f_val((1, 0), lv.full_levi(2)) == 0
    with pytest.raises(ValueError):
        lv.f_val((0, 0, 1, 0), INTER4)


def test_f_val_nonpositive_at_desk_scale():
    for levi in (INTER4, STD4, lv.torus_levi(4), lv.full_levi(4)):
        for mu in product(range(-2, 3), repeat=4):
            if lv.is_dominant_m(mu, levi):
                assert lv.f_val(mu, levi) <= 0, (mu, str(levi))


def test_verify_inequality_examples():
    report = lv.verify_inequality((0, 0), (0, 0), TORUS2)
    assert report["holds"]
    eqs = [w for w in report["witnesses"] if w["kind"] == "equality"]
    assert len(eqs) == 1 and eqs[0]["mu"] == (0, 0)

    report = lv.verify_inequality((-1, 0), (0, -1), TORUS2)
    assert report["holds"]
    eqs = [w for w in report["witnesses"] if w["kind"] == "equality"]
    assert len(eqs) == 1
    assert eqs[0]["mu"] == (-1, 0) and eqs[0]["mu_dom"] == (0, -1)
    assert eqs[0]["expected_configuration"]


def test_equality_configuration_fields():
    report = lv.verify_inequality((-1, -1, 0, 0), (0, 0, -1, -1), INTER4)
    for w in report["witnesses"]:
        assert {"mu", "mu_dom", "f", "rhs", "kind"} <= set(w)


def test_antistandard_enumeration_gl4():
    levis = lv.antistandard_levis(4)
    assert INTER4 in levis
    assert STD4 not in levis
    assert lv.torus_levi(4) in levis
    assert len(levis) == 5


def test_sweep_holds_small():
    res = lv.sweep_inequality(INTER4, 1, 1)
    assert res["holds"] and res["pairs_checked"] > 0 and not res["failures"]


def test_sweep_parallel_matches_serial():
    serial = lv.sweep_inequality(INTER4, 1, 1, jobs=1)
    parallel = lv.sweep_inequality(INTER4, 1, 1, jobs=3)
    assert serial["pairs_checked"] == parallel["pairs_checked"]
    assert serial["equalities"] == parallel["equalities"]
    assert serial["failures"] == parallel["failures"]
