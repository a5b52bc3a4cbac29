"""Schur calculus: tableau characters, Pieri strips, the multiplicity-free index.

The tableau enumeration inside schur_poly is itself the oracle for every
decomposition test; dimensions are double-checked against the Weyl product
formula, which shares no code with the tableau path.
"""

import pytest

from flagstrata import schur as sc
from flagstrata.coweights import partitions


def test_schur_poly_small():
    assert sc.schur_poly((1,), 2).terms == {(1, 0): 1}
    assert sc.schur_poly((1, 1), 2).terms == {(1, 1): 1}
    assert sc.schur_poly((2, 1), 2).terms == {(2, 1): 1}
    assert sc.schur_poly((), 3).terms == {(0, 0, 0): 1}


def test_schur_poly_too_many_parts():
    with pytest.raises(ValueError):
        sc.schur_poly((1, 1, 1), 2)


def test_schur_dimensions_match_weyl():
    for nvars in (2, 3, 4, 5):
        for size in range(6):
            for lam in partitions(size, max_parts=nvars):
                assert sc.schur_poly(lam, nvars).eval_ones() == sc.schur_dim(lam, nvars)


def test_sympoly_mul_matches_dimension():
    a = sc.schur_poly((2, 1), 3)
    b = sc.schur_poly((1, 1), 3)
    prod = a * b
    assert prod.eval_ones() == a.eval_ones() * b.eval_ones()


def test_wedge2_char_examples():
    assert sc.decompose_schur(sc.wedge2_power_char(1, 4)) == {(1, 1): 1}
    for d in range(4):
        expected = {(d, d): 1} if d else {(): 1}
        assert sc.decompose_schur(sc.wedge2_power_char(d, 2)) == expected
    assert sc.decompose_schur(sc.wedge2_power_char(2, 4)) == {(2, 2): 1, (1, 1, 1, 1): 1}


def test_decompose_identity_and_classics():
    s = sc.schur_poly((3, 1), 4)
    assert sc.decompose_schur(s) == {(3, 1): 1}
    v = sc.schur_poly((1,), 2)
    assert sc.decompose_schur(v * v) == {(2,): 1, (1, 1): 1}


def test_decompose_rejects_non_characters():
    p = sc.schur_poly((2,), 2) - sc.schur_poly((1, 1), 2).scale(2)
    with pytest.raises(ValueError):
        sc.decompose_schur(p)


def test_decompose_round_trip():
    for nvars, shapes in ((2, [(2,), (1, 1)]), (3, [(2, 1), (1, 1, 1), (3,)])):
        total = sc.SymPoly.zero(nvars)
        decomposition = {}
        for mult, lam in enumerate(shapes, start=1):
            total = total + sc.schur_poly(lam, nvars).scale(mult)
            decomposition[lam] = mult
        assert sc.decompose_schur(total) == decomposition


def test_pieri_examples():
    assert sc.pieri((1,), 1, 2) == {(2,), (1, 1)}
    assert sc.pieri((1, 1), 2, 4) == {(3, 1), (2, 1, 1)}
    assert sc.pieri((1, 1), 1, 2) == {(2, 1)}
    assert sc.pieri((2, 1), 0, 3) == {(2, 1)}


def test_pieri_matches_character_product():
    for nvars in range(1, 6):
        for size in range(6):
            for lam in partitions(size, max_parts=nvars):
                for k in range(4):
                    product = sc.schur_poly(lam, nvars) * sc.complete_homogeneous(k, nvars)
                    dec = sc.decompose_schur(product)
                    assert set(dec) == sc.pieri(lam, k, nvars)
                    assert all(mult == 1 for mult in dec.values())


def test_dominant_index_examples():
    assert sc.dominant_index(1, 1, 2) == {(2, 1)}
    assert sc.dominant_index(2, 2, 2) == {(2, 2), (1, 1, 1, 1)}
    assert sc.dominant_index(2, 1, 3) == {(3, 1), (2, 1, 1)}
    assert sc.dominant_index(2, 1, 3) == sc.pieri((1, 1), 2, 4)
    with pytest.raises(ValueError):
        sc.dominant_index(1, 2, 1)


def test_verify_multiplicity_free_examples():
    assert sc.verify_multiplicity_free(1, 1, 1)
    assert sc.verify_multiplicity_free(2, 2, 2)
    assert sc.verify_multiplicity_free(2, 1, 3)


def test_index_dimension_identity():
    # both sides at x = 1: the product character and the index-set Weyl dims
    for n in (1, 2, 3):
        for d in range(3):
            for dp in range(d, 4):
                p = sc.product_char(n, d, dp)
                closed = sc.index_dim_product(n, d, dp)
                assert p.eval_ones() == closed
                by_weyl = sum(
                    sc.schur_dim(lam, 2 * n) for lam in sc.dominant_index(n, d, dp)
                )
                assert by_weyl == closed


def test_pieri_source_examples():
    assert sc.pieri_source((2, 1), 1, 1, 2) == (1, 1)
    assert sc.pieri_source((2, 2), 2, 2, 2) == (2, 2)
    assert sc.pieri_source((2, 1, 1), 2, 1, 3) == (1, 1)
    with pytest.raises(ValueError):
        sc.pieri_source((3,), 1, 1, 2)


def test_pieri_source_fibers_partition_index():
    # the strip map must send the (d, d) index onto fibers that tile the index set
    for n in (1, 2):
        for d in range(3):
            for dp in range(d, 4):
                index = sc.dominant_index(n, d, dp)
                square = sc.dominant_index(n, d, d)
                fibers = {}
                for lam in index:
                    fibers.setdefault(sc.pieri_source(lam, n, d, dp), set()).add(lam)
                assert set(fibers) <= square
                for mu, fiber in fibers.items():
                    strip = sc.pieri(mu, dp - d, 2 * n)
                    assert fiber == strip & index


def test_antidominant_index_examples():
    assert sc.antidominant_index(1, 1, 2) == {(1, 2)}
    assert sc.antidominant_index(1, 0, 3) == {(0, 3)}
    assert sc.antidominant_index(2, 2, 2) == {(0, 0, 2, 2), (1, 1, 1, 1)}


def test_index_reversal_sweep():
    for n in (1, 2, 3):
        for d in range(5):
            for dp in range(d, 5):
                assert sc.verify_index_reversal(n, d, dp)


def test_decomposition_json_shape():
    import json

    dec = sc.decompose_schur(sc.wedge2_power_char(2, 4))
    payload = json.dumps(
        [{"lambda": list(lam), "mult": mult} for lam, mult in sorted(dec.items(), reverse=True)]
    )
    assert json.loads(payload) == [
        {"lambda": [2, 2], "mult": 1},
        {"lambda": [1, 1, 1, 1], "mult": 1},
    ]
