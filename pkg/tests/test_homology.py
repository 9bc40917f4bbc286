"""Reduced complex, Tor dimensions, contracting homotopy, Laurent case.

The Laurent numbers are frozen from the independent oracle in oracles.py;
everything else is checked against identities (rank-nullity, d o d = 0,
homotopy => vanishing) rather than stored values.
"""

from __future__ import annotations

import pytest

from anick import (
    HomotopyFailure,
    Rationals,
    canonical_zeta,
    homotopy_check,
    laurent_complex,
    laurent_formula_differential,
    reduced_element,
    reduced_matrix,
    substitution_terms,
    suite_graphs,
    tor_dims,
)

from oracles import laurent_tor_dims

SUITE = ("S1", "S2", "S3", "S4", "S5")


def test_reduced_element_is_the_substitution_formula(engine_for):
    # with the zero augmentation only the tensor-1 terms survive collapse
    g, sys, eng = engine_for("S4")
    for n in range(1, 4):
        for c in eng.chains(n):
            assert reduced_element(eng, n, c) == substitution_terms(
                n, c, g, sys
            )


@pytest.mark.parametrize("name", SUITE)
def test_reduced_matrices_compose_to_zero(name, engine_for):
    g, _, eng = engine_for(name)
    mats = {m: reduced_matrix(eng, m, graph=g) for m in range(1, 5)}
    for m in range(1, 4):
        assert mats[m].rows == len(eng.chains(m - 1))
        assert mats[m].cols == len(eng.chains(m))
        assert mats[m].multiply(mats[m + 1]).is_zero()


@pytest.mark.parametrize("name", SUITE)
def test_rank_nullity(name, engine_for):
    g, _, eng = engine_for(name)
    for m in range(1, 5):
        mat = reduced_matrix(eng, m, graph=g)
        assert mat.rank() + len(mat.kernel_basis()) == mat.cols
        assert mat.rank() <= min(mat.rows, mat.cols)


@pytest.mark.parametrize("field", ["rational", "p=2", "p=101"])
def test_tor_vanishes_independently_of_the_field(field, engine_for):
    for name in SUITE:
        g, _, eng = engine_for(name, field=field)
        table = tor_dims(eng, 4, graph=g)
        assert table.dims == [1, 0, 0, 0, 0]
        assert table.max_n == 4
        for m in range(1, 5):
            assert table.shape(m) == (
                len(eng.chains(m - 1)),
                len(eng.chains(m)),
            )


def test_homotopy_holds_with_the_canonical_zeta(engine_for):
    for name in SUITE:
        g, _, eng = engine_for(name)
        for n in range(0, 4):
            assert homotopy_check(eng, g, n)


def test_homotopy_implies_vanishing(engine_for):
    # meta-implication: on any suite where the homotopy identity holds
    # through degree 4, the Tor table must be zero in degrees 1..4
    for name in SUITE:
        g, _, eng = engine_for(name)
        held = all(homotopy_check(eng, g, n) for n in range(0, 4))
        if held:
            assert tor_dims(eng, 4, graph=g).dims[1:] == [0, 0, 0, 0]


def test_wrong_zeta_is_detected(engine_for):
    g, sys, eng = engine_for("S5")
    zeta = dict(canonical_zeta(g, sys.alphabet))
    e = sys.alphabet.key_of("e")
    zeta[e] = sys.alphabet.key_of("v")  # cod(e) is w, not v
    with pytest.raises(HomotopyFailure) as info:
        homotopy_check(eng, g, 0, zeta=zeta)
    assert info.value.degree == 0
    assert (e,) in info.value.failures


def test_laurent_formula_matches_the_unit_engine(engine_for):
    _, sys, eng = engine_for("S2", augmentation="unit")
    for n in range(0, 4):
        for c in eng.chains(n):
            assert laurent_formula_differential(n, c, eng) == eng.differential(
                n, c
            )


def test_laurent_table_matches_the_oracle():
    table, mats = laurent_complex(4)
    dims, counts, ranks = laurent_tor_dims(4)
    assert table.dims == dims == [1, 1, 0, 0, 0]
    assert [table.counts[n] for n in range(5)] == counts == [3, 7, 17, 41, 99]
    assert [table.ranks[m] for m in range(1, 5)] == ranks == [2, 5, 12, 29]
    for m in range(1, 4):
        assert mats[m].multiply(mats[m + 1]).is_zero()


def test_laurent_is_field_independent():
    from anick import field_from_name

    table, _ = laurent_complex(3, field=field_from_name("p=2"))
    assert table.dims == [1, 1, 0, 0]
    assert table.field_name == "p=2"
