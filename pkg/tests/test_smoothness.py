"""Atomic shape decomposition, well-formedness, and adequacy reports."""

from __future__ import annotations

import random

import pytest

from bhk import Characteristic, adequacy, atomic_decomposition, quasi_smooth, well_formed
from bhk.smoothness import Chain, Fermat, Loop
from bhk.errors import NotInvertiblePotential
from conftest import (
    A_EX_ROWS,
    A_F_ROWS,
    CHAR0,
    LOOP_ROWS,
    MIXED_ROWS,
    NONCY_LOOP_ROWS,
    build,
)

# Calabi-Yau but not quasi-smooth: the first row mixes three variables.
CY_NOT_QS_ROWS = ((2, 1, 1, 0), (0, 2, 1, 0), (0, 0, 3, 1), (0, 0, 1, 4))
# Quasi-smooth loop whose weights (2,1,2,1) share a factor on an unsupported pair.
WF_FAIL_LOOP_ROWS = ((2, 1, 0, 0), (0, 3, 1, 0), (0, 0, 2, 1), (1, 0, 0, 3))
# Weights (9,9,5,3): the triple (9,9,3) shares the factor 3.
TRIPLE_FAIL_ROWS = ((1, 1, 0, 0), (0, 2, 0, 0), (0, 0, 3, 1), (0, 0, 0, 6))


def test_chain_decomposition():
    dec = atomic_decomposition(build(A_EX_ROWS))
    assert dec.atoms == (Chain(variables=(0, 1, 2, 3), exponents=(2, 2, 6, 7)),)
    assert dec.covered_variables() == {0, 1, 2, 3}


def test_fermat_decomposition():
    dec = atomic_decomposition(build(A_F_ROWS))
    assert dec.atoms == tuple(Fermat(variable=v, exponent=4) for v in range(4))


def test_loop_decomposition():
    dec = atomic_decomposition(build(LOOP_ROWS))
    assert dec.atoms == (Loop(variables=(0, 1, 2, 3), exponents=(3, 3, 3, 3)),)
    dec2 = atomic_decomposition(build(NONCY_LOOP_ROWS))
    assert dec2.atoms == (Loop(variables=(0, 1, 2, 3), exponents=(2, 2, 2, 2)),)


def test_mixed_decomposition():
    dec = atomic_decomposition(build(MIXED_ROWS))
    assert dec.atoms == (
        Chain(variables=(0, 1), exponents=(3, 4)),
        Fermat(variable=2, exponent=4),
        Fermat(variable=3, exponent=4),
    )


def test_two_small_loops():
    rows = ((2, 1, 0, 0), (1, 2, 0, 0), (0, 0, 2, 1), (0, 0, 1, 2))
    dec = atomic_decomposition(build(rows))
    assert dec.atoms == (
        Loop(variables=(0, 1), exponents=(2, 2)),
        Loop(variables=(2, 3), exponents=(2, 2)),
    )


def test_decomposition_is_row_order_invariant():
    rng = random.Random(5)
    expected = atomic_decomposition(build(A_EX_ROWS))
    for _ in range(10):
        rows = list(A_EX_ROWS)
        rng.shuffle(rows)
        assert atomic_decomposition(build(tuple(rows))) == expected


def test_loop_starts_at_least_variable():
    rows = (LOOP_ROWS[2], LOOP_ROWS[0], LOOP_ROWS[3], LOOP_ROWS[1])
    dec = atomic_decomposition(build(rows))
    assert dec.atoms[0].variables[0] == 0


def test_not_invertible_rejected():
    m = build(CY_NOT_QS_ROWS)
    assert not quasi_smooth(m)
    with pytest.raises(NotInvertiblePotential):
        atomic_decomposition(m)


def test_exponent_one_pair_never_matches():
    # x0 * x1 with both exponents one is ambiguous and rejected.
    rows = ((1, 1, 0, 0), (0, 2, 1, 0), (0, 0, 6, 1), (0, 0, 0, 7))
    assert not quasi_smooth(build(rows))


def test_well_formed_goldens():
    assert well_formed(build(A_EX_ROWS))
    assert well_formed(build(A_F_ROWS))
    assert well_formed(build(LOOP_ROWS))
    assert well_formed(build(MIXED_ROWS))
    assert not well_formed(build(WF_FAIL_LOOP_ROWS))
    assert not well_formed(build(TRIPLE_FAIL_ROWS))


def test_adequacy_report_flags():
    rep = adequacy(build(WF_FAIL_LOOP_ROWS), None, CHAR0)
    assert rep.quasi_smooth
    assert not rep.well_formed
    assert rep.weight_triple_gcd_ok  # only the pair criterion fails
    assert not rep.verdict

    rep3 = adequacy(build(TRIPLE_FAIL_ROWS), None, CHAR0)
    assert not rep3.weight_triple_gcd_ok
    assert not rep3.well_formed

    full = adequacy(build(A_EX_ROWS), None, CHAR0)
    assert full.quasi_smooth and full.well_formed and full.char_ok and full.verdict


def test_adequacy_always_carries_audit_flag():
    for rows in (A_EX_ROWS, WF_FAIL_LOOP_ROWS, TRIPLE_FAIL_ROWS):
        rep = adequacy(build(rows), None, CHAR0)
        assert any("audit borderline weight systems" in s for s in rep.diagnostics)


def test_adequacy_positive_characteristic():
    ok = adequacy(build(A_EX_ROWS, 5), None, Characteristic(5))
    assert ok.char_ok and ok.verdict

    # det = 35 is odd so the build passes, but 2 divides the weight 2.
    bad = adequacy(build(WF_FAIL_LOOP_ROWS, 2), None, Characteristic(2))
    assert not bad.char_ok
    assert any("divides a weight" in s for s in bad.diagnostics)


def test_adequacy_mentions_group_order(a_ex):
    from bhk import j_subgroup

    rep = adequacy(a_ex, j_subgroup(a_ex), CHAR0)
    assert any("group order 7" in s for s in rep.diagnostics)


def test_catalog_is_adequate(catalog):
    for m in catalog:
        rep = adequacy(m, None, CHAR0)
        assert rep.verdict, m.matrix
