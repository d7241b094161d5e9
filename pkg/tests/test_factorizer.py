from collections import Counter
from fractions import Fraction

import pytest

from kmfactor import (
    FoldContext,
    PVIndex,
    character,
    log_numerator,
    orbit_partition,
    peel_folded,
    peel_log_sum,
    recover_from_character_product,
    validate_gcm,
    verify_equivalence,
)
from kmfactor.errors import (
    DisconnectedCandidateSupport,
    DivisibilityFailure,
    DomainError,
    LengthMismatch,
    NegativeLeadingCoefficient,
    NonzeroResidual,
    NotEquiconnectedCandidate,
    TooManyFactors,
)
from kmfactor.series import Series
from test_folding import FIGURE1_CLASSES, figure1
from kmfactor.folding import Partition


def log_sum(cm, factors, cap):
    total = Series.zero(cm.n, cap)
    for pv in factors:
        total = total + log_numerator(cm, pv, cap)
    return total


def test_two_factor_example(a2):
    factors = [PVIndex((1,), (1,)), PVIndex((1, 2), (0, 0))]
    result = peel_log_sum(a2, log_sum(a2, factors, 6))
    assert result.residual_zero
    assert result.certified_degree == 6
    # the full-support factor peels first, then the rank-one one
    assert result.factors == (PVIndex((1, 2), (0, 0)), PVIndex((1,), (1,)))


def test_zero_input(a2):
    result = peel_log_sum(a2, Series.zero(2, 5))
    assert result.factors == () and result.residual_zero


def test_single_a1_factor(a1):
    result = peel_log_sum(a1, log_sum(a1, [PVIndex((1,), (0,))], 5))
    assert result.factors == (PVIndex((1,), (0,)),)


def test_repeated_factors(a2):
    factors = [PVIndex((1, 2), (1, 0))] * 3
    result = peel_log_sum(a2, log_sum(a2, factors, 10))
    assert Counter(result.factors) == Counter(factors)


def test_incomparable_maximal_factors(a2):
    factors = [PVIndex((1, 2), (1, 0)), PVIndex((1, 2), (0, 1))]
    result = peel_log_sum(a2, log_sum(a2, factors, 9))
    assert Counter(result.factors) == Counter(factors)


def test_peel_rejects_nonzero_constant(a1):
    with pytest.raises(DomainError):
        peel_log_sum(a1, Series.one(1, 4))


def test_negative_leading_coefficient(a1):
    total = -log_sum(a1, [PVIndex((1,), (0,))], 4)
    with pytest.raises(NegativeLeadingCoefficient):
        peel_log_sum(a1, total)


def test_disconnected_candidate_support(a3):
    with pytest.raises(DisconnectedCandidateSupport):
        peel_log_sum(a3, Series.monomial(3, 4, (1, 0, 1)))


def test_budget_exhaustion_raises(a1):
    # three peelable layers under a cap of two
    total = Series.monomial(1, 2, (1,), 3)
    with pytest.raises(NonzeroResidual):
        peel_log_sum(a1, total)


def test_determinism(b2):
    factors = [PVIndex((1, 2), (0, 1)), PVIndex((2,), (2,)), PVIndex((1, 2), (0, 1))]
    total = log_sum(b2, factors, 9)
    first = peel_log_sum(b2, total)
    second = peel_log_sum(b2, total)
    assert first == second


# -- character-product recovery -------------------------------------------------

def test_product_roundtrip_single(a1):
    pv = PVIndex((1,), (2,))
    body = character(a1, pv, None, 8).body
    result = recover_from_character_product(a1, body, 1)
    assert result.factors == (pv,) and result.empty_count == 0


def test_product_two_vermas(a2):
    body = character(a2, PVIndex((), ()), None, 6).body
    product = body * body
    result = recover_from_character_product(a2, product, 2)
    assert result.factors == () and result.empty_count == 2


def test_product_mixed(a2):
    full = PVIndex((1, 2), (0, 0))
    product = character(a2, full, None, 7).body * character(a2, PVIndex((), ()), None, 7).body
    result = recover_from_character_product(a2, product, 2)
    assert result.factors == (full,) and result.empty_count == 1


def test_product_disconnected_comes_back_as_components(a3):
    # a 2-product of a disconnected-index character and a Verma: the first
    # splits into its connected components, which absorb the empty slot
    pv = PVIndex((1, 3), (0, 1))
    product = character(a3, pv, None, 6).body * character(a3, PVIndex((), ()), None, 6).body
    result = recover_from_character_product(a3, product, 2)
    assert Counter(result.factors) == Counter([PVIndex((1,), (0,)), PVIndex((3,), (1,))])
    assert result.empty_count == 0
    # without the empty slot the component count exceeds the declared count
    with pytest.raises(TooManyFactors):
        recover_from_character_product(a3, character(a3, pv, None, 6).body, 1)


# -- folded peeling ----------------------------------------------------------------

def test_folded_figure1_roundtrip():
    cm = figure1()
    ctx = FoldContext(cm, Partition.of(5, FIGURE1_CLASSES))
    pv = PVIndex(tuple(range(1, 6)), (0,) * 5)
    total = ctx.fold_log_numerator(pv, 8)
    result = peel_folded(ctx, total)
    assert result.factors == (pv,) and result.residual_zero


def test_folded_a3_flip_roundtrip(a3):
    ctx = FoldContext(a3, orbit_partition(a3, [[3, 2, 1]]))
    pv = ctx.symmetric_index((1, 2, 3), {0: 1, 1: 1})
    total = ctx.fold_log_numerator(pv, 10)
    result = peel_folded(ctx, total)
    assert result.factors == (pv,)


def test_folded_zero(a3):
    ctx = FoldContext(a3, orbit_partition(a3, [[3, 2, 1]]))
    assert peel_folded(ctx, Series.zero(2, 5)).factors == ()


def test_folded_multiset(a1aff):
    ctx = FoldContext(a1aff, orbit_partition(a1aff, [[2, 1]]))
    factors = [ctx.symmetric_index((1, 2), {0: 1}),
               ctx.symmetric_index((1, 2), {0: 0})]
    total = Series.zero(1, 12)
    for pv in factors:
        total = total + ctx.fold_log_numerator(pv, 12)
    result = peel_folded(ctx, total)
    assert Counter(result.factors) == Counter(factors)


def test_folded_disconnected_class_union_rejected(a3):
    ctx3 = FoldContext(a3, orbit_partition(a3, [[3, 2, 1]]))
    # candidate supported on the folded class {1,3} alone: K={1,3} is disconnected
    with pytest.raises(NotEquiconnectedCandidate):
        peel_folded(ctx3, Series.monomial(2, 4, (1, 0)))
    f1 = figure1()
    ctxf = FoldContext(f1, Partition.of(5, FIGURE1_CLASSES))
    with pytest.raises(NotEquiconnectedCandidate):
        peel_folded(ctxf, Series.monomial(4, 4, (0, 0, 0, 1)))


def test_folded_divisibility_failure():
    # path 1-2-3-4-5 where classes {1},{3},{5} pin the whole path as the only
    # lift, so class {2,4} has lean count 2 and odd coordinates cannot occur
    rows = [[2 if i == j else 0 for j in range(5)] for i in range(5)]
    for k in range(1, 5):
        rows[k - 1][k] = rows[k][k - 1] = -1
    cm = validate_gcm(rows)
    ctx = FoldContext(cm, Partition.of(5, [[1], [2, 4], [3], [5]]))
    lifts, lean, equi = ctx.lean_lifts((1, 2, 3, 4, 5))
    assert equi and lifts == ((1, 2, 3, 4, 5),)
    with pytest.raises(DivisibilityFailure):
        peel_folded(ctx, Series.monomial(4, 6, (1, 1, 1, 1)))
    # even coordinate but quotient derived from a forged series still peels
    pv = ctx.symmetric_index((1, 2, 3, 4, 5), {0: 0, 1: 0, 2: 0, 3: 0})
    assert ctx.marker_exponent(pv) == (1, 2, 1, 1)
    result = peel_folded(ctx, ctx.fold_log_numerator(pv, 8))
    assert result.factors == (pv,)


def test_folded_negative_coefficient(a3):
    ctx = FoldContext(a3, orbit_partition(a3, [[3, 2, 1]]))
    pv = ctx.symmetric_index((1, 2, 3), {0: 0, 1: 0})
    with pytest.raises(NegativeLeadingCoefficient):
        peel_folded(ctx, -ctx.fold_log_numerator(pv, 8))


# -- multiset verification -----------------------------------------------------------

def test_verify_identity():
    items = [PVIndex((1,), (0,)), PVIndex((1, 2), (1, 1))]
    assert verify_equivalence(items, items) == [0, 1]


def test_verify_shuffle():
    left = [PVIndex((1,), (0,)), PVIndex((2,), (3,)), PVIndex((1,), (0,))]
    right = [left[1], left[0], left[2]]
    sigma = verify_equivalence(left, right)
    assert sigma is not None
    for k, pos in enumerate(sigma):
        assert left[k] == right[pos]
    assert sorted(sigma) == [0, 1, 2]


def test_verify_mismatch():
    left = [PVIndex((1,), (0,))]
    right = [PVIndex((1,), (1,))]
    assert verify_equivalence(left, right) is None


def test_verify_length_mismatch():
    with pytest.raises(LengthMismatch):
        verify_equivalence([PVIndex((1,), (0,))], [])


def test_verify_offsets():
    items = [PVIndex((1,), (0,)), PVIndex((1,), (1,))]
    shuffled = [items[1], items[0]]
    assert verify_equivalence(items, shuffled, [(1, 0), (0, 1)], [(0, 0), (1, 1)]) == [1, 0]
    assert verify_equivalence(items, shuffled, [(1, 0), (0, 1)], [(0, 0), (0, 1)]) is None
    with pytest.raises(LengthMismatch):
        verify_equivalence(items, shuffled, [(1, 0)], [(0, 0), (1, 1)])
    with pytest.raises(LengthMismatch):
        verify_equivalence(items, shuffled, offsets_left=[(1, 0), (0, 1)])


def test_verify_rational_offsets():
    items = [PVIndex((1,), (2,))]
    assert verify_equivalence(items, items, [("1/2",)], [(Fraction(1, 2),)]) == [0]
