"""Constructive unique factorization of sums of log-numerators.

Peeling works because a sum of log-numerators over connected indices always
exposes a dominance-maximal contributor: among exponents carrying nonzero
coefficients, those with inclusion-maximal support have the support of some
maximal factor, and the componentwise-minimal exponents with exactly that
support are the marker exponents of maximal factors, each with a strictly
positive coefficient.  Subtracting the recomputed log-numerator of the
selected factor cancels it exactly, so the loop terminates with a zero
residual precisely when the input was such a sum.  The folded variant runs
the same loop in class variables, decoding markers through lean-lift counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cartan import CartanMatrix, is_connected
from .errors import (
    DisconnectedCandidateSupport,
    DivisibilityFailure,
    DomainError,
    LengthMismatch,
    NegativeLeadingCoefficient,
    NoLift,
    NonIntegralWeight,
    NonzeroResidual,
    NotEquiconnectedCandidate,
    TooManyFactors,
)
from .folding import FoldContext
from .numerators import log_numerator
from .series import Series, support
from .weyl import PVIndex


@dataclass(frozen=True)
class FactorizationResult:
    """Recovered factors plus bookkeeping.

    ``factors`` lists one index per peeled factor in peel order (a multiset
    up to equivalence); ``empty_count`` counts inferred empty-node-set
    factors, which contribute nothing to any series; ``certified_degree``
    is the truncation cap the result is certified to.
    """

    factors: tuple[PVIndex, ...]
    empty_count: int
    residual_zero: bool
    certified_degree: int


def _select_candidate(residual: Series) -> tuple[int, ...]:
    """Deterministic peel candidate: support-maximal, then minimal exponent.

    Among stored exponents, keep those whose support is not strictly
    contained in another stored support, break ties by lexicographically
    smallest sorted support; within that support keep the componentwise
    minimal exponents, break ties lexicographically.
    """
    exps = residual.exponents()
    supports = {support(e) for e in exps}
    maximal = min(s for s in supports
                  if not any(set(s) < set(t) for t in supports))
    pool = [e for e in exps if support(e) == maximal]
    minimal = [e for e in pool
               if not any(o != e and all(x <= y for x, y in zip(o, e))
                          for o in pool)]
    return min(minimal)


def peel_log_sum(cm: CartanMatrix, total: Series) -> FactorizationResult:
    """Recover the factor multiset from a sum of log-numerators.

    Iterates: pick the candidate exponent, require a positive coefficient
    and connected support, read off the factor (support as node set,
    coordinate minus one as pairing), subtract its log-numerator, repeat.
    At most cap factors can contribute below the cap, so the iteration
    count is bounded by the cap on any input.
    """
    if total.nvars != cm.n:
        raise DomainError(f"series has {total.nvars} variables, matrix has {cm.n} nodes")
    if total.constant_term:
        raise DomainError("a sum of log-numerators has zero constant term")
    cap = total.cap
    residual = total
    factors: list[PVIndex] = []
    while not residual.is_zero:
        if len(factors) >= cap:
            raise NonzeroResidual(
                f"residual persists after {len(factors)} factors at cap {cap}")
        beta = _select_candidate(residual)
        coeff = residual.coefficient(beta)
        if coeff <= 0:
            raise NegativeLeadingCoefficient(
                f"coefficient {coeff} at candidate {beta}")
        nodes = support(beta)
        if not is_connected(cm, nodes):
            raise DisconnectedCandidateSupport(f"candidate {beta} has support {list(nodes)}")
        if any(beta[i - 1] < 1 for i in nodes):
            raise NonIntegralWeight(f"candidate {beta} has a coordinate below 1")
        pv = PVIndex(nodes, tuple(beta[i - 1] - 1 for i in nodes))
        residual = residual - log_numerator(cm, pv, cap)
        factors.append(pv)
    return FactorizationResult(tuple(factors), 0, True, cap)


def recover_from_character_product(cm: CartanMatrix, product: Series,
                                   count: int) -> FactorizationResult:
    """Factor a normalized product of parabolic Verma characters.

    The product of ``count`` normalized character bodies equals the product
    of the factor numerators divided by the full-set numerator to the
    ``count``; adding back count-many full-set log-numerators to minus its
    log therefore gives the plain sum of factor log-numerators, which is
    peeled as usual.  Factors with empty node set have numerator 1 and are
    invisible, so ``count`` minus the number of recovered factors is
    reported as the empty count; factors given with disconnected node sets
    come back as their connected components.
    """
    if count < 0:
        raise DomainError("factor count must be nonnegative")
    if product.nvars != cm.n:
        raise DomainError(f"series has {product.nvars} variables, matrix has {cm.n} nodes")
    cap = product.cap
    full = PVIndex(cm.nodes(), (0,) * cm.n)
    total = -(product.log1()) + log_numerator(cm, full, cap).scale(count)
    result = peel_log_sum(cm, total)
    if len(result.factors) > count:
        raise TooManyFactors(
            f"recovered {len(result.factors)} connected factors from a "
            f"product declared to have {count}")
    return FactorizationResult(result.factors, count - len(result.factors),
                               result.residual_zero, cap)


def peel_folded(ctx: FoldContext, total: Series) -> FactorizationResult:
    """Recover symmetric factors from a folded sum of log-numerators.

    Same loop as :func:`peel_log_sum` in class variables.  A candidate's
    class support determines the class union K, which must be connected and
    equiconnected; each coordinate must be a multiple q * (lean-lift count)
    with q >= 1, and q - 1 is the symmetric pairing on that class.
    """
    if total.nvars != ctx.partition.num_classes:
        raise DomainError(
            f"series has {total.nvars} variables, partition has "
            f"{ctx.partition.num_classes} classes")
    if total.constant_term:
        raise DomainError("a folded sum of log-numerators has zero constant term")
    cap = total.cap
    residual = total
    factors: list[PVIndex] = []
    while not residual.is_zero:
        if len(factors) >= cap:
            raise NonzeroResidual(
                f"residual persists after {len(factors)} factors at cap {cap}")
        gamma = _select_candidate(residual)
        coeff = residual.coefficient(gamma)
        if coeff <= 0:
            raise NegativeLeadingCoefficient(
                f"coefficient {coeff} at candidate {gamma}")
        class_indices = [c - 1 for c in support(gamma)]
        nodes = tuple(sorted(
            i for c in class_indices for i in ctx.partition.classes[c]))
        if not is_connected(ctx.cm, nodes):
            raise NotEquiconnectedCandidate(
                f"class union {list(nodes)} of candidate {gamma} is disconnected")
        try:
            data = ctx.lift_data(nodes)
        except NoLift as exc:
            raise NotEquiconnectedCandidate(str(exc)) from exc
        if not data.equiconnected:
            raise NotEquiconnectedCandidate(
                f"class union {list(nodes)} of candidate {gamma} is not equiconnected")
        assert data.lean_counts is not None
        class_pairings: dict[int, int] = {}
        for c, m in zip(data.class_indices, data.lean_counts):
            value = gamma[c]
            q, r = divmod(value, m)
            if r or q < 1:
                raise DivisibilityFailure(
                    f"coordinate {value} at class {c + 1} is not a positive "
                    f"multiple of the lean-lift count {m}")
            class_pairings[c] = q - 1
        pv = ctx.symmetric_index(nodes, class_pairings)
        residual = residual - ctx.fold_log_numerator(pv, cap)
        factors.append(pv)
    return FactorizationResult(tuple(factors), 0, True, cap)


def verify_equivalence(left: Sequence[PVIndex], right: Sequence[PVIndex],
                       offsets_left: Sequence[Sequence] | None = None,
                       offsets_right: Sequence[Sequence] | None = None
                       ) -> list[int] | None:
    """Match two factor lists as multisets, checking offset sums if given.

    Returns a permutation ``sigma`` with ``left[k]`` equivalent to
    ``right[sigma[k]]`` for all k, or None if no matching exists or the
    componentwise sums of the offset vectors differ.
    """
    if len(left) != len(right):
        raise LengthMismatch(f"{len(left)} factors versus {len(right)}")
    if (offsets_left is None) != (offsets_right is None):
        raise LengthMismatch("offsets must be given for both sides or neither")
    if offsets_left is not None and offsets_right is not None:
        if len(offsets_left) != len(left) or len(offsets_right) != len(right):
            raise LengthMismatch("one offset vector per factor is required")
        sums = []
        for offsets in (offsets_left, offsets_right):
            vecs = [tuple(Fraction(x) for x in off) for off in offsets]
            if len({len(v) for v in vecs}) > 1:
                raise DomainError("offset vectors must share a dimension")
            sums.append(tuple(map(sum, zip(*vecs))) if vecs else ())
        if sums[0] != sums[1]:
            return None
    available: dict[tuple, list[int]] = {}
    for pos, pv in enumerate(right):
        available.setdefault((pv.nodes, pv.pairings), []).append(pos)
    sigma = []
    for pv in left:
        bucket = available.get((pv.nodes, pv.pairings))
        if not bucket:
            return None
        sigma.append(bucket.pop(0))
    return sigma
