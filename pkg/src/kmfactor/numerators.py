"""Log-numerators, parabolic Verma characters, and root multiplicities.

The log-numerator of an index is minus the logarithm of its normalized
numerator; its coefficients drive every factorization argument in the
package.  The marker exponent of an index has coordinate pairing+1 on each
of its nodes: it is the smallest exponent of the log-numerator whose support
fills the whole node set, its coefficient is positive and independent of the
weight, and a closed form for that coefficient counts ordered covers of the
node set by totally disconnected pieces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .cartan import CartanMatrix
from .errors import DomainError, NonIntegralCharacter, NonIntegralMultiplicity
from .series import Series
from .weyl import PVIndex, normalized_numerator


def marker_exponent(cm: CartanMatrix, pv: PVIndex) -> tuple[int, ...]:
    """Exponent with coordinate pairing+1 on each index node, 0 elsewhere."""
    cm.check_nodes(pv.nodes)
    out = [0] * cm.n
    for i, p in zip(pv.nodes, pv.pairings):
        out[i - 1] = p + 1
    return tuple(out)


@lru_cache(maxsize=None)
def log_numerator(cm: CartanMatrix, pv: PVIndex, cap: int) -> Series:
    """Minus the log of the normalized numerator; constant term 0."""
    return -(normalized_numerator(cm, pv, cap).log1())


@dataclass(frozen=True)
class CharacterValue:
    """A normalized character body together with an opaque highest-weight tag.

    The body is the character divided by the exponential of the highest
    weight, so its constant term is 1; the tag is caller-supplied data
    (typically a vector) compared only by equality.
    """

    offset: object
    body: Series


@lru_cache(maxsize=None)
def _full_denominator_inverse(cm: CartanMatrix, cap: int) -> Series:
    full = PVIndex(cm.nodes(), (0,) * cm.n)
    return normalized_numerator(cm, full, cap).invert()


def character(cm: CartanMatrix, pv: PVIndex, offset, cap: int) -> CharacterValue:
    """Normalized parabolic Verma character: numerator over the full-set one.

    Every coefficient of the body is a weight multiplicity, so a coefficient
    that is negative or non-integral is a bug and raises rather than being
    dropped.
    """
    body = normalized_numerator(cm, pv, cap) * _full_denominator_inverse(cm, cap)
    for exp, c in body.items():
        if c.denominator != 1 or c < 0:
            raise NonIntegralCharacter(f"coefficient {c} at exponent {exp}")
    return CharacterValue(offset, body)


def leading_coefficient_closed_form(cm: CartanMatrix, nodes: Iterable[int]) -> Fraction:
    """Marker coefficient of a log-numerator, from the combinatorial closed form.

    Counts ordered tuples (J_1, ..., J_k) of pairwise disjoint nonempty
    totally disconnected subsets covering the node set, and evaluates
    (-1)^|I| * sum_k (-1)^k |covers_k| / k.  Exponential in |I|; the
    enumeration memoizes on the remaining-set bitmask and is meant for the
    small node sets a Dynkin diagram provides.
    """
    I = cm.check_nodes(nodes)
    if not I:
        raise DomainError("node set must be nonempty")
    k = len(I)
    adj = []
    for a in range(k):
        mask = 0
        for b in range(k):
            if b != a and cm.entry(I[a], I[b]) != 0:
                mask |= 1 << b
        adj.append(mask)

    def independent_subsets(mask: int) -> list[int]:
        # nonempty submasks of mask inducing no Dynkin edge
        out: list[int] = []

        def grow(avail: int, cur: int) -> None:
            if not avail:
                if cur:
                    out.append(cur)
                return
            low = avail & -avail
            grow(avail & ~low, cur)
            grow(avail & ~(low | adj[low.bit_length() - 1]), cur | low)

        grow(mask, 0)
        return out

    memo: dict[tuple[int, int], int] = {}

    def covers(mask: int, parts: int) -> int:
        if not mask:
            return 1 if parts == 0 else 0
        if parts == 0:
            return 0
        key = (mask, parts)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = sum(covers(mask & ~j, parts - 1) for j in independent_subsets(mask))
        memo[key] = total
        return total

    full = (1 << k) - 1
    acc = Fraction(0)
    for parts in range(1, k + 1):
        acc += Fraction((-1) ** parts * covers(full, parts), parts)
    return (-1) ** k * acc


def root_multiplicities(cm: CartanMatrix, cap: int) -> dict[tuple[int, ...], int]:
    """Positive-root multiplicities up to the degree cap.

    Inverts the layered identity between the full-set log-numerator and the
    multiplicity generating sum: processing exponents by increasing degree,
    the multiplicity at an exponent is its log coefficient minus the
    contributions mult(base)/k of all proper divisors.  Only nonzero
    multiplicities are returned; a negative or non-integral value means the
    inputs were inconsistent and raises.
    """
    if cap < 1:
        raise DomainError("cap must be at least 1")
    full = PVIndex(cm.nodes(), (0,) * cm.n)
    log_full = log_numerator(cm, full, cap)
    out: dict[tuple[int, ...], int] = {}
    for exp, c in log_full.items():  # canonical order is ascending degree
        m = c
        g = math.gcd(*exp)
        for d in range(2, g + 1):
            if g % d:
                continue
            base = tuple(e // d for e in exp)
            mb = out.get(base)
            if mb:
                m -= Fraction(mb, d)
        if not m:
            continue
        if m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(f"value {m} at exponent {exp}")
        out[exp] = int(m)
    return out
