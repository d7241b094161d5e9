#!/usr/bin/env python3
"""Unique factorization: peeling a sum of log-numerators.

A sum of log-numerators over connected indices always exposes a dominance-
maximal factor: the smallest exponent on an inclusion-maximal support is a
marker exponent with positive coefficient.  Peeling it off and repeating
recovers the whole multiset, certified up to the truncation cap.
"""

from kmfactor import (
    PVIndex,
    character,
    log_numerator,
    peel_log_sum,
    recover_from_character_product,
    validate_gcm,
    verify_equivalence,
)
from kmfactor.errors import DomainError
from kmfactor.series import Series

b2 = validate_gcm([[2, -1], [-2, 2]])
factors = [
    PVIndex((1, 2), (0, 1)),
    PVIndex((1,), (2,)),
    PVIndex((1, 2), (0, 1)),   # repeated factors are fine
]

cap = 10
total = Series.zero(2, cap)
for pv in factors:
    total = total + log_numerator(b2, pv, cap)
print("peeling a three-factor log sum over B2...")
result = peel_log_sum(b2, total)
for pv in result.factors:
    print(f"  recovered I={pv.nodes} pairings={pv.pairings}")
print("residual zero:", result.residual_zero, "| certified degree:", result.certified_degree)

# The same works at the character level: multiply normalized bodies, declare
# how many factors the product has, and recover them.  Empty node sets have
# body equal to the full Verma character and are counted, not listed.
product = Series.one(2, cap)
for pv in [PVIndex((1, 2), (1, 1)), PVIndex((), ())]:
    product = product * character(b2, pv, None, cap).body
recovered = recover_from_character_product(b2, product, 2)
print("\ncharacter product: factors",
      [(pv.nodes, pv.pairings) for pv in recovered.factors],
      "+", recovered.empty_count, "empty")

# Multiset equality of two factor lists, with offset bookkeeping.
left = factors
right = [factors[1], factors[2], factors[0]]
sigma = verify_equivalence(left, right, [(1, 0)] * 3, [(1, 0)] * 3)
print("\nmatching permutation:", sigma)

# Series that are not sums of log-numerators are rejected, not mangled.
try:
    peel_log_sum(b2, -total)
except DomainError as exc:
    print(f"rejected ({type(exc).__name__}): {exc}")
