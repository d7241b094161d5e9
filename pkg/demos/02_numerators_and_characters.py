#!/usr/bin/env python3
"""From Weyl orbits to normalized numerators and truncated characters.

A parabolic Verma factor is indexed by a node set I and the coroot pairings
of the highest weight on I.  Its normalized numerator is the alternating
orbit sum of the parabolic Weyl group, a series with constant term 1; the
normalized character body is that numerator divided by the full-set one.
"""

from kmfactor import PVIndex, character, log_numerator, normalized_numerator, orbit_terms, validate_gcm
from kmfactor.series import Series

a2 = validate_gcm([[2, -1], [-1, 2]])

# The orbit of the shifted zero weight: six terms, one per Weyl group element.
print("A2 orbit of the shifted zero weight:")
for term in orbit_terms(a2, (1, 2), {1: 0, 2: 0}, 6):
    print(f"  exponent {term.exponent}  sign {term.sign:+d}")

# The full-set numerator at weight zero factors over the positive roots
# (the denominator identity): (1-x1)(1-x2)(1-x1*x2).
numerator = normalized_numerator(a2, PVIndex((1, 2), (0, 0)), 6)
product = Series.one(2, 6)
for root in [(1, 0), (0, 1), (1, 1)]:
    product = product * (Series.one(2, 6) - Series.monomial(2, 6, root))
print("\nnumerator:", numerator.text())
print("identical to the positive-root product:", numerator == product)

# Minus its log collects root multiplicities layer by layer.
print("log-numerator:", log_numerator(a2, PVIndex((1, 2), (0, 0)), 4).text())

# Characters: a 3-dimensional simple module of A1, a full Verma module, and
# the trivial module (body 1).
a1 = validate_gcm([[2]])
print("\nA1, pairing 2 on {1}:", character(a1, PVIndex((1,), (2,)), None, 8).body.text())
print("A2 Verma (I empty):  ", character(a2, PVIndex((), ()), None, 3).body.text())
print("A2 trivial (0 on S): ", character(a2, PVIndex((1, 2), (0, 0)), None, 8).body.text())
