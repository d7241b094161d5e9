#!/usr/bin/env python3
"""Validating generalized Cartan matrices and exploring Dynkin connectivity."""

from kmfactor import connected_components, is_connected, validate_gcm
from kmfactor.errors import DomainError

# A symmetrizable generalized Cartan matrix has 2's on the diagonal,
# nonpositive integers elsewhere, a symmetric zero pattern, and a positive
# diagonal rescaling making it symmetric.  validate_gcm finds the rescaling.
b2 = validate_gcm([[2, -1], [-2, 2]])
print("B2 accepted, symmetrizer:", [str(d) for d in b2.symmetrizer])

g2 = validate_gcm([[2, -1], [-3, 2]], labels=["long", "short"])
print("G2 accepted, labels:", g2.labels)

affine = validate_gcm([[2, -2], [-2, 2]])
print("affine A1 accepted, symmetrizer:", [str(d) for d in affine.symmetrizer])

# Violations are reported with the offending entries.
for rows in ([[2, -1], [0, 2]],          # zero pattern broken
             [[3, -1], [-1, 2]],         # diagonal not 2
             [[2, -1, -2], [-1, 2, -1], [-1, -2, 2]]):  # inconsistent cycle
    try:
        validate_gcm(rows)
    except DomainError as exc:
        print(f"rejected ({type(exc).__name__}): {exc}")

# Connectivity is judged in the Dynkin graph.  Components come back sorted.
d4 = validate_gcm([[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -1, 2]])
print("D4 {1,2,4} components:", connected_components(d4, (1, 2, 4)))
print("D4 {1,2,3} connected:", is_connected(d4, (1, 2, 3)))
print("empty set connected:", is_connected(d4, ()))
