#!/usr/bin/env python3
"""Root multiplicities extracted from the full-set log-numerator.

No root tables are consulted: the multiplicities fall out of the layered
identity between minus the log of the Weyl orbit sum and the multiplicity
generating series.
"""

from kmfactor import root_multiplicities, validate_gcm

# Finite type: the support is exactly the (finite) positive root list.
a3 = validate_gcm([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
print("A3 positive roots (all multiplicity 1):")
for exp, m in sorted(root_multiplicities(a3, 6).items(), key=lambda t: (sum(t[0]), t[0])):
    print(f"  {exp} -> {m}")

# Affine type: real roots keep multiplicity 1 while the isotropic layers
# (k, k) repeat forever with the rank of the underlying finite algebra.
affine = validate_gcm([[2, -2], [-2, 2]])
print("\naffine A1 up to degree 10:")
table = root_multiplicities(affine, 10)
for exp, m in sorted(table.items(), key=lambda t: (sum(t[0]), t[0])):
    kind = "imaginary" if exp[0] == exp[1] else "real"
    print(f"  {exp} -> {m}  ({kind})")

# G2 for variety: two root lengths, still multiplicity 1 in finite type.
g2 = validate_gcm([[2, -1], [-3, 2]])
print("\nG2 positive roots:", sorted(root_multiplicities(g2, 6)))
