#!/usr/bin/env python3
"""Folding under diagram symmetries and factorization after restriction.

An equivalence relation on the nodes (often the orbits of a group of diagram
automorphisms) collapses the series variables class by class.  Restriction
of characters to the symmetric part of the Cartan subalgebra is exactly this
collapse, so unique factorization survives folding for symmetric weights on
connected, equiconnected class unions.

For a twisted graph automorphism of an untwisted affine algebra, use the
orbits of the underlying untwisted diagram automorphism: both restrict
identically to the Cartan subalgebra, so the folded computation is the same.
"""

from kmfactor import (
    FoldContext,
    Partition,
    check_automorphism,
    connected_transversal,
    orbit_partition,
    peel_folded,
    validate_gcm,
)

# The order-two symmetry of the A3 diagram.
a3 = validate_gcm([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])
flip = check_automorphism(a3, [3, 2, 1])
partition = orbit_partition(a3, [flip])
print("A3 flip orbits:", partition.classes)
print("connected transversal:", connected_transversal(a3, partition))

ctx = FoldContext(a3, partition)
lifts, lean, equi = ctx.lean_lifts((1, 2, 3))
print("lifts of the full set:", lifts, "| equiconnected:", equi)

# Fold a symmetric factor and recover it from the folded series alone.
pv = ctx.symmetric_index((1, 2, 3), {0: 2, 1: 1})  # pairing 2 on {1,3}, 1 on {2}
folded = ctx.fold_log_numerator(pv, 12)
print("\nfolded log-numerator starts:", folded.text("y")[:60], "...")
result = peel_folded(ctx, folded)
print("recovered:", [(f.nodes, f.pairings) for f in result.factors])

# A class union can fail equiconnectedness, and then no symmetric factor
# carries it: the nine-node path with interleaved classes is the standard
# example (two incomparable minimal lifts).
rows = [[2 if i == j else 0 for j in range(9)] for i in range(9)]
for k in range(1, 9):
    rows[k - 1][k] = rows[k][k - 1] = -1
path9 = validate_gcm(rows)
interleaved = Partition.of(9, [[5], [3, 4, 6], [2, 7, 8], [1, 9]])
ctx9 = FoldContext(path9, interleaved)
lifts, lean, equi = ctx9.lean_lifts(tuple(range(1, 10)))
print("\nnine-node path, interleaved classes:")
print("minimal lifts:", lifts)
print("equiconnected:", equi)

# The affine swap: both nodes fold to one class; markers live on one axis.
affine = validate_gcm([[2, -2], [-2, 2]])
swap = orbit_partition(affine, [[2, 1]])
ctxa = FoldContext(affine, swap)
sym = ctxa.symmetric_index((1, 2), {0: 1})
total = ctxa.fold_log_numerator(sym, 10) + ctxa.fold_log_numerator(sym, 10)
print("\naffine A1 swap, twice the same factor:",
      [(f.nodes, f.pairings) for f in peel_folded(ctxa, total).factors])
