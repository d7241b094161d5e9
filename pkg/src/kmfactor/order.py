"""Dominance and equivalence of parabolic Verma indices.

One index dominates another when its node set strictly contains the other's,
or the node sets coincide and every pairing is at most the matching one.
Dominance is reflexive and transitive but not antisymmetric; indices with
equal node sets and pairings are equivalent and share a numerator, so a
"maximal" list position is one whose dominators are all equivalent to it.
"""

from __future__ import annotations

from typing import Sequence

from .errors import EmptyList
from .weyl import PVIndex


def dominates(a: PVIndex, b: PVIndex) -> bool:
    """Whether ``a`` dominates ``b``."""
    if set(a.nodes) > set(b.nodes):
        return True
    if a.nodes != b.nodes:
        return False
    return all(x <= y for x, y in zip(a.pairings, b.pairings))


def equivalent(a: PVIndex, b: PVIndex) -> bool:
    """Equal node sets and equal pairings on them."""
    return a.nodes == b.nodes and a.pairings == b.pairings


def maximal_indices(items: Sequence[PVIndex]) -> list[int]:
    """Positions whose every dominator in the list is equivalent to them.

    Returned in ascending order; at least one position always qualifies.
    """
    if not items:
        raise EmptyList("maximal-element selection needs a nonempty list")
    out = []
    for k, cand in enumerate(items):
        if all(equivalent(other, cand)
               for other in items if dominates(other, cand)):
            out.append(k)
    return out
