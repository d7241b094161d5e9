"""Parabolic Weyl-orbit enumeration and normalized numerators.

Weights are never realized on a Cartan subalgebra: a highest weight enters
only through its coroot pairings on the integrable node set, and orbit
points are tracked as (pairing vector, root-coordinate offset) pairs.  The
offset of an orbit point is the difference between the shifted dominant
start weight and the point, written in simple-root coordinates, so it is a
nonnegative integer vector supported inside the node set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .cartan import CartanMatrix
from .errors import DomainError, NegativeIntegrability
from .series import Series


@dataclass(frozen=True)
class PVIndex:
    """Index of a parabolic Verma factor.

    ``nodes`` is the sorted integrable node set and ``pairings[k]`` the
    coroot pairing of the highest weight at ``nodes[k]``.  Only this data
    enters any computation, so two indices compare equal exactly when they
    are interchangeable everywhere.
    """

    nodes: tuple[int, ...]
    pairings: tuple[int, ...]

    def __post_init__(self):
        nodes = tuple(self.nodes)
        pairings = tuple(self.pairings)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "pairings", pairings)
        if list(nodes) != sorted(set(nodes)):
            raise DomainError(f"node set {nodes} is not strictly increasing")
        if len(pairings) != len(nodes):
            raise DomainError(
                f"{len(pairings)} pairings given for {len(nodes)} nodes")
        for i, p in zip(nodes, pairings):
            if not isinstance(p, int) or isinstance(p, bool):
                raise DomainError(f"pairing at node {i} is not an integer")
            if p < 0:
                raise NegativeIntegrability(f"pairing at node {i} is {p} < 0")

    @classmethod
    def from_map(cls, nodes: Iterable[int], lam: Mapping[int, int]) -> "PVIndex":
        I = tuple(sorted(set(nodes)))
        if set(lam) != set(I):
            raise DomainError(
                f"pairing keys {sorted(lam)} do not match node set {list(I)}")
        return cls(I, tuple(lam[i] for i in I))

    def pairing(self, i: int) -> int:
        return self.pairings[self.nodes.index(i)]

    def as_map(self) -> dict[int, int]:
        return dict(zip(self.nodes, self.pairings))


@dataclass(frozen=True)
class OrbitTerm:
    """One orbit point: its offset exponent and the sign of the group element."""

    exponent: tuple[int, ...]
    sign: int


def orbit_terms(cm: CartanMatrix, nodes: Iterable[int],
                lam: Mapping[int, int], cap: int) -> list[OrbitTerm]:
    """Enumerate the parabolic orbit of the shifted weight up to a degree cap.

    Starting from the pairing vector lam(i)+1 on the node set (regular
    dominant), a breadth-first search applies at node i the reflection rule
    values_j -= values_i * entry(j, i) together with offset_i += values_i,
    but only while values_i > 0; the sign alternates with depth.  The offset
    degree strictly increases along every edge, so cutting at the cap is
    exhaustive, and offsets identify group elements uniquely because the
    start vector is regular.  Terms come back sorted by (degree, lex).
    """
    I = cm.check_nodes(nodes)
    pv = PVIndex.from_map(I, dict(lam))
    return [OrbitTerm(e, s) for e, s in _orbit(cm, pv, cap)]


@lru_cache(maxsize=None)
def _orbit(cm: CartanMatrix, pv: PVIndex, cap: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    if cap < 0:
        raise DomainError("cap must be nonnegative")
    n = cm.n
    I = cm.check_nodes(pv.nodes)
    zero = (0,) * n
    if not I:
        return ((zero, 1),)
    k = len(I)
    # rows[q][p] = entry(I[q], I[p]); reflection at I[p] updates value q by it.
    rows = [tuple(cm.entry(I[q], I[p]) for p in range(k)) for q in range(k)]
    start = tuple(p + 1 for p in pv.pairings)
    seen = {zero}
    offset_of = {start: zero}  # guards pairing-vector key uniqueness
    out = [(zero, 1)]
    queue = deque([(start, zero, 0, 1)])
    while queue:
        values, offset, deg, sign = queue.popleft()
        for p in range(k):
            v = values[p]
            if v <= 0:
                continue
            nd = deg + v
            if nd > cap:
                continue
            node = I[p]
            noffset = offset[:node - 1] + (offset[node - 1] + v,) + offset[node:]
            if noffset in seen:
                continue
            nvalues = tuple(values[q] - v * rows[q][p] for q in range(k))
            prior = offset_of.get(nvalues)
            assert prior is None or prior == noffset, \
                "pairing-vector key collision in orbit enumeration"
            offset_of[nvalues] = noffset
            seen.add(noffset)
            out.append((noffset, -sign))
            queue.append((nvalues, noffset, nd, -sign))
    out.sort(key=lambda t: (sum(t[0]), t[0]))
    return tuple(out)


@lru_cache(maxsize=None)
def normalized_numerator(cm: CartanMatrix, pv: PVIndex, cap: int) -> Series:
    """The alternating orbit sum as a series with constant term 1.

    One term of coefficient +1/-1 per enumerated orbit point; the identity
    contributes the constant term.
    """
    return Series(cm.n, cap, {e: s for e, s in _orbit(cm, pv, cap)})
