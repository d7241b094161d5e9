"""Validated Cartan matrices and Dynkin-graph connectivity.

Nodes are numbered 1..n in every public argument and result; ``labels`` are
display strings used by the CLI.  All pairing arithmetic in the package goes
through :meth:`CartanMatrix.entry`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DiagonalNotTwo,
    DomainError,
    NotSymmetrizable,
    PositiveOffDiagonal,
    ZeroPatternAsymmetric,
)


@dataclass(frozen=True)
class CartanMatrix:
    """A symmetrizable generalized Cartan matrix with labelled nodes.

    ``entry(i, j)`` is the integer pairing of the j-th simple root against
    the i-th simple coroot.  ``symmetrizer`` is a witness: positive rationals
    d with d_i * entry(i, j) == d_j * entry(j, i) for all i, j.  Construct
    instances through :func:`validate_gcm`.
    """

    rows: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    symmetrizer: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def nodes(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def label(self, i: int) -> str:
        return self.labels[i - 1]

    def node_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise DomainError(f"unknown node label {label!r}") from None

    def neighbors(self, i: int) -> tuple[int, ...]:
        row = self.rows[i - 1]
        return tuple(j for j in self.nodes() if j != i and row[j - 1] != 0)

    def check_nodes(self, nodes: Iterable[int]) -> tuple[int, ...]:
        """Validate a node set and return it as a sorted tuple."""
        seen: set[int] = set()
        for x in nodes:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DomainError(f"node {x!r} is not an integer")
            if not 1 <= x <= self.n:
                raise DomainError(f"node {x} out of range 1..{self.n}")
            if x in seen:
                raise DomainError(f"node {x} listed twice")
            seen.add(x)
        return tuple(sorted(seen))


def validate_gcm(matrix: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None) -> CartanMatrix:
    """Validate a generalized Cartan matrix and find a symmetrizer.

    Checks, in order: squareness, 2's on the diagonal, nonpositive
    off-diagonal entries, symmetric zero pattern, and symmetrizability.
    The symmetrizer is assigned along a spanning tree of each Dynkin-graph
    component and verified on the remaining edges, so the test is exact.
    """
    rows = []
    for r in matrix:
        row = []
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise DomainError(f"matrix entry {v!r} is not an integer")
            row.append(v)
        rows.append(tuple(row))
    n = len(rows)
    if n < 1:
        raise DomainError("matrix must have at least one row")
    if any(len(r) != n for r in rows):
        raise DomainError("matrix must be square")

    for i in range(n):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(f"entry ({i + 1},{i + 1}) is {rows[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(f"entry ({i + 1},{j + 1}) is {rows[i][j]} > 0")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise ZeroPatternAsymmetric(
                    f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) "
                    "do not vanish together")

    # Spanning-tree assignment of the symmetrizer, one root per component.
    d: list[Fraction | None] = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or rows[i][j] == 0 or d[j] is not None:
                    continue
                d[j] = d[i] * rows[i][j] / rows[j][i]
                stack.append(j)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != 0 and d[i] * rows[i][j] != d[j] * rows[j][i]:
                raise NotSymmetrizable(
                    f"no positive symmetrizer exists: edge ({i + 1},{j + 1}) "
                    "is inconsistent with the spanning-tree assignment")

    if labels is None:
        labels = tuple(str(i) for i in range(1, n + 1))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise DomainError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise DomainError("labels must be distinct")
    return CartanMatrix(tuple(rows), labels, tuple(d))  # type: ignore[arg-type]


def connected_components(cm: CartanMatrix, nodes: Iterable[int]) -> list[tuple[int, ...]]:
    """Partition a node set into maximal connected parts.

    Connectivity is judged in the Dynkin graph restricted to the given set;
    parts are sorted and listed in order of their smallest member.
    """
    remaining = set(cm.check_nodes(nodes))
    parts = []
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in cm.neighbors(i):
                if j in remaining and j not in comp:
                    comp.add(j)
                    stack.append(j)
        parts.append(tuple(sorted(comp)))
        remaining -= comp
    parts.sort(key=lambda p: p[0])
    return parts


def is_connected(cm: CartanMatrix, nodes: Iterable[int]) -> bool:
    """Whether the set is nonempty and induces a connected Dynkin subgraph."""
    return len(connected_components(cm, nodes)) == 1
