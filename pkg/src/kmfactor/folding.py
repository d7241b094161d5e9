"""Node partitions, diagram automorphisms, lifts, and folded markers.

A partition of the Dynkin nodes (given directly, or as the orbits of a
group of diagram automorphisms) induces the variable-collapsing map
realized by :meth:`kmfactor.series.Series.fold`.  For a union of classes K,
a *lift* is a connected subset of K meeting every class of K; K is
*equiconnected* when some lift (a *lean* one) simultaneously minimizes the
intersection count with every class.  The folded marker exponent of a
symmetric index is built from those counts and does not depend on the lean
lift chosen.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .cartan import CartanMatrix
from .errors import (
    DomainError,
    NoLift,
    NotClassUnion,
    NotCompatible,
    NotEquiconnected,
    NotSymmetric,
    NoTransversal,
    SizeLimit,
)
from .numerators import log_numerator
from .series import Series
from .weyl import PVIndex

_LIFT_NODE_LIMIT = 16


@dataclass(frozen=True)
class Partition:
    """Disjoint classes covering 1..n, ordered by smallest member."""

    n: int
    classes: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, n: int, classes: Iterable[Iterable[int]]) -> "Partition":
        parts = sorted((tuple(sorted(set(p))) for p in classes),
                       key=lambda p: p[0] if p else 0)
        flat = [i for p in parts for i in p]
        if sorted(flat) != list(range(1, n + 1)):
            raise DomainError(f"classes do not partition 1..{n}")
        return cls(n, tuple(parts))

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_index(self, node: int) -> int:
        """0-based position of the class containing the node."""
        for c, part in enumerate(self.classes):
            if node in part:
                return c
        raise DomainError(f"node {node} out of range 1..{self.n}")

    def class_of(self, node: int) -> tuple[int, ...]:
        return self.classes[self.class_index(node)]


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A node permutation preserving the Cartan matrix; images[i-1] = image of i."""

    images: tuple[int, ...]

    def apply(self, node: int) -> int:
        return self.images[node - 1]


def check_automorphism(cm: CartanMatrix, perm: Sequence[int]) -> DiagramAutomorphism:
    """Validate a permutation of 1..n as a diagram automorphism."""
    images = tuple(perm)
    if sorted(images) != list(cm.nodes()):
        raise DomainError(f"{list(images)} is not a permutation of 1..{cm.n}")
    for i in cm.nodes():
        for j in cm.nodes():
            if cm.entry(images[i - 1], images[j - 1]) != cm.entry(i, j):
                raise NotCompatible(
                    f"entry ({i},{j}) is not preserved by the permutation")
    return DiagramAutomorphism(images)


def orbit_partition(cm: CartanMatrix,
                    gens: Iterable[DiagramAutomorphism | Sequence[int]]) -> Partition:
    """Orbits of the group generated by the given automorphisms.

    Raw permutations are validated first.  Computed by union-find over the
    generator images, which suffices because group orbits are generated by
    the relations i ~ g(i).
    """
    parent = list(range(cm.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        if not isinstance(gen, DiagramAutomorphism):
            gen = check_automorphism(cm, gen)
        elif len(gen.images) != cm.n:
            raise DomainError(f"permutation has {len(gen.images)} entries, expected {cm.n}")
        for i in cm.nodes():
            ri, rj = find(i), find(gen.apply(i))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in cm.nodes():
        groups.setdefault(find(i), []).append(i)
    return Partition.of(cm.n, groups.values())


def connected_transversal(cm: CartanMatrix, partition: Partition) -> tuple[int, ...]:
    """A connected node set meeting every class exactly once.

    Grows greedily from node 1, always adding the smallest node that is
    adjacent to the current set and lies in a class not met yet.  When the
    partition consists of automorphism orbits of a connected diagram this
    never gets stuck: a class met by the current set contains a translate
    of any boundary edge's inner endpoint, so some eligible neighbor exists.
    For arbitrary partitions the search may exhaust its options and raises.
    """
    if partition.n != cm.n:
        raise DomainError(f"partition covers 1..{partition.n}, matrix has {cm.n} nodes")
    chosen = {1}
    met = {partition.class_index(1)}
    while len(met) < partition.num_classes:
        candidate = None
        for y in cm.nodes():
            if y in chosen or partition.class_index(y) in met:
                continue
            if any(cm.entry(y, x) != 0 for x in chosen):
                candidate = y
                break
        if candidate is None:
            raise NoTransversal(
                "no unmet class is adjacent to the current set; the partition "
                "is not the orbit partition of a connected diagram")
        chosen.add(candidate)
        met.add(partition.class_index(candidate))
    return tuple(sorted(chosen))


def _connected_subsets(neigh: dict[int, tuple[int, ...]],
                       vertices: Sequence[int]) -> Iterator[frozenset[int]]:
    """All nonempty connected subsets of the induced graph, each exactly once.

    Subsets are grouped by their minimum vertex v and grown inside
    {u : u >= v}; the branch that skips a frontier vertex forbids it in all
    later branches, which is what makes the enumeration duplicate-free.
    """
    verts = sorted(vertices)

    def grow(cur: frozenset[int], frontier: tuple[int, ...],
             banned: frozenset[int], allowed: frozenset[int]) -> Iterator[frozenset[int]]:
        yield cur
        for idx, u in enumerate(frontier):
            new_banned = banned | frozenset(frontier[:idx])
            pending = frozenset(frontier[idx + 1:])
            fresh = tuple(w for w in neigh[u]
                          if w in allowed and w not in cur
                          and w not in new_banned and w not in pending and w != u)
            yield from grow(cur | {u}, frontier[idx + 1:] + fresh,
                            new_banned, allowed)

    for i, v in enumerate(verts):
        allowed = frozenset(verts[i:])
        start_frontier = tuple(w for w in neigh[v] if w in allowed and w != v)
        yield from grow(frozenset({v}), start_frontier, frozenset(), allowed)


@dataclass(frozen=True)
class LiftData:
    """Inclusion-minimal lifts of one class union and the derived counts."""

    lifts: tuple[tuple[int, ...], ...]
    lean: tuple[tuple[int, ...], ...]
    equiconnected: bool
    class_indices: tuple[int, ...]          # classes making up the union
    lean_counts: tuple[int, ...] | None     # |lean lift ∩ class|, aligned


class FoldContext:
    """A Cartan matrix with a node partition and cached lift data.

    The per-union lift enumeration is exponential in the union's size, so
    results are cached on first use; instances are immutable apart from
    that cache and safe to share.
    """

    def __init__(self, cm: CartanMatrix, partition: Partition):
        if partition.n != cm.n:
            raise DomainError(
                f"partition covers 1..{partition.n}, matrix has {cm.n} nodes")
        self.cm = cm
        self.partition = partition
        self._lift_cache: dict[tuple[int, ...], LiftData] = {}

    # -- lifts -----------------------------------------------------------

    def lift_data(self, nodes: Iterable[int]) -> LiftData:
        K = self.cm.check_nodes(nodes)
        cached = self._lift_cache.get(K)
        if cached is None:
            cached = self._compute_lift_data(K)
            self._lift_cache[K] = cached
        return cached

    def _compute_lift_data(self, K: tuple[int, ...]) -> LiftData:
        if not K:
            raise DomainError("class union must be nonempty")
        if len(K) > _LIFT_NODE_LIMIT:
            raise SizeLimit(
                f"lift enumeration is capped at {_LIFT_NODE_LIMIT} nodes, got {len(K)}")
        kset = set(K)
        class_indices = sorted({self.partition.class_index(i) for i in K})
        for c in class_indices:
            if not set(self.partition.classes[c]) <= kset:
                raise NotClassUnion(
                    f"{list(K)} cuts the class {list(self.partition.classes[c])}")
        parts = [self.partition.classes[c] for c in class_indices]
        neigh = {i: tuple(j for j in self.cm.neighbors(i) if j in kset) for i in K}

        lifts = [s for s in _connected_subsets(neigh, K)
                 if all(any(i in s for i in p) for p in parts)]
        if not lifts:
            raise NoLift(f"no connected subset of {list(K)} meets every class")
        lifts.sort(key=len)
        minimal: list[frozenset[int]] = []
        for s in lifts:
            if not any(m <= s for m in minimal):
                minimal.append(s)
        vectors = [tuple(len(s & set(p)) for p in parts) for s in minimal]
        meet = tuple(min(col) for col in zip(*vectors))
        equi = meet in vectors
        ordered = sorted(tuple(sorted(s)) for s in minimal)
        lean = sorted(tuple(sorted(s)) for s, v in zip(minimal, vectors) if v == meet)
        return LiftData(tuple(ordered), tuple(lean) if equi else (),
                        equi, tuple(class_indices), meet if equi else None)

    def lean_lifts(self, nodes: Iterable[int]):
        """Inclusion-minimal lifts, the lean ones among them, and the verdict."""
        data = self.lift_data(nodes)
        return data.lifts, data.lean, data.equiconnected

    # -- symmetric indices and folded markers ------------------------------

    def check_symmetric(self, pv: PVIndex) -> None:
        """Pairings must agree within every class meeting the index nodes."""
        lam = pv.as_map()
        for part in self.partition.classes:
            values = {lam[i] for i in part if i in lam}
            if len(values) > 1:
                raise NotSymmetric(
                    f"pairings differ on the class {list(part)}")

    def marker_exponent(self, pv: PVIndex) -> tuple[int, ...]:
        """Folded marker of a symmetric index on an equiconnected class union.

        Coordinate at a class of the index: lean-lift count times
        (pairing + 1).  Lean lifts share their counts, so the result does
        not depend on which one is used.
        """
        self.check_symmetric(pv)
        data = self.lift_data(pv.nodes)
        if not data.equiconnected:
            raise NotEquiconnected(f"{list(pv.nodes)} is not equiconnected")
        lam = pv.as_map()
        out = [0] * self.partition.num_classes
        assert data.lean_counts is not None
        for c, count in zip(data.class_indices, data.lean_counts):
            node = self.partition.classes[c][0]
            out[c] = count * (lam[node] + 1)
        return tuple(out)

    # -- series ------------------------------------------------------------

    def fold_series(self, series: Series) -> Series:
        """Collapse a node-indexed series to class variables."""
        return series.fold(self.partition.classes)

    def fold_log_numerator(self, pv: PVIndex, cap: int) -> Series:
        return self.fold_series(log_numerator(self.cm, pv, cap))

    def symmetric_index(self, nodes: Iterable[int], class_pairings: dict[int, int]) -> PVIndex:
        """Build the symmetric index with one pairing value per class index."""
        K = self.cm.check_nodes(nodes)
        lam = {i: class_pairings[self.partition.class_index(i)] for i in K}
        return PVIndex.from_map(K, lam)
