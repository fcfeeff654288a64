"""
Gabra — Finite Groups
Finite p-groups stored as explicit Cayley tables on element indices.
Index 0 is always the identity.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from config import MAX_GROUP_ORDER

logger = logging.getLogger(__name__)


class GroupError(ValueError):
    """A multiplication table that does not describe a group we accept."""


def _frozen(array) -> np.ndarray:
    out = np.array(array, dtype=np.int64)
    out.setflags(write=False)
    return out


class FiniteGroup:
    """
    A finite group given by its Cayley table.

    cayley[i, j] is the index of element_i * element_j. Construction runs the
    full axiom check (identity, Latin square, inverses, associativity,
    generation), so every FiniteGroup in circulation is a valid group.
    """

    def __init__(
        self,
        cayley,
        generators,
        labels,
        name: str = "group",
    ):
        self.cayley = _frozen(cayley)
        if self.cayley.ndim != 2 or self.cayley.shape[0] != self.cayley.shape[1]:
            raise GroupError(f"{name}: Cayley table must be square, got shape {self.cayley.shape}")
        self.order = int(self.cayley.shape[0])
        if self.order < 1:
            raise GroupError(f"{name}: empty table")
        if self.order > MAX_GROUP_ORDER:
            raise GroupError(f"{name}: order {self.order} exceeds the limit of {MAX_GROUP_ORDER}")
        self.generators = tuple(int(g) for g in generators)
        self.labels = tuple(labels)
        self.name = name
        if len(self.labels) != self.order:
            raise GroupError(f"{name}: expected {self.order} labels, got {len(self.labels)}")
        if len(set(self.labels)) != self.order:
            raise GroupError(f"{name}: labels are not distinct")
        self.inverse = _frozen(self._inverse_table())
        self._check_axioms()
        logger.debug("built group %s of order %d", name, self.order)

    def _inverse_table(self) -> np.ndarray:
        T = self.cayley
        if T.min() < 0 or T.max() >= self.order:
            raise GroupError(f"{self.name}: table entries out of range")
        inverse = np.argmin(T, axis=1)
        if not np.all(T[np.arange(self.order), inverse] == 0):
            raise GroupError(f"{self.name}: some element has no inverse")
        return inverse

    def _check_axioms(self):
        T = self.cayley
        n = self.order
        idx = np.arange(n)
        if not (np.array_equal(T[0], idx) and np.array_equal(T[:, 0], idx)):
            raise GroupError(f"{self.name}: index 0 is not the identity")
        rows_ok = np.all(np.sort(T, axis=1) == idx)
        cols_ok = np.all(np.sort(T, axis=0) == idx[:, None])
        if not (rows_ok and cols_ok):
            raise GroupError(f"{self.name}: table is not a Latin square")
        if not np.all(T[idx, self.inverse] == 0):
            raise GroupError(f"{self.name}: inverse law fails")
        # (ij)k == i(jk) for every triple
        if not np.array_equal(T[T, :], T[:, T]):
            raise GroupError(f"{self.name}: table is not associative")
        if any(g < 0 or g >= n for g in self.generators):
            raise GroupError(f"{self.name}: generator index out of range")
        if len(self.generated_by(self.generators)) != n:
            raise GroupError(f"{self.name}: generators do not generate the group")

    def mul(self, i: int, j: int) -> int:
        return int(self.cayley[i, j])

    def inv(self, i: int) -> int:
        return int(self.inverse[i])

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return int(self.cayley[self.cayley[self.inverse[g], x], g])

    def generated_by(self, generators) -> frozenset[int]:
        """Closure of the given indices under the table (identity included)."""
        seen = {0}
        frontier = [0]
        gens = [int(g) for g in generators]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.cayley[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupError(f"{self.name}: no element labelled {label!r}") from None

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


@dataclass(frozen=True)
class ConjugacyPartition:
    """Conjugacy classes, each a sorted tuple of indices; classes ordered by their minimum."""

    classes: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self, i: int) -> int:
        for k, cls in enumerate(self.classes):
            if i in cls:
                return k
        raise IndexError(f"element {i} is in no class")

    def __len__(self) -> int:
        return len(self.classes)


def group_center(G: FiniteGroup) -> frozenset[int]:
    """Indices z with z*i == i*z for every i."""
    T = G.cayley
    commuting = np.all(T == T.T, axis=1)
    return frozenset(int(z) for z in np.flatnonzero(commuting))


def conjugacy_classes(G: FiniteGroup) -> ConjugacyPartition:
    T = G.cayley
    n = G.order
    # conj[g, x] = g^-1 x g
    conj = T[T[G.inverse], np.arange(n)[:, None]]
    seen: set[int] = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        cls = tuple(sorted({int(y) for y in conj[:, x]}))
        seen.update(cls)
        classes.append(cls)
    return ConjugacyPartition(tuple(classes))


def element_order(G: FiniteGroup, i: int) -> int:
    m, x = 1, i
    while x != 0:
        x = G.mul(x, i)
        m += 1
    return m


def exponent(G: FiniteGroup) -> int:
    return int(np.lcm.reduce([element_order(G, i) for i in range(G.order)]))


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None, labels=None) -> FiniteGroup:
    """
    A x B with element (a, b) at index a + |A|*b.

    Labels default to the '*'-joined non-identity factor labels; callers that
    need distinct letters across factors pass their own.
    """
    na, nb = A.order, B.order
    a = np.tile(np.arange(na), nb)
    b = np.repeat(np.arange(nb), na)
    cayley = A.cayley[a[:, None], a[None, :]] + na * B.cayley[b[:, None], b[None, :]]
    if labels is None:
        labels = [_join_labels(A.labels[i], B.labels[j]) for i, j in zip(a, b)]
    generators = list(A.generators) + [na * g for g in B.generators]
    return FiniteGroup(cayley, generators, labels, name=name or f"{A.name}x{B.name}")


def _join_labels(left: str, right: str) -> str:
    parts = [s for s in (left, right) if s != "1"]
    return "*".join(parts) if parts else "1"
