"""
Gabra — Unit Groups
Normalized units V(KG), symmetric units S*, subgroup closures, and the
conjecture check V(KG) = <G, S*>.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from config import JSON_FIELDS, resolve_cap
from catalog import build_group
from galgebra import (
    AlgebraContext,
    AlgebraElement,
    NotNormalizedError,
    augmentation,
    involution,
    is_central,
    mul,
)

logger = logging.getLogger(__name__)

KIND_NOT_SYMMETRIC = "not-symmetric"
KIND_TRIVIAL = "trivial"
KIND_FIXED = "non-trivial, pointwise fixed"
KIND_MIXED = "non-trivial, mixed"


class CapExceededError(RuntimeError):
    """A set would grow past the configured cap."""

    def __init__(self, size: int, cap: int, what: str = "set", partial: bool = False):
        self.size = size
        self.cap = cap
        self.partial = partial
        reached = "reached at least" if partial else "would have"
        super().__init__(f"{what} {reached} {size} members, over the cap of {cap}")


class PreconditionError(ValueError):
    """Inputs that violate an operation's stated precondition."""


class UnitSet:
    """
    A finite set of normalized units, keyed by coefficient vector.

    `closed` records that the set was verified (or built) closed under the
    product. Iteration is in lexicographic order of coefficient vectors.
    """

    def __init__(self, context: AlgebraContext, members: Iterable[AlgebraElement] = (), closed: bool = False):
        self.context = context
        self._members: dict[bytes, AlgebraElement] = {}
        for x in members:
            if x.context is not context:
                raise PreconditionError("member from a different algebra")
            if augmentation(x) != 1:
                raise NotNormalizedError(f"{x} has augmentation {augmentation(x)}, not 1")
            self._members[x.key] = x
        self.closed = closed

    @classmethod
    def from_matrix(cls, context: AlgebraContext, rows: np.ndarray, closed: bool = False) -> UnitSet:
        out = cls(context, closed=closed)
        for row in rows:
            x = AlgebraElement(context, row)
            out._members[x.key] = x
        return out

    def keys(self) -> set[bytes]:
        return set(self._members)

    def elements(self) -> list[AlgebraElement]:
        return [self._members[k] for k in sorted(self._members)]

    def matrix(self) -> np.ndarray:
        if not self._members:
            return np.zeros((0, self.context.n), dtype=np.int64)
        return np.stack([x.coeffs for x in self.elements()])

    def __contains__(self, x: AlgebraElement) -> bool:
        return x.context is self.context and x.key in self._members

    def __iter__(self):
        return iter(self.elements())

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitSet):
            return NotImplemented
        return self.context is other.context and self._members.keys() == other._members.keys()

    def __repr__(self) -> str:
        return f"UnitSet({self.context!r}, size={len(self)}, closed={self.closed})"


def _row_keys(ctx: AlgebraContext, rows: np.ndarray) -> list[bytes]:
    packed = np.ascontiguousarray(rows.astype(ctx.key_dtype))
    return [row.tobytes() for row in packed]


# === V(KG) and S* ===

def order_of_V(ctx: AlgebraContext) -> int:
    return ctx.p ** (ctx.n - 1)


def _all_vectors(p: int, length: int) -> np.ndarray:
    """Every vector of GF(p)^length, first coordinate varying fastest."""
    count = p ** length
    codes = np.arange(count, dtype=np.int64)[:, None]
    return (codes // (p ** np.arange(length, dtype=np.int64))) % p


def enumerate_normalized_units(ctx: AlgebraContext, cap: int | None = None) -> UnitSet:
    """
    All elements of augmentation 1, which in the modular setting are exactly
    the normalized units: p^(|G|-1) of them.
    """
    cap = resolve_cap(cap)
    size = order_of_V(ctx)
    if size > cap:
        raise CapExceededError(size, cap, what=f"V(K{ctx.group.name})")
    free = _all_vectors(ctx.p, ctx.n - 1)
    identity = (1 - free.sum(axis=1)) % ctx.p
    rows = np.column_stack([identity, free])
    logger.debug("enumerated %d normalized units of K%s", size, ctx.group.name)
    return UnitSet.from_matrix(ctx, rows, closed=True)


def symmetric_units(ctx: AlgebraContext, cap: int | None = None) -> UnitSet:
    """
    S* built on the inversion-orbit basis: coefficients constant on each
    {g, g^-1}, with augmentation 1. Size p^(d-1) for d orbits.

    The identity is a singleton orbit, so its coefficient is fixed by the
    other d-1 orbit coefficients.
    """
    cap = resolve_cap(cap)
    orbits = ctx.inversion_orbits
    size = ctx.p ** (len(orbits) - 1)
    if size > cap:
        raise CapExceededError(size, cap, what=f"S*(K{ctx.group.name})")
    sizes = np.array([len(o) for o in orbits[1:]], dtype=np.int64)
    free = _all_vectors(ctx.p, len(orbits) - 1)
    identity = (1 - free @ sizes) % ctx.p
    tuples = np.column_stack([identity, free])
    rows = tuples[:, ctx.orbit_of]
    result = UnitSet.from_matrix(ctx, rows)
    result.closed = is_subgroup(result)
    return result


def symmetric_units_bruteforce(ctx: AlgebraContext, cap: int | None = None) -> UnitSet:
    """Filter of all normalized units by x* = x."""
    rows = enumerate_normalized_units(ctx, cap).matrix()
    fixed = np.all(rows[:, ctx.group.inverse] == rows, axis=1)
    result = UnitSet.from_matrix(ctx, rows[fixed])
    result.closed = is_subgroup(result)
    return result


def embedded_group(ctx: AlgebraContext) -> UnitSet:
    return UnitSet(ctx, (ctx.embed(g) for g in range(ctx.n)), closed=True)


def embedded_center(ctx: AlgebraContext) -> UnitSet:
    return UnitSet(ctx, (ctx.embed(z) for z in sorted(ctx.center)), closed=True)


# === Closure ===

def closure(ctx: AlgebraContext, generators: Iterable[AlgebraElement], cap: int | None = None) -> UnitSet:
    """
    Smallest product-closed set containing one and the generators.

    Generators already inside the running closure are skipped, so at most
    log_p |H| of them are ever expanded. Each expansion is a breadth-first
    search multiplying the frontier by every kept generator on both sides,
    one batched matrix product per generator and side.
    """
    cap = resolve_cap(cap)
    p = ctx.p
    seen: dict[bytes, np.ndarray] = {ctx.one.key: ctx.one.coeffs}
    kept: list[AlgebraElement] = []

    for g in generators:
        if g.context is not ctx:
            raise PreconditionError("generator from a different algebra")
        if augmentation(g) != 1:
            raise NotNormalizedError(f"generator {g} has augmentation {augmentation(g)}, not 1")
        if g.key in seen:
            continue
        kept.append(g)
        actions = [ctx.right_matrix(h) for h in kept] + [ctx.left_matrix(h) for h in kept]
        # the old set is already closed under the old generators
        step_actions = [ctx.right_matrix(g), ctx.left_matrix(g)]
        frontier = np.stack(list(seen.values()))
        while len(frontier):
            fresh = []
            for action in step_actions:
                products = (frontier @ action) % p
                for key, row in zip(_row_keys(ctx, products), products):
                    if key not in seen:
                        seen[key] = row
                        fresh.append(row)
                if len(seen) > cap:
                    raise CapExceededError(len(seen), cap, what="closure", partial=True)
            frontier = np.stack(fresh) if fresh else np.zeros((0, ctx.n), dtype=np.int64)
            step_actions = actions
        logger.debug("closure: %d generators kept, %d members", len(kept), len(seen))

    return UnitSet.from_matrix(ctx, np.stack(list(seen.values())), closed=True)


# === Subset properties ===

def is_subgroup(H: UnitSet) -> bool:
    """Contains one and is closed under the product."""
    ctx = H.context
    if ctx.one not in H:
        return False
    try:
        grown = closure(ctx, H.elements(), cap=len(H))
    except CapExceededError:
        return False
    return len(grown) == len(H)


def is_symmetric_subset(H: UnitSet) -> bool:
    """H* == H as sets."""
    return {involution(h).key for h in H} == H.keys()


def star_image(H: UnitSet) -> UnitSet:
    """H* = {h* : h in H}; the image of a subgroup is again a subgroup."""
    image = UnitSet(H.context, (involution(h) for h in H))
    if H.closed:
        if not is_subgroup(image):
            raise RuntimeError(f"star image of a subgroup of order {len(H)} is not a subgroup")
        image.closed = True
    return image


def symmetric_members(H: UnitSet) -> UnitSet:
    return UnitSet(H.context, (h for h in H if involution(h) == h))


def commutes_pairwise(H: UnitSet) -> bool:
    ctx = H.context
    rows = H.matrix()
    for x in H:
        xy = (rows @ ctx.left_matrix(x)) % ctx.p
        yx = (rows @ ctx.right_matrix(x)) % ctx.p
        if not np.array_equal(xy, yx):
            return False
    return True


def intersection(H1: UnitSet, H2: UnitSet) -> UnitSet:
    if H1.context is not H2.context:
        raise PreconditionError("sets from different algebras")
    return UnitSet(H1.context, (h for h in H1 if h in H2))


def product_set(H1: UnitSet, H2: UnitSet, cap: int | None = None) -> UnitSet:
    """{h1 h2 : h1 in H1, h2 in H2}."""
    if H1.context is not H2.context:
        raise PreconditionError("sets from different algebras")
    cap = resolve_cap(cap)
    ctx = H1.context
    left = H1.matrix()
    seen: dict[bytes, np.ndarray] = {}
    for h2 in H2:
        products = (left @ ctx.right_matrix(h2)) % ctx.p
        for key, row in zip(_row_keys(ctx, products), products):
            seen.setdefault(key, row)
        if len(seen) > cap:
            raise CapExceededError(len(seen), cap, what="product set", partial=True)
    return UnitSet.from_matrix(ctx, np.stack(list(seen.values())))


def conjugate(H: UnitSet, g: AlgebraElement) -> UnitSet:
    """{g^-1 h g : h in H}."""
    g_inv = g ** -1
    return UnitSet(H.context, (mul(mul(g_inv, h), g) for h in H), closed=H.closed)


def classify_symmetric_subgroup(H: UnitSet) -> str:
    """
    'trivial' for {1}, the embedded group and V itself; otherwise whether the
    involution fixes H pointwise or moves some of its members.
    """
    if not is_symmetric_subset(H):
        return KIND_NOT_SYMMETRIC
    ctx = H.context
    if len(H) == 1 or len(H) == order_of_V(ctx) or H == embedded_group(ctx):
        return KIND_TRIVIAL
    if len(symmetric_members(H)) == len(H):
        return KIND_FIXED
    return KIND_MIXED


# === Conjecture check ===

@dataclass
class ConjectureReport:
    """Verdict on V(KG) = <G, S*> for one group and prime."""

    group_name: str
    p: int
    order_group: int
    order_V: int
    order_S: int
    order_H: int
    S_is_subgroup: bool
    S_central: bool
    H_symmetric: bool
    conjecture_holds: bool
    enumerated_V: bool
    H_kind: str = ""
    H_symmetric_members: int = 0

    def to_dict(self) -> dict:
        values = {
            "group": self.group_name,
            "prime": self.p,
            "order_group": self.order_group,
            "order_V": self.order_V,
            "order_S": self.order_S,
            "order_H": self.order_H,
            "S_is_subgroup": self.S_is_subgroup,
            "S_central": self.S_central,
            "H_symmetric": self.H_symmetric,
            "conjecture_holds": self.conjecture_holds,
            "enumerated_V": self.enumerated_V,
        }
        return {field: values[field] for field in JSON_FIELDS}


def check_conjecture(spec: str, p: int, cap: int | None = None) -> ConjectureReport:
    """
    Run the full pipeline for one group.

    1. Build G and the algebra KG over GF(p)
    2. |V| = p^(|G|-1); enumerate V to confirm it when within the cap
    3. S* from the inversion-orbit basis; test it for subgroup and centrality
    4. H = closure of the embedded G together with S*
    5. Compare |H| with |V| and describe H under the involution
    """
    cap = resolve_cap(cap)
    ctx = AlgebraContext(build_group(spec), p)
    name = ctx.group.name

    order_V = order_of_V(ctx)
    enumerated = order_V <= cap
    if enumerated:
        V = enumerate_normalized_units(ctx, cap)
        if len(V) != order_V:
            raise RuntimeError(f"enumerated {len(V)} units of K{name}, expected {order_V}")
    else:
        logger.warning("K%s: |V| = %d is over the cap of %d; enumeration skipped", name, order_V, cap)

    S = symmetric_units(ctx, cap)
    S_central = all(is_central(s) for s in S)

    G_emb = embedded_group(ctx)
    H = closure(ctx, list(G_emb) + list(S), cap)
    if order_V % len(H):
        raise RuntimeError(f"|H| = {len(H)} does not divide |V| = {order_V}")

    report = ConjectureReport(
        group_name=name,
        p=ctx.p,
        order_group=ctx.n,
        order_V=order_V,
        order_S=len(S),
        order_H=len(H),
        S_is_subgroup=S.closed,
        S_central=S_central,
        H_symmetric=is_symmetric_subset(H),
        conjecture_holds=len(H) == order_V,
        enumerated_V=enumerated,
        H_kind=classify_symmetric_subgroup(H),
        H_symmetric_members=len(symmetric_members(H)),
    )
    logger.info("K%s over GF(%d): |V|=%d |S*|=%d |<G,S*>|=%d", name, ctx.p, order_V, len(S), len(H))
    return report


def central_product_check(G_emb: UnitSet, S: UnitSet, cap: int | None = None) -> bool:
    """
    <G, S> for a central subgroup S: |<G, S>| = |S| |G| / |G n S| and
    G n S lies in the center of G.

    Containment rather than equality with Z(G): for S = {1} the meet is
    trivial while Z(G) need not be.
    """
    ctx = G_emb.context
    if S.context is not ctx:
        raise PreconditionError("sets from different algebras")
    if not is_subgroup(S):
        raise PreconditionError("S is not a subgroup")
    if not all(is_central(s) for s in S):
        raise PreconditionError("S is not central in KG")

    meet = intersection(G_emb, S)
    H = closure(ctx, list(G_emb) + list(S), cap)
    size_ok = len(H) * len(meet) == len(S) * len(G_emb)
    center_ok = meet.keys() <= embedded_center(ctx).keys()
    logger.debug(
        "central product: |H|=%d, |S||G|/|G n S| = %d*%d/%d, meet in center: %s",
        len(H), len(S), len(G_emb), len(meet), center_ok,
    )
    return size_ok and center_ok
