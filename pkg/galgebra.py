"""
Gabra — Group Algebra
Arithmetic in the modular group algebra KG of a finite p-group G over GF(p).
"""
from __future__ import annotations

import logging
import re

import numpy as np
from sympy import isprime

from groups import ConjugacyPartition, FiniteGroup, conjugacy_classes, group_center
from catalog.abelian import prime_of

logger = logging.getLogger(__name__)

INT64_MAX = int(np.iinfo(np.int64).max)


class ModularityError(ValueError):
    """p is not prime, or |G| is not a power of p."""


class ContextMismatchError(ValueError):
    """Operands live in different group algebras."""


class NotNormalizedError(ValueError):
    """An element that must have augmentation 1 does not."""


class NilpotencyError(RuntimeError):
    """The geometric series for an inverse failed to terminate within |G| + 1 terms."""


class ElementParseError(ValueError):
    """Formal-sum text that does not describe an element of the algebra."""


class AlgebraContext:
    """
    The pairing of a finite p-group G with the prime p.

    Everything derived from (G, p) is computed once here: inversion orbits,
    conjugacy classes and their class sums, and the index tables behind the
    product. A context never changes after construction.
    """

    def __init__(self, group: FiniteGroup, p: int):
        if not isinstance(p, (int, np.integer)) or not isprime(int(p)):
            raise ModularityError(f"characteristic must be a prime, got {p!r}")
        p = int(p)
        if group.order > 1 and prime_of(group.order) != p:
            raise ModularityError(
                f"modular condition violated: |{group.name}| = {group.order} is not a power of {p}"
            )
        # products accumulate up to |G| * (p - 1)^2 in int64
        if group.order * (p - 1) ** 2 > INT64_MAX:
            raise ModularityError(f"characteristic {p} is too large for int64 arithmetic over {group.name}")
        self.group = group
        self.p = p
        self.n = group.order
        # one byte per coefficient while it fits; big-endian words keep key order lexicographic
        self.key_dtype = np.dtype(np.uint8) if p <= 256 else np.dtype(">u8")

        inverse = group.inverse
        self.inversion_orbits: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted({i, int(inverse[i])})) for i in range(self.n) if i <= inverse[i]
        )
        orbit_of = np.empty(self.n, dtype=np.int64)
        for k, orbit in enumerate(self.inversion_orbits):
            orbit_of[list(orbit)] = k
        orbit_of.setflags(write=False)
        self.orbit_of = orbit_of

        # ldiv[i, k] = g_i^-1 g_k and rdiv[j, k] = g_k g_j^-1
        self._ldiv = group.cayley[inverse, :]
        self._rdiv = group.cayley[:, inverse].T.copy()
        self._rdiv.setflags(write=False)

        self.conjugacy: ConjugacyPartition = conjugacy_classes(group)
        self.center: frozenset[int] = group_center(group)
        self.class_sum_cache: tuple[AlgebraElement, ...] = tuple(
            self.element(_indicator(self.n, cls)) for cls in self.conjugacy.classes
        )
        self.one = self.embed(0)
        self.zero = self.element(np.zeros(self.n, dtype=np.int64))

    def element(self, coeffs) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def embed(self, g: int) -> AlgebraElement:
        return self.element(_indicator(self.n, [g]))

    def right_matrix(self, y: AlgebraElement) -> np.ndarray:
        """R with x.coeffs @ R == (x * y).coeffs (before reduction mod p)."""
        return y.coeffs[self._ldiv]

    def left_matrix(self, y: AlgebraElement) -> np.ndarray:
        """L with x.coeffs @ L == (y * x).coeffs (before reduction mod p)."""
        return y.coeffs[self._rdiv]

    def __repr__(self) -> str:
        return f"AlgebraContext(GF({self.p})[{self.group.name}])"


def _indicator(n: int, indices) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    v[list(indices)] = 1
    return v


class AlgebraElement:
    """An element sum(lambda_g g) of KG, stored as its coefficient vector mod p."""

    __slots__ = ("context", "coeffs", "key")

    def __init__(self, context: AlgebraContext, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.shape != (context.n,):
            raise ValueError(f"expected {context.n} coefficients, got shape {arr.shape}")
        arr = arr % context.p
        arr.setflags(write=False)
        self.context = context
        self.coeffs = arr
        self.key = arr.astype(context.key_dtype).tobytes()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.context is other.context and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: AlgebraElement) -> bool:
        return self.key < other.key

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        _check_same(self, other)
        return self.context.element(self.coeffs - other.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.context.element(self.coeffs * int(other))
        return mul(self, other)

    def __pow__(self, k: int):
        if k < 0:
            return inverse_normalized(self) ** (-k)
        result, base = self.context.one, self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({format_element(self)!r})"


def _check_same(x: AlgebraElement, y: AlgebraElement):
    if x.context is not y.context:
        raise ContextMismatchError(f"operands from {x.context!r} and {y.context!r}")


# === Ring operations ===

def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check_same(x, y)
    return x.context.element(x.coeffs + y.coeffs)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """
    Convolution product: coefficient of g_k is the sum of x_i * y_j over g_i g_j = g_k.

    Only the support of x is visited; for each g_i in it, y is permuted by
    g_k -> g_i^-1 g_k.
    """
    _check_same(x, y)
    ctx = x.context
    s = x.support()
    if len(s) == 0:
        return ctx.zero
    out = (x.coeffs[s, None] * y.coeffs[ctx._ldiv[s]]).sum(axis=0)
    return ctx.element(out)


def involution(x: AlgebraElement) -> AlgebraElement:
    """Classical involution: sum(lambda_g g) -> sum(lambda_g g^-1)."""
    ctx = x.context
    # inverse is its own inverse permutation
    return ctx.element(x.coeffs[ctx.group.inverse])


def augmentation(x: AlgebraElement) -> int:
    return int(x.coeffs.sum() % x.context.p)


def inverse_normalized(x: AlgebraElement) -> AlgebraElement:
    """
    Inverse of a normalized unit x = 1 + z, z in the augmentation ideal.

    z is nilpotent, so x^-1 = 1 - z + z^2 - ... + (-z)^(m-1) where z^m = 0.
    """
    if augmentation(x) != 1:
        raise NotNormalizedError(f"{x} has augmentation {augmentation(x)}, not 1")
    ctx = x.context
    neg_z = ctx.one - x
    total, term = ctx.zero, ctx.one
    for m in range(ctx.n + 2):
        if term.is_zero:
            logger.debug("inverted %s with nilpotency index %d", x, m)
            return total
        total = total + term
        term = mul(term, neg_z)
    raise NilpotencyError(f"series for the inverse of {x} did not terminate in {ctx.n + 1} terms")


def nilpotency_index(z: AlgebraElement) -> int:
    """Least m with z^m = 0, for z in the augmentation ideal."""
    if augmentation(z) != 0:
        raise ValueError(f"{z} is not in the augmentation ideal")
    ctx = z.context
    power = ctx.one
    for m in range(ctx.n + 2):
        if power.is_zero:
            return m
        power = mul(power, z)
    raise NilpotencyError(f"{z} is not nilpotent within {ctx.n + 1} steps")


def class_sum(ctx: AlgebraContext, class_index: int) -> AlgebraElement:
    if not 0 <= class_index < len(ctx.class_sum_cache):
        raise IndexError(f"class index {class_index} out of range 0..{len(ctx.class_sum_cache) - 1}")
    return ctx.class_sum_cache[class_index]


def is_central(x: AlgebraElement) -> bool:
    """Commutes with every group generator, hence with all of KG."""
    ctx = x.context
    for g in ctx.group.generators:
        e = ctx.embed(g)
        if mul(x, e) != mul(e, x):
            return False
    return True


def is_symmetric(x: AlgebraElement) -> bool:
    return involution(x) == x


def is_orbit_constant(x: AlgebraElement) -> bool:
    """Coefficients agree on g and g^-1 for every g."""
    ctx = x.context
    return all(len({int(x.coeffs[i]) for i in orbit}) == 1 for orbit in ctx.inversion_orbits)


def commutes(x: AlgebraElement, y: AlgebraElement) -> bool:
    return mul(x, y) == mul(y, x)


# === Sampling ===

def random_element(ctx: AlgebraContext, rng: np.random.Generator) -> AlgebraElement:
    return ctx.element(rng.integers(0, ctx.p, size=ctx.n))


def random_normalized_unit(ctx: AlgebraContext, rng: np.random.Generator) -> AlgebraElement:
    """Uniform over the elements of augmentation 1."""
    coeffs = rng.integers(0, ctx.p, size=ctx.n)
    coeffs[0] = (1 - coeffs[1:].sum()) % ctx.p
    return ctx.element(coeffs)


# === Text format ===

_TERM_RE = re.compile(r"^(\d+)\s*\*\s*(\S.*)$")


def format_element(x: AlgebraElement) -> str:
    """'1 + a + 2*a^2*b'; the identity term shows only its coefficient, zero prints '0'."""
    labels = x.context.group.labels
    terms = []
    for i in x.support():
        c = int(x.coeffs[i])
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(labels[i])
        else:
            terms.append(f"{c}*{labels[i]}")
    return " + ".join(terms) if terms else "0"


def parse_element(ctx: AlgebraContext, text: str) -> AlgebraElement:
    """Inverse of format_element; repeated labels accumulate."""
    text = text.strip()
    if not text:
        raise ElementParseError("empty element text")
    coeffs = np.zeros(ctx.n, dtype=np.int64)
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ElementParseError(f"empty term in {text!r}")
        match = _TERM_RE.match(term)
        if match:
            c, label = int(match.group(1)), match.group(2).strip()
        elif term.isdigit():
            c, label = int(term), "1"
        else:
            c, label = 1, term
        if label == "1":
            index = 0
        else:
            try:
                index = ctx.group.labels.index(label)
            except ValueError:
                raise ElementParseError(f"unknown element {label!r} in {ctx.group.name}") from None
        coeffs[index] += c
    return ctx.element(coeffs)
