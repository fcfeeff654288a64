"""
Abelian catalog atoms: cyclic groups c{m} and elementary abelian groups elem{p}e{k}.
"""
from sympy import factorint, isprime

from groups import FiniteGroup, direct_product


def power_label(letter: str, k: int) -> str:
    if k == 0:
        return "1"
    return letter if k == 1 else f"{letter}^{k}"


def word_label(*factors: tuple[str, int]) -> str:
    """'a^2*b' from (('a', 2), ('b', 1)); identity factors drop out."""
    parts = [power_label(letter, k) for letter, k in factors if k]
    return "*".join(parts) if parts else "1"


def prime_of(m: int) -> int | None:
    """The prime p with m = p^k (k >= 1), else None."""
    if m < 2:
        return None
    factors = factorint(m)
    if len(factors) != 1:
        return None
    return next(iter(factors))


def cyclic(m: int, letter: str = "g", name: str | None = None) -> FiniteGroup:
    """C_m with element g^i at index i."""
    idx = list(range(m))
    cayley = [[(i + j) % m for j in idx] for i in idx]
    generators = [1] if m > 1 else []
    labels = [power_label(letter, i) for i in idx]
    return FiniteGroup(cayley, generators, labels, name=name or f"c{m}")


def elementary_abelian(p: int, k: int, letters: list[str]) -> FiniteGroup:
    """(C_p)^k as an iterated direct product, first factor varying fastest."""
    if not isprime(p):
        raise ValueError(f"elem{p}e{k}: {p} is not prime")
    if k < 1:
        raise ValueError(f"elem{p}e{k}: rank must be at least 1")
    name = f"elem{p}e{k}"
    if k == 1:
        return cyclic(p, letters[0], name=name)
    group = cyclic(p, letters[0])
    for pos, letter in enumerate(letters[1:k], start=2):
        group = direct_product(group, cyclic(p, letter), name=name if pos == k else None)
    return group
