"""
Gabra — Group Catalog
Atom definitions and the group-spec parser.

Grammar: atom ( "x" atom )*, case-insensitive. Atoms:
    q8 | d{n} | c{m} | elem{p}e{k}
"""
import re

from config import MAX_GROUP_ORDER
from groups import FiniteGroup, GroupError, direct_product
from catalog.abelian import cyclic, elementary_abelian, prime_of
from catalog.nonabelian import dihedral, quaternion

# Letters handed out across the factors of a product spec ('x' is the separator).
LETTER_POOL = "abcdefghijklmnopqrstuvwyz"


class GroupSpecError(ValueError):
    """Malformed spec string, unknown atom, or an order that is not a prime power."""


def _build_q8(match, letters):
    return quaternion(tuple(letters) if letters else ("a", "b"))


def _build_dihedral(match, letters):
    n = int(match.group(1))
    if prime_of(n) != 2 or n < 4:
        raise GroupSpecError(f"d{n}: only dihedral 2-groups (order 4, 8, 16, ...) are in the catalog")
    return dihedral(n, tuple(letters) if letters else ("r", "s"))


def _build_cyclic(match, letters):
    m = int(match.group(1))
    if m != 1 and prime_of(m) is None:
        raise GroupSpecError(f"c{m}: order {m} is not a prime power")
    return cyclic(m, letters[0] if letters else "g")


def _build_elementary(match, letters):
    p, k = int(match.group(1)), int(match.group(2))
    if prime_of(p) != p:
        raise GroupSpecError(f"elem{p}e{k}: {p} is not prime")
    if k < 1:
        raise GroupSpecError(f"elem{p}e{k}: rank must be at least 1")
    return elementary_abelian(p, k, list(letters) if letters else list(LETTER_POOL[:k]))


ATOMS = [
    {
        "name": "q8",
        "pattern": re.compile(r"q8"),
        "description": "quaternion group of order 8",
        "builder": _build_q8,
        "letters": lambda m: 2,
        "order": lambda m: 8,
    },
    {
        "name": "d{n}",
        "pattern": re.compile(r"d(\d+)"),
        "description": "dihedral group of order n (a power of two, n >= 4)",
        "builder": _build_dihedral,
        "letters": lambda m: 2,
        "order": lambda m: int(m.group(1)),
    },
    {
        "name": "c{m}",
        "pattern": re.compile(r"c(\d+)"),
        "description": "cyclic group of prime-power order m",
        "builder": _build_cyclic,
        "letters": lambda m: 1,
        "order": lambda m: int(m.group(1)),
    },
    {
        "name": "elem{p}e{k}",
        "pattern": re.compile(r"elem(\d+)e(\d+)"),
        "description": "elementary abelian group of order p^k",
        "builder": _build_elementary,
        "letters": lambda m: int(m.group(2)),
        "order": lambda m: int(m.group(1)) ** min(int(m.group(2)), MAX_GROUP_ORDER.bit_length()),
    },
]


def _match_atom(atom: str):
    for entry in ATOMS:
        match = entry["pattern"].fullmatch(atom)
        if match:
            return entry, match
    raise GroupSpecError(f"unknown group atom {atom!r}")


def get_atoms_description() -> str:
    """Human-readable list of catalog atoms."""
    return "\n".join(f"- {entry['name']}: {entry['description']}" for entry in ATOMS)


def build_group(spec: str) -> FiniteGroup:
    """
    Build and validate the group named by a spec string such as 'q8' or 'c4xc2'.

    A single atom keeps its customary letters (g for cyclic, a/b for q8, r/s
    for dihedral); in a product every factor draws fresh letters from
    LETTER_POOL in order, so labels stay unique and deterministic.
    """
    if not isinstance(spec, str) or not spec.strip():
        raise GroupSpecError("empty group spec")
    normalized = spec.strip().lower()
    atoms = normalized.split("x")
    if any(not a for a in atoms):
        raise GroupSpecError(f"malformed group spec {spec!r}")

    resolved = [_match_atom(a) for a in atoms]
    # refuse oversized groups before any table is built
    order = 1
    for entry, match in resolved:
        order *= entry["order"](match)
        if order > MAX_GROUP_ORDER:
            raise GroupSpecError(f"{spec!r}: order exceeds the limit of {MAX_GROUP_ORDER}")
    product = len(resolved) > 1
    needed = sum(entry["letters"](match) for entry, match in resolved)
    if product and needed > len(LETTER_POOL):
        raise GroupSpecError(f"{spec!r}: too many generators")

    factors = []
    cursor = 0
    for entry, match in resolved:
        letters = None
        if product:
            count = entry["letters"](match)
            letters = LETTER_POOL[cursor:cursor + count]
            cursor += count
        try:
            factors.append(entry["builder"](match, letters))
        except GroupError as e:
            raise GroupSpecError(str(e)) from e

    primes = {prime_of(f.order) for f in factors if f.order > 1}
    if len(primes) > 1:
        raise GroupSpecError(
            f"{spec!r}: order {order} is not a prime power (factors over primes {sorted(primes)})"
        )

    group = factors[0]
    for factor in factors[1:]:
        try:
            group = direct_product(group, factor)
        except GroupError as e:
            raise GroupSpecError(str(e)) from e
    # name the result after the normalized spec for both single atoms and products
    if group.name != normalized:
        group = FiniteGroup(group.cayley, group.generators, group.labels, name=normalized)
    return group
