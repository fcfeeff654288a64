"""
Nonabelian catalog atoms: the quaternion group q8 and dihedral 2-groups d{n}.
"""
from groups import FiniteGroup
from catalog.abelian import word_label


def quaternion(letters: tuple[str, str] = ("a", "b")) -> FiniteGroup:
    """
    Q8 = <a, b | a^4 = b^4 = 1, a^2 = b^2, b^-1 a b = a^3>.

    a^i b^j sits at index i + 4j, so the order is 1, a, a^2, a^3, b, ab, a^2b, a^3b.
    Normal form product: a^i b^j * a^k b^l = a^(i + (-1)^j k) b^(j+l), with b^2 = a^2.
    """
    a, b = letters
    cayley = [[0] * 8 for _ in range(8)]
    for x in range(8):
        i, j = x % 4, x // 4
        for y in range(8):
            k, l = y % 4, y // 4
            e = i + (k if j == 0 else -k)
            f = j + l
            if f == 2:
                e, f = e + 2, 0
            cayley[x][y] = e % 4 + 4 * f
    labels = [word_label((a, x % 4), (b, x // 4)) for x in range(8)]
    return FiniteGroup(cayley, [1, 4], labels, name="q8")


def dihedral(n: int, letters: tuple[str, str] = ("r", "s")) -> FiniteGroup:
    """
    Dihedral group of order n = 2m: r^i s^j at index i + m j, s r = r^-1 s, s^2 = 1.
    """
    if n < 4 or n % 2:
        raise ValueError(f"d{n}: dihedral order must be even and at least 4")
    m = n // 2
    r, s = letters
    cayley = [[0] * n for _ in range(n)]
    for x in range(n):
        i, j = x % m, x // m
        for y in range(n):
            k, l = y % m, y // m
            e = i + (k if j == 0 else -k)
            cayley[x][y] = e % m + m * ((j + l) % 2)
    labels = [word_label((r, x % m), (s, x // m)) for x in range(n)]
    return FiniteGroup(cayley, [1, m], labels, name=f"d{n}")
