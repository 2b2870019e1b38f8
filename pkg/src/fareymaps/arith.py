"""Exact arithmetic: Farey fractions mod n, matrices over Z_n and Z, Mobius maps.

A vertex of the level-n Farey map is a pair (a, c) of residues mod n with
gcd(a, c, n) = 1, identified with its negation (-a, -c).  The canonical
representative keeps the denominator in [0, n//2]: a pair with 1 <= c <= n//2
is stored as is (numerator in [0, n)), a pole a/0 keeps its numerator in
[1, n//2], and for even n the self-negating denominator n/2 takes the smaller
of the two numerators.  This convention reproduces printed coordinates such
as 6/4 or 2/0 at level 11 verbatim.

All types here are immutable; values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import LevelMismatch, NotAVertex, Unsupported


def _is_canonical_pair(a: int, c: int, n: int) -> bool:
    if c == 0:
        return 1 <= a <= n // 2
    if 2 * c < n:
        return 0 <= a < n
    if 2 * c == n:
        # -c == c mod n, so the numerator breaks the tie.
        return 2 * a < n
    return False


@dataclass(frozen=True)
class FareyFraction:
    """Canonical vertex label a/c of the level-n Farey map."""

    num: int
    den: int
    level: int

    def __post_init__(self):
        n = self.level
        if n < 2:
            raise Unsupported(f"level must be >= 2, got {n}")
        if not (0 <= self.num < n and 0 <= self.den < n):
            raise NotAVertex(f"{self.num}/{self.den} not reduced mod {n}")
        if gcd(gcd(self.num, self.den), n) != 1:
            raise NotAVertex(f"gcd({self.num}, {self.den}, {n}) != 1")
        if not _is_canonical_pair(self.num, self.den, n):
            raise NotAVertex(f"{self.num}/{self.den} is not canonical mod {n}")

    @classmethod
    def parse(cls, text: str, level: int) -> "FareyFraction":
        a, _, c = text.partition("/")
        return canonical(int(a), int(c), level)

    def key(self) -> tuple[int, int]:
        """Sort key; vertices are listed poles first, as (den, num)."""
        return (self.den, self.num)

    def __lt__(self, other: "FareyFraction") -> bool:
        if self.level != other.level:
            raise LevelMismatch(f"levels {self.level} != {other.level}")
        return self.key() < other.key()

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def translated(self, k: int = 1) -> "FareyFraction":
        """Image under t -> t + k, i.e. a/c -> (a + k c)/c."""
        return canonical(self.num + k * self.den, self.den, self.level)


def canonical(a: int, c: int, n: int) -> FareyFraction:
    """The canonical Farey fraction equal to a/c mod n.

    Raises NotAVertex when gcd(a mod n, c mod n, n) != 1.
    """
    if n < 2:
        raise Unsupported(f"level must be >= 2, got {n}")
    a %= n
    c %= n
    if gcd(gcd(a, c), n) != 1:
        raise NotAVertex(f"gcd({a}, {c}, {n}) != 1: not a vertex mod {n}")
    if not _is_canonical_pair(a, c, n):
        a, c = (-a) % n, (-c) % n
    return FareyFraction(a, c, n)


def is_adjacent(f: FareyFraction, g: FareyFraction) -> bool:
    """True when f and g are joined by an edge: cross-determinant = +-1 mod n.

    The determinant is only defined up to sign, which +-1 absorbs, so any
    choice of sign representatives gives the same answer.
    """
    if f.level != g.level:
        raise LevelMismatch(f"levels {f.level} != {g.level}")
    n = f.level
    det = (f.num * g.den - g.num * f.den) % n
    return det == 1 % n or det == (-1) % n


@dataclass(frozen=True)
class ModMatrix:
    """An element of PSL(2, Z_n): residue matrix with det = 1, mod +-identity.

    The stored representative is the lexicographically smaller of the entry
    tuples (a, b, c, d) and (-a, -b, -c, -d) mod n.
    """

    a: int
    b: int
    c: int
    d: int
    level: int

    def __post_init__(self):
        n = self.level
        if n < 2:
            raise Unsupported(f"level must be >= 2, got {n}")
        t = (self.a, self.b, self.c, self.d)
        if not all(0 <= x < n for x in t):
            raise ValueError(f"entries of {t} not reduced mod {n}")
        if (self.a * self.d - self.b * self.c) % n != 1 % n:
            raise ValueError(f"det of {t} is not 1 mod {n}")
        neg = tuple((-x) % n for x in t)
        if neg < t:
            raise ValueError(f"{t} is not the canonical sign representative")

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int, n: int) -> "ModMatrix":
        t = (a % n, b % n, c % n, d % n)
        neg = tuple((-x) % n for x in t)
        return cls(*min(t, neg), n)

    @classmethod
    def identity(cls, n: int) -> "ModMatrix":
        return cls.of(1, 0, 0, 1, n)

    @classmethod
    def translation(cls, n: int) -> "ModMatrix":
        """T = (1 1; 0 1), the map t -> t + 1."""
        return cls.of(1, 1, 0, 1, n)

    @classmethod
    def edge_reversal(cls, n: int) -> "ModMatrix":
        """S = (0 -1; 1 0), the map t -> -1/t."""
        return cls.of(0, -1, 1, 0, n)

    def __mul__(self, other: "ModMatrix") -> "ModMatrix":
        if self.level != other.level:
            raise LevelMismatch(f"levels {self.level} != {other.level}")
        return ModMatrix.of(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.level,
        )

    def inverse(self) -> "ModMatrix":
        return ModMatrix.of(self.d, -self.b, -self.c, self.a, self.level)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mobius_mod(m: ModMatrix, f: FareyFraction) -> FareyFraction:
    """Action of m on a vertex: a/c -> (m.a*a + m.b*c)/(m.c*a + m.d*c)."""
    if m.level != f.level:
        raise LevelMismatch(f"levels {m.level} != {f.level}")
    return canonical(m.a * f.num + m.b * f.den, m.c * f.num + m.d * f.den, m.level)


@dataclass(frozen=True)
class IntMatrix:
    """2x2 integer matrix; exact, arbitrary precision."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @classmethod
    def identity(cls) -> "IntMatrix":
        return cls(1, 0, 0, 1)

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def mod(self, n: int) -> ModMatrix:
        if self.det() % n != 1 % n:
            raise ValueError(f"det {self.det()} is not 1 mod {n}")
        return ModMatrix.of(self.a, self.b, self.c, self.d, n)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class ExtRational:
    """Extended rational: num/den in lowest terms, den >= 0, with 1/0 = infinity."""

    num: int
    den: int

    def __post_init__(self):
        if self.num == 0 and self.den == 0:
            raise ValueError("0/0 is not an extended rational")
        g = gcd(self.num, self.den)
        if g != 1 or self.den < 0 or (self.den == 0 and self.num != 1):
            raise ValueError(f"{self.num}/{self.den} is not normalized")

    @classmethod
    def of(cls, num: int, den: int) -> "ExtRational":
        if num == 0 and den == 0:
            raise ValueError("0/0 is not an extended rational")
        g = gcd(num, den)
        num //= g
        den //= g
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        return cls(num, den)

    @classmethod
    def parse(cls, text: str) -> "ExtRational":
        a, sep, c = text.partition("/")
        return cls.of(int(a), int(c) if sep else 1)

    @classmethod
    def infinity(cls) -> "ExtRational":
        return cls(1, 0)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def mobius_exact(m: IntMatrix, q: ExtRational) -> ExtRational:
    """Exact Mobius action of a unimodular integer matrix on Q u {infinity}."""
    if m.det() not in (1, -1):
        raise ValueError(f"matrix determinant must be +-1, got {m.det()}")
    return ExtRational.of(m.a * q.num + m.b * q.den, m.c * q.num + m.d * q.den)


def in_principal_congruence(m: IntMatrix, n: int) -> bool:
    """True when m = +-identity mod n, i.e. m lies in the subgroup Gamma(n)."""
    if m.det() != 1:
        raise ValueError(f"membership test needs det 1, got {m.det()}")
    t = (m.a % n, m.b % n, m.c % n, m.d % n)
    return t == (1 % n, 0, 0, 1 % n) or t == ((-1) % n, 0, 0, (-1) % n)
