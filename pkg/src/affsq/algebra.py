"""Exact arithmetic in the one-dimensional affine group over Z/nZ.

An affine map is the permutation x -> a*x + b of Z/nZ with a a unit mod n.
Composition follows (a, b) o (c, d) = (a*c, a*d + b), and two maps commute
exactly when (a - 1)*d == (c - 1)*b mod n.  All residues are normalized to
the canonical range [0, n) at construction, so equality is structural.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True, slots=True)
class AffineMap:
    """The permutation x -> a*x + b of Z/nZ; a must be a unit mod n."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"modulus must be at least 2, got {self.n}")
        object.__setattr__(self, "a", self.a % self.n)
        object.__setattr__(self, "b", self.b % self.n)
        if math.gcd(self.a, self.n) != 1:
            raise ValueError(f"a={self.a} is not a unit mod {self.n}")

    @classmethod
    def identity(cls, n: int) -> AffineMap:
        return cls(n, 1, 0)

    def __str__(self) -> str:
        return f"({self.a},{self.b}) mod {self.n}"

    def __call__(self, x: int) -> int:
        return (self.a * x + self.b) % self.n

    def compose(self, other: AffineMap) -> AffineMap:
        """self after other: (a, b) o (c, d) = (a*c, a*d + b)."""
        self._require_same_modulus(other)
        return AffineMap(self.n, self.a * other.a, self.a * other.b + self.b)

    def inverse(self) -> AffineMap:
        a_inv = pow(self.a, -1, self.n)
        return AffineMap(self.n, a_inv, -a_inv * self.b)

    def commutes(self, other: AffineMap) -> bool:
        """True iff (a - 1)*d == (c - 1)*b mod n, i.e. both composition orders agree."""
        self._require_same_modulus(other)
        return ((self.a - 1) * other.b - (other.a - 1) * self.b) % self.n == 0

    def project(self, q: int) -> AffineMap:
        """Reduce onto the factor q of n; q must be coprime to n // q."""
        if q < 2 or self.n % q != 0:
            raise ValueError(f"{q} does not divide the modulus {self.n}")
        if math.gcd(q, self.n // q) != 1:
            raise ValueError(f"{q} and {self.n // q} share a factor")
        return AffineMap(q, self.a % q, self.b % q)

    def as_dict(self) -> dict:
        return {"n": self.n, "a": self.a, "b": self.b}

    def _require_same_modulus(self, other: AffineMap) -> None:
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")


@dataclass(frozen=True, slots=True)
class PrimePowerFactor:
    """A prime power p**e; primality of p is checked by trial division."""

    p: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError(f"exponent must be at least 1, got {self.e}")
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p**self.e


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def factorize(n: int) -> list[PrimePowerFactor]:
    """Prime-power factorization of n >= 2, sorted by ascending prime."""
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append(PrimePowerFactor(p, e))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append(PrimePowerFactor(rest, 1))
    return factors


@dataclass(frozen=True, slots=True)
class CrtDecomposition:
    """Splitting of Z/nZ into coprime prime-power blocks with idempotents.

    idempotents[k] is 1 mod factors[k].q and 0 mod every other factor, so a
    residue with local values x_k recombines as sum(x_k * idempotents[k]) mod n.
    """

    n: int
    factors: tuple[PrimePowerFactor, ...]
    idempotents: tuple[int, ...]

    def __post_init__(self) -> None:
        if math.prod(f.q for f in self.factors) != self.n:
            raise ValueError("factor product does not equal the modulus")
        if len(self.idempotents) != len(self.factors):
            raise ValueError("one idempotent required per factor")
        for f, ek in zip(self.factors, self.idempotents):
            if not 0 <= ek < self.n:
                raise ValueError(f"idempotent {ek} outside [0, {self.n})")
            if ek % f.q != 1 % f.q or ek % (self.n // f.q) != 0:
                raise ValueError(f"{ek} is not the idempotent of the factor {f.q}")
        if sum(self.idempotents) % self.n != 1:
            raise ValueError("idempotents do not sum to 1")

    def combine(self, locals_: tuple[int, ...] | list[int]) -> int:
        """Recombine one local residue per factor into a residue mod n."""
        if len(locals_) != len(self.factors):
            raise ValueError("one local residue required per factor")
        return sum(x * ek for x, ek in zip(locals_, self.idempotents)) % self.n


def crt_decompose(n: int) -> CrtDecomposition:
    """CRT splitting of Z/nZ, idempotents computed from the extended gcd."""
    factors = tuple(factorize(n))
    idems = []
    for f in factors:
        others = n // f.q
        # others * inv(others mod q) is 1 mod q and 0 mod the complement
        idems.append(others * pow(others, -1, f.q) % n)
    return CrtDecomposition(n, factors, tuple(idems))


@dataclass(frozen=True, slots=True)
class SquareVerdict:
    """Commutation bookkeeping for a candidate quadruple (F0, F1, G0, G1).

    cross[i][j] records whether F_i commutes with G_j; the quadruple is a
    cross-commuting nonabelian square iff every cross pair commutes while
    neither the F pair nor the G pair does.
    """

    cross: tuple[tuple[bool, bool], tuple[bool, bool]]
    f_pair_commutes: bool
    g_pair_commutes: bool

    @property
    def is_square(self) -> bool:
        return (
            all(self.cross[0])
            and all(self.cross[1])
            and not self.f_pair_commutes
            and not self.g_pair_commutes
        )

    def as_dict(self) -> dict:
        return {
            "crossCommuting": {
                f"F{i}G{j}": self.cross[i][j] for i in (0, 1) for j in (0, 1)
            },
            "fPairCommutes": self.f_pair_commutes,
            "gPairCommutes": self.g_pair_commutes,
            "isSquare": self.is_square,
        }


def verify_square(f0: AffineMap, f1: AffineMap, g0: AffineMap, g1: AffineMap) -> SquareVerdict:
    """Evaluate the cross-commuting nonabelian square conditions on a quadruple."""
    cross = tuple(tuple(f.commutes(g) for g in (g0, g1)) for f in (f0, f1))
    return SquareVerdict(cross, f0.commutes(f1), g0.commutes(g1))
