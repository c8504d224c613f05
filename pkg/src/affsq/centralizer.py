"""Common centralizers of affine-map pairs via Smith normal form over Z/p^e.

A map G = (c, d) commutes with both F_0 = (a_0, b_0) and F_1 = (a_1, b_1)
exactly when the parameter vector (u, d) with u = c - 1 solves

    b_0*u - s_0*d = 0,    b_1*u - s_1*d = 0,    s_i = a_i - 1,

so the common centralizer is the kernel of M = [[b_0, -s_0], [b_1, -s_1]]
intersected with the unit condition on c = 1 + u.  Over the local ring
Z/p^e the kernel is read off from a Smith normal form U*M*V = diag(p^alpha,
p^beta): it is the image under V of p^(e-alpha)*R x p^(e-beta)*R.  Over a
general Z/nZ the computation runs factorwise and recombines through the
CRT idempotents.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable

from .algebra import AffineMap, CrtDecomposition, _is_prime, crt_decompose, factorize

Mat2 = tuple[tuple[int, int], tuple[int, int]]

_IDENTITY2: Mat2 = ((1, 0), (0, 1))


@dataclass(frozen=True, slots=True)
class LocalRing:
    """Z/p^e with uniformizer p; e is the nilpotency index of p."""

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

    @classmethod
    def from_modulus(cls, q: int) -> LocalRing:
        factors = factorize(q)
        if len(factors) != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(factors[0].p, factors[0].e)


def valuation(x: int, ring: LocalRing) -> int:
    """Largest t <= e with p^t dividing x; by convention 0 maps to e."""
    x %= ring.q
    if x == 0:
        return ring.e
    t = 0
    while x % ring.p == 0:
        x //= ring.p
        t += 1
    return t


@dataclass(frozen=True, slots=True)
class CommutationMatrix:
    """The 2x2 system M = [[b_0, -s_0], [b_1, -s_1]] of a map pair over Z/p^e."""

    ring: LocalRing
    entries: Mat2

    @property
    def delta(self) -> int:
        """Determinant of M; nonzero exactly when the pair does not commute."""
        (m00, m01), (m10, m11) = self.entries
        return (m00 * m11 - m01 * m10) % self.ring.q


def commutation_matrix(f0: AffineMap, f1: AffineMap) -> CommutationMatrix:
    """Build the commutation system of (f0, f1) over their prime-power modulus."""
    if f0.n != f1.n:
        raise ValueError(f"modulus mismatch: {f0.n} vs {f1.n}")
    ring = LocalRing.from_modulus(f0.n)
    q = ring.q
    entries = (
        (f0.b % q, -(f0.a - 1) % q),
        (f1.b % q, -(f1.a - 1) % q),
    )
    return CommutationMatrix(ring, entries)


@dataclass(frozen=True, slots=True)
class SmithDecomposition:
    """Invertible U, V with U*M*V = diag(p^alpha, p^beta), 0 <= alpha <= beta <= e."""

    ring: LocalRing
    u: Mat2
    v: Mat2
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if not 0 <= self.alpha <= self.beta <= self.ring.e:
            raise ValueError(f"bad exponents alpha={self.alpha}, beta={self.beta}")
        for name, mat in (("U", self.u), ("V", self.v)):
            det = (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % self.ring.q
            if det % self.ring.p == 0:
                raise ValueError(f"det({name}) = {det} is not a unit mod {self.ring.q}")

    @property
    def diagonal(self) -> tuple[int, int]:
        q = self.ring.q
        return (self.ring.p**self.alpha % q, self.ring.p**self.beta % q)


def smith_normal_form(entries: Mat2, ring: LocalRing) -> SmithDecomposition:
    """Diagonalize a 2x2 matrix over Z/p^e to exact powers diag(p^alpha, p^beta).

    The pivot is the entry of minimal valuation (row-major tie break); its
    unit part is absorbed into U so the diagonal entries are literal powers
    of p.  A zero matrix yields alpha = beta = e.
    """
    u, v, alpha, beta = _snf_2x2(entries, ring.p, ring.e, ring.q)
    return SmithDecomposition(ring, u, v, alpha, beta)


def _val(x: int, p: int, e: int) -> int:
    if x == 0:
        return e
    t = 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def _snf_2x2(entries, p: int, e: int, q: int):
    """Core reduction; returns (U, V, alpha, beta) as nested int tuples."""
    m = [[entries[0][0] % q, entries[0][1] % q], [entries[1][0] % q, entries[1][1] % q]]
    u = [[1, 0], [0, 1]]
    v = [[1, 0], [0, 1]]

    best = (e + 1, 0, 0)
    for r in (0, 1):
        for c in (0, 1):
            t = _val(m[r][c], p, e)
            if t < best[0]:
                best = (t, r, c)
    t, r, c = best
    if t >= e:
        return _IDENTITY2, _IDENTITY2, e, e

    if r == 1:
        m[0], m[1] = m[1], m[0]
        u[0], u[1] = u[1], u[0]
    if c == 1:
        for row in m:
            row[0], row[1] = row[1], row[0]
        for row in v:
            row[0], row[1] = row[1], row[0]

    piv = p**t
    w = pow(m[0][0] // piv, -1, q)
    m[0][0] = m[0][0] * w % q  # now exactly p^t
    m[0][1] = m[0][1] * w % q
    u[0][0] = u[0][0] * w % q
    u[0][1] = u[0][1] * w % q

    # both off-pivot entries are divisible by p^t, so one op each clears them
    f = m[1][0] // piv
    m[1][0] = (m[1][0] - f * m[0][0]) % q
    m[1][1] = (m[1][1] - f * m[0][1]) % q
    u[1][0] = (u[1][0] - f * u[0][0]) % q
    u[1][1] = (u[1][1] - f * u[0][1]) % q

    g = m[0][1] // piv
    m[0][1] = (m[0][1] - g * m[0][0]) % q
    m[1][1] = (m[1][1] - g * m[1][0]) % q
    v[0][1] = (v[0][1] - g * v[0][0]) % q
    v[1][1] = (v[1][1] - g * v[1][0]) % q

    x = m[1][1]
    t2 = _val(x, p, e)
    if t2 < e:
        w2 = pow(x // p**t2, -1, q)
        u[1][0] = u[1][0] * w2 % q
        u[1][1] = u[1][1] * w2 % q
    return (tuple(u[0]), tuple(u[1])), (tuple(v[0]), tuple(v[1])), t, t2


def _kernel_pairs(v, alpha: int, beta: int, p: int, e: int, q: int):
    """Image under V of p^(e-alpha)*R x p^(e-beta)*R, sorted."""
    ya = p ** (e - alpha) % q
    yb = p ** (e - beta) % q
    pairs = []
    for r in range(p**alpha):
        y0 = ya * r % q
        u0 = v[0][0] * y0
        u1 = v[1][0] * y0
        for s in range(p**beta):
            y1 = yb * s % q
            pairs.append(((u0 + v[0][1] * y1) % q, (u1 + v[1][1] * y1) % q))
    pairs.sort()
    return pairs


def kernel(cm: CommutationMatrix) -> list[tuple[int, int]]:
    """All parameter pairs (u, d) with M*(u, d)^T = 0 over the local ring."""
    dec = smith_normal_form(cm.entries, cm.ring)
    return _kernel_pairs(dec.v, dec.alpha, dec.beta, cm.ring.p, cm.ring.e, cm.ring.q)


@dataclass(frozen=True, slots=True)
class CentralizerSet:
    """Full enumeration of the maps commuting with both members of a pair."""

    elements: tuple[AffineMap, ...]
    generator_description: str

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def is_abelian(maps: Iterable[AffineMap] | CentralizerSet) -> bool:
    """True iff every unordered pair of the given maps commutes."""
    elems = list(maps.elements if isinstance(maps, CentralizerSet) else maps)
    for i, f in enumerate(elems):
        for g in elems[i + 1 :]:
            if not f.commutes(g):
                return False
    return True


def _local_centralizer_pairs(q, p, e, f0, f1):
    """Centralizer of a pair over Z/p^e as sorted (c, d) int pairs."""
    (a0, b0), (a1, b1) = f0, f1
    entries = ((b0 % q, -(a0 - 1) % q), (b1 % q, -(a1 - 1) % q))
    u, v, alpha, beta = _snf_2x2(entries, p, e, q)
    out = []
    for uu, d in _kernel_pairs(v, alpha, beta, p, e, q):
        c = (1 + uu) % q
        if c % p != 0:  # 1 + u must be a unit for (c, d) to be affine
            out.append((c, d))
    out.sort()
    return out


def _zn_centralizer_pairs(crt: CrtDecomposition, f0, f1):
    """Centralizer over Z/nZ as sorted (c, d) int pairs, via local factors."""
    locs = []
    for fac in crt.factors:
        q = fac.q
        locs.append(
            _local_centralizer_pairs(
                q, fac.p, fac.e, (f0[0] % q, f0[1] % q), (f1[0] % q, f1[1] % q)
            )
        )
    out = []
    for combo in itertools.product(*locs):
        a = sum(c * ek for (c, _), ek in zip(combo, crt.idempotents)) % crt.n
        b = sum(d * ek for (_, d), ek in zip(combo, crt.idempotents)) % crt.n
        out.append((a, b))
    out.sort()
    return out


def _check_membership(elements, f0: AffineMap, f1: AffineMap) -> None:
    for g in elements:
        if not (g.commutes(f0) and g.commutes(f1)):
            raise RuntimeError(f"internal error: {g} fails to centralize the pair")


def common_centralizer_local(f0: AffineMap, f1: AffineMap) -> CentralizerSet:
    """C(f0) n C(f1) over a prime-power modulus, from the Smith kernel."""
    cm = commutation_matrix(f0, f1)
    ring = cm.ring
    dec = smith_normal_form(cm.entries, ring)
    pairs = _local_centralizer_pairs(
        ring.q, ring.p, ring.e, (f0.a, f0.b), (f1.a, f1.b)
    )
    elements = tuple(AffineMap(ring.q, c, d) for c, d in pairs)
    _check_membership(elements, f0, f1)
    description = (
        f"image under V={dec.v} of {ring.p ** (ring.e - dec.alpha)}R x "
        f"{ring.p ** (ring.e - dec.beta)}R mod {ring.q}, "
        f"keeping (u, d) with 1 + u a unit"
    )
    return CentralizerSet(elements, description)


def common_centralizer_zn(f0: AffineMap, f1: AffineMap) -> CentralizerSet:
    """C(f0) n C(f1) over any Z/nZ, computed factorwise and CRT-recombined."""
    if f0.n != f1.n:
        raise ValueError(f"modulus mismatch: {f0.n} vs {f1.n}")
    crt = crt_decompose(f0.n)
    pairs = _zn_centralizer_pairs(crt, (f0.a, f0.b), (f1.a, f1.b))
    elements = tuple(AffineMap(f0.n, c, d) for c, d in pairs)
    _check_membership(elements, f0, f1)
    description = "; ".join(
        f"mod {fac.q}: {common_centralizer_local(f0.project(fac.q), f1.project(fac.q)).generator_description}"
        for fac in crt.factors
    )
    return CentralizerSet(elements, description)
