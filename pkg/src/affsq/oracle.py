"""Brute-force oracles over AGL1(Z/nZ) and the symmetric-group comparison.

Everything here is deliberately direct: exhaustive enumeration and linear
scans that independently confirm what the structural machinery computes.
Exhaustive operations refuse moduli above EXHAUSTIVE_LIMIT instead of
running unbounded.
"""

from __future__ import annotations

import math
import re
import time
from dataclasses import dataclass
from typing import Sequence

from .algebra import AffineMap, crt_decompose
from .centralizer import _zn_centralizer_pairs
from .classify import SquareWitness

EXHAUSTIVE_LIMIT = 1000


def _check_budget(n: int) -> None:
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(
            f"refusing exhaustive scan for n={n} (limit {EXHAUSTIVE_LIMIT})"
        )


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {0, ..., degree-1}; images[x] is the image of x."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("images do not form a bijection")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> Permutation:
        """Build from disjoint cycles of 1-based points, all others fixed."""
        images = list(range(degree))
        for cycle in cycles:
            points = [p - 1 for p in cycle]
            if any(not 0 <= p < degree for p in points):
                raise ValueError(f"cycle {tuple(cycle)} leaves the degree {degree}")
            for i, p in enumerate(points):
                images[p] = points[(i + 1) % len(points)]
        return cls(tuple(images))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: Permutation) -> Permutation:
        """self after other."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[y] for y in other.images))

    def commutes(self, other: Permutation) -> bool:
        return self.compose(other) == other.compose(self)

    def cycle_string(self) -> str:
        """Disjoint-cycle notation on 1-based points; '()' for the identity."""
        seen = [False] * self.degree
        parts = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                seen[start] = True
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            parts.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
        return "".join(parts) if parts else "()"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation like '(1 2 3)(4 5)' into a permutation."""
    stripped = text.replace(",", " ").strip()
    if stripped in ("", "()"):
        return Permutation.identity(degree)
    chunks = re.findall(r"\(([^()]*)\)", stripped)
    if not chunks or re.sub(r"\([^()]*\)|\s", "", stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = [[int(tok) for tok in chunk.split()] for chunk in chunks]
    flat = [p for cycle in cycles for p in cycle]
    if len(flat) != len(set(flat)):
        raise ValueError(f"cycles are not disjoint in {text!r}")
    return Permutation.from_cycles(degree, cycles)


def enumerate_agl(n: int) -> list[AffineMap]:
    """All n*phi(n) elements of AGL1(Z/nZ), sorted by (a, b)."""
    _check_budget(n)
    return [
        AffineMap(n, a, b)
        for a in range(n)
        if math.gcd(a, n) == 1
        for b in range(n)
    ]


def brute_force_centralizer(f0: AffineMap, f1: AffineMap) -> list[AffineMap]:
    """Linear scan of the whole group for maps commuting with both inputs."""
    if f0.n != f1.n:
        raise ValueError(f"modulus mismatch: {f0.n} vs {f1.n}")
    return [g for g in enumerate_agl(f0.n) if g.commutes(f0) and g.commutes(f1)]


@dataclass(frozen=True, slots=True)
class SearchReport:
    """Outcome of an exhaustive square search over one modulus."""

    n: int
    witness: SquareWitness | None
    pairs_scanned: int
    elapsed_seconds: float

    @property
    def found(self) -> bool:
        return self.witness is not None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "found": self.found,
            "witness": self.witness.as_dict() if self.witness else None,
            "pairsScanned": self.pairs_scanned,
            "elapsedMs": round(self.elapsed_seconds * 1000, 3),
        }


def brute_force_square_exists(n: int) -> SearchReport:
    """Exhaustive search for the lexicographically smallest square witness.

    Scans noncommuting pairs (F0, F1) in lexicographic order and looks for a
    noncommuting pair inside their common centralizer.  Any two centralizer
    elements commute with both F's, so the first hit is a verified square.
    Scanning i < j suffices for lexicographic minimality: a qualifying
    partner smaller than the anchor would itself anchor an earlier pair.
    """
    _check_budget(n)
    start = time.perf_counter()
    crt = crt_decompose(n)
    els = [(a, b) for a in range(n) if math.gcd(a, n) == 1 for b in range(n)]
    pairs_scanned = 0
    for i, (a0, b0) in enumerate(els):
        for a1, b1 in els[i + 1 :]:
            if ((a0 - 1) * b1 - (a1 - 1) * b0) % n == 0:
                continue
            pairs_scanned += 1
            cent = _zn_centralizer_pairs(crt, (a0, b0), (a1, b1))
            hit = _first_noncommuting_pair(cent, n)
            if hit is not None:
                witness = _attribute_witness(n, (a0, b0), (a1, b1), hit[0], hit[1])
                return SearchReport(n, witness, pairs_scanned, time.perf_counter() - start)
    return SearchReport(n, None, pairs_scanned, time.perf_counter() - start)


def _first_noncommuting_pair(sorted_pairs, n):
    for i, (c0, d0) in enumerate(sorted_pairs):
        for c1, d1 in sorted_pairs[i + 1 :]:
            if ((c0 - 1) * d1 - (c1 - 1) * d0) % n != 0:
                return (c0, d0), (c1, d1)
    return None


def _attribute_witness(n, f0, f1, g0, g1) -> SquareWitness:
    maps = [AffineMap(n, a, b) for a, b in (f0, f1, g0, g1)]
    factors = crt_decompose(n).factors
    factor_f = next(
        f for f in factors
        if not maps[0].project(f.q).commutes(maps[1].project(f.q))
    )
    factor_g = next(
        f for f in factors
        if not maps[2].project(f.q).commutes(maps[3].project(f.q))
    )
    return SquareWitness(*maps, factor_f, factor_g)


@dataclass(frozen=True, slots=True)
class FamilyReport:
    """Cross- and internal-commutation findings for two map families."""

    cross_commuting: bool
    cross_failures: tuple[tuple[int, int], ...]
    f_noncommuting: tuple[tuple[int, int], ...]
    g_noncommuting: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {
            "crossCommuting": self.cross_commuting,
            "crossFailures": [list(p) for p in self.cross_failures],
            "fNoncommutingPairs": [list(p) for p in self.f_noncommuting],
            "gNoncommutingPairs": [list(p) for p in self.g_noncommuting],
        }


def verify_families(fs: Sequence[AffineMap], gs: Sequence[AffineMap]) -> FamilyReport:
    """Check every cross pair and list the noncommuting pairs inside each family."""
    cross_failures = tuple(
        (i, j)
        for i, f in enumerate(fs)
        for j, g in enumerate(gs)
        if not f.commutes(g)
    )
    f_bad = tuple(
        (i, j)
        for i in range(len(fs))
        for j in range(i + 1, len(fs))
        if not fs[i].commutes(fs[j])
    )
    g_bad = tuple(
        (i, j)
        for i in range(len(gs))
        for j in range(i + 1, len(gs))
        if not gs[i].commutes(gs[j])
    )
    return FamilyReport(not cross_failures, cross_failures, f_bad, g_bad)


def sn_square(n: int) -> tuple[Permutation, Permutation, Permutation, Permutation]:
    """The standard square (1 2 3), (1 2), (4 5 6), (4 5) inside S_n, n >= 6.

    The two sides act on disjoint supports, so all cross pairs commute while
    a 3-cycle never commutes with a transposition inside its own triple.
    """
    if n < 6:
        raise ValueError(f"degree must be at least 6, got {n}")
    f0 = Permutation.from_cycles(n, [(1, 2, 3)])
    f1 = Permutation.from_cycles(n, [(1, 2)])
    g0 = Permutation.from_cycles(n, [(4, 5, 6)])
    g1 = Permutation.from_cycles(n, [(4, 5)])
    ok = (
        all(f.commutes(g) for f in (f0, f1) for g in (g0, g1))
        and not f0.commutes(f1)
        and not g0.commutes(g1)
    )
    if not ok:
        raise RuntimeError(f"internal error: S_{n} square failed verification")
    return f0, f1, g0, g1
