"""Deciding and constructing cross-commuting nonabelian squares over Z/nZ.

A square exists over a product of local factors exactly when at least two
factors have a modulus greater than 2, because AGL1 of a factor contains a
noncommuting pair iff that factor is not Z/2Z.  The witness places one
canonical noncommuting pair on each of two chosen factors, lifted to Z/nZ
through the CRT idempotents so that each side acts trivially on the other
side's factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    AffineMap,
    CrtDecomposition,
    PrimePowerFactor,
    crt_decompose,
    factorize,
    verify_square,
)

REASON_PRIME_POWER = "PrimePower"
REASON_TWICE_ODD_PRIME_POWER = "TwiceOddPrimePower"
REASON_TWO_BIG_FACTORS = "TwoBigFactors"


class NoPairError(Exception):
    """AGL1 of the requested local ring has no noncommuting pair."""


class NoSquareError(Exception):
    """No cross-commuting nonabelian square exists for the requested modulus."""

    def __init__(self, verdict: ClassificationVerdict):
        self.verdict = verdict
        super().__init__(
            f"no cross-commuting nonabelian square exists ({verdict.reason})"
        )


@dataclass(frozen=True, slots=True)
class ClassificationVerdict:
    """Existence decision with the factor evidence that produced it."""

    exists: bool
    reason: str
    big_factors: tuple[PrimePowerFactor, ...]
    chosen_indices: tuple[int, int] | None

    def __post_init__(self) -> None:
        if self.exists != (len(self.big_factors) >= 2):
            raise ValueError("exists flag contradicts the factor evidence")


@dataclass(frozen=True, slots=True)
class SquareWitness:
    """A verified quadruple with the factors carrying each side's noncommutation."""

    f0: AffineMap
    f1: AffineMap
    g0: AffineMap
    g1: AffineMap
    factor_f: PrimePowerFactor
    factor_g: PrimePowerFactor

    def __post_init__(self) -> None:
        if not verify_square(self.f0, self.f1, self.g0, self.g1).is_square:
            raise ValueError("quadruple is not a cross-commuting nonabelian square")
        if self.f0.project(self.factor_f.q).commutes(self.f1.project(self.factor_f.q)):
            raise ValueError(f"F pair commutes on the attributed factor {self.factor_f.q}")
        if self.g0.project(self.factor_g.q).commutes(self.g1.project(self.factor_g.q)):
            raise ValueError(f"G pair commutes on the attributed factor {self.factor_g.q}")

    @property
    def quadruple(self) -> tuple[AffineMap, AffineMap, AffineMap, AffineMap]:
        return (self.f0, self.f1, self.g0, self.g1)

    def as_dict(self) -> dict:
        return {
            "F0": self.f0.as_dict(),
            "F1": self.f1.as_dict(),
            "G0": self.g0.as_dict(),
            "G1": self.g1.as_dict(),
            "factorF": [self.factor_f.p, self.factor_f.e],
            "factorG": [self.factor_g.p, self.factor_g.e],
        }


def local_has_noncommuting_pair(q: int) -> bool:
    """True iff AGL1(Z/qZ) contains a noncommuting pair, for prime-power q."""
    _require_prime_power(q)
    return q != 2


def local_noncommuting_pair(q: int) -> tuple[AffineMap, AffineMap]:
    """Canonical noncommuting pair ((1,1), (a,0)) over a prime power q > 2.

    a = 2 for odd primes and a = q - 1 for powers of two; in both cases
    a - 1 is nonzero, so the pair fails the commutation criterion.
    """
    p = _require_prime_power(q)
    if q == 2:
        raise NoPairError("AGL1(Z/2Z) is abelian; no noncommuting pair exists")
    a = 2 if p % 2 == 1 else q - 1
    pair = (AffineMap(q, 1, 1), AffineMap(q, a, 0))
    if pair[0].commutes(pair[1]):
        raise RuntimeError(f"internal error: canonical pair commutes over Z/{q}Z")
    return pair


def _require_prime_power(q: int) -> int:
    factors = factorize(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    return factors[0].p


def classify_pir(factors: Sequence[PrimePowerFactor]) -> ClassificationVerdict:
    """Decide existence over a product of the given coprime local factors."""
    primes = [f.p for f in factors]
    if len(set(primes)) != len(primes):
        raise ValueError(f"repeated prime among factors {[f.q for f in factors]}")
    big = tuple(f for f in factors if f.q > 2)
    exists = len(big) >= 2
    if exists:
        big_positions = [i for i, f in enumerate(factors) if f.q > 2]
        chosen = (big_positions[0], big_positions[1])
        reason = REASON_TWO_BIG_FACTORS
    else:
        chosen = None
        reason = (
            REASON_PRIME_POWER if len(factors) == 1 else REASON_TWICE_ODD_PRIME_POWER
        )
    return ClassificationVerdict(exists, reason, big, chosen)


def classify_zn(n: int) -> ClassificationVerdict:
    """Decide existence over Z/nZ from its prime-power factorization."""
    return classify_pir(factorize(n))


def product_lift(m: AffineMap, target: CrtDecomposition, factor_index: int) -> AffineMap:
    """Lift a local map to Z/nZ, acting as m on one factor and trivially elsewhere."""
    if not 0 <= factor_index < len(target.factors):
        raise ValueError(f"factor index {factor_index} out of range")
    factor = target.factors[factor_index]
    if m.n != factor.q:
        raise ValueError(f"map modulus {m.n} does not match factor {factor.q}")
    ek = target.idempotents[factor_index]
    return AffineMap(target.n, (m.a - 1) * ek + 1, m.b * ek)


def construct_square(n: int) -> SquareWitness:
    """Build the canonical witness for Z/nZ, or raise NoSquareError.

    The F side takes the smallest factor with q > 2 and the G side the next
    smallest, each carrying its canonical local noncommuting pair.
    """
    verdict = classify_zn(n)
    if not verdict.exists:
        raise NoSquareError(verdict)
    crt = crt_decompose(n)
    by_q = sorted(
        (i for i, f in enumerate(crt.factors) if f.q > 2),
        key=lambda i: crt.factors[i].q,
    )
    idx_f, idx_g = by_q[0], by_q[1]
    a0, a1 = local_noncommuting_pair(crt.factors[idx_f].q)
    b0, b1 = local_noncommuting_pair(crt.factors[idx_g].q)
    f0 = product_lift(a0, crt, idx_f)
    f1 = product_lift(a1, crt, idx_f)
    g0 = product_lift(b0, crt, idx_g)
    g1 = product_lift(b1, crt, idx_g)
    if not verify_square(f0, f1, g0, g1).is_square:
        raise RuntimeError(f"internal error: constructed quadruple fails for n={n}")
    return SquareWitness(f0, f1, g0, g1, crt.factors[idx_f], crt.factors[idx_g])


def product_family_lift(
    family_a: Sequence[AffineMap],
    family_b: Sequence[AffineMap],
    target: CrtDecomposition,
) -> tuple[list[AffineMap], list[AffineMap]]:
    """Lift two local families onto distinct factors of the target ring.

    Cross pairs of the lifted families always commute, while each family
    keeps exactly the commutation relations it had locally.
    """
    idx_a = _factor_index_of(family_a, target, "first")
    idx_b = _factor_index_of(family_b, target, "second")
    if idx_a == idx_b:
        raise ValueError(f"both families live on the factor {target.factors[idx_a].q}")
    lifted_a = [product_lift(m, target, idx_a) for m in family_a]
    lifted_b = [product_lift(m, target, idx_b) for m in family_b]
    return lifted_a, lifted_b


def _factor_index_of(family: Sequence[AffineMap], target: CrtDecomposition, which: str) -> int:
    if not family:
        raise ValueError(f"{which} family is empty")
    moduli = {m.n for m in family}
    if len(moduli) != 1:
        raise ValueError(f"{which} family mixes moduli {sorted(moduli)}")
    q = family[0].n
    for i, f in enumerate(target.factors):
        if f.q == q:
            return i
    raise ValueError(f"{q} is not a factor of {target.n}")
