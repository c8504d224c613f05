"""Existence classification, canonical local pairs, and CRT witness lifting."""

import math
import random

import pytest

from affsq.algebra import AffineMap, PrimePowerFactor, crt_decompose, verify_square
from affsq.classify import (
    NoPairError,
    NoSquareError,
    REASON_PRIME_POWER,
    REASON_TWICE_ODD_PRIME_POWER,
    REASON_TWO_BIG_FACTORS,
    classify_pir,
    classify_zn,
    construct_square,
    local_has_noncommuting_pair,
    local_noncommuting_pair,
    product_family_lift,
    product_lift,
)


def agl(n):
    return [
        AffineMap(n, a, b)
        for a in range(n)
        if math.gcd(a, n) == 1
        for b in range(n)
    ]


def pair_exists_by_search(q):
    maps = agl(q)
    return any(
        not f.commutes(g) for i, f in enumerate(maps) for g in maps[i + 1 :]
    )


def is_prime_power_by_division(n):
    d = 2
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            return n == 1
        d += 1
    return True  # n is prime


def is_twice_odd_prime_power(n):
    return n % 2 == 0 and n // 2 % 2 == 1 and n // 2 > 1 and is_prime_power_by_division(n // 2)


class TestLocalPairs:
    def test_has_pair_examples(self):
        assert not local_has_noncommuting_pair(2)
        assert local_has_noncommuting_pair(3)
        assert local_has_noncommuting_pair(4)

    def test_non_prime_power_rejected(self):
        with pytest.raises(ValueError, match="not a prime power"):
            local_has_noncommuting_pair(12)

    def test_agrees_with_exhaustive_search(self):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32):
            assert local_has_noncommuting_pair(q) == pair_exists_by_search(q)

    def test_canonical_pair_examples(self):
        assert local_noncommuting_pair(3) == (AffineMap(3, 1, 1), AffineMap(3, 2, 0))
        assert local_noncommuting_pair(4) == (AffineMap(4, 1, 1), AffineMap(4, 3, 0))

    def test_no_pair_over_f2(self):
        with pytest.raises(NoPairError):
            local_noncommuting_pair(2)

    def test_canonical_pairs_never_commute(self):
        for q in (3, 4, 5, 7, 8, 9, 16, 25, 27, 32):
            f, g = local_noncommuting_pair(q)
            assert not f.commutes(g)


class TestClassify:
    def test_pir_examples(self):
        nine_two = [PrimePowerFactor(3, 2), PrimePowerFactor(2, 1)]
        assert not classify_pir(nine_two).exists
        verdict = classify_pir([PrimePowerFactor(3, 1), PrimePowerFactor(2, 2)])
        assert verdict.exists and verdict.chosen_indices == (0, 1)
        assert not classify_pir([PrimePowerFactor(2, 1)]).exists

    def test_pir_repeated_prime_rejected(self):
        with pytest.raises(ValueError, match="repeated prime"):
            classify_pir([PrimePowerFactor(3, 1), PrimePowerFactor(3, 2)])

    def test_zn_examples(self):
        twelve = classify_zn(12)
        assert twelve.exists and twelve.reason == REASON_TWO_BIG_FACTORS
        assert [f.q for f in twelve.big_factors] == [4, 3]
        eight = classify_zn(8)
        assert not eight.exists and eight.reason == REASON_PRIME_POWER
        six = classify_zn(6)
        assert not six.exists and six.reason == REASON_TWICE_ODD_PRIME_POWER

    def test_zn_small_modulus_rejected(self):
        with pytest.raises(ValueError):
            classify_zn(1)

    def test_condition_equivalence_up_to_10000(self):
        for n in range(2, 10001):
            expected = not (is_prime_power_by_division(n) or is_twice_odd_prime_power(n))
            assert classify_zn(n).exists == expected, f"n={n}"


class TestProductLift:
    def test_examples(self):
        crt = crt_decompose(12)
        idx3 = [f.q for f in crt.factors].index(3)
        assert product_lift(AffineMap(3, 2, 0), crt, idx3) == AffineMap(12, 5, 0)
        assert product_lift(AffineMap(3, 1, 1), crt, idx3) == AffineMap(12, 1, 4)
        assert product_lift(AffineMap.identity(3), crt, idx3) == AffineMap.identity(12)

    def test_projections(self):
        crt = crt_decompose(12)
        lifted = product_lift(AffineMap(3, 2, 1), crt, 1)
        assert lifted.project(3) == AffineMap(3, 2, 1)
        assert lifted.project(4) == AffineMap.identity(4)

    def test_errors(self):
        crt = crt_decompose(12)
        with pytest.raises(ValueError, match="out of range"):
            product_lift(AffineMap(3, 2, 0), crt, 2)
        with pytest.raises(ValueError, match="does not match"):
            product_lift(AffineMap(3, 2, 0), crt, 0)


class TestConstructSquare:
    def test_smallest_modulus(self):
        witness = construct_square(12)
        assert witness.quadruple == (
            AffineMap(12, 1, 4),
            AffineMap(12, 5, 0),
            AffineMap(12, 1, 9),
            AffineMap(12, 7, 0),
        )
        assert (witness.factor_f.q, witness.factor_g.q) == (3, 4)

    def test_768(self):
        witness = construct_square(768)
        assert witness.quadruple == (
            AffineMap(768, 1, 256),
            AffineMap(768, 257, 0),
            AffineMap(768, 1, 513),
            AffineMap(768, 511, 0),
        )

    def test_prime_power_has_no_square(self):
        with pytest.raises(NoSquareError) as exc_info:
            construct_square(9)
        assert exc_info.value.verdict.reason == REASON_PRIME_POWER

    def test_every_witness_verifies(self):
        for n in range(2, 200):
            if not classify_zn(n).exists:
                continue
            witness = construct_square(n)
            assert verify_square(*witness.quadruple).is_square


class TestProductFamilyLift:
    def test_noncommuting_families(self):
        crt = crt_decompose(12)
        fam_a = [AffineMap(3, 1, 1), AffineMap(3, 2, 0)]
        fam_b = [AffineMap(4, 1, 1), AffineMap(4, 3, 0)]
        lifted_a, lifted_b = product_family_lift(fam_a, fam_b, crt)
        assert all(f.commutes(g) for f in lifted_a for g in lifted_b)
        assert not lifted_a[0].commutes(lifted_a[1])
        assert not lifted_b[0].commutes(lifted_b[1])

    def test_singletons(self):
        crt = crt_decompose(12)
        lifted_a, lifted_b = product_family_lift(
            [AffineMap(3, 2, 1)], [AffineMap(4, 3, 2)], crt
        )
        assert lifted_a[0].commutes(lifted_b[0])

    def test_equal_elements_stay_commuting(self):
        crt = crt_decompose(12)
        fam_a = [AffineMap(3, 2, 1), AffineMap(3, 2, 1)]
        lifted_a, _ = product_family_lift(fam_a, [AffineMap(4, 3, 0)], crt)
        assert lifted_a[0].commutes(lifted_a[1])

    def test_same_factor_rejected(self):
        crt = crt_decompose(12)
        with pytest.raises(ValueError, match="both families"):
            product_family_lift([AffineMap(3, 1, 1)], [AffineMap(3, 2, 0)], crt)

    def test_internal_relations_preserved_random(self):
        rng = random.Random(23)
        for n in (12, 15, 20):
            crt = crt_decompose(n)
            qa, qb = crt.factors[0].q, crt.factors[1].q
            for _ in range(40):
                fam_a = [rng.choice(agl(qa)) for _ in range(rng.randrange(1, 5))]
                fam_b = [rng.choice(agl(qb)) for _ in range(rng.randrange(1, 5))]
                lifted_a, lifted_b = product_family_lift(fam_a, fam_b, crt)
                for i in range(len(fam_a)):
                    for j in range(len(fam_a)):
                        assert lifted_a[i].commutes(lifted_a[j]) == fam_a[i].commutes(fam_a[j])
                for i in range(len(fam_b)):
                    for j in range(len(fam_b)):
                        assert lifted_b[i].commutes(lifted_b[j]) == fam_b[i].commutes(fam_b[j])
                assert all(f.commutes(g) for f in lifted_a for g in lifted_b)
