"""Acceptance gate: every release criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line (visible under pytest -s); a FAIL
line is always accompanied by the assertion failure itself.
"""

import itertools
import json
import math
import random
import subprocess
import sys
import time

import numpy as np
import pytest

from affsq.algebra import AffineMap, verify_square
from affsq.centralizer import (
    CommutationMatrix,
    LocalRing,
    _local_centralizer_pairs,
    kernel,
    smith_normal_form,
    valuation,
)
from affsq.classify import classify_zn, construct_square, local_has_noncommuting_pair
from affsq.css import (
    build_block_arrays,
    detect_commuting_2x3,
    gf2_product_is_zero,
    tanner_girth,
    two_row_array,
)
from affsq.oracle import brute_force_square_exists, sn_square


def report(criterion, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def units_and_elements(q):
    pairs = [(a, b) for a in range(q) if math.gcd(a, q) == 1 for b in range(q)]
    a_arr = np.array([a for a, _ in pairs], dtype=np.int64)
    b_arr = np.array([b for _, b in pairs], dtype=np.int64)
    return pairs, a_arr, b_arr


def test_criterion_1_classification_equivalence():
    start = time.perf_counter()
    mismatches = [
        n
        for n in range(2, 37)
        if brute_force_square_exists(n).found != classify_zn(n).exists
    ]
    elapsed = time.perf_counter() - start
    report(
        1,
        not mismatches and elapsed < 60,
        f"classification equals brute-force search for n=2..36, "
        f"mismatches={mismatches} ({elapsed:.1f}s < 60s)",
    )


def test_criterion_2_canonical_witnesses():
    start = time.perf_counter()
    twelve = construct_square(12)
    ok_12 = twelve.quadruple == (
        AffineMap(12, 1, 4),
        AffineMap(12, 5, 0),
        AffineMap(12, 1, 9),
        AffineMap(12, 7, 0),
    ) and verify_square(*twelve.quadruple).is_square
    big = construct_square(768)
    ok_768 = big.quadruple == (
        AffineMap(768, 1, 256),
        AffineMap(768, 257, 0),
        AffineMap(768, 1, 513),
        AffineMap(768, 511, 0),
    ) and verify_square(*big.quadruple).is_square
    elapsed = time.perf_counter() - start
    report(
        2,
        ok_12 and ok_768 and elapsed < 1,
        f"construct_square reproduces the n=12 and n=768 witnesses exactly "
        f"({elapsed:.3f}s < 1s)",
    )


def test_criterion_3_local_obstruction():
    start = time.perf_counter()
    counterexamples = 0
    pairs_checked = 0
    for q in (4, 8, 9, 16, 25, 27):
        ring = LocalRing.from_modulus(q)
        p, e = ring.p, ring.e
        pairs, a_arr, b_arr = units_and_elements(q)
        for i, (a0, b0) in enumerate(pairs):
            for a1, b1 in pairs[i + 1 :]:
                if ((a0 - 1) * b1 - (a1 - 1) * b0) % q == 0:
                    continue
                pairs_checked += 1
                # independent brute-force centralizer scan of the whole group
                mask = (((a0 - 1) * b_arr - (a_arr - 1) * b0) % q == 0) & (
                    ((a1 - 1) * b_arr - (a_arr - 1) * b1) % q == 0
                )
                ca, cb = a_arr[mask], b_arr[mask]
                # the Smith-kernel computation must produce the same set
                structural = _local_centralizer_pairs(q, p, e, (a0, b0), (a1, b1))
                if structural != list(zip(ca.tolist(), cb.tolist())):
                    counterexamples += 1
                    continue
                # set-level obstruction: the common centralizer is abelian
                comm = ((ca[:, None] - 1) * cb[None, :] - (ca[None, :] - 1) * cb[:, None]) % q
                if not (comm == 0).all():
                    counterexamples += 1
    elapsed = time.perf_counter() - start
    report(
        3,
        counterexamples == 0 and elapsed < 120,
        f"common centralizer abelian for all {pairs_checked} noncommuting pairs "
        f"over q in (4,8,9,16,25,27), brute force and Smith kernel agreeing "
        f"({elapsed:.1f}s < 120s)",
    )


def _snf_checks(entries, ring):
    q = ring.q
    dec = smith_normal_form(entries, ring)
    u, v = dec.u, dec.v
    umv = tuple(
        tuple(sum(u[i][k] * entries[k][l] for k in range(2)) for l in range(2))
        for i in range(2)
    )
    umv = tuple(
        tuple(sum(umv[i][k] * v[k][j] for k in range(2)) % q for j in range(2))
        for i in range(2)
    )
    if umv != ((dec.diagonal[0], 0), (0, dec.diagonal[1])):
        return False
    for mat in (u, v):
        if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]) % ring.p == 0:
            return False
    brute = sorted(
        (x, d)
        for x in range(q)
        for d in range(q)
        if (entries[0][0] * x + entries[0][1] * d) % q == 0
        and (entries[1][0] * x + entries[1][1] * d) % q == 0
    )
    if kernel(CommutationMatrix(ring, entries)) != brute:
        return False
    delta = (entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]) % q
    if delta != 0 and dec.alpha + dec.beta != valuation(delta, ring):
        return False
    return True


def test_criterion_4_snf_soundness():
    start = time.perf_counter()
    failures = 0
    exhaustive = 0
    for p, e in ((2, 2), (3, 2)):
        ring = LocalRing(p, e)
        for flat in itertools.product(range(ring.q), repeat=4):
            exhaustive += 1
            if not _snf_checks((flat[:2], flat[2:]), ring):
                failures += 1
    sampled = 0
    for p, e in ((2, 3), (2, 4), (5, 2), (3, 3)):
        ring = LocalRing(p, e)
        rng = random.Random(ring.q)
        for _ in range(10_000):
            sampled += 1
            entries = (
                (rng.randrange(ring.q), rng.randrange(ring.q)),
                (rng.randrange(ring.q), rng.randrange(ring.q)),
            )
            if not _snf_checks(entries, ring):
                failures += 1
    elapsed = time.perf_counter() - start
    report(
        4,
        failures == 0 and elapsed < 60,
        f"SNF sound on {exhaustive} exhaustive (mod 4, 9) and {sampled} random "
        f"(mod 8,16,25,27) matrices: product, units, kernel, valuation law "
        f"({elapsed:.1f}s < 60s)",
    )


def test_criterion_5_local_pair_existence():
    start = time.perf_counter()
    failures = []
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32):
        pairs, _, _ = units_and_elements(q)
        found = any(
            ((a0 - 1) * b1 - (a1 - 1) * b0) % q != 0
            for i, (a0, b0) in enumerate(pairs)
            for a1, b1 in pairs[i + 1 :]
        )
        if found != local_has_noncommuting_pair(q) or found != (q != 2):
            failures.append(q)
    elapsed = time.perf_counter() - start
    report(
        5,
        not failures and elapsed < 30,
        f"noncommuting pair exists iff q != 2 on the 13-modulus sweep, "
        f"failures={failures} ({elapsed:.1f}s < 30s)",
    )


def test_criterion_6_product_lift_fidelity():
    from affsq.algebra import crt_decompose
    from affsq.classify import product_family_lift

    start = time.perf_counter()
    rng = random.Random(101)
    failures = 0
    checked = 0
    for n in (12, 15, 20):
        crt = crt_decompose(n)
        qa, qb = crt.factors[0].q, crt.factors[1].q
        agl_a = [AffineMap(qa, a, b) for a in range(qa) if math.gcd(a, qa) == 1 for b in range(qa)]
        agl_b = [AffineMap(qb, a, b) for a in range(qb) if math.gcd(a, qb) == 1 for b in range(qb)]
        for _ in range(40):
            checked += 1
            fam_a = [rng.choice(agl_a) for _ in range(rng.randrange(1, 5))]
            fam_b = [rng.choice(agl_b) for _ in range(rng.randrange(1, 5))]
            lifted_a, lifted_b = product_family_lift(fam_a, fam_b, crt)
            relations_a = [
                [fam_a[i].commutes(fam_a[j]) for j in range(len(fam_a))]
                for i in range(len(fam_a))
            ]
            lifted_relations_a = [
                [lifted_a[i].commutes(lifted_a[j]) for j in range(len(fam_a))]
                for i in range(len(fam_a))
            ]
            relations_b = [
                [fam_b[i].commutes(fam_b[j]) for j in range(len(fam_b))]
                for i in range(len(fam_b))
            ]
            lifted_relations_b = [
                [lifted_b[i].commutes(lifted_b[j]) for j in range(len(fam_b))]
                for i in range(len(fam_b))
            ]
            cross = all(f.commutes(g) for f in lifted_a for g in lifted_b)
            if relations_a != lifted_relations_a or relations_b != lifted_relations_b or not cross:
                failures += 1
    elapsed = time.perf_counter() - start
    report(
        6,
        checked >= 100 and failures == 0 and elapsed < 30,
        f"{checked} random family lifts over n in (12,15,20) preserve internal "
        f"relations with all cross pairs commuting ({elapsed:.1f}s < 30s)",
    )


def test_criterion_7_block_arrays():
    start = time.perf_counter()
    f0, f1 = AffineMap(12, 1, 4), AffineMap(12, 5, 0)
    g0, g1 = AffineMap(12, 1, 9), AffineMap(12, 7, 0)
    fs = [f0, f1, f0.compose(f1)]
    gs = [g0, g1, g0.compose(g1)]
    pair = build_block_arrays(fs, gs)
    orthogonal = gf2_product_is_zero(pair).is_zero

    t = AffineMap(12, 1, 1)
    commuting_family = [AffineMap.identity(12), t, t.compose(t)]
    windows = detect_commuting_2x3(commuting_family)
    girth = tanner_girth(two_row_array(commuting_family), cap=12)
    noncommuting_windows = detect_commuting_2x3(fs)
    elapsed = time.perf_counter() - start
    report(
        7,
        orthogonal
        and windows
        and girth is not None
        and girth <= 12
        and noncommuting_windows == []
        and elapsed < 10,
        f"HX*HZ^T=0 over GF(2) for the m=3, n=12 families; commuting family has "
        f"{len(windows)} windows and girth {girth} <= 12; noncommuting family has "
        f"none ({elapsed:.1f}s < 10s)",
    )


def test_criterion_8_permutation_square():
    start = time.perf_counter()
    ok = True
    for n in range(6, 13):
        p0, p1, p2, p3 = sn_square(n)
        ok = ok and all(f.commutes(g) for f in (p0, p1) for g in (p2, p3))
        ok = ok and not p0.commutes(p1) and not p2.commutes(p3)
    with pytest.raises(ValueError):
        sn_square(5)
    elapsed = time.perf_counter() - start
    report(
        8,
        ok and elapsed < 1,
        f"sn_square verifies for 6 <= n <= 12 and rejects n=5 ({elapsed:.3f}s < 1s)",
    )


def _stable_cli_output(args, cwd):
    proc = subprocess.run(
        [sys.executable, "-m", "affsq.cli", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )
    assert proc.returncode == 0, proc.stderr

    def strip(obj):
        if isinstance(obj, dict):
            return {k: strip(v) for k, v in obj.items() if k != "elapsedMs"}
        if isinstance(obj, list):
            return [strip(v) for v in obj]
        return obj

    return json.dumps(strip(json.loads(proc.stdout)), indent=2)


def test_criterion_9_cli_byte_stability(tmp_path):
    start = time.perf_counter()
    commands = [
        ("classify", "12"),
        ("search", "12"),
        ("construct", "12"),
        ("construct", "768"),
        ("css", "12", "3", "1,4", "5,0", "5,8", "1,9", "7,0", "7,3", "--out", "golden"),
    ]
    unstable = []
    for args in commands:
        first = _stable_cli_output(args, tmp_path)
        files_first = {
            path.name: path.read_bytes() for path in tmp_path.glob("golden.*")
        }
        second = _stable_cli_output(args, tmp_path)
        files_second = {
            path.name: path.read_bytes() for path in tmp_path.glob("golden.*")
        }
        if first != second or files_first != files_second:
            unstable.append(" ".join(args))
    elapsed = time.perf_counter() - start
    report(
        9,
        not unstable,
        f"CLI reports and alist files byte-stable across repeat runs, "
        f"unstable={unstable} ({elapsed:.1f}s)",
    )
