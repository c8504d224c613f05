"""The same pattern is easy in symmetric groups, prime powers included.

Two 3-cycles with disjoint supports commute with anything on the other
support, so S_n carries a cross-commuting nonabelian square for every
n >= 6.  The affine obstruction at prime powers is therefore a feature of
affine structure, not of group size.
"""

from affsq import classify_zn, parse_cycles, sn_square

for n in (6, 8, 9, 16):
    f0, f1, g0, g1 = sn_square(n)
    cross_ok = all(f.commutes(g) for f in (f0, f1) for g in (g0, g1))
    affine = classify_zn(n).exists
    print(f"S_{n}: {f0.cycle_string()} {f1.cycle_string()} | "
          f"{g0.cycle_string()} {g1.cycle_string()}  "
          f"square={cross_ok and not f0.commutes(f1) and not g0.commutes(g1)}  "
          f"(affine group mod {n}: {affine})")

# Permutations round-trip through cycle notation.
p = parse_cycles("(1 2 3)(4 5)", 6)
q = parse_cycles("(2 4)", 6)
print(f"\np = {p.cycle_string()}, q = {q.cycle_string()}")
print(f"p o q = {p.compose(q).cycle_string()}")
print(f"q o p = {q.compose(p).cycle_string()}")
print(f"commute: {p.commutes(q)}")
