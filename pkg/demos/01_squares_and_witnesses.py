"""Which moduli admit a cross-commuting nonabelian square, and what one looks like.

A quadruple (F0, F1, G0, G1) in AGL1(Z/nZ) is a cross-commuting nonabelian
square when every F commutes with every G while F0, F1 and G0, G1 each fail
to commute.  Existence depends only on the prime-power shape of n.
"""

from affsq import classify_zn, construct_square, verify_square
from affsq.classify import NoSquareError

# Sweep small moduli: squares appear exactly when at least two prime-power
# factors of n exceed 2.
print("n   exists  reason")
for n in range(2, 31):
    verdict = classify_zn(n)
    print(f"{n:<3} {str(verdict.exists):<7} {verdict.reason}")

# The smallest modulus with a square is 12 = 3 * 4.
witness = construct_square(12)
print("\nwitness for n = 12")
for name, m in zip(("F0", "F1", "G0", "G1"), witness.quadruple):
    print(f"  {name} = x -> {m.a}*x + {m.b}")
print(f"  F side lives on the factor {witness.factor_f.q}, G side on {witness.factor_g.q}")

verdict = verify_square(*witness.quadruple)
print(f"  cross pairs commute: {verdict.cross}")
print(f"  F pair commutes: {verdict.f_pair_commutes}, G pair commutes: {verdict.g_pair_commutes}")
print(f"  is a square: {verdict.is_square}")

# The same construction scales to larger moduli, e.g. 768 = 3 * 256.
big = construct_square(768)
print("\nwitness for n = 768")
print("  " + ", ".join(f"({m.a},{m.b})" for m in big.quadruple))
print(f"  verified: {verify_square(*big.quadruple).is_square}")

# Prime powers never work: the common centralizer of any noncommuting pair
# is abelian, so no G side can be found.
try:
    construct_square(9)
except NoSquareError as exc:
    print(f"\nn = 9: {exc}")
