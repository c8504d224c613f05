"""How the common centralizer of two affine maps is computed over Z/p^e.

G = (c, d) commutes with F_i = (a_i, b_i) exactly when b_i*(c-1) equals
(a_i - 1)*d, so the common centralizer of a pair is the kernel of a 2x2
matrix in the parameters (u, d) = (c - 1, d).  Over a local ring the kernel
falls out of a Smith normal form.
"""

from affsq import (
    AffineMap,
    commutation_matrix,
    common_centralizer_local,
    common_centralizer_zn,
    is_abelian,
    kernel,
    smith_normal_form,
)

f0 = AffineMap(9, 1, 1)   # x -> x + 1
f1 = AffineMap(9, 4, 0)   # x -> 4x

cm = commutation_matrix(f0, f1)
print(f"commutation matrix of {f0} and {f1}:")
print(f"  M = {cm.entries}, delta = {cm.delta}")

dec = smith_normal_form(cm.entries, cm.ring)
print(f"  U*M*V = diag{dec.diagonal} with alpha={dec.alpha}, beta={dec.beta}")
print(f"  U = {dec.u}, V = {dec.v}")

print(f"  kernel = {kernel(cm)}")

cent = common_centralizer_local(f0, f1)
print(f"  centralizer elements: {[(g.a, g.b) for g in cent]}")
print(f"  abelian: {is_abelian(cent)}")
print(f"  structure: {cent.generator_description}")

# The abelian outcome is not an accident of this pair: over any Z/p^e the
# common centralizer of a noncommuting pair is always abelian, which is
# exactly why prime powers admit no square.

# Over a composite modulus the computation runs factor by factor and the
# obstruction disappears: a noncommuting pair concentrated on one factor
# leaves the other factor completely free.
f0 = AffineMap(12, 1, 4)
f1 = AffineMap(12, 5, 0)
cent = common_centralizer_zn(f0, f1)
print(f"\ncentralizer of {f0} and {f1} over Z/12:")
print(f"  {[(g.a, g.b) for g in cent]}")
print(f"  abelian: {is_abelian(cent)}")
print("  the noncommuting members (7,0) and (1,9) complete a square")
