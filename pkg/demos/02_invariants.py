"""The invariant bundle of a Cuntz-Krieger algebra.

A validated 0-1 matrix determines K-groups, weak/strong extension groups
and the homotopy groups of the automorphism group of O_A, all printed in
one report.
"""

from ckinv import gen_cuntz, invariants, validate

# The Cuntz algebra O_4: K_0 = Z/3, and every homotopy group follows.
report = invariants(gen_cuntz(4))
print("O_4 invariants")
print("  K0 =", report.k0, "  K1 =", report.k1)
print("  ExtW1 =", report.ext_w1, "  ExtW0 =", report.ext_w0)
print("  ExtS1 =", report.ext_s1, "  ExtS0 =", report.ext_s0)
print("  pi1(Aut) =", report.pi1_aut, "  pi2(Aut) =", report.pi2_aut)
print("  stabilized pi1 = pi2 =", report.pi1_aut_stable)

# A matrix and its transpose can have the same K-groups yet different
# strong extension groups -- the classic 3x3 pair:
a = validate([[1, 1, 1],
              [1, 1, 1],
              [1, 0, 0]])
b = a.transpose()
for name, m in (("A", a), ("B = A^t", b)):
    r = invariants(m)
    print(f"\n{name}:  K0 = {r.k0},  ExtS1 = {r.ext_s1},"
          f"  pi1(Aut) = {r.pi1_aut},  pi2(Aut) = {r.pi2_aut}")

print("\nSame K-theory, different homotopy groups: the algebras are not")
print("isomorphic, though they become isomorphic after stabilization.")
