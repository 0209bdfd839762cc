"""Deciding isomorphism of Cuntz-Krieger algebras.

The pair (K_0, strong Ext) is a complete invariant: two algebras are
isomorphic exactly when both groups match, and stably isomorphic exactly
when K_0 alone matches.
"""

from ckinv import (gen_amplified, gen_cuntz, invariants, is_isomorphic_ck,
                   is_stably_isomorphic_ck, pi_aut, validate)

o3 = gen_cuntz(3)

# Amplification O_3 x M_k: ExtS1 picks up Z/gcd(2, k).
for k in (1, 2, 3, 4):
    m = gen_amplified(3, k)
    r = invariants(m)
    verdict = "isomorphic" if is_isomorphic_ck(o3, m) else "distinct"
    print(f"O_3 x M_{k}: ExtS1 = {r.ext_s1}  ->  {verdict} from O_3")

# gcd(2,3) = 1, so O_3 x M_3 is isomorphic to O_3 itself, while
# O_3 x M_2 is only stably isomorphic to it.
m2 = gen_amplified(3, 2)
print("\nO_3 vs O_3 x M_2:")
print("  isomorphic:", is_isomorphic_ck(o3, m2))
print("  stably isomorphic:", is_stably_isomorphic_ck(o3, m2))

# The homotopy groups of Aut decide the same question.
a = validate([[1, 1, 1], [1, 1, 1], [1, 0, 0]])
b = a.transpose()
print("\n3x3 pair, homotopy groups as the deciding invariant:")
for i in (1, 2):
    print(f"  pi{i}(Aut):  {pi_aut(a, i)}  vs  {pi_aut(b, i)}")
print("  isomorphic:", is_isomorphic_ck(a, b))
