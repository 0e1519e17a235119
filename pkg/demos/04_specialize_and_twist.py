"""
Numbers and characters
======================

A commutative target cannot see the commutators of H, so q must go to 1
and t to a square root of 1.  Central characters rescale the matrices
without breaking any relation, but the surface relation forces the
sigma image to be trivial.
"""

from surfbraid import Character, phi1_word, specialize, twist, validate_specialization, verify_relations

print(validate_specialization({"q": 2}, g=1))
print(validate_specialization({"q": 1, "t": -1, "m1": 3}, g=1, k=2))
print(specialize(phi1_word(1, 3, "s1 a1"), {"q": 1, "m1": 2, "l1": -1}))
print()

chi = Character.parse("a1=q, b1=q^-2", g=1).validate(3)
print(twist(chi, phi1_word(1, 3, "a1 b1"), "a1 b1"))
print("twisted relations ok:",
      verify_relations(1, 3, lambda w: twist(chi, phi1_word(1, 3, w), w)).ok)

bad = Character.parse("s=q", g=1)
print("sigma -> q breaks:", [str(r) for r in bad.violations(3)])
