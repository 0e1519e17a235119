"""
The k = 1 representation
========================

Generator matrices in the basis g1..g_{n-1}, a1..a_g, b1..b_g.  Columns are
images; words are composed left to right.
"""

from surfbraid import phi1_generator, phi1_word, verify_relations

for gen in ("s1", "a1", "b2"):
    print(f"Phi_1({gen}), g=2, n=3")
    print(phi1_generator(2, 3, gen))
    print()

# the surface relation s1 b1 s1 a1 s1 = a1 s1 b1
lhs = phi1_word(2, 3, "s1 b1 s1 a1 s1")
rhs = phi1_word(2, 3, "a1 s1 b1")
print("SCR holds:", lhs == rhs)

# every defining relation, for a few surfaces
for g, n in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]:
    report = verify_relations(g, n, lambda w: phi1_word(g, n, w))
    print(f"g={g} n={n}: {len(report)} relations, ok={report.ok}")
