"""
Classical pieces: Burau and Lawrence-Krammer-Bigelow
====================================================

The gamma block of a sigma-only word is the reduced Burau matrix, which we
rebuild independently from Fox derivatives.  For k = 2 only the image of
sigma_1 (g = 1, n = 3) is tabulated; its w-block turns into the LKB matrix
after t -> -t and the change to the v-basis.
"""

from surfbraid import classical_block, fox_oracle_sigma_block, phi1_word
from surfbraid.rep import lkb_compare_sigma1, lkb_sigma, phi2_curated, v_basis_change, v_block

w = "s1 s2^-1 s1 s3"
print("gamma block of", w)
print(classical_block(phi1_word(2, 4, w), 4))
print("Fox oracle agrees:", classical_block(phi1_word(2, 4, w), 4) == fox_oracle_sigma_block(4, w, 2))
print()

print(phi2_curated("s1").block(["w11", "w12", "w22"], ["w11", "w12", "w22"]))
print()
print("v-basis in terms of w:")
print(v_basis_change())
print()
print("v-block after t -> -t:")
print(v_block(subst=True))
print()
print("LKB sigma_1, n = 3:")
print(lkb_sigma(3, 1))
print("equal:", lkb_compare_sigma1(), "| without the substitution:", lkb_compare_sigma1(subst=False))
