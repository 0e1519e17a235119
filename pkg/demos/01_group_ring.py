"""
Arithmetic in H and Z[H]
========================

H is generated by central q, t and four letters per handle.  Any two
elements commute up to a central factor, so every element has a unique
normal form q^a t^b m1^.. l1^.. M1^.. L1^.. ...
"""

from surfbraid import RingElem, RingMode

mode = RingMode.for_k(2, 2)          # genus 2, at least two points: t survives
m1, l1, M1 = mode.gen("m1"), mode.gen("l1"), mode.gen("M1")

# the defining commutators
print("[m1, l1] =", m1 * l1 * m1.inverse() * l1.inverse())
print("[M1, l1] =", M1 * l1 * M1.inverse() * l1.inverse())

# swapping two letters costs a central factor
print("l1 m1    =", l1 * m1)

# with one point t is killed
k1 = RingMode.for_k(2, 1)
print("k=1:     ", k1.gen("m1") * k1.gen("l1") * k1.gen("m1", -1) * k1.gen("l1", -1))

# the group ring is noncommutative as well
x = RingElem.parse("1 - q m1", mode)
y = RingElem.parse("l1 + M1", mode)
print("x y =", x * y)
print("y x =", y * x)
