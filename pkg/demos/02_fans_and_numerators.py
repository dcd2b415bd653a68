"""Fans, their validation, and the height numerator polynomial.

A complete regular fan is certified by primitivity, unimodularity and
the wall condition; the numerator Q of the local height transform and
the class of the variety come straight from the cone combinatorics.
"""

from motzeta import (class_of_variety, preset_fan, q_sigma,
                     q_sigma_at_L_inv)
from motzeta.fan import Fan, WallConditionViolation

print("== preset fans ==")
for name in ("P1", "P2", "P1xP1", "Hirzebruch(1)", "Bl1P2"):
    fan = preset_fan(name)
    print(f"{fan.name}: rank {fan.rank}, rays {list(map(list, fan.rays))}, "
          f"Picard rank {fan.pic_rank}")
    print(f"   Q = {q_sigma(fan)}")
    print(f"   [X] = {class_of_variety(fan)}")
    print(f"   Q(L^-1) = {q_sigma_at_L_inv(fan)}")

print()
print("== the wall condition catches incomplete fans ==")
try:
    Fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2]])
except WallConditionViolation as exc:
    print("rejected:", exc)

print()
print("== cone decomposition ==")
fan = preset_fan("P2")
for point in [(0, 0), (1, 0), (-1, -2), (2, 3)]:
    face, coeffs = fan.cone_decompose(point)
    print(f"{point} lies in the relative interior of cone {face} "
          f"with coefficients {coeffs}")
