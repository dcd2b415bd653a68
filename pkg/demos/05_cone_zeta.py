"""Lattice-point series of cones and their residue constants.

The series of a cone along a positive direction is an exact rational
function; clearing its pole at T = 1 produces the cone volume constant.
Shifted cones decompose by inclusion-exclusion, and convolving with a
finite weight keeps the special value computable by two routes.
"""

from motzeta import (ConeFan, L, ONE, chi_value, convolution_f1,
                     l_series_direction, residue_check, shifted_cone_check)
from motzeta.verify import p2_convolution_instance

print("== a subdivided planar cone ==")
cone = ConeFan(2, [[1, 0], [1, 1], [1, 2]], [[0, 1], [1, 2]],
               name="subdivided")
series = l_series_direction(cone, (1, 1))
print("summand exponent multisets:", sorted(series.summands))
print("lattice points by level:", series.expand(10))

print()
print("== residue at T = 1 ==")
print("volume constant:", chi_value(cone, (1, 1)))
data = residue_check(cone, (1, 1))
print(f"clearing exponent a = {data.a}; "
      f"((1 - T^{data.a})^2 L)(1) = {data.special_value} "
      f"= {data.a}^2 * {data.chi}")

print()
print("== shifted cones ==")
for z in [(0, 0), (1, 1), (2, 3)]:
    print(f"   shift by {z}: inclusion-exclusion identity holds:",
          shifted_cone_check(cone, z, 15))

print()
print("== convolution along the diagonal of the plane's degree lattice ==")
seq, cf = p2_convolution_instance()
weight = {(0, 0, 0): ONE, (1, 0, 0): L}
result = convolution_f1(weight, seq, cf, (1, 1, 1), 12)
print("series coefficients by level:",
      {m.t[0]: str(c) for m, c in result.series.sorted_terms()})
print("special value, series route:   ", result.value_series_route)
print("special value, volume route:   ", result.value_volume_route)
print("routes agree:", result.routes_agree())
