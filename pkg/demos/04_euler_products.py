"""Motivic Euler products over the projective line.

A local factor with constant term 1 decomposes into line-element
factors; multiplying every multiplicity by the curve class 1 + L and
re-expanding yields the Euler product over the curve.  Its coefficients
are configuration classes, and specializing L to a prime power must
reproduce the honest product over closed points.
"""

from motzeta import (GradedMonomial, GradedSeries, L, ONE, config_class,
                     euler_product_genus0, euler_product_specialize,
                     plethystic_log, torsor_twist)


def univariate(terms, trunc):
    return GradedSeries(1, 0, {GradedMonomial((e,), ()): c
                               for e, c in terms.items()}, trunc)


print("== the Kapranov zeta function of the line ==")
geometric = univariate({e: ONE for e in range(7)}, 6)
product = euler_product_genus0(geometric)
for k in range(7):
    print(f"   coefficient of T^{k}: {product.coefficient((k,))}")

print()
print("== plethystic logarithm of 1 + T ==")
log = plethystic_log(univariate({0: ONE, 1: ONE}, 6))
print("   line-element multiplicities:", dict(log.terms))
squares = euler_product_genus0(univariate({0: ONE, 1: ONE}, 4))
print("   Euler product of 1 + T, coefficient of T^2:",
      squares.coefficient((2,)), " (distinct unordered pairs)")

print()
print("== configuration classes ==")
for pi, label in [({1: 1}, "one point"),
                  ({1: 1, 2: 1}, "ordered distinct pair"),
                  ({1: 2}, "reduced degree-2 divisor"),
                  ({1: 2, 2: 1, 3: 1}, "mixed multiplicities")]:
    print(f"   {label}: {config_class(pi)}")
print("   with a unit attached to each point:",
      torsor_twist({1: 1, 2: 1}))

print()
print("== specialization agrees with the closed-point product ==")
factor = univariate({0: ONE, 1: L, 2: L + 1}, 6)
symbolic = euler_product_genus0(factor)
for q in (2, 3):
    oracle = euler_product_specialize(factor, q, 6)
    checks = all(symbolic.coefficient((k,)).specialize(q)
                 == oracle.get((k,), 0) for k in range(7))
    print(f"   q = {q}: symbolic expansion matches enumeration: {checks}")
