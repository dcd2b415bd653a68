"""Fourier calculus on a lattice and the local Poisson identity.

Finitely supported functions transform into finite sums of evaluation
monomials; integrating over characters trivial on a sublattice keeps
exactly the exponents inside it, and summing a function over a coset
always equals the corresponding integral of its transform.
"""

from motzeta import (CharFunction, L, ONE, Sublattice, fourier,
                     fourier_invert, integrate_dual, partial_integrate,
                     poisson_both_sides)

print("== transforms are evaluation-monomial sums ==")
psi = CharFunction(2, {(0, 0): ONE, (1, 0): L, (2, 1): L + 1})
transform = fourier(psi)
for m, c in sorted(transform.terms.items()):
    print(f"   coefficient of ev{m}: {c}")

print()
print("== integration over the dual ==")
even = Sublattice(2, [[2, 0], [0, 1]])
print("sum of coefficients with exponent in 2Z x Z:",
      integrate_dual(transform, even))
print("constant term only:", integrate_dual(transform, Sublattice.zero(2)))

print()
print("== inversion recovers values ==")
for x in [(0, 0), (1, 0), (2, 1), (5, 5)]:
    print(f"   value at {x}: {fourier_invert(transform, x)}")

print()
print("== partial integration along a splitting ==")
partial = partial_integrate(transform, [[1, 0]], [[0, 1]],
                            Sublattice.zero(1))
print("keep terms with trivial first component, project to the second:")
for m, c in sorted(partial.terms.items()):
    print(f"   ev{m}: {c}")

print()
print("== the Poisson identity, both sides computed independently ==")
subgroup = Sublattice(2, [[1, 1]])
for g in [(0, 0), (1, 0), (1, -1)]:
    left, right = poisson_both_sides(psi, subgroup, g)
    print(f"   shift {g}: sum over coset = {left}, "
          f"integral of transform = {right}")
