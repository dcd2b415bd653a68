"""The coefficient ring: Laurent polynomials in the Lefschetz class.

Every class the engine manipulates lives in Z[L, L^-1], where L is the
class of the affine line.  This script walks through dimensions,
specializations, the dimensional completion, and the Tauberian transfer
that turns zeta coefficients into stable normalized classes.
"""

from motzeta import (CompletionElement, L, ONE, radius_estimate,
                     specialize_q, tauberian_transfer, virtual_dim)
from motzeta.lefschetz import LefschetzLaurent

print("== the ring Z[L, L^-1] ==")
plane = L ** 2 + L + 1
print("class of the projective plane:", plane)
print("virtual dimension:", virtual_dim(plane))
print("points over F_4:", specialize_q(plane, 4))

shifted = plane * LefschetzLaurent({-3: 1})
print("normalized by L^-3:", shifted, "-> dimension", virtual_dim(shifted))

print()
print("== radius of convergence, estimated on a prefix ==")
kapranov = [LefschetzLaurent({j: 1 for j in range(i + 1)})
            for i in range(1, 9)]
print("coefficients [P^i] give radius estimate", radius_estimate(kapranov))

print()
print("== Tauberian transfer ==")
# Divide the constant series 1/(1-T) by (1 - L^2 T) and watch the
# normalized coefficients approach the value of the series at L^-2.
family = {(d,): ONE for d in range(9)}
transfer = tauberian_transfer(family, (2,), (8,))
precision = 30
value = CompletionElement({-2 * j: 1 for j in range(16)}, precision)
print("d   b_d L^{-2d} - F(L^-2): dimension")
for d in range(1, 9):
    normalized = CompletionElement.from_laurent(
        transfer[(d,)].shift(-2 * d), precision)
    print(f"{d}   {(normalized - value).virtual_dim()}")
print("the dimensions fall linearly: the transfer stabilizes.")
