"""Finite-field ground truth for the symbolic engine.

Closed points of the projective line over F_q are monic irreducible
polynomials plus the point at infinity; morphism spaces are enumerated in
Cox coordinates as tuples of binary forms.  Everything here is
independent of the plethystic machinery, which is the point.
"""

from fractions import Fraction
from functools import lru_cache


class BudgetExceeded(Exception):
    """Enumeration would exceed the configured budget; a clean skip."""


class NonIntegerQuotient(ArithmeticError):
    """The torus action failed to divide the raw count; signals a bug."""


DEFAULT_BUDGET = 10 ** 8

_GF_MODULI = {4: (2, (1, 1, 1)), 8: (2, (1, 1, 0, 1)), 9: (3, (1, 0, 1))}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GF:
    """Arithmetic in F_q; tables for the prime powers 4, 8, 9."""

    def __init__(self, q):
        self.q = int(q)
        if _is_prime(self.q):
            self.p = self.q
            self._mul = None
            self._inv = None
        elif self.q in _GF_MODULI:
            p, modulus = _GF_MODULI[self.q]
            self.p = p
            self._build_tables(p, modulus)
        else:
            raise ValueError(
                f"q = {q} not supported (primes, or prime powers up to 9)")

    def _build_tables(self, p, modulus):
        q = self.q
        deg = len(modulus) - 1

        def digits(a):
            out = []
            for _ in range(deg):
                out.append(a % p)
                a //= p
            return out

        def undigits(v):
            total = 0
            for c in reversed(v):
                total = total * p + c
            return total

        def polymulmod(a, b):
            prod = [0] * (2 * deg)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] = (prod[i + j] + x * y) % p
            for i in range(len(prod) - 1, deg - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j in range(len(modulus) - 1):
                        prod[i - deg + j] = (prod[i - deg + j] - c * modulus[j]) % p
            return prod[:deg]

        self._add = [[undigits([(x + y) % p for x, y in
                                zip(digits(a), digits(b))])
                      for b in range(q)] for a in range(q)]
        self._mul = [[undigits(polymulmod(digits(a), digits(b)))
                      for b in range(q)] for a in range(q)]
        self._neg = [undigits([(-x) % p for x in digits(a)]) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
        self._inv = inv

    def add(self, a, b):
        if self._mul is None:
            return (a + b) % self.q
        return self._add[a][b]

    def neg(self, a):
        if self._mul is None:
            return (-a) % self.q
        return self._neg[a]

    def mul(self, a, b):
        if self._mul is None:
            return (a * b) % self.q
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError
        if self._mul is None:
            return pow(a, self.q - 2, self.q)
        return self._inv[a]


def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_rem(f, g, field):
    """Remainder of f modulo monic g over the field; dense little-endian."""
    f = list(f)
    _poly_trim(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and f:
        c = f[-1]
        shift = len(f) - 1 - dg
        for i in range(dg + 1):
            f[shift + i] = field.add(f[shift + i], field.neg(field.mul(c, g[i])))
        _poly_trim(f)
    return f


@lru_cache(maxsize=None)
def monic_irreducibles(q, degree):
    """All monic irreducible polynomials of the given degree over F_q."""
    field = GF(q)
    if degree == 1:
        return tuple((a, 1) for a in range(q))
    smaller = []
    for e in range(1, degree // 2 + 1):
        smaller.extend(monic_irreducibles(q, e))
    out = []

    def all_tuples(k):
        if k == 0:
            yield ()
            return
        for rest in all_tuples(k - 1):
            for a in range(q):
                yield rest + (a,)

    for lower in all_tuples(degree):
        f = lower + (1,)
        if all(poly_rem(f, g, field) for g in smaller):
            out.append(f)
    return tuple(out)


def _moebius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def closed_point_counts(q, dmax, weil_numerator=None):
    """Numbers N_d of closed points of degree d <= dmax on the curve.

    Default curve is the projective line (#C(F_{q^m}) = q^m + 1).  For
    other curves supply the integer coefficients of the Weil zeta
    numerator (constant term 1); point counts follow from its inverse
    roots via Newton's identities.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    coeffs = list(weil_numerator) if weil_numerator else [1]
    if coeffs[0] != 1:
        raise ValueError("Weil numerator must have constant term 1")
    # Power sums of the inverse roots of the numerator.
    power_sums = [0] * (dmax + 1)
    for k in range(1, dmax + 1):
        acc = k * (coeffs[k] if k < len(coeffs) else 0)
        for i in range(1, k):
            acc += (coeffs[i] if i < len(coeffs) else 0) * power_sums[k - i]
        power_sums[k] = -acc
    rational_counts = [0] * (dmax + 1)
    for m in range(1, dmax + 1):
        rational_counts[m] = q ** m + 1 - power_sums[m]
    out = []
    for d in range(1, dmax + 1):
        total = 0
        for e in range(1, d + 1):
            if d % e == 0:
                total += _moebius(e) * rational_counts[d // e]
        if total % d:
            raise ArithmeticError("closed point count is not integral")
        out.append(total // d)
    return out


class FqCurve:
    """The base curve over F_q together with its closed-point counts."""

    __slots__ = ("q", "dmax", "counts", "genus")

    def __init__(self, q, dmax, weil_numerator=None, genus=0):
        self.q = int(q)
        self.dmax = int(dmax)
        self.genus = int(genus)
        self.counts = closed_point_counts(q, dmax, weil_numerator)

    def n_points(self, d):
        return self.counts[d - 1]


# ---------------------------------------------------------------------------
# closed-point Euler products


def _series_mul(a, b, trunc):
    out = {}
    for t1, c1 in a.items():
        d1 = sum(t1)
        for t2, c2 in b.items():
            if d1 + sum(t2) > trunc:
                continue
            key = tuple(x + y for x, y in zip(t1, t2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _series_pow(a, n, trunc, nt):
    out = {(0,) * nt: Fraction(1)}
    base = a
    while n:
        if n & 1:
            out = _series_mul(out, base, trunc)
        n >>= 1
        if n:
            base = _series_mul(base, base, trunc)
    return out


def euler_product_specialize(factor, q, trunc, weil_numerator=None):
    """Closed-point Euler product of a z-free local factor, over F_q.

    The factor at a degree-d point is the local factor with L replaced by
    q^d (the class of a constant family over a degree-d point counts its
    residue-field points) and T_a replaced by T_a^d; the product over all
    closed points is truncated at total degree ``trunc``.  Returns a map
    from T-exponent tuples to Fractions.
    """
    series = factor.series if hasattr(factor, "series") else factor
    if series.nz:
        raise ValueError("oracle specialization needs a z-free factor")
    nt = series.nt
    counts = closed_point_counts(q, trunc, weil_numerator)
    result = {(0,) * nt: Fraction(1)}
    for d in range(1, trunc + 1):
        local = {}
        for mono, coeff in series.terms.items():
            if d * mono.total_t_degree() > trunc:
                continue
            local[tuple(d * x for x in mono.t)] = coeff.specialize(q ** d)
        powered = _series_pow(local, counts[d - 1], trunc, nt)
        result = _series_mul(result, powered, trunc)
    return result


# ---------------------------------------------------------------------------
# morphism counting in Cox coordinates


def count_rational_maps_closed_form(d, q):
    """Degree-d morphisms from the line to itself through the torus:
    q^(2d+1) - q^(2d-1), by the coprime-pair zeta argument."""
    if d < 1:
        raise ValueError("need d >= 1")
    return q ** (2 * d + 1) - q ** (2 * d - 1)


def _nonzero_forms(q, degree):
    """All nonzero binary forms of the given degree, as coefficient
    tuples (c_0, ..., c_degree) meaning sum c_i x^i y^(degree - i)."""
    out = []

    def rec(prefix):
        if len(prefix) == degree + 1:
            if any(prefix):
                out.append(tuple(prefix))
            return
        for a in range(q):
            rec(prefix + [a])

    rec([])
    return out


def count_hom_fq(fan, d, q, budget=None):
    """Count degree-d morphisms from the line to the toric variety whose
    generic point lands in the torus, by brute force over F_q.

    Enumerates tuples of nonzero binary forms (f_a) with deg f_a = d_a
    such that at every closed point the set of vanishing coordinates
    spans a cone of the fan, then divides by the free action of the
    (q-1)^r Cox torus.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    d = tuple(int(x) for x in d)
    if len(d) != len(fan.rays):
        raise ValueError("degree vector arity mismatch")
    if any(x < 0 for x in d):
        raise ValueError("degree vector must be effective")
    field = GF(q)
    dmax = max(d) if d else 0

    points = []          # (kind, data): finite points carry a monic irreducible
    for e in range(1, dmax + 1):
        for g in monic_irreducibles(q, e):
            points.append(("finite", g))
    points.append(("infinity", None))
    n_points = len(points)

    n_tuples = 1
    for da in d:
        n_tuples *= q ** (da + 1) - 1
    if n_tuples * max(1, n_points) > budget:
        raise BudgetExceeded(
            f"{n_tuples} tuples x {n_points} points exceeds budget {budget}")

    masks_per_ray = []
    for da in d:
        masks = []
        for form in _nonzero_forms(q, da):
            mask = 0
            for pi, (kind, g) in enumerate(points):
                if kind == "infinity":
                    vanish = form[da] == 0
                else:
                    if len(g) - 1 > da:
                        vanish = False
                    else:
                        vanish = not poly_rem(form, g, field)
                if vanish:
                    mask |= 1 << pi
            masks.append(mask)
        masks_per_ray.append(masks)

    cone_masks = [sum(1 << i for i in cone) for cone in fan.max_cones]
    valid = set()
    for cm in cone_masks:
        sub = cm
        while True:
            valid.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & cm

    n_rays = len(fan.rays)
    count = 0
    state = [0] * n_points

    def rec(ray_index):
        nonlocal count
        if ray_index == n_rays:
            count += 1
            return
        bit = 1 << ray_index
        for mask in masks_per_ray[ray_index]:
            touched = []
            ok = True
            m = mask
            while m:
                pi = (m & -m).bit_length() - 1
                m &= m - 1
                new = state[pi] | bit
                if new not in valid:
                    ok = False
                    break
                state[pi] = new
                touched.append(pi)
            if ok:
                rec(ray_index + 1)
            for pi in touched:
                state[pi] &= ~bit
            if not ok:
                # roll back the points set before the failure
                m = mask
                while m:
                    pi = (m & -m).bit_length() - 1
                    m &= m - 1
                    state[pi] &= ~bit

    rec(0)

    divisor = (q - 1) ** fan.pic_rank
    if count % divisor:
        raise NonIntegerQuotient(
            f"raw count {count} not divisible by {divisor}")
    return count // divisor


class CoxModel:
    """Enumeration model for one (fan, degree, field) triple."""

    __slots__ = ("fan", "d", "q", "budget")

    def __init__(self, fan, d, q, budget=None):
        self.fan = fan
        self.d = tuple(int(x) for x in d)
        self.q = int(q)
        self.budget = budget

    def count(self):
        return count_hom_fq(self.fan, self.d, self.q, self.budget)
