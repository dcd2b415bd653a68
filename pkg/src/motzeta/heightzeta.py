"""Height zeta coefficients of a toric variety over the genus-0 curve.

Two independent routes compute the same numbers.  The direct route sums
configuration classes over balanced labeled partitions of lattice points
(principality at genus 0 is the degree-zero constraint).  The harmonic
route expands the product of twisted Kapranov zeta factors with the
Euler product of the height numerator and extracts the character-trivial
part.  Their agreement is the computational content of the global
Poisson formula; both specialize to finite-field morphism counts.
"""

from fractions import Fraction

from .lefschetz import (CompletionElement, LefschetzLaurent,
                        MINUS_INFINITY, ONE, ZERO, L, rational_curve)
from .series import GradedMonomial, GradedSeries
from .euler import (LabeledPartition, LocalFactor, config_class,
                    euler_product_genus0, plethystic_exp, plethystic_log)
from .fan import q_sigma


class ZetaSeries:
    """Height zeta coefficients indexed by effective degree vectors."""

    __slots__ = ("fan_name", "dmax", "coeffs")

    def __init__(self, fan_name, dmax, coeffs):
        self.fan_name = fan_name
        self.dmax = tuple(int(x) for x in dmax)
        self.coeffs = {tuple(int(x) for x in d): c
                       for d, c in coeffs.items() if not c.is_zero()}

    def coefficient(self, d):
        return self.coeffs.get(tuple(int(x) for x in d), ZERO)

    def degrees(self):
        return sorted(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, ZetaSeries) and self.coeffs == other.coeffs


def support_degrees(fan, dmax):
    """Effective degree vectors below the bound killed by gamma_dual;
    every nonzero zeta coefficient lives here."""
    dmax = _normalize_dmax(fan, dmax)
    out = []

    def rec(prefix):
        if len(prefix) == len(fan.rays):
            if not any(fan.gamma_dual(prefix)):
                out.append(tuple(prefix))
            return
        for v in range(dmax[len(prefix)] + 1):
            rec(prefix + [v])

    rec([])
    return out


def _normalize_dmax(fan, dmax):
    if isinstance(dmax, int):
        return (dmax,) * len(fan.rays)
    dmax = tuple(int(x) for x in dmax)
    if len(dmax) != len(fan.rays):
        raise ValueError("degree bound arity mismatch")
    return dmax


# ---------------------------------------------------------------------------
# local factors


def local_height_factor(fan, trunc):
    """Local height function as a series: 1 plus, for every nonzero
    lattice point of bounded cone height, its character marker times the
    ray monomial of its cone decomposition."""
    nt, nz = len(fan.rays), fan.rank
    terms = {GradedMonomial((0,) * nt, (0,) * nz): ONE}
    for face in fan.faces:
        if not face:
            continue
        for point, coeffs in fan.interior_points(face, trunc):
            t = [0] * nt
            for i, c in coeffs.items():
                t[i] = c
            terms[GradedMonomial(tuple(t), point)] = ONE
    return LocalFactor(GradedSeries(nt, nz, terms, trunc))


def _q_factor_series(fan, trunc, caps=None):
    """The height numerator with X_a replaced by z^(ray_a) T_a."""
    nt, nz = len(fan.rays), fan.rank
    poly = q_sigma(fan)
    terms = {}
    for mono, c in poly.monomials():
        t = tuple(1 if i in mono else 0 for i in range(nt))
        z = [0] * nz
        for i in mono:
            for j in range(nz):
                z[j] += fan.rays[i][j]
        key = GradedMonomial(t, tuple(z))
        terms[key] = terms.get(key, ZERO) + LefschetzLaurent({0: c})
    return GradedSeries(nt, nz, terms, trunc, caps)


def local_fourier_check(fan, trunc):
    """Compare the transform of the local height factor with its rational
    form: the height numerator over the product of twisted geometric
    factors, expanded through the truncation.  The transform of the
    enumeration-by-cones series is the same series with markers read as
    evaluation monomials, so this is an equality of graded series."""
    lhs = local_height_factor(fan, trunc).series
    nt, nz = len(fan.rays), fan.rank
    rhs = _q_factor_series(fan, trunc)
    for i, ray in enumerate(fan.rays):
        geom = {}
        for k in range(trunc + 1):
            t = tuple(k if j == i else 0 for j in range(nt))
            z = tuple(k * x for x in ray)
            geom[GradedMonomial(t, z)] = ONE
        rhs = rhs * GradedSeries(nt, nz, geom, trunc)
    return lhs == rhs


# ---------------------------------------------------------------------------
# the two routes


def zeta_direct_genus0(fan, dmax):
    """Direct route: sum of configuration classes over balanced labeled
    partitions, times the torus class (L-1)^rank.

    A label is a nonzero lattice point; a partition contributes at the
    degree vector given by the weighted sum of cone decompositions, and
    only partitions whose weighted label sum vanishes survive (degree
    zero equals principal at genus 0).
    """
    dmax = _normalize_dmax(fan, dmax)
    nt = len(fan.rays)
    labels = []
    for face in fan.faces:
        if not face:
            continue
        if any(dmax[i] == 0 for i in face):
            continue
        bound = sum(dmax[i] for i in face)
        for point, coeffs in fan.interior_points(face, bound):
            dvec = [0] * nt
            for i, c in coeffs.items():
                dvec[i] = c
            if all(dvec[i] <= dmax[i] for i in range(nt)):
                labels.append((point, tuple(dvec)))
    labels.sort()

    torus = (L - 1) ** fan.rank
    buckets = {}

    def rec(idx, budget, msum, partition):
        if idx == len(labels):
            if not any(msum):
                d = tuple(b - r for b, r in zip(dmax, budget))
                value = config_class(LabeledPartition(dict(partition)))
                buckets[d] = buckets.get(d, ZERO) + value
            return
        point, dvec = labels[idx]
        rec(idx + 1, budget, msum, partition)
        n = 1
        new_budget = budget
        new_msum = msum
        while True:
            new_budget = tuple(b - x for b, x in zip(new_budget, dvec))
            if any(b < 0 for b in new_budget):
                break
            new_msum = tuple(s + x for s, x in zip(new_msum, point))
            partition.append((point, n))
            rec(idx + 1, new_budget, new_msum, partition)
            partition.pop()
            n += 1

    rec(0, dmax, (0,) * fan.rank, [])
    coeffs = {d: torus * v for d, v in buckets.items()}
    return ZetaSeries(fan.name, dmax, coeffs)


def zeta_fourier_genus0(fan, dmax):
    """Harmonic route: expand the product of marker-twisted Kapranov
    factors with the Euler product of the height numerator, keep the
    character-trivial part, and scale by the torus class.

    Agreement with the direct route coefficient by coefficient is the
    global Poisson identity at genus 0.
    """
    dmax = _normalize_dmax(fan, dmax)
    nt, nz = len(fan.rays), fan.rank
    trunc = sum(dmax)
    product = euler_product_genus0(
        LocalFactor(_q_factor_series(fan, trunc, caps=dmax)))
    for i, ray in enumerate(fan.rays):
        kap = {}
        for k in range(dmax[i] + 1):
            t = tuple(k if j == i else 0 for j in range(nt))
            z = tuple(k * x for x in ray)
            kap[GradedMonomial(t, z)] = LefschetzLaurent(
                {j: 1 for j in range(k + 1)})
        product = product * GradedSeries(nt, nz, kap, trunc, dmax)
    torus = (L - 1) ** fan.rank
    coeffs = {}
    for mono, c in product.z_zero_part().terms.items():
        coeffs[mono.t] = torus * c
    series = ZetaSeries(fan.name, dmax, coeffs)
    for d in series.degrees():
        if any(fan.gamma_dual(d)):
            raise AssertionError(
                f"coefficient escaped the dual Picard lattice at {d}")
    return series


# ---------------------------------------------------------------------------
# leading constant


class LeadingConstant:
    """Leading constant of the height zeta function at genus 0.

    ``truncated`` is always available at the requested precision;
    ``exact`` is set when the Euler product closes into finitely many
    factors, in which case both agree through the precision.
    """

    __slots__ = ("exact", "truncated", "fan_name")

    def __init__(self, exact, truncated, fan_name):
        self.exact = exact
        self.truncated = truncated
        self.fan_name = fan_name

    def specialize(self, q):
        if self.exact is not None:
            return self.exact.specialize(q)
        return self.truncated.specialize(q)


def leading_constant(fan, curve=None, precision=10):
    """Assembled leading constant: torus-rank power of L, divided
    Picard-rank many times by 1 - L^-1, times the Euler product of the
    height numerator evaluated at L^-1 in every variable."""
    if curve is None:
        curve = rational_curve()
    if curve.genus != 0:
        raise ValueError("exact leading constants need genus 0")
    n, r = fan.rank, fan.pic_rank
    working = precision + n + 4
    expand_deg = 2 * (working + n) + 4

    q_uni = q_sigma(fan).univariate()
    factor = GradedSeries(
        1, 0,
        {GradedMonomial((k,), ()): LefschetzLaurent({0: c})
         for k, c in enumerate(q_uni) if c},
        expand_deg)
    logarithm = plethystic_log(factor).scaled_by_curve_class()
    euler = plethystic_exp(logarithm, expand_deg)

    # Truncated route: substitute u -> L^-1 and assemble in the completion.
    acc = {}
    for mono, c in euler.terms.items():
        k = mono.t[0]
        for e, v in c.items():
            if e - k >= -working:
                acc[e - k] = acc.get(e - k, 0) + v
    euler_completion = CompletionElement(acc, working)
    prefactor = CompletionElement({n: 1}, working)
    inv = _one_minus_l_inv_inverse(working)
    for _ in range(r):
        prefactor = prefactor * inv
    product = prefactor * euler_completion
    truncated = CompletionElement(dict(product.items()), precision)

    # Exact route: available when every line-element multiplicity is
    # negative, so the Euler product is a finite polynomial.
    exact = None
    mults = logarithm.terms
    if mults and all(m < 0 for m in mults.values()):
        closes_at = sum(-m * sum(t) for (_, _, t), m in mults.items())
        if closes_at <= expand_deg:
            value = ONE
            for (j, _z, t), m in sorted(mults.items()):
                base = ONE - LefschetzLaurent({j - sum(t): 1})
                value = value * base ** (-m)
            try:
                divided = value.div_exact((ONE - LefschetzLaurent({-1: 1})) ** r)
                exact = LefschetzLaurent({n: 1}) * divided
            except ValueError:
                exact = None
    if exact is not None:
        if CompletionElement.from_laurent(exact, precision) != truncated:
            raise AssertionError(
                "exact and truncated leading constants disagree")
    return LeadingConstant(exact, truncated, fan.name)


def _one_minus_l_inv_inverse(precision):
    return CompletionElement({-k: 1 for k in range(precision + 1)}, precision)


def leading_constant_numeric(fan, q, level=12):
    """Closed-point approximation of the leading constant at L = q.

    Multiplies the local numerator value over all closed points of
    degree at most ``level``, in floating point (the point counts grow
    like q^d/d, so exact powers are hopeless and unnecessary: the tail
    converges geometrically since the numerator has no linear terms).
    """
    from .fqoracle import closed_point_counts
    n, r = fan.rank, fan.pic_rank
    poly = q_sigma(fan)
    counts = closed_point_counts(q, level)
    value = float(q) ** n / (1.0 - 1.0 / q) ** r
    for d in range(1, level + 1):
        local = float(poly.evaluate_fraction(Fraction(1, q ** d)))
        value *= local ** counts[d - 1]
    return value


# ---------------------------------------------------------------------------
# stabilization


class StabilizationReport:
    """Virtual dimensions of normalized coefficients against the leading
    constant, graded by anticanonical degree."""

    __slots__ = ("fan_name", "rows", "gamma")

    def __init__(self, fan_name, rows, gamma):
        self.fan_name = fan_name
        self.rows = rows
        self.gamma = gamma

    def dims(self):
        return [row["dim"] for row in self.rows]

    def strictly_decreasing(self):
        dims = []
        for row in self.rows:
            d = row["dim"]
            dims.append(d)
        for a, b in zip(dims, dims[1:]):
            if b is not MINUS_INFINITY and (a is MINUS_INFINITY or a <= b):
                return False
        return True


def minimal_interior_degree(fan):
    """Smallest effective degree vector with all components positive in
    the dual Picard lattice: the base step of an interior ray along
    which stabilization is visible.  (Slicing by total anticanonical
    degree would keep boundary terms, e.g. constant maps times a high
    degree on the other factor of a product, whose normalized classes
    never decay.)"""
    nt = len(fan.rays)
    total = nt
    while total <= 64 * nt:
        found = []

        def rec(prefix, remaining):
            slots = nt - len(prefix)
            if slots == 0:
                if remaining == 0 and not any(fan.gamma_dual(prefix)):
                    found.append(tuple(prefix))
                return
            for v in range(1, remaining - slots + 2):
                rec(prefix + [v], remaining - v)

        rec([], total)
        if found:
            return min(found)
        total += 1
    raise ValueError("no interior degree vector found")


def stabilization_check(fan, dmax, precision=10, zeta=None):
    """Compare normalized coefficients along an interior ray with the
    leading constant.

    Walks the multiples t * d0 of the minimal interior degree vector
    that fit under the bound and reports the virtual dimension of
    zeta_{t d0} L^{-t |d0|} minus the constant (exactly when the
    constant is exact, otherwise in the completion at the stated
    precision); a vanishing difference is reported as exact
    stabilization.
    """
    dmax = _normalize_dmax(fan, dmax)
    if zeta is None:
        zeta = zeta_direct_genus0(fan, dmax)
    gamma = leading_constant(fan, precision=precision)
    d0 = minimal_interior_degree(fan)
    rows = []
    t = 0
    while all(t * x <= b for x, b in zip(d0, dmax)):
        d = tuple(t * x for x in d0)
        m = sum(d)
        normalized = zeta.coefficient(d).shift(-m)
        if gamma.exact is not None:
            diff = normalized - gamma.exact
            dim = diff.virtual_dim()
            exact_zero = diff.is_zero()
        else:
            diff = CompletionElement.from_laurent(normalized, precision) \
                - gamma.truncated
            dim = diff.virtual_dim()
            exact_zero = False
        rows.append({"t": t, "d": d, "m": m, "dim": dim,
                     "exact_zero": exact_zero})
        t += 1
    return StabilizationReport(fan.name, rows, gamma)
