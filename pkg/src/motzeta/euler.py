"""Motivic Euler products over the genus-0 curve.

A local factor constant along the curve is a truncated series with
constant term 1; its Euler product over the projective line is computed
plethystically: decompose the factor as a product of line-element
factors (1 - L^j z^m T^e)^(+-mult), multiply every multiplicity by the
curve class 1 + L, and re-expand.  Configuration classes and the
unit-torsor twist fall out of the same machinery.
"""

from math import comb

from .lefschetz import LefschetzLaurent, ONE, ZERO, L
from .series import GradedMonomial, GradedSeries


class NotLineElementDecomposable(ValueError):
    """A coefficient failed to split into line-element multiplicities.

    Cannot occur for integer Laurent coefficients; kept to guard the
    boundary of the monomial lambda-ring explicitly.
    """


class LocalFactor:
    """Series with constant term exactly 1, the Euler-product input."""

    __slots__ = ("series",)

    def __init__(self, series):
        if series.constant_term() != ONE:
            raise ValueError("a local factor must have constant term 1")
        self.series = series

    @property
    def nt(self):
        return self.series.nt

    @property
    def nz(self):
        return self.series.nz


class PlethysticSeries:
    """Integer multiplicities of line-element factors.

    terms maps (L-exponent, z-exponents, T-exponents) to an integer
    multiplicity; the T-exponent vector is never zero.
    """

    __slots__ = ("nt", "nz", "terms", "trunc")

    def __init__(self, nt, nz, terms=None, trunc=0):
        self.nt = int(nt)
        self.nz = int(nz)
        self.trunc = int(trunc)
        clean = {}
        for (j, z, t), mult in (terms or {}).items():
            t = tuple(int(x) for x in t)
            z = tuple(int(x) for x in z)
            if not any(t):
                raise ValueError("plethystic terms need a nonzero T-exponent")
            mult = int(mult)
            if mult:
                clean[(int(j), z, t)] = mult
        self.terms = clean

    def scaled_by_curve_class(self, curve_class=None):
        """Multiply every multiplicity by the curve class (default 1 + L).

        The class must be an integer polynomial in L; each of its
        monomials shifts the L-exponent of every line element.
        """
        if curve_class is None:
            curve_class = ONE + L
        out = {}
        for (j, z, t), mult in self.terms.items():
            for e, c in curve_class.items():
                key = (j + e, z, t)
                out[key] = out.get(key, 0) + mult * c
        return PlethysticSeries(self.nt, self.nz, out, self.trunc)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (
            sum(kv[0][2]), kv[0][2], kv[0][1], kv[0][0]))


def plethystic_exp(pleth, trunc=None, caps=None):
    """Expand prod (1 - L^j z^m T^e)^(-mult) through the truncation."""
    if trunc is None:
        trunc = pleth.trunc
    nt, nz = pleth.nt, pleth.nz
    out = GradedSeries.one(nt, nz, trunc, caps)
    for (j, z, t), mult in pleth.sorted_terms():
        step = sum(t)
        factor = {GradedMonomial((0,) * nt, (0,) * nz): ONE}
        k = 1
        while k * step <= trunc:
            mono = GradedMonomial(tuple(k * x for x in t),
                                  tuple(k * x for x in z))
            if caps is not None and any(
                    e > c for e, c in zip(mono.t, caps)):
                break
            if mult > 0:
                coeff = comb(mult + k - 1, k)
            else:
                if k > -mult:
                    break
                coeff = (-1) ** k * comb(-mult, k)
            factor[mono] = LefschetzLaurent({j * k: coeff})
            k += 1
        out = out * GradedSeries(nt, nz, factor, trunc, caps)
    return out


def plethystic_log(factor, trunc=None):
    """Inverse of plethystic_exp, solved degree by degree.

    Every coefficient of the input splits over its L-monomials into
    integer multiplicities; a non-integer multiplicity would raise
    NotLineElementDecomposable, which integer Laurent coefficients never
    trigger.
    """
    series = factor.series if isinstance(factor, LocalFactor) else factor
    if series.constant_term() != ONE:
        raise ValueError("plethystic log needs constant term 1")
    if trunc is None:
        trunc = series.trunc
    nt, nz = series.nt, series.nz
    found = {}
    partial = GradedSeries.one(nt, nz, trunc, series.caps)
    by_degree = {}
    for mono, coeff in series.terms.items():
        by_degree.setdefault(mono.total_t_degree(), {})[mono] = coeff
    for degree in range(1, trunc + 1):
        target = by_degree.get(degree, {})
        monos = set(target)
        monos.update(m for m in partial.terms if m.total_t_degree() == degree)
        new_terms = {}
        for mono in sorted(monos, key=lambda m: (m.t, m.z)):
            delta = target.get(mono, ZERO) - partial.terms.get(mono, ZERO)
            for j, c in sorted(delta.items()):
                if c != int(c):
                    raise NotLineElementDecomposable(str(mono))
                found[(j, mono.z, mono.t)] = found.get((j, mono.z, mono.t), 0) + c
                new_terms[(j, mono.z, mono.t)] = c
        if new_terms:
            update = PlethysticSeries(nt, nz, new_terms, trunc)
            partial = partial * plethystic_exp(update, trunc, series.caps)
    return PlethysticSeries(nt, nz, found, trunc)


def euler_product_genus0(factor, trunc=None, caps=None, curve_class=None):
    """Euler product of a constant local factor over the genus-0 curve.

    Computed as the plethystic exponential of (1 + L) times the
    plethystic logarithm of the factor; character markers z^m are line
    elements, so a configuration of k points all carrying z^m contributes
    z^(k m).
    """
    series = factor.series if isinstance(factor, LocalFactor) else factor
    if trunc is None:
        trunc = series.trunc
    if caps is None:
        caps = series.caps
    logarithm = plethystic_log(series, trunc)
    return plethystic_exp(logarithm.scaled_by_curve_class(curve_class),
                          trunc, caps)


class LabeledPartition:
    """Finite multiset of labels with positive multiplicities."""

    __slots__ = ("mult",)

    def __init__(self, mult):
        clean = {}
        for label, n in mult.items():
            n = int(n)
            if n < 0:
                raise ValueError("multiplicities must be nonnegative")
            if n:
                clean[label] = n
        self.mult = clean

    def size(self):
        return sum(self.mult.values())

    def shape(self):
        """Multiplicities in decreasing order; configuration classes only
        depend on this."""
        return tuple(sorted(self.mult.values(), reverse=True))

    def __eq__(self, other):
        return isinstance(other, LabeledPartition) and self.mult == other.mult

    def __hash__(self):
        return hash(frozenset(self.mult.items()))


_config_cache = {}


def config_class_by_euler_product(shape):
    """Configuration class read off the Euler product of 1 + sum u_i.

    This is the defining expression: the coefficient of prod u_i^(n_i)
    in the genus-0 Euler product with one variable per label.  Exponents
    are capped componentwise at the target, which keeps the expansion
    small.
    """
    shape = tuple(sorted((int(n) for n in shape), reverse=True))
    if not shape:
        return ONE
    k = len(shape)
    total = sum(shape)
    terms = {GradedMonomial((0,) * k, ()): ONE}
    for i in range(k):
        exps = tuple(1 if j == i else 0 for j in range(k))
        terms[GradedMonomial(exps, ())] = ONE
    factor = GradedSeries(k, 0, terms, total, caps=shape)
    product = euler_product_genus0(factor, total, caps=shape)
    return product.coefficient(shape)


def _config_shape(shape):
    """Memoized configuration class of a multiplicity multiset.

    Labels of multiplicity 1 are peeled by cutting the universal
    supports out of the product with the line: the incidence locus over
    a configuration space is the disjoint union, over labels, of the
    configuration spaces with one point of that label marked off.  The
    remaining all-multiplicities-at-least-2 shapes fall back to the
    Euler-product expansion, which is small in that regime.
    """
    shape = tuple(sorted(shape, reverse=True))
    if not shape:
        return ONE
    cached = _config_cache.get(shape)
    if cached is not None:
        return cached
    if shape[-1] == 1:
        rest = shape[:-1]
        value = (ONE + L) * _config_shape(rest)
        for i, m in enumerate(rest):
            if m == 1:
                split = rest  # the marked point is that divisor
            else:
                split = rest[:i] + rest[i + 1:] + (1, m - 1)
            value = value - _config_shape(split)
    else:
        value = config_class_by_euler_product(shape)
    _config_cache[shape] = value
    return value


def config_class(pi, curve=None):
    """Class of configurations of distinct labeled points on the curve.

    ``pi`` prescribes, for each label, how many points carry it; the
    result is the coefficient of prod u_i^(n_i) in the Euler product of
    1 + sum_i u_i, a polynomial in L.  Genus 0 only.
    """
    if curve is not None and curve.genus != 0:
        raise ValueError("exact configuration classes need genus 0")
    if not isinstance(pi, LabeledPartition):
        pi = LabeledPartition(pi)
    return _config_shape(pi.shape())


def torsor_twist(pi, curve=None):
    """Class of the same configurations with a unit attached to each
    point: (L - 1)^size times the configuration class."""
    if not isinstance(pi, LabeledPartition):
        pi = LabeledPartition(pi)
    return (L - 1) ** pi.size() * config_class(pi, curve)
