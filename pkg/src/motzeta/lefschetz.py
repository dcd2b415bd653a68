"""Exact arithmetic in the coefficient ring Z[L, L^-1].

L is the class of the affine line; every class this engine manipulates is
an integer Laurent polynomial in L.  Virtual dimension is the top
L-exponent, and the dimensional completion is modelled by Laurent series
in L^-1 truncated at an explicit precision.
"""

from fractions import Fraction


class _MinusInfinity:
    """Dimension of the zero class; ordered below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __neg__(self):
        raise ArithmeticError("cannot negate -inf dimension")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()


class LefschetzLaurent:
    """Integer Laurent polynomial in L, stored as {exponent: coefficient}.

    Canonical form: no zero coefficients are stored.  Instances are
    immutable; all arithmetic returns new objects.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def from_int(cls, n):
        return cls({0: n})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    def items(self):
        return self._c.items()

    def coeff(self, exp):
        return self._c.get(exp, 0)

    def is_zero(self):
        return not self._c

    def support(self):
        return sorted(self._c)

    @staticmethod
    def _coerce(x):
        if isinstance(x, LefschetzLaurent):
            return x
        if isinstance(x, int):
            return LefschetzLaurent({0: x})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LefschetzLaurent(c)

    __radd__ = __add__

    def __neg__(self):
        return LefschetzLaurent({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LefschetzLaurent(c)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by L^k."""
        return LefschetzLaurent({e + k: v for e, v in self._c.items()})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def virtual_dim(self):
        """Top L-exponent, or MINUS_INFINITY for the zero class."""
        if not self._c:
            return MINUS_INFINITY
        return max(self._c)

    def specialize(self, q):
        """Evaluate at L = q, exactly, as a Fraction."""
        q = Fraction(q)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * q ** e
        return total

    def div_exact(self, other):
        """Exact quotient self / other; raises ValueError if not divisible."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero class")
        if self.is_zero():
            return ZERO
        lo_n, hi_n = min(self._c), max(self._c)
        lo_d, hi_d = min(other._c), max(other._c)
        # Shift both to honest polynomials before long division.
        num = [self._c.get(e, 0) for e in range(lo_n, hi_n + 1)]
        den = [other._c.get(e, 0) for e in range(lo_d, hi_d + 1)]
        quot = {}
        num = [Fraction(v) for v in num]
        lead = Fraction(den[-1])
        for i in range(len(num) - 1, len(den) - 2, -1):
            c = num[i] / lead
            if c:
                quot[i - (len(den) - 1)] = c
                for j, dv in enumerate(den):
                    num[i - (len(den) - 1) + j] -= c * dv
        if any(num):
            raise ValueError("not divisible")
        out = {}
        for e, c in quot.items():
            if c.denominator != 1:
                raise ValueError("quotient not integral")
            out[e + lo_n - lo_d] = int(c)
        return LefschetzLaurent(out)

    def __repr__(self):
        return f"LefschetzLaurent({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            if e == 0:
                term = str(abs(v))
            else:
                var = "L" if e == 1 else f"L^{e}"
                term = var if abs(v) == 1 else f"{abs(v)}*{var}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)


ZERO = LefschetzLaurent()
ONE = LefschetzLaurent({0: 1})
L = LefschetzLaurent({1: 1})
L_INV = LefschetzLaurent({-1: 1})


def virtual_dim(a):
    """Virtual dimension of a class: its top L-exponent, -inf for 0."""
    if isinstance(a, int):
        a = LefschetzLaurent({0: a})
    return a.virtual_dim()


def specialize_q(a, q):
    """Point-counting specialization L -> q (q >= 2), exact rational."""
    if q < 2:
        raise ValueError("specialization wants q >= 2")
    if isinstance(a, int):
        return Fraction(a)
    return a.specialize(q)


def radius_estimate(coefficients):
    """Empirical convergence radius max_i dim(A_i)/i over a finite prefix.

    ``coefficients`` is the sequence A_1, A_2, ... (index starting at 1).
    This is a lower bound for the true limsup and is only as good as the
    prefix supplied.
    """
    coeffs = list(coefficients)
    if not coeffs:
        raise ValueError("radius estimate needs at least one coefficient")
    best = MINUS_INFINITY
    for i, a in enumerate(coeffs, start=1):
        d = virtual_dim(a)
        if d is MINUS_INFINITY:
            continue
        r = Fraction(d, i)
        if best is MINUS_INFINITY or r > best:
            best = r
    return best


def tauberian_transfer(a, rho, dmax):
    """Coefficients of F(T) / prod_i (1 - L^{rho_i} T_i) through ``dmax``.

    ``a`` maps degree tuples in N^r to LefschetzLaurent coefficients of F
    (degrees missing from the map contribute 0), ``rho`` is a tuple of
    positive integers, and ``dmax`` bounds the computed degrees
    componentwise.  Returns {d: b_d} with

        b_d = sum_{0 <= delta <= d} a_delta * L^{<rho, d - delta>}.
    """
    rho = tuple(int(x) for x in rho)
    if any(x <= 0 for x in rho):
        raise ValueError("rho must be positive")
    r = len(rho)
    if isinstance(dmax, int):
        dmax = (dmax,) * r
    dmax = tuple(int(x) for x in dmax)
    norm_a = {}
    for d, v in a.items():
        d = (d,) if isinstance(d, int) else tuple(d)
        if len(d) != r:
            raise ValueError("degree arity mismatch")
        if not isinstance(v, LefschetzLaurent):
            v = LefschetzLaurent({0: int(v)})
        norm_a[d] = v
    out = {}
    for d in _box(dmax):
        b = ZERO
        for delta, v in norm_a.items():
            if all(delta[i] <= d[i] for i in range(r)):
                k = sum(rho[i] * (d[i] - delta[i]) for i in range(r))
                b = b + v.shift(k)
        out[d] = b
    return out


def _box(bounds):
    """Lattice points of prod [0, bounds_i], lexicographic order."""
    if not bounds:
        yield ()
        return
    for head in range(bounds[0] + 1):
        for tail in _box(bounds[1:]):
            yield (head,) + tail


class PrecisionMismatch(ValueError):
    pass


class CompletionElement:
    """Element of the dimensional completion, truncated at precision P.

    Stored as a Laurent series in L^-1 whose exponents below -P have been
    discarded; arithmetic never reports exponents below -P and refuses to
    mix precisions.
    """

    __slots__ = ("_c", "precision")

    def __init__(self, coeffs, precision):
        self.precision = int(precision)
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v and e >= -self.precision:
                    c[int(e)] = v
        self._c = c

    @classmethod
    def from_laurent(cls, a, precision):
        return cls(dict(a.items()), precision)

    def items(self):
        return self._c.items()

    def _check(self, other):
        if self.precision != other.precision:
            raise PrecisionMismatch(
                f"mixed precisions {self.precision} and {other.precision}"
            )

    @staticmethod
    def _coerce(x, precision):
        if isinstance(x, CompletionElement):
            return x
        if isinstance(x, LefschetzLaurent):
            return CompletionElement.from_laurent(x, precision)
        if isinstance(x, int):
            return CompletionElement({0: x}, precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, self.precision)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return CompletionElement(c, self.precision)

    __radd__ = __add__

    def __neg__(self):
        return CompletionElement({e: -v for e, v in self._c.items()}, self.precision)

    def __sub__(self, other):
        other = self._coerce(other, self.precision)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other, self.precision)
        if other is NotImplemented:
            return NotImplemented
        self._check(other)
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                if e >= -self.precision:
                    c[e] = c.get(e, 0) + v1 * v2
        return CompletionElement(c, self.precision)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CompletionElement):
            other = self._coerce(other, self.precision)
            if other is NotImplemented:
                return NotImplemented
        return self.precision == other.precision and self._c == other._c

    def __hash__(self):
        return hash((self.precision, frozenset(self._c.items())))

    def is_zero(self):
        """Zero to the stored precision."""
        return not self._c

    def virtual_dim(self):
        if not self._c:
            return MINUS_INFINITY
        return max(self._c)

    def specialize(self, q):
        """Evaluate at L = q; the tail below -P is dropped."""
        q = Fraction(q)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * q ** e
        return total

    def inverse(self):
        """Multiplicative inverse, for units with leading coefficient +-1."""
        if not self._c:
            raise ZeroDivisionError("inverting zero completion element")
        top = max(self._c)
        lead = self._c[top]
        if lead not in (1, -1):
            raise ValueError("leading coefficient must be a unit")
        # Write self = lead * L^top * (1 - eps) with dim(eps) < 0 and expand
        # the geometric series in eps until it falls below the precision.
        eps = {}
        for e, v in self._c.items():
            if e != top:
                eps[e - top] = -v * lead
        eps = CompletionElement(eps, self.precision + abs(top) + 1)
        acc = CompletionElement({0: 1}, eps.precision)
        term = CompletionElement({0: 1}, eps.precision)
        while not term.is_zero():
            term = term * eps
            acc = acc + term
        out = {e - top: lead * v for e, v in acc._c.items()}
        return CompletionElement(out, self.precision)

    def __repr__(self):
        body = str(LefschetzLaurent(self._c)) if self._c else "0"
        return f"CompletionElement({body}, P={self.precision})"


def geometric_inverse_one_minus_L_inv(k, precision):
    """1 / (1 - L^-k) as a completion element at the given precision."""
    if k <= 0:
        raise ValueError("k must be positive")
    c = {}
    e = 0
    while e >= -precision:
        c[e] = 1
        e -= k
    return CompletionElement(c, precision)


class CurveData:
    """Genus and Weil data of the base curve.

    Genus 0 is the exact mode: the numerator is 1 and the degree-zero
    Picard class is 1.  Higher genus carries a numerator of degree 2g with
    constant term 1 and is only consumed by the finite-field oracle.
    """

    __slots__ = ("genus", "kapranov_numerator", "pic0_class")

    def __init__(self, genus, kapranov_numerator=None, pic0_class=None):
        self.genus = int(genus)
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if kapranov_numerator is None:
            if self.genus != 0:
                raise ValueError("nonzero genus needs an explicit numerator")
            kapranov_numerator = [ONE]
        numerator = []
        for c in kapranov_numerator:
            if isinstance(c, int):
                c = LefschetzLaurent({0: c})
            numerator.append(c)
        if len(numerator) > 2 * self.genus + 1:
            raise ValueError("numerator degree exceeds 2*genus")
        if numerator[0] != ONE:
            raise ValueError("numerator must have constant term 1")
        self.kapranov_numerator = tuple(numerator)
        if pic0_class is None:
            pic0_class = ONE
        if self.genus == 0 and pic0_class != ONE:
            raise ValueError("genus 0 forces a trivial degree-zero Picard class")
        self.pic0_class = pic0_class


def rational_curve():
    """The genus-0 curve (projective line)."""
    return CurveData(0)
