"""Truncated formal series in ray variables T and character markers z.

Monomials carry a vector of nonnegative T-exponents and an integer vector
of z-exponents; coefficients live in Z[L, L^-1].  Series are truncated by
total T-degree, optionally also by componentwise caps, and products are
exact through the truncation bound.
"""

from .lefschetz import LefschetzLaurent, ONE, ZERO


class GradedMonomial:
    """Immutable monomial T^t * z^m; multiplication adds exponents."""

    __slots__ = ("t", "z", "_hash")

    def __init__(self, t, z=()):
        self.t = tuple(int(x) for x in t)
        self.z = tuple(int(x) for x in z)
        if any(x < 0 for x in self.t):
            raise ValueError("T-exponents must be nonnegative")
        self._hash = hash((self.t, self.z))

    def __mul__(self, other):
        return GradedMonomial(
            tuple(a + b for a, b in zip(self.t, other.t)),
            tuple(a + b for a, b in zip(self.z, other.z)),
        )

    def total_t_degree(self):
        return sum(self.t)

    def __eq__(self, other):
        return self.t == other.t and self.z == other.z

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"GradedMonomial(t={self.t}, z={self.z})"


class GradedSeries:
    """Map from monomials to coefficients, exact through ``trunc``.

    ``caps``, when given, further restricts to T-exponents that are
    componentwise bounded; every operation preserves both bounds.
    """

    __slots__ = ("nt", "nz", "terms", "trunc", "caps")

    def __init__(self, nt, nz, terms=None, trunc=0, caps=None):
        self.nt = int(nt)
        self.nz = int(nz)
        self.trunc = int(trunc)
        self.caps = tuple(caps) if caps is not None else None
        clean = {}
        for mono, coeff in (terms or {}).items():
            if not isinstance(mono, GradedMonomial):
                mono = GradedMonomial(*mono) if isinstance(mono, tuple) else mono
            if len(mono.t) != self.nt or len(mono.z) != self.nz:
                raise ValueError("monomial arity mismatch")
            if isinstance(coeff, int):
                coeff = LefschetzLaurent({0: coeff})
            if coeff.is_zero():
                continue
            if not self._keeps(mono):
                continue
            if mono in clean:
                coeff = clean[mono] + coeff
                if coeff.is_zero():
                    del clean[mono]
                    continue
            clean[mono] = coeff
        self.terms = clean

    def _keeps(self, mono):
        if mono.total_t_degree() > self.trunc:
            return False
        if self.caps is not None and any(
                e > c for e, c in zip(mono.t, self.caps)):
            return False
        return True

    @classmethod
    def one(cls, nt, nz, trunc, caps=None):
        return cls(nt, nz, {GradedMonomial((0,) * nt, (0,) * nz): ONE},
                   trunc, caps)

    def coefficient(self, t, z=None):
        if z is None:
            z = (0,) * self.nz
        return self.terms.get(GradedMonomial(t, z), ZERO)

    def constant_term(self):
        return self.coefficient((0,) * self.nt)

    def _merge_bounds(self, other):
        trunc = min(self.trunc, other.trunc)
        if self.caps is None:
            caps = other.caps
        elif other.caps is None:
            caps = self.caps
        else:
            caps = tuple(min(a, b) for a, b in zip(self.caps, other.caps))
        return trunc, caps

    def __add__(self, other):
        if isinstance(other, (int, LefschetzLaurent)):
            other = GradedSeries(
                self.nt, self.nz,
                {GradedMonomial((0,) * self.nt, (0,) * self.nz): other},
                self.trunc, self.caps)
        trunc, caps = self._merge_bounds(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = coeff
        return GradedSeries(self.nt, self.nz, terms, trunc, caps)

    def __sub__(self, other):
        return self + (other * LefschetzLaurent({0: -1}))

    def __mul__(self, other):
        if isinstance(other, (int, LefschetzLaurent)):
            if isinstance(other, int):
                other = LefschetzLaurent({0: other})
            return GradedSeries(
                self.nt, self.nz,
                {m: c * other for m, c in self.terms.items()},
                self.trunc, self.caps)
        trunc, caps = self._merge_bounds(other)
        out = {}
        for m1, c1 in self.terms.items():
            d1 = m1.total_t_degree()
            for m2, c2 in other.terms.items():
                if d1 + m2.total_t_degree() > trunc:
                    continue
                mono = m1 * m2
                if caps is not None and any(
                        e > c for e, c in zip(mono.t, caps)):
                    continue
                prod = c1 * c2
                acc = out.get(mono)
                prod = prod if acc is None else acc + prod
                if prod.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = prod
        return GradedSeries(self.nt, self.nz, out, trunc, caps)

    __rmul__ = __mul__

    def z_zero_part(self):
        """Subseries of terms with vanishing z-exponent (the character
        integral over the full torus of markers)."""
        zero = (0,) * self.nz
        return GradedSeries(
            self.nt, self.nz,
            {m: c for m, c in self.terms.items() if m.z == zero},
            self.trunc, self.caps)

    def specialize(self, q):
        """Specialize every coefficient at L = q; returns {(t, z): Fraction}."""
        return {(m.t, m.z): c.specialize(q) for m, c in self.terms.items()}

    def __eq__(self, other):
        return (isinstance(other, GradedSeries) and self.nt == other.nt
                and self.nz == other.nz and self.terms == other.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (
            kv[0].total_t_degree(), kv[0].t, kv[0].z))

    def __repr__(self):
        n = len(self.terms)
        return (f"GradedSeries(nt={self.nt}, nz={self.nz}, terms={n}, "
                f"trunc={self.trunc})")
