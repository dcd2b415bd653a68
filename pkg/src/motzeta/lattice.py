"""Finitely supported functions on a lattice and their Fourier calculus.

Characters of the constant group scheme attached to a lattice M are
handled purely through evaluation monomials ev(m, .), so a Fourier
transform is a finite sum  sum_m c_m ev(m, .) with coefficients in
Z[L, L^-1].  Integration over the dual group keeps the terms whose
exponent lies in a prescribed sublattice; everything reduces to exact
integer linear algebra (Hermite normal form).
"""

from .lefschetz import LefschetzLaurent, MINUS_INFINITY, ONE, ZERO

# ---------------------------------------------------------------------------
# integer linear algebra


def column_echelon(matrix):
    """Column echelon form of an integer matrix given as a list of rows.

    Returns (pivots, cols) where cols is a list of echelonized columns
    (each a list of length m) spanning the same column lattice, and
    pivots is a list of (row, col_index) positions in increasing row
    order.  Pure integer column operations, so the column span over Z is
    preserved.
    """
    if not matrix or not matrix[0]:
        return [], []
    m = len(matrix)
    cols = [list(col) for col in zip(*matrix)]
    cols = [c for c in cols if any(c)]
    pivots = []
    start = 0
    for r in range(m):
        # Euclidean elimination among columns start.. on row r.
        while True:
            nz = [j for j in range(start, len(cols)) if cols[j][r] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(cols[j][r]))
            a, b = nz[0], nz[1]
            qout = cols[b][r] // cols[a][r]
            for i in range(m):
                cols[b][i] -= qout * cols[a][i]
        nz = [j for j in range(start, len(cols)) if cols[j][r] != 0]
        if not nz:
            continue
        j = nz[0]
        cols[start], cols[j] = cols[j], cols[start]
        if cols[start][r] < 0:
            cols[start] = [-x for x in cols[start]]
        pivots.append((r, start))
        start += 1
    cols = [c for c in cols if any(c)]
    return pivots, cols


def integer_kernel(matrix):
    """Basis of the integer kernel {x : matrix @ x = 0}, as column vectors."""
    if not matrix:
        raise ValueError("kernel of an empty matrix is ambiguous")
    m = len(matrix)
    n = len(matrix[0])
    # Column-reduce the matrix while tracking the transformation on an
    # identity tail; columns whose top part vanishes span the kernel.
    cols = [[matrix[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)]
            for j in range(n)]
    start = 0
    for r in range(m):
        while True:
            nz = [j for j in range(start, n) if cols[j][r] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(cols[j][r]))
            a, b = nz[0], nz[1]
            qout = cols[b][r] // cols[a][r]
            for i in range(m + n):
                cols[b][i] -= qout * cols[a][i]
        nz = [j for j in range(start, n) if cols[j][r] != 0]
        if nz:
            j = nz[0]
            cols[start], cols[j] = cols[j], cols[start]
            start += 1
    kernel = []
    for j in range(start, n):
        if not any(cols[j][:m]):
            vec = cols[j][m:]
            if any(vec):
                kernel.append(vec)
    return kernel


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def matvec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def integer_inverse(matrix):
    """Inverse of a unimodular integer matrix, via the adjugate."""
    n = len(matrix)
    d = det(matrix)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    adj = [[cofactor(matrix, j, i) for j in range(n)] for i in range(n)]
    return [[adj[i][j] * d for j in range(n)] for i in range(n)]


def det(matrix):
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(matrix)
    a = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cofactor(matrix, i, j):
    minor = [row[:j] + row[j + 1:] for r, row in enumerate(matrix) if r != i]
    if not minor:
        return 1
    return (-1) ** (i + j) * det(minor)


class Sublattice:
    """Sublattice of Z^rank spanned by integer generator columns.

    Membership is decided through the column echelon (Hermite) form of
    the generator matrix, exactly.
    """

    __slots__ = ("rank", "generators", "_pivots", "_cols")

    def __init__(self, rank, generators=()):
        self.rank = int(rank)
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != self.rank:
                raise ValueError("generator arity mismatch")
            gens.append(g)
        self.generators = tuple(gens)
        if gens:
            matrix = [[g[i] for g in gens] for i in range(self.rank)]
            self._pivots, self._cols = column_echelon(matrix)
        else:
            self._pivots, self._cols = [], []

    @classmethod
    def zero(cls, rank):
        return cls(rank, ())

    @classmethod
    def full(cls, rank):
        return cls(rank, [[1 if i == j else 0 for i in range(rank)]
                          for j in range(rank)])

    def contains(self, point):
        x = [int(v) for v in point]
        if len(x) != self.rank:
            raise ValueError("point arity mismatch")
        for r, j in self._pivots:
            p = self._cols[j][r]
            if x[r] % p != 0:
                return False
            t = x[r] // p
            for i in range(self.rank):
                x[i] -= t * self._cols[j][i]
        return not any(x)

    def zero_extend(self, extra):
        """The same sublattice inside Z^(rank+extra), extended by zero."""
        gens = [g + (0,) * extra for g in self.generators]
        return Sublattice(self.rank + extra, gens)


class Lattice:
    """Free lattice Z^rank, optionally with torsion relations.

    A relations matrix R (columns generate the relation sublattice) turns
    the lattice into the quotient Z^rank / span(R); exponents are reduced
    to a canonical representative modulo the relations.  Downstream code
    only needs the free case.
    """

    __slots__ = ("rank", "relations")

    def __init__(self, rank, relations=None):
        self.rank = int(rank)
        self.relations = relations if relations is None else Sublattice(
            rank, relations.generators if isinstance(relations, Sublattice) else relations)

    def canonical(self, point):
        point = tuple(int(x) for x in point)
        if len(point) != self.rank:
            raise ValueError("point arity mismatch")
        if self.relations is None:
            return point
        x = list(point)
        for r, j in self.relations._pivots:
            p = self.relations._cols[j][r]
            t = x[r] // p
            for i in range(self.rank):
                x[i] -= t * self.relations._cols[j][i]
        return tuple(x)


# ---------------------------------------------------------------------------
# character functions and sums


def _clean(terms, lattice=None):
    out = {}
    for m, v in terms.items():
        m = tuple(int(x) for x in m)
        if lattice is not None:
            m = lattice.canonical(m)
        if isinstance(v, int):
            v = LefschetzLaurent({0: v})
        if not v.is_zero():
            out[m] = out.get(m, ZERO) + v if m in out else v
    return {m: v for m, v in out.items() if not v.is_zero()}


class CharFunction:
    """Finitely supported function on a lattice, values in Z[L, L^-1]."""

    __slots__ = ("rank", "support", "lattice")

    def __init__(self, rank, support=None, lattice=None):
        self.rank = int(rank)
        self.lattice = lattice
        self.support = _clean(support or {}, lattice)

    def value(self, m):
        m = tuple(int(x) for x in m)
        if self.lattice is not None:
            m = self.lattice.canonical(m)
        return self.support.get(m, ZERO)

    def translate(self, a):
        """The function m -> psi(m - a)."""
        a = tuple(int(x) for x in a)
        return CharFunction(
            self.rank,
            {tuple(mi + ai for mi, ai in zip(m, a)): v
             for m, v in self.support.items()},
            self.lattice,
        )

    def zero_extend(self, extra):
        return CharFunction(
            self.rank + extra,
            {m + (0,) * extra: v for m, v in self.support.items()},
        )

    def __eq__(self, other):
        return (isinstance(other, CharFunction) and self.rank == other.rank
                and self.support == other.support)


class CharSum:
    """Finite sum  sum_m c_m ev(m, .)  in the evaluation-monomial basis.

    Multiplication follows ev(m,.) ev(n,.) = ev(m+n,.), extended
    bilinearly over the coefficient ring.
    """

    __slots__ = ("rank", "terms", "lattice")

    def __init__(self, rank, terms=None, lattice=None):
        self.rank = int(rank)
        self.lattice = lattice
        self.terms = _clean(terms or {}, lattice)

    @classmethod
    def ev(cls, m, coeff=ONE, lattice=None):
        m = tuple(int(x) for x in m)
        return cls(len(m), {m: coeff}, lattice)

    def coeff(self, m):
        m = tuple(int(x) for x in m)
        if self.lattice is not None:
            m = self.lattice.canonical(m)
        return self.terms.get(m, ZERO)

    def __add__(self, other):
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        terms = dict(self.terms)
        for m, v in other.terms.items():
            terms[m] = terms.get(m, ZERO) + v
        return CharSum(self.rank, terms, self.lattice)

    def __mul__(self, other):
        if isinstance(other, (int, LefschetzLaurent)):
            return CharSum(self.rank,
                           {m: v * other for m, v in self.terms.items()},
                           self.lattice)
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        terms = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = v1 * v2
                terms[m] = terms.get(m, ZERO) + prod
        return CharSum(self.rank, terms, self.lattice)

    __rmul__ = __mul__

    def virtual_dim(self):
        """Max coefficient dimension; the character part carries no weight."""
        best = MINUS_INFINITY
        for v in self.terms.values():
            d = v.virtual_dim()
            if best is MINUS_INFINITY or d > best:
                best = d
        return best

    def zero_extend(self, extra):
        return CharSum(self.rank + extra,
                       {m + (0,) * extra: v for m, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, CharSum) and self.rank == other.rank
                and self.terms == other.terms)


def fourier(psi):
    """Fourier transform of a finitely supported function.

    The transform of psi is  sum_m psi(m) ev(m, .), so in the monomial
    basis it carries the same data with a different meaning.
    """
    return CharSum(psi.rank, dict(psi.support), psi.lattice)


def integrate_dual(s, sublattice):
    """Integrate a character sum over characters trivial on ``sublattice``.

    Keeps exactly the terms whose exponent lies in the sublattice and
    sums their coefficients; with the zero sublattice this extracts the
    constant term.
    """
    if sublattice.rank != s.rank:
        raise ValueError("rank mismatch")
    total = ZERO
    for m, v in s.terms.items():
        if sublattice.contains(m):
            total = total + v
    return total


class NonComplementaryBases(ValueError):
    pass


def partial_integrate(s, basis_prime, basis_second, sub_in_prime):
    """Partial integration over the first factor of a splitting M = M' + M''.

    ``basis_prime`` and ``basis_second`` list integer basis vectors of the
    two factors (columns); together they must form a basis of Z^rank.
    ``sub_in_prime`` is a sublattice of M' given in M'-coordinates.  Terms
    whose M'-component lies in the sublattice survive, projected to their
    M''-coordinates.
    """
    k = len(basis_prime)
    kk = len(basis_second)
    if k + kk != s.rank:
        raise NonComplementaryBases("bases do not span complementary factors")
    cols = [list(b) for b in basis_prime] + [list(b) for b in basis_second]
    matrix = [[cols[j][i] for j in range(s.rank)] for i in range(s.rank)]
    try:
        inv = integer_inverse(matrix)
    except ValueError as exc:
        raise NonComplementaryBases(str(exc)) from exc
    if sub_in_prime.rank != k:
        raise ValueError("sublattice must live in the first factor")
    out = {}
    for m, v in s.terms.items():
        coords = matvec(inv, list(m))
        prime, second = coords[:k], coords[k:]
        if sub_in_prime.contains(prime):
            key = tuple(second)
            out[key] = out.get(key, ZERO) + v
    return CharSum(kk, out)


def fourier_invert(s, x):
    """Recover the value at x from a Fourier transform.

    Multiplies by ev(-x, .) and integrates over the full dual, which
    keeps the coefficient of ev(x, .).
    """
    x = tuple(int(v) for v in x)
    shifted = s * CharSum.ev(tuple(-v for v in x), lattice=s.lattice)
    return integrate_dual(shifted, Sublattice.zero(s.rank))


def poisson_both_sides(psi, subgroup, g):
    """Both sides of the local Poisson identity, computed independently.

    Left: the sum of psi over the coset g + H, by direct enumeration of
    the finite support.  Right: the integral of the Fourier transform
    times ev(-g, .) over characters trivial on H.  The two must agree.
    """
    g = tuple(int(v) for v in g)
    left = ZERO
    for m, v in psi.support.items():
        if subgroup.contains(tuple(mi - gi for mi, gi in zip(m, g))):
            left = left + v
    transform = fourier(psi) * CharSum.ev(tuple(-v for v in g), lattice=psi.lattice)
    right = integrate_dual(transform, subgroup)
    return left, right
