"""Generating series of lattice points in rational polyhedral cones.

A cone is presented as the support of a regular fan; the associated
series along a positive direction is an exact rational function whose
behaviour at T = 1 is governed by the cone volume constant.  Shifted
cones decompose by inclusion-exclusion over failing coordinates, and the
convolution series built from a finitely supported weight has a special
value computable by two independent routes.
"""

from fractions import Fraction
from math import gcd, lcm
from itertools import combinations

from .lefschetz import LefschetzLaurent, ONE, ZERO
from .lattice import Sublattice, det, integer_kernel, matvec
from .series import GradedMonomial, GradedSeries


class NonPositiveDirection(ValueError):
    pass


class InexactSequence(ValueError):
    pass


class HypothesisViolation(ValueError):
    pass


class ConeFanError(ValueError):
    pass


class ConeFan:
    """Regular fan supported on a rational polyhedral cone.

    Maximal cones are simplicial and unimodular (their rays extend to a
    lattice basis) but need not be full-dimensional in the ambient
    lattice.  Interior disjointness of the maximal cones is certified on
    a sample box of lattice points.
    """

    __slots__ = ("name", "rank", "rays", "max_cones", "faces", "dim")

    def __init__(self, rank, rays, max_cones, name="cone", sample_bound=3):
        self.name = name
        self.rank = int(rank)
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.max_cones = tuple(tuple(sorted(int(i) for i in c))
                               for c in max_cones)
        self._validate(sample_bound)
        faces = {()}
        for cone in self.max_cones:
            k = len(cone)
            for mask in range(1, 1 << k):
                faces.add(tuple(cone[i] for i in range(k) if mask >> i & 1))
        self.faces = tuple(sorted(faces, key=lambda f: (len(f), f)))
        self.dim = max(len(c) for c in self.max_cones)

    def _validate(self, sample_bound):
        for r in self.rays:
            if len(r) != self.rank:
                raise ConeFanError(f"ray {r} has wrong arity")
            if not any(r):
                raise ConeFanError("zero ray")
            if gcd(*(abs(x) for x in r)) != 1:
                raise ConeFanError(f"ray {r} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise ConeFanError("duplicate ray")
        if not self.max_cones:
            raise ConeFanError("no cones")
        dims = set()
        for cone in self.max_cones:
            if any(i < 0 or i >= len(self.rays) for i in cone):
                raise ConeFanError(f"cone {cone} uses an invalid ray index")
            k = len(cone)
            dims.add(k)
            matrix = [list(self.rays[i]) for i in cone]
            # Unimodularity: the gcd of the maximal minors of the ray
            # matrix must be 1 (rays extend to a basis of the lattice).
            g = 0
            for rows in combinations(range(self.rank), k):
                sub = [[matrix[i][r] for r in rows] for i in range(k)]
                g = gcd(g, abs(det(sub)))
            if g != 1:
                raise ConeFanError(
                    f"cone {cone} is not unimodular (minor gcd {g})")
        if len(dims) != 1:
            raise ConeFanError("maximal cones of mixed dimension")
        self._check_disjoint_interiors(sample_bound)

    def _check_disjoint_interiors(self, bound):
        if len(self.max_cones) < 2 or bound <= 0:
            return
        points = [()]
        for _ in range(self.rank):
            points = [p + (v,) for p in points for v in range(-bound, bound + 1)]
        for p in points:
            hits = [c for c in self.max_cones
                    if self._solve_in(c, p, strict=True) is not None]
            if len(hits) > 1:
                raise ConeFanError(
                    f"maximal cones {hits[0]} and {hits[1]} share the "
                    f"interior point {p}")

    def _solve_in(self, cone, point, strict=False):
        """Rational coefficients of ``point`` in the cone's rays, or None
        if outside (coefficients must be >= 0, or > 0 when strict)."""
        k = len(cone)
        rows = [[self.rays[i][r] for i in cone] for r in range(self.rank)]
        rhs = [Fraction(x) for x in point]
        aug = [[Fraction(v) for v in rows[r]] + [rhs[r]]
               for r in range(self.rank)]
        pivot_cols = []
        r = 0
        for c in range(k):
            pr = next((i for i in range(r, self.rank) if aug[i][c]), None)
            if pr is None:
                continue
            aug[r], aug[pr] = aug[pr], aug[r]
            pivot = aug[r][c]
            aug[r] = [v / pivot for v in aug[r]]
            for i in range(self.rank):
                if i != r and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
            pivot_cols.append(c)
            r += 1
        for i in range(r, self.rank):
            if aug[i][k]:
                return None
        if len(pivot_cols) < k:
            # Dependent rays cannot occur in a validated cone.
            return None
        coeffs = [Fraction(0)] * k
        for row, c in enumerate(pivot_cols):
            coeffs[c] = aug[row][k]
        if strict:
            return coeffs if all(c > 0 for c in coeffs) else None
        return coeffs if all(c >= 0 for c in coeffs) else None

    def contains(self, point):
        return any(self._solve_in(c, point) is not None
                   for c in self.max_cones)

    def in_relative_interior(self, face, point):
        if not face:
            return not any(point)
        return self._solve_in(face, point, strict=True) is not None

    def ray_pairings(self, lam):
        return tuple(sum(a * b for a, b in zip(lam, ray)) for ray in self.rays)

    def lattice_points_by_level(self, lam, bound):
        """All (point, level) with the point in the support and
        level = <lam, point> <= bound; needs lam positive on every ray."""
        pairings = self.ray_pairings(lam)
        if any(p <= 0 for p in pairings):
            raise NonPositiveDirection(
                "direction is not positive on every ray")
        seen = set()
        for cone in self.max_cones:
            ks = [pairings[i] for i in cone]
            rays = [self.rays[i] for i in cone]

            def rec(idx, level_left, acc):
                if idx == len(cone):
                    seen.add(tuple(acc))
                    return
                c = 0
                while c * ks[idx] <= level_left:
                    rec(idx + 1, level_left - c * ks[idx],
                        [a + c * r for a, r in zip(acc, rays[idx])])
                    c += 1

            rec(0, bound, [0] * self.rank)
        out = [(pt, sum(a * b for a, b in zip(lam, pt))) for pt in seen]
        return sorted(out)


class LSeriesRational:
    """Exact rational form sum over cones of prod T^k / (1 - T^k).

    ``summands`` lists, for each cone of the fan (the zero cone
    included), the multiset of ray exponents along the chosen direction.
    """

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = tuple(tuple(sorted(s)) for s in summands)

    def expand(self, bound):
        """Power-series coefficients through the given level."""
        total = [0] * (bound + 1)
        for exps in self.summands:
            coeffs = [0] * (bound + 1)
            coeffs[0] = 1
            for k in exps:
                new = [0] * (bound + 1)
                for i, v in enumerate(coeffs):
                    if v:
                        j = i + k
                        while j <= bound:
                            new[j] += v
                            j += k
                coeffs = new
            for i in range(bound + 1):
                total[i] += coeffs[i]
        return total

    def pole_order(self):
        return max((len(s) for s in self.summands), default=0)


class ResidueData:
    """Residue constant data along a direction: the clearing exponent a,
    the cone volume constant, and the cone dimension."""

    __slots__ = ("a", "chi", "rank", "special_value")

    def __init__(self, a, chi, rank, special_value=None):
        self.a = int(a)
        self.chi = Fraction(chi)
        self.rank = int(rank)
        self.special_value = special_value
        scaled = self.chi * self.a ** self.rank
        if scaled.denominator != 1 or scaled < 0:
            raise AssertionError(
                "a^rank * chi must be a nonnegative integer")


def l_series_direction(cf, lambda0):
    """Series of lattice points of the cone graded by a positive
    direction, as exact rational data."""
    pairings = cf.ray_pairings(lambda0)
    if any(p <= 0 for p in pairings):
        raise NonPositiveDirection(
            f"direction {tuple(lambda0)} is not positive on every ray")
    summands = []
    for face in cf.faces:
        summands.append(tuple(pairings[i] for i in face))
    return LSeriesRational(summands)


def chi_value(cf, lambda0):
    """Cone volume constant: sum over maximal-dimensional cones of the
    product of reciprocal ray exponents."""
    pairings = cf.ray_pairings(lambda0)
    if any(p <= 0 for p in pairings):
        raise NonPositiveDirection(
            f"direction {tuple(lambda0)} is not positive on every ray")
    total = Fraction(0)
    for face in cf.faces:
        if len(face) == cf.rank:
            prod = Fraction(1)
            for i in face:
                prod /= pairings[i]
            total += prod
    return total


def residue_check(cf, lambda0):
    """Clear the pole at T = 1 and compare with the volume constant.

    Computes ((1 - T^a)^rank * series)(1) by cancelling each factor
    1 - T^k into 1 - T^a exactly (polynomial quotients, no limits) and
    asserts equality with a^rank * chi.
    """
    if cf.dim != cf.rank:
        raise ValueError("the residue identity needs a full-dimensional cone")
    pairings = cf.ray_pairings(lambda0)
    if any(p <= 0 for p in pairings):
        raise NonPositiveDirection(
            f"direction {tuple(lambda0)} is not positive on every ray")
    a = lcm(*pairings) if pairings else 1
    series = l_series_direction(cf, lambda0)
    value = 0
    for exps in series.summands:
        if len(exps) < cf.rank:
            continue  # leftover (1 - T^a) factors vanish at T = 1
        prod = 1
        for k in exps:
            if a % k:
                raise AssertionError("clearing exponent must absorb each pole")
            prod *= a // k  # value of (1 - T^a)/(1 - T^k) at T = 1
        value += prod
    chi = chi_value(cf, lambda0)
    if value != a ** cf.rank * chi:
        raise AssertionError(
            f"residue mismatch: {value} != {a}^{cf.rank} * {chi}")
    return ResidueData(a, chi, cf.rank, special_value=value)


# ---------------------------------------------------------------------------
# exact sequences


def _column_span_equal(a_cols, b_cols, rank):
    sa = Sublattice(rank, a_cols)
    sb = Sublattice(rank, b_cols)
    return (all(sa.contains(c) for c in b_cols)
            and all(sb.contains(c) for c in a_cols))


class ExactSequence:
    """Short exact sequence 0 -> M -> N -> Gamma -> 0 of free lattices.

    ``i_cols`` are the images of a basis of M inside Z^n; ``j_rows`` is
    the matrix of the quotient map to Z^g.  Exactness (j i = 0 and
    ker j = im i as lattices) is verified on construction.
    """

    __slots__ = ("rank_m", "rank_n", "rank_g", "i_cols", "j_rows")

    def __init__(self, i_cols, j_rows):
        self.i_cols = tuple(tuple(int(x) for x in c) for c in i_cols)
        self.j_rows = tuple(tuple(int(x) for x in r) for r in j_rows)
        self.rank_n = len(self.i_cols[0]) if self.i_cols else (
            len(self.j_rows[0]) if self.j_rows else 0)
        self.rank_m = len(self.i_cols)
        self.rank_g = len(self.j_rows)
        if self.rank_m + self.rank_g != self.rank_n:
            raise InexactSequence("ranks do not add up")
        for c in self.i_cols:
            img = matvec([list(r) for r in self.j_rows], list(c)) \
                if self.j_rows else []
            if any(img):
                raise InexactSequence("j composed with i is nonzero")
        if self.j_rows:
            kernel = integer_kernel([list(r) for r in self.j_rows])
        else:
            kernel = [[1 if i == j else 0 for i in range(self.rank_n)]
                      for j in range(self.rank_n)]
        if not _column_span_equal(list(self.i_cols), kernel, self.rank_n):
            raise InexactSequence("kernel of j differs from image of i")

    def j_apply(self, y):
        return tuple(sum(r[k] * y[k] for k in range(self.rank_n))
                     for r in self.j_rows)

    def image_sublattice(self):
        return Sublattice(self.rank_n, self.i_cols)


def char_restrict_check(seq, cf, lam, bound):
    """Truncated character-restriction identity for the cone series.

    Integrating the quotient characters out of the cone series must keep
    exactly the lattice points coming from the sub-lattice.  The left
    side goes through the character-sum machinery gradewise; the right
    side is direct Hermite-form membership.  Returns True on agreement.
    """
    from .lattice import CharSum, integrate_dual

    points = cf.lattice_points_by_level(lam, bound)
    image = seq.image_sublattice()
    by_level_left = {}
    by_level_right = {}
    for point, level in points:
        key = level
        gamma_part = seq.j_apply(point)
        s = by_level_left.setdefault(key, {})
        s[gamma_part] = s.get(gamma_part, ZERO) + ONE
        if image.contains(point):
            by_level_right[key] = by_level_right.get(key, 0) + 1
    for level, terms in by_level_left.items():
        s = CharSum(seq.rank_g, terms)
        left = integrate_dual(s, Sublattice.zero(seq.rank_g))
        right = LefschetzLaurent({0: by_level_right.get(level, 0)})
        if left != right:
            return False
    for level, count in by_level_right.items():
        if level not in by_level_left and count:
            return False
    return True


# ---------------------------------------------------------------------------
# shifted cones


class SimplicialBasisCone:
    """The cone generated by a basis of the ambient lattice, with its
    dual-coordinate functionals."""

    __slots__ = ("rank", "basis", "dual_rows")

    def __init__(self, rank, basis=None):
        from .lattice import integer_inverse
        self.rank = int(rank)
        if basis is None:
            basis = [[1 if i == j else 0 for i in range(rank)]
                     for j in range(rank)]
        self.basis = tuple(tuple(int(x) for x in b) for b in basis)
        matrix = [[self.basis[j][i] for j in range(rank)] for i in range(rank)]
        self.dual_rows = tuple(tuple(r) for r in integer_inverse(matrix))

    def coords(self, y):
        return tuple(sum(r[k] * y[k] for k in range(self.rank))
                     for r in self.dual_rows)

    def contains(self, y):
        return all(c >= 0 for c in self.coords(y))

    def total_functional(self):
        return tuple(sum(r[k] for r in self.dual_rows)
                     for k in range(self.rank))


class _BoundPredicate:
    """Partial-sum predicate: every failing coordinate stays strictly
    below the target.  Monotone along the enumeration (ray coordinates
    are nonnegative), so a failing partial sum prunes its branch."""

    def __init__(self, lam_cone, failing, z_coords):
        self.lam_cone = lam_cone
        self.failing = tuple(failing)
        self.z_coords = z_coords

    def __call__(self, pt):
        coords = self.lam_cone.coords(pt)
        return all(coords[j] < self.z_coords[j] for j in self.failing)


def _strict_box_points(rays, predicate, rank):
    """Strictly positive integer combinations of the rays on which the
    monotone predicate holds; every ray must eventually violate it."""
    out = []

    def rec(idx, acc):
        if idx == len(rays):
            out.append(tuple(acc))
            return
        c = 1
        while True:
            new = [a + c * r for a, r in zip(acc, rays[idx])]
            if not predicate(tuple(new)):
                break
            rec(idx + 1, new)
            c += 1
            if c > 10 ** 6:
                raise AssertionError(
                    "unbounded enumeration; a ray escapes every constraint")

    if not rays:
        zero = (0,) * rank
        return [zero] if predicate(zero) else []
    rec(0, [0] * rank)
    return out


def _geometric_convolve(coeffs, step, bound):
    """Convolve with T^step / (1 - T^step), truncated at ``bound``."""
    new = [0] * (bound + 1)
    for i, v in enumerate(coeffs):
        if v:
            j = i + step
            while j <= bound:
                new[j] += v
                j += step
    return new


def shifted_cone_check(cf, z, bound, basis=None):
    """Inclusion-exclusion identity for the series of a shifted cone.

    The left side enumerates lattice points of the support that lie in
    z + (basis cone), graded by the total dual functional.  The right
    side reassembles the same series from the structural pieces: for each
    cone of the fan and each set of failing coordinates, a finite set of
    points (enumerated, with the cardinality and degree bounds verified)
    times a free geometric factor over the rays that the failing
    coordinates do not see.  Returns True when the series agree through
    the level bound and all piece bounds hold.
    """
    lam_cone = SimplicialBasisCone(cf.rank, basis)
    z = tuple(int(x) for x in z)
    z_coords = lam_cone.coords(z)
    if any(c < 0 for c in z_coords):
        raise ValueError("shift must lie in the basis cone")
    for ray in cf.rays:
        if not lam_cone.contains(ray):
            raise ValueError("support must be contained in the basis cone")
    lam_total = lam_cone.total_functional()
    index_set = range(cf.rank)

    lhs = [0] * (bound + 1)
    for point, level in cf.lattice_points_by_level(lam_total, bound):
        coords = lam_cone.coords(point)
        if all(coords[i] >= z_coords[i] for i in index_set):
            lhs[level] += 1

    z_total = sum(z_coords)
    sup_ray = max(sum(lam_cone.coords(r)) for r in cf.rays)
    rhs = [0] * (bound + 1)
    for face in cf.faces:
        for k in range(cf.rank + 1):
            for failing in combinations(index_set, k):
                free, bounded = [], []
                for i in face:
                    rc = lam_cone.coords(cf.rays[i])
                    if all(rc[j] == 0 for j in failing):
                        free.append(i)
                    else:
                        bounded.append(i)
                finite_points = _strict_box_points(
                    [cf.rays[i] for i in bounded],
                    _BoundPredicate(lam_cone, failing, z_coords),
                    cf.rank)
                if k >= 1:
                    if len(finite_points) > z_total ** cf.rank:
                        return False
                    limit = cf.rank * z_total * sup_ray
                    if any(sum(lam_cone.coords(p)) > limit
                           for p in finite_points):
                        return False
                elif finite_points != [(0,) * cf.rank]:
                    return False  # the empty failing set pins the finite part to 0
                if not finite_points:
                    continue
                piece = [0] * (bound + 1)
                for p in finite_points:
                    lvl = sum(a * b for a, b in zip(lam_total, p))
                    if lvl <= bound:
                        piece[lvl] += 1
                for i in free:
                    step = sum(a * b for a, b in zip(lam_total, cf.rays[i]))
                    piece = _geometric_convolve(piece, step, bound)
                sign = (-1) ** k
                for lvl in range(bound + 1):
                    rhs[lvl] += sign * piece[lvl]
    return lhs == rhs


# ---------------------------------------------------------------------------
# convolution series


def dual_cone_intersection_trivial(j_rows, basis_cone):
    """Whether the only functional factoring through the quotient and
    nonnegative on the basis cone is zero."""
    g = len(j_rows)
    if g == 0:
        return True
    # Constraints A u >= 0 with A[i][r] = <j^T u, basis_i>.
    a_rows = []
    for b in basis_cone.basis:
        a_rows.append(tuple(sum(j_rows[r][k] * b[k] for k in range(len(b)))
                            for r in range(g)))
    kernel = integer_kernel([list(r) for r in a_rows])
    if kernel:
        return False

    def satisfied(u):
        return all(sum(r[k] * u[k] for k in range(g)) >= 0 for r in a_rows)

    if g == 1:
        return not (satisfied((1,)) or satisfied((-1,)))
    for subset in combinations(range(len(a_rows)), g - 1):
        sub = [list(a_rows[i]) for i in subset]
        for u in integer_kernel(sub):
            if any(u) and (satisfied(u) or satisfied([-x for x in u])):
                return False
    return True


class ConvolutionResult:
    """Exact convolution series along a direction plus its special value
    computed by the two independent routes."""

    __slots__ = ("series", "residue", "value_series_route", "value_volume_route")

    def __init__(self, series, residue, value_series_route, value_volume_route):
        self.series = series
        self.residue = residue
        self.value_series_route = value_series_route
        self.value_volume_route = value_volume_route

    def routes_agree(self):
        return self.value_series_route == self.value_volume_route


def convolution_f1(weight, seq, cf, lambda0, trunc, basis=None):
    """Convolution of a finitely supported weight with the sub-lattice
    cone series, along a positive direction.

    The series is  sum over support points y1 of weight(y1) times the
    series of (support cone) intersect (y1 + basis cone); its pole at
    T = 1 of order rank(M) is cleared with the exponent a and the value
    is compared against a^rk(M) * (total weight) * (volume constant).
    """
    lam_cone = SimplicialBasisCone(cf.rank, basis)
    if not dual_cone_intersection_trivial(seq.j_rows, lam_cone):
        raise HypothesisViolation(
            "the quotient dual cone meets the basis dual cone nontrivially")
    image = seq.image_sublattice()
    for ray in cf.rays:
        if not image.contains(ray) or not lam_cone.contains(ray):
            raise ValueError(
                "support fan must subdivide the sub-lattice part of the cone")
    pairings = cf.ray_pairings(lambda0)
    if any(p <= 0 for p in pairings):
        raise NonPositiveDirection(
            f"direction {tuple(lambda0)} is not positive on every ray")

    rank_m = seq.rank_m
    a = lcm(*pairings) if pairings else 1

    weight_items = []
    total_weight = ZERO
    for y1, value in weight.items():
        y1 = tuple(int(x) for x in y1)
        if not lam_cone.contains(y1):
            raise ValueError("weight support must lie in the basis cone")
        if isinstance(value, int):
            value = LefschetzLaurent({0: value})
        if not value.is_zero():
            weight_items.append((y1, value))
            total_weight = total_weight + value
    weight_items.sort(key=lambda kv: kv[0])

    index_set = range(cf.rank)
    # Exact terms: (coefficient, prefactor polynomial {level: int},
    # tuple of denominator exponents), meaning
    # coeff * prefactor(T) * prod_k T^k/(1 - T^k).
    terms = []
    for y1, value in weight_items:
        z_coords = lam_cone.coords(y1)
        for face in cf.faces:
            for k in range(cf.rank + 1):
                for failing in combinations(index_set, k):
                    free, bounded = [], []
                    for i in face:
                        rc = lam_cone.coords(cf.rays[i])
                        if all(rc[j] == 0 for j in failing):
                            free.append(i)
                        else:
                            bounded.append(i)
                    finite_pts = _strict_box_points(
                        [cf.rays[i] for i in bounded],
                        _BoundPredicate(lam_cone, failing, z_coords),
                        cf.rank)
                    if not finite_pts:
                        continue
                    prefactor = {}
                    for p in finite_pts:
                        lvl = sum(a_ * b_ for a_, b_ in zip(lambda0, p))
                        prefactor[lvl] = prefactor.get(lvl, 0) + (-1) ** k
                    prefactor = {l: c for l, c in prefactor.items() if c}
                    if not prefactor:
                        continue
                    terms.append((value, prefactor,
                                  tuple(sorted(pairings[i] for i in free))))

    series = _expand_terms(terms, trunc)

    # Route 1: clear (1 - T^a)^rank_m and evaluate at T = 1 exactly.
    route1 = {}
    for value, prefactor, denoms in terms:
        if len(denoms) < rank_m:
            continue
        if len(denoms) > rank_m:
            raise AssertionError("pole order exceeded the sub-lattice rank")
        scalar = Fraction(sum(prefactor.values()))
        for kexp in denoms:
            scalar *= Fraction(a, kexp)
        for e, c in value.items():
            route1[e] = route1.get(e, Fraction(0)) + c * scalar
    route1 = {e: c for e, c in route1.items() if c}

    # Route 2: a^rk(M) * (total weight) * volume constant of the cone.
    chi = Fraction(0)
    for face in cf.faces:
        if len(face) == cf.dim:
            prod = Fraction(1)
            for i in face:
                prod /= pairings[i]
            chi += prod
    scalar = Fraction(a) ** rank_m * chi
    route2 = {}
    for e, c in total_weight.items():
        v = c * scalar
        if v:
            route2[e] = v
    residue = ResidueData(a, chi, rank_m)
    return ConvolutionResult(series, residue, route1, route2)


def _expand_terms(terms, trunc):
    out = GradedSeries(1, 0, {}, trunc)
    for value, prefactor, denoms in terms:
        coeffs = [0] * (trunc + 1)
        for lvl, c in prefactor.items():
            if lvl <= trunc:
                coeffs[lvl] += c
        for k in denoms:
            coeffs = _geometric_convolve(coeffs, k, trunc)
        series_terms = {}
        for lvl, c in enumerate(coeffs):
            if c:
                series_terms[GradedMonomial((lvl,), ())] = value * c
        out = out + GradedSeries(1, 0, series_terms, trunc)
    return out
