"""Fans of smooth projective toric varieties and their combinatorics.

A fan is stored through its primitive rays and maximal cones; regularity
(unimodular simplicial cones) is checked exactly and completeness is
certified by the wall condition.  The exact sequence relating characters,
piecewise linear functions and the Picard group is realized by the two
maps gamma and gamma_dual.
"""

import json
from math import gcd

from .lefschetz import LefschetzLaurent, ONE, L
from .lattice import det, integer_inverse, integer_kernel, matvec


class FanValidationError(ValueError):
    code = "InvalidFan"


class NonPrimitiveRay(FanValidationError):
    code = "NonPrimitiveRay"


class DuplicateRay(FanValidationError):
    code = "DuplicateRay"


class NonUnimodularCone(FanValidationError):
    code = "NonUnimodularCone"


class WallConditionViolation(FanValidationError):
    code = "WallConditionViolation"


class Fan:
    """Validated complete regular fan.

    ``rays`` are primitive integer vectors, ``max_cones`` are tuples of
    ray indices; every maximal cone must be unimodular of full dimension
    and every wall must separate exactly two maximal cones.
    """

    __slots__ = ("name", "rank", "rays", "max_cones", "faces", "_inverses")

    def __init__(self, rank, rays, max_cones, name="custom"):
        self.name = name
        self.rank = int(rank)
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.max_cones = tuple(tuple(sorted(int(i) for i in c)) for c in max_cones)
        self._validate()
        self.faces = self._build_faces()
        # Caches are built eagerly; instances never mutate afterwards.
        self._inverses = tuple(
            integer_inverse([[self.rays[i][r] for i in cone]
                             for r in range(self.rank)])
            for cone in self.max_cones)

    # -- validation ---------------------------------------------------

    def _validate(self):
        n = self.rank
        for r in self.rays:
            if len(r) != n:
                raise FanValidationError(f"ray {r} has wrong arity")
            if not any(r):
                raise NonPrimitiveRay(f"zero ray {r}")
            if gcd(*(abs(x) for x in r)) != 1:
                raise NonPrimitiveRay(f"ray {r} is not primitive")
        if len(set(self.rays)) != len(self.rays):
            raise DuplicateRay("two rays coincide")
        if not self.max_cones:
            raise FanValidationError("fan has no maximal cones")
        for c in self.max_cones:
            if any(i < 0 or i >= len(self.rays) for i in c):
                raise FanValidationError(f"cone {c} uses an invalid ray index")
            if len(set(c)) != len(c):
                raise FanValidationError(f"cone {c} repeats a ray")
            if len(c) != n:
                raise NonUnimodularCone(
                    f"maximal cone {c} is not full-dimensional")
            d = det([list(self.rays[i]) for i in c])
            if d not in (1, -1):
                raise NonUnimodularCone(
                    f"maximal cone {c} has determinant {d}")
        self._check_walls()

    def _check_walls(self):
        n = self.rank
        if n == 1:
            covered = {self.rays[c[0]][0] > 0 for c in self.max_cones}
            if len(self.max_cones) != 2 or covered != {True, False}:
                raise WallConditionViolation(
                    "a complete fan of rank 1 needs the two opposite rays")
            return
        walls = {}
        for ci, cone in enumerate(self.max_cones):
            for drop in cone:
                wall = tuple(i for i in cone if i != drop)
                walls.setdefault(wall, []).append((ci, drop))
        for wall, owners in sorted(walls.items()):
            if len(owners) != 2:
                raise WallConditionViolation(
                    f"wall {wall} borders {len(owners)} maximal cone(s)")
            # The two remaining rays must lie strictly on opposite sides
            # of the wall's hyperplane.
            normal = integer_kernel([list(self.rays[i]) for i in wall])
            if len(normal) != 1:
                raise WallConditionViolation(
                    f"wall {wall} does not span a hyperplane")
            u = normal[0]
            a = sum(x * y for x, y in zip(u, self.rays[owners[0][1]]))
            b = sum(x * y for x, y in zip(u, self.rays[owners[1][1]]))
            if a * b >= 0:
                raise WallConditionViolation(
                    f"cones meeting along wall {wall} are not on opposite sides")

    def _build_faces(self):
        faces = {()}
        for cone in self.max_cones:
            k = len(cone)
            for mask in range(1, 1 << k):
                faces.add(tuple(cone[i] for i in range(k) if mask >> i & 1))
        return tuple(sorted(faces, key=lambda f: (len(f), f)))

    # -- the exact sequence --------------------------------------------

    @property
    def n_rays(self):
        return len(self.rays)

    @property
    def pic_rank(self):
        return len(self.rays) - self.rank

    def gamma(self, m):
        """Character m -> its tuple of pairings with all rays."""
        m = tuple(int(x) for x in m)
        return tuple(sum(mi * ri for mi, ri in zip(m, ray)) for ray in self.rays)

    def gamma_dual(self, d):
        """Degree vector d -> sum_alpha d_alpha * ray_alpha."""
        d = tuple(int(x) for x in d)
        if len(d) != len(self.rays):
            raise ValueError("degree vector arity mismatch")
        out = [0] * self.rank
        for coef, ray in zip(d, self.rays):
            for i in range(self.rank):
                out[i] += coef * ray[i]
        return tuple(out)

    def is_effective(self, d):
        return all(x >= 0 for x in d)

    # -- cone decomposition ---------------------------------------------

    def cone_decompose(self, m):
        """Unique cone containing m in its relative interior, with the
        positive expansion of m in that cone's rays.

        Returns (face, coefficients) where face is a sorted tuple of ray
        indices and coefficients maps each index to a positive integer;
        the origin decomposes as ((), {}).
        """
        m = tuple(int(x) for x in m)
        if len(m) != self.rank:
            raise ValueError("point arity mismatch")
        if not any(m):
            return (), {}
        for cone, inv in zip(self.max_cones, self._inverses):
            coords = matvec(inv, list(m))
            if all(c >= 0 for c in coords):
                face = tuple(i for i, c in zip(cone, coords) if c > 0)
                coeffs = {i: c for i, c in zip(cone, coords) if c > 0}
                return face, coeffs
        raise FanValidationError(
            f"point {m} lies in no cone; the fan is not complete")

    def interior_points(self, face, height_bound):
        """Lattice points in the relative interior of a face whose cone
        decomposition has total coefficient sum <= height_bound."""
        if not face:
            return [((0,) * self.rank, {})]
        rays = [self.rays[i] for i in face]
        out = []

        def rec(idx, remaining, coeffs):
            if idx == len(face):
                point = tuple(sum(c * rays[j][i] for j, c in enumerate(coeffs))
                              for i in range(self.rank))
                out.append((point, dict(zip(face, coeffs))))
                return
            for c in range(1, remaining - (len(face) - idx - 1) + 1):
                rec(idx + 1, remaining - c, coeffs + [c])

        rec(0, height_bound, [])
        return out

    def __repr__(self):
        return f"Fan({self.name!r}, rank={self.rank}, rays={len(self.rays)})"


class QPolynomial:
    """Multilinear integer polynomial in the ray variables X_alpha.

    Stored as {frozenset of ray indices: coefficient}.
    """

    __slots__ = ("n_vars", "coeffs")

    def __init__(self, n_vars, coeffs):
        self.n_vars = n_vars
        self.coeffs = {frozenset(k): int(v) for k, v in coeffs.items() if v}

    def monomials(self):
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))

    def min_positive_degree(self):
        degrees = [len(k) for k in self.coeffs if k]
        return min(degrees) if degrees else None

    def evaluate_all(self, value):
        """Evaluate with every variable set to the same ring element."""
        total = None
        for mono, c in self.coeffs.items():
            term = value ** len(mono) * c if len(mono) else LefschetzLaurent({0: c})
            if not isinstance(term, LefschetzLaurent):
                term = LefschetzLaurent({0: term})
            total = term if total is None else total + term
        return total if total is not None else LefschetzLaurent()

    def evaluate_fraction(self, value):
        """Evaluate with every variable set to the same Fraction."""
        total = 0
        for mono, c in self.coeffs.items():
            total += c * value ** len(mono)
        return total

    def univariate(self):
        """Collapse all variables to a single one; dense coefficient list."""
        degree = max((len(k) for k in self.coeffs), default=0)
        out = [0] * (degree + 1)
        for mono, c in self.coeffs.items():
            out[len(mono)] += c
        return out

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for mono, c in self.monomials():
            body = "*".join(f"X{i}" for i in sorted(mono)) if mono else "1"
            if c == 1 and mono:
                term = body
            elif c == -1 and mono:
                term = f"-{body}"
            elif mono:
                term = f"{c}*{body}"
            else:
                term = str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def q_sigma(fan):
    """Numerator polynomial of the local height Fourier transform.

    Q(X) = sum over cones sigma of  prod_{a in sigma} X_a *
    prod_{a not in sigma} (1 - X_a); its nonconstant part starts in
    total degree 2.
    """
    n = len(fan.rays)
    coeffs = {}
    for face in fan.faces:
        inside = set(face)
        outside = [i for i in range(n) if i not in inside]
        # Expand prod_{a outside} (1 - X_a) over subsets of ``outside``.
        for mask in range(1 << len(outside)):
            extra = [outside[i] for i in range(len(outside)) if mask >> i & 1]
            key = frozenset(inside | set(extra))
            coeffs[key] = coeffs.get(key, 0) + (-1) ** len(extra)
    poly = QPolynomial(n, coeffs)
    deg = poly.min_positive_degree()
    if deg is not None and deg < 2:
        raise AssertionError(
            "the height numerator acquired a linear term; fan data is corrupt")
    return poly


def class_of_variety(fan):
    """Class of the toric variety: sum over cones of (L-1)^(rank - dim)."""
    total = LefschetzLaurent()
    lm1 = L - 1
    for face in fan.faces:
        total = total + lm1 ** (fan.rank - len(face))
    return total


def q_sigma_at_L_inv(fan):
    """Value of Q at X_a = L^-1 for all a.

    Also asserts the closed form (1 - L^-1)^r * [X] * L^-rank, which is a
    theorem; a failure indicates an implementation bug.
    """
    poly = q_sigma(fan)
    value = LefschetzLaurent()
    linv = LefschetzLaurent({-1: 1})
    for mono, c in poly.coeffs.items():
        value = value + (linv ** len(mono)) * c
    r = fan.pic_rank
    expected = ((ONE - linv) ** r) * class_of_variety(fan) * LefschetzLaurent(
        {-fan.rank: 1})
    if value != expected:
        raise AssertionError(
            "special value of Q disagrees with (1-L^-1)^r [X] L^-n")
    return value


def anticanonical_degree(fan, d):
    """Pairing of a degree vector with the anticanonical class: sum d_a."""
    d = tuple(int(x) for x in d)
    if len(d) != len(fan.rays):
        raise ValueError("degree vector arity mismatch")
    return sum(d)


# ---------------------------------------------------------------------------
# presets and file ingestion


def preset_fan(name):
    """Shipped fans: P1, P2, P1xP1, Hirzebruch(a) (alias F<a>), Bl1P2."""
    key = name.strip()
    lower = key.lower()
    if lower == "p1":
        return Fan(1, [[1], [-1]], [[0], [1]], name="P1")
    if lower == "p2":
        return Fan(2, [[1, 0], [0, 1], [-1, -1]],
                   [[0, 1], [1, 2], [2, 0]], name="P2")
    if lower == "p1xp1":
        return Fan(2, [[1, 0], [-1, 0], [0, 1], [0, -1]],
                   [[0, 2], [2, 1], [1, 3], [3, 0]], name="P1xP1")
    if lower == "bl1p2":
        return Fan(2, [[1, 0], [0, 1], [-1, -1], [1, 1]],
                   [[0, 3], [3, 1], [1, 2], [2, 0]], name="Bl1P2")
    a = None
    if lower.startswith("hirzebruch(") and lower.endswith(")"):
        a = int(key[len("hirzebruch("):-1])
    elif lower.startswith("f") and key[1:].isdigit():
        a = int(key[1:])
    if a is not None:
        if a < 0:
            raise ValueError("Hirzebruch parameter must be nonnegative")
        return Fan(2, [[1, 0], [0, 1], [-1, a], [0, -1]],
                   [[0, 1], [1, 2], [2, 3], [3, 0]], name=f"Hirzebruch({a})")
    raise ValueError(f"unknown preset fan {name!r}")


PRESET_NAMES = ("P1", "P2", "P1xP1", "Hirzebruch(1)", "Bl1P2")


class FanParseError(ValueError):
    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        where = ""
        if path:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
                if column is not None:
                    where += f":{column}"
            where += ": "
        super().__init__(where + message)


def fan_from_dict(data, name_default="custom", support_only=False):
    for field in ("rank", "rays", "max_cones"):
        if field not in data:
            raise FanParseError(f"missing field {field!r}")
    name = data.get("name", name_default)
    if support_only or data.get("support_only"):
        from .conezeta import ConeFan
        return ConeFan(data["rank"], data["rays"], data["max_cones"], name=name)
    return Fan(data["rank"], data["rays"], data["max_cones"], name=name)


def validate_fan(raw):
    """Build a validated Fan from a raw description.

    Accepts a mapping with rank, rays and max_cones (plus an optional
    name) or an existing Fan; raises a structured error naming the
    violated invariant otherwise.
    """
    if isinstance(raw, Fan):
        return raw
    if isinstance(raw, dict):
        return fan_from_dict(raw)
    raise FanParseError(f"cannot interpret {type(raw).__name__} as a fan")


def load_fan(path):
    """Read a fan description from a JSON or TOML file."""
    text = open(path, "rb").read()
    if str(path).endswith(".toml"):
        try:
            import tomllib as toml
        except ImportError:
            import tomli as toml
        try:
            data = toml.loads(text.decode("utf-8"))
        except toml.TOMLDecodeError as exc:
            raise FanParseError(str(exc), path=path) from exc
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FanParseError(exc.msg, path=path, line=exc.lineno,
                                column=exc.colno) from exc
    return fan_from_dict(data)
