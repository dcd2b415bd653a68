"""Seeded verification suites shared by the command line and the tests.

Every suite draws all randomness from one seeded generator, so a (seed,
trials) pair pins the entire run; reports are plain dictionaries ready
for canonical JSON output.
"""

import random
from fractions import Fraction

from .lefschetz import LefschetzLaurent, ONE, L
from .lattice import (CharFunction, CharSum, Sublattice, fourier,
                      fourier_invert, integrate_dual, partial_integrate,
                      poisson_both_sides)
from .series import GradedMonomial, GradedSeries
from .euler import (LocalFactor, euler_product_genus0, plethystic_exp,
                    plethystic_log)
from .fan import preset_fan
from .conezeta import (ConeFan, ExactSequence, char_restrict_check,
                       convolution_f1, l_series_direction,
                       residue_check, shifted_cone_check)
from .heightzeta import (local_fourier_check, zeta_direct_genus0,
                         zeta_fourier_genus0)
from . import fqoracle

COEFF_POOL = (ONE, L, L + 1, L * L - L)


def _rng_for(seed, suite):
    return random.Random(f"{seed}:{suite}")


def _check(name, ok, detail=""):
    return {"name": name, "status": "pass" if ok else "fail",
            "detail": detail}


def _skip(name, detail):
    return {"name": name, "status": "skip", "detail": detail}


# ---------------------------------------------------------------------------
# random instance generators


def random_laurent(rng, allow_zero=False):
    c = {}
    for _ in range(rng.randint(1, 2)):
        c[rng.randint(-2, 2)] = rng.randint(-3, 3)
    value = LefschetzLaurent(c)
    if value.is_zero() and not allow_zero:
        return ONE
    return value


def random_char_function(rng, rank):
    support = {}
    for _ in range(rng.randint(1, 8)):
        m = tuple(rng.randint(-5, 5) for _ in range(rank))
        support[m] = random_laurent(rng)
    return CharFunction(rank, support)


def random_sublattice(rng, rank):
    k = rng.randint(0, rank)
    gens = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(k)]
    gens = [g for g in gens if any(g)]
    return Sublattice(rank, gens)


def random_unimodular(rng, n):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[k][i] += c * m[k][j]
    return m


def random_nonnegative_unimodular_columns(rng, n):
    """Columns of a unimodular matrix with nonnegative entries (random
    nonnegative elementary column operations); each column is primitive
    and the columns span a unimodular simplicial cone in the orthant."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(0, 2)
        for k in range(n):
            m[k][i] += c * m[k][j]
    return [tuple(m[i][j] for i in range(n)) for j in range(n)]


def random_local_factor(rng, trunc=8):
    terms = {GradedMonomial((0,), ()): ONE}
    for e in range(1, 4):
        if rng.random() < 0.8:
            terms[GradedMonomial((e,), ())] = rng.choice(COEFF_POOL)
    return LocalFactor(GradedSeries(1, 0, terms, trunc))


# ---------------------------------------------------------------------------
# suites


def suite_poisson(seed, trials):
    rng = _rng_for(seed, "poisson")
    checks = []
    if trials == 0:
        return [_skip("poisson-identity", "0 trials requested; vacuous pass")]

    failures = 0
    for _ in range(trials):
        rank = rng.randint(1, 3)
        psi = random_char_function(rng, rank)
        sub = random_sublattice(rng, rank)
        base = rng.choice(sorted(psi.support))
        offset = [rng.randint(-2, 2) for _ in range(len(sub.generators) or 0)]
        g = list(base)
        for coef, gen in zip(offset, sub.generators):
            g = [x + coef * y for x, y in zip(g, gen)]
        left, right = poisson_both_sides(psi, sub, tuple(g))
        if left != right:
            failures += 1
    checks.append(_check("poisson-identity", failures == 0,
                         f"{trials} trials, {failures} failures"))

    failures = 0
    for _ in range(trials):
        rank = rng.randint(1, 3)
        psi = random_char_function(rng, rank)
        transform = fourier(psi)
        x = rng.choice(sorted(psi.support)) if rng.random() < 0.7 else \
            tuple(rng.randint(-6, 6) for _ in range(rank))
        if fourier_invert(transform, x) != psi.value(x):
            failures += 1
    checks.append(_check("fourier-inversion", failures == 0,
                         f"{trials} trials, {failures} failures"))

    failures = 0
    for _ in range(trials):
        rank = rng.randint(2, 3)
        basis = random_unimodular(rng, rank)
        k = rng.randint(1, rank - 1)
        cols = [[basis[i][j] for i in range(rank)] for j in range(rank)]
        b_prime, b_second = cols[:k], cols[k:]
        gens_prime = [[rng.randint(-2, 2) for _ in range(k)]
                      for _ in range(rng.randint(0, k))]
        gens_prime = [g for g in gens_prime if any(g)]
        sub_prime = Sublattice(k, gens_prime)
        ambient_gens = []
        for g in gens_prime:
            vec = [0] * rank
            for coef, col in zip(g, b_prime):
                vec = [x + coef * y for x, y in zip(vec, col)]
            ambient_gens.append(vec)
        sub_ambient = Sublattice(rank, ambient_gens)
        terms = {tuple(rng.randint(-4, 4) for _ in range(rank)):
                 random_laurent(rng) for _ in range(rng.randint(1, 6))}
        s = CharSum(rank, terms)
        via_partial = partial_integrate(s, b_prime, b_second, sub_prime)
        total = integrate_dual(via_partial, Sublattice.zero(rank - k))
        direct = integrate_dual(s, sub_ambient)
        if total != direct:
            failures += 1
    checks.append(_check("partial-integration-composition", failures == 0,
                         f"{trials} trials, {failures} failures"))

    failures = 0
    for _ in range(trials):
        rank = rng.randint(1, 3)
        psi = random_char_function(rng, rank)
        a = tuple(rng.randint(-3, 3) for _ in range(rank))
        if fourier(psi.translate(a)) != CharSum.ev(a) * fourier(psi):
            failures += 1
    checks.append(_check("translation-covariance", failures == 0,
                         f"{trials} trials, {failures} failures"))

    failures = 0
    for _ in range(trials):
        rank = rng.randint(1, 2)
        extra = rng.randint(1, 2)
        psi = random_char_function(rng, rank)
        sub = random_sublattice(rng, rank)
        s = fourier(psi)
        small = integrate_dual(s, sub)
        big = integrate_dual(s.zero_extend(extra), sub.zero_extend(extra))
        if small != big:
            failures += 1
    checks.append(_check("ambient-extension-stability", failures == 0,
                         f"{trials} trials, {failures} failures"))
    return checks


def suite_fourier(seed, trials, use_oracle=True, budget=None):
    del seed, trials  # deterministic suite
    checks = []
    for name, trunc in (("P1", 6), ("P2", 4), ("P1xP1", 4),
                        ("Hirzebruch(1)", 3), ("Bl1P2", 3)):
        fan = preset_fan(name)
        checks.append(_check(f"local-fourier-{name}",
                             local_fourier_check(fan, trunc),
                             f"truncation {trunc}"))
    for name, dmax in (("P1", (4, 4)), ("P2", (2, 2, 2)),
                       ("P1xP1", (2, 2, 2, 2))):
        fan = preset_fan(name)
        direct = zeta_direct_genus0(fan, dmax)
        harmonic = zeta_fourier_genus0(fan, dmax)
        checks.append(_check(f"route-equality-{name}", direct == harmonic,
                             f"Dmax {dmax}"))
        if use_oracle:
            mismatches = 0
            skipped = 0
            for d in direct.degrees():
                try:
                    count = fqoracle.count_hom_fq(fan, d, 2, budget)
                except fqoracle.BudgetExceeded:
                    skipped += 1
                    continue
                if count != direct.coefficient(d).specialize(2):
                    mismatches += 1
            checks.append(_check(
                f"oracle-{name}-q2", mismatches == 0,
                f"{len(direct.degrees())} degrees, {skipped} skipped"))
            if skipped:
                checks.append(_skip(f"oracle-{name}-q2-budget",
                                    f"{skipped} degrees over budget"))
    return checks


def suite_euler(seed, trials, use_oracle=True):
    rng = _rng_for(seed, "euler")
    checks = []
    if trials == 0:
        return [_skip("euler-inversion", "0 trials requested; vacuous pass")]

    failures = 0
    for _ in range(trials):
        factor = random_local_factor(rng)
        back = plethystic_exp(plethystic_log(factor.series))
        if back != factor.series:
            failures += 1
    checks.append(_check("plethystic-inversion", failures == 0,
                         f"{trials} trials, {failures} failures"))

    failures = 0
    for _ in range(max(1, trials // 5)):
        f = random_local_factor(rng, trunc=5)
        g = random_local_factor(rng, trunc=5)
        prod = LocalFactor(f.series * g.series)
        lhs = euler_product_genus0(prod)
        rhs = euler_product_genus0(f) * euler_product_genus0(g)
        if lhs != rhs:
            failures += 1
    checks.append(_check("euler-multiplicativity", failures == 0,
                         f"{max(1, trials // 5)} trials, {failures} failures"))

    if use_oracle:
        failures = 0
        n = min(trials, 50)
        for _ in range(n):
            factor = random_local_factor(rng)
            symbolic = euler_product_genus0(factor)
            for q in (2, 3):
                oracle = fqoracle.euler_product_specialize(factor, q, 8)
                for mono, coeff in symbolic.terms.items():
                    if coeff.specialize(q) != oracle.get(mono.t, Fraction(0)):
                        failures += 1
                        break
                for t, v in oracle.items():
                    if v and symbolic.coefficient(t).specialize(q) != v:
                        failures += 1
                        break
        checks.append(_check("euler-specialization-oracle", failures == 0,
                             f"{n} factors at q in "r"{2,3}"
                             f", {failures} failures"))
    else:
        checks.append(_skip("euler-specialization-oracle",
                            "oracle disabled"))
    return checks


def shipped_cone_instances():
    quadrant = ConeFan(2, [[1, 0], [0, 1]], [[0, 1]], name="quadrant")
    subdivided = ConeFan(2, [[1, 0], [1, 1], [1, 2]], [[0, 1], [1, 2]],
                         name="subdivided")
    half_line = ConeFan(1, [[1]], [[0]], name="half-line")
    return quadrant, subdivided, half_line


def p2_convolution_instance():
    """Sub-lattice cone data attached to the projective plane: the dual
    Picard line sits diagonally inside the degree lattice."""
    seq = ExactSequence(i_cols=[(1, 1, 1)],
                        j_rows=[(1, 0, -1), (0, 1, -1)])
    cf = ConeFan(3, [[1, 1, 1]], [[0]], name="P2-diagonal")
    return seq, cf


def suite_cones(seed, trials):
    rng = _rng_for(seed, "cones")
    checks = []
    quadrant, subdivided, half_line = shipped_cone_instances()

    res = residue_check(quadrant, (1, 1))
    checks.append(_check("residue-quadrant",
                         res.a == 1 and res.special_value == 1, "a=1, value 1"))
    res = residue_check(subdivided, (1, 1))
    checks.append(_check(
        "residue-subdivided",
        res.a == 6 and res.special_value == 24 and res.chi == Fraction(2, 3),
        "a=6, 24 = 36 * 2/3"))
    res = residue_check(half_line, (3,))
    checks.append(_check("residue-half-line",
                         res.a == 3 and res.chi == Fraction(1, 3), "a=3"))

    level40 = l_series_direction(subdivided, (1, 1)).expand(40)
    brute = [0] * 41
    for _pt, lvl in subdivided.lattice_points_by_level((1, 1), 40):
        brute[lvl] += 1
    checks.append(_check("series-vs-enumeration", level40 == brute,
                         "subdivided cone to level 40"))

    if trials == 0:
        checks.append(_skip("char-restriction", "0 trials requested"))
        return checks

    failures = 0
    n = min(trials, 50)
    for _ in range(n):
        rank = rng.randint(2, 3)
        u = random_unimodular(rng, rank)
        m = rng.randint(1, rank - 1)
        i_cols = [tuple(u[i][j] for i in range(rank)) for j in range(m)]
        from .lattice import integer_inverse
        uinv = integer_inverse(u)
        j_rows = [tuple(uinv[i]) for i in range(m, rank)]
        seq = ExactSequence(i_cols, j_rows)
        orthant = ConeFan(
            rank, [[1 if i == j else 0 for i in range(rank)]
                   for j in range(rank)],
            [list(range(rank))], name="orthant")
        lam = tuple(rng.randint(1, 3) for _ in range(rank))
        if not char_restrict_check(seq, orthant, lam, 12):
            failures += 1
    checks.append(_check("char-restriction", failures == 0,
                         f"{n} seeded sequences, level 12"))

    failures = 0
    for idx in range(n):
        rank = rng.randint(1, 3)
        cols = random_nonnegative_unimodular_columns(rng, rank)
        k = rng.randint(1, rank)
        cf = ConeFan(rank, cols[:k], [list(range(k))], name=f"random-{idx}")
        z = tuple(rng.randint(0, 4) for _ in range(rank))
        if not shifted_cone_check(cf, z, 15):
            failures += 1
    if not shifted_cone_check(subdivided, (1, 1), 15):
        failures += 1
    if not shifted_cone_check(half_line, (2,), 20):
        failures += 1
    checks.append(_check("shifted-cone-identity", failures == 0,
                         f"{n}+2 instances, level 15"))

    seq, cf = p2_convolution_instance()
    lam = (1, 1, 1)
    inst_ok = True
    for weight in ({}, {(0, 0, 0): ONE},
                   {(0, 0, 0): ONE, (1, 0, 0): L}):
        result = convolution_f1(weight, seq, cf, lam, 12)
        if not result.routes_agree():
            inst_ok = False
    checks.append(_check("convolution-two-routes", inst_ok,
                         "shipped instances on the diagonal line"))
    return checks


SUITES = {
    "poisson": lambda seed, trials, use_oracle, budget:
        suite_poisson(seed, trials),
    "fourier": lambda seed, trials, use_oracle, budget:
        suite_fourier(seed, trials, use_oracle, budget),
    "euler": lambda seed, trials, use_oracle, budget:
        suite_euler(seed, trials, use_oracle),
    "cones": lambda seed, trials, use_oracle, budget:
        suite_cones(seed, trials),
}


def run_suites(names, seed, trials, use_oracle=True, budget=None):
    report = {"seed": seed, "trials": trials, "suites": []}
    warnings = []
    if trials == 0:
        warnings.append("0 trials requested; randomized checks are vacuous")
    for name in names:
        checks = SUITES[name](seed, trials, use_oracle, budget)
        status = "pass"
        if any(c["status"] == "fail" for c in checks):
            status = "fail"
        report["suites"].append({"suite": name, "status": status,
                                 "checks": checks})
    statuses = [s["status"] for s in report["suites"]]
    report["status"] = "fail" if "fail" in statuses else "pass"
    budget_hit = any(c["name"].endswith("-budget")
                     for s in report["suites"] for c in s["checks"])
    report["budget_exceeded"] = budget_hit
    if warnings:
        report["warnings"] = warnings
    return report
