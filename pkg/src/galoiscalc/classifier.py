"""Galois group classification for irreducible polynomials of degree 1 to 5.

Degrees 3 and 4 are settled by exact integer tests: is the discriminant a
square, and does the resolvent cubic have an integer root (plus the
Kappe-Warren products to split C4 from D8). Quintics are depressed and use
the resolvent sextic; the C5/D10 split needs the numeric sigma test.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional

from . import modp
from .errors import (
    DegreeError,
    InvariantViolation,
    NotSquarefreeError,
    ReducibleError,
)
from .exact_arith import divisors, integer_roots, is_perfect_square
from .groups import EVEN_GROUPS, GaloisGroup
from .numeric import (
    DEFAULT_TOLERANCES,
    RootSet,
    ThetaOrdering,
    Tolerances,
    all_roots,
    all_roots_raw,
    find_theta_ordering,
    sigma_test,
)
from .polynomial import IntPoly, RatPoly, depress_quintic, divmod_poly, normalize_to_monic_integral
from .resolvent import (
    disc_cubic,
    is_trinomial,
    kappe_warren_products,
    quartic_aux,
    quintic_aux,
    trinomial_disc,
    trinomial_resolvent_cubic,
    trinomial_resolvent_sextic,
)

G = GaloisGroup

# Above this size the constant term is not factored; quadratic factors are
# then searched from numeric root pairs instead of divisor pairs.
FACTOR_DIVISOR_LIMIT = 10**10

# Label for the branch that needs the numeric phase.
CYCLIC_OR_DIHEDRAL = "C5/D10"


class BadPrimeError(ValueError):
    """The prime divides the discriminant, so the reduction is not squarefree."""


@dataclass(frozen=True)
class KappeWarren:
    n1: int
    n2: int
    n1_sqrt: Optional[int]
    n2_sqrt: Optional[int]

    @property
    def both_square(self) -> bool:
        return self.n1_sqrt is not None and self.n2_sqrt is not None


@dataclass
class Certificate:
    input: Optional[RatPoly] = None
    normalized: Optional[IntPoly] = None
    lam: int = 1
    shift: int = 0
    # polynomial the decision tree actually ran on (depressed for quintics)
    working: Optional[IntPoly] = None
    delta: Optional[int] = None
    delta_sqrt: Optional[int] = None
    resolvent: Optional[IntPoly] = None
    resolvent_roots: list[int] = field(default_factory=list)
    resolvent_root: Optional[int] = None
    kappe_warren: Optional[KappeWarren] = None
    roots: Optional[RootSet] = None
    theta_ordering: Optional[ThetaOrdering] = None
    sigma1: Optional[complex] = None
    sigma2: Optional[complex] = None
    sigma1_integer: Optional[int] = None
    fast_path: bool = False
    tolerances: dict = field(default_factory=dict)

    @property
    def delta_is_square(self) -> bool:
        return self.delta_sqrt is not None


@dataclass
class ClassifyReport:
    group: GaloisGroup
    certificate: Certificate
    dedekind_checked: Optional[bool] = None
    warnings: list[str] = field(default_factory=list)


# ---------------------------------------------------------------- irreducibility


def _quartic_quadratic_factor(f: IntPoly) -> Optional[IntPoly]:
    # (x^2 + u x + v)(x^2 + w x + z), v z = d
    d, c, b, a = f[0], f[1], f[2], f[3]
    for v0 in divisors(d):
        for v in (v0, -v0):
            z = d // v
            us: list[int] = []
            if z != v:
                num, den = c - v * a, z - v
                if num % den == 0:
                    us.append(num // den)
            elif c == v * a:
                # u^2 - a u + (b - 2v) = 0
                us.extend(_int_quadratic_roots(1, -a, b - 2 * v))
            for u in us:
                cand = _checked_factor(f, IntPoly((v, u, 1)))
                if cand is not None:
                    return cand
    return None


def _quintic_quadratic_factor(f: IntPoly) -> Optional[IntPoly]:
    # (x^2 + u x + v)(x^3 + alpha x^2 + beta x + gamma), v gamma = e
    e, d, c, b, a = f[0], f[1], f[2], f[3], f[4]
    for v0 in divisors(e):
        for v in (v0, -v0):
            gamma = e // v
            # v u^2 + (gamma - v a) u + v (b - v) - d = 0
            for u in _int_quadratic_roots(v, gamma - v * a, v * (b - v) - d):
                cand = _checked_factor(f, IntPoly((v, u, 1)))
                if cand is not None:
                    return cand
    return None


def _int_quadratic_roots(A: int, B: int, C: int) -> list[int]:
    """Integer solutions of A u^2 + B u + C = 0 (A != 0)."""
    disc = B * B - 4 * A * C
    s = is_perfect_square(disc)
    if s is None:
        return []
    out = []
    for num in {-B + s, -B - s}:
        if num % (2 * A) == 0:
            out.append(num // (2 * A))
    return out


def _checked_factor(f: IntPoly, g: IntPoly) -> Optional[IntPoly]:
    _, rem = divmod_poly(f, g)
    return g if rem.is_zero() else None


def _numeric_quadratic_factor(f: IntPoly) -> Optional[IntPoly]:
    roots = all_roots_raw(f)
    for z1, z2 in itertools.combinations(roots, 2):
        s, pr = z1 + z2, z1 * z2
        if abs(s.imag) > 0.5 + 1e-9 * abs(s) or abs(pr.imag) > 0.5 + 1e-9 * abs(pr):
            continue
        for u in {math.floor(-s.real), math.ceil(-s.real)}:
            for v in {math.floor(pr.real), math.ceil(pr.real)}:
                cand = _checked_factor(f, IntPoly((v, u, 1)))
                if cand is not None:
                    return cand
    return None


def find_factor(f: IntPoly) -> Optional[IntPoly]:
    """A monic nonconstant proper factor of ``f`` in Z[x], or None if irreducible."""
    if not f.is_monic() or not 1 <= f.degree <= 5:
        raise DegreeError("find_factor needs a monic polynomial of degree 1..5")
    n = f.degree
    if n == 1:
        return None
    roots = integer_roots(f)
    if roots:
        return IntPoly((-roots[0], 1))
    if n <= 3:
        return None
    # no linear factor, so any factorization has a quadratic factor
    if abs(f[0]) > FACTOR_DIVISOR_LIMIT:
        return _numeric_quadratic_factor(f)
    if n == 4:
        return _quartic_quadratic_factor(f)
    return _quintic_quadratic_factor(f)


def is_irreducible(f: IntPoly) -> bool:
    return find_factor(f) is None


# ---------------------------------------------------------------- Dedekind


def cycle_type_mod_p(f: IntPoly, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of ``f`` modulo the prime ``p``."""
    g = modp.reduce(f.coeffs, p)
    if len(g) - 1 != f.degree or not modp.is_squarefree(g, p):
        raise BadPrimeError(f"{p} divides the discriminant of {f}")
    return tuple(modp.distinct_degree_degrees(g, p))


def dedekind_check(f: IntPoly, claimed: GaloisGroup, prime_bound: int = 200) -> bool:
    """Every factorization pattern mod a good prime must be a cycle type of ``claimed``."""
    return not dedekind_violations(f, claimed, prime_bound)


def dedekind_violations(f: IntPoly, claimed: GaloisGroup, prime_bound: int = 200) -> list[tuple[int, tuple[int, ...]]]:
    bad = []
    allowed = claimed.cycle_types
    for p in modp.primes_up_to(prime_bound):
        try:
            ct = cycle_type_mod_p(f, p)
        except BadPrimeError:
            continue
        if ct not in allowed:
            bad.append((p, ct))
    return bad


# ---------------------------------------------------------------- decision trees


def _require_monic(f: IntPoly, degree: int) -> None:
    if f.degree != degree or not f.is_monic():
        raise DegreeError(f"expected a monic polynomial of degree {degree}, got {f}")


def _square_test(cert: Certificate, delta: int) -> bool:
    if delta == 0:
        raise NotSquarefreeError(f"discriminant of {cert.working} is 0; the input cannot be irreducible")
    cert.delta = delta
    cert.delta_sqrt = is_perfect_square(delta)
    return cert.delta_sqrt is not None


def classify_cubic(f: IntPoly, cert: Certificate | None = None) -> ClassifyReport:
    _require_monic(f, 3)
    cert = cert or Certificate(working=f)
    cert.working = f
    c, b, a = f[0], f[1], f[2]
    group = G.A3 if _square_test(cert, disc_cubic(a, b, c)) else G.S3
    return ClassifyReport(group, cert)


def classify_quartic(f: IntPoly, cert: Certificate | None = None) -> ClassifyReport:
    _require_monic(f, 4)
    cert = cert or Certificate(working=f)
    cert.working = f
    warnings: list[str] = []
    aux = quartic_aux(f)
    square = _square_test(cert, aux.delta)
    cert.resolvent = aux.r3
    cert.resolvent_roots = integer_roots(aux.r3)
    if not cert.resolvent_roots:
        group = G.A4 if square else G.S4
    elif square:
        group = G.V
    else:
        if len(cert.resolvent_roots) > 1:
            warnings.append(
                f"resolvent cubic has {len(cert.resolvent_roots)} integer roots on the non-square branch"
            )
        r = cert.resolvent_roots[0]
        cert.resolvent_root = r
        n1, n2 = kappe_warren_products(f[3], f[2], f[0], r, aux.delta)
        kw = KappeWarren(n1, n2, is_perfect_square(n1), is_perfect_square(n2))
        cert.kappe_warren = kw
        group = G.C4 if kw.both_square else G.D8
    return ClassifyReport(group, cert, warnings=warnings)


def _quintic_branch(square: bool, r6_roots: list[int]) -> GaloisGroup | str:
    if not r6_roots:
        return G.A5 if square else G.S5
    if not square:
        return G.F20
    return CYCLIC_OR_DIHEDRAL


def _cyclic_or_dihedral(f: IntPoly, cert: Certificate, tol: Tolerances, warnings: list[str]) -> GaloisGroup:
    if len(cert.resolvent_roots) > 1:
        warnings.append(f"resolvent sextic has {len(cert.resolvent_roots)} integer roots")
    target = cert.resolvent_roots[0]
    cert.resolvent_root = target
    rs = all_roots(f, tol)
    cert.roots = rs
    ordering = find_theta_ordering(rs, target, tol)
    if ordering.matching_orderings != 20:
        warnings.append(f"{ordering.matching_orderings} orderings match theta1, expected 20")
    st = sigma_test(rs, ordering, tol)
    cert.theta_ordering = st.ordering
    cert.sigma1 = st.sigma1
    cert.sigma2 = st.sigma2
    cert.sigma1_integer = st.sigma1_integer
    return G.C5 if st.sigma1_integer is not None else G.D10


def classify_quintic(
    f: IntPoly, cert: Certificate | None = None, tol: Tolerances = DEFAULT_TOLERANCES
) -> ClassifyReport:
    """Classify a monic irreducible quintic; a nonzero x^4 term is removed first."""
    _require_monic(f, 5)
    cert = cert or Certificate()
    cert.tolerances = tol.as_dict()
    warnings: list[str] = []
    h, shift = depress_quintic(f)
    cert.shift = shift
    cert.working = h
    aux = quintic_aux(h)
    square = _square_test(cert, aux.delta)
    cert.resolvent = aux.r6
    cert.resolvent_roots = integer_roots(aux.r6)
    branch = _quintic_branch(square, cert.resolvent_roots)
    if branch == CYCLIC_OR_DIHEDRAL:
        branch = _cyclic_or_dihedral(h, cert, tol, warnings)
    return ClassifyReport(branch, cert, warnings=warnings)


def trinomial_route(f: IntPoly) -> tuple[int, Optional[IntPoly], GaloisGroup | str]:
    """Shortcut decision for x^n + p x + q, n = 3, 4, 5.

    Returns (discriminant, resolvent, group) where the group is the string
    ``"C5/D10"`` when the numeric phase is still needed.
    """
    if not is_trinomial(f):
        raise ValueError(f"{f} is not of the form x^n + p x + q")
    n, p, q = f.degree, f[1], f[0]
    delta = trinomial_disc(n, p, q)
    if delta == 0:
        raise NotSquarefreeError(f"discriminant of {f} is 0")
    square = is_perfect_square(delta) is not None
    if n == 3:
        return delta, None, G.A3 if square else G.S3
    if n == 4:
        r3 = trinomial_resolvent_cubic(p, q)
        roots = integer_roots(r3)
        if square:
            return delta, r3, G.V if roots else G.A4
        if not roots:
            return delta, r3, G.S4
        r = roots[0]
        both = is_perfect_square(r * delta) is not None and is_perfect_square((r * r - 4 * q) * delta) is not None
        return delta, r3, G.C4 if both else G.D8
    r6 = trinomial_resolvent_sextic(p, q)
    roots = integer_roots(r6)
    if not square:
        return delta, r6, G.F20 if roots else G.S5
    if not roots:
        return delta, r6, G.A5
    return delta, r6, CYCLIC_OR_DIHEDRAL


def _general_route_label(report: ClassifyReport) -> GaloisGroup | str:
    if report.group in (G.C5, G.D10):
        return CYCLIC_OR_DIHEDRAL
    return report.group


def classify_int(
    f: IntPoly,
    tol: Tolerances = DEFAULT_TOLERANCES,
    cert: Certificate | None = None,
) -> ClassifyReport:
    """Classify a monic integral polynomial of degree 1..5 after the irreducibility gate."""
    if not f.is_monic():
        raise DegreeError("classify_int needs a monic polynomial")
    if not 1 <= f.degree <= 5:
        raise DegreeError(f"degree {f.degree} is outside 1..5")
    cert = cert or Certificate(input=RatPoly.from_int(f), normalized=f)
    cert.tolerances = tol.as_dict()
    factor = find_factor(f)
    if factor is not None:
        raise ReducibleError(f, factor)

    n = f.degree
    if n == 1:
        cert.working = f
        cert.delta, cert.delta_sqrt = 1, 1
        report = ClassifyReport(G.C1, cert)
    elif n == 2:
        cert.working = f
        _square_test(cert, f[1] ** 2 - 4 * f[0])
        report = ClassifyReport(G.S2, cert)
    elif n == 3:
        report = classify_cubic(f, cert)
    elif n == 4:
        report = classify_quartic(f, cert)
    else:
        report = classify_quintic(f, cert, tol)

    if n >= 3 and is_trinomial(report.certificate.working):
        _compare_fast_path(report)
    _check_parity(report)
    return report


def _compare_fast_path(report: ClassifyReport) -> None:
    cert = report.certificate
    delta, resolvent, label = trinomial_route(cert.working)
    general = _general_route_label(report)
    if delta != cert.delta or resolvent != cert.resolvent or label != general:
        raise InvariantViolation(
            f"trinomial shortcut disagrees with the general route for {cert.working}: "
            f"({delta}, {resolvent}, {label}) vs ({cert.delta}, {cert.resolvent}, {general})"
        )
    cert.fast_path = True


def _check_parity(report: ClassifyReport) -> None:
    if report.group.degree < 2:
        return
    if report.certificate.delta_is_square != (report.group in EVEN_GROUPS):
        raise InvariantViolation(
            f"{report.group} with discriminant {report.certificate.delta} breaks the square-discriminant law"
        )


def classify(
    g: RatPoly | IntPoly,
    tol: Tolerances = DEFAULT_TOLERANCES,
    dedekind_bound: int | None = None,
) -> ClassifyReport:
    """Galois group of an irreducible polynomial over Q of degree 1..5.

    The polynomial is scaled to a monic integral one with the same splitting
    field, checked for irreducibility (ReducibleError carries a factor), and
    dispatched by degree. If ``dedekind_bound`` is given, the answer is
    cross-checked against factorization patterns modulo primes up to it and
    ``dedekind_checked`` records the outcome.
    """
    if isinstance(g, IntPoly):
        g = RatPoly.from_int(g)
    if not 1 <= g.degree <= 5:
        raise DegreeError(f"degree {g.degree} is outside 1..5")
    f, lam = normalize_to_monic_integral(g)
    cert = Certificate(input=g, normalized=f, lam=lam)
    report = classify_int(f, tol, cert)
    if dedekind_bound is not None:
        bad = dedekind_violations(f, report.group, dedekind_bound)
        report.dedekind_checked = not bad
        for p, ct in bad:
            report.warnings.append(f"mod {p} factor degrees {list(ct)} are not a cycle type of {report.group}")
    return report
