"""Floating-point phase: complex roots, root orderings, and the sigma test.

Roots are found by simultaneous Weierstrass (Durand-Kerner) iteration on a
power-of-two rescaling of the polynomial, then polished with Newton's method.
The rescaling keeps huge integer coefficients (resolvent sextics) in range.
"""

from __future__ import annotations

import cmath
import itertools
import math
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import ConvergenceError, NumericAmbiguityError, PrecisionError
from .polynomial import IntPoly

EPS = sys.float_info.epsilon

# (squared index, the two linear indices) for each monomial of theta1
THETA_MONOMIALS = (
    (0, 1, 4), (0, 2, 3),
    (1, 0, 2), (1, 3, 4),
    (2, 0, 4), (2, 1, 3),
    (3, 0, 1), (3, 2, 4),
    (4, 0, 3), (4, 1, 2),
)


@dataclass(frozen=True)
class Tolerances:
    """Every numeric threshold used by a classification."""

    residual: float = 1e-12     # relative to 1 + height(f)
    theta: float = 1e-3         # relative to max(1, |target|)
    sigma: float = 1e-3
    pairing: float = 1e-6
    max_iters: int = 500

    def __post_init__(self):
        for name in ("residual", "theta", "sigma", "pairing"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name} must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")

    def as_dict(self) -> dict:
        return {
            "residual": self.residual,
            "theta": self.theta,
            "sigma": self.sigma,
            "pairing": self.pairing,
            "max_iters": self.max_iters,
        }


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    # index -> index of its conjugate; real roots map to themselves
    conjugate_pairing: tuple[int, ...]
    iterations: int = 0

    @property
    def real_count(self) -> int:
        return sum(1 for i, j in enumerate(self.conjugate_pairing) if i == j)


@dataclass(frozen=True)
class ThetaOrdering:
    perm: tuple[int, ...]   # position -> index into RootSet.roots
    theta_value: complex
    target: int
    mismatch: float
    matching_orderings: int = 20
    theta_values: tuple[complex, ...] = field(default=(), compare=False)
    # every ordering in the matched class, sorted
    candidates: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def apply(self, roots) -> list[complex]:
        return [roots[i] for i in self.perm]


def _log2_abs(c: int) -> float:
    return math.log2(abs(c))


def _scale_exponent(coeffs: tuple[int, ...]) -> int:
    """Exponent k so that all roots of the monic polynomial lie in |z| <= 2**k."""
    n = len(coeffs) - 1
    # Fujiwara: |z| <= 2 * max |c_{n-j}|**(1/j)
    best = -math.inf
    for j in range(1, n + 1):
        c = coeffs[n - j]
        if c:
            best = max(best, _log2_abs(c) / j)
    if best == -math.inf:
        return 0
    return math.ceil(best) + 1


def _scaled_coeffs(coeffs: tuple[int, ...], k: int) -> list[float]:
    n = len(coeffs) - 1
    out = []
    for i, c in enumerate(coeffs):
        e = k * (n - i)
        # exact powers of two, so only the final rounding is inexact
        v = Fraction(c, 2**e) if e >= 0 else Fraction(c * 2 ** (-e))
        out.append(float(v))
    return out


def _horner(cs: list[float], z: complex) -> complex:
    acc = 0j
    for c in reversed(cs):
        acc = acc * z + c
    return acc


def _horner_with_derivative(cs: list[float], z: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for c in reversed(cs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _durand_kerner(cs: list[float], max_iters: int) -> tuple[list[complex], int, bool]:
    n = len(cs) - 1
    # equiangular start inside the unit disk, rotated off the real axis
    zs = [0.9 * cmath.exp(1j * (2 * math.pi * k / n + 0.4)) for k in range(n)]
    for it in range(1, max_iters + 1):
        worst = 0.0
        for i in range(n):
            zi = zs[i]
            den = 1 + 0j
            for j in range(n):
                if j != i:
                    den *= zi - zs[j]
            if den == 0:
                den = complex(EPS, EPS)
            step = _horner(cs, zi) / den
            zs[i] = zi - step
            worst = max(worst, abs(step) / max(1.0, abs(zs[i])))
        if worst < 4 * EPS:
            return zs, it, True
    return zs, max_iters, False


def _polish(cs: list[float], z: complex, steps: int = 8) -> complex:
    best = z
    best_val = abs(_horner(cs, z))
    for _ in range(steps):
        p, dp = _horner_with_derivative(cs, z)
        if dp == 0:
            break
        z = z - p / dp
        val = abs(_horner(cs, z))
        if val < best_val:
            best, best_val = z, val
        else:
            break
    return best


def _monic_or_raise(p: IntPoly) -> None:
    if p.degree < 1 or not p.is_monic():
        raise ValueError("root finding needs a monic polynomial of degree >= 1")


def _solve(p: IntPoly, max_iters: int) -> tuple[list[complex], int, bool]:
    _monic_or_raise(p)
    if p.degree == 1:
        return [complex(-p[0])], 0, True
    k = _scale_exponent(p.coeffs)
    if k * p.degree > 1000:
        raise PrecisionError("coefficients too large for double precision root finding")
    cs = _scaled_coeffs(p.coeffs, k)
    zs, its, ok = _durand_kerner(cs, max_iters)
    zs = [_polish(cs, z) * 2.0**k for z in zs]
    for z in zs:
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise PrecisionError("root approximation overflowed")
    return zs, its, ok


def all_roots_raw(p: IntPoly, max_iters: int = 500) -> list[complex]:
    """Approximate all complex roots of a monic integer polynomial, unchecked."""
    return _solve(p, max_iters)[0]


def residual_bound(p: IntPoly, z: complex) -> float:
    """Rounding-error scale of evaluating ``p`` at ``z`` in double precision."""
    acc = 0.0
    r = abs(z)
    for c in reversed(p.coeffs):
        acc = acc * r + abs(float(c))
    return (2 * len(p.coeffs)) * EPS * acc


def _pair_conjugates(zs: list[complex], tol: float) -> tuple[list[complex], tuple[int, ...]]:
    n = len(zs)
    pairing = list(range(n))
    real = [i for i in range(n) if abs(zs[i].imag) <= tol * max(1.0, abs(zs[i]))]
    upper = [i for i in range(n) if i not in real and zs[i].imag > 0]
    lower = [i for i in range(n) if i not in real and zs[i].imag < 0]
    if len(upper) != len(lower):
        raise NumericAmbiguityError("non-real roots do not come in conjugate pairs")
    out = list(zs)
    for i in real:
        out[i] = complex(zs[i].real, 0.0)
    free = set(lower)
    for i in sorted(upper, key=lambda i: -zs[i].imag):
        j = min(free, key=lambda j: abs(zs[i] - zs[j].conjugate()))
        if abs(zs[i] - zs[j].conjugate()) > tol * max(1.0, abs(zs[i])):
            raise NumericAmbiguityError("could not match a root with its conjugate")
        free.remove(j)
        m = (zs[i] + zs[j].conjugate()) / 2
        out[i], out[j] = m, m.conjugate()
        pairing[i], pairing[j] = j, i
    return out, tuple(pairing)


def all_roots(f: IntPoly, tol: Tolerances = DEFAULT_TOLERANCES) -> RootSet:
    """All roots of a monic squarefree integer polynomial, verified.

    Raises ConvergenceError if some residual stays above the tolerance and
    PrecisionError if the coefficients do not fit in double precision.
    """
    zs, its, _ = _solve(f, tol.max_iters)
    zs, pairing = _pair_conjugates(zs, tol.pairing)
    # canonical order: by modulus, then real part, upper half-plane first
    order = sorted(range(len(zs)), key=lambda i: (abs(zs[i]), zs[i].real, -zs[i].imag))
    where = {old: new for new, old in enumerate(order)}
    zs = [zs[i] for i in order]
    pairing = tuple(where[pairing[i]] for i in order)
    try:
        fcs = [float(c) for c in f.coeffs]
    except OverflowError as exc:
        raise PrecisionError("coefficient exceeds double range") from exc
    abs_tol = tol.residual * (1 + f.height())
    residuals = []
    for z in zs:
        res = abs(_horner(fcs, z))
        if not math.isfinite(res):
            raise PrecisionError("residual overflowed")
        if res > max(abs_tol, residual_bound(f, z)):
            raise ConvergenceError(
                f"root {z} has residual {res:.3g} after {its} iterations"
            )
        residuals.append(res)
    return RootSet(tuple(zs), tuple(residuals), pairing, its)


def theta1(r) -> complex:
    """The ten-monomial invariant whose conjugates are the roots of R6."""
    return sum(r[a] ** 2 * r[b] * r[c] for a, b, c in THETA_MONOMIALS)


def sigma1(r) -> complex:
    """Cyclic invariant r1 r2^2 + r2 r3^2 + r3 r4^2 + r4 r5^2 + r5 r1^2."""
    return sum(r[i] * r[(i + 1) % 5] ** 2 for i in range(5))


def sigma2(r) -> complex:
    """sigma1 after the involution (2,5)(3,4) of positions."""
    return sigma1([r[0], r[4], r[3], r[2], r[1]])


def _theta_key(perm: tuple[int, ...]) -> frozenset:
    # The formal theta1 of an ordering as a set of monomials in root indices;
    # orderings with equal keys give identical theta values.
    return frozenset((perm[a], frozenset((perm[b], perm[c]))) for a, b, c in THETA_MONOMIALS)


def theta_classes(roots) -> list[tuple[complex, list[tuple[int, ...]]]]:
    """Group the 120 orderings by formal theta1; returns six (value, orderings)."""
    classes: dict[frozenset, list[tuple[int, ...]]] = {}
    for perm in itertools.permutations(range(5)):
        classes.setdefault(_theta_key(perm), []).append(perm)
    out = []
    for perms in classes.values():
        out.append((theta1([roots[i] for i in perms[0]]), perms))
    return out


def find_theta_ordering(rs: RootSet, target: int, tol: Tolerances = DEFAULT_TOLERANCES) -> ThetaOrdering:
    """Order the roots so that theta1 equals the integer ``target``.

    All 120 orderings are scanned. Orderings fall into six classes with a
    common theta value; exactly one class may lie within tolerance.
    The returned ordering is the lexicographically first of its class, with
    roots indexed as in ``rs``.
    """
    roots = rs.roots
    bound = tol.theta * max(1, abs(target))
    classes = theta_classes(roots)
    scored = sorted(((abs(v - target), v, perms) for v, perms in classes), key=lambda t: t[0])
    best_gap, best_val, best_perms = scored[0]
    if best_gap >= bound:
        raise NumericAmbiguityError(
            f"no ordering: closest theta1 {best_val:.12g} is {best_gap:.3g} from {target}"
        )
    if len(scored) > 1 and scored[1][0] < bound:
        raise NumericAmbiguityError(
            f"ambiguous ordering: theta values {best_val:.12g} and {scored[1][1]:.12g} "
            f"both within {bound:.3g} of {target}"
        )
    count = sum(
        1
        for perm in itertools.permutations(range(5))
        if abs(theta1([roots[i] for i in perm]) - target) < bound
    )
    perm = min(best_perms)
    return ThetaOrdering(
        perm=perm,
        theta_value=theta1([roots[i] for i in perm]),
        target=target,
        mismatch=best_gap,
        matching_orderings=count,
        theta_values=tuple(v for v, _ in classes),
        candidates=tuple(sorted(best_perms)),
    )


@dataclass(frozen=True)
class SigmaTest:
    ordering: ThetaOrdering
    sigma1: complex
    sigma2: complex
    sigma1_integer: int | None


def sigma_test(rs: RootSet, ordering: ThetaOrdering, tol: Tolerances = DEFAULT_TOLERANCES) -> SigmaTest:
    """Decide whether sigma1 is an integer for a usable ordering.

    Within the matched class the orderings give up to four sigma1 values in
    two conjugate pairs (sigma1, sigma2). A pair whose members coincide
    numerically is rational whatever the group, so it says nothing; the
    first ordering whose pair is separated is used. If no such ordering
    exists the question is undecidable at this precision.
    """
    roots = rs.roots
    cands = ordering.candidates or (ordering.perm,)
    for perm in cands:
        r = [roots[i] for i in perm]
        s1, s2 = sigma1(r), sigma2(r)
        scale = max(1.0, abs(s1), abs(s2))
        if abs(s1 - s2) <= 2 * tol.sigma * scale:
            continue
        total, prod = s1 + s2, s1 * s2
        if (
            is_near_integer(total, tol.sigma * max(1.0, abs(total))) is None
            or is_near_integer(prod, tol.sigma * max(1.0, abs(prod))) is None
        ):
            raise NumericAmbiguityError(
                f"sigma1 + sigma2 = {total:.12g} and sigma1 * sigma2 = {prod:.12g} "
                "should both be integers; roots are not accurate enough"
            )
        chosen = replace(ordering, perm=perm, theta_value=theta1(r))
        return SigmaTest(chosen, s1, s2, is_near_integer(s1, tol.sigma))
    raise NumericAmbiguityError(
        "every ordering gives sigma1 == sigma2 numerically; cannot separate C5 from D10"
    )


def is_near_integer(z: complex, tol: float) -> int | None:
    """``round(z.real)`` if ``z`` lies within ``tol`` of that integer, else None."""
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    k = round(z.real)
    if abs(z.imag) < tol and abs(z.real - k) < tol:
        return int(k)
    return None
