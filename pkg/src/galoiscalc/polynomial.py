"""Dense univariate polynomials over Z and Q.

Coefficients are stored lowest degree first: ``coeffs[i]`` multiplies ``x**i``.
Everything here is exact except :func:`eval_complex`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PrecisionError


def _trim(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = _trim(coeffs)
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_high(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def high(self) -> list[int]:
        """Coefficients highest degree first."""
        return list(reversed(self.coeffs))

    def height(self) -> int:
        """Largest absolute coefficient."""
        return max((abs(c) for c in self.coeffs), default=0)

    def __call__(self, x):
        return eval_exact(self, x)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntPoly({render(self)!r})"


@dataclass(frozen=True)
class RatPoly:
    """Polynomial with exact rational coefficients (lowest degree first)."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in coeffs))

    @classmethod
    def from_high(cls, coeffs: Iterable) -> RatPoly:
        return cls(reversed(list(coeffs)))

    @classmethod
    def from_int(cls, p: IntPoly) -> RatPoly:
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __str__(self) -> str:
        return render(self)


def eval_exact(p: IntPoly, x: int) -> int:
    """Evaluate ``p`` at the integer ``x`` by Horner's rule."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def eval_complex(p: IntPoly, z: complex) -> complex:
    """Horner evaluation in double precision.

    Raises PrecisionError if a coefficient does not fit in a double.
    """
    acc = 0j
    for c in reversed(p.coeffs):
        try:
            fc = float(c)
        except OverflowError as exc:
            raise PrecisionError(f"coefficient {c} exceeds double range") from exc
        acc = acc * z + fc
    if not (math.isfinite(acc.real) and math.isfinite(acc.imag)):
        raise PrecisionError("polynomial value overflowed double precision")
    return acc


def derivative(p: IntPoly) -> IntPoly:
    return IntPoly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def divmod_poly(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Exact division of ``f`` by a monic ``g`` over Z."""
    if not g.is_monic():
        raise ValueError("divisor must be monic")
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return IntPoly(()), f
    quot = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg]
        quot[k] = c
        if c:
            for j, gc in enumerate(g.coeffs):
                rem[k + j] -= c * gc
    return IntPoly(quot), IntPoly(rem[:dg])


def _min_scale(denoms: Sequence[tuple[int, int]]) -> int:
    """Least lam > 0 with den | lam**k for every (den, k) pair."""
    need: dict[int, int] = {}
    for den, k in denoms:
        for prime, e in _factor_small(den).items():
            need[prime] = max(need.get(prime, 0), -(-e // k))
    lam = 1
    for prime, e in need.items():
        lam *= prime**e
    return lam


def _factor_small(n: int) -> dict[int, int]:
    # Denominators typed by people are small; plain trial division is enough.
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def normalize_to_monic_integral(g: RatPoly) -> tuple[IntPoly, int]:
    """Return ``(f, lam)`` with ``f(x) = lam**n * h(x / lam)`` monic in Z[x].

    ``h`` is ``g`` divided by its leading coefficient, so the roots of ``f``
    are ``lam`` times the roots of ``g``. ``lam`` is the least positive
    integer that makes every coefficient integral.
    """
    if g.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    n = g.degree
    monic = [c / g.lead for c in g.coeffs]
    lam = _min_scale([(c.denominator, n - i) for i, c in enumerate(monic[:-1]) if c.denominator > 1])
    out = []
    for i, c in enumerate(monic):
        v = c * lam ** (n - i)
        assert v.denominator == 1
        out.append(v.numerator)
    return IntPoly(out), lam


def taylor_shift(p: IntPoly, k: int) -> IntPoly:
    """Return p(x + k)."""
    out = [0] * len(p.coeffs)
    for i, c in enumerate(p.coeffs):
        # c * (x + k)**i
        for j in range(i + 1):
            out[j] += c * math.comb(i, j) * k ** (i - j)
    return IntPoly(out)


def depress_quintic(g: IntPoly) -> tuple[IntPoly, int]:
    """Remove the x**4 term of a monic quintic.

    Returns ``(f, a)`` where ``f(x) = 5**5 * g((x - a) / 5)`` and ``a`` is the
    x**4 coefficient of ``g``; the roots of ``f`` are ``5*rho + a``. When
    ``a == 0`` the input comes back untouched, without the 5**5 scaling.
    """
    if g.degree != 5 or not g.is_monic():
        raise ValueError("depress_quintic needs a monic quintic")
    a = g[4]
    if a == 0:
        return g, 0
    out = [0] * 6
    for k, c in enumerate(g.coeffs):
        scale = c * 5 ** (5 - k)
        # (x - a)**k
        for j in range(k + 1):
            out[j] += scale * math.comb(k, j) * (-a) ** (k - j)
    f = IntPoly(out)
    assert f[4] == 0 and f.is_monic()
    return f, a


def undepress_quintic(f: IntPoly, a: int) -> IntPoly:
    """Inverse of :func:`depress_quintic`: recover g from (f, a)."""
    if a == 0:
        return f
    # g(y) = f(5y + a) / 5**5
    shifted = taylor_shift(f, a)
    out = []
    for i, c in enumerate(shifted.coeffs):
        num = c * 5**i
        q, r = divmod(num, 5**5)
        if r:
            raise ValueError("not the image of an integral quintic")
        out.append(q)
    return IntPoly(out)


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def render(p, var: str = "x") -> str:
    """Pretty-print as ``x^5 - 5x + 12``; rational coefficients as ``3/2x``."""
    terms = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = _fmt_coeff(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
