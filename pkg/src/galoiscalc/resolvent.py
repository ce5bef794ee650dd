"""Closed-form discriminants and resolvents for degrees 3, 4 and 5.

Argument names follow the monic forms
    x^3 + a x^2 + b x + c
    x^4 + a x^3 + b x^2 + c x + d
    x^5 + p x^3 + q x^2 + r x + s      (depressed quintic)
and, for the trinomial shortcuts, x^n + p x + q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import IntPoly


@dataclass(frozen=True)
class QuarticAux:
    delta: int
    r3: IntPoly


@dataclass(frozen=True)
class QuinticAux:
    delta: int
    r6: IntPoly


def disc_cubic(a: int, b: int, c: int) -> int:
    return a*a*b*b - 4*a**3*c - 4*b**3 + 18*a*b*c - 27*c*c


def disc_quartic(a: int, b: int, c: int, d: int) -> int:
    return (
        a**2*b**2*c**2 - 4*a**3*c**3 - 4*a**2*b**3*d + 18*a**3*b*c*d
        - 27*a**4*d**2 - 4*b**3*c**2 + 18*a*b*c**3 + 16*b**4*d
        - 80*a*b**2*c*d - 6*a**2*c**2*d + 144*a**2*b*d**2 - 27*c**4
        + 144*b*c**2*d - 128*b**2*d**2 - 192*a*c*d**2 + 256*d**3
    )


def disc_quintic(p: int, q: int, r: int, s: int) -> int:
    """Discriminant of x^5 + p x^3 + q x^2 + r x + s."""
    return (
        -4*p**3*q**2*r**2 + 16*p**4*r**3 + 16*p**3*q**3*s - 72*p**4*q*r*s
        + 108*p**5*s**2 - 27*q**4*r**2 + 144*p*q**2*r**3
        - 128*p**2*r**4 + 108*q**5*s - 630*p*q**3*r*s + 560*p**2*q*r**2*s
        + 825*p**2*q**2*s**2 - 900*p**3*r*s**2
        + 256*r**5 - 1600*q*r**3*s + 2250*q**2*r*s**2 + 2000*p*r**2*s**2
        - 3750*p*q*s**3 + 3125*s**4
    )


def resolvent_cubic(a: int, b: int, c: int, d: int) -> IntPoly:
    """Cubic whose roots are r1 r2 + r3 r4, r1 r3 + r2 r4, r1 r4 + r2 r3."""
    A = -b
    B = a*c - 4*d
    C = -(a*a*d + c*c - 4*b*d)
    return IntPoly((C, B, A, 1))


def resolvent_sextic(p: int, q: int, r: int, s: int) -> IntPoly:
    """Sextic resolvent of x^5 + p x^3 + q x^2 + r x + s.

    Its roots are theta1 (see :func:`galoiscalc.numeric.theta1`) and the five
    other values theta1 takes under permutations of the roots.
    """
    A = 8*r
    B = 2*p*q**2 - 6*p**2*r + 40*r**2 - 50*q*s
    C = (
        -2*q**4 + 21*p*q**2*r - 40*p**2*r**2 + 160*r**3 - 15*p**2*q*s
        - 400*q*r*s + 125*p*s**2
    )
    D = (
        p**2*q**4 - 6*p**3*q**2*r - 8*q**4*r + 9*p**4*r**2 + 76*p*q**2*r**2
        - 136*p**2*r**3 + 400*r**4
        - 50*p*q**3*s + 90*p**2*q*r*s - 1400*q*r**2*s + 625*q**2*s**2
        + 500*p*r*s**2
    )
    E = (
        -2*p*q**6 + 19*p**2*q**4*r - 51*p**3*q**2*r**2 + 3*q**4*r**2
        + 32*p**4*r**3 + 76*p*q**2*r**3
        - 256*p**2*r**4 + 512*r**5 - 31*p**3*q**3*s - 58*q**5*s
        + 117*p**4*q*r*s + 105*p*q**3*r*s
        + 260*p**2*q*r**2*s - 2400*q*r**3*s - 108*p**5*s**2
        - 325*p**2*q**2*s**2 + 525*p**3*r*s**2
        + 2750*q**2*r*s**2 - 500*p*r**2*s**2 + 625*p*q*s**3 - 3125*s**4
    )
    F = (
        q**8 - 13*p*q**6*r + p**5*q**2*r**2 + 65*p**2*q**4*r**2
        - 4*p**6*r**3 - 128*p**3*q**2*r**3 + 17*q**4*r**3  # -128, checked against the product over theta values
        + 48*p**4*r**4 - 16*p*q**2*r**4 - 192*p**2*r**5 + 256*r**6
        - 4*p**5*q**3*s - 12*p**2*q**5*s
        + 18*p**6*q*r*s + 12*p**3*q**3*r*s - 124*q**5*r*s
        + 196*p**4*q*r**2*s + 590*p*q**3*r**2*s
        - 160*p**2*q*r**3*s - 1600*q*r**4*s - 27*p**7*s**2
        - 150*p**4*q**2*s**2 - 125*p*q**4*s**2
        - 99*p**5*r*s**2 - 725*p**2*q**2*r*s**2 + 1200*p**3*r**2*s**2
        + 3250*q**2*r**2*s**2
        - 2000*p*r**3*s**2 - 1250*p*q*r*s**3 + 3125*p**2*s**4 - 9375*r*s**4
    )
    return IntPoly((F, E, D, C, B, A, 1))


def kappe_warren_products(a: int, b: int, d: int, r: int, delta: int) -> tuple[int, int]:
    """Discriminants of x^2 + a x + (b - r) and x^2 - r x + d, each times delta.

    ``r`` is an integer root of the resolvent cubic. The quartic's group is
    C4 when both products are squares and D8 otherwise.
    """
    return (a*a - 4*(b - r)) * delta, (r*r - 4*d) * delta


def quartic_aux(f: IntPoly) -> QuarticAux:
    d, c, b, a = f[0], f[1], f[2], f[3]
    return QuarticAux(disc_quartic(a, b, c, d), resolvent_cubic(a, b, c, d))


def quintic_aux(f: IntPoly) -> QuinticAux:
    if f[4] != 0:
        raise ValueError("quintic must be depressed (zero x^4 coefficient)")
    s, r, q, p = f[0], f[1], f[2], f[3]
    return QuinticAux(disc_quintic(p, q, r, s), resolvent_sextic(p, q, r, s))


# Shortcuts for x^n + p x + q.

def trinomial_disc(n: int, p: int, q: int) -> int:
    if n == 3:
        return -4*p**3 - 27*q**2
    if n == 4:
        return -27*p**4 + 256*q**3
    if n == 5:
        return 256*p**5 + 3125*q**4
    raise ValueError("trinomial shortcuts exist for n = 3, 4, 5")


def trinomial_resolvent_cubic(p: int, q: int) -> IntPoly:
    """Resolvent cubic of x^4 + p x + q, i.e. x^3 - 4q x - p^2."""
    return IntPoly((-p*p, -4*q, 0, 1))


def trinomial_resolvent_sextic(p: int, q: int) -> IntPoly:
    """Resolvent sextic of x^5 + p x + q."""
    return IntPoly((
        256*p**6 - 9375*p*q**4,
        512*p**5 - 3125*q**4,
        400*p**4,
        160*p**3,
        40*p**2,
        8*p,
        1,
    ))


def is_trinomial(f: IntPoly) -> bool:
    """True for x^n + p x + q with n in 3..5."""
    return 3 <= f.degree <= 5 and f.is_monic() and all(f[i] == 0 for i in range(2, f.degree))
