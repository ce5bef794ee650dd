"""Exact integer predicates: square testing and integer roots of monic polynomials."""

from __future__ import annotations

import math

from .polynomial import IntPoly, derivative, eval_exact

# Above this the divisor scan of the constant term is skipped.
DIVISOR_SCAN_LIMIT = 10**9


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def is_perfect_square(n: int) -> int | None:
    """Return ``k >= 0`` with ``k*k == n``, or None."""
    if n < 0:
        return None
    k = math.isqrt(n)
    return k if k * k == n else None


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n != 0`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rat_gcd(f: list, g: list) -> list:
    from fractions import Fraction

    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while any(b):
        while b and b[-1] == 0:
            b.pop()
        r = a[:]
        while len(r) >= len(b) and any(r):
            if r[-1] == 0:
                r.pop()
                continue
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= q * c
            r.pop()
        a, b = b, r
    return a


def squarefree_part(p: IntPoly) -> IntPoly:
    """Monic ``p / gcd(p, p')`` with the same roots as ``p``, all simple.

    Requires ``p`` monic; the result is integral by Gauss's lemma.
    """
    from fractions import Fraction

    if p.degree < 2:
        return p
    g = _rat_gcd(list(p.coeffs), list(derivative(p).coeffs))
    while g and g[-1] == 0:
        g.pop()
    if len(g) <= 1:
        return p
    g = [c / g[-1] for c in g]
    # exact long division over Q
    rem = [Fraction(c) for c in p.coeffs]
    dg = len(g) - 1
    quot = [Fraction(0)] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg]
        quot[k] = c
        for j, gc in enumerate(g):
            rem[k + j] -= c * gc
    assert not any(rem)
    assert all(c.denominator == 1 for c in quot)
    return IntPoly(int(c) for c in quot)


def _newton_integer(q: IntPoly, dq: IntPoly, k: int, steps: int = 64) -> int:
    # Exact Newton steps rounded to integers; recovers the low digits of
    # large roots that double precision cannot resolve.
    for _ in range(steps):
        v = eval_exact(q, k)
        if v == 0:
            return k
        dv = eval_exact(dq, k)
        if dv == 0:
            return k
        nk = k - _round_div(v, dv)
        if nk == k:
            return k
        k = nk
    return k


def _round_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return (2 * a + b) // (2 * b)


def integer_roots(p: IntPoly) -> list[int]:
    """Sorted distinct integer roots of the monic polynomial ``p``.

    Candidates come from numeric root approximations (each checked at floor,
    ceil and round) and, when the constant term is small, from its divisors.
    Every candidate is accepted only after exact evaluation, so a poor
    approximation can lose a root but never invent one.
    """
    from .numeric import all_roots_raw

    if p.degree < 1 or not p.is_monic():
        raise ValueError("integer_roots needs a monic polynomial of degree >= 1")
    found: set[int] = set()
    while p.degree >= 1 and p[0] == 0:
        found.add(0)
        p = IntPoly(p.coeffs[1:])
    if p.degree < 1:
        return sorted(found)

    q = squarefree_part(p)
    dq = derivative(q)
    cands: set[int] = set()
    if abs(q[0]) <= DIVISOR_SCAN_LIMIT:
        for d in divisors(q[0]):
            cands.update((d, -d))
    if q.degree == 1:
        cands.add(-q[0])
    else:
        for z in all_roots_raw(q):
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                continue
            # a real root can come back with a small imaginary part
            if abs(z.imag) > 0.5 + 1e-6 * abs(z):
                continue
            x = z.real
            cands.update((math.floor(x), math.ceil(x), round(x)))
            cands.add(_newton_integer(q, dq, round(x)))
    for k in cands:
        if eval_exact(q, k) == 0:
            found.add(k)
    return sorted(found)
