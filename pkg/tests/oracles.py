"""Independent reference computations used only by the tests.

None of these share code paths with the library routines they check.
"""

from __future__ import annotations

import itertools

import numpy as np


def sylvester_resultant(f: list[int], g: list[int]) -> int:
    """Resultant of two integer polynomials (highest degree first), exact.

    Determinant of the Sylvester matrix by fraction-free Bareiss elimination.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(f) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(g) + [0] * (size - n - 1 - i))
    a = [r[:] for r in rows]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def resultant_discriminant(high: list[int]) -> int:
    """Discriminant of a monic integer polynomial via Res(f, f')."""
    n = len(high) - 1
    deriv = [c * (n - i) for i, c in enumerate(high[:-1])]
    res = sylvester_resultant(high, deriv)
    return (-1) ** (n * (n - 1) // 2) * res


def numeric_discriminant(high: list[int]) -> complex:
    roots = np.roots(np.array(high, dtype=float))
    out = 1 + 0j
    for a, b in itertools.combinations(roots, 2):
        out *= (a - b) ** 2
    return out


def numpy_roots(high: list[int]) -> np.ndarray:
    return np.roots(np.array(high, dtype=float))


def horner_free_eval(coeffs_low: list[int], x: int) -> int:
    """Evaluate by repeated addition of monomials, no Horner."""
    total = 0
    for i, c in enumerate(coeffs_low):
        term = c
        for _ in range(i):
            term = term * x
        total = total + term
    return total


def fujiwara_bound(coeffs_low: list[int]) -> int:
    """Integer B with every root of the monic polynomial in |z| <= B."""
    n = len(coeffs_low) - 1
    m = 0
    for j in range(1, n + 1):
        c = abs(coeffs_low[n - j])
        k = int(round(c ** (1.0 / j))) if c else 0
        while k**j < c:
            k += 1
        m = max(m, k)
    return 2 * m


def brute_integer_roots(coeffs_low: list[int], bound: str = "cauchy") -> list[int]:
    """Scan every integer inside a root bound (Cauchy by default)."""
    if bound == "fujiwara":
        bound = fujiwara_bound(coeffs_low)
    else:
        bound = 1 + max(abs(c) for c in coeffs_low[:-1]) if len(coeffs_low) > 1 else 0
    return [k for k in range(-bound, bound + 1) if horner_free_eval(coeffs_low, k) == 0]


def _poly_rem_grid(f_high: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Remainders of f mod x^2 + u x + v for arrays u, v; returns shape (..., 2)."""
    rem = [np.full(u.shape, c, dtype=np.int64) for c in f_high]
    n = len(f_high) - 1
    for k in range(n - 1):
        lead = rem[k]
        rem[k + 1] = rem[k + 1] - lead * u
        rem[k + 2] = rem[k + 2] - lead * v
    return np.stack([rem[-2], rem[-1]], axis=-1)


def brute_has_factor(coeffs_low: list[int]) -> bool:
    """Exhaustive search for a monic factor of degree 1 or 2.

    Coefficient ranges come from root bounds: every root of f lies in
    |z| <= B = 1 + max|c|, so a linear factor has |k| <= B and a quadratic
    factor x^2 + u x + v has |u| <= 2B and |v| <= B^2.
    """
    n = len(coeffs_low) - 1
    bound = 1 + max(abs(c) for c in coeffs_low[:-1])
    if n <= 1:
        return False
    if any(horner_free_eval(coeffs_low, k) == 0 for k in range(-bound, bound + 1)):
        return True
    if n < 4:
        return False
    high = list(reversed(coeffs_low))
    us = np.arange(-2 * bound, 2 * bound + 1, dtype=np.int64)
    vs = np.arange(-bound * bound, bound * bound + 1, dtype=np.int64)
    U, V = np.meshgrid(us, vs)
    rem = _poly_rem_grid(high, U, V)
    return bool(np.any((rem[..., 0] == 0) & (rem[..., 1] == 0)))


def poly_from_roots(roots) -> list[int]:
    """Integer coefficients (highest first) of prod (x - r) for integer roots."""
    out = [1]
    for r in roots:
        out = [a - r * b for a, b in zip(out + [0], [0] + out)]
    return out


def _rem_mod_p(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by monic b over GF(p), lowest degree first."""
    a = [c % p for c in a]
    q = []
    while len(a) >= len(b):
        c = a[-1]
        q.append(c)
        off = len(a) - len(b)
        for i, bc in enumerate(b):
            a[off + i] = (a[off + i] - c * bc) % p
        a.pop()
    return q[::-1], a


def brute_factor_degrees_mod_p(coeffs_low: list[int], p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a monic f mod p by trial division.

    Every monic polynomial of degree d is tried in turn, smallest d first, so
    the first divisor found at each degree is irreducible.
    """
    f = [c % p for c in coeffs_low]
    out = []
    d = 1
    while len(f) > 1:
        for tail in itertools.product(range(p), repeat=d):
            g = list(tail) + [1]
            q, r = _rem_mod_p(f, g, p)
            if not any(r):
                f = q
                out.append(d)
                break
        else:
            d += 1
    return tuple(sorted(out))
