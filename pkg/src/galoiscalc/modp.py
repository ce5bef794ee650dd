"""Polynomial arithmetic over the prime field GF(p), enough for distinct-degree splitting.

Polynomials are lists of ints in [0, p), lowest degree first, with no
trailing zeros.
"""

from __future__ import annotations


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(coeffs, p: int) -> list[int]:
    return _trim([c % p for c in coeffs])


def sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def divmod_(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv % p
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = (r[k + j] - c * y) % p
    return _trim(q), _trim(r[:db])


def mod(a: list[int], b: list[int], p: int) -> list[int]:
    return divmod_(a, b, p)[1]


def monic(a: list[int], p: int) -> list[int]:
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def derivative(a: list[int], p: int) -> list[int]:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = mod(base, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


def is_squarefree(f: list[int], p: int) -> bool:
    d = derivative(f, p)
    if not d:
        return False
    return len(gcd(f, d, p)) == 1


def distinct_degree_degrees(f: list[int], p: int) -> list[int]:
    """Degrees of the irreducible factors of a monic squarefree ``f`` mod ``p``."""
    f = monic(f, p)
    degrees: list[int] = []
    x = [0, 1]
    h = x
    k = 0
    while len(f) - 1 >= 2 * (k + 1):
        k += 1
        h = powmod(h, p, f, p)  # x^(p^k) mod f
        g = gcd(f, sub(h, x, p), p)
        dg = len(g) - 1
        if dg > 0:
            degrees.extend([k] * (dg // k))
            f = divmod_(f, g, p)[0]
            h = mod(h, f, p)
    if len(f) - 1 > 0:
        degrees.append(len(f) - 1)
    return sorted(degrees, reverse=True)


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]
