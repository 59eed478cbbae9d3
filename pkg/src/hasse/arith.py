"""Arbitrary-precision integer number theory shared by the other modules.

Everything here is exact: no floating point, no probabilistic answers below
2**64, and a seedable RNG for the (documented) probabilistic regime above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

# Deterministic Miller-Rabin witnesses; sufficient for all n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 10**6

# Rounds of random-base Miller-Rabin above 2**64 (error < 4**-64 < 2**-128).
_MR_RANDOM_ROUNDS = 64

_DEFAULT_SEED = 0x5EED
_rng = random.Random(_DEFAULT_SEED)


def set_seed(seed: int) -> None:
    """Reseed the RNG used for primality rounds above 2**64."""
    _rng.seed(seed)


def _mr_round(n: int, a: int) -> bool:
    """One Miller-Rabin round; True means 'possibly prime'."""
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2**64, error < 2**-128 above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 2**64:
        return all(_mr_round(n, a) for a in _MR_WITNESSES)
    if not all(_mr_round(n, a) for a in _MR_WITNESSES):
        return False
    return all(_mr_round(n, _rng.randrange(2, n - 1)) for _ in range(_MR_RANDOM_ROUNDS))


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant).

    Deterministic: walks c = 1, 2, ... so repeated runs agree.
    """
    if n % 2 == 0:
        return 2
    for c in range(1, 10**6):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"pollard rho failed on {n}")


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0 (integer Newton iteration)."""
    if n < 2:
        return n
    r = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        t = ((k - 1) * r + n // r ** (k - 1)) // k
        if t >= r:
            break
        r = t
    while r**k > n:
        r -= 1
    return r


def _perfect_power(n: int) -> tuple[int, int] | None:
    """(base, k) with base**k == n and k >= 2, or None."""
    if n < 4:
        return None
    for k in (2, 3, 5, 7, 11, 13):
        if 2**k > n:
            break
        r = _iroot(n, k)
        if r**k == n:
            return r, k
    return None


def _factor_into(n: int, out: dict[int, int], mult: int) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + mult
        return
    pp = _perfect_power(n)
    if pp is not None:
        _factor_into(pp[0], out, mult * pp[1])
        return
    d = _pollard_brent(n)
    _factor_into(d, out, mult)
    _factor_into(n // d, out, mult)


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization: sign * prod(p**e)."""

    sign: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes increasing

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)


def factorize(n: int) -> Factorization:
    """Full factorization of n != 0: trial division to 10**6, then Pollard rho."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    sign = 1 if n > 0 else -1
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 7
    # 2/4-wheel over 7, 11, 13, ...; bail to rho once candidates are exhausted.
    step = 4
    while p <= _TRIAL_BOUND and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                e += 1
                n //= p
            out[p] = e
            if n > 1 and is_prime(n):
                break
        p += step
        step = 6 - step
    if n > 1:
        _factor_into(n, out, 1)
    return Factorization(sign, tuple(sorted(out.items())))


def is_squarefree(n: int) -> bool:
    """True iff no prime square divides n (n > 1)."""
    if n <= 1:
        raise ValueError(f"is_squarefree needs n > 1, got {n}")
    return factorize(n).max_exponent() == 1


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes of n, with n's sign."""
    f = factorize(n)
    k = f.sign
    for p in f.primes():
        k *= p
    return k


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n); (a/2) is 0 for even a, +1 for a = +-1 (mod 8),
    -1 for a = +-3 (mod 8)."""
    if a == 0 and n == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if n == 0:
        return 1 if a in (1, -1) else 0
    k = 1
    if n < 0:
        n = -n
        if a < 0:
            k = -1
    # strip twos from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v % 2 == 1:
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            k = -k
    a %= n
    # now n odd > 0: Jacobi with reciprocity
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def sqrt_mod(a: int, p: int) -> int | None:
    """Canonical square root of a mod odd prime p (Tonelli-Shanks).

    Returns s with s*s = a (mod p) and 0 <= s <= (p-1)/2, or None for a
    non-residue.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"sqrt_mod needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    if kronecker(a, p) != 1:
        return None
    if p % 4 == 3:
        s = pow(a, (p + 1) // 4, p)
    else:
        # Tonelli-Shanks: p - 1 = q * 2**e with q odd
        q, e = p - 1, 0
        while q % 2 == 0:
            q //= 2
            e += 1
        z = 2
        while kronecker(z, p) != -1:
            z += 1
        m, c, t, s = e, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, s = t * c % p, s * b % p
    return min(s, p - s)


def icbrt(n: int) -> int:
    """Exact signed integer cube root helper: floor for n >= 0, sign-symmetric."""
    if n < 0:
        return -icbrt(-n)
    return _iroot(n, 3)


def perfect_cube_root(n: int) -> int | None:
    """m with m**3 == n, or None. Works for negative n."""
    m = icbrt(n)
    return m if m**3 == n else None


def isqrt_exact(n: int) -> int | None:
    """m >= 0 with m*m == n, or None."""
    if n < 0:
        return None
    m = isqrt(n)
    return m if m * m == n else None
