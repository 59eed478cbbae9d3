"""Exact arithmetic in the maximal order O(d) of Q(sqrt(d)).

Elements are (x + y*sqrt(d))/den with den in {1, 2}; den = 2 only occurs for
d = 1 (mod 4) with x = y (mod 2).  All operations are exact integer
arithmetic; embeddings are handled through scaled integers, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import Factorization, _iroot, factorize, is_squarefree, perfect_cube_root


def _check_d(d: int) -> None:
    if d <= 1 or not is_squarefree(d):
        raise ValueError(f"d must be squarefree and > 1, got {d}")


@dataclass(frozen=True)
class QuadElem:
    """(x + y*sqrt(d))/den in the maximal order O(d), canonical form."""

    d: int
    x: int
    y: int
    den: int = 1

    def __post_init__(self):
        if self.den not in (1, 2):
            raise ValueError(f"den must be 1 or 2, got {self.den}")
        if self.den == 2:
            if self.d % 4 != 1:
                raise ValueError(f"den=2 requires d = 1 (mod 4), got d={self.d}")
            if (self.x - self.y) % 2 != 0:
                raise ValueError("den=2 requires x = y (mod 2)")
            if self.x % 2 == 0:
                # both even: reduce to den 1
                object.__setattr__(self, "x", self.x // 2)
                object.__setattr__(self, "y", self.y // 2)
                object.__setattr__(self, "den", 1)

    def __str__(self) -> str:
        s = f"{self.x}{self.y:+}*sqrt({self.d})"
        return s if self.den == 1 else f"({s})/2"

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def conj(self) -> "QuadElem":
        return QuadElem(self.d, self.x, -self.y, self.den)

    def norm(self) -> int:
        n4 = self.x * self.x - self.d * self.y * self.y
        if self.den == 2:
            assert n4 % 4 == 0
            return n4 // 4
        return n4

    def trace2(self) -> int:
        """2 * trace(u) ... always integral; equals u + u' times den-free 2."""
        return 2 * self.x if self.den == 1 else self.x

    def __neg__(self) -> "QuadElem":
        return QuadElem(self.d, -self.x, -self.y, self.den)

    def __add__(self, other: "QuadElem") -> "QuadElem":
        self._same_field(other)
        if self.den == other.den:
            if self.den == 1:
                return QuadElem(self.d, self.x + other.x, self.y + other.y, 1)
            return QuadElem(self.d, self.x + other.x, self.y + other.y, 2)
        a, b = (self, other) if self.den == 2 else (other, self)
        return QuadElem(self.d, a.x + 2 * b.x, a.y + 2 * b.y, 2)

    def __sub__(self, other: "QuadElem") -> "QuadElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadElem(self.d, self.x * other, self.y * other, self.den)
        self._same_field(other)
        x = self.x * other.x + self.d * self.y * other.y
        y = self.x * other.y + self.y * other.x
        den = self.den * other.den
        if den == 4:
            # products of half-integral elements land back in O(d)
            assert x % 2 == 0 and y % 2 == 0
            x, y, den = x // 2, y // 2, 2
        return QuadElem(self.d, x, y, den)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadElem":
        if k < 0:
            raise ValueError("negative powers are only defined for units")
        result = QuadElem(self.d, 1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> "QuadElem":
        n = self.norm()
        if n not in (1, -1):
            raise ValueError("unit_inverse needs |norm| = 1")
        return self.conj() * n

    def sign(self) -> int:
        """Sign of the real embedding with sqrt(d) > 0."""
        x, y = self.x, self.y
        if x == 0 and y == 0:
            return 0
        if x >= 0 and y >= 0:
            return 1
        if x <= 0 and y <= 0:
            return -1
        big = x * x - self.d * y * y  # sign(x + y*sqrt(d)) = sign(x^2 - d y^2) when x > 0 > y
        return (1 if big > 0 else -1) if x > 0 else (1 if big < 0 else -1)

    def is_greater_one(self) -> bool:
        return (self - QuadElem(self.d, 1, 0)).sign() > 0

    def _same_field(self, other: "QuadElem") -> None:
        if self.d != other.d:
            raise ValueError(f"mixed fields: d={self.d} vs d={other.d}")


def qmul(u: QuadElem, v: QuadElem) -> QuadElem:
    return u * v


def qconj(u: QuadElem) -> QuadElem:
    return u.conj()


def qnorm(u: QuadElem) -> int:
    return u.norm()


def qpow(u: QuadElem, k: int) -> QuadElem:
    return u**k


@dataclass(frozen=True)
class CfExpansion:
    """Continued fraction of (p0 + sqrt(d))/q0 up to the first repeated state."""

    d: int
    p0: int
    q0: int
    quotients: tuple[int, ...]
    repeat_start: int
    period: int


@dataclass(frozen=True)
class FundUnit:
    """Fundamental unit elem = a + b*sqrt(d) > 1 with norm epsilon."""

    elem: QuadElem
    epsilon: int

    @property
    def d(self) -> int:
        return self.elem.d


def cf_expand(d: int) -> CfExpansion:
    """Expand sqrt(d) (d = 2, 3 mod 4) or (1 + sqrt(d))/2 (d = 1 mod 4)."""
    _check_d(d)
    p0, q0 = (1, 2) if d % 4 == 1 else (0, 1)
    s = isqrt(d)
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    p, q = p0, q0
    while (p, q) not in seen:
        seen[(p, q)] = len(quotients)
        a = (p + s) // q
        quotients.append(a)
        p = a * q - p
        q = (d - p * p) // q
        assert q > 0
    start = seen[(p, q)]
    return CfExpansion(d, p0, q0, tuple(quotients), start, len(quotients) - start)


@lru_cache(maxsize=None)
def fundamental_unit(d: int) -> FundUnit:
    """Fundamental unit of O(d) from one period of the continued fraction."""
    cf = cf_expand(d)
    # Convergents p_k/q_k with p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
    ps = [0, 1]
    qs = [1, 0]
    for a in cf.quotients:
        ps.append(a * ps[-1] + ps[-2])
        qs.append(a * qs[-1] + qs[-2])

    def conv(k: int) -> tuple[int, int]:
        return ps[k + 2], qs[k + 2]

    i, j = cf.repeat_start, cf.repeat_start + cf.period
    # omega_i = omega_j forces a fixed Moebius transform of omega_0=(p0+sqrt d)/q0;
    # its matrix yields a unit C*omega_0 + D of the multiplier ring of [1, omega_0].
    pj1, qj1 = conv(j - 1)
    pj2, qj2 = conv(j - 2)
    pi1, qi1 = conv(i - 1)
    pi2, qi2 = conv(i - 2)
    c = qj1 * qi2 - qj2 * qi1
    dd = pi1 * qj2 - pi2 * qj1
    if d % 4 == 1:
        unit = QuadElem(d, c + 2 * dd, c, 2)
    else:
        unit = QuadElem(d, dd, c, 1)
    eps = unit.norm()
    assert eps in (1, -1)
    if not unit.is_greater_one():
        for cand in (-unit, unit.unit_inverse(), -unit.unit_inverse()):
            if cand.is_greater_one():
                unit = cand
                break
    assert unit.is_greater_one() and unit.x > 0 and unit.y > 0
    return FundUnit(unit, eps)


def half_residue(u: QuadElem, modulus: int) -> tuple[int, int]:
    """Coordinates of u read in Z/modulus via the inverse of the denominator."""
    if modulus % 2 == 0:
        raise ValueError("half_residue needs an odd modulus")
    inv = pow(u.den, -1, modulus)
    return (u.x * inv % modulus, u.y * inv % modulus)


def _embedding_bounds(u: QuadElem, conjugate: bool, prec: int) -> tuple[int, int]:
    """[lo, hi] with lo <= 2**prec * den^2 * embedding(u) <= hi."""
    scale = 1 << prec
    w = isqrt(u.d * scale * scale)  # w <= sqrt(d)*scale < w+1
    y = -u.y if conjugate else u.y
    xs = u.x * scale * u.den
    if y >= 0:
        return xs + y * w * u.den, xs + y * (w + 1) * u.den
    return xs + y * (w + 1) * u.den, xs + y * w * u.den


def _icbrt_floor(n: int) -> int:
    """Floor cube root for any sign (floor(-1.5) = -2 style)."""
    if n >= 0:
        return _iroot(n, 3)
    r = _iroot(-n, 3)
    return -r if r * r * r == -n else -r - 1


def _cbrt_bounds(lo: int, hi: int, prec: int) -> tuple[int, int]:
    """Bounds on 2**prec * cbrt(v / 2**prec) given lo <= v <= hi."""
    scale2 = 1 << (2 * prec)
    a = _icbrt_floor(lo * scale2)
    b = _icbrt_floor(hi * scale2) + 1
    return a, b


def is_cube_in_order(u: QuadElem) -> QuadElem | None:
    """The rho in O(d) with rho**3 == u, if one exists.

    Real cube roots of both embeddings are bracketed with scaled-integer
    arithmetic; candidate coordinates are rounded and verified by exact
    cubing.  Precision doubles until the brackets isolate at most one
    candidate per admissible denominator.
    """
    if u.is_zero():
        raise ValueError("is_cube_in_order needs u != 0")
    if perfect_cube_root(u.norm()) is None:
        return None
    dens = (1, 2) if u.d % 4 == 1 else (1,)
    prec = 80
    while True:
        # r1, r2 bracket cbrt of den^2*(x +- y sqrt d) at scale 2**prec
        lo1, hi1 = _embedding_bounds(u, False, prec)
        lo2, hi2 = _embedding_bounds(u, True, prec)
        c1lo, c1hi = _cbrt_bounds(lo1 * u.den, hi1 * u.den, prec)
        c2lo, c2hi = _cbrt_bounds(lo2 * u.den, hi2 * u.den, prec)
        scale = 1 << prec
        w = isqrt(u.d * scale * scale)
        decided = True
        for den in dens:
            # rho = (g + h sqrt d)/den: g = den*(r1+r2)/2, h = den*(r1-r2)/(2 sqrt d)
            glo, ghi = den * (c1lo + c2lo), den * (c1hi + c2hi)
            hlo, hhi = den * (c1lo - c2hi), den * (c1hi - c2lo)
            g_candidates = range((glo + scale) // (2 * scale), ghi // (2 * scale) + 1)
            h_candidates = range((hlo + (w + 1)) // (2 * (w + 1)) - 1, hhi // (2 * w) + 2)
            if len(g_candidates) > 2 or len(h_candidates) > 4:
                decided = False
                break
            for g in g_candidates:
                for h in h_candidates:
                    if den == 2 and (g - h) % 2 != 0:
                        continue
                    try:
                        rho = QuadElem(u.d, g, h, den)
                    except ValueError:
                        continue
                    if rho**3 == u:
                        return rho
        if decided:
            return None
        prec *= 2


def rational_prime_content(u: QuadElem) -> Factorization:
    """For each rational prime p, the largest k with p**k dividing u in O(d).

    In canonical form an element with den = 2 is not divisible by 2; for the
    rest, p divides u exactly when p divides both coordinates.
    """
    if u.is_zero():
        raise ValueError("rational_prime_content needs u != 0")
    g = gcd(u.x, u.y)
    if g == 0:
        g = abs(u.x or u.y)
    if g <= 1:
        return Factorization(1, ())
    f = factorize(g)
    if u.den == 2:
        # canonical den=2 elements have odd coordinates, so 2 never divides
        assert f.exponent(2) == 0
    return Factorization(1, f.factors)


def c_of(u: QuadElem) -> int:
    """Product of the distinct rational primes dividing u but not d."""
    c = 1
    for p in rational_prime_content(u).primes():
        if u.d % p != 0:
            c *= p
    return c


def odd_part(c: int) -> int:
    if c <= 0:
        raise ValueError(f"odd_part needs a positive integer, got {c}")
    while c % 2 == 0:
        c //= 2
    return c
