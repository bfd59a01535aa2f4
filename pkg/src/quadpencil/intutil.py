"""Integer helpers: primality, factorization, square and squarefree parts.

Everything here is exact; inputs are Python ints (arbitrary precision) and
Fractions where noted.
"""

from fractions import Fraction
from math import gcd, isqrt
import random

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # this base set is proven sufficient below 3,317,044,064,679,887,385,961,981
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = max(n + 1, 2)
    if k > 2 and k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 1 if k == 2 else 2
    return k


def primes_up_to(n: int) -> list:
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, n + 1) if sieve[i]]


def _pollard_rho(n: int, rng: random.Random) -> int:
    # Brent's cycle variant; n composite, odd, not a prime power of interest
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def factorint(n: int) -> dict:
    """Prime factorization of |n| as {prime: exponent}; ignores the sign.

    factorint(0) raises, factorint(+-1) is {}.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out = {}
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # trial division a bit further before falling back to rho
    p = 41
    while p * p <= n and p < 10_000:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 2
    if n == 1:
        return out
    rng = random.Random(0xC0FFEE ^ n)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack.extend([r, r])
            continue
        d = _pollard_rho(m, rng)
        stack.extend([d, m // d])
    return out


def squarefree_part(a) -> int:
    """Squarefree integer s with a = s * (square); sign of s = sign of a.

    Accepts ints and Fractions (a and a*den^2 share a square class).
    """
    if isinstance(a, Fraction):
        if a == 0:
            return 0
        a = a.numerator * a.denominator
    if a == 0:
        return 0
    s = -1 if a < 0 else 1
    for p, e in factorint(a).items():
        if e % 2:
            s *= p
    return s


def is_square_rational(a) -> bool:
    """True when a (int or Fraction) is the square of a rational."""
    a = Fraction(a)
    if a < 0:
        return False
    nr = isqrt(a.numerator)
    dr = isqrt(a.denominator)
    return nr * nr == a.numerator and dr * dr == a.denominator


def rational_sqrt(a) -> Fraction:
    """Positive square root of a rational square; raises if not a square."""
    a = Fraction(a)
    if not is_square_rational(a):
        raise ValueError("%s is not a rational square" % a)
    return Fraction(isqrt(a.numerator), isqrt(a.denominator))


def valuation(a, p: int):
    """(v, u) with a = p^v * u and u a p-unit; a a nonzero int or Fraction."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("valuation of 0")
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def divisors(n: int) -> list:
    """Sorted positive divisors of |n|, n != 0."""
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)
