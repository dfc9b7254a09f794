"""Elementary number theory: factorization, residue symbols, solvability.

The solvability classifier decides, from q = p**t and n alone, whether
1 + g**2 * n = 0 has a solution g in GF(q).  For q = 3 (mod 4) the answer
is read off the factorization of n: it is solvable exactly when the
primes of n that are 3 (mod 4) carry an odd total exponent.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import GuardConfig, current_guards
from .errors import (
    EvenModulus,
    EvenN,
    FactorizationGuardExceeded,
    NotDivisor,
    NotOddPrime,
    NotPrime,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n must be odd composite
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed + 1, 128
        g = r = q = 1
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
                g = _gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _gcd(abs(x - ys), n)
        if g != n:
            return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((p1, e1), (p2, e2), ...) with p1 < p2 < ..."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p ** e
        return out


def factorize(n: int, guards: GuardConfig | None = None) -> Factorization:
    """Full factorization by trial division plus Pollard rho."""
    guards = current_guards(guards)
    if n < 1:
        raise FactorizationGuardExceeded("factorize needs a positive integer")
    if n > guards.factor_limit:
        raise FactorizationGuardExceeded(
            "%d exceeds the factorization guard" % n
        )
    counts: dict[int, int] = {}
    for small in (2, 3, 5):
        while n % small == 0:
            counts[small] = counts.get(small, 0) + 1
            n //= small
    d = 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < 10**4:
        while n % d == 0:
            counts[d] = counts.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return Factorization(tuple(sorted(counts.items())))


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion; p must be an odd prime."""
    if p <= 2 or not is_prime(p):
        raise NotOddPrime("p = %d is not an odd prime" % p)
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def jacobi(m: int, n: int) -> int:
    """Jacobi symbol (m/n) for odd n >= 1, by binary reciprocity."""
    if n < 1 or n % 2 == 0:
        raise EvenModulus("Jacobi symbol needs an odd positive modulus")
    m %= n
    result = 1
    while m:
        while m % 2 == 0:
            m //= 2
            if n % 8 in (3, 5):
                result = -result
        m, n = n, m
        if m % 4 == 3 and n % 4 == 3:
            result = -result
        m %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class SolvabilityVerdict:
    """Outcome of the quadratic extension-coefficient solvability test.

    ``odd_sum`` is the total exponent, in n, of primes that are 3 (mod 4);
    it decides the q = 3 (mod 4) case.
    """

    solvable: bool
    case: str
    odd_sum: int

    def to_json(self):
        return {"solvable": self.solvable, "case": self.case,
                "odd_sum": self.odd_sum}


def gamma_solvability(p: int, t: int, n: int,
                      guards: GuardConfig | None = None) -> SolvabilityVerdict:
    """Classify whether 1 + g**2 * n = 0 is solvable in GF(p**t).

    Requires odd n dividing p**t - 1.  Characteristic 2 and q = 1 (mod 4)
    are always solvable; q = 3 (mod 4) is solvable iff ``odd_sum`` is odd.
    """
    if not is_prime(p):
        raise NotPrime("p = %d is not prime" % p)
    if n < 1 or n % 2 == 0:
        raise EvenN("n = %d must be odd" % n)
    q = p ** t
    if (q - 1) % n != 0:
        raise NotDivisor("n = %d does not divide q - 1 = %d" % (n, q - 1))
    odd_sum = sum(e for f, e in factorize(n, guards) if f % 4 == 3)
    if p == 2:
        return SolvabilityVerdict(True, "Char2", odd_sum)
    if q % 4 == 1:
        return SolvabilityVerdict(True, "QEquiv1Mod4", odd_sum)
    if odd_sum % 2 == 1:
        return SolvabilityVerdict(True, "QEquiv3Mod4-OddSum", odd_sum)
    return SolvabilityVerdict(False, "QEquiv3Mod4-EvenSum", odd_sum)
