"""Cyclotomic cosets, multipliers, splittings, and root-run certificates.

Defining sets live in Z_modulus.  Cyclic codes use step 1 and modulus n;
constacyclic codes use modulus r*n with the members confined to the
residue class 1 (mod r), and runs are measured inside that class.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NotCoprime, ZeroInSet
from .numtheory import factorize


@dataclass(frozen=True)
class DefiningSet:
    """A set of root exponents modulo ``modulus``.

    ``step`` is 1 for cyclic codes; for constacyclic codes it is r and
    every member is then congruent to 1 (mod r).
    """

    modulus: int
    elements: tuple[int, ...]
    step: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        norm = sorted({x % self.modulus for x in self.elements})
        object.__setattr__(self, "elements", tuple(norm))
        if self.step > 1:
            if self.modulus % self.step != 0:
                raise ValueError("step must divide the modulus")
            for x in self.elements:
                if x % self.step != 1 % self.step:
                    raise ValueError(
                        "element %d is outside the residue class 1 mod %d"
                        % (x, self.step)
                    )

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self):
        return {"modulus": self.modulus, "step": self.step,
                "elements": list(self.elements)}

    @staticmethod
    def from_json(obj) -> "DefiningSet":
        return DefiningSet(int(obj["modulus"]),
                           tuple(int(v) for v in obj["elements"]),
                           int(obj.get("step", 1)))


def cyclotomic_coset(i: int, n: int, q: int) -> tuple[int, ...]:
    """The orbit of i under multiplication by q modulo n, sorted."""
    if gcd(n, q) != 1:
        raise NotCoprime("base %d shares a factor with modulus %d" % (q, n))
    i %= n
    orbit = {i}
    x = (i * q) % n
    while x != i:
        orbit.add(x)
        x = (x * q) % n
    return tuple(sorted(orbit))


def multiplier_image(T: DefiningSet, a: int) -> DefiningSet:
    """Image of a defining set under x -> a*x (a coprime to the modulus)."""
    if gcd(a, T.modulus) != 1:
        raise NotCoprime(
            "multiplier %d shares a factor with modulus %d" % (a, T.modulus)
        )
    image = tuple((a * x) % T.modulus for x in T.elements)
    step = T.step
    if step > 1 and any(x % step != 1 % step for x in image):
        step = 1
    return DefiningSet(T.modulus, image, step)


@dataclass(frozen=True)
class SplittingReport:
    """Result of checking one multiplier-candidate pair for a splitting."""

    n: int
    multiplier: int
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    is_splitting: bool
    witness: int | None

    def to_json(self):
        return {
            "n": self.n,
            "multiplier": self.multiplier,
            "s1": list(self.s1),
            "s2": list(self.s2),
            "is_splitting": self.is_splitting,
            "witness": self.witness,
        }


def check_duadic_splitting(T: DefiningSet, a: int, n: int,
                           q: int) -> SplittingReport:
    """Does (x -> a*x, T, complement) split Z_n minus {0} into q-cosets?

    The conditions are: T and its complement S2 are swapped by the
    multiplier, and both are unions of q-cosets.  When the multiplier
    maps part of T back into T, the reported witness is the image a*i of
    the least i in T whose image stays inside T.  When a coset leaks out
    of T, the witness is the least escaped coset member.
    """
    if T.modulus != n:
        raise ValueError("defining set modulus %d differs from n %d"
                         % (T.modulus, n))
    if gcd(n, q) != 1:
        raise NotCoprime("coset base %d shares a factor with n %d" % (q, n))
    if gcd(a, n) != 1:
        raise NotCoprime("multiplier %d shares a factor with n %d" % (a, n))
    s1 = set(T.elements)
    if 0 in s1:
        raise ZeroInSet("0 cannot appear in a splitting half")
    a_norm = a % n
    s2 = sorted(set(range(1, n)) - s1)
    witness = None
    ok = True

    image1 = {(a_norm * x) % n for x in s1}
    if image1 & s1:
        ok = False
        for i in sorted(s1):
            img = (a_norm * i) % n
            if img in s1:
                witness = img
                break
    elif image1 != set(s2):
        ok = False
        witness = min(set(s2) - image1) if set(s2) - image1 else min(image1 - set(s2))

    if ok:
        image2 = {(a_norm * x) % n for x in s2}
        if image2 != s1:
            ok = False
            overlap = image2 & set(s2)
            if overlap:
                for i in sorted(s2):
                    img = (a_norm * i) % n
                    if img in set(s2):
                        witness = img
                        break
            else:
                witness = min(s1 - image2) if s1 - image2 else min(image2 - s1)

    if ok or witness is None:
        for x in sorted(s1):
            coset = set(cyclotomic_coset(x, n, q))
            if not coset <= s1:
                ok = False
                if witness is None:
                    witness = min(coset - s1)
                break
        else:
            for x in s2:
                coset = set(cyclotomic_coset(x, n, q))
                if not coset <= set(s2):
                    ok = False
                    if witness is None:
                        witness = min(coset - set(s2))
                    break

    return SplittingReport(n, a_norm, tuple(sorted(s1)), tuple(s2),
                           ok, None if ok else witness)


def consecutive_run(T: DefiningSet) -> int:
    """Longest circular run with difference ``step`` inside the set.

    Members are mapped to positions j = (x - base)/step modulo the class
    size, and the longest circular block of consecutive positions is
    returned.  A run of length L certifies minimum distance >= L + 1 for
    the code whose roots carry these exponents.
    """
    if not T.elements:
        return 0
    size = T.modulus // T.step
    base = 1 % T.step if T.step > 1 else 0
    positions = sorted(((x - base) // T.step) % size for x in T.elements)
    if len(positions) == size:
        return size
    present = set(positions)
    best = 0
    for j in positions:
        if (j - 1) % size in present:
            continue
        length = 1
        while (j + length) % size in present:
            length += 1
        best = max(best, length)
    return best


def extended_selfdual_cyclic_exists(n: int, q: int) -> bool:
    """Existence test for length n cyclic codes over GF(q^2) whose
    extension can be Hermitian self-dual: every prime r dividing n must
    have ord_r(q) odd or ord_r(q^2) even."""
    if gcd(n, q) != 1:
        raise NotCoprime("q = %d shares a factor with n = %d" % (q, n))
    for r, _ in factorize(n):
        o1 = _mult_order(q % r, r)
        o2 = _mult_order((q * q) % r, r)
        if o1 % 2 == 1 or o2 % 2 == 0:
            continue
        return False
    return True


def _mult_order(x: int, r: int) -> int:
    x %= r
    if gcd(x, r) != 1:
        raise NotCoprime("%d is not a unit modulo %d" % (x, r))
    order = 1
    acc = x
    while acc != 1:
        acc = (acc * x) % r
        order += 1
    return order
