"""MDS self-dual code builders.  Every result is verified before return.

Three families are covered: extended duadic cyclic codes with a
Euclidean pairing over GF(q); generalized Reed-Solomon and constacyclic
codes with a Hermitian pairing over GF(q^2); and the odd-length
Hermitian extended duadic family, including the special length-5 code
whose generator coefficients descend from GF(q^4).

A builder raises a domain error when its preconditions fail and
``VerificationFailed`` when a constructed code does not check out; it
never returns an unverified code.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb, gcd

from .codes import (
    CyclicSpec,
    LinearCode,
    MdsVerdict,
    VerificationReport,
    code_to_json,
    cyclic_generator_matrix,
    extend_code,
    generator_from_defining_set,
    is_euclidean_self_dual,
    is_hermitian_self_dual,
    mds_check,
    min_distance_exhaustive,
    poly_divmod,
)
from .config import GuardConfig, current_guards
from .cosets import DefiningSet, SplittingReport, check_duadic_splitting, consecutive_run
from .errors import (
    CharDividesN,
    DuplicatePoints,
    MalformedInput,
    NoGamma,
    NoSolution,
    NotDividing,
    NotPrime,
    OddLength,
    PreconditionFailed,
    SplittingFailed,
    TooLong,
    VerificationFailed,
)
from .fields import (
    Element,
    Field,
    TowerSpec,
    element_to_json,
    find_primitive_element,
    make_field,
    nth_root_of_unity,
    quadratic_extension,
    solve_norm,
    sqrt_in_field,
)
from .numtheory import gamma_solvability, is_prime


def _v2(x: int) -> int:
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


# ---------------------------------------------------------------------------
# gamma solvers
# ---------------------------------------------------------------------------

def solve_gamma_euclidean(field: Field, n: int) -> Element:
    """Canonically least g with 1 + g**2 * n = 0 in the field."""
    nbar = field.scalar(n)
    if not nbar:
        raise CharDividesN("n = %d vanishes in characteristic %d"
                           % (n, field.char))
    root = sqrt_in_field(-(nbar.inverse()))
    if root is None:
        raise NoSolution("1 + g**2 * %d = 0 has no solution in GF(%d)"
                         % (n, field.order))
    return root


def solve_gamma_hermitian(tower: TowerSpec, n: int,
                          guards: GuardConfig | None = None) -> Element:
    """Canonically least g in GF(q^2) with 1 + g**(q+1) * n = 0.

    The norm onto the base field is surjective, so a solution always
    exists once n is a unit; the canonical representative is the least
    element of the solution coset of the norm kernel.
    """
    base = tower.base
    nbar = base.scalar(n)
    if not nbar:
        raise CharDividesN("n = %d vanishes in characteristic %d"
                           % (n, tower.char))
    v = solve_norm(tower, -(nbar.inverse()), guards)
    q = base.order
    kernel_gen = find_primitive_element(tower) ** (q - 1)
    best = v
    cur = v
    for _ in range(q):
        cur = cur * kernel_gen
        if tower.index(cur) < tower.index(best):
            best = cur
    return best


# ---------------------------------------------------------------------------
# verification tiers
# ---------------------------------------------------------------------------

def _certify_mds(code: LinearCode, *, defining: DefiningSet | None = None,
                 extended_defining: DefiningSet | None = None,
                 structural: bool = False,
                 guards: GuardConfig | None = None):
    """Pick the strongest affordable MDS check and run it.

    Returns (verdict, distance_exact, distance_lower_bound) and raises
    ``VerificationFailed`` on any refutation.  Preference order:
    exhaustive distance, exhaustive column minors, then the root-run
    certificate (for codes carrying one) or seeded Monte-Carlo plus the
    structural argument (for evaluation codes).
    """
    guards = current_guards(guards)
    n, k, q = code.n, code.k, code.field.order
    target = n - k + 1
    if q ** k <= guards.exhaustive_tier_limit:
        d = min_distance_exhaustive(code, guards)
        if d != target:
            raise VerificationFailed(
                "mds_distance", "measured distance %d, expected %d" % (d, target)
            )
        return MdsVerdict("certified-exact"), d, None
    subsets = comb(n, k)
    if (subsets <= guards.column_limit
            and subsets * k ** 3 <= guards.column_work_limit
            and q <= guards.dlog_limit):
        verdict = mds_check(code, "exhaustive-columns", guards=guards)
        if verdict.status == "refuted":
            raise VerificationFailed(
                "mds_columns", "singular column subset %r" % (verdict.witness,)
            )
        return verdict, target, None
    if defining is not None:
        verdict = mds_check(code, "bch", defining=defining, guards=guards)
        if verdict.status != "certified-bch":
            raise VerificationFailed("bch_bound", "root run too short")
        return verdict, target, None
    if extended_defining is not None:
        # the run certifies the unextended [n-1, k] code; extending a
        # coordinate never lowers weights, so the bound carries over
        run = consecutive_run(extended_defining)
        if run + 1 < n - k:
            raise VerificationFailed("bch_bound", "root run too short")
        return MdsVerdict("certified-bch"), None, run + 1
    if structural:
        verdict = mds_check(code, "monte-carlo", trials=1000, guards=guards)
        if verdict.status == "refuted":
            raise VerificationFailed(
                "mds_monte_carlo", "singular column subset %r" % (verdict.witness,)
            )
        return (MdsVerdict("certified-structural", trials=verdict.trials,
                           passes=verdict.passes), target, None)
    return MdsVerdict("guarded"), None, None


# ---------------------------------------------------------------------------
# results
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ConstructionResult:
    """A verified code plus the route that produced it."""

    code: LinearCode
    theorem: str
    construction: str
    report: VerificationReport
    gamma: Element | None = None
    cyclic: CyclicSpec | None = None
    extras: dict | None = None

    def to_json(self):
        meta: dict = {"construction": self.construction}
        if self.gamma is not None:
            meta["gamma"] = element_to_json(self.gamma)
        if self.cyclic is not None:
            meta["defining_set"] = self.cyclic.defining.to_json()
            meta["lambda"] = element_to_json(self.cyclic.lam)
        if self.extras:
            meta.update(self.extras)
        out = code_to_json(self.code, meta)
        out["theorem"] = self.theorem
        out["verification"] = self.report.to_json()
        return out


# ---------------------------------------------------------------------------
# Euclidean extended duadic codes
# ---------------------------------------------------------------------------

def build_euclidean_duadic_extended(p: int, t: int, n: int,
                                    guards: GuardConfig | None = None
                                    ) -> ConstructionResult:
    """[n+1, (n+1)/2, (n+3)/2] Euclidean self-dual code over GF(p**t).

    The duadic half with root exponents 1..(n-1)/2 is extended by the
    column -g * (row sum) where 1 + g**2 * n = 0.  Requires odd n >= 3
    coprime to p with n | q - 1; ``NoGamma`` signals the solvability
    obstruction.
    """
    guards = current_guards(guards)
    field = make_field(p, t)
    q = field.order
    if n % 2 == 0 or n < 3:
        raise PreconditionFailed("EvenN", "length n = %d must be odd, >= 3" % n)
    if n % p == 0:
        raise PreconditionFailed(
            "NotCoprime", "n = %d shares the characteristic %d" % (n, p)
        )
    if (q - 1) % n != 0:
        raise PreconditionFailed(
            "NotDivisor", "n = %d does not divide q - 1 = %d" % (n, q - 1)
        )
    T = DefiningSet(n, tuple(range(1, (n + 1) // 2)))
    spec = generator_from_defining_set(field, n, field.one, T)
    duadic = cyclic_generator_matrix(spec)
    try:
        gamma = solve_gamma_euclidean(field, n)
    except NoSolution as exc:
        verdict = gamma_solvability(p, t, n, guards)
        raise NoGamma("%s [case %s]" % (exc, verdict.case)) from exc
    code = extend_code(duadic, gamma)
    if not is_euclidean_self_dual(code):
        raise VerificationFailed("euclidean_self_dual")
    mds, d_exact, d_lower = _certify_mds(code, extended_defining=T,
                                         guards=guards)
    report = VerificationReport(True, None, d_exact, d_lower, mds)
    return ConstructionResult(code, "Thm2", "euclidean-duadic", report,
                              gamma=gamma, cyclic=spec)


# ---------------------------------------------------------------------------
# Hermitian GRS codes
# ---------------------------------------------------------------------------

def build_grs_hermitian(p: int, t: int, n: int, points=None,
                        v_choice: str = "norm",
                        guards: GuardConfig | None = None
                        ) -> ConstructionResult:
    """[n, n/2, n/2+1] Hermitian self-dual GRS code over GF(q^2).

    Rows are (v_i * a_i**l) for l < n/2 over n distinct evaluation
    points a_i of GF(q).  With ``v_choice="norm"`` each v_i solves
    v**(q+1) = u_i for the interpolation weight u_i; ``"square"`` takes
    v_i as a square root of u_i instead, and verification then decides
    whether the resulting code is actually Hermitian self-dual.
    """
    guards = current_guards(guards)
    field = make_field(p, t)
    q = field.order
    if n % 2 != 0 or n < 2:
        raise OddLength("length n = %d must be even and >= 2" % n)
    if n > q:
        raise TooLong("length n = %d exceeds q = %d" % (n, q))
    if v_choice not in ("norm", "square"):
        raise MalformedInput("v_choice must be 'norm' or 'square'")
    if points is None:
        indices = list(range(n))
    else:
        indices = [int(i) for i in points]
        if len(indices) != n:
            raise MalformedInput("expected %d evaluation points" % n)
        if any(i < 0 or i >= q for i in indices):
            raise MalformedInput("point index out of range for GF(%d)" % q)
        if len(set(indices)) != n:
            raise DuplicatePoints("evaluation points must be distinct")
    pts = [field.from_int(i) for i in indices]
    tower = quadratic_extension(field)

    u = []
    for i, a in enumerate(pts):
        prod = field.one
        for j, b in enumerate(pts):
            if j != i:
                prod = prod * (a - b)
        u.append(prod.inverse())
    v = []
    for ui in u:
        if v_choice == "norm":
            v.append(solve_norm(tower, ui, guards))
        else:
            root = sqrt_in_field(tower.embed(ui))
            if root is None:
                raise NoSolution("u_i is not a square in GF(q^2)")
            v.append(root)

    emb = [tower.embed(a) for a in pts]
    k = n // 2
    rows = tuple(
        tuple(vi * (ai ** l) for vi, ai in zip(v, emb))
        for l in range(k)
    )
    code = LinearCode(tower, n, k, rows)

    if not is_hermitian_self_dual(code):
        raise VerificationFailed("hermitian_self_dual")
    for m in range(n - 1):
        acc = field.zero
        for ui, ai in zip(u, pts):
            acc = acc + ui * ai ** m
        if acc:
            raise VerificationFailed("interpolation_moment", "m = %d" % m)
    if v_choice == "norm":
        for ui, vi in zip(u, v):
            if vi ** (q + 1) != tower.embed(ui):
                raise VerificationFailed("norm_choice")
    mds, d_exact, d_lower = _certify_mds(code, structural=True, guards=guards)
    report = VerificationReport(is_euclidean_self_dual(code), True,
                                d_exact, d_lower, mds)
    return ConstructionResult(
        code, "Thm3", "grs-hermitian", report,
        extras={"points": indices, "v_choice": v_choice},
    )


# ---------------------------------------------------------------------------
# Hermitian constacyclic codes
# ---------------------------------------------------------------------------

def build_constacyclic_hermitian(p: int, t: int, n: int, r: int,
                                 guards: GuardConfig | None = None
                                 ) -> ConstructionResult:
    """[n, n/2, n/2+1] Hermitian self-dual constacyclic code over GF(q^2).

    The shift constant has order r; the defining set is the run
    {1 + r*j : j < n/2} inside the class 1 (mod r) taken modulo r*n.
    Preconditions: odd q; even n and r; r*n | q**2 - 1;
    r*n | 2(q+1); and writing n = 2**a n', r = 2**b r', the excluded
    congruence q = -1 (mod 2**(a+b)) must not hold.
    """
    guards = current_guards(guards)
    field = make_field(p, t)
    q = field.order
    if q % 2 == 0:
        raise PreconditionFailed("EvenQ", "q must be odd")
    a = _v2(n)
    if n < 2 or a == 0:
        raise PreconditionFailed("OddLength", "n = %d must be even" % n)
    b = _v2(r)
    if r < 2 or b == 0:
        raise PreconditionFailed("OddShiftOrder", "r = %d must be even" % r)
    if (q * q - 1) % (r * n) != 0:
        raise PreconditionFailed(
            "OrderNotInField", "r*n = %d does not divide q^2 - 1" % (r * n)
        )
    if (2 * (q + 1)) % (r * n) != 0:
        raise PreconditionFailed(
            "NotDividingTwoQPlus1", "r*n = %d does not divide 2(q+1)" % (r * n)
        )
    if q % (2 ** (a + b)) == 2 ** (a + b) - 1:
        raise PreconditionFailed(
            "BadTwoAdicCongruence", "q = -1 (mod 2^%d)" % (a + b)
        )
    tower = quadratic_extension(field)
    lam = nth_root_of_unity(tower, r)
    T = DefiningSet(r * n, tuple(1 + r * j for j in range(n // 2)), step=r)
    image = {(-q * x) % (r * n) for x in T.elements}
    if image & set(T.elements):
        raise SplittingFailed("defining set meets its own -q multiple")
    spec = generator_from_defining_set(tower, n, lam, T)
    code = cyclic_generator_matrix(spec)
    if not is_hermitian_self_dual(code):
        raise VerificationFailed("hermitian_self_dual")
    mds, d_exact, d_lower = _certify_mds(code, defining=T, guards=guards)
    report = VerificationReport(is_euclidean_self_dual(code), True,
                                d_exact, d_lower, mds)
    return ConstructionResult(code, "Thm4", "constacyclic", report,
                              cyclic=spec, extras={"r": r})


def build_negacyclic_hermitian(p: int, t: int, n: int,
                               guards: GuardConfig | None = None
                               ) -> ConstructionResult:
    """Shift constant -1: the r = 2 instance with its own preconditions.

    Writing n = 2**a n', requires q = 2**a - 1 (mod 2**(a+1)) and
    2**a n'' | q + 1 for some odd multiple n'' of n' (equivalently
    2**a n' | q + 1).
    """
    field = make_field(p, t)
    q = field.order
    a = _v2(n)
    if n < 2 or a == 0:
        raise PreconditionFailed("OddLength", "n = %d must be even" % n)
    n_odd = n >> a
    if (q + 1) % (2 ** a * n_odd) != 0:
        raise PreconditionFailed(
            "NoOddWitness", "2^%d * %d does not divide q + 1" % (a, n_odd)
        )
    if q % (2 ** (a + 1)) != 2 ** a - 1:
        raise PreconditionFailed(
            "BadTwoAdicCongruence",
            "q is not 2^%d - 1 modulo 2^%d" % (a, a + 1),
        )
    result = build_constacyclic_hermitian(p, t, n, 2, guards)
    return replace(result, theorem="Cor2", construction="negacyclic")


# ---------------------------------------------------------------------------
# Hermitian extended duadic codes (odd length over GF(q^2))
# ---------------------------------------------------------------------------

def _build_hermitian_extension(tower: TowerSpec, spec: CyclicSpec,
                               construction: str, theorem: str,
                               guards: GuardConfig | None):
    duadic = cyclic_generator_matrix(spec)
    gamma = solve_gamma_hermitian(tower, spec.n, guards)
    code = extend_code(duadic, gamma)
    if not is_hermitian_self_dual(code):
        raise VerificationFailed("hermitian_self_dual")
    mds, d_exact, d_lower = _certify_mds(code, extended_defining=spec.defining,
                                         guards=guards)
    report = VerificationReport(is_euclidean_self_dual(code), True,
                                d_exact, d_lower, mds)
    return ConstructionResult(code, theorem, construction, report,
                              gamma=gamma, cyclic=spec)


def build_hermitian_extended_duadic(p: int, t: int, n: int,
                                    guards: GuardConfig | None = None
                                    ) -> ConstructionResult:
    """[n+1, (n+1)/2, (n+3)/2] Hermitian self-dual code over GF(q^2).

    The length n cyclic code over GF(q^2) with root exponents
    1..(n-1)/2 is extended through 1 + g**(q+1) * n = 0.  Requires odd
    q, n >= 3, n | q - 1 and gcd(n, q+1) = 1; the x -> -q*x multiplier
    splitting is checked rather than assumed.
    """
    guards = current_guards(guards)
    field = make_field(p, t)
    q = field.order
    if q % 2 == 0:
        raise PreconditionFailed("EvenQ", "q must be odd")
    if n < 3:
        raise PreconditionFailed("LengthTooSmall", "n = %d must be >= 3" % n)
    if (q - 1) % n != 0:
        raise PreconditionFailed(
            "NotDivisor", "n = %d does not divide q - 1 = %d" % (n, q - 1)
        )
    if gcd(n, q + 1) != 1:
        raise PreconditionFailed(
            "NotCoprimeQPlus1", "gcd(n, q+1) = %d" % gcd(n, q + 1)
        )
    tower = quadratic_extension(field)
    T = DefiningSet(n, tuple(range(1, (n + 1) // 2)))
    rep = check_duadic_splitting(T, -q, n, q * q)
    if not rep.is_splitting:
        raise SplittingFailed("witness %r" % (rep.witness,))
    spec = generator_from_defining_set(tower, n, tower.one, T)
    return _build_hermitian_extension(tower, spec, "hermitian-duadic",
                                      "Thm8", guards)


def build_hermitian_n5(p: int, t: int,
                       guards: GuardConfig | None = None
                       ) -> ConstructionResult:
    """[6, 3, 4] Hermitian self-dual code over GF(q^2) when 5 | q^2 + 1.

    The length-5 cyclic code has root exponents {2, 3}, one coset under
    multiplication by q^2 (which is -1 mod 5).  Its quadratic generator
    is computed in GF(q^4) and its coefficients descend to GF(q^2).
    """
    guards = current_guards(guards)
    field = make_field(p, t)
    q = field.order
    if q % 2 == 0:
        raise PreconditionFailed("EvenQ", "q must be odd")
    if (q * q + 1) % 5 != 0:
        raise PreconditionFailed(
            "NotDividingQSquaredPlus1", "5 does not divide q^2 + 1 = %d" % (q * q + 1)
        )
    tower = quadratic_extension(field)
    quartic = quadratic_extension(tower)
    beta = nth_root_of_unity(quartic, 5)
    b2, b3 = beta ** 2, beta ** 3
    s = b2 + b3
    prod = b2 * b3
    if not s.in_base() or not prod.in_base():
        raise VerificationFailed("coefficient_descent",
                                 "generator coefficients are not in GF(q^2)")
    g = (prod.a, -s.a, tower.one)
    x5_minus_1 = [-(tower.one)] + [tower.zero] * 4 + [tower.one]
    _, rem = poly_divmod(x5_minus_1, list(g), tower)
    if rem:
        raise NotDividing("generator does not divide x^5 - 1")
    T = DefiningSet(5, (2, 3))
    rep = check_duadic_splitting(T, -q, 5, q * q)
    if not rep.is_splitting:
        raise SplittingFailed("witness %r" % (rep.witness,))
    spec = CyclicSpec(tower, 5, tower.one, T, g, None)
    return _build_hermitian_extension(tower, spec, "hermitian-n5",
                                      "Thm7", guards)


def check_centered_duadic_splitting(p: int, t: int, n: int) -> SplittingReport:
    """Check the x -> -q*x splitting for the centered defining set
    {(n+3)/4, ..., (3n-3)/4} modulo n, for odd n | q^2 + 1 with
    n = 1 (mod 4).  Reports the witness when the splitting fails."""
    if not is_prime(p):
        raise NotPrime("p = %d is not prime" % p)
    q = p ** t
    if (q * q + 1) % n != 0:
        raise PreconditionFailed(
            "NotDividingQSquaredPlus1", "n = %d does not divide q^2 + 1" % n
        )
    if n % 4 != 1:
        raise PreconditionFailed("NotOneMod4", "n = %d must be 1 (mod 4)" % n)
    T = DefiningSet(n, tuple(range((n + 3) // 4, (3 * n - 3) // 4 + 1)))
    return check_duadic_splitting(T, -q, n, q * q)


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def exists_hermitian_dispatch(p: int, t: int, n: int,
                              guards: GuardConfig | None = None
                              ) -> ConstructionResult:
    """Even lengths up to q + 1: GRS for n <= q, constacyclic r = 2 at
    n = q + 1."""
    field = make_field(p, t)
    q = field.order
    if n % 2 != 0 or n < 2:
        raise OddLength("length n = %d must be even and >= 2" % n)
    if n > q + 1:
        raise TooLong("length n = %d exceeds q + 1 = %d" % (n, q + 1))
    if n <= q:
        result = build_grs_hermitian(p, t, n, guards=guards)
    else:
        result = build_constacyclic_hermitian(p, t, n, 2, guards)
    return replace(result, theorem="Thm5-dispatch")
