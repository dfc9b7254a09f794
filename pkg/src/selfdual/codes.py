"""Linear codes over exact fields: cyclic structure, duals, verification.

A code is its generator matrix.  Cyclic and constacyclic codes come from
a generator polynomial built out of a defining set of root exponents;
the matrix rows are the shifts x**i * g(x) modulo x**n - lambda.

Verification never approximates: self-duality is an exact matrix
product, distances are exhaustive scans under a guard, and MDS checks
are exhaustive column tests, seeded Monte-Carlo sampling, or a
consecutive-root-run certificate.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb

from .config import GuardConfig, current_guards
from .cosets import DefiningSet, consecutive_run
from .errors import (
    GuardExceeded,
    NoCyclicStructure,
    NotDividing,
    NotOverTower,
    RootsNotInField,
    ZeroElement,
)
from .fields import (
    Element,
    Field,
    TowerSpec,
    element_from_json,
    element_order,
    element_to_json,
    field_from_json,
    field_to_json,
    frobenius,
    nth_root_of_unity,
)
from .linalg import (
    dlog_table,
    det_nonzero,
    mat_mul,
    mat_transpose,
    matrix_rank,
    null_space,
    row_reduce,
)


# ---------------------------------------------------------------------------
# element-coefficient polynomials (constant term first)
# ---------------------------------------------------------------------------

def poly_trim(c, field: Field):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def poly_mul(a, b, field: Field):
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return out


def poly_divmod(num, den, field: Field):
    num = poly_trim(num, field)
    den = poly_trim(den, field)
    if not den:
        raise ZeroElement("polynomial division by zero")
    quot = [field.zero] * max(0, len(num) - len(den) + 1)
    rem = list(num)
    inv_lead = den[-1].inverse()
    while len(rem) >= len(den) and any(map(bool, rem)):
        coef = rem[-1] * inv_lead
        deg = len(rem) - len(den)
        if coef:
            quot[deg] = coef
            for i, d in enumerate(den):
                rem[deg + i] = rem[deg + i] - coef * d
        rem.pop()
    return quot, poly_trim(rem, field)


def poly_eval(c, x: Element, field: Field) -> Element:
    acc = field.zero
    for coef in reversed(c):
        acc = acc * x + coef
    return acc


# ---------------------------------------------------------------------------
# linear codes
# ---------------------------------------------------------------------------

def _staircase_witness(rows) -> bool:
    """Strictly increasing leading positions prove independence cheaply."""
    last = -1
    for row in rows:
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None or lead <= last:
            return False
        last = lead
    return True


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] code given by a full-rank k x n generator matrix."""

    field: Field
    n: int
    k: int
    generator: tuple

    def __post_init__(self):
        if self.k != len(self.generator):
            raise ValueError("k does not match the number of rows")
        for row in self.generator:
            if len(row) != self.n:
                raise ValueError("row length does not match n")
        if not _staircase_witness(self.generator):
            if matrix_rank(self.generator, self.field) != self.k:
                raise ValueError("generator rows are dependent")

    def codeword(self, message) -> tuple:
        word = [self.field.zero] * self.n
        for m, row in zip(message, self.generator):
            if m:
                word = [w + m * r for w, r in zip(word, row)]
        return tuple(word)


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Row-space equality via the canonical reduced echelon form."""
    if a.n != b.n or a.k != b.k or a.field != b.field:
        return False
    ra, _ = row_reduce(a.generator, a.field)
    rb, _ = row_reduce(b.generator, b.field)
    return ra == rb


@dataclass(frozen=True)
class CyclicSpec:
    """Constacyclic structure: length, shift constant, roots, generator.

    ``g`` is monic, divides x**n - lam, and vanishes exactly at
    alpha**i for i in the defining set.
    """

    field: Field
    n: int
    lam: Element
    defining: DefiningSet
    g: tuple
    alpha: Element

    @property
    def k(self) -> int:
        return self.n - len(self.defining)


def generator_from_defining_set(field: Field, n: int, lam: Element,
                                T: DefiningSet) -> CyclicSpec:
    """Build the monic generator with roots alpha**i, i in T.

    ``alpha`` is the canonical root of unity of order n (cyclic case,
    lam = 1) or of order r*n with alpha**n = lam (constacyclic case,
    lam of order r).  Requires r*n | q - 1 so that all roots lie in
    the coefficient field.
    """
    if not lam:
        raise ZeroElement("shift constant must be nonzero")
    q = field.order
    r = 1 if lam == field.one else element_order(lam)
    if (q - 1) % (r * n) != 0:
        raise RootsNotInField(
            "r*n = %d does not divide q - 1 = %d" % (r * n, q - 1)
        )
    if T.modulus != r * n:
        raise ValueError("defining set modulus %d, expected %d"
                         % (T.modulus, r * n))
    base_root = nth_root_of_unity(field, r * n)
    alpha = None
    acc = field.one
    for _ in range(r * n):
        if acc ** n == lam and element_order(acc) == r * n:
            alpha = acc
            break
        acc = acc * base_root
    if alpha is None:
        raise RootsNotInField("no root of order %d with alpha**n = lam" % (r * n))
    g = [field.one]
    for i in T.elements:
        root = alpha ** i
        g = poly_mul(g, [-root, field.one], field)
    xn_lam = [-lam] + [field.zero] * (n - 1) + [field.one]
    _, rem = poly_divmod(xn_lam, g, field)
    if rem:
        raise NotDividing("generator does not divide x**n - lam")
    return CyclicSpec(field, n, lam, T, tuple(g), alpha)


def constacyclic_shift(word, lam: Element):
    """One constacyclic shift: (c0..c_{n-1}) -> (lam*c_{n-1}, c0, ..)."""
    return (lam * word[-1],) + tuple(word[:-1])


def cyclic_generator_matrix(spec: CyclicSpec) -> LinearCode:
    """Rows are x**i * g(x) reduced modulo x**n - lam, i = 0..k-1."""
    k = spec.k
    if k < 0:
        raise ValueError("defining set larger than the length")
    row = list(spec.g) + [spec.field.zero] * (spec.n - len(spec.g))
    rows = []
    for _ in range(k):
        rows.append(tuple(row))
        row = list(constacyclic_shift(row, spec.lam))
    return LinearCode(spec.field, spec.n, k, tuple(rows))


# ---------------------------------------------------------------------------
# duals and self-duality
# ---------------------------------------------------------------------------

def euclidean_dual(code: LinearCode) -> LinearCode:
    basis = null_space(code.generator, code.n, code.field)
    return LinearCode(code.field, code.n, code.n - code.k, basis)


def hermitian_dual(code: LinearCode) -> LinearCode:
    if not isinstance(code.field, TowerSpec):
        raise NotOverTower("Hermitian duality needs a quadratic extension")
    tower = code.field
    conj = tuple(tuple(frobenius(tower, x) for x in row)
                 for row in code.generator)
    basis = null_space(conj, code.n, tower)
    return LinearCode(tower, code.n, code.n - code.k, basis)


def _gram_is_zero(rows_a, rows_b, field: Field) -> bool:
    zero = field.zero
    for ra in rows_a:
        for rb in rows_b:
            acc = zero
            for x, y in zip(ra, rb):
                if x and y:
                    acc = acc + x * y
            if acc:
                return False
    return True


def is_euclidean_self_dual(code: LinearCode) -> bool:
    """2k == n and G @ G^T == 0, checked by the exact matrix product."""
    if 2 * code.k != code.n:
        return False
    return _gram_is_zero(code.generator, code.generator, code.field)


def is_hermitian_self_dual(code: LinearCode) -> bool:
    """2k == n and G @ conj(G)^T == 0 over a quadratic extension."""
    if not isinstance(code.field, TowerSpec):
        raise NotOverTower("Hermitian duality needs a quadratic extension")
    if 2 * code.k != code.n:
        return False
    tower = code.field
    conj = tuple(tuple(frobenius(tower, x) for x in row)
                 for row in code.generator)
    return _gram_is_zero(code.generator, conj, tower)


# ---------------------------------------------------------------------------
# extension
# ---------------------------------------------------------------------------

def extend_code(code: LinearCode, gamma: Element) -> LinearCode:
    """Append to every row the coordinate -gamma * (sum of the row)."""
    zero = code.field.zero
    rows = []
    for row in code.generator:
        total = zero
        for x in row:
            total = total + x
        rows.append(tuple(row) + (-(gamma * total),))
    return LinearCode(code.field, code.n + 1, code.k, tuple(rows))


# ---------------------------------------------------------------------------
# distance and MDS verification
# ---------------------------------------------------------------------------

def _projective_scan(code: LinearCode, audit_sums: bool = False):
    """Scan one codeword per projective message class.

    Returns (min_weight, sums_ok) where sums_ok reports whether every
    minimum-weight codeword found has a nonzero coordinate sum; scalar
    scaling changes neither the weight nor that predicate.
    """
    field = code.field
    zero = field.zero
    elems = [field.from_int(i) for i in range(field.order)]
    best = code.n + 1
    sums_ok = True
    k = code.k
    G = code.generator

    def consider(word):
        nonlocal best, sums_ok
        weight = sum(1 for x in word if x)
        if weight < best:
            best = weight
            if audit_sums:
                total = zero
                for x in word:
                    total = total + x
                sums_ok = bool(total)
        elif weight == best and audit_sums:
            total = zero
            for x in word:
                total = total + x
            if not total:
                sums_ok = False

    def rec(level, word):
        if level == k:
            consider(word)
            return
        rec(level + 1, word)
        row = G[level]
        for c in elems[1:]:
            rec(level + 1, [w + c * r for w, r in zip(word, row)])

    for pivot in range(k):
        rec(pivot + 1, list(G[pivot]))
    return best, sums_ok


def min_distance_exhaustive(code: LinearCode,
                            guards: GuardConfig | None = None) -> int:
    """Exact minimum distance by scanning all q**k codewords.

    One representative per scalar class is enough, so the walk visits
    (q**k - 1)/(q - 1) words; the guard is still stated on q**k.
    """
    guards = current_guards(guards)
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if code.field.order ** code.k > guards.codeword_limit:
        raise GuardExceeded(
            "q**k = %d exceeds the codeword guard" % code.field.order ** code.k
        )
    best, _ = _projective_scan(code)
    return best


def extension_weight_audit(code: LinearCode,
                           guards: GuardConfig | None = None):
    """(min distance, all-minimum-weight-words-have-nonzero-sum)."""
    guards = current_guards(guards)
    if code.field.order ** code.k > guards.codeword_limit:
        raise GuardExceeded("q**k exceeds the codeword guard")
    return _projective_scan(code, audit_sums=True)


@dataclass(frozen=True)
class MdsVerdict:
    """How (and whether) the MDS property was established."""

    status: str  # certified-exact | certified-bch | certified-structural
    #            | monte-carlo | refuted | inconclusive | guarded
    trials: int | None = None
    passes: int | None = None
    witness: tuple | None = None

    def to_json(self):
        out = {"status": self.status}
        if self.trials is not None:
            out["trials"] = self.trials
            out["passes"] = self.passes
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def _encoded_columns(code: LinearCode, table):
    cols = []
    for j in range(code.n):
        cols.append([table.encode(code.generator[i][j])
                     for i in range(code.k)])
    return cols


def mds_check(code: LinearCode, mode: str, trials: int = 1000,
              defining: DefiningSet | None = None,
              guards: GuardConfig | None = None) -> MdsVerdict:
    """MDS verification in one of three modes.

    ``exhaustive-columns`` tests nonsingularity of every k-subset of
    generator columns (necessary and sufficient).  ``monte-carlo``
    samples subsets with a seed derived from (n, k, q).  ``bch``
    certifies from the root-run of the defining set.
    """
    guards = current_guards(guards)
    n, k = code.n, code.k
    if mode == "exhaustive-columns":
        if comb(n, k) > guards.column_limit:
            raise GuardExceeded("C(n, k) = %d exceeds the column guard"
                                % comb(n, k))
        table = dlog_table(code.field, guards.dlog_limit)
        if table is not None:
            cols = _encoded_columns(code, table)
            for subset in itertools.combinations(range(n), k):
                mat = [[cols[j][i] for j in subset] for i in range(k)]
                if not table.det_nonzero(mat):
                    return MdsVerdict("refuted", witness=subset)
        else:
            columns = mat_transpose(code.generator)
            for subset in itertools.combinations(range(n), k):
                mat = [[columns[j][i] for j in subset] for i in range(k)]
                if not det_nonzero(mat, code.field):
                    return MdsVerdict("refuted", witness=subset)
        return MdsVerdict("certified-exact")
    if mode == "monte-carlo":
        rng = random.Random("%d:%d:%d" % (n, k, code.field.order))
        table = dlog_table(code.field, guards.dlog_limit)
        columns = None if table else mat_transpose(code.generator)
        cols = _encoded_columns(code, table) if table else None
        passes = 0
        for _ in range(trials):
            subset = sorted(rng.sample(range(n), k))
            if table is not None:
                mat = [[cols[j][i] for j in subset] for i in range(k)]
                good = table.det_nonzero(mat)
            else:
                mat = [[columns[j][i] for j in subset] for i in range(k)]
                good = det_nonzero(mat, code.field)
            if not good:
                return MdsVerdict("refuted", trials=trials, passes=passes,
                                  witness=tuple(subset))
            passes += 1
        return MdsVerdict("monte-carlo", trials=trials, passes=passes)
    if mode == "bch":
        if defining is None:
            raise NoCyclicStructure("bch mode needs a defining set")
        run = consecutive_run(defining)
        if run + 1 >= n - k + 1:
            return MdsVerdict("certified-bch")
        return MdsVerdict("inconclusive")
    raise ValueError("unknown mds mode %r" % mode)


@dataclass(frozen=True)
class VerificationReport:
    """Everything the verifier established about one code."""

    euclidean_self_dual: bool
    hermitian_self_dual: bool | None
    distance_exact: int | None
    distance_lower_bound: int | None
    mds: MdsVerdict
    warning: str | None = None

    def to_json(self):
        if self.distance_exact is not None:
            distance = {"exact": self.distance_exact}
        elif self.distance_lower_bound is not None:
            distance = {"lower_bound": self.distance_lower_bound}
        else:
            distance = None
        out = {
            "euclidean_self_dual": self.euclidean_self_dual,
            "hermitian_self_dual": self.hermitian_self_dual,
            "distance": distance,
            "mds": self.mds.to_json(),
        }
        if self.warning:
            out["warning"] = self.warning
        return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def code_to_json(code: LinearCode, metadata: dict | None = None):
    return {
        "field": field_to_json(code.field),
        "n": code.n,
        "k": code.k,
        "generator": [[element_to_json(x) for x in row]
                      for row in code.generator],
        "metadata": metadata or {},
    }


def code_from_json(obj):
    field = field_from_json(obj["field"])
    n = int(obj["n"])
    k = int(obj["k"])
    rows = tuple(
        tuple(element_from_json(field, x) for x in row)
        for row in obj["generator"]
    )
    code = LinearCode(field, n, k, rows)
    return code, obj.get("metadata", {})
