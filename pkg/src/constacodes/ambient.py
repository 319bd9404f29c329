"""Ambient word arithmetic, the structural lift, and brute-force oracles.

Two isomorphic pictures of the same ring are maintained:

  * the "plain" side A + uA, where A = GF(2^m)[x]/<(x^n + d0)^(2^k*lam)>
    and u^2 = alpha^(-1) * (x^n + d0)^(2^k); elements are pairs of
    reduced polynomials (a0, a1) meaning a0 + u*a1;

  * the "word" side R[x]/<x^N - g>, N = 2^k * n, g = delta + alpha*u^2,
    over R = GF(2^m)[u]/<u^(2*lam)>; an element (RPoly) is a tuple of N
    coefficients, each a tuple of 2*lam u-digits (field ints).  Ideals
    of this ring are exactly the codes being enumerated.

psi_lift / psi_inverse realize the structure map between the sides; it
is linear by construction and its multiplicativity is property-tested,
not assumed.

For oracle work the word side is flattened to GF(2) vectors packed in
ints (D = m * 2*lam * N bits).  An ideal is then an xor-closed set
stable under three linear operators: multiply-by-x (the constacyclic
shift), multiply-by-u, and (for m > 1) multiply by a field generator.
brute_force_ideals finds every ideal of the word ring from scratch:
close each single element under the operators, deduplicate by reduced
echelon basis, then close the family under pairwise ideal sums.  It
never consults the descriptor enumeration, which is what makes it an
independent oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import polyring as pr
from .chainring import ChainCtx
from .enumerator import (
    CodeDescriptor,
    chain_contexts,
    code_size,
    descriptor_generators,
)
from .factorizer import FactorData
from .gf2m import GF2m
from .params import Params
from .polyring import Poly

RElem = tuple[int, ...]
RPoly = tuple[RElem, ...]
AmbientElem = tuple[Poly, Poly]

DEFAULT_ORACLE_DIM_CAP = 16
DEFAULT_MAT_CAP = 1 << 24


def oracle_dim_cap() -> int:
    return int(os.environ.get("CONSTACODES_ORACLE_DIM_CAP", DEFAULT_ORACLE_DIM_CAP))


def materialization_cap() -> int:
    return int(os.environ.get("CONSTACODES_MAT_CAP", DEFAULT_MAT_CAP))


# ----------------------------------------------------------------------
# R = GF(2^m)[u]/<u^(2*lam)>: elements are tuples of 2*lam u-digits.
# ----------------------------------------------------------------------

def r_add(a: RElem, b: RElem) -> RElem:
    return tuple(x ^ y for x, y in zip(a, b))

def r_scale(F: GF2m, a: RElem, c: int) -> RElem:
    if c == 0:
        return (0,) * len(a)
    if c == 1:
        return a
    return tuple(F.mul(x, c) for x in a)

def r_mul(F: GF2m, a: RElem, b: RElem) -> RElem:
    w = len(a)
    out = [0] * w
    for i, ai in enumerate(a):
        if ai:
            for j in range(w - i):
                bj = b[j]
                if bj:
                    out[i + j] ^= F.mul(ai, bj)
    return tuple(out)

def r_shift_u(a: RElem) -> RElem:
    return (0,) + a[:-1]


# ----------------------------------------------------------------------
# Per-parameter cached tables
# ----------------------------------------------------------------------

_TABLES: dict[tuple, dict] = {}


def _tables(params: Params) -> dict:
    key = (
        params.m, params.n, params.k, params.lam,
        params.delta, params.alpha, params.field.reduction,
    )
    got = _TABLES.get(key)
    if got is not None:
        return got
    F = params.field
    w = params.u_exp
    gamma = tuple(
        params.delta if i == 0 else (params.alpha if i == 2 else 0) for i in range(w)
    )
    pows = [tuple(1 if i == 0 else 0 for i in range(w))]
    for _ in range(params.lam - 1):
        pows.append(r_mul(F, pows[-1], gamma))
    # Even u-digit j of gamma^l is row j, column l of the chunk matrix.
    lam = params.lam
    mat = [[pows[l][2 * j] if 2 * j < w else 0 for l in range(lam)] for j in range(lam)]
    minv = _matrix_inverse(F, mat)
    got = {
        "gamma": gamma,
        "gamma_pows": pows,
        "minv": minv,
        "u2_amb": pr.p_mod(F, params.u_squared_poly, params.a_modulus),
        "bitspace": None,
    }
    _TABLES[key] = got
    return got


def _matrix_inverse(F: GF2m, mat: list[list[int]]) -> list[list[int]]:
    n = len(mat)
    a = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = F.inv(a[col][col])
        a[col] = [F.mul(x, inv) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [x ^ F.mul(c, y) for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# ----------------------------------------------------------------------
# The plain side A + uA
# ----------------------------------------------------------------------

def amb_add(params: Params, a: AmbientElem, b: AmbientElem) -> AmbientElem:
    F = params.field
    return pr.p_add(F, a[0], b[0]), pr.p_add(F, a[1], b[1])


def amb_mul(params: Params, a: AmbientElem, b: AmbientElem) -> AmbientElem:
    F = params.field
    M = params.a_modulus
    u2 = _tables(params)["u2_amb"]
    lo = pr.p_add(
        F,
        pr.p_mod(F, pr.p_mul(F, a[0], b[0]), M),
        pr.p_mod(F, pr.p_mul(F, u2, pr.p_mul(F, a[1], b[1])), M),
    )
    hi = pr.p_add(
        F,
        pr.p_mod(F, pr.p_mul(F, a[0], b[1]), M),
        pr.p_mod(F, pr.p_mul(F, a[1], b[0]), M),
    )
    return lo, hi


# ----------------------------------------------------------------------
# The word side R[x]/<x^N - gamma>
# ----------------------------------------------------------------------

def rp_zero(params: Params) -> RPoly:
    return ((0,) * params.u_exp,) * params.length

def rp_one(params: Params) -> RPoly:
    z = (0,) * params.u_exp
    one = (1,) + (0,) * (params.u_exp - 1)
    return (one,) + (z,) * (params.length - 1)

def rp_add(a: RPoly, b: RPoly) -> RPoly:
    return tuple(r_add(x, y) for x, y in zip(a, b))

def rp_mul(params: Params, a: RPoly, b: RPoly) -> RPoly:
    F = params.field
    N = params.length
    gamma = _tables(params)["gamma"]
    w = params.u_exp
    acc = [[0] * w for _ in range(N)]
    zero = (0,) * w
    for i, ai in enumerate(a):
        if ai == zero:
            continue
        for j, bj in enumerate(b):
            if bj == zero:
                continue
            prod = r_mul(F, ai, bj)
            p = i + j
            if p >= N:
                p -= N
                prod = r_mul(F, gamma, prod)
            row = acc[p]
            for t, dig in enumerate(prod):
                row[t] ^= dig
    return tuple(tuple(row) for row in acc)

def rp_mul_x(params: Params, a: RPoly) -> RPoly:
    """The constacyclic shift: multiply by x, folding x^N to gamma."""
    F = params.field
    gamma = _tables(params)["gamma"]
    return (r_mul(F, gamma, a[-1]),) + a[:-1]

def rp_mul_u(params: Params, a: RPoly) -> RPoly:
    return tuple(r_shift_u(c) for c in a)

def rp_scale(params: Params, a: RPoly, c: int) -> RPoly:
    F = params.field
    return tuple(r_scale(F, x, c) for x in a)

def rp_from_poly(params: Params, p: Poly) -> RPoly:
    """Embed a field polynomial, folding x^N to gamma (Horner)."""
    acc = rp_zero(params)
    w = params.u_exp
    for c in reversed(p):
        acc = rp_mul_x(params, acc) if acc != rp_zero(params) else acc
        if c:
            first = (acc[0][0] ^ c,) + acc[0][1:]
            acc = (first,) + acc[1:]
    return acc

def rp_pow(params: Params, a: RPoly, e: int) -> RPoly:
    r = rp_one(params)
    while e:
        if e & 1:
            r = rp_mul(params, r, a)
        e >>= 1
        if e:
            a = rp_mul(params, a, a)
    return r

def inner_product(params: Params, a: RPoly, b: RPoly) -> RElem:
    """R-valued Euclidean inner product of two words."""
    F = params.field
    acc = (0,) * params.u_exp
    for x, y in zip(a, b):
        acc = r_add(acc, r_mul(F, x, y))
    return acc

def constacyclic_shift(params: Params, word: RPoly) -> RPoly:
    return rp_mul_x(params, word)


# ----------------------------------------------------------------------
# The structure map between the two sides
# ----------------------------------------------------------------------

def psi_lift(params: Params, amb: AmbientElem) -> RPoly:
    """Map a0 + u*a1 to the word ring.

    Each polynomial is split into lam chunks of length N, chunk l being
    the coefficient block of x^(N*l); chunk l lands on gamma^l (times u
    for the a1 part).
    """
    F = params.field
    N = params.length
    lam = params.lam
    w = params.u_exp
    pows = _tables(params)["gamma_pows"]
    acc = [[0] * w for _ in range(N)]
    for part, xi in enumerate(amb):
        for idx, c in enumerate(xi):
            if c == 0:
                continue
            l, i = divmod(idx, N)
            gp = pows[l]
            row = acc[i]
            if part == 0:
                for t in range(w):
                    if gp[t]:
                        row[t] ^= F.mul(gp[t], c)
            else:
                for t in range(w - 1):
                    if gp[t]:
                        row[t + 1] ^= F.mul(gp[t], c)
    return tuple(tuple(row) for row in acc)


def psi_inverse(params: Params, word: RPoly) -> AmbientElem:
    """Inverse of psi_lift: per coefficient, the u-digit planes of fixed
    parity are an invertible triangular image of the chunk values."""
    F = params.field
    N = params.length
    lam = params.lam
    minv = _tables(params)["minv"]
    xi0 = [0] * (lam * N)
    xi1 = [0] * (lam * N)
    for i, coeff in enumerate(word):
        for l in range(lam):
            v0 = 0
            v1 = 0
            for j in range(lam):
                mj = minv[l][j]
                if mj:
                    v0 ^= F.mul(mj, coeff[2 * j])
                    v1 ^= F.mul(mj, coeff[2 * j + 1])
            xi0[l * N + i] = v0
            xi1[l * N + i] = v1
    return pr.normalize(xi0), pr.normalize(xi1)


# ----------------------------------------------------------------------
# GF(2)-flattened word space and echelon bases
# ----------------------------------------------------------------------

class BitSpace:
    """The word ring as a GF(2) vector space of dimension m * 2*lam * N,
    with the three multiplication operators in matrix form."""

    def __init__(self, params: Params) -> None:
        self.params = params
        self.m = params.m
        self.w = params.u_exp
        self.N = params.length
        self.dim = self.m * self.w * self.N
        ops = [
            self._linearize(lambda v: rp_mul_x(params, v)),
            self._linearize(lambda v: rp_mul_u(params, v)),
        ]
        if self.m > 1:
            ops.append(self._linearize(lambda v: rp_scale(params, v, 2)))
        self.ops = ops

    # bit layout: bit (i*w + t)*m + b  <=>  coefficient i, u-digit t, field bit b
    def to_bits(self, word: RPoly) -> int:
        acc = 0
        m, w = self.m, self.w
        for i, coeff in enumerate(word):
            base = i * w * m
            for t, dig in enumerate(coeff):
                if dig:
                    acc |= dig << (base + t * m)
        return acc

    def from_bits(self, v: int) -> RPoly:
        m, w = self.m, self.w
        mask = (1 << m) - 1
        out = []
        for i in range(self.N):
            base = i * w * m
            out.append(tuple((v >> (base + t * m)) & mask for t in range(w)))
        return tuple(out)

    def _linearize(self, fn) -> list[int]:
        return [self.to_bits(fn(self.from_bits(1 << b))) for b in range(self.dim)]

    def apply(self, op: list[int], v: int) -> int:
        res = 0
        while v:
            low = v & -v
            res ^= op[low.bit_length() - 1]
            v ^= low
        return res

    # -- reduced echelon bases ----------------------------------------

    @staticmethod
    def _insert(rows: dict[int, int], v: int) -> int:
        """Insert v into an RREF row dict; returns the reduced new row (0 if dependent)."""
        for lead, row in rows.items():
            if (v >> lead) & 1:
                v ^= row
        if not v:
            return 0
        lead = v.bit_length() - 1
        for l2 in rows:
            if (rows[l2] >> lead) & 1:
                rows[l2] ^= v
        rows[lead] = v
        return v

    def rref(self, vectors: Iterable[int]) -> tuple[int, ...]:
        rows: dict[int, int] = {}
        for v in vectors:
            self._insert(rows, v)
        return tuple(sorted(rows.values(), reverse=True))

    def closure(self, seeds: Iterable[int]) -> tuple[int, ...]:
        """RREF basis of the smallest operator-stable subspace containing seeds."""
        rows: dict[int, int] = {}
        stack = [v for v in seeds if v]
        ops = self.ops
        while stack:
            v = self._insert(rows, stack.pop())
            if v:
                for op in ops:
                    stack.append(self.apply(op, v))
        return tuple(sorted(rows.values(), reverse=True))

    def is_invariant(self, basis: tuple[int, ...]) -> bool:
        rows: dict[int, int] = {}
        for v in basis:
            self._insert(rows, v)
        for v in basis:
            for op in self.ops:
                w = self.apply(op, v)
                for lead, row in rows.items():
                    if (w >> lead) & 1:
                        w ^= row
                if w:
                    return False
        return True

    @staticmethod
    def span(basis: tuple[int, ...]) -> Iterator[int]:
        """All 2^rank vectors, by Gray-code walk."""
        yield 0
        v = 0
        for i in range(1, 1 << len(basis)):
            v ^= basis[(i & -i).bit_length() - 1]
            yield v


def bit_space(params: Params) -> BitSpace:
    tabs = _tables(params)
    if tabs["bitspace"] is None:
        tabs["bitspace"] = BitSpace(params)
    return tabs["bitspace"]


@dataclass(frozen=True)
class IdealSet:
    """An ideal of the word ring, identified by its RREF basis."""

    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def contains(self, v: int) -> bool:
        for row in self.basis:
            lead = row.bit_length() - 1
            if (v >> lead) & 1:
                v ^= row
        return v == 0


# ----------------------------------------------------------------------
# Enumerated codes, materialized
# ----------------------------------------------------------------------

def code_ambient_generators(
    params: Params,
    factor_data: FactorData,
    code: CodeDescriptor,
    ctxs: list[ChainCtx] | None = None,
) -> list[AmbientElem]:
    """Idempotent-scaled generators of a code on the plain side."""
    if ctxs is None:
        ctxs = chain_contexts(params, factor_data)
    F = params.field
    M = factor_data.modulus
    out = []
    for ent, ctx, desc in zip(factor_data.entries, ctxs, code.components):
        for g in descriptor_generators(params, ctx, desc):
            out.append(
                (
                    pr.p_mod(F, pr.p_mul(F, ent.idempotent, g[0]), M),
                    pr.p_mod(F, pr.p_mul(F, ent.idempotent, g[1]), M),
                )
            )
    return out


def code_bit_basis(
    params: Params,
    factor_data: FactorData,
    code: CodeDescriptor,
    ctxs: list[ChainCtx] | None = None,
) -> IdealSet:
    """RREF basis of the code in the flattened word space."""
    bs = bit_space(params)
    gens = code_ambient_generators(params, factor_data, code, ctxs)
    vecs = [bs.to_bits(psi_lift(params, g)) for g in gens]
    return IdealSet(bs.closure(vecs))


def materialize_code(
    params: Params,
    factor_data: FactorData,
    code: CodeDescriptor,
    ctxs: list[ChainCtx] | None = None,
    cap: int | None = None,
) -> set[RPoly]:
    """The full codeword set; refuses (never truncates) above the cap."""
    cap = materialization_cap() if cap is None else cap
    predicted = code_size(params, factor_data, code)
    if predicted > cap:
        raise ValueError(
            f"materialization of {predicted} codewords exceeds the cap of {cap}"
        )
    ideal = code_bit_basis(params, factor_data, code, ctxs)
    if ideal.size != predicted:
        raise ArithmeticError(
            f"materialized size 2^{ideal.dim} != predicted {predicted}"
        )
    bs = bit_space(params)
    return {bs.from_bits(v) for v in bs.span(ideal.basis)}


# ----------------------------------------------------------------------
# Brute-force ideal oracle
# ----------------------------------------------------------------------

def brute_force_ideals(params: Params, dim_cap: int | None = None) -> list[IdealSet]:
    """Every ideal of the word ring, found without the enumeration.

    Single-element closures give all principal ideals; pairwise sums
    close the family into the full ideal lattice (two generators always
    suffice, so the fixpoint is reached and verified).
    """
    cap = oracle_dim_cap() if dim_cap is None else dim_cap
    bs = bit_space(params)
    if bs.dim > cap:
        raise ValueError(
            f"oracle dimension {bs.dim} exceeds the cap of {cap}; "
            "raise CONSTACODES_ORACLE_DIM_CAP to override"
        )
    found: dict[tuple[int, ...], None] = {(): None}
    for v in range(1, 1 << bs.dim):
        found.setdefault(bs.closure((v,)), None)

    # Close under pairwise sums.
    while True:
        bases = list(found)
        added = False
        for i in range(len(bases)):
            for j in range(i + 1, len(bases)):
                merged = bs.rref(bases[i] + bases[j])
                if merged not in found:
                    found[merged] = None
                    added = True
        if not added:
            break
    return [IdealSet(b) for b in sorted(found, key=lambda b: (len(b), b))]


def recover_generators(params: Params, ideal: IdealSet, scan_limit: int = 1 << 16) -> list[int]:
    """A generating set of at most two elements, found greedily."""
    if not ideal.basis:
        return []
    bs = bit_space(params)
    closures = [(bs.closure((v,)), v) for v in ideal.basis]
    closures.sort(key=lambda cv: len(cv[0]), reverse=True)
    best_basis, best = closures[0]
    if best_basis == ideal.basis:
        return [best]
    for _, w in closures:
        if w != best and bs.closure((best, w)) == ideal.basis:
            return [best, w]
    scanned = 0
    for w in bs.span(ideal.basis):
        if w and bs.closure((best, w)) == ideal.basis:
            return [best, w]
        scanned += 1
        if scanned > scan_limit:
            break
    raise ArithmeticError("no two-element generating set found by greedy search")


# ----------------------------------------------------------------------
# Dual codes via raw orthogonality
# ----------------------------------------------------------------------

def _code_basis_from_words(params: Params, words: Iterable[RPoly]) -> tuple[int, ...]:
    bs = bit_space(params)
    return bs.rref(bs.to_bits(w) for w in words)


def dual_bit_basis(params: Params, code_basis: tuple[int, ...]) -> tuple[int, ...]:
    """RREF basis of the orthogonal complement under the R-valued form."""
    bs = bit_space(params)
    F = params.field
    m, w = params.m, params.u_exp
    unit_words = [bs.from_bits(1 << b) for b in range(bs.dim)]
    rows = []
    for bvec in code_basis:
        b_rp = bs.from_bits(bvec)
        per_bit = [inner_product(params, unit_words[b], b_rp) for b in range(bs.dim)]
        for t in range(w):
            for fb in range(m):
                row = 0
                for b in range(bs.dim):
                    if (per_bit[b][t] >> fb) & 1:
                        row |= 1 << b
                if row:
                    rows.append(row)
    kernel = _gf2_nullspace(rows, bs.dim)
    return bs.rref(kernel)


def _gf2_nullspace(rows: list[int], ncols: int) -> list[int]:
    pivots: dict[int, int] = {}
    for row in rows:
        for c, r in pivots.items():
            if (row >> c) & 1:
                row ^= r
        if row:
            c = row.bit_length() - 1
            for c2 in list(pivots):
                if (pivots[c2] >> c) & 1:
                    pivots[c2] ^= row
            pivots[c] = row
    kernel = []
    for c in range(ncols):
        if c in pivots:
            continue
        v = 1 << c
        for pc, prow in pivots.items():
            if (prow >> c) & 1:
                v |= 1 << pc
        kernel.append(v)
    return kernel


def dual_code(
    params: Params, codewords: Iterable[RPoly], cap: int | None = None
) -> set[RPoly]:
    """All words orthogonal to the given code, with the size law checked."""
    cap = materialization_cap() if cap is None else cap
    bs = bit_space(params)
    code_basis = _code_basis_from_words(params, codewords)
    dual_basis = dual_bit_basis(params, code_basis)
    if (1 << len(dual_basis)) > cap:
        raise ValueError("dual materialization exceeds the cap")
    if len(code_basis) + len(dual_basis) != bs.dim:
        raise ArithmeticError("duality size law |C|*|C_perp| = |R|^N failed")
    return {bs.from_bits(v) for v in bs.span(dual_basis)}


# ----------------------------------------------------------------------
# Generic rank-2 submodule census over a small chain ring (oracle)
# ----------------------------------------------------------------------

def brute_force_submodules(field: GF2m, e: int, cap: int = 1 << 14) -> set[frozenset]:
    """All submodules of K^2 for K = GF(q)[p]/<p^e>, by exhaustion.

    Elements of K are digit tuples of length e; the census collects
    every cyclic span and closes the family under pairwise sums.
    """
    q = field.order
    if q ** (2 * e) > cap:
        raise ValueError(f"submodule census over {q**(2*e)} vectors exceeds the cap")

    def k_mul(a, b):
        out = [0] * e
        for i, ai in enumerate(a):
            if ai:
                for j in range(e - i):
                    if b[j]:
                        out[i + j] ^= field.mul(ai, b[j])
        return tuple(out)

    elems = []
    for packed in range(q**e):
        elems.append(tuple((packed // q**i) % q for i in range(e)))

    def vadd(x, y):
        return (
            tuple(a ^ b for a, b in zip(x[0], y[0])),
            tuple(a ^ b for a, b in zip(x[1], y[1])),
        )

    subs: set[frozenset] = set()
    vectors = [(a, b) for a in elems for b in elems]
    for v in vectors:
        subs.add(frozenset((k_mul(c, v[0]), k_mul(c, v[1])) for c in elems))

    while True:
        fresh = set()
        sub_list = list(subs)
        for i in range(len(sub_list)):
            for j in range(i + 1, len(sub_list)):
                s = frozenset(vadd(x, y) for x in sub_list[i] for y in sub_list[j])
                if s not in subs:
                    fresh.add(s)
        if not fresh:
            return subs
        subs |= fresh
