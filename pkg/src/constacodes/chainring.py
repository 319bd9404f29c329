"""Arithmetic in the chain ring K = GF(2^m)[x]/<f^e> and its u-extension.

f is monic irreducible of degree d and e is the nilpotency exponent, so
K is a finite chain ring: its ideals are exactly <f^l> for 0 <= l <= e.
Every element has a unique f-adic digit expansion with digits of degree
below d, and is a unit iff digit 0 is nonzero.  Elements are reduced
polynomials (tuples); a rank-2 module vector is a pair of them.

The u-extension K + uK multiplies by the rule

    (a0 + u*a1)(b0 + u*b1) = (a0*b0 + U*a1*b1) + u*(a0*b1 + a1*b0)

where U = u^2 = w^2 * f^(2^k) for the context's unit w.

canonical_module_form reduces any generating set of a K-submodule of
K^2 to a Howell-style normal form: two generator sets span the same
submodule iff their forms are equal.  The form consists of at most two
rows,

    (f^t0, a)   with a reduced mod f^t1,    and    (0, f^t1),

where <f^t0> is the projection of the module to the first coordinate
and <f^t1> is the ideal of second coordinates paired with 0.  Both
rows are intrinsic to the module, which is what makes the form
canonical; rows with pivot exponent e (i.e. zero) are omitted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2m import GF2m
from . import polyring as pr
from .polyring import Poly
from .params import Params

Vec2 = tuple[Poly, Poly]


@dataclass(frozen=True)
class ChainCtx:
    field: GF2m
    f: Poly
    d: int
    e: int
    modulus: Poly                 # f^e
    f_pows: tuple[Poly, ...]      # f^0 .. f^e
    k: int | None = None          # present when built for a u-extension
    u2_unit: Poly | None = None   # the unit w with u^2 = w^2 * f^(2^k)
    u_squared: Poly | None = None

    @property
    def q(self) -> int:
        """Residue field size 2^(m*d)."""
        return 1 << (self.field.m * self.d)


def make_plain_ctx(field: GF2m, f: Poly, e: int) -> ChainCtx:
    """Chain ring context without the u-extension (no unit attached)."""
    d = pr.deg(f)
    if d < 1:
        raise ValueError("f must be nonconstant")
    if e < 1:
        raise ValueError("e must be >= 1")
    pows = [pr.P_ONE]
    for _ in range(e):
        pows.append(pr.p_mul(field, pows[-1], f))
    return ChainCtx(field=field, f=f, d=d, e=e, modulus=pows[e], f_pows=tuple(pows))


def make_chain_ctx(params: Params, f: Poly, cofactor: Poly) -> ChainCtx:
    """Context for one irreducible factor f of the core polynomial.

    Attaches the unit w = alpha_root * cofactor^(2^(k-1)) and checks
    the defining congruence

        w^2 * f^(2^k)  ==  alpha^(-1) * (x^n + delta_root)^(2^k)

    modulo f^e.  A failure here means the factor data upstream is
    inconsistent.
    """
    F = params.field
    e = params.nilpotency
    base = make_plain_ctx(F, f, e)
    w = pr.p_powmod(F, cofactor, 1 << (params.k - 1), base.modulus)
    w = pr.p_mod(F, pr.p_scale(F, w, params.alpha_root), base.modulus)
    if pi_degree(base, w) != 0:
        raise ArithmeticError("u^2 unit is not invertible; cofactor shares a root with f")
    u2 = pr.p_mod(
        F, pr.p_mul(F, pr.p_mul(F, w, w), base.f_pows[1 << params.k]), base.modulus
    )
    expect = pr.p_mod(F, params.u_squared_poly, base.modulus)
    if u2 != expect:
        raise ArithmeticError("u^2 congruence failed; upstream factorization is broken")
    return ChainCtx(
        field=F,
        f=f,
        d=base.d,
        e=e,
        modulus=base.modulus,
        f_pows=base.f_pows,
        k=params.k,
        u2_unit=w,
        u_squared=u2,
    )


# ----------------------------------------------------------------------
# Element operations
# ----------------------------------------------------------------------

def c_reduce(ctx: ChainCtx, a: Poly) -> Poly:
    return pr.p_mod(ctx.field, a, ctx.modulus)


def c_add(ctx: ChainCtx, a: Poly, b: Poly) -> Poly:
    return pr.p_add(ctx.field, a, b)


def c_mul(ctx: ChainCtx, a: Poly, b: Poly) -> Poly:
    return pr.p_mod(ctx.field, pr.p_mul(ctx.field, a, b), ctx.modulus)


def c_pow(ctx: ChainCtx, a: Poly, e: int) -> Poly:
    return pr.p_powmod(ctx.field, a, e, ctx.modulus)


def c_inv(ctx: ChainCtx, a: Poly) -> Poly:
    """Inverse of a unit, via the extended gcd with f^e."""
    if pi_degree(ctx, a) != 0:
        raise ZeroDivisionError("element is not a unit (digit 0 vanishes)")
    g, s, _ = pr.p_xgcd(ctx.field, a, ctx.modulus)
    if g != pr.P_ONE:
        raise ZeroDivisionError("element is not a unit")
    return c_reduce(ctx, s)


def adic_digits(ctx: ChainCtx, a: Poly) -> tuple[Poly, ...]:
    """The unique digits b_i (deg < d) with a = sum b_i * f^i, i < e."""
    digits = []
    rem = a
    for _ in range(ctx.e):
        rem, digit = pr.p_divmod(ctx.field, rem, ctx.f)
        digits.append(digit)
    return tuple(digits)


def adic_compose(ctx: ChainCtx, digits) -> Poly:
    acc = pr.P_ZERO
    for digit in reversed(list(digits)):
        acc = pr.p_add(ctx.field, pr.p_mul(ctx.field, acc, ctx.f), digit)
    return acc


def pi_degree(ctx: ChainCtx, a: Poly) -> int:
    """Index of the first nonzero f-adic digit; e for the zero element."""
    if not a:
        return ctx.e
    t = 0
    while True:
        q, rem = pr.p_divmod(ctx.field, a, ctx.f)
        if rem:
            return t
        a = q
        t += 1


def unit_part(ctx: ChainCtx, a: Poly) -> tuple[int, Poly]:
    """Write a = f^t * w exactly (w a unit); returns (e, zero) for a = 0."""
    if not a:
        return ctx.e, pr.P_ZERO
    t = 0
    while True:
        q, rem = pr.p_divmod(ctx.field, a, ctx.f)
        if rem:
            return t, a
        a = q
        t += 1


# ----------------------------------------------------------------------
# The u-extension K + uK; elements are pairs (a0, a1) meaning a0 + u*a1.
# ----------------------------------------------------------------------

def ext_add(ctx: ChainCtx, a: Vec2, b: Vec2) -> Vec2:
    F = ctx.field
    return pr.p_add(F, a[0], b[0]), pr.p_add(F, a[1], b[1])


def ext_mul(ctx: ChainCtx, a: Vec2, b: Vec2) -> Vec2:
    if ctx.u_squared is None:
        raise ValueError("context carries no u-extension")
    F = ctx.field
    lo = c_add(
        ctx,
        c_mul(ctx, a[0], b[0]),
        c_mul(ctx, ctx.u_squared, c_mul(ctx, a[1], b[1])),
    )
    hi = c_add(ctx, c_mul(ctx, a[0], b[1]), c_mul(ctx, a[1], b[0]))
    return lo, hi


def mul_by_u_action(ctx: ChainCtx, v: Vec2) -> Vec2:
    """Image of a module vector under multiplication of the ideal by u.

    Reading (a0, a1) as the ring element a0 + u*a1, multiplying by u
    gives u^2*a1 + u*a0, i.e. the vector (u^2 * a1, a0).
    """
    if ctx.u_squared is None:
        raise ValueError("context carries no u-extension")
    return c_mul(ctx, ctx.u_squared, v[1]), v[0]


# ----------------------------------------------------------------------
# Canonical forms for K-submodules of K^2
# ----------------------------------------------------------------------

CanonForm = tuple[Vec2, ...]


def canonical_module_form(ctx: ChainCtx, gens) -> CanonForm:
    """Howell-style normal form identifying the K-span of gens in K^2."""
    rows = [(g[0], g[1]) for g in gens if g[0] or g[1]]
    if not rows:
        return ()
    F = ctx.field
    e = ctx.e

    # Pivot for column 0: smallest pi-degree among first coordinates.
    t0 = min(pi_degree(ctx, g[0]) for g in rows)
    second_gens: list[Poly] = []
    lead: Vec2 | None = None
    if t0 < e:
        gsel = next(g for g in rows if pi_degree(ctx, g[0]) == t0)
        w = pr.p_divmod(F, gsel[0], ctx.f_pows[t0])[0]  # exact, w a unit
        winv = c_inv(ctx, w)
        lead = (ctx.f_pows[t0], c_mul(ctx, winv, gsel[1]))
        for g in rows:
            if g is gsel:
                continue
            qfac = pr.p_divmod(F, g[0], ctx.f_pows[t0])[0]  # exact by minimality of t0
            second_gens.append(c_add(ctx, g[1], c_mul(ctx, qfac, lead[1])))
        # u-multiples of lead that kill the first coordinate.
        second_gens.append(c_mul(ctx, ctx.f_pows[e - t0], lead[1]))
    else:
        second_gens.extend(g[1] for g in rows)

    t1 = min((pi_degree(ctx, b) for b in second_gens), default=e)
    out: list[Vec2] = []
    if lead is not None:
        out.append((ctx.f_pows[t0], pr.p_mod(F, lead[1], ctx.f_pows[t1])))
    if t1 < e:
        out.append((pr.P_ZERO, ctx.f_pows[t1]))
    return tuple(out)


def form_pivot_exponents(ctx: ChainCtx, form: CanonForm) -> tuple[int, int]:
    """(t0, t1) pivot exponents of a canonical form; absent rows give e."""
    t0 = t1 = ctx.e
    for row in form:
        if row[0]:
            t0 = pi_degree(ctx, row[0])
        else:
            t1 = pi_degree(ctx, row[1])
    return t0, t1


def module_size(ctx: ChainCtx, form: CanonForm) -> int:
    """Number of elements of the module with the given canonical form."""
    t0, t1 = form_pivot_exponents(ctx, form)
    return ctx.q ** ((ctx.e - t0) + (ctx.e - t1))


def module_contains(ctx: ChainCtx, form: CanonForm, v: Vec2) -> bool:
    F = ctx.field
    t0, t1 = form_pivot_exponents(ctx, form)
    a0, a1 = v
    if pi_degree(ctx, a0) < t0:
        return False
    rem = a1
    if a0:
        qfac = pr.p_divmod(F, a0, ctx.f_pows[t0])[0]
        lead = next(row for row in form if row[0])
        rem = c_add(ctx, a1, c_mul(ctx, qfac, lead[1]))
    return pi_degree(ctx, rem) >= t1


def spans_same_module(ctx: ChainCtx, gens_a, gens_b) -> bool:
    return canonical_module_form(ctx, gens_a) == canonical_module_form(ctx, gens_b)


def satisfies_u_closure(ctx: ChainCtx, gens) -> bool:
    """Whether the K-span of gens is stable under the u-action.

    Stability is exactly the condition for the span, read through
    (a0, a1) -> a0 + u*a1, to be an ideal of K + uK.
    """
    gens = list(gens)
    form = canonical_module_form(ctx, gens)
    extended = gens + [mul_by_u_action(ctx, g) for g in gens]
    return canonical_module_form(ctx, extended) == form


def materialize_submodule(ctx: ChainCtx, gens, cap: int = 1 << 20) -> frozenset:
    """All elements of the K-span of up to two generators.

    Brute force independent of canonical_module_form, for use as its
    correctness oracle: the span is computed as {c1*g1 + c2*g2} over
    all scalars, never through the normal form.
    """
    gens = [g for g in gens if g[0] or g[1]]
    if len(gens) > 2:
        raise ValueError("materialize_submodule handles at most two generators")
    size_k = ctx.q ** ctx.e
    work = size_k if len(gens) < 2 else size_k * size_k
    if work > cap:
        raise ValueError("submodule materialization would exceed the cap")
    scalars = _all_ring_elements(ctx)
    if not gens:
        return frozenset({(pr.P_ZERO, pr.P_ZERO)})
    tables = []
    for g in gens:
        tables.append([(c_mul(ctx, c, g[0]), c_mul(ctx, c, g[1])) for c in scalars])
    if len(tables) == 1:
        return frozenset(tables[0])
    F = ctx.field
    out = set()
    for v0, v1 in tables[0]:
        for w0, w1 in tables[1]:
            out.add((pr.p_add(F, v0, w0), pr.p_add(F, v1, w1)))
    return frozenset(out)


def enumerate_all_submodules(ctx: ChainCtx):
    """Every K-submodule of K^2, one canonical form each.

    Modules correspond bijectively to triples (t0, t1, a): pivot
    exponent t0 of the first-column projection, pivot exponent t1 of
    the second-column kernel, and a second coordinate a reduced mod
    f^t1, subject to t1 <= e - t0 + pi_degree(a).  Iterating the
    triples therefore walks the full submodule lattice without any
    spanning computation.
    """
    e = ctx.e
    for t0 in range(e + 1):
        for t1 in range(e + 1):
            if t0 == e:
                if t1 <= e:
                    rows = []
                    if t1 < e:
                        rows.append((pr.P_ZERO, ctx.f_pows[t1]))
                    yield tuple(rows)
                continue
            for a in _residues(ctx, t1):
                if a and t1 > e - t0 + pi_degree(ctx, a):
                    continue
                rows = [(ctx.f_pows[t0], a)]
                if t1 < e:
                    rows.append((pr.P_ZERO, ctx.f_pows[t1]))
                yield tuple(rows)


def _residues(ctx: ChainCtx, ell: int):
    """All residues mod f^ell, by packed coefficient value."""
    if ell <= 0:
        yield pr.P_ZERO
        return
    m = ctx.field.m
    mask = ctx.field.order - 1
    nco = ctx.d * ell
    for packed in range(1 << (m * nco)):
        yield pr.normalize(((packed >> (m * i)) & mask) for i in range(nco))


def _all_ring_elements(ctx: ChainCtx) -> list[Poly]:
    """Every element of K, ordered by packed coefficient value."""
    m = ctx.field.m
    nco = ctx.d * ctx.e
    out = []
    for packed in range(1 << (m * nco)):
        coeffs = [(packed >> (m * i)) & (ctx.field.order - 1) for i in range(nco)]
        out.append(pr.normalize(coeffs))
    return out
