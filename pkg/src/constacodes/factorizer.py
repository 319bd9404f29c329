"""Factor x^n + c (n odd, c nonzero) over GF(2^m) and build split data.

n odd makes x^n + c squarefree, so distinct-degree factorization
followed by equal-degree splitting yields pairwise distinct monic
irreducible factors.  Equal-degree splitting uses the absolute trace
map h + h^2 + h^4 + ... down to GF(2), the characteristic-2 substitute
for the odd-characteristic exponentiation split.

On top of the bare factor list, build_factor_data assembles for every
factor f_j of degree d_j:

  * the cofactor  C_j = (x^n + c) / f_j,
  * a Bezout pair (g_j, h_j) with  g_j*C_j^e + h_j*f_j^e = 1  where
    e = 2^k * lam,
  * the idempotent  eps_j = g_j * C_j^e  mod (x^n + c)^e.

The idempotent identities (sum = 1, eps_j^2 = eps_j, eps_j*eps_l = 0)
are verified exactly at construction time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gf2m import GF2m
from . import polyring as pr
from .polyring import Poly
from .params import Params

_DEFAULT_SEED = 0


def is_irreducible(F: GF2m, f: Poly) -> bool:
    """Rabin test over GF(2^m)."""
    d = pr.deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    q = F.order
    x = pr.P_X
    if pr.p_powmod(F, x, q**d, f) != pr.p_mod(F, x, f):
        return False
    dd = d
    primes = []
    p = 2
    while p * p <= dd:
        if dd % p == 0:
            primes.append(p)
            while dd % p == 0:
                dd //= p
        p += 1
    if dd > 1:
        primes.append(dd)
    for p in primes:
        h = pr.p_powmod(F, x, q ** (d // p), f)
        if pr.p_gcd(F, pr.p_add(F, h, x), f) != pr.P_ONE:
            return False
    return True


def _trace_split(F: GF2m, g: Poly, d: int, rng: random.Random) -> tuple[Poly, Poly]:
    """Split a product g of degree-d irreducibles into two proper parts."""
    bits = F.m * d
    while True:
        h = pr.normalize(rng.randrange(F.order) for _ in range(pr.deg(g)))
        if not h:
            continue
        tr = h
        acc = h
        for _ in range(bits - 1):
            acc = pr.p_mod(F, pr.p_mul(F, acc, acc), g)
            tr = pr.p_add(F, tr, acc)
        w = pr.p_gcd(F, tr, g) if tr else pr.P_ZERO
        if w and 0 < pr.deg(w) < pr.deg(g):
            return w, pr.p_divmod(F, g, w)[0]


def _equal_degree(F: GF2m, g: Poly, d: int, rng: random.Random) -> list[Poly]:
    if pr.deg(g) == d:
        return [g]
    w1, w2 = _trace_split(F, g, d, rng)
    return _equal_degree(F, w1, d, rng) + _equal_degree(F, w2, d, rng)


def factor_xn_delta(
    F: GF2m,
    n: int,
    delta0: int,
    rng: random.Random | None = None,
    verify: bool = True,
) -> list[tuple[Poly, int]]:
    """Distinct monic irreducible factors of x^n + delta0, with degrees.

    Output is sorted by (degree, coefficient tuple) so identical inputs
    give identical factor ordering across runs.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if delta0 == 0:
        raise ValueError("delta0 must be nonzero")
    target = pr.normalize((delta0,) + (0,) * (n - 1) + (1,))
    rng = rng if rng is not None else random.Random(_DEFAULT_SEED)

    factors: list[Poly] = []
    rem = target
    frob = pr.p_mod(F, pr.P_X, rem)  # x^(q^d) mod rem, advanced per degree
    d = 0
    while pr.deg(rem) > 0:
        d += 1
        if 2 * d > pr.deg(rem):
            factors.append(pr.monic(F, rem))
            break
        frob = pr.p_powmod(F, frob, F.order, rem)
        g = pr.p_gcd(F, pr.p_add(F, frob, pr.P_X), rem)
        if pr.deg(g) > 0:
            factors.extend(_equal_degree(F, g, d, rng))
            rem = pr.p_divmod(F, rem, g)[0]
            frob = pr.p_mod(F, frob, rem)

    factors.sort(key=lambda f: (pr.deg(f), f))
    if verify:
        prod = pr.P_ONE
        for f in factors:
            if not is_irreducible(F, f):
                raise ArithmeticError(f"factor {f} failed the irreducibility test")
            prod = pr.p_mul(F, prod, f)
        if prod != target:
            raise ArithmeticError("factor product does not reassemble the input")
    return [(f, pr.deg(f)) for f in factors]


@dataclass(frozen=True)
class FactorEntry:
    f: Poly
    degree: int
    cofactor: Poly
    bezout_g: Poly
    bezout_h: Poly
    idempotent: Poly


@dataclass(frozen=True)
class FactorData:
    base: Poly          # x^n + delta_root
    modulus: Poly       # base^(2^k * lam)
    entries: tuple[FactorEntry, ...]

    @property
    def r(self) -> int:
        return len(self.entries)


def build_factor_data(params: Params, rng: random.Random | None = None) -> FactorData:
    """Factor the core polynomial and assemble cofactor/Bezout/idempotent data."""
    F = params.field
    e = params.nilpotency
    base = params.base_poly
    modulus = params.a_modulus
    factors = factor_xn_delta(F, params.n, params.delta_root, rng=rng)

    entries = []
    for f, d in factors:
        cof = pr.p_divmod(F, base, f)[0]
        f_e = pr.p_pow(F, f, e)
        cof_e = pr.p_pow(F, cof, e)
        g0, s, t = pr.p_xgcd(F, cof_e, f_e)
        if g0 != pr.P_ONE:
            raise ArithmeticError("factor powers are not coprime; factorization is broken")
        eps = pr.p_mod(F, pr.p_mul(F, s, cof_e), modulus)
        entries.append(FactorEntry(f, d, cof, s, t, eps))

    data = FactorData(base=base, modulus=modulus, entries=tuple(entries))
    _verify_idempotents(F, data)
    return data


def _verify_idempotents(F: GF2m, data: FactorData) -> None:
    M = data.modulus
    total = pr.P_ZERO
    for i, ent in enumerate(data.entries):
        # Bezout identity holds exactly in the polynomial ring.
        e_pow = pr.deg(M) // pr.deg(data.base)
        lhs = pr.p_add(
            F,
            pr.p_mul(F, ent.bezout_g, pr.p_pow(F, ent.cofactor, e_pow)),
            pr.p_mul(F, ent.bezout_h, pr.p_pow(F, ent.f, e_pow)),
        )
        if lhs != pr.P_ONE:
            raise ArithmeticError(f"Bezout identity failed for factor {i}")
        sq = pr.p_mod(F, pr.p_mul(F, ent.idempotent, ent.idempotent), M)
        if sq != ent.idempotent:
            raise ArithmeticError(f"idempotent {i} is not idempotent")
        total = pr.p_add(F, total, ent.idempotent)
        for jj in range(i):
            cross = pr.p_mod(
                F, pr.p_mul(F, ent.idempotent, data.entries[jj].idempotent), M
            )
            if cross != pr.P_ZERO:
                raise ArithmeticError(f"idempotents {jj} and {i} are not orthogonal")
    if pr.p_mod(F, total, M) != pr.P_ONE:
        raise ArithmeticError("idempotents do not sum to 1")
