import itertools
import random

import pytest

from constacodes.gf2m import GF2m
from constacodes import ambient as amb
from constacodes import enumerator as en
from constacodes import polyring as pr
from constacodes.params import Params


def rand_amb(params, rng):
    width = params.lam * params.length
    return (
        pr.normalize(rng.randrange(params.field.order) for _ in range(width)),
        pr.normalize(rng.randrange(params.field.order) for _ in range(width)),
    )


# ----------------------------------------------------------------------
# The structure map
# ----------------------------------------------------------------------

def test_lift_of_one(p1122):
    assert amb.psi_lift(p1122, ((1,), ())) == amb.rp_one(p1122)


def test_lift_core_fourth_power_is_alpha_u_squared():
    # Psi((x + d0)^4) = alpha * u^2 at k=2, n=1, any m, delta, alpha
    for m, delta, alpha in [(1, 1, 1), (2, 2, 3), (3, 5, 2)]:
        p = Params(m, 1, 2, 2, delta, alpha)
        f4 = pr.p_pow(p.field, p.base_poly, 4)
        got = amb.psi_lift(p, (f4, ()))
        want = list(amb.rp_zero(p))
        want[0] = tuple(alpha if i == 2 else 0 for i in range(p.u_exp))
        assert got == tuple(want)


def test_inverse_of_u_squared(p1122):
    word = list(amb.rp_zero(p1122))
    word[0] = (0, 0, 1, 0)
    xi = amb.psi_inverse(p1122, tuple(word))
    assert xi == (p1122.u_squared_poly, ())
    assert amb.psi_inverse(p1122, amb.rp_zero(p1122)) == ((), ())


@pytest.mark.parametrize("mp", [(1, 1), (1, 3), (2, 1)])
def test_roundtrip_random(mp):
    m, n = mp
    p = Params(m, n, 2, 2, 1, 1)
    rng = random.Random(17)
    for _ in range(1000):
        a = rand_amb(p, rng)
        assert amb.psi_inverse(p, amb.psi_lift(p, a)) == a
    rp = amb.rp_one(p)
    assert amb.psi_lift(p, amb.psi_inverse(p, rp)) == rp


@pytest.mark.parametrize("mp", [(1, 1), (1, 3)])
def test_ring_isomorphism_random(mp):
    m, n = mp
    p = Params(m, n, 2, 2, 1, 1)
    rng = random.Random(23)
    for _ in range(1000):
        a = rand_amb(p, rng)
        b = rand_amb(p, rng)
        assert amb.psi_lift(p, amb.amb_add(p, a, b)) == amb.rp_add(
            amb.psi_lift(p, a), amb.psi_lift(p, b)
        )
        assert amb.psi_lift(p, amb.amb_mul(p, a, b)) == amb.rp_mul(
            p, amb.psi_lift(p, a), amb.psi_lift(p, b)
        )


@pytest.mark.parametrize("mp", [(1, 1), (1, 3), (2, 3)])
def test_core_power_images(mp):
    # Psi((x^n+d0)^(i + l*2^k)) = alpha^l * u^(2l) * (x^n+d0)^i: the lift
    # sends the 2^k-th power of the core polynomial to alpha*u^2, and is
    # multiplicative.  (At n=1 the step 2^k coincides with the word length.)
    m, n = mp
    p = Params(m, n, 2, 2, 1, 1)
    F = p.field
    N = p.length
    step = 1 << p.k
    rng = random.Random(29)
    base_word = amb.rp_from_poly(p, p.base_poly)
    samples = [(i, l) for i in range(N) for l in range(p.lam)]
    for i, l in rng.sample(samples, min(12, len(samples))):
        lhs_poly = pr.p_mod(F, pr.p_pow(F, p.base_poly, i + l * step), p.a_modulus)
        lhs = amb.psi_lift(p, (lhs_poly, ()))
        rhs = amb.rp_pow(p, base_word, i)
        for _ in range(2 * l):
            rhs = amb.rp_mul_u(p, rhs)
        rhs = amb.rp_scale(p, rhs, F.pow(p.alpha, l))
        assert lhs == rhs


def test_roundtrip_and_hom_wider_u_space():
    # lam=3: six u-digits per coefficient
    p = Params(1, 1, 2, 3, 1, 1)
    rng = random.Random(19)
    for _ in range(300):
        a, b = rand_amb(p, rng), rand_amb(p, rng)
        la, lb = amb.psi_lift(p, a), amb.psi_lift(p, b)
        assert amb.psi_inverse(p, la) == a
        assert amb.psi_lift(p, amb.amb_mul(p, a, b)) == amb.rp_mul(p, la, lb)


def test_dual_rank_law_multifactor(p1322, fd1322, ctxs1322):
    # no materialization at dimension 48: rank of code + rank of dual = 48
    bs = amb.bit_space(p1322)
    rng = random.Random(61)
    codes = list(itertools.islice(en.enumerate_codes(p1322, fd1322, ctxs1322), 2000))
    for code in rng.sample(codes, 8):
        basis = amb.code_bit_basis(p1322, fd1322, code, ctxs1322).basis
        dual = amb.dual_bit_basis(p1322, basis)
        assert len(basis) + len(dual) == bs.dim
        # orthogonality of a sampled pair
        w = bs.from_bits(dual[0]) if dual else amb.rp_zero(p1322)
        c = bs.from_bits(basis[0]) if basis else amb.rp_zero(p1322)
        assert amb.inner_product(p1322, w, c) == (0,) * p1322.u_exp


def test_constacyclic_shift_is_mul_x(p1122):
    rng = random.Random(31)
    for _ in range(100):
        a = rand_amb(p1122, rng)
        w = amb.psi_lift(p1122, a)
        assert amb.constacyclic_shift(p1122, w) == amb.rp_mul_x(p1122, w)
    # the shift rotates with the gamma twist on the wrapped coefficient
    w = amb.rp_one(p1122)
    for _ in range(p1122.length):
        w = amb.constacyclic_shift(p1122, w)
    # x^N = gamma = delta + alpha*u^2
    expect = list(amb.rp_zero(p1122))
    expect[0] = (1, 0, 1, 0)
    assert w == tuple(expect)


# ----------------------------------------------------------------------
# Materialization
# ----------------------------------------------------------------------

def test_materialize_zero_and_full(p1122, fd1122):
    e = p1122.nilpotency
    zero = en.CodeDescriptor((en.IdealDescriptor(1, 3, e),))
    full = en.CodeDescriptor((en.IdealDescriptor(1, 3, 0),))
    assert amb.materialize_code(p1122, fd1122, zero) == {amb.rp_zero(p1122)}
    words = amb.materialize_code(p1122, fd1122, full)
    assert len(words) == 1 << 16


def test_materialize_family4_row(p1122, fd1122):
    code = en.CodeDescriptor((en.IdealDescriptor(1, 4, 0, 1),))
    words = amb.materialize_code(p1122, fd1122, code)
    assert len(words) == 1 << 15


def test_materialize_cap_refusal(p1122, fd1122):
    full = en.CodeDescriptor((en.IdealDescriptor(1, 3, 0),))
    with pytest.raises(ValueError):
        amb.materialize_code(p1122, fd1122, full, cap=1 << 10)


def test_materialized_codes_are_shift_closed(p1122, fd1122, ctx1122):
    rng = random.Random(37)
    descs = list(en.enumerate_ideals(p1122, ctx1122, 1))
    for d in rng.sample(descs, 12):
        words = amb.materialize_code(p1122, fd1122, en.CodeDescriptor((d,)))
        sample = rng.sample(sorted(words), min(20, len(words)))
        for w in sample:
            assert amb.constacyclic_shift(p1122, w) in words
            assert amb.rp_mul_u(p1122, w) in words


def test_code_bit_basis_rank_matches_size_multifactor(p1322, fd1322, ctxs1322):
    rng = random.Random(41)
    codes = list(itertools.islice(en.enumerate_codes(p1322, fd1322, ctxs1322), 3000))
    for code in rng.sample(codes, 25):
        ideal = amb.code_bit_basis(p1322, fd1322, code, ctxs1322)
        assert ideal.size == en.code_size(p1322, fd1322, code)
        bs = amb.bit_space(p1322)
        assert bs.is_invariant(ideal.basis)


def test_two_combined_generators_generate(p1322, fd1322, ctxs1322):
    bs = amb.bit_space(p1322)
    rng = random.Random(43)
    codes = list(itertools.islice(en.enumerate_codes(p1322, fd1322, ctxs1322), 3000))
    for code in rng.sample(codes, 15):
        gens = en.code_generators(p1322, fd1322, code, ctxs1322)
        assert len(gens) <= 2
        vecs = [bs.to_bits(amb.psi_lift(p1322, g)) for g in gens]
        assert bs.closure(vecs) == amb.code_bit_basis(p1322, fd1322, code, ctxs1322).basis


# ----------------------------------------------------------------------
# Brute-force ideal oracle
# ----------------------------------------------------------------------

@pytest.fixture(scope="module")
def oracle_135(p1122):
    return amb.brute_force_ideals(p1122)


def test_oracle_finds_135(oracle_135):
    assert len(oracle_135) == 135


def test_oracle_has_zero_and_unit(p1122, oracle_135):
    dims = {i.dim for i in oracle_135}
    assert 0 in dims and 16 in dims
    assert sum(1 for i in oracle_135 if i.dim == 0) == 1
    assert sum(1 for i in oracle_135 if i.dim == 16) == 1


def test_oracle_sum_closed(p1122, oracle_135):
    bs = amb.bit_space(p1122)
    bases = [i.basis for i in oracle_135]
    found = set(bases)
    rng = random.Random(47)
    for _ in range(300):
        a, b = rng.sample(bases, 2)
        assert bs.rref(a + b) in found


def test_oracle_equals_enumeration(p1122, fd1122, ctx1122, oracle_135):
    enum_bases = {
        amb.code_bit_basis(p1122, fd1122, en.CodeDescriptor((d,))).basis
        for d in en.enumerate_ideals(p1122, ctx1122, 1)
    }
    assert enum_bases == {i.basis for i in oracle_135}


def test_oracle_invariance(p1122, oracle_135):
    bs = amb.bit_space(p1122)
    for ideal in oracle_135:
        assert bs.is_invariant(ideal.basis)


def test_oracle_dim_cap(p1322):
    with pytest.raises(ValueError):
        amb.brute_force_ideals(p1322)  # dimension 48 > 16


def test_recover_generators(p1122, oracle_135):
    bs = amb.bit_space(p1122)
    rng = random.Random(53)
    for ideal in rng.sample(oracle_135, 25):
        gens = amb.recover_generators(p1122, ideal)
        assert len(gens) <= 2
        assert bs.closure(gens) == ideal.basis


# ----------------------------------------------------------------------
# Dual codes
# ----------------------------------------------------------------------

def test_dual_of_zero_is_full(p1122, fd1122):
    zero = {amb.rp_zero(p1122)}
    dual = amb.dual_code(p1122, zero)
    assert len(dual) == 1 << 16


def test_dual_size_law(p1122, fd1122, ctx1122):
    rng = random.Random(59)
    descs = list(en.enumerate_ideals(p1122, ctx1122, 1))
    for d in rng.sample(descs, 10):
        code = amb.materialize_code(p1122, fd1122, en.CodeDescriptor((d,)))
        dual = amb.dual_code(p1122, code)
        assert len(code) * len(dual) == 1 << 16
        w = next(iter(dual))
        assert all(
            amb.inner_product(p1122, w, c) == (0,) * p1122.u_exp for c in code
        )


def test_u_squared_ideal_is_self_dual(p1122, fd1122):
    code = amb.materialize_code(
        p1122, fd1122, en.CodeDescriptor((en.IdealDescriptor(1, 3, 4),))
    )
    assert amb.dual_code(p1122, code) == code


def test_exactly_11_self_dual(p1122, oracle_135):
    count = sum(
        1 for i in oracle_135 if amb.dual_bit_basis(p1122, i.basis) == i.basis
    )
    assert count == 11


def test_self_dual_list_verified_at_m2():
    from constacodes.factorizer import build_factor_data

    p = Params(2, 1, 2, 2, 1, 1)
    fd = build_factor_data(p)
    ctxs = en.chain_contexts(p, fd)
    codes = en.list_self_dual_length4(p)
    assert len(codes) == 37
    for code in codes:
        basis = amb.code_bit_basis(p, fd, code, ctxs).basis
        assert amb.dual_bit_basis(p, basis) == basis


# ----------------------------------------------------------------------
# Submodule census
# ----------------------------------------------------------------------

def test_census_small():
    subs = amb.brute_force_submodules(GF2m(1), 1)
    assert len(subs) == 5  # {0}, three lines, the plane
    assert len(amb.brute_force_submodules(GF2m(1), 2)) == 15
    assert len(amb.brute_force_submodules(GF2m(2), 2)) == 33


def test_census_cap():
    with pytest.raises(ValueError):
        amb.brute_force_submodules(GF2m(2), 4, cap=1 << 10)
