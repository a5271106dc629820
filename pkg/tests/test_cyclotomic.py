import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucasian.cyclotomic import (
    CycResidue,
    GaloisElement,
    NotInvertible,
    NotRational,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    cyc_pow_group_ring,
    galois_apply,
    galois_group,
    norm,
    rational_part,
    trace,
)
from lucasian.modnum import SpecialForm
from lucasian.seeds import PI1_COEFFS, PI2_COEFFS, PiConstants, unit_ratio

M6143 = SpecialForm(3, 11, -1)
FORMS = [SpecialForm(3, 11, -1), SpecialForm(1, 17, -1), SpecialForm(103, 40, 1), SpecialForm(5, 14, 1)]


def schoolbook(a, b, d, M):
    """Polynomial product reduced by repeatedly substituting x^d = -1."""
    prod = [0] * (2 * d)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    while len(prod) > d:
        top = prod.pop()
        prod[len(prod) - d] -= top
    return tuple(c % M for c in prod)


def rand_elem(rng, m, form):
    return CycResidue.from_ints(m, [rng.randrange(form.value) for _ in range(m // 2)], form)


elements = st.builds(
    lambda form, m, seed: rand_elem(random.Random(seed), m, form),
    st.sampled_from(FORMS), st.sampled_from([8, 16]), st.integers(0, 2**32),
)


def test_identity_and_zeta_wrap():
    a = CycResidue.from_ints(8, [5, 6, 7, 8], M6143)
    one = CycResidue.constant(8, 1, M6143)
    assert a * one == a
    z1 = CycResidue.zeta_power(8, 1, M6143)
    z3 = CycResidue.zeta_power(8, 3, M6143)
    assert (z1 * z3).coeffs == (6142, 0, 0, 0)


@pytest.mark.parametrize("form", FORMS, ids=str)
@pytest.mark.parametrize("m", [8, 16])
def test_mul_matches_schoolbook(form, m):
    rng = random.Random(form.value + m)
    for _ in range(500):
        a, b = rand_elem(rng, m, form), rand_elem(rng, m, form)
        assert cyc_mul(a, b).coeffs == schoolbook(a.coeffs, b.coeffs, m // 2, form.value)


@pytest.mark.parametrize("form", FORMS, ids=str)
def test_pi_norms_are_17(form):
    pis = PiConstants.for_modulus(form)
    assert norm(pis.pi1).value == 17
    assert norm(pis.pi2).value == 17 % form.value


def test_conjugation_example():
    a = CycResidue.from_ints(8, PI1_COEFFS, M6143)
    assert cyc_conj(a).coeffs == (1, 6141, 0, 0)
    assert galois_apply(GaloisElement(8, -1), a) == cyc_conj(a)


def test_sigma_identity_and_order_two():
    rng = random.Random(3)
    a = rand_elem(rng, 8, M6143)
    s3 = GaloisElement(8, 3)
    assert galois_apply(GaloisElement(8, 1), a) == a
    assert galois_apply(s3, galois_apply(s3, a)) == a
    assert (s3 * s3).c == 1


def test_group_law_composition():
    rng = random.Random(4)
    a = rand_elem(rng, 16, M6143)
    for s in galois_group(16):
        for t in galois_group(16):
            assert galois_apply(s, galois_apply(t, a)) == galois_apply(s * t, a)
    # sigma_5 = conj o sigma_-5
    s5 = galois_apply(GaloisElement(16, 5), a)
    assert s5 == cyc_conj(galois_apply(GaloisElement(16, -5), a))


def test_galois_rejects_even_label():
    with pytest.raises(ValueError):
        GaloisElement(8, 2)


@settings(max_examples=100)
@given(st.data())
def test_galois_is_ring_homomorphism(data):
    a = data.draw(elements)
    b = CycResidue.from_ints(a.m, data.draw(st.lists(st.integers(0, 10**30), min_size=a.m // 2, max_size=a.m // 2)), a.modulus)
    s = GaloisElement(a.m, data.draw(st.sampled_from(range(1, a.m, 2))))
    assert galois_apply(s, a * b) == galois_apply(s, a) * galois_apply(s, b)
    assert galois_apply(s, a + b) == galois_apply(s, a) + galois_apply(s, b)


@settings(max_examples=60)
@given(elements)
def test_orbit_sum_and_product_are_rational(a):
    trace(a)
    norm(a)


def test_rational_part():
    assert rational_part(CycResidue.constant(8, 5, M6143)).value == 5
    with pytest.raises(NotRational):
        rational_part(CycResidue.from_ints(8, [1, 1, 0, 0], M6143))


def test_inverse():
    one = CycResidue.constant(8, 1, M6143)
    assert cyc_inv(one) == one
    pi1 = CycResidue.from_ints(8, PI1_COEFFS, M6143)
    assert pi1 * cyc_inv(pi1) == one
    pi2 = CycResidue.from_ints(16, PI2_COEFFS, M6143)
    assert pi2 * cyc_inv(pi2) == CycResidue.constant(16, 1, M6143)


def test_inverse_when_17_divides_M():
    m = SpecialForm(1, 8, -1)    # 255 = 3 * 5 * 17
    with pytest.raises(NotInvertible) as exc:
        cyc_inv(CycResidue.from_ints(8, PI1_COEFFS, m))
    assert exc.value.factor == 17
    with pytest.raises(NotInvertible):
        cyc_inv(CycResidue.from_ints(8, PI1_COEFFS, SpecialForm(1, 4, 1)))   # M = 17


def test_group_ring_power_basics():
    rng = random.Random(9)
    a = rand_elem(rng, 8, M6143)
    assert cyc_pow_group_ring(a, {1: 1}, 1) == a
    assert cyc_pow_group_ring(a, {1: 1, 3: 3}, 0) == CycResidue.constant(8, 1, M6143)


@pytest.mark.parametrize("form", FORMS, ids=str)
def test_alpha_has_norm_one(form):
    beta1 = unit_ratio(CycResidue.from_ints(8, PI1_COEFFS, form))
    assert norm(cyc_pow_group_ring(beta1, {1: 1, 3: 3})).value == 1
    beta2 = unit_ratio(CycResidue.from_ints(16, PI2_COEFFS, form))
    assert norm(cyc_pow_group_ring(beta2, {1: 1, -5: 3, -3: 5, 7: 7})).value == 1


def test_negative_weight_uses_inverse():
    a = CycResidue.from_ints(8, PI1_COEFFS, M6143)
    assert cyc_pow_group_ring(a, {1: 1, -1: -1}) == unit_ratio(a)
