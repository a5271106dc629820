import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lucasian import sequences
from lucasian.checks import direct_invariants
from lucasian.modnum import SpecialForm
from lucasian.seeds import compute_bioctic_seeds, compute_octic_seeds
from lucasian.sequences import (
    BiocticState,
    OcticState,
    bioctic_state,
    iterate,
    octic_state,
    step_bioctic,
    step_octic,
)

M6143 = SpecialForm(3, 11, -1)
MODULI = [M6143, SpecialForm(1, 7, -1), SpecialForm(1, 17, -1), SpecialForm(103, 40, 1), SpecialForm(3, 500, -1)]


def sym2(a, b, M):
    return ((a + b) % M, a * b % M)


def sym4(a, b, c, d, M):
    return (
        (a + b + c + d) % M,
        (a * b + a * c + a * d + b * c + b * d + c * d) % M,
        (a * b * c + a * b * d + a * c * d + b * c * d) % M,
        a * b * c * d % M,
    )


def test_octic_examples():
    assert step_octic(octic_state(0, 0, M6143)).as_tuple() == (6139, 4)
    assert step_octic(octic_state(-4, 4, M6143)).as_tuple() == (4, 4)
    assert step_octic(octic_state(4, 4, M6143)).as_tuple() == (4, 4)


def test_bioctic_examples():
    assert step_bioctic(bioctic_state(-8, 24, -32, 16, M6143)).as_tuple() == (8, 24, 32, 16)
    assert step_bioctic(bioctic_state(8, 24, 32, 16, M6143)).as_tuple() == (8, 24, 32, 16)


@pytest.mark.parametrize("m", MODULI, ids=str)
def test_fixed_points(m):
    assert step_octic(octic_state(4, 4, m)).as_tuple() == (4, 4)
    assert step_bioctic(bioctic_state(8, 24, 32, 16, m)).as_tuple() == (8, 24, 32, 16)


@given(st.sampled_from(MODULI), st.lists(st.integers(0, 2**600), min_size=4, max_size=4))
def test_bioctic_step_is_symmetric_function_of_squares_minus_two(m, roots):
    M = m.value
    a, b, c, d = (r % M for r in roots)
    after = sym4(*((x * x - 2) % M for x in (a, b, c, d)), M)
    assert step_bioctic(bioctic_state(*sym4(a, b, c, d, M), m)).as_tuple() == after


@given(st.sampled_from(MODULI), st.integers(0, 2**600), st.integers(0, 2**600))
def test_octic_step_is_symmetric_function_of_squares_minus_two(m, a, b):
    M = m.value
    a, b = a % M, b % M
    after = sym2((a * a - 2) % M, (b * b - 2) % M, M)
    assert step_octic(octic_state(*sym2(a, b, M), m)).as_tuple() == after


def test_step_increments_k():
    s = octic_state(1, 2, M6143)
    assert step_octic(s).k == 1
    assert iterate(s, 5).k == 5
    b = bioctic_state(1, 2, 3, 4, M6143, k=3)
    assert step_bioctic(b).k == 4


def test_iterate_matches_repeated_steps():
    rng = random.Random(2)
    s = octic_state(rng.randrange(6143), rng.randrange(6143), M6143)
    b = bioctic_state(*(rng.randrange(6143) for _ in range(4)), M6143)
    t, u = s, b
    for _ in range(12):
        t, u = step_octic(t), step_bioctic(u)
    assert iterate(s, 12) == t
    assert iterate(b, 12) == u


def test_iterate_zero_steps_returns_seeds():
    seeds = compute_octic_seeds(M6143)
    assert iterate(seeds, 0).as_tuple() == seeds.as_tuple()
    with pytest.raises(ValueError):
        iterate(seeds, -1)


def test_127_octic_reaches_zero():
    m = SpecialForm(1, 7, -1)
    assert iterate(compute_octic_seeds(m), 4).as_tuple() == (0, 0)


def test_131071_bioctic_reaches_minus_two_pattern():
    m = SpecialForm(1, 17, -1)
    assert iterate(compute_bioctic_seeds(m), 13).as_tuple() == tuple(v % m.value for v in (-8, 24, -32, 16))


@pytest.mark.parametrize("form", [SpecialForm(3, 11, -1), SpecialForm(7, 12, 1), SpecialForm(1, 9, 1)], ids=str)
def test_recurrence_equals_direct_definition(form):
    octic, bioctic = compute_octic_seeds(form), compute_bioctic_seeds(form)
    for k in range(9):
        assert iterate(octic, k).as_tuple() == direct_invariants(form, k, "octic")
        assert iterate(bioctic, k).as_tuple() == direct_invariants(form, k, "bioctic")


def test_state_types():
    assert isinstance(iterate(compute_octic_seeds(M6143), 2), OcticState)
    assert isinstance(iterate(compute_bioctic_seeds(M6143), 2), BiocticState)
    with pytest.raises(TypeError):
        sequences.initial_state((1, 2))
