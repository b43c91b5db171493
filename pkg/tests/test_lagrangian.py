import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qgrass.lagrangian import (
    LagVector,
    lg_subalgebra_hilbert,
    lg_top_power,
    multiply,
    normal_form,
)
from qgrass.partitions import strict_partitions_of_size
from qgrass.qseries import QPoly, lg_hilbert_series


E = LagVector.generator


def test_lagvector_basics():
    v = E(1) + E(1)
    assert v.coeff((1,)) == 2
    assert (v - v).is_zero
    assert LagVector({(1, 3): Fraction(1, 2)}).coeff([1, 3]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        LagVector({(3, 1): 1})
    with pytest.raises(ValueError):
        LagVector({(1, 1): 1})


def test_lagvector_json_order():
    v = LagVector({(1, 2): 1, (3,): 2, (1,): 1})
    assert v.to_json_obj() == [
        {"set": [1], "coeff": "1"},
        {"set": [3], "coeff": "2"},
        {"set": [1, 2], "coeff": "1"},
    ]


# --- normal forms ------------------------------------------------------------


def test_normal_form_examples():
    assert normal_form((1, 1), 2) == LagVector({(2,): 2})
    assert normal_form((2, 2), 2).is_zero
    assert normal_form((1, 2), 5) == LagVector({(1, 2): 1})
    assert normal_form((), 3) == LagVector.unit()
    with pytest.raises(ValueError):
        normal_form((0, 1), 3)
    with pytest.raises(ValueError):
        normal_form((4,), 3)
    with pytest.raises(ValueError):
        normal_form((1, 1), 3, strategy="sideways")


def test_normal_form_known_squares():
    # e_2^2 = 2 e_3 e_1 - 2 e_4 inside a rank-4 ring
    assert normal_form((2, 2), 4) == LagVector({(1, 3): 2, (4,): -2})
    # iterated powers of e_1 walk up the staircase
    assert normal_form((1, 1, 1), 3) == LagVector({(1, 2): 2})
    assert normal_form((1,) * 6, 3) == LagVector({(1, 2, 3): 16})


def test_normal_form_output_is_square_free():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 6)
        mono = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 6)))
        for key, _ in normal_form(mono, n).items():
            assert all(a < b for a, b in zip(key, key[1:]))
            assert sum(key) == sum(mono)


@given(st.integers(2, 6), st.data())
def test_normal_form_strategy_independent(n, data):
    mono = tuple(
        data.draw(st.lists(st.integers(1, n), min_size=0, max_size=6))
    )
    if sum(mono) > 15:
        mono = mono[:3]
    assert normal_form(mono, n, "smallest") == normal_form(mono, n, "largest")


# --- ring structure -------------------------------------------------------------


def test_multiply_examples():
    assert multiply(E(1), E(1), 2) == LagVector({(2,): 2})
    v = LagVector({(1, 3): 5, (2,): -1})
    assert multiply(v, LagVector.unit(), 4) == v
    assert multiply(E(1), LagVector({(2,): 2}), 2) == LagVector({(1, 2): 2})


def test_multiply_commutative_and_associative_random():
    rng = random.Random(99)

    def random_vec(n):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            size = rng.randint(0, n)
            key = tuple(sorted(rng.sample(range(1, n + 1), size)))
            terms[key] = rng.randint(-2, 2)
        return LagVector(terms)

    for _ in range(30):
        n = rng.randint(2, 5)
        a, b, c = random_vec(n), random_vec(n), random_vec(n)
        assert multiply(a, b, n) == multiply(b, a, n)
        assert multiply(multiply(a, b, n), c, n) == multiply(a, multiply(b, c, n), n)


def test_square_free_monomial_counts_match_series():
    # the normal-form target set has the ring's dimensions, degree by degree
    for n in range(1, 7):
        series = lg_hilbert_series(n)
        for d in range(series.degree + 1):
            assert sum(1 for _ in strict_partitions_of_size(n, d)) == series.coeff(d)


# --- subalgebra series ------------------------------------------------------------


def test_lg_subalgebra_hilbert_examples():
    assert lg_subalgebra_hilbert(2, 1) == QPoly.from_coeffs([1, 1, 1, 1])
    assert lg_subalgebra_hilbert(3, 1) == QPoly.from_coeffs([1] * 7)
    assert lg_subalgebra_hilbert(3, 2) == lg_subalgebra_hilbert(3, 1)
    with pytest.raises(ValueError):
        lg_subalgebra_hilbert(3, 0)
    with pytest.raises(ValueError):
        lg_subalgebra_hilbert(3, 4)


def test_lg_full_generation_matches_series():
    for n in range(1, 7):
        assert lg_subalgebra_hilbert(n, n) == lg_hilbert_series(n)


def test_lg_even_m_stabilization():
    for n in range(1, 7):
        for m in range(2, n + 1, 2):
            assert lg_subalgebra_hilbert(n, m) == lg_subalgebra_hilbert(n, m - 1)


def test_lg_m1_is_a_run_of_ones():
    for n in range(1, 7):
        top = n * (n + 1) // 2
        assert lg_subalgebra_hilbert(n, 1) == QPoly.from_coeffs([1] * (top + 1))


def test_lg_top_power_values():
    assert lg_top_power(1) == 1
    assert lg_top_power(2) == 2
    # engine-derived regression constant
    assert lg_top_power(3) == 16
    for n in range(1, 7):
        assert lg_top_power(n) > 0
    with pytest.raises(ValueError):
        lg_top_power(0)
