from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import nonzero_rationals, rationals
from secondsol import recurrence as R
from secondsol.exactcore import factorial


def fib(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


# -- iterate -------------------------------------------------------------------

def test_iterate_double_root_one_is_constant():
    spec = R.RecurrenceSpec.from_polys([1], [-2], [1])
    assert list(R.iterate(spec, 1, 1, 5)) == [1] * 6


def test_iterate_factorial_example():
    spec, _ = R.factorial_example()
    assert list(R.iterate(spec, 1, 1, 4)) == [1, 1, 2, 6, 24]


def test_iterate_harmonic_example_constant():
    spec, _ = R.harmonic_example()
    assert list(R.iterate(spec, 1, 1, 4)) == [1] * 5


def test_iterate_reports_vanishing_leading_coefficient():
    spec = R.RecurrenceSpec.from_polys([-3, 1], [1], [1])  # a_3 = 0
    with pytest.raises(R.VanishingCoefficient) as info:
        R.iterate(spec, 1, 1, 8)
    assert info.value.index == 3


@given(st.lists(rationals, min_size=2, max_size=2), st.lists(rationals, min_size=1, max_size=2),
       st.lists(nonzero_rationals, min_size=1, max_size=1), rationals, rationals)
def test_iterate_output_is_a_solution(a, b, c, y0, y1):
    spec = R.RecurrenceSpec.from_polys([a[0] or 1, 0], b, c)  # constant nonzero a
    assert spec.is_solution(R.iterate(spec, y0, y1, 15).values)


# -- d'Alembert ----------------------------------------------------------------

@pytest.mark.parametrize("r", [1, 2, -3, Fraction(1, 2)])
def test_double_root_second_solution(r):
    spec, first = R.double_root(r)
    y2 = R.dalembert_second(spec, R.first_orbit(first, 20))
    assert all(y2[n] == (n - 1) * Fraction(r) ** n for n in range(21))


def test_double_root_example_value():
    spec, first = R.double_root(1)
    assert R.dalembert_second(spec, R.first_orbit(first, 4))[4] == 3


def test_factorial_second_solution():
    spec, first = R.factorial_example()
    y2 = R.dalembert_second(spec, R.first_orbit(first, 20))
    for n in range(1, 21):
        want = factorial(n) * sum((Fraction((-1) ** (l - 1)) / factorial(l) for l in range(2, n + 1)), Fraction(0))
        assert y2[n] == want


def test_harmonic_second_solution():
    spec, first = R.harmonic_example()
    y2 = R.dalembert_second(spec, R.first_orbit(first, 20))
    assert y2[5] == Fraction(77, 60)
    for n in range(1, 21):
        assert y2[n] == sum((Fraction(1, k + 1) for k in range(1, n)), Fraction(0))


def test_ex4_second_solution():
    spec, first = R.ex4_example()
    y2 = R.dalembert_second(spec, R.first_orbit(first, 20))
    assert y2[6] == 40128
    assert all(y2[n] == factorial(n + 2) - 3 * 2**n for n in range(21))


def test_second_solution_low_entries():
    spec, first = R.harmonic_example()
    y2 = R.dalembert_second(spec, R.first_orbit(first, 6))
    assert y2[1] == 0
    # the only n = 0 value compatible with the recurrence
    assert y2[0] == -1 and spec.residual(y2.values, 0) == 0


def test_dalembert_rejects_vanishing_first_solution():
    spec = R.RecurrenceSpec.from_polys([1], [-1], [-1])
    f = R.iterate(spec, 0, 1, 6)
    with pytest.raises(R.VanishingSolution) as info:
        R.dalembert_second(spec, f)
    assert info.value.index == 0


def test_dalembert_rejects_non_solution():
    spec, first = R.harmonic_example()
    f = list(R.first_orbit(first, 6))
    f[4] += 1
    with pytest.raises(R.NotASolution):
        R.dalembert_second(spec, f)


@given(st.integers(-5, 5).filter(bool), st.integers(-5, 5).filter(bool), nonzero_rationals, nonzero_rationals)
def test_second_solution_is_independent(p, q, y0, y1):
    # constant coefficients with roots p, q: nonvanishing first solution p^n
    spec = R.RecurrenceSpec.from_polys([1], [-(p + q)], [p * q])
    f = R.first_orbit(lambda n: Fraction(p) ** n, 12)
    y2 = R.dalembert_second(spec, f)
    assert spec.is_solution(y2.values)
    for n in range(1, 12):
        # f_1 prod_{l<n} c_l / a_l
        assert R.casorati(f, y2, n) == f[1] * Fraction(p * q) ** n
        assert R.casorati(f, y2, n) != 0


# -- Y-form --------------------------------------------------------------------

def test_transform_trivial_when_a_is_one():
    spec, _ = R.factorial_example()
    pref, beta, gamma = R.transform_to_Y(spec, 5)
    assert list(pref) == [1] * 6
    assert beta == [-spec.b(n) for n in range(6)] and gamma == [-spec.c(n) for n in range(6)]


def test_transform_ex4_gamma():
    spec, _ = R.ex4_example()
    _, _, gamma = R.transform_to_Y(spec, 3)
    assert gamma[2] == -80
    assert gamma[0] == -spec.c(0)


@pytest.mark.parametrize("name", sorted(R.EXAMPLES))
def test_rescaled_orbits_satisfy_Y_recurrence(name):
    spec, first = R.EXAMPLES[name]()
    f = R.first_orbit(first, 12)
    pref, beta, gamma = R.transform_to_Y(spec, 12)
    Y = [v / pref[n] for n, v in enumerate(f)]
    assert all(Y[n + 2] == beta[n] * Y[n + 1] + gamma[n] * Y[n] for n in range(11))


def test_verify_Y_form():
    spec, first = R.harmonic_example()
    y2 = R.dalembert_second(spec, R.first_orbit(first, 10))
    assert R.verify_Y_form(spec, y2)
    broken = list(y2)
    broken[5] += 1
    assert not R.verify_Y_form(spec, broken)
    spec, first = R.double_root(3)
    assert R.verify_Y_form(spec, R.dalembert_second(spec, R.first_orbit(first, 10)))


# -- Casorati ------------------------------------------------------------------

def test_casorati_dependent_pair():
    f = [1, 2, 5, 7]
    assert R.casorati(f, f, 1) == 0


def test_casorati_out_of_range():
    with pytest.raises(IndexError):
        R.casorati([1, 2], [3, 4], 1)


def test_fundamental_pair_low_orders():
    beta = [Fraction(2), Fraction(-1), Fraction(3), Fraction(5)]
    gamma = [Fraction(3), Fraction(7), Fraction(-2), Fraction(1, 2)]
    f1, f2 = R.fundamental_pair(beta, gamma, 3)
    g0, g1, g2 = gamma[:3]
    assert R.casorati(f1, f2, 1) == g0 * g1
    assert R.casorati(f1, f2, 2) == -g0 * g1 * g2


@pytest.mark.parametrize("gamma, n, want", [([2, 3, 5], 1, 6), ([1, 1, 1], 2, -1), ([4, 0, 9], 2, 0)])
def test_casorati_gamma_product(gamma, n, want):
    assert R.casorati_gamma_product(gamma, n) == want


@given(st.lists(rationals, min_size=14, max_size=14), st.lists(rationals, min_size=14, max_size=14))
def test_fundamental_pair_casoratian(beta, gamma):
    f1, f2 = R.fundamental_pair(beta, gamma, 13)
    for n in range(13):
        assert R.casorati(f1, f2, n) == R.casorati_gamma_product(gamma, n)


# -- constant coefficients -----------------------------------------------------

def test_const_coeff_low_orders():
    b, g = Fraction(3), Fraction(-2)
    assert R.const_coeff_Y(b, g, 5, 7, 2) == b * 7 + g * 5
    assert R.const_coeff_Y(b, g, 1, 0, 5) == b**3 * g + 2 * b * g**2
    assert R.const_coeff_Y(b, g, 0, 1, 5) == b**4 + 3 * b**2 * g + g**2


def test_const_coeff_fibonacci():
    assert [R.const_coeff_Y(1, 1, 0, 1, n) for n in range(15)] == [fib(n) for n in range(15)]


@pytest.mark.parametrize("beta, gamma, n, want", [(5, 7, 1, 1), (5, 7, 2, 5), (0, 1, 4, 0)])
def test_root_power_ratio(beta, gamma, n, want):
    assert R.root_power_ratio(beta, gamma, n) == want


@given(rationals, rationals, rationals, rationals, st.integers(0, 24))
def test_const_coeff_matches_iteration(b, g, Y0, Y1, n):
    Ys = R.iterate_Y([b] * 25, [g] * 25, Y0, Y1, 24)
    assert R.const_coeff_Y(b, g, Y0, Y1, n) == Ys[n]


@given(rationals, rationals, rationals, rationals, st.integers(1, 24))
def test_root_power_ratio_identity(b, g, Y0, Y1, n):
    lhs = R.const_coeff_Y(b, g, Y0, Y1, n)
    assert lhs == R.root_power_ratio(b, g, n) * Y1 + g * R.root_power_ratio(b, g, n - 1) * Y0


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 12))
def test_root_power_ratio_with_rational_roots(r1, r2, n):
    assume(r1 != r2)
    assert R.root_power_ratio(r1 + r2, -r1 * r2, n) == Fraction(r1**n - r2**n, r1 - r2)
