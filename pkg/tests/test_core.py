import math

import mpmath as mp
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qvfo import ConfigError, QhoParams, QuantumNumbers, allowed_l, e_q, energy, q_number, taylor_energy, vfo_energy

mp.mp.dps = 40

finite_tau = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)


def mp_e_q(n, l, tau):
    """Eigenvalue evaluated from the q-number definition in 40-digit arithmetic."""
    q = mp.e ** mp.mpf(tau)

    def br(x):
        return (q**x - q ** (-x)) / (q - 1 / q)

    return br(n) * q ** (n + 1) - q * (q - 1 / q) / br(2) * br(l) * br(l + 1)


def test_q_number_zero():
    assert q_number(0, 0.038) == 0


def test_q_number_two_is_q_plus_inverse():
    expected = float(mp.e ** mp.mpf(0.038) + mp.e ** mp.mpf(-0.038))
    assert q_number(2, 0.038) == pytest.approx(expected, rel=1e-14)
    assert q_number(2, 0.038) == pytest.approx(2.001444, abs=1e-6)


def test_q_number_undeformed_limit():
    assert q_number(5, 1e-12) == pytest.approx(5, abs=1e-9)


@pytest.mark.parametrize("tau", [1e-7, 5e-7, 2e-6, 1e-3])
def test_q_number_continuous_across_series_threshold(tau):
    exact = float(mp.sinh(mp.mpf(tau) * 7) / mp.sinh(mp.mpf(tau)))
    assert q_number(7, tau) == pytest.approx(exact, rel=1e-12)


@given(st.floats(-20, 20), finite_tau)
def test_q_number_odd_in_x(x, tau):
    assert q_number(-x, tau) == pytest.approx(-q_number(x, tau), rel=1e-12, abs=1e-300)


@given(st.floats(-20, 20), finite_tau)
def test_q_number_even_in_tau(x, tau):
    assert q_number(x, -tau) == pytest.approx(q_number(x, tau), rel=1e-12, abs=1e-300)


@pytest.mark.parametrize("n,expected", [(0, [0]), (4, [4, 2, 0]), (5, [5, 3, 1])])
def test_allowed_l(n, expected):
    assert allowed_l(n) == expected


def test_quantum_numbers_validated():
    with pytest.raises(ConfigError):
        QuantumNumbers(3, 2)
    with pytest.raises(ConfigError):
        QuantumNumbers(2, 3)


def test_params_reject_complex_and_negative_epsilon():
    with pytest.raises(ConfigError):
        QhoParams(tau=float("nan"))
    with pytest.raises(ConfigError):
        QhoParams(tau=0.03, epsilon=-1e-3)
    with pytest.raises(ConfigError):
        QhoParams(tau=0.03, hbar_omega0=0)


@given(finite_tau)
def test_ground_state_is_zero(tau):
    assert e_q((0, 0), tau) == 0


@given(st.floats(-1, 1))
def test_first_excited_level_is_exactly_one(tau):
    assert abs(e_q((1, 1), tau) - 1.0) <= 1e-12


@pytest.mark.parametrize("n", range(0, 21, 3))
def test_undeformed_limit_is_n(n):
    for l in allowed_l(n):
        assert e_q((n, l), 0.0) == pytest.approx(n, abs=1e-9)


@pytest.mark.parametrize("n,l,tau", [(26, 26, 0.038), (25, 1, 0.05), (10, 4, -0.2), (3, 1, 0.5)])
def test_e_q_matches_high_precision(n, l, tau):
    assert e_q((n, l), tau) == pytest.approx(float(mp_e_q(n, l, tau)), rel=1e-12)


def test_top_level_energy_range():
    e = energy((26, 26), QhoParams(0.038))
    assert 40 < e < 50
    assert e > taylor_energy((26, 26), 0.038)


def test_energy_scales_with_hbar_omega():
    assert energy((4, 2), QhoParams(0.05, hbar_omega0=3.0)) == pytest.approx(3 * e_q((4, 2), 0.05))


def test_vfo_energy_examples():
    assert vfo_energy(7.5, QhoParams(0.0)) == 7.5
    assert vfo_energy(0.0, QhoParams(0.0, 0.3)) == 0.0
    assert vfo_energy(10, QhoParams(0.0, 0.006)) == pytest.approx(9.4, abs=1e-12)


@given(st.floats(1e-4, 0.1), st.floats(0, 1), st.floats(0, 1))
def test_vfo_energy_increasing_below_turning_point(eps, u, v):
    p = QhoParams(0.0, eps)
    top = 1 / (2 * eps)
    a, b = sorted((u * top * 0.999, v * top * 0.999))
    if b - a > 1e-9 * top:
        assert vfo_energy(a, p) < vfo_energy(b, p)


def test_taylor_examples():
    assert taylor_energy((4, 2), 0.0) == 4
    tau = 0.017
    assert taylor_energy((3, 1), tau) == pytest.approx(3 + 10 * tau + 26 * tau**2, rel=1e-14)


def test_taylor_remainder_at_5_3():
    exact = float(mp_e_q(5, 3, 0.01))
    err = abs(taylor_energy((5, 3), 0.01) - exact)
    # third-order coefficient is about 258, so the remainder is ~2.6e-4
    assert 2e-4 < err < 3e-4
    half = abs(taylor_energy((5, 3), 0.005) - float(mp_e_q(5, 3, 0.005)))
    assert 7 <= err / half <= 9


def _max_taylor_error(tau):
    return max(abs(e_q((n, l), tau) - taylor_energy((n, l), tau)) for n in range(11) for l in allowed_l(n))


def test_taylor_remainder_is_cubic():
    ratio = _max_taylor_error(0.02) / _max_taylor_error(0.01)
    assert 7 <= ratio <= 9


@given(st.integers(2, 30), st.floats(1e-3, 0.5))
def test_e_q_decreases_with_l(n, tau):
    values = [e_q((n, l), tau) for l in allowed_l(n)]  # l descending
    assert all(a < b for a, b in zip(values, values[1:]))
