import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qvfo import (
    ConfigError,
    InversionBeforeNmax,
    NonMonotoneVfo,
    QhoParams,
    build_scheme,
    detect_inversion,
    magic_numbers,
)
from qvfo.golden import MAGIC_COLUMNS

from conftest import scheme_for


def test_undeformed_small_scheme():
    s = build_scheme(QhoParams(0.0), 2)
    assert {(lv.n, lv.l) for lv in s.levels} == {(0, 0), (1, 1), (2, 2), (2, 0)}
    # exact ties at tau = 0 sort by (n, l)
    assert [(lv.n, lv.l, lv.capacity) for lv in s.levels] == [(0, 0, 2), (1, 1, 6), (2, 0, 2), (2, 2, 10)]
    assert s.total_capacity == 20


@pytest.mark.parametrize("n_max", [0, 1, 4, 9, 15])
def test_undeformed_capacity_has_no_truncation_loss(n_max):
    expected = sum((k + 1) * (k + 2) for k in range(n_max + 1))
    assert build_scheme(QhoParams(0.0), n_max).total_capacity == expected


def test_undeformed_magic_numbers():
    assert magic_numbers(build_scheme(QhoParams(0.0), 6)).numbers == (2, 8, 20, 40, 70, 112)


def test_shell_cut_would_overcount():
    # all shells below 26 plus the top level would hold 6658 electrons
    shell_based = sum((k + 1) * (k + 2) for k in range(26)) + 2 * (2 * 26 + 1)
    assert shell_based == 6658
    assert scheme_for(0.038, 0.0, 26).total_capacity == 4658


def test_levels_sorted_and_below_cut():
    s = scheme_for(0.05, 0.005, 26)
    keys = [(lv.energy, lv.n, lv.l) for lv in s.levels]
    assert keys == sorted(keys)
    top = next(lv.energy for lv in s.levels if (lv.n, lv.l) == (26, 26))
    assert all(lv.energy <= top for lv in s.levels)
    assert s.levels[-1].energy == top


@pytest.mark.parametrize("tau,eps,n", [(0.038, 0.0, 26), (0.038, 0.008, 25), (0.05, 0.0055, 25)])
def test_no_inversion_for_reference_parameters(tau, eps, n):
    assert detect_inversion(QhoParams(tau, eps), n) is None


@given(st.floats(1e-3, 0.2), st.integers(0, 30))
def test_no_inversion_without_anharmonicity(tau, n):
    assert detect_inversion(QhoParams(tau), n) is None


def test_inversion_detected_and_blocks_truncation():
    p = QhoParams(0.038, 0.02)
    n_star = detect_inversion(p, 26)
    assert n_star is not None and n_star <= 26
    # the inverted shell has a lower-l member below l = n
    assert detect_inversion(p, n_star - 1) is None
    with pytest.raises(InversionBeforeNmax):
        build_scheme(p, 26)


def test_non_monotone_vfo_rejected():
    # single-member shells cannot invert, but e(1,1) = 1 > 1/(2 * 0.6)
    with pytest.raises(NonMonotoneVfo):
        build_scheme(QhoParams(0.0, 0.6), 1)


def test_bad_arguments():
    with pytest.raises(ConfigError):
        build_scheme(QhoParams(0.0), -1)
    with pytest.raises(ConfigError):
        magic_numbers(build_scheme(QhoParams(0.0), 2), 0.0)


def test_truncation_edge_is_not_a_gap():
    assert magic_numbers(build_scheme(QhoParams(0.038), 0)).numbers == ()


@given(st.floats(1e-3, 0.1), st.integers(1, 20))
@settings(max_examples=50)
def test_within_shell_order_descending_l(tau, n_max):
    s = build_scheme(QhoParams(tau), n_max)
    for n in range(n_max + 1):
        ls = [lv.l for lv in s.levels if lv.n == n]
        assert ls == sorted(ls, reverse=True)


def test_magic_numbers_are_partial_sums():
    s = scheme_for(0.038, 0.006, 26)
    partial = set(itertools.accumulate(lv.capacity for lv in s.levels))
    table = magic_numbers(s)
    assert set(table.numbers) <= partial
    assert list(table.numbers) == sorted(set(table.numbers))
    assert [i for i, _ in table.entries] == list(range(1, len(table) + 1))


@pytest.mark.parametrize("tau", [0.038, 0.05])
def test_larger_epsilon_gives_subset(tau):
    cols = sorted((c for c in MAGIC_COLUMNS if c.tau == tau), key=lambda c: c.epsilon)
    tables = [set(magic_numbers(scheme_for(c.tau, c.epsilon, c.n_max)).numbers) for c in cols]
    for lower, higher, c in zip(tables, tables[1:], cols[1:]):
        # compare inside the common particle-number range
        limit = scheme_for(c.tau, c.epsilon, c.n_max).total_capacity
        assert higher <= {n for n in lower if n <= limit}


@pytest.mark.parametrize("c", [0.5, 2.0, 7.3])
def test_rescaling_invariance(c):
    base = magic_numbers(build_scheme(QhoParams(0.05, 0.005), 20), 0.38)
    # epsilon carries inverse energy, so it scales by 1/c
    scaled = magic_numbers(build_scheme(QhoParams(0.05, 0.005 / c, hbar_omega0=c), 20), 0.38 * c)
    assert scaled.numbers == base.numbers
