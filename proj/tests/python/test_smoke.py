import math
from fractions import Fraction

import pytest

import ramsum


def brute_c(k, j):
    return round(sum(math.cos(2 * math.pi * m * j / k) for m in range(1, k + 1) if math.gcd(m, k) == 1))


def test_ramanujan_sum_matches_definition():
    for k in range(1, 40):
        for j in range(0, k + 1):
            assert ramsum.ramanujan_sum(k, j) == brute_c(k, j)
            assert ramsum.ramanujan_sum_holder(k, j) == brute_c(k, j)
    assert ramsum.ramanujan_sum(4, 2) == -2
    assert ramsum.ramanujan_row(6) == [2, 1, -1, -2, -1, 1, 2]


def test_arithmetic():
    assert ramsum.factorize(12) == [(2, 2), (3, 1)]
    assert ramsum.euler_phi(100) == 40
    assert ramsum.mobius(30) == -1
    assert ramsum.divisors(6) == [1, 2, 3, 6]
    assert ramsum.divisor_count_and_sum(28) == (6, 56)
    assert ramsum.jordan_totient(2, 2) == 3


def test_exact_values_are_python_numbers():
    b12 = ramsum.bernoulli_number(12)
    assert b12 == Fraction(-691, 2730)
    assert isinstance(b12, Fraction)
    assert ramsum.binomial(60, 30) == math.comb(60, 30)
    assert ramsum.binomial(200, 100) == math.comb(200, 100)
    assert ramsum.power_sum(100, 5) == sum(j**5 for j in range(1, 101))
    assert ramsum.coprime_power_sum(10, 3) == 1100
    assert ramsum.bernoulli_polynomial(2, Fraction(1, 2)) == Fraction(-1, 12)
    assert ramsum.bernoulli_polynomial(2, "1/2") == Fraction(-1, 12)
    assert ramsum.half_sum_check(5) == 3


def test_averages():
    assert ramsum.s_r_direct(1, 5) == 1
    assert ramsum.s_r_direct(6, 3) == Fraction(1, 3)
    for k in range(1, 30):
        direct = Fraction(sum(j**3 * brute_c(k, j) for j in range(1, k + 1)), k**4)
        assert ramsum.s_r_closed(k, 3) == direct
    lhs, rhs = ramsum.binomial_weighted_exact(12)
    assert lhs == rhs == -5404
    lhs, rhs = ramsum.inverse_dft_check(4, 2)
    assert abs(lhs) < 1e-12 and rhs == 0.0
    lhs, rhs = ramsum.gcd_weighted_pair(12, "id")
    assert lhs == rhs == ramsum.euler_phi(12) ** 2


def test_several_variables():
    assert ramsum.orbicyclic([2, 3]) == 0
    assert ramsum.orbicyclic([6, 6]) == 2
    assert ramsum.orbicyclic_divisor([6, 6]) == 2
    assert ramsum.s_r_multi_direct([2, 3], 2) == Fraction(5, 18)
    assert ramsum.s_r_multi_closed([2, 2], 1) == Fraction(3, 4)
    assert ramsum.g_m([6, 4], 2) == 19200
    assert ramsum.multiplicativity_check([2, 4], [3, 9])


def test_errors():
    with pytest.raises(ramsum.DomainError):
        ramsum.ramanujan_sum(0, 1)
    with pytest.raises(ValueError):
        ramsum.euler_phi(0)
    with pytest.raises(ramsum.RangeError):
        ramsum.factorize(2**40 + 1)
    with pytest.raises(ramsum.DomainError):
        ramsum.gamma_weighted_pair(1)
    with pytest.raises(ramsum.BudgetError):
        ramsum.g_m([720720] * 3, 1)
    with pytest.raises(ramsum.SchemaError):
        ramsum.run_identity("prop4", k=1)


def test_verification():
    assert len(ramsum.identities()) == 20
    case = ramsum.run_identity("prop1", k=6, r=3)
    assert case["pass"] and case["lhs"] == "1/3"
    case = ramsum.run_identity("prop7", ks=[2, 3], r=1)
    assert case["params"] == "ks=(2,3) r=1" and case["pass"]

    report = ramsum.run_suite(["prop1"], k_max=100, r_max=5, threads=2)
    assert report["total"] == 500 and report["failed"] == 0
    assert list(report)[:3] == ["suite", "grid", "total"]

    a = ramsum.run_suite(["prop2", "inverse-dft"], k_max=30, n_max=30, timing=False)
    b = ramsum.run_suite(["prop2", "inverse-dft"], k_max=30, n_max=30, timing=False, threads=4)
    assert a == b
    assert a["worst_errors"]["prop2"] < 1e-12

    half = ramsum.run_suite(["half-sum"], r_max=3)
    assert half["failed"] == 1 and half["failures"][0]["params"] == "r=0"
