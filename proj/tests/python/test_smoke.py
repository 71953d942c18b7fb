import math

import pytest

normff = pytest.importorskip("normff")


def test_is_norm_and_represent():
    # T = 0^2 + T*1^2 over F_3
    assert normff.is_norm(3, [0, 1])
    assert normff.represent(3, [0, 1]) == ([], [1])
    # T + 2 is divisible once by an inert prime
    assert not normff.is_norm(3, [2, 1])
    assert normff.represent(3, [2, 1]) is None


def test_witness_identity():
    coeffs = [1, 1, 1]  # (T+2)^2 over F_3, so A = +-(T+2), B = 0
    a, b = normff.represent(3, coeffs)
    assert a in ([2, 1], [1, 2])
    assert b == []


def test_factor_and_legendre():
    unit, factors = normff.factor(3, [1, 0, 2, 0, 1])  # (T^2+1)^2 scaled check
    assert unit == 1
    assert factors == [([1, 0, 1], 2)]
    assert normff.irreducible(3, [1, 0, 1])
    assert normff.legendre(3, [1, 1], [0, 1]) == 1
    assert normff.legendre(3, [2, 1], [0, 1]) == -1


def test_counts_agree():
    for n in range(0, 6):
        brute = int(normff.count(3, n, "brute")["B"])
        series = int(normff.count(3, n, "series")["B"])
        parts = normff.count(3, n, "parts")
        assert brute == series
        assert sum(int(x) for x in parts["f_part_sizes"]) == brute


def test_pi_h_c():
    rows = normff.pi_exact(3, 2)
    assert rows == [(1, 1, 1), (2, 1, 2)]
    assert normff.h(2) == (3, 8)
    assert normff.c(3) == (5, 16)
    assert normff.check_series_identity(3, 30) == 0


def test_kq():
    k = normff.kq(101, 10)
    assert 1.0 < float(k["value"]) < 1.1
    assert float(k["tail_bound"]) < 1e-10
    assert not math.isnan(float(k["value"]))
