import math
import threading

import numpy as np
import pytest

from gaconvex import coeffs as cf
from gaconvex.quadrature import integrate

# mpmath quadrature at 40 digits, frozen
K_1_HALF_2_3 = 1.1368122999900189535
GRID_AB = (0.0, 0.3, 1.0, 1.7)


def test_kernel_trivial_values():
    assert cf.kernel(0, 0, 0) == 1.0
    assert cf.kernel(1, 1, 0) == pytest.approx(1 / 6, rel=1e-15)
    for lam in (-40.0, -3.0, 0.5, 12.0, 45.0, 300.0):
        assert cf.kernel(0, 0, lam) == pytest.approx(math.expm1(lam) / lam, rel=1e-12)


def test_kernel_derived_value():
    assert cf.kernel(1, 0.5, 2.3) == pytest.approx(K_1_HALF_2_3, rel=1e-14)
    assert abs(cf.kernel(1, 0.5, 2.3) - cf.simpson_oracle(1, 0.5, 2.3)) <= 1e-9


def test_kernel_rejects_overflow():
    with pytest.raises(cf.KernelDomainError):
        cf.kernel(1, 1, 700.5)
    with pytest.raises(cf.KernelDomainError):
        cf.kernel(1, 1, -701)
    with pytest.raises(ValueError):
        cf.kernel(-0.5, 1, 1)


def test_method_switch():
    assert cf.kernel_with_method(1, 1, 30.0)[1] == "series"
    assert cf.kernel_with_method(1, 1, 30.5)[1] == "quadrature"
    assert cf.kernel_with_method(1, 1, -31)[1] == "quadrature"
    # the two methods agree across the switch
    lo = cf.kernel(1, 0.5, 30.0)
    hi = cf.kernel(1, 0.5, math.nextafter(30.0, 31.0))
    assert hi == pytest.approx(lo, rel=1e-13)


@pytest.mark.parametrize("alpha", GRID_AB)
@pytest.mark.parametrize("beta", GRID_AB)
def test_reflection(alpha, beta):
    for lam in np.linspace(-20, 20, 9):
        lhs = cf.kernel(alpha, beta, lam)
        rhs = math.exp(lam) * cf.kernel(beta, alpha, -lam)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_monotone_in_lambda():
    for alpha, beta in [(0, 0), (1, 0.25), (0.5, 1.7)]:
        vals = [cf.kernel(alpha, beta, lam) for lam in np.linspace(-60, 60, 121)]
        assert all(x < y for x, y in zip(vals, vals[1:]))


def test_coefficient_examples():
    for s in (0.25, 0.5, 1.0):
        # b -> a: lambda -> 0
        c1 = cf.coefficient(cf.CoefficientId("c1", s, 1.0, 1.0, 1.0 + 1e-15))
        assert c1 == pytest.approx(1 / ((s + 1) * (s + 2)), rel=1e-12)
    c2 = cf.coefficient(cf.CoefficientId("c2", 1.0, 1.0, 1.0, 1.0 + 1e-15))
    assert c2 == pytest.approx(1 / 3, rel=1e-12)
    c8 = cf.coefficient_value("c8", 1.0, 2.0, 1.0, math.e)
    assert c8 == pytest.approx((math.e ** 2 + 1) / 4, rel=1e-14)
    assert abs(c8 - cf.simpson_oracle(1.0, 0.0, 2.0)) <= 1e-9


def test_c3_is_reflection_of_c1():
    s, q, a, b = 0.5, 1.5, 1.0, 4.0
    lam = q * math.log(b / a)
    c3 = cf.coefficient_value("c3", s, q, a, b)
    assert c3 == pytest.approx(math.exp(-lam) * cf.kernel(s, 1.0, lam), rel=1e-12)


@pytest.mark.parametrize("s", [0.25, 0.5, 1.0])
def test_c5_c11_decompositions_match_direct_quadrature(s):
    q, a, b = 2.0, 1.0, 3.0
    r = b / a
    direct5 = integrate(lambda t: t * (1 - t ** s) * r ** (q * t), tol=1e-13).value
    direct11 = integrate(lambda t: (1 - t ** s) * r ** (q * t), tol=1e-13).value
    assert abs(cf.coefficient_value("c5", s, q, a, b) - direct5) <= 1e-10
    assert abs(cf.coefficient_value("c11", s, q, a, b) - direct11) <= 1e-10


@pytest.mark.parametrize("cid", cf.IDS)
def test_coefficients_against_oracle_on_grid(cid):
    for s in (0.25, 0.5, 1.0):
        for q in (1.0, 2.0):
            for a, b in [(1, 2), (1, 5), (2, 3)]:
                c = cf.CoefficientId(cid, s, q, a, b)
                oracle = sum(sign * cf.simpson_oracle(al, be, -c.lam if refl else c.lam, 20_000)
                             for sign, al, be, refl in cf.kernel_terms(cid, s))
                assert abs(cf.coefficient(c) - oracle) <= 1e-9


def test_coefficient_validation():
    with pytest.raises(ValueError):
        cf.CoefficientId("c13", 0.5, 1, 1, 2)
    with pytest.raises(ValueError):
        cf.CoefficientId("c1", 0.5, 1, 2, 1)
    with pytest.raises(ValueError):
        cf.CoefficientId("c1", 0.0, 1, 1, 2)


def test_cache_keys_are_bit_exact():
    a = cf.kernel(0.0, 0.0, 0.0)
    b = cf.kernel(0.0, 0.0, -0.0)
    assert a == b == 1.0
    assert cf._bits(0.0) != cf._bits(-0.0)


def test_concurrent_kernel_calls_agree():
    params = [(1.0, s, lam) for s in (0.25, 0.5) for lam in np.linspace(-50, 50, 21)]
    expected = [cf.kernel(*p) for p in params]
    results = {}

    def work(i):
        results[i] = [cf.kernel(*p) for p in params]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results.values())
