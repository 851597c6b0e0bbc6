import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from keynesgrowth import (
    CapitalGrowthPath,
    NoSolutionError,
    TechPath,
    intensive_output,
    intensive_rental,
    intensive_wage,
    kd_growth,
    reconstruct_unemployment,
    simulate_solow,
    solve_kd,
    steady_state,
    unemployment_growth,
    unemployment_growth_share_form,
)
from keynesgrowth.keynes import balanced_growth_path, solow_capital_growth, step_shock_path

from conftest import make_params
from oracles import central_difference, kd_root

GRID = list(
    itertools.product(
        [0.2, 0.3, 0.5],  # alpha
        np.linspace(0.05, 0.4, 8),  # sigma
        np.linspace(0.01, 0.5, 8),  # b + delta
    )
)


def test_solve_kd_examples():
    p = make_params(alpha=0.5, sigma=0.2, delta=0.05)
    assert solve_kd(0.05, p) == pytest.approx(4.0, abs=1e-12)
    assert solve_kd(0.2 - 0.05, p) == pytest.approx(1.0, abs=1e-12)
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06)
    oracle = kd_root(0.03, 0.18, 0.06, 0.3)
    assert solve_kd(0.03, p) == pytest.approx(oracle, rel=1e-12)
    assert solve_kd(0.03, p) == pytest.approx(2.6918, abs=5e-5)


def test_solve_kd_no_solution():
    p = make_params(delta=0.05)
    with pytest.raises(NoSolutionError):
        solve_kd(-0.05, p)
    with pytest.raises(NoSolutionError):
        solve_kd(-0.2, p)


@pytest.mark.parametrize("alpha,sigma,bd", GRID)
def test_capital_demand_residual_on_grid(alpha, sigma, bd):
    delta = 0.05
    p = make_params(alpha=alpha, sigma=sigma, delta=delta)
    k = solve_kd(bd - delta, p)
    assert abs(bd * k - sigma * intensive_output(k, alpha)) < 1e-10


def test_kd_growth_examples():
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06)
    assert kd_growth(0.04, 0.0, p) == 0.0
    # oracle: central difference of ln kd(b), kd(b) by bisection
    dln = central_difference(lambda b: math.log(kd_root(b, 0.18, 0.06, 0.3)), 0.04)
    assert 0.005 * dln == pytest.approx(-0.07142857143094261, rel=1e-8)
    assert kd_growth(0.04, 0.005, p) == pytest.approx(0.005 * dln, rel=1e-6)
    assert kd_growth(0.04, 0.005, p) == pytest.approx(-0.0714286, abs=1e-7)
    assert kd_growth(0.04, 0.01, p) < 0


@pytest.mark.parametrize("alpha,sigma,bd", GRID[::3])
@pytest.mark.parametrize("b_prime", [-0.02, 0.02])
def test_kd_growth_matches_finite_difference(alpha, sigma, bd, b_prime):
    delta = 0.05
    p = make_params(alpha=alpha, sigma=sigma, delta=delta)
    b = bd - delta
    h = 1e-6 * bd
    fd = central_difference(lambda x: math.log(solve_kd(x, p)), b, h=h)
    assert kd_growth(b, b_prime, p) == pytest.approx(b_prime * fd, rel=1e-5)


def test_unemployment_growth_examples():
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06, n=0.01)
    assert unemployment_growth(0.03, 0.0, 0.02, p) == pytest.approx(0.0, abs=1e-15)
    assert unemployment_growth(0.04, 0.005, 0.02, p) == pytest.approx(-0.08142857143094262, rel=1e-8)
    assert unemployment_growth(0.05, 0.0, 0.02, p) == pytest.approx(-0.02, abs=1e-15)


def _share_form_inputs(b, p):
    k = solve_kd(b, p)
    y = intensive_output(k, p.curvature)
    return intensive_wage(k, p.curvature) / y, y / k


def test_share_form_examples():
    assert unemployment_growth_share_form(0.04, 0.0, 0.02, 0.01, 0.18, 0.6, 0.4) == pytest.approx(-0.01)
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06, n=0.01)
    share, yk = _share_form_inputs(0.04, p)
    got = unemployment_growth_share_form(0.04, 0.005, 0.02, 0.01, 0.18, share, yk)
    assert got == pytest.approx(-0.08142857143094262, rel=1e-8)
    # structural product 1.718 = 1 / 0.582, with a + n - b = 0
    got = unemployment_growth_share_form(0.03, 0.01, 0.02, 0.01, 1.0, 0.5, 3.436)
    assert got == pytest.approx(-0.005820721769499418, rel=1e-12)
    assert got == pytest.approx(-0.00582, abs=1e-6)


@pytest.mark.parametrize("alpha,sigma,bd", GRID)
@pytest.mark.parametrize("b_prime", [-0.02, 0.0, 0.02])
def test_levels_form_equals_share_form(alpha, sigma, bd, b_prime):
    delta, a, n = 0.05, 0.02, 0.01
    p = make_params(alpha=alpha, sigma=sigma, delta=delta, n=n)
    b = bd - delta
    share, yk = _share_form_inputs(b, p)
    lhs = unemployment_growth(b, b_prime, a, p)
    rhs = unemployment_growth_share_form(b, b_prime, a, n, sigma, share, yk)
    assert abs(lhs - rhs) < 1e-12


@settings(max_examples=200, deadline=None)
@given(
    alpha=st.sampled_from([0.2, 0.3, 0.5]),
    sigma=st.floats(0.05, 0.4),
    bd=st.floats(0.01, 0.5),
    b_prime=st.floats(-0.05, 0.05),
    db=st.floats(1e-4, 0.05),
)
def test_comparative_statics(alpha, sigma, bd, b_prime, db):
    delta, a = 0.05, 0.02
    p = make_params(alpha=alpha, sigma=sigma, delta=delta)
    b = bd - delta
    # raising b with b' held at zero lowers U'/U one for one
    assert unemployment_growth(b + db, 0.0, a, p) - unemployment_growth(b, 0.0, a, p) == pytest.approx(
        -db, abs=1e-14
    )
    # raising b' lowers U'/U
    assert unemployment_growth(b, b_prime + db, a, p) < unemployment_growth(b, b_prime, a, p)


def test_denominator_is_negative():
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06)
    for b in np.linspace(-0.05, 0.4, 20):
        k = solve_kd(b, p)
        assert 0.18 * intensive_rental(k, 0.3) - (b + 0.06) < 0


def test_from_rates_backward_difference():
    path = CapitalGrowthPath.from_rates([0.0, 1.0, 2.0, 4.0], [0.03, 0.05, 0.04, 0.04])
    np.testing.assert_array_equal(path.b_prime, [0.0, 0.05 - 0.03, 0.04 - 0.05, 0.0])
    half = CapitalGrowthPath.from_rates([0.0, 0.5], [0.03, 0.04])
    assert half.b_prime[1] == pytest.approx(0.02)


def test_balanced_growth_keeps_unemployment_constant():
    p = make_params(alpha=0.3, sigma=0.18, delta=0.06, n=0.012)
    path = balanced_growth_path(a=0.018, n=0.012, horizon=60, step=1.0)
    result = reconstruct_unemployment(path, 1.06, 0.018, 0.012, p)
    assert np.max(np.abs(result.U - 1.06)) < 1e-10
    assert len(result) == 61


def test_solow_roundtrip_holds_unemployment_constant(params):
    k_star = steady_state(params, 0.03)
    solow = simulate_solow(0.4 * k_star, params, a=0.03, horizon=60, step=0.01)
    path = solow_capital_growth(solow, params, a=0.03)
    result = reconstruct_unemployment(path, 1.0, 0.03, params.laborforce_growth, params)
    assert np.max(np.abs(result.U - 1.0)) < 1e-8
    np.testing.assert_allclose(result.kd, solow.kd, rtol=1e-12)


def test_solow_roundtrip_with_tech_path(params):
    tech = TechPath(0.03, -0.0001)
    solow = simulate_solow(1.0, params, a=tech, horizon=40, step=0.01)
    path = solow_capital_growth(solow, params, a=tech)
    result = reconstruct_unemployment(path, 1.0, tech, params.laborforce_growth, params)
    assert np.max(np.abs(result.U - 1.0)) < 1e-8


def test_step_shock_sign_pattern(params):
    path = step_shock_path(0.04, 0.05, t_jump=5, horizon=10, step=1.0)
    result = reconstruct_unemployment(path, 1.05, 0.03, params.laborforce_growth, params)
    jump = 5
    assert path.b_prime[jump] > 0
    base = 0.03 + params.laborforce_growth - path.b
    spike = result.dU_over_U - base
    assert spike[jump] < 0
    np.testing.assert_allclose(np.delete(spike, jump), 0.0, atol=1e-15)
    down = step_shock_path(0.05, 0.04, t_jump=5, horizon=10, step=1.0)
    result = reconstruct_unemployment(down, 1.05, 0.03, params.laborforce_growth, params)
    assert result.dU_over_U[jump] - (0.03 + params.laborforce_growth - 0.04) > 0


def test_growth_closure(params):
    rng = np.random.default_rng(3)
    times = np.arange(30.0)
    b = 0.04 + 0.01 * rng.standard_normal(30)
    path = CapitalGrowthPath.from_rates(times, b)
    n = 0.01 + 0.002 * rng.standard_normal(30)
    result = reconstruct_unemployment(path, 1.05, 0.02, n, params)
    np.testing.assert_allclose(np.diff(np.log(result.U)), result.dU_over_U[:-1], atol=1e-14)
    for i in range(30):
        expected = kd_growth(b[i], path.b_prime[i], params) - (b[i] - (0.02 + n[i]))
        assert result.dU_over_U[i] == expected
    for i in range(30):
        lhs = (b[i] + params.depreciation) * result.kd[i]
        assert abs(lhs - params.sigma * result.kd[i] ** params.curvature) < 1e-10
    np.testing.assert_allclose(result.unemployment_rate, 1 - 1 / result.U)


def test_reconstruct_reports_failing_step(params):
    path = CapitalGrowthPath.from_rates([0.0, 1.0, 2.0], [0.03, -0.2, 0.03])
    with pytest.raises(NoSolutionError, match="step 1"):
        reconstruct_unemployment(path, 1.05, 0.02, 0.01, params)
    with pytest.raises(NoSolutionError):
        path.check(params)
