import json
import math

import pytest

from arspec.graphs import antiregular_adjacency
from arspec.oracle import jacobi_eigenvalues
from arspec.solver import (
    FORBIDDEN_HI,
    FORBIDDEN_LO,
    BracketRootError,
    SolverConfig,
    _solve_bracket,
    asymptote_brackets,
    branch_negative,
    branch_positive,
    branch_positive_derivative,
    closure_witness,
    eigenvalue_estimates,
    extreme_eigenvalue_bounds,
    forbidden_interval_check,
    innermost_eigenvalues,
    lambda_max_midpoint_estimate,
    last_bracket_ratio,
    odd_ratio_negative,
    odd_ratio_positive,
    sine_ratio_even,
    sine_ratio_odd,
    solve_spectrum,
    symmetry_defect,
    symmetry_defect_bound,
    theta_of_lambda,
)

SQRT2 = math.sqrt(2.0)


# --- angle substitution and branches -------------------------------------


def test_forbidden_interval_endpoints():
    assert FORBIDDEN_LO == pytest.approx(-(1.0 + SQRT2) / 2.0, abs=0)
    assert FORBIDDEN_HI == pytest.approx((SQRT2 - 1.0) / 2.0, abs=0)


def test_theta_of_lambda_reference_point():
    # lambda = 1 gives cos(theta) = -3/4
    assert theta_of_lambda(1.0) == pytest.approx(math.acos(-0.75), abs=1e-12)
    assert theta_of_lambda(1.0) == pytest.approx(2.41885841, abs=1e-8)


def test_theta_of_lambda_boundary_clamps_to_zero():
    assert theta_of_lambda(FORBIDDEN_HI) == pytest.approx(0.0, abs=1e-7)
    assert theta_of_lambda(FORBIDDEN_LO) == pytest.approx(0.0, abs=1e-7)


@pytest.mark.parametrize("lam", [0.0, -1.0, 0.1, -0.5, -1.2, 0.2])
def test_theta_of_lambda_rejects_gap(lam):
    with pytest.raises(ValueError):
        theta_of_lambda(lam)


def test_branch_values_at_zero():
    assert branch_positive(0.0) == pytest.approx((SQRT2 - 1.0) / 2.0, abs=1e-15)
    assert branch_negative(0.0) == pytest.approx(-(SQRT2 + 1.0) / 2.0, abs=1e-15)


def test_branches_sum_to_minus_one():
    for i in range(10000):
        theta = math.pi * (i + 0.5) / 10001.0
        assert abs(branch_positive(theta) + branch_negative(theta) + 1.0) <= 1e-12


def test_branch_round_trip():
    for lam in (FORBIDDEN_HI, 0.3, 1.0, 2.0, 17.5):
        assert branch_positive(theta_of_lambda(lam)) == pytest.approx(lam, rel=1e-12)
    for lam in (FORBIDDEN_LO, -1.3, -2.0, -17.5):
        assert branch_negative(theta_of_lambda(lam)) == pytest.approx(lam, rel=1e-12)


def test_branch_growth_near_pi():
    # branch_positive(theta) ~ 1/(pi - theta) close to the pole
    for eps in (1e-2, 1e-4, 1e-6):
        assert branch_positive(math.pi - eps) == pytest.approx(1.0 / eps, rel=2e-2)


def test_branch_domain_errors():
    for bad in (-0.1, math.pi, 4.0):
        with pytest.raises(ValueError):
            branch_positive(bad)
        with pytest.raises(ValueError):
            branch_negative(bad)


def test_derivative_closed_point():
    assert branch_positive_derivative(math.pi / 2) == pytest.approx(
        1.0 / (2.0 * math.sqrt(3.0)), abs=1e-12
    )


def test_derivative_matches_finite_differences():
    h = 1e-6
    for i in range(100):
        theta = 0.01 + (math.pi - 0.02) * i / 99.0
        fd = (branch_positive(theta + h) - branch_positive(theta - h)) / (2.0 * h)
        assert branch_positive_derivative(theta) == pytest.approx(fd, rel=1e-6, abs=1e-9)


def test_derivative_is_increasing():
    prev = 0.0
    for i in range(1, 200):
        theta = math.pi * i / 200.0
        val = branch_positive_derivative(theta)
        assert val > prev
        prev = val


def test_derivative_domain():
    with pytest.raises(ValueError):
        branch_positive_derivative(0.0)
    with pytest.raises(ValueError):
        branch_positive_derivative(math.pi)


# --- sine ratios ----------------------------------------------------------


def test_even_ratio_endpoints():
    assert sine_ratio_even(0.0, 8) == pytest.approx(8.0 / 15.0, abs=1e-15)
    assert sine_ratio_even(math.pi, 8) == 8.0
    assert sine_ratio_even(0.0, 1) == 1.0


def test_even_ratio_denominator_identity():
    # sin(k t) + sin((k-1) t) = 2 sin((2k-1) t/2) cos(t/2)
    k = 8
    for i in range(1, 200):
        theta = math.pi * i / 200.0
        direct = math.sin(k * theta) + math.sin((k - 1) * theta)
        product = 2.0 * math.sin((2 * k - 1) * 0.5 * theta) * math.cos(0.5 * theta)
        assert abs(direct - product) <= 1e-12
        num = math.sin(k * theta)
        if abs(product) > 1e-6:
            assert sine_ratio_even(theta, k) == pytest.approx(num / product, rel=1e-9)


def test_even_ratio_out_of_range_and_pole_blowup():
    k = 8
    with pytest.raises(ValueError):
        sine_ratio_even(-0.5, k)
    with pytest.raises(ValueError):
        sine_ratio_even(4.0, k)
    # the poles sit at irrational angles, so floats only graze them
    gamma_1 = 2.0 * math.pi / 15.0
    assert abs(sine_ratio_even(gamma_1 * (1.0 + 1e-12), k)) > 1e10


def test_odd_ratio_reference_values():
    assert sine_ratio_odd(0.0, 8) == pytest.approx(7.0 / 8.0, abs=1e-15)
    assert sine_ratio_odd(math.pi, 8) == pytest.approx(-7.0 / 8.0, abs=1e-15)
    assert sine_ratio_odd(0.3, 8) == pytest.approx(math.sin(2.1) / math.sin(2.4), rel=1e-12)
    assert sine_ratio_odd(0.3, 8) == pytest.approx(1.2779, abs=1e-4)


def test_odd_ratio_pole_magnitude():
    # theta = pi/2 sits on an asymptote for k = 2
    assert abs(sine_ratio_odd(math.pi / 2 * (1.0 + 1e-12), 2)) > 1e10


def test_odd_branch_ratio_endpoints():
    assert odd_ratio_positive(0.0) == pytest.approx(5.0 + math.sqrt(8.0), abs=1e-12)
    assert odd_ratio_negative(0.0) == pytest.approx(5.0 - math.sqrt(8.0), abs=1e-12)
    assert odd_ratio_positive(math.pi) == pytest.approx(-1.0, abs=1e-12)
    assert odd_ratio_negative(math.pi) == pytest.approx(-1.0, abs=1e-12)


def test_odd_ratio_consistent_with_branches():
    for i in range(1, 100):
        theta = math.pi * i / 101.0
        lam = branch_positive(theta)
        want = (2.0 - lam * lam) / (lam * (lam + 1.0))
        assert odd_ratio_positive(theta) == pytest.approx(want, rel=1e-9, abs=1e-9)
        lam = branch_negative(theta)
        want = (2.0 - lam * lam) / (lam * (lam + 1.0))
        assert odd_ratio_negative(theta) == pytest.approx(want, rel=1e-9, abs=1e-9)


# --- brackets ---------------------------------------------------------------


def test_bracket_positions_even():
    bs = asymptote_brackets(8, "even")
    step = 2.0 * math.pi / 15.0
    assert bs.asymptotes == tuple(j * step for j in range(8))
    assert bs.asymptotes[3] == pytest.approx(6.0 * math.pi / 15.0, rel=1e-15)
    ivs = bs.intervals()
    assert len(ivs) == 8
    assert ivs[-1][1] == math.pi


def test_bracket_positions_odd():
    bs = asymptote_brackets(5, "odd")
    assert bs.asymptotes == tuple(j * math.pi / 5.0 for j in range(5))


def test_bracket_degenerate_and_errors():
    assert asymptote_brackets(1, "even").asymptotes == (0.0,)
    with pytest.raises(ValueError):
        asymptote_brackets(0, "even")
    with pytest.raises(ValueError):
        asymptote_brackets(3, "mixed")


# --- full spectra -----------------------------------------------------------


def test_single_edge_spectrum():
    spec = solve_spectrum(2)
    assert spec.trivial == -1.0
    assert spec.negatives == []
    assert spec.positives == pytest.approx([1.0], abs=1e-10)
    assert spec.eigenvalues() == pytest.approx([-1.0, 1.0], abs=1e-10)


def test_three_vertex_star_spectrum():
    spec = solve_spectrum(3)
    assert spec.trivial == 0.0
    assert spec.eigenvalues() == pytest.approx([-SQRT2, 0.0, SQRT2], abs=1e-10)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 10, 17, 40, 81])
def test_spectrum_matches_dense_oracle(n):
    cheb = solve_spectrum(n).eigenvalues()
    dense = jacobi_eigenvalues(antiregular_adjacency(n).astype(float)).eigenvalues
    assert cheb == pytest.approx(dense, abs=1e-8)


@pytest.mark.parametrize("n", [2, 9, 30, 501, 1000])
def test_residuals_stay_small(n):
    spec = solve_spectrum(n)
    worst = max(spec.residuals_pos + spec.residuals_neg)
    assert worst < 1e-9


def test_root_counts_and_containment():
    for n in range(2, 60):
        spec = solve_spectrum(n)
        k = n // 2
        assert len(spec.positives) == k
        assert len(spec.negatives) == (k if n % 2 else k - 1)
        for theta, (lo, hi) in zip(
            spec.thetas_pos + spec.thetas_neg, spec.brackets_pos + spec.brackets_neg
        ):
            assert lo < theta < hi


def test_positives_ascend_negatives_descend():
    spec = solve_spectrum(24)
    assert spec.positives == sorted(spec.positives)
    assert spec.negatives == sorted(spec.negatives, reverse=True)
    assert spec.negatives[0] == max(spec.negatives)


def test_solve_spectrum_validation():
    with pytest.raises(ValueError):
        solve_spectrum(1)
    with pytest.raises(ValueError):
        solve_spectrum(10, SolverConfig(theta_tolerance=1.0))


def test_solver_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(theta_tolerance=0.0)
    with pytest.raises(ValueError):
        SolverConfig(max_bisection_iters=0)
    with pytest.raises(ValueError):
        SolverConfig(bracket_inset=0.7)
    with pytest.raises(ValueError):
        SolverConfig(scan_points_per_bracket=1)


def test_bracket_error_carries_index():
    cfg = SolverConfig()
    with pytest.raises(BracketRootError) as info:
        _solve_bracket(lambda th: 1.0, 0.1, 0.2, cfg, index=5)
    assert info.value.bracket_index == 5


def test_huge_order_argument_reduction():
    # one bracket solved with the exact-rational sine path (k > 10^6)
    ratio = last_bracket_ratio(2_000_000)
    assert 0.5 < ratio < 0.5001


# --- wire formats -----------------------------------------------------------


def test_spectrum_json_shape():
    doc = json.loads(solve_spectrum(9).to_json())
    assert set(doc) == {
        "n",
        "trivial",
        "positives",
        "negatives",
        "thetas_pos",
        "thetas_neg",
        "residuals",
    }
    assert doc["n"] == 9
    assert doc["trivial"] == 0.0
    assert len(doc["positives"]) == 4
    assert len(doc["negatives"]) == 4
    assert len(doc["residuals"]) == 8


def test_spectrum_csv_shape():
    text = solve_spectrum(8).to_csv()
    lines = text.strip("\r\n").split("\r\n")
    assert lines[0] == "index,sign_class,theta,lambda,residual,bracket_lo,bracket_hi"
    assert lines[1].startswith("0,trivial,,")
    assert len(lines) == 1 + 1 + 4 + 3
    row = lines[2].split(",")
    assert row[1] == "positive"
    assert float(row[3]) > 0.0


# --- derived quantities -----------------------------------------------------


def test_forbidden_interval_margins():
    spec = solve_spectrum(10)
    assert forbidden_interval_check(spec)
    assert forbidden_interval_check(spec, margin=0.0)
    assert not forbidden_interval_check(spec, margin=0.1)
    with pytest.raises(ValueError):
        forbidden_interval_check(spec, margin=-1e-3)


def test_extreme_bounds_even():
    spec = solve_spectrum(8)
    max_bound, min_bound = extreme_eigenvalue_bounds(spec)
    assert max_bound == 4.0
    assert min_bound == pytest.approx(branch_negative(6.0 * math.pi / 7.0), abs=1e-15)
    assert spec.positives[-1] > max_bound
    assert min(spec.negatives) > min_bound


def test_extreme_bounds_rejects_odd_and_tiny():
    with pytest.raises(ValueError):
        extreme_eigenvalue_bounds(solve_spectrum(9))
    with pytest.raises(ValueError):
        extreme_eigenvalue_bounds(solve_spectrum(2))


def test_last_bracket_ratio_reference_row():
    assert last_bracket_ratio(125) == pytest.approx(0.5020031290, abs=1e-6)
    with pytest.raises(ValueError):
        last_bracket_ratio(1)


def test_last_bracket_ratio_drifts_to_half():
    assert abs(last_bracket_ratio(500) - 0.5) < 0.003


def test_midpoint_estimate_tracks_lambda_max():
    est = lambda_max_midpoint_estimate(125)
    lam_max = solve_spectrum(250).positives[-1]
    assert abs(est - lam_max) / lam_max < 0.01


def test_innermost_pair_and_limits():
    lam_pos, lam_neg = innermost_eigenvalues(1)
    assert lam_neg is None
    assert lam_pos == pytest.approx(1.0, abs=1e-10)
    prev_pos, prev_neg = None, None
    for k in range(1, 41):
        lam_pos, lam_neg = innermost_eigenvalues(k)
        assert lam_pos > FORBIDDEN_HI
        if prev_pos is not None:
            assert lam_pos < prev_pos
        prev_pos = lam_pos
        if lam_neg is not None:
            assert lam_neg < FORBIDDEN_LO
            if prev_neg is not None:
                assert lam_neg > prev_neg
            prev_neg = lam_neg


def test_innermost_matches_full_solve():
    spec = solve_spectrum(26)
    lam_pos, lam_neg = innermost_eigenvalues(13)
    assert lam_pos == pytest.approx(spec.positives[0], abs=1e-12)
    assert lam_neg == pytest.approx(spec.negatives[0], abs=1e-12)


def test_symmetry_defect_under_bound():
    spec = solve_spectrum(16)
    for j in range(1, 8):
        defect = symmetry_defect(spec, j)
        assert defect <= symmetry_defect_bound(8, j)
    with pytest.raises(ValueError):
        symmetry_defect(spec, 8)
    with pytest.raises(ValueError):
        symmetry_defect(solve_spectrum(9), 1)
    with pytest.raises(ValueError):
        symmetry_defect_bound(8, 0)


def test_estimates_bound_and_halving():
    spec = solve_spectrum(16)
    for j in range(1, 8):
        est_pos, est_neg, bound = eigenvalue_estimates(8, j)
        assert abs(spec.positives[j - 1] - est_pos) <= bound
        assert abs(spec.negatives[j - 1] - est_neg) <= bound
    # doubling k with the same pole index ratio roughly halves the bound
    _, _, b1 = eigenvalue_estimates(8, 4)
    _, _, b2 = eigenvalue_estimates(16, 8)
    assert b2 < 0.6 * b1
    with pytest.raises(ValueError):
        eigenvalue_estimates(8, 8)


# --- closure witnesses -------------------------------------------------------


def test_witness_trivial_values():
    assert closure_witness(0.0, 1e-6) == (3, 0.0)
    assert closure_witness(-1.0, 1e-6) == (2, -1.0)


def test_witness_near_positive_target():
    n, mu = closure_witness(0.3, 1e-3)
    assert abs(mu - 0.3) < 1e-3
    assert n % 2 == 0 and n >= 4


def test_witness_near_negative_target():
    n, mu = closure_witness(-2.0, 1e-3)
    assert abs(mu + 2.0) < 1e-3


def test_witness_odd_parity():
    n, mu = closure_witness(0.4, 1e-3, parity="odd")
    assert n % 2 == 1
    assert abs(mu - 0.4) < 1e-3


def test_witness_rejects_gap_and_bad_epsilon():
    with pytest.raises(ValueError):
        closure_witness(0.05, 1e-3)
    with pytest.raises(ValueError):
        closure_witness(0.3, 0.0)
    with pytest.raises(ValueError):
        closure_witness(0.3, 1e-3, parity="either")
