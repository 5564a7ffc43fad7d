"""Eigenvalues of anti-regular graphs by trigonometric root isolation.

Away from the single trivial eigenvalue (-1 for even order, 0 for odd), each
eigenvalue lambda of the anti-regular graph corresponds to an angle theta in
[0, pi] through cos(theta) = (1 - 2 lambda - 2 lambda^2) / (2 lambda (lambda
+ 1)).  Inverting the substitution gives two branch curves

    branch_positive(theta) = (-1 + sqrt((c + 3)/(c + 1))) / 2,
    branch_negative(theta) = (-1 - sqrt((c + 3)/(c + 1))) / 2,

with c = cos(theta); their sum is identically -1 and their ranges are the
two components of the complement of the forbidden interval

    [(-1 - sqrt(2))/2, (-1 + sqrt(2))/2],

which contains no nontrivial eigenvalue.  An angle theta belongs to the
spectrum exactly when a ratio of sines equals the branch value: for order
2k the ratio is sin(k theta) / (sin(k theta) + sin((k-1) theta)), for order
2k+1 the condition reads sin((k-1) theta) / sin(k theta) equated to the
branch image of (2 - lambda^2) / (lambda (lambda + 1)).

The ratio has k - 1 (even) or k - 1 (odd, interior) poles that split (0, pi)
into brackets, and each bracket carries exactly one root per branch (the
even case loses the negative-branch root of the last bracket).  The solver
samples each bracket just inside its poles, locates the sign change, and
bisects until the floating-point midpoint collides with an endpoint, so the
residual is limited only by evaluation noise.  Near theta = pi the positive
branch blows up like 1/(pi - theta); the last even bracket is therefore
scanned on a geometric mesh approaching pi instead of a uniform one.

Everything is plain float arithmetic except one guard: for k above one
million the reduction of k * theta modulo 2 pi is done in exact rational
arithmetic before taking the sine, because the naive product loses about
log2(k) bits of the angle.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

FORBIDDEN_LO = -(1.0 + math.sqrt(2.0)) / 2.0
FORBIDDEN_HI = (math.sqrt(2.0) - 1.0) / 2.0

# Largest sine multiplier evaluated as a plain float product.
_DIRECT_MULT_LIMIT = 1_000_000

# 2 pi to 60 significant digits, for exact-rational argument reduction.
_TWO_PI = Fraction("6.28318530717958647692528676655900576839433879875021164194989")


class BracketRootError(RuntimeError):
    """A bracket failed to produce the expected root.

    Carries ``bracket_index`` (1-based, or None) so callers can report which
    interval between consecutive poles went wrong.
    """

    def __init__(self, message: str, bracket_index: int | None = None):
        super().__init__(message)
        self.bracket_index = bracket_index


@dataclass(frozen=True)
class SolverConfig:
    theta_tolerance: float = 1e-13
    max_bisection_iters: int = 200
    bracket_inset: float = 1e-9  # relative to bracket width
    scan_points_per_bracket: int = 32

    def __post_init__(self):
        if not self.theta_tolerance > 0.0:
            raise ValueError("theta_tolerance must be positive")
        if self.max_bisection_iters < 1:
            raise ValueError("max_bisection_iters must be >= 1")
        if not 0.0 < self.bracket_inset < 0.5:
            raise ValueError("bracket_inset must lie in (0, 0.5)")
        if self.scan_points_per_bracket < 2:
            raise ValueError("scan_points_per_bracket must be >= 2")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class BracketSet:
    """Poles of the sine ratio, listed as gamma_0 = 0 < ... < gamma_{k-1}.

    Consecutive entries (with pi appended) bound the root brackets.  For
    even order 2k the spacing is 2 pi / (2k - 1); for odd order 2k + 1 it
    is pi / k.
    """

    k: int
    parity: str
    asymptotes: tuple[float, ...]

    def intervals(self) -> list[tuple[float, float]]:
        edges = list(self.asymptotes) + [math.pi]
        return [(edges[i], edges[i + 1]) for i in range(len(self.asymptotes))]


def asymptote_brackets(k: int, parity: str) -> BracketSet:
    if k < 1:
        raise ValueError("need k >= 1, got %d" % k)
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd', got %r" % (parity,))
    step = _bracket_step(k, parity)
    return BracketSet(k=k, parity=parity, asymptotes=tuple(j * step for j in range(k)))


def _bracket_step(k: int, parity: str) -> float:
    if parity == "even":
        return 2.0 * math.pi / (2 * k - 1) if k > 1 else math.pi
    return math.pi / k


def theta_of_lambda(lam: float) -> float:
    """Angle in [0, pi] associated with an eigenvalue outside the gap.

    Raises ValueError for lam strictly inside the forbidden interval, where
    the cosine argument leaves [-1, 1] (the denominator vanishes at the
    trivial eigenvalues 0 and -1, which also lie inside).
    """
    lam = float(lam)
    den = 2.0 * lam * (lam + 1.0)
    if den == 0.0:
        raise ValueError("no angle: %r lies inside the forbidden interval" % (lam,))
    arg = (1.0 - 2.0 * lam - 2.0 * lam * lam) / den
    if arg > 1.0:
        if arg > 1.0 + 1e-12:
            raise ValueError("no angle: %r lies inside the forbidden interval" % (lam,))
        arg = 1.0
    elif arg < -1.0:
        if arg < -1.0 - 1e-12:
            raise ValueError("no angle: %r lies inside the forbidden interval" % (lam,))
        arg = -1.0
    return math.acos(arg)


def _cos_plus_one(theta: float) -> float:
    # cos(theta) + 1 without cancellation near theta = pi
    c = math.cos(0.5 * theta)
    return 2.0 * c * c


def branch_positive(theta: float) -> float:
    """Positive eigenvalue branch; increasing from (sqrt(2)-1)/2 at theta=0."""
    if not 0.0 <= theta < math.pi:
        raise ValueError("positive branch needs theta in [0, pi), got %r" % (theta,))
    c1 = _cos_plus_one(theta)
    return 0.5 * (math.sqrt((c1 + 2.0) / c1) - 1.0)


def branch_negative(theta: float) -> float:
    """Negative eigenvalue branch, equal to -1 - branch_positive(theta)."""
    if not 0.0 <= theta < math.pi:
        raise ValueError("negative branch needs theta in [0, pi), got %r" % (theta,))
    c1 = _cos_plus_one(theta)
    return -0.5 * (math.sqrt((c1 + 2.0) / c1) + 1.0)


def branch_positive_derivative(theta: float) -> float:
    """d branch_positive / d theta, for theta strictly inside (0, pi).

    Increasing on the whole interval, which is what makes it usable as a
    per-bracket Lipschitz constant when evaluated at the right endpoint.
    """
    if not 0.0 < theta < math.pi:
        raise ValueError("derivative needs theta in (0, pi), got %r" % (theta,))
    c1 = _cos_plus_one(theta)
    return math.sin(theta) / (2.0 * c1 * math.sqrt(c1 * (c1 + 2.0)))


def _sin_mult(j: int, theta: float) -> float:
    # sin(j * theta); exact-rational reduction once j would erase too many
    # low bits of the angle in the float product.
    if j <= _DIRECT_MULT_LIMIT:
        return math.sin(j * theta)
    reduced = (Fraction(j) * Fraction(theta)) % _TWO_PI
    return math.sin(float(reduced))


def sine_ratio_even(theta: float, k: int) -> float:
    """sin(k t) / (sin(k t) + sin((k-1) t)) for the order-2k eigenvalue test.

    The denominator is evaluated in the product form
    2 sin((2k-1) t / 2) cos(t / 2), which keeps full relative accuracy next
    to its zeros instead of cancelling.  The removable endpoint values are
    k/(2k-1) at 0 and k at pi; interior poles raise ValueError.
    """
    k = _check_k(k)
    if not 0.0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi], got %r" % (theta,))
    return _ratio_even(theta, k)


def _ratio_even(theta: float, k: int) -> float:
    if theta == 0.0:
        return k / (2.0 * k - 1.0)
    if theta == math.pi:
        return float(k)
    den = 2.0 * _sin_mult(2 * k - 1, 0.5 * theta) * math.cos(0.5 * theta)
    if den == 0.0:
        raise ValueError("pole of the sine ratio at theta=%r" % (theta,))
    return _sin_mult(k, theta) / den


def sine_ratio_odd(theta: float, k: int) -> float:
    """sin((k-1) t) / sin(k t) for the order-(2k+1) eigenvalue test.

    Removable endpoint values are (k-1)/k at 0 and -(k-1)/k at pi; the k-1
    interior poles at multiples of pi/k raise ValueError.
    """
    k = _check_k(k)
    if not 0.0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi], got %r" % (theta,))
    return _ratio_odd(theta, k)


def _ratio_odd(theta: float, k: int) -> float:
    if theta == 0.0:
        return (k - 1.0) / k
    if theta == math.pi:
        return -(k - 1.0) / k
    den = _sin_mult(k, theta)
    if den == 0.0:
        raise ValueError("pole of the sine ratio at theta=%r" % (theta,))
    return _sin_mult(k - 1, theta) / den


def odd_ratio_positive(theta: float) -> float:
    """(2 - lam^2)/(lam (lam + 1)) along lam = branch_positive(theta)."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi], got %r" % (theta,))
    c1 = _cos_plus_one(theta)
    return 3.0 * c1 - 1.0 + math.sqrt(c1 * (c1 + 2.0))


def odd_ratio_negative(theta: float) -> float:
    """(2 - lam^2)/(lam (lam + 1)) along lam = branch_negative(theta)."""
    if not 0.0 <= theta <= math.pi:
        raise ValueError("theta must lie in [0, pi], got %r" % (theta,))
    c1 = _cos_plus_one(theta)
    return 3.0 * c1 - 1.0 - math.sqrt(c1 * (c1 + 2.0))


def _check_k(k) -> int:
    k = int(k)
    if k < 1:
        raise ValueError("need k >= 1, got %d" % k)
    return k


# ---------------------------------------------------------------------------
# root isolation


def _scan_sign_change(fn, lo, hi, cfg, include_lo=False, include_hi=False):
    """Uniformly sample (lo, hi) inside a relative inset, return a sign pair.

    The inset keeps the samples off the poles at the excluded endpoints; it
    is halved up to six times when no sign change shows up, since the root
    may hide between a pole and the innermost sample.
    """
    width = hi - lo
    inset = cfg.bracket_inset
    pts = cfg.scan_points_per_bracket
    for _ in range(7):
        a = lo if include_lo else lo + inset * width
        b = hi if include_hi else hi - inset * width
        if not a < b:
            inset *= 0.5
            continue
        xs = [a + (b - a) * i / (pts - 1) for i in range(pts)]
        vals = [fn(x) for x in xs]
        for i in range(pts):
            if vals[i] == 0.0:
                return xs[i], xs[i], 0.0, 0.0
        for i in range(1, pts):
            if (vals[i - 1] < 0.0) != (vals[i] < 0.0):
                return xs[i - 1], xs[i], vals[i - 1], vals[i]
        inset *= 0.5
    raise BracketRootError(
        "no sign change found in (%r, %r) after inset refinement" % (lo, hi)
    )


def _geometric_tail(fn, lo, hi, cfg):
    """Sign pair for a bracket whose root crowds the right endpoint.

    Samples hi - width/2, hi - width/4, ... so that a root at distance d
    from hi is found after about log2(width/d) evaluations, where a uniform
    scan would need width/d of them.
    """
    width = hi - lo
    inset = cfg.bracket_inset
    a = lo + inset * width
    fa = fn(a)
    tries = 0
    while fa < 0.0 and tries < 6:
        inset *= 0.5
        a = lo + inset * width
        fa = fn(a)
        tries += 1
    if fa == 0.0:
        return a, a, 0.0, 0.0
    if fa < 0.0:
        raise BracketRootError("left anchor stayed negative next to the pole")
    prev, fprev = a, fa
    for i in range(1, 64):
        x = hi - width * (0.5 ** i)
        if x <= prev:
            continue
        fx = fn(x)
        if fx == 0.0:
            return x, x, 0.0, 0.0
        if (fx < 0.0) != (fprev < 0.0):
            return prev, x, fprev, fx
        prev, fprev = x, fx
    raise BracketRootError("no sign change on the geometric mesh toward %r" % (hi,))


def _bisect(fn, a, b, fa, fb, cfg):
    """Bisect a sign change down to floating-point collision.

    Returns (root, |fn(root)|).  The loop stops when the midpoint equals an
    endpoint, so the final width is a couple of ulps, far below
    theta_tolerance; the tolerance only serves as the acceptance check if
    max_bisection_iters runs out first.
    """
    if a == b:
        return a, 0.0
    for _ in range(cfg.max_bisection_iters):
        mid = 0.5 * (a + b)
        if not a < mid < b:
            break
        fm = fn(mid)
        if fm == 0.0:
            return mid, 0.0
        if (fm < 0.0) == (fa < 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    if b - a > cfg.theta_tolerance:
        raise BracketRootError(
            "bisection stopped at width %.3e above theta_tolerance %.3e"
            % (b - a, cfg.theta_tolerance)
        )
    return (a, abs(fa)) if abs(fa) <= abs(fb) else (b, abs(fb))


def _solve_bracket(fn, lo, hi, cfg, include_lo=False, include_hi=False,
                   geometric=False, index=None):
    try:
        if geometric:
            a, b, fa, fb = _geometric_tail(fn, lo, hi, cfg)
        else:
            a, b, fa, fb = _scan_sign_change(fn, lo, hi, cfg, include_lo, include_hi)
        root, resid = _bisect(fn, a, b, fa, fb, cfg)
    except BracketRootError as exc:
        exc.bracket_index = index
        raise
    return root, resid


# ---------------------------------------------------------------------------
# spectra


@dataclass
class SpectrumResult:
    """Complete spectrum of one anti-regular graph.

    ``positives`` is ascending; ``negatives`` starts next to the forbidden
    interval and descends.  Both are in bracket order, paired with their
    angles, residuals and bracket endpoints index by index.  ``residuals``
    on the wire is the concatenation positives-then-negatives.
    """

    n: int
    trivial: float
    positives: list[float] = field(default_factory=list)
    negatives: list[float] = field(default_factory=list)
    thetas_pos: list[float] = field(default_factory=list)
    thetas_neg: list[float] = field(default_factory=list)
    residuals_pos: list[float] = field(default_factory=list)
    residuals_neg: list[float] = field(default_factory=list)
    brackets_pos: list[tuple[float, float]] = field(default_factory=list)
    brackets_neg: list[tuple[float, float]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def parity(self) -> str:
        return "odd" if self.n % 2 else "even"

    def eigenvalues(self) -> list[float]:
        """All n eigenvalues in ascending order, trivial one included."""
        return sorted([*self.negatives, self.trivial, *self.positives])

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "trivial": self.trivial,
                "positives": self.positives,
                "negatives": self.negatives,
                "thetas_pos": self.thetas_pos,
                "thetas_neg": self.thetas_neg,
                "residuals": self.residuals_pos + self.residuals_neg,
            }
        )

    def to_csv(self) -> str:
        lines = ["index,sign_class,theta,lambda,residual,bracket_lo,bracket_hi"]
        lines.append("0,trivial,,%r,,," % self.trivial)
        for i, lam in enumerate(self.positives):
            lines.append(
                "%d,positive,%r,%r,%r,%r,%r"
                % (
                    i + 1,
                    self.thetas_pos[i],
                    lam,
                    self.residuals_pos[i],
                    self.brackets_pos[i][0],
                    self.brackets_pos[i][1],
                )
            )
        for i, lam in enumerate(self.negatives):
            lines.append(
                "%d,negative,%r,%r,%r,%r,%r"
                % (
                    i + 1,
                    self.thetas_neg[i],
                    lam,
                    self.residuals_neg[i],
                    self.brackets_neg[i][0],
                    self.brackets_neg[i][1],
                )
            )
        return "\r\n".join(lines) + "\r\n"


def solve_spectrum(n: int, config: SolverConfig | None = None) -> SpectrumResult:
    """Spectrum of the anti-regular graph on n vertices, n >= 2.

    Solves one root per branch per bracket and inserts the trivial
    eigenvalue analytically.  Raises BracketRootError (with the offending
    bracket index) if any bracket refuses to produce its root; this does
    not happen for any supported order.
    """
    n = int(n)
    if n < 2:
        raise ValueError("anti-regular graphs need n >= 2, got %d" % n)
    cfg = config if config is not None else DEFAULT_CONFIG
    k = n // 2
    parity = "odd" if n % 2 else "even"
    step = _bracket_step(k, parity)
    if cfg.theta_tolerance >= step:
        raise ValueError(
            "theta_tolerance %.3e is not below the bracket width %.3e"
            % (cfg.theta_tolerance, step)
        )
    brackets = asymptote_brackets(k, parity)
    intervals = brackets.intervals()
    result = SpectrumResult(n=n, trivial=0.0 if n % 2 else -1.0)

    if parity == "even":
        pos_res = lambda th: _ratio_even(th, k) - branch_positive(th)
        neg_res = lambda th: _ratio_even(th, k) - branch_negative(th)
        for j, (lo, hi) in enumerate(intervals, start=1):
            theta, resid = _solve_bracket(
                pos_res, lo, hi, cfg,
                include_lo=(j == 1), geometric=(j == k), index=j,
            )
            result.positives.append(branch_positive(theta))
            result.thetas_pos.append(theta)
            result.residuals_pos.append(resid)
            result.brackets_pos.append((lo, hi))
            if j <= k - 1:
                theta, resid = _solve_bracket(
                    neg_res, lo, hi, cfg, include_lo=(j == 1), index=j
                )
                result.negatives.append(branch_negative(theta))
                result.thetas_neg.append(theta)
                result.residuals_neg.append(resid)
                result.brackets_neg.append((lo, hi))
    else:
        pos_res = lambda th: _ratio_odd(th, k) - odd_ratio_positive(th)
        neg_res = lambda th: _ratio_odd(th, k) - odd_ratio_negative(th)
        for j, (lo, hi) in enumerate(intervals, start=1):
            for res_fn, lams, thetas, resids, bracks, branch in (
                (pos_res, result.positives, result.thetas_pos,
                 result.residuals_pos, result.brackets_pos, branch_positive),
                (neg_res, result.negatives, result.thetas_neg,
                 result.residuals_neg, result.brackets_neg, branch_negative),
            ):
                theta, resid = _solve_bracket(
                    res_fn, lo, hi, cfg,
                    include_lo=(j == 1), include_hi=(j == k), index=j,
                )
                lams.append(branch(theta))
                thetas.append(theta)
                resids.append(resid)
                bracks.append((lo, hi))
    return result


# ---------------------------------------------------------------------------
# verification helpers


def forbidden_interval_check(spec: SpectrumResult, margin: float = 0.0) -> bool:
    """True iff every nontrivial eigenvalue clears the forbidden interval.

    With a positive margin the eigenvalues must additionally stay that far
    away from both interval endpoints.
    """
    if margin < 0.0:
        raise ValueError("margin must be nonnegative, got %r" % (margin,))
    for lam in spec.positives:
        if lam < FORBIDDEN_HI + margin:
            return False
    for lam in spec.negatives:
        if lam > FORBIDDEN_LO - margin:
            return False
    return True


def extreme_eigenvalue_bounds(spec: SpectrumResult) -> tuple[float, float]:
    """Lower bounds (n/2 for lambda_max, branch value for lambda_min).

    Only the even orders n >= 4 satisfy the statement; n = 2 and odd orders
    raise ValueError.  RuntimeError signals an actual bound violation, which
    would mean the solved spectrum is wrong.
    """
    if spec.parity != "even":
        raise ValueError("extreme bounds are stated for even order only")
    if spec.n < 4:
        raise ValueError("extreme bounds need n >= 4, got %d" % spec.n)
    n = spec.n
    max_bound = n / 2.0
    min_bound = branch_negative((n - 2.0) * math.pi / (n - 1.0))
    lam_max = spec.positives[-1]
    lam_min = min(spec.negatives)
    if not lam_max > max_bound:
        raise RuntimeError(
            "largest eigenvalue %r fails bound %r at n=%d" % (lam_max, max_bound, n)
        )
    if not lam_min > min_bound:
        raise RuntimeError(
            "smallest eigenvalue %r fails bound %r at n=%d" % (lam_min, min_bound, n)
        )
    return max_bound, min_bound


def last_bracket_ratio(k: int, config: SolverConfig | None = None) -> float:
    """Relative position of the largest eigenvalue's angle in its bracket.

    For order 2k, returns (theta_k - gamma_{k-1}) / (pi - gamma_{k-1}); the
    value drifts toward 1/2 as k grows.  Only the last bracket is solved,
    so large k stay cheap.
    """
    k = int(k)
    if k < 2:
        raise ValueError("ratio needs k >= 2, got %d" % k)
    cfg = config if config is not None else DEFAULT_CONFIG
    step = _bracket_step(k, "even")
    lo = (k - 1) * step
    fn = lambda th: _ratio_even(th, k) - branch_positive(th)
    theta, _ = _solve_bracket(fn, lo, math.pi, cfg, geometric=True, index=k)
    return (theta - lo) / (math.pi - lo)


def lambda_max_midpoint_estimate(k: int) -> float:
    """Sine ratio at the midpoint of the last bracket of order 2k.

    Cheap closed-form stand-in for the largest eigenvalue, accurate to
    about a percent already for k in the hundreds.
    """
    k = _check_k(k)
    step = _bracket_step(k, "even")
    mid = (k - 1) * step + 0.5 * (math.pi - (k - 1) * step)
    return _ratio_even(mid, k)


def innermost_eigenvalues(
    k: int, config: SolverConfig | None = None
) -> tuple[float, float | None]:
    """First-bracket eigenvalue pair of the order-2k graph.

    These are the nontrivial eigenvalues closest to the forbidden interval;
    the positive one decreases toward its endpoint as k grows and the
    negative one increases toward the other.  k = 1 has no negative-branch
    root, reported as None.
    """
    k = _check_k(k)
    cfg = config if config is not None else DEFAULT_CONFIG
    step = _bracket_step(k, "even")
    pos_fn = lambda th: _ratio_even(th, k) - branch_positive(th)
    theta, _ = _solve_bracket(
        pos_fn, 0.0, step, cfg, include_lo=True, geometric=(k == 1), index=1
    )
    lam_pos = branch_positive(theta)
    if k == 1:
        return lam_pos, None
    neg_fn = lambda th: _ratio_even(th, k) - branch_negative(th)
    theta, _ = _solve_bracket(neg_fn, 0.0, step, cfg, include_lo=True, index=1)
    return lam_pos, branch_negative(theta)


def symmetry_defect(spec: SpectrumResult, j: int) -> float:
    """|lambda_plus_j + lambda_minus_j + 1| for an even-order spectrum.

    The branch curves sum to -1 exactly; paired roots sit at slightly
    different angles, so the defect is small but nonzero.  Valid for
    j = 1..k-1.
    """
    if spec.parity != "even":
        raise ValueError("pairing defect is defined for even order only")
    if not 1 <= j <= spec.k - 1:
        raise ValueError("j must lie in 1..%d, got %d" % (spec.k - 1, j))
    return abs(spec.positives[j - 1] + spec.negatives[j - 1] + 1.0)


def symmetry_defect_bound(k: int, j: int) -> float:
    """Upper bound 4 pi branch_positive_derivative(gamma_j) / (2k - 1)."""
    k = _check_k(k)
    if not 1 <= j <= k - 1:
        raise ValueError("j must lie in 1..%d, got %d" % (k - 1, j))
    gamma = j * _bracket_step(k, "even")
    return 4.0 * math.pi * branch_positive_derivative(gamma) / (2 * k - 1)


def eigenvalue_estimates(k: int, j: int) -> tuple[float, float, float]:
    """Closed-form estimates for the j-th even-order eigenvalue pair.

    Returns (positive estimate, negative estimate, error bound): the branch
    values at the pole gamma_j, each within
    2 pi branch_positive_derivative(gamma_j) / (2k - 1) of the true root.
    Doubling k roughly halves the bound at fixed gamma.
    """
    k = _check_k(k)
    if not 1 <= j <= k - 1:
        raise ValueError("j must lie in 1..%d, got %d" % (k - 1, j))
    gamma = j * _bracket_step(k, "even")
    bound = 2.0 * math.pi * branch_positive_derivative(gamma) / (2 * k - 1)
    return branch_positive(gamma), branch_negative(gamma), bound


def closure_witness(
    y: float, epsilon: float, parity: str = "any"
) -> tuple[int, float]:
    """Find an order n and eigenvalue mu of its anti-regular graph with
    |mu - y| < epsilon.

    Any y outside the open forbidden interval works: the branch curves fill
    both complementary rays as theta sweeps [0, pi), and the per-bracket
    error bound of eigenvalue_estimates drives the search.  The order is
    grown by doubling until the bound at the bracket containing y's angle
    drops below epsilon, then trimmed back to the smallest feasible k so
    the witness order stays modest.  y = 0 and y = -1 return the trivial
    witnesses (3, 0.0) and (2, -1.0).

    Raises ValueError inside the gap and RuntimeError if no supported order
    (k up to about 8 million) satisfies epsilon.
    """
    if not epsilon > 0.0:
        raise ValueError("epsilon must be positive, got %r" % (epsilon,))
    if parity not in ("any", "even", "odd"):
        raise ValueError("parity must be 'any', 'even' or 'odd', got %r" % (parity,))
    y = float(y)
    if y == 0.0:
        return 3, 0.0
    if y == -1.0:
        return 2, -1.0
    theta_prime = theta_of_lambda(y)
    if FORBIDDEN_LO < y < FORBIDDEN_HI:
        raise ValueError("no witness: %r lies inside the forbidden interval" % (y,))
    use_even = parity != "odd"
    par = "even" if use_even else "odd"
    positive = y > 0.0

    def feasible(k: int) -> tuple[bool, int]:
        step = _bracket_step(k, par)
        j = int(theta_prime // step) + 1
        if j > k - 1:
            return False, j
        gamma = j * step
        bound = branch_positive_derivative(gamma) * step
        return bound < epsilon, j

    cfg = DEFAULT_CONFIG
    k = 2
    while k <= 8_388_608:
        ok, _ = feasible(k)
        if ok:
            lo_k, hi_k = max(2, k // 2), k
            while hi_k - lo_k > 1:
                mid = (lo_k + hi_k) // 2
                if feasible(mid)[0]:
                    hi_k = mid
                else:
                    lo_k = mid
            k = hi_k
            j = feasible(k)[1]
            step = _bracket_step(k, par)
            lo, hi = (j - 1) * step, j * step
            if use_even:
                branch = branch_positive if positive else branch_negative
                fn = lambda th: _ratio_even(th, k) - branch(th)
            else:
                ratio = odd_ratio_positive if positive else odd_ratio_negative
                fn = lambda th: _ratio_odd(th, k) - ratio(th)
                branch = branch_positive if positive else branch_negative
            theta, _ = _solve_bracket(fn, lo, hi, cfg, include_lo=(j == 1), index=j)
            mu = branch(theta)
            if not abs(mu - y) < epsilon:
                raise RuntimeError(
                    "witness bound violated: |%r - %r| >= %r" % (mu, y, epsilon)
                )
            return (2 * k if use_even else 2 * k + 1), float(mu)
        k *= 2
    raise RuntimeError(
        "no witness order found for y=%r at epsilon=%r within supported range"
        % (y, epsilon)
    )
