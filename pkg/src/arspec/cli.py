"""Command line interface.

Verbs:
  spectrum     eigenvalues of one anti-regular graph (solver, oracle, or both)
  table1       last-bracket position ratios against the published reference
  verify       batch of spectral checks with one PASS/FAIL line each
  scan         exhaustive threshold-graph scans (forbidden interval, extremes)
  figure-data  CSV curve samples for external plotting
  density      shorthand for figure-data --which density

Exit codes: 0 success, 2 a mathematical check failed, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import graphs, oracle, solver, threshold

EXIT_OK = 0
EXIT_CHECK_FAILED = 2
EXIT_USAGE = 64

DENSE_MAX_ORDER = 2000
BOTH_TOL = 1e-8
TABLE1_TOL = 1e-6

# last-bracket ratios, keyed by graph order n (k = n/2)
TABLE1_REFERENCE = {
    250: 0.5020031290,
    500: 0.5010007838,
    1000: 0.5005001962,
    2000: 0.5002500492,
    4000: 0.5001250123,
    8000: 0.5000625018,
    16000: 0.5000312567,
    32000: 0.5000156204,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[str]) -> str:
    return "\r\n".join(rows) + "\r\n"


def cmd_spectrum(args) -> int:
    if args.n < 2:
        raise _UsageError("spectrum needs --n >= 2, got %d" % args.n)
    if args.method in ("dense", "both") and args.n > DENSE_MAX_ORDER:
        raise _UsageError(
            "dense oracle capped at n=%d, got %d" % (DENSE_MAX_ORDER, args.n)
        )
    result = dense = None
    if args.method in ("cheb", "both"):
        result = solver.solve_spectrum(args.n)
    if args.method in ("dense", "both"):
        a = graphs.antiregular_adjacency(args.n).astype(float)
        dense = oracle.jacobi_eigenvalues(a).eigenvalues

    if args.method == "cheb":
        _emit(args, result.to_json() + "\n" if args.format == "json" else result.to_csv())
        return EXIT_OK
    if args.method == "dense":
        if args.format == "json":
            _emit(args, json.dumps({"n": args.n, "eigenvalues": dense}) + "\n")
        else:
            rows = ["index,lambda"]
            rows.extend("%d,%r" % (i, v) for i, v in enumerate(dense))
            _emit(args, _csv(rows))
        return EXIT_OK

    cheb = result.eigenvalues()
    deltas = [abs(c - d) for c, d in zip(cheb, dense)]
    max_delta = max(deltas)
    if args.format == "json":
        payload = {
            "n": args.n,
            "cheb": json.loads(result.to_json()),
            "dense": dense,
            "deltas": deltas,
            "max_delta": max_delta,
        }
        _emit(args, json.dumps(payload) + "\n")
    else:
        rows = ["index,lambda_cheb,lambda_dense,delta"]
        rows.extend(
            "%d,%r,%r,%r" % (i, c, d, abs(c - d))
            for i, (c, d) in enumerate(zip(cheb, dense))
        )
        _emit(args, _csv(rows))
    if max_delta > BOTH_TOL:
        print(
            "spectrum: solver/oracle disagreement %.3e exceeds %.1e"
            % (max_delta, BOTH_TOL),
            file=sys.stderr,
        )
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_table1(args) -> int:
    entries = []
    worst = 0.0
    for n in sorted(TABLE1_REFERENCE):
        computed = solver.last_bracket_ratio(n // 2)
        reference = TABLE1_REFERENCE[n]
        delta = computed - reference
        worst = max(worst, abs(delta))
        entries.append((n, computed, reference, delta))
    if args.format == "json":
        payload = {
            "rows": [
                {"n": n, "computed": c, "reference": r, "delta": d}
                for n, c, r, d in entries
            ],
            "max_abs_delta": worst,
        }
        _emit(args, json.dumps(payload) + "\n")
    else:
        rows = ["n,computed,reference,delta"]
        rows.extend("%d,%.10f,%.10f,%r" % e for e in entries)
        _emit(args, _csv(rows))
    return EXIT_OK if worst <= TABLE1_TOL else EXIT_CHECK_FAILED


def _verify_oracle(n_max: int, tol: float):
    worst = 0.0
    for n in range(2, n_max + 1):
        cheb = solver.solve_spectrum(n).eigenvalues()
        a = graphs.antiregular_adjacency(n).astype(float)
        dense = oracle.jacobi_eigenvalues(a).eigenvalues
        worst = max(worst, max(abs(c - d) for c, d in zip(cheb, dense)))
    return worst <= tol, "max delta %.3e over n=2..%d (tol %.1e)" % (worst, n_max, tol)


def _verify_forbidden(n_max: int):
    for n in range(2, n_max + 1):
        if not solver.forbidden_interval_check(solver.solve_spectrum(n), margin=0.0):
            return False, "violation at n=%d" % n
    return True, "clean for n=2..%d" % n_max


def _verify_containment(n_max: int):
    for n in range(2, n_max + 1):
        spec = solver.solve_spectrum(n)
        k = spec.k
        expected_neg = k - 1 if spec.parity == "even" else k
        if len(spec.positives) != k or len(spec.negatives) != expected_neg:
            return False, "root count off at n=%d" % n
        for thetas, bracks in (
            (spec.thetas_pos, spec.brackets_pos),
            (spec.thetas_neg, spec.brackets_neg),
        ):
            for theta, (lo, hi) in zip(thetas, bracks):
                if not lo < theta < hi:
                    return False, "angle %r escapes (%r, %r) at n=%d" % (theta, lo, hi, n)
        if spec.parity == "even":
            for j in range(1, k):
                glo, ghi = spec.brackets_pos[j - 1]
                if not (
                    solver.branch_positive(glo)
                    < spec.positives[j - 1]
                    < solver.branch_positive(ghi)
                ):
                    return False, "positive bound fails at n=%d j=%d" % (n, j)
                if not (
                    solver.branch_negative(ghi)
                    < spec.negatives[j - 1]
                    < solver.branch_negative(glo)
                ):
                    return False, "negative bound fails at n=%d j=%d" % (n, j)
    return True, "angles and eigenvalue bounds hold for n=2..%d" % n_max


def _verify_pair_symmetry(n_max: int):
    checked = 0
    for n in range(4, n_max + 1, 2):
        spec = solver.solve_spectrum(n)
        for j in range(1, spec.k):
            if solver.symmetry_defect(spec, j) > solver.symmetry_defect_bound(spec.k, j):
                return False, "defect exceeds bound at n=%d j=%d" % (n, j)
            checked += 1
    if not checked:
        return None, "needs an even order >= 4"
    return True, "%d pair defects within bound" % checked


def _verify_estimates(n_max: int):
    checked = 0
    for n in range(4, n_max + 1, 2):
        spec = solver.solve_spectrum(n)
        for j in range(1, spec.k):
            est_pos, est_neg, bound = solver.eigenvalue_estimates(spec.k, j)
            if abs(spec.positives[j - 1] - est_pos) > bound:
                return False, "positive estimate off at n=%d j=%d" % (n, j)
            if abs(spec.negatives[j - 1] - est_neg) > bound:
                return False, "negative estimate off at n=%d j=%d" % (n, j)
            checked += 1
    if not checked:
        return None, "needs an even order >= 4"
    return True, "%d estimates within bound" % checked


def _verify_laplacian(n_max: int):
    limit = min(n_max, 50)
    for n in range(2, limit + 1):
        lap = graphs.laplacian(graphs.antiregular_adjacency(n)).astype(float)
        eigs = oracle.jacobi_eigenvalues(lap).eigenvalues
        expected = sorted(set(range(n + 1)) - {(n + 1) // 2})
        worst = max(abs(e - x) for e, x in zip(eigs, expected))
        if worst > 1e-6:
            return False, "Laplacian spectrum off by %.3e at n=%d" % (worst, n)
    return True, "integer Laplacian spectra for n=2..%d" % limit


def _verify_monotone(n_max: int):
    k_max = n_max // 2
    if k_max < 2:
        return None, "needs k >= 2"
    prev_pos = prev_neg = None
    for k in range(1, k_max + 1):
        lam_pos, lam_neg = solver.innermost_eigenvalues(k)
        if prev_pos is not None and not lam_pos < prev_pos:
            return False, "positive sequence not decreasing at k=%d" % k
        prev_pos = lam_pos
        if lam_neg is not None:
            if prev_neg is not None and not lam_neg > prev_neg:
                return False, "negative sequence not increasing at k=%d" % k
            prev_neg = lam_neg
    return True, "innermost pair monotone for k=1..%d" % k_max


def cmd_verify(args) -> int:
    if not 2 <= args.n_max <= 500:
        raise _UsageError("verify needs 2 <= --n-max <= 500, got %d" % args.n_max)
    oracle_tol = 0.0 if args.tamper else 1e-8
    checks = [
        ("oracle-equivalence", lambda: _verify_oracle(args.n_max, oracle_tol)),
        ("forbidden-interval", lambda: _verify_forbidden(args.n_max)),
        ("bracket-containment", lambda: _verify_containment(args.n_max)),
        ("pair-symmetry-bound", lambda: _verify_pair_symmetry(args.n_max)),
        ("eigenvalue-estimate-bound", lambda: _verify_estimates(args.n_max)),
        ("laplacian-integer-spectrum", lambda: _verify_laplacian(args.n_max)),
        ("monotone-innermost", lambda: _verify_monotone(args.n_max)),
    ]
    lines = []
    failed = False
    for name, run in checks:
        ok, detail = run()
        if ok is None:
            lines.append("%s: SKIP (%s)" % (name, detail))
        elif ok:
            lines.append("%s: PASS (%s)" % (name, detail))
        else:
            lines.append("%s: FAIL (%s)" % (name, detail))
            failed = True
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_scan(args) -> int:
    if not 2 <= args.n <= threshold.MAX_SCAN_ORDER:
        raise _UsageError(
            "scan supports 2 <= --n <= %d, got %d" % (threshold.MAX_SCAN_ORDER, args.n)
        )
    report = threshold.omega_scan(args.n, workers=args.workers)
    if args.format == "json":
        _emit(args, report.to_json() + "\n")
    else:
        _emit(args, report.violations_to_csv())
    failed = False
    if args.check in ("omega", "both") and report.omega_violations:
        print(
            "scan: %d forbidden-interval violations at n=%d"
            % (len(report.omega_violations), args.n),
            file=sys.stderr,
        )
        failed = True
    if args.check in ("extremal", "both") and not report.extremes_attained():
        print("scan: extremes not attained by the anti-regular graph", file=sys.stderr)
        failed = True
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def _figure_theta(points: int) -> str:
    rows = ["lambda,theta"]
    left = points // 2
    right = points - left
    for i in range(left):
        lam = -10.0 + (solver.FORBIDDEN_LO + 10.0) * i / (left - 1)
        rows.append("%r,%r" % (lam, solver.theta_of_lambda(lam)))
    rows.append("")  # gap over the forbidden interval
    for i in range(right):
        lam = solver.FORBIDDEN_HI + (10.0 - solver.FORBIDDEN_HI) * i / (right - 1)
        rows.append("%r,%r" % (lam, solver.theta_of_lambda(lam)))
    return _csv(rows)


def _figure_even(k: int, points: int) -> str:
    rows = ["theta,sine_ratio,branch_positive,branch_negative"]
    poles = list(solver.asymptote_brackets(k, "even").asymptotes[1:])
    next_pole = 0
    for i in range(points):  # stop short of pi, where the branches blow up
        theta = math.pi * i / points
        if next_pole < len(poles) and theta > poles[next_pole]:
            rows.append("")
            next_pole += 1
        try:
            ratio = solver.sine_ratio_even(theta, k)
        except ValueError:
            rows.append("")
            continue
        rows.append(
            "%r,%r,%r,%r"
            % (theta, ratio, solver.branch_positive(theta), solver.branch_negative(theta))
        )
    return _csv(rows)


def _figure_odd(k: int, points: int) -> str:
    rows = ["theta,sine_ratio,ratio_positive,ratio_negative"]
    poles = list(solver.asymptote_brackets(k, "odd").asymptotes[1:])
    next_pole = 0
    for i in range(points):
        theta = math.pi * i / (points - 1)
        if next_pole < len(poles) and theta > poles[next_pole]:
            rows.append("")
            next_pole += 1
        try:
            ratio = solver.sine_ratio_odd(theta, k)
        except ValueError:
            rows.append("")
            continue
        rows.append(
            "%r,%r,%r,%r"
            % (
                theta,
                ratio,
                solver.odd_ratio_positive(theta),
                solver.odd_ratio_negative(theta),
            )
        )
    return _csv(rows)


def _figure_density(k: int) -> str:
    spec = solver.solve_spectrum(2 * k)
    rows = ["index,lambda"]
    rows.extend("%d,%r" % (i, lam) for i, lam in enumerate(spec.eigenvalues()))
    return _csv(rows)


def cmd_figure_data(args) -> int:
    if args.k < 2:
        raise _UsageError("figure-data needs --k >= 2, got %d" % args.k)
    if args.points < 10:
        raise _UsageError("figure-data needs --points >= 10, got %d" % args.points)
    if args.which == "theta":
        text = _figure_theta(args.points)
    elif args.which == "even-curves":
        text = _figure_even(args.k, args.points)
    elif args.which == "odd-curves":
        text = _figure_odd(args.k, args.points)
    elif args.which == "density":
        text = _figure_density(args.k)
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError("unknown figure %r" % (args.which,))
    _emit(args, text)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="arspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues of one anti-regular graph")
    p.add_argument("--n", type=int, required=True, help="number of vertices (>= 2)")
    p.add_argument("--method", choices=("cheb", "dense", "both"), default="cheb")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("table1", help="last-bracket ratios vs reference values")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="run spectral checks, one PASS/FAIL line each")
    p.add_argument(
        "--n-max",
        type=int,
        default=50,
        help="largest order checked, 2..500 (the oracle pass is cubic per order;"
        " 500 takes tens of minutes)",
    )
    p.add_argument(
        "--tamper",
        action="store_true",
        help="negative control: force an impossible oracle tolerance so the"
        " equivalence check must fail",
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="exhaustive connected-threshold-graph scan")
    p.add_argument("--n", type=int, required=True, help="graph order, 2..26")
    p.add_argument("--check", choices=("omega", "extremal", "both"), default="both")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel scan processes (ARSPEC_THREADS caps this)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("figure-data", help="CSV curve samples for plotting")
    p.add_argument(
        "--which",
        choices=("theta", "even-curves", "odd-curves", "density"),
        required=True,
    )
    p.add_argument("--k", type=int, default=8, help="half-order parameter (>= 2)")
    p.add_argument("--points", type=int, default=512, help="sample count (>= 10)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure_data)

    p = sub.add_parser("density", help="shorthand for figure-data --which density")
    p.add_argument("--k", type=int, default=8, help="half-order parameter (>= 2)")
    p.add_argument("--points", type=int, default=512)
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure_data, which="density")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
