"""Self-contained dense linear algebra used as ground truth.

The point of this module is independence: the trigonometric solver in
:mod:`arspec.solver` is cross-checked against eigenvalues computed here, so
nothing here may share code or algorithms with it.  No library eigensolver
or determinant routine is called; the three entry points are

``jacobi_eigenvalues``
    cyclic-by-row Jacobi rotations with the classical threshold strategy,
    for real symmetric matrices,
``quotient_eigenvalues``
    eigenvalues of an equitable-partition quotient matrix, obtained by the
    diagonal similarity that restores symmetry before calling Jacobi,
``char_poly_eval``
    det(tI - M) via LU factorization with partial pivoting.

Jacobi is quadratically convergent once off-diagonal mass is small; with
the threshold strategy matrices up to order ~1000 converge in well under
the 100-sweep cap.  That is the intended working range: this is an oracle
for tests, not a production eigensolver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

SYMMETRY_TOL = 1e-12
QUOTIENT_SYMMETRY_TOL = 1e-9
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Raised when Jacobi sweeps fail to reach the target off-diagonal norm."""


@dataclass
class EigenResult:
    order: int
    eigenvalues: list[float] = field(default_factory=list)  # ascending
    sweeps: int = 0
    off_norm: float = 0.0


def _off_norm(a: np.ndarray) -> float:
    t = a.copy()
    np.fill_diagonal(t, 0.0)
    return math.sqrt(float(np.sum(t * t)))


def _check_square(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square, got shape %r" % (a.shape,))
    if a.shape[0] == 0:
        raise ValueError("matrix must be nonempty")
    return a


def jacobi_eigenvalues(m, tol: float = 1e-12) -> EigenResult:
    """All eigenvalues of a real symmetric matrix by Jacobi rotation sweeps.

    Each sweep visits the strict upper triangle row by row and annihilates
    entries whose square exceeds a threshold (0.2 * off^2 / n^2 during the
    first three sweeps, zero afterwards).  Rotations that would not change
    the matrix at working precision are replaced by setting the entry to
    zero outright, which is what makes the final sweeps terminate.

    Iteration stops once the Frobenius norm of the off-diagonal part drops
    below ``tol`` times the Frobenius norm of the input.  The off-diagonal
    norm is recomputed directly each sweep; forming it by subtracting the
    diagonal from the total norm cancels catastrophically and would stall
    the loop around sqrt(eps) times the matrix norm.

    Raises ValueError for non-square or asymmetric input and
    ConvergenceError if MAX_SWEEPS sweeps do not reach the target.
    """
    a = _check_square(m)
    if tol <= 0.0:
        raise ValueError("tolerance must be positive, got %r" % (tol,))
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    asym = float(np.max(np.abs(a - a.T)))
    if asym > SYMMETRY_TOL * scale:
        raise ValueError("matrix is not symmetric (max asymmetry %.3e)" % asym)
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    if n == 1:
        return EigenResult(order=1, eigenvalues=[float(a[0, 0])])

    norm = math.sqrt(float(np.sum(a * a)))
    target = tol * norm
    sweeps = 0
    while sweeps < MAX_SWEEPS:
        off = _off_norm(a)
        if off <= target:
            eigs = sorted(float(x) for x in np.diag(a))
            return EigenResult(order=n, eigenvalues=eigs, sweeps=sweeps, off_norm=off)
        thresh = 0.2 * off * off / (n * n) if sweeps < 3 else 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq * apq <= thresh:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                g = 100.0 * abs(apq)
                if sweeps > 3 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    continue
                diff = aqq - app
                if abs(diff) + g == abs(diff):
                    t = apq / diff  # tan(2 phi) tiny, rotation angle ~ apq/diff
                else:
                    phi = diff / (2.0 * apq)
                    t = (1.0 if phi >= 0.0 else -1.0) / (abs(phi) + math.sqrt(phi * phi + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = rp - s * (rq + tau * rp)
                a[q, :] = rq + s * (rp - tau * rq)
                a[:, p] = a[p, :]
                a[:, q] = a[q, :]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
    raise ConvergenceError(
        "off-diagonal norm %.3e still above target %.3e after %d sweeps"
        % (_off_norm(a), target, MAX_SWEEPS)
    )


def quotient_eigenvalues(m, cell_sizes, tol: float = 1e-12) -> EigenResult:
    """Eigenvalues of an equitable-partition quotient matrix.

    ``m[i][j]`` holds the number of neighbors a vertex of cell i has inside
    cell j, and ``cell_sizes`` the cell cardinalities.  Such a matrix is not
    symmetric, but conjugating by diag(sqrt(sizes)) restores symmetry:
    S = D^(1/2) M D^(-1/2).  If S fails to be symmetric the input did not
    come from an equitable partition, which is reported as a ValueError
    rather than silently returning wrong eigenvalues.
    """
    a = _check_square(m)
    sizes = [int(s) for s in cell_sizes]
    if len(sizes) != a.shape[0]:
        raise ValueError(
            "got %d cell sizes for order %d" % (len(sizes), a.shape[0])
        )
    if any(s < 1 for s in sizes):
        raise ValueError("cell sizes must be positive integers")
    d = np.sqrt(np.asarray(sizes, dtype=float))
    sym = a * d[:, None] / d[None, :]
    scale = max(1.0, float(np.max(np.abs(sym))))
    asym = float(np.max(np.abs(sym - sym.T)))
    if asym > QUOTIENT_SYMMETRY_TOL * scale:
        raise ValueError(
            "matrix is not an equitable quotient: rebalanced asymmetry %.3e" % asym
        )
    return jacobi_eigenvalues(0.5 * (sym + sym.T), tol=tol)


def char_poly_eval(m, t: float) -> float:
    """Evaluate det(tI - M) by LU factorization with partial pivoting.

    The determinant is the product of pivots times the sign of the row
    permutation; an exactly zero pivot short-circuits to 0.0.
    """
    a = _check_square(m)
    n = a.shape[0]
    a = float(t) * np.eye(n) - a
    sign = 1.0
    det = 1.0
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot_row, col] == 0.0:
            return 0.0
        if pivot_row != col:
            a[[col, pivot_row], :] = a[[pivot_row, col], :]
            sign = -sign
        pivot = a[col, col]
        det *= pivot
        if col + 1 < n:
            factors = a[col + 1 :, col] / pivot
            a[col + 1 :, col + 1 :] -= np.outer(factors, a[col, col + 1 :])
    return sign * det
