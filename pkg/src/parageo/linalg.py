"""Exact linear algebra over Expr entries.

Matrices are plain nested lists/tuples of Expr.  Determinants expand by
minors with memoisation on column masks (dimensions here are <= 7, so
this is both exact and fast).  The linear solver is a Gauss-Jordan
elimination over the rational-function field; it never approximates and
reports inconsistent rows as witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .expr import Expr


def mat_identity(coords, d):
    one, zero = Expr.one(coords), Expr.zero(coords)
    return [[one if i == j else zero for j in range(d)] for i in range(d)]


def mat_mul(A, B):
    d, m, k = len(A), len(B[0]), len(B)
    out = []
    for i in range(d):
        row = []
        for j in range(m):
            acc = A[i][0] * B[0][j]
            for p in range(1, k):
                acc = acc + A[i][p] * B[p][j]
            row.append(acc)
        out.append(row)
    return out


def mat_det(A) -> Expr:
    d = len(A)
    coords = A[0][0].coords
    memo: dict[tuple[int, int], Expr] = {}

    def minor(row: int, colmask: int) -> Expr:
        if row == d:
            return Expr.one(coords)
        key = (row, colmask)
        got = memo.get(key)
        if got is not None:
            return got
        acc = Expr.zero(coords)
        sign = 1
        for j in range(d):
            if colmask & (1 << j):
                continue
            entry = A[row][j]
            if not entry.is_zero:
                term = entry * minor(row + 1, colmask | (1 << j))
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)


def mat_adjugate(A):
    """Classical adjugate: A @ adj(A) == det(A) * I."""
    d = len(A)
    if d == 1:
        return [[Expr.one(A[0][0].coords)]]
    adj = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            sub = [[A[r][c] for c in range(d) if c != j]
                   for r in range(d) if r != i]
            cof = mat_det(sub)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


@dataclass
class SolveResult:
    """Outcome of an exact linear solve A x = b over the Expr field."""

    status: str                      # "unique" | "underdetermined" | "inconsistent"
    solution: list | None            # free unknowns pinned to zero
    free_columns: list[int] = field(default_factory=list)
    witness_row: int | None = None   # original row index of an inconsistent row
    witness_residual: Expr | None = None


def solve_exact(rows: list[tuple[list, Expr]], ncols: int) -> SolveResult:
    """Solve the system given as (coefficients, rhs) pairs, exactly.

    Unknowns are ordered; when the system is underdetermined the trailing
    free unknowns are set to zero so callers get a canonical representative.
    """
    work = [(list(coeffs), rhs, idx) for idx, (coeffs, rhs) in enumerate(rows)]
    if not work:
        raise ValueError("empty system")
    coords = work[0][1].coords
    zero = Expr.zero(coords)
    pivots: list[tuple[int, int]] = []  # (work position, column)
    used_rows: set[int] = set()
    for col in range(ncols):
        pivot_pos = None
        for pos, (coeffs, rhs, _idx) in enumerate(work):
            if pos in used_rows:
                continue
            if not coeffs[col].is_zero:
                pivot_pos = pos
                break
        if pivot_pos is None:
            continue
        used_rows.add(pivot_pos)
        pivots.append((pivot_pos, col))
        pc = work[pivot_pos][0][col]
        for pos, (coeffs, rhs, idx) in enumerate(work):
            if pos == pivot_pos or coeffs[col].is_zero:
                continue
            factor = coeffs[col] / pc
            new_coeffs = [c - factor * p
                          for c, p in zip(coeffs, work[pivot_pos][0])]
            new_rhs = rhs - factor * work[pivot_pos][1]
            work[pos] = (new_coeffs, new_rhs, idx)
    for pos, (coeffs, rhs, idx) in enumerate(work):
        if pos in used_rows:
            continue
        if all(c.is_zero for c in coeffs) and not rhs.is_zero:
            return SolveResult("inconsistent", None,
                               witness_row=idx, witness_residual=rhs)
    solution = [zero] * ncols
    pivot_cols = {col for _pos, col in pivots}
    for pos, col in pivots:
        coeffs, rhs, _idx = work[pos]
        # eliminate contributions of free columns (pinned to zero), so only
        # the diagonal remains
        solution[col] = rhs / coeffs[col]
    free = [c for c in range(ncols) if c not in pivot_cols]
    status = "unique" if not free else "underdetermined"
    return SolveResult(status, solution, free_columns=free)
