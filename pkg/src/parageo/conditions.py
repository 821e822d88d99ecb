"""Exact decision procedures for the theorem-level curvature conditions.

Every checker here is a linear solve over the rational-function field
followed by exact back-substitution: a condition either holds with
certified coefficients or fails with a residual witness.  Nothing is
fitted numerically.  The one place square roots appear (unit rescaling
of a torse-forming field) is decided exactly after clearing the root,
and additionally sampled in floating point when requested, since the
rescaled field itself is not rational.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .expr import Expr
from .geometry import (Connection, FrameTensor, MetricOnFrame, VectorField,
                       covariant_derivative_tensor, curvature_action,
                       curvature_endo, derivation_action, frame_brackets,
                       wedge_endo)
from .linalg import solve_exact
from .outcome import CheckOutcome, collect_witnesses, slot_name


class DegenerateRicciError(Exception):
    """Raised when a solver needs S != 0 but the Ricci tensor vanishes."""


# ---------------------------------------------------------------------------
# torse-forming analysis: (nabla_X omega)(Y) = rho g(X,Y) + beta(X) omega(Y)
# ---------------------------------------------------------------------------

@dataclass
class UnitAnalysis:
    mode: str                      # "exact" | "sampled"
    checks: dict = field(default_factory=dict)   # name -> bool
    samples: int = 0
    tolerance: float = 0.0
    max_residual: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def concircular(self) -> bool:
        return all(self.checks.values())


@dataclass
class TorseFormingReport:
    is_torse_forming: bool
    rho: Expr | None = None
    beta: tuple | None = None      # frame 1-form
    special: str | None = None     # concurrent | concircular | recurrent
    witnesses: list = field(default_factory=list)
    unit: UnitAnalysis | None = None
    notes: list = field(default_factory=list)


def _closed_on_frame(metric: MetricOnFrame, theta: Sequence[Expr]) -> bool:
    """Closedness of a frame 1-form: d(theta)(e_i,e_j) = 0 for all pairs."""
    frame = metric.frame
    d = metric.dim
    br = frame_brackets(frame)
    for i in range(d):
        for j in range(i + 1, d):
            val = frame.apply(i, theta[j]) - frame.apply(j, theta[i])
            for a in range(d):
                val = val - br[i][j][a] * theta[a]
            if not val.is_zero:
                return False
    return True


def _sample_points(chart, f: Expr, count: int, seed: int):
    """Random rational points where f > 0 and no denominator degenerates."""
    rng = random.Random(seed)
    pts = []
    attempts = 0
    while len(pts) < count and attempts < 200 * count:
        attempts += 1
        pt = {c: Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for c in chart.coords}
        try:
            if f.eval(pt) > 0:
                pts.append(pt)
        except Exception:
            continue
    return pts


def torse_forming_analyze(metric: MetricOnFrame, conn: Connection,
                          upsilon: VectorField, *, unit: bool = True,
                          samples: int = 10, seed: int = 0,
                          tol: float = 1e-9) -> TorseFormingReport:
    """Decide the torse-forming condition for the g-dual 1-form of upsilon,
    then analyse the unit-normalised field T = omega / sqrt(omega(upsilon))."""
    frame = metric.frame
    d = metric.dim
    uf = frame.to_frame(upsilon)
    omega = metric.lower(uf)
    nabla_omega = covariant_derivative_tensor(
        conn, FrameTensor((0, 1), d, tuple(omega)))

    rows = []
    slots = []
    for i in range(d):
        for j in range(d):
            coeffs = [metric.G[i][j]] + [
                omega[j] if b == i else metric.chart.zero() for b in range(d)]
            rows.append((coeffs, nabla_omega.get(i, j)))
            slots.append((i, j))
    sol = solve_exact(rows, 1 + d)
    if sol.status == "inconsistent":
        i, j = slots[sol.witness_row]
        return TorseFormingReport(
            False,
            witnesses=[f"{slot_name((i, j), d)}: residual "
                       f"{sol.witness_residual}"],
            notes=["no (rho, beta) satisfies the torse-forming equation"])

    rho = sol.solution[0]
    beta = tuple(sol.solution[1:])
    special = None
    if all(b.is_zero for b in beta):
        special = "concurrent" if rho == metric.chart.one() else "concircular"
    elif rho.is_zero:
        special = "recurrent"
    report = TorseFormingReport(True, rho, beta, special)
    if sol.status == "underdetermined":
        report.notes.append("solution not unique; free coefficients pinned "
                            "to zero")

    if not unit:
        return report
    f = metric.pair_frame(uf, uf)
    if f.is_zero:
        report.notes.append("omega(upsilon) = 0: unit analysis skipped "
                            "(null field)")
        return report

    # After multiplying through by sqrt(f), every unit-field identity is
    # rational, so the verdicts below are exact:
    #   nabla T = lam (g - T (x) T)  <=>  nabla omega - omega (x) df/(2f)
    #                                       = rho g - rho (omega (x) omega)/f
    df = tuple(frame.apply(i, f) for i in range(d))
    ua = UnitAnalysis(mode="exact" if f.sqrt_poly() is not None else "sampled")
    ok = True
    for i in range(d):
        for j in range(d):
            lhs = nabla_omega.get(i, j) - omega[j] * df[i] / (2 * f)
            rhs = rho * metric.G[i][j] - rho * omega[i] * omega[j] / f
            if not (lhs - rhs).is_zero:
                ok = False
    ua.checks["unit-torse-form"] = ok          # Eq. pattern: nabla T = lam(g - T(x)T)
    beta_unit = tuple(-rho * omega[i] / f for i in range(d))  # = -lam T, rational
    ua.checks["beta-closed"] = _closed_on_frame(metric, beta_unit)
    # T closed <=> (e_i omega_j - e_j omega_i) - bracket term - df-corrections
    t_closed = True
    br = frame_brackets(frame)
    for i in range(d):
        for j in range(i + 1, d):
            val = (frame.apply(i, omega[j]) - omega[j] * df[i] / (2 * f)
                   - frame.apply(j, omega[i]) + omega[i] * df[j] / (2 * f))
            for a in range(d):
                val = val - br[i][j][a] * omega[a]
            if not val.is_zero:
                t_closed = False
    ua.checks["unit-field-closed"] = t_closed

    if ua.mode == "sampled":
        # float confirmation of nabla T = lam g + beta T at random points
        pts = _sample_points(metric.chart, f, samples, seed)
        ua.samples = len(pts)
        ua.tolerance = tol
        worst = 0.0
        for pt in pts:
            fv = float(f.eval(pt))
            sq = math.sqrt(fv)
            lam = float(rho.eval(pt)) / sq
            tvals = [float(omega[i].eval(pt)) / sq for i in range(d)]
            bvals = [-lam * tvals[i] for i in range(d)]
            scale = max(1.0, abs(lam))
            for i in range(d):
                for j in range(d):
                    nt = (float(nabla_omega.get(i, j).eval(pt)) / sq
                          - tvals[j] * float(df[i].eval(pt)) / (2 * fv))
                    want = (lam * float(metric.G[i][j].eval(pt))
                            + bvals[i] * tvals[j])
                    worst = max(worst, abs(nt - want) / scale)
        ua.max_residual = worst
        ua.checks["sampled-torse-form"] = (ua.samples >= min(samples, 1)
                                           and worst <= tol)
        if ua.samples < samples:
            ua.notes.append(f"only {ua.samples} usable sample points found")
    report.unit = ua
    return report


# ---------------------------------------------------------------------------
# Deszcz pseudo-symmetry: R . I = L ((X wedge_g Y) . I)
# ---------------------------------------------------------------------------

@dataclass
class PseudoSymmetryReport:
    tensor_kind: str               # "R" | "S"
    semi_symmetric: bool
    holds: bool
    L: Expr | None = None
    constant_type: bool | None = None
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def _wedge_action_pairs(metric: MetricOnFrame, T: FrameTensor) -> FrameTensor:
    """((e_i wedge_g e_j) . T) with the pair slots indexed first."""
    d = metric.dim
    frame = metric.frame
    acted = [[derivation_action(
        wedge_endo(metric.G, frame.unit(i), frame.unit(j)), T)
        for j in range(d)] for i in range(d)]
    r, s = T.valence

    def entry(*idx):
        if r == 1:
            return acted[idx[1]][idx[2]].get(idx[0], *idx[3:])
        return acted[idx[0]][idx[1]].get(*idx[2:])

    return FrameTensor.build((r, s + 2), d, entry)


def pseudo_symmetry_analyze(metric: MetricOnFrame, R: FrameTensor,
                            tensor_kind: str = "R",
                            S: FrameTensor | None = None) -> PseudoSymmetryReport:
    if tensor_kind == "R":
        target = R
    elif tensor_kind == "S":
        if S is None:
            raise ValueError("tensor_kind 'S' needs the Ricci tensor")
        target = S
    else:
        raise ValueError(f"unknown tensor kind {tensor_kind!r}")
    lhs = curvature_action(R, target)
    rhs = _wedge_action_pairs(metric, target)
    semi = lhs.is_zero
    if rhs.is_zero:
        report = PseudoSymmetryReport(tensor_kind, semi, holds=semi)
        if semi:
            report.notes.append("both sides vanish: semi-symmetric, L is "
                                "undetermined")
        else:
            report.witnesses = collect_witnesses(
                (slot_name(idx, lhs.dim), lhs.get(*idx))
                for idx in lhs.nonzero_slots(limit=4))
            report.notes.append("wedge side vanishes identically but R-side "
                                "does not: no L exists")
        return report
    rows = [([rhs.get(*idx)], lhs.get(*idx)) for idx in lhs.indices()]
    sol = solve_exact(rows, 1)
    if sol.status == "inconsistent":
        idxs = list(lhs.indices())
        idx = idxs[sol.witness_row]
        return PseudoSymmetryReport(
            tensor_kind, semi, holds=False,
            witnesses=[f"{slot_name(idx, lhs.dim)}: residual "
                       f"{sol.witness_residual}"])
    L = sol.solution[0]
    return PseudoSymmetryReport(tensor_kind, semi, holds=True, L=L,
                                constant_type=L.is_constant)


def nullity_pseudo_symmetry_check(metric: MetricOnFrame, R: FrameTensor,
                                  xi_frame: Sequence[Expr],
                                  k: Expr) -> CheckOutcome:
    """Restricted-slot constant-type identity:
    R(xi, X) . R = k ((xi wedge_g X) . R) for every frame X, exactly."""
    d = metric.dim
    frame = metric.frame
    zero = metric.chart.zero()
    bad = []
    for mslot in range(d):
        endo = [[sum((xi_frame[i] * R.get(a, i, mslot, p) for i in range(d)),
                     start=zero) for p in range(d)] for a in range(d)]
        lhs = derivation_action(endo, R)
        rhs = derivation_action(
            wedge_endo(metric.G, xi_frame, frame.unit(mslot)), R)
        for idx in lhs.indices():
            r = lhs.get(*idx) - k * rhs.get(*idx)
            if not r.is_zero:
                bad.append((f"X=e{mslot + 1} at {slot_name(idx, d)}", r))
                if len(bad) >= 4:
                    break
        if len(bad) >= 4:
            break
    return CheckOutcome("nullity-pseudo-symmetry",
                        "R(xi,X) . R = k ((xi wedge_g X) . R)",
                        not bad, collect_witnesses(bad),
                        data={"k": str(k)})


# ---------------------------------------------------------------------------
# Ricci-generalized pseudo-symmetry: R(xi,X) . R = L ((xi wedge_S X) . R)
# ---------------------------------------------------------------------------

@dataclass
class RicciGenPSReport:
    holds: bool
    L: Expr | None
    branches: dict                  # semi_symmetric / k_zero / einstein_2nk -> bool
    trichotomy: bool | None         # holds -> at least one branch true
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def ricci_generalized_ps_check(metric: MetricOnFrame, R: FrameTensor,
                               S: FrameTensor, xi_frame: Sequence[Expr],
                               k: Expr, n: int) -> RicciGenPSReport:
    d = metric.dim
    frame = metric.frame
    zero = metric.chart.zero()
    eta = metric.lower(xi_frame)
    Smat = [[S.get(i, j) for j in range(d)] for i in range(d)]

    lhs_rows = []
    rhs_rows = []
    slots = []
    for mslot in range(d):
        endo = [[sum((xi_frame[i] * R.get(a, i, mslot, p) for i in range(d)),
                     start=zero) for p in range(d)] for a in range(d)]
        lhs_t = derivation_action(endo, R)
        rhs_t = derivation_action(wedge_endo(Smat, xi_frame,
                                             frame.unit(mslot)), R)
        for idx in lhs_t.indices():
            # scalar form: pair the output slot with xi through g
            a = idx[0]
            lhs_rows.append(lhs_t.get(*idx) * eta[a])
            rhs_rows.append(rhs_t.get(*idx) * eta[a])
            slots.append((mslot,) + idx)
    # collapse the eta-pairing over the output index
    collapsed: dict = {}
    for (slot, lv, rv) in zip(slots, lhs_rows, rhs_rows):
        key = (slot[0],) + slot[2:]
        if key in collapsed:
            pl, pr = collapsed[key]
            collapsed[key] = (pl + lv, pr + rv)
        else:
            collapsed[key] = (lv, rv)

    branches = {
        "semi_symmetric": curvature_action(R, R).is_zero,
        "k_zero": k.is_zero,
        "einstein_2nk": all(
            (metric.chart.const(2 * n) * k * metric.G[i][j]
             - S.get(i, j)).is_zero
            for i in range(d) for j in range(d)),
    }

    def key_label(key):
        m = key[0]
        rest = ",".join(f"e{i + 1}" for i in key[1:])
        return f"X=e{m + 1} at ({rest})"

    keys = sorted(collapsed)
    rows = [([collapsed[key][1]], collapsed[key][0]) for key in keys]
    if all(r[0][0].is_zero for r in rows):
        all_lhs_zero = all(r[1].is_zero for r in rows)
        rep = RicciGenPSReport(all_lhs_zero, None, branches,
                               trichotomy=None)
        rep.notes.append("wedge_S side vanishes on all scalar slots; "
                         + ("both sides zero"
                            if all_lhs_zero else "no L exists"))
        if not all_lhs_zero:
            bad = [(key_label(key), lhs)
                   for key, (lhs, _r) in collapsed.items()
                   if not lhs.is_zero][:4]
            rep.witnesses = collect_witnesses(bad)
        rep.trichotomy = any(branches.values()) if all_lhs_zero else None
        return rep
    sol = solve_exact(rows, 1)
    if sol.status == "inconsistent":
        key = keys[sol.witness_row]
        return RicciGenPSReport(
            False, None, branches, trichotomy=None,
            witnesses=[f"{key_label(key)}: residual {sol.witness_residual}"])
    L = sol.solution[0]
    return RicciGenPSReport(True, L, branches,
                            trichotomy=any(branches.values()))


# ---------------------------------------------------------------------------
# generalized Ricci recurrence: nabla S = A (x) S + B (x) g
# ---------------------------------------------------------------------------

@dataclass
class RecurrenceReport:
    exists: bool
    A: tuple | None = None         # frame 1-form
    B: tuple | None = None
    non_unique: bool = False       # S proportional to g; B pinned to zero
    zeta1: tuple | None = None     # g-dual of A
    zeta2: tuple | None = None     # g-dual of B
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def generalized_ricci_recurrence_solve(metric: MetricOnFrame,
                                       conn: Connection,
                                       S: FrameTensor) -> RecurrenceReport:
    if S.is_zero:
        raise DegenerateRicciError("Ricci tensor is identically zero")
    d = metric.dim
    nablaS = covariant_derivative_tensor(conn, S)
    A = []
    B = []
    non_unique = False
    for i in range(d):
        rows = []
        slots = []
        for j in range(d):
            for kk in range(d):
                rows.append(([S.get(j, kk), metric.G[j][kk]],
                             nablaS.get(i, j, kk)))
                slots.append((i, j, kk))
        sol = solve_exact(rows, 2)
        if sol.status == "inconsistent":
            i0, j0, k0 = slots[sol.witness_row]
            return RecurrenceReport(
                False,
                witnesses=[f"direction e{i0 + 1}, slot "
                           f"(e{j0 + 1},e{k0 + 1}): residual "
                           f"{sol.witness_residual}"],
                notes=["nabla_X S leaves span{S, g} in this direction"])
        if sol.status == "underdetermined":
            non_unique = True
        A.append(sol.solution[0])
        B.append(sol.solution[1])
    rep = RecurrenceReport(True, tuple(A), tuple(B), non_unique,
                           zeta1=metric.raise_form(A),
                           zeta2=metric.raise_form(B))
    if non_unique:
        rep.notes.append("S is proportional to g on the solved slots; "
                         "representative with B = 0 reported")
    return rep


def recurrence_linear_dependence(metric: MetricOnFrame,
                                 rec: RecurrenceReport, k: Expr,
                                 n: int) -> CheckOutcome:
    """Exact check of 2 n k A + B = 0 for the solved recurrence 1-forms."""
    if not rec.exists or rec.A is None:
        return CheckOutcome("recurrence-dependence", "2 n k A + B = 0", False,
                            notes=["no recurrence solution to test"])
    d = metric.dim
    two_nk = metric.chart.const(2 * n) * k
    bad = []
    for i in range(d):
        r = two_nk * rec.A[i] + rec.B[i]
        if not r.is_zero:
            bad.append((f"(e{i + 1})", r))
    notes = []
    if all(a.is_zero for a in rec.A) and all(b.is_zero for b in rec.B):
        notes.append("degenerate: nabla S = 0 with A = B = 0")
    else:
        notes.append("zeta_2 = -2 n k zeta_1 (duals of B and A)")
    return CheckOutcome("recurrence-dependence", "2 n k A + B = 0",
                        not bad, collect_witnesses(bad), notes=notes,
                        data={"factor": str(-1 * two_nk)})


# ---------------------------------------------------------------------------
# Einstein / semi-symmetric
# ---------------------------------------------------------------------------

@dataclass
class EinsteinReport:
    is_einstein: bool
    c: Expr | None = None
    witnesses: list = field(default_factory=list)


def is_einstein(metric: MetricOnFrame, S: FrameTensor) -> EinsteinReport:
    d = metric.dim
    rows = [([metric.G[i][j]], S.get(i, j))
            for i in range(d) for j in range(d)]
    sol = solve_exact(rows, 1)
    if sol.status == "inconsistent":
        idx = [(i, j) for i in range(d) for j in range(d)][sol.witness_row]
        return EinsteinReport(False, witnesses=[
            f"{slot_name(idx, d)}: residual {sol.witness_residual}"])
    c = sol.solution[0]
    if not c.is_constant:
        return EinsteinReport(False, c,
                              witnesses=[f"S = c g needs c = {c}, "
                                         "not constant"])
    return EinsteinReport(True, c)


def is_semi_symmetric(R: FrameTensor) -> CheckOutcome:
    rr = curvature_action(R, R)
    bad = [(slot_name(idx, R.dim), rr.get(*idx))
           for idx in rr.nonzero_slots(limit=4)]
    return CheckOutcome("semi-symmetric", "R . R = 0", rr.is_zero,
                        collect_witnesses(bad))
