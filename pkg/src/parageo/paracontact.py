"""Almost paracontact metric structures and their exact verification.

A structure is the tuple (phi, xi, eta, g) on an odd-dimensional chart:
phi is a (1,1) field given by its frame matrix (column j holds the frame
components of phi(e_j)), xi a vector field in frame components, eta a
1-form in the coordinate cobasis.  All axioms, the deformation tensor
h = (Lie_xi phi)/2, and the nullity classification

    R(X,Y)xi = k (eta(Y)X - eta(X)Y) + mu (eta(Y)hX - eta(X)hY)

are decided exactly; k and mu are accepted only when constant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .expr import Expr
from .geometry import (Connection, FrameTensor, MetricOnFrame,
                       covariant_derivative_tensor, exterior_derivative_oneform,
                       lie_bracket, nabla_frame, twoform_on_frame)
from .linalg import solve_exact
from .outcome import CheckOutcome, collect_witnesses, slot_name


class ParacontactStructure:
    """(phi, xi, eta) candidate over a frame metric; axioms checked separately."""

    def __init__(self, metric: MetricOnFrame, phi, xi_frame: Sequence[Expr],
                 eta_coord: Sequence[Expr]):
        self.metric = metric
        self.frame = metric.frame
        self.chart = metric.chart
        d = metric.dim
        if len(phi) != d or any(len(row) != d for row in phi):
            raise ValueError("phi matrix shape mismatch")
        if len(xi_frame) != d or len(eta_coord) != d:
            raise ValueError("xi/eta component count mismatch")
        self.phi = [list(row) for row in phi]     # phi[a][j]: e_a comp of phi(e_j)
        self.xi = tuple(xi_frame)
        self.eta_coord = tuple(eta_coord)
        self.eta = self.frame.oneform_on_frame(eta_coord)  # eta(e_i)

    @property
    def dim(self) -> int:
        return self.metric.dim

    def phi_apply(self, v: Sequence[Expr]) -> tuple:
        """phi(V) for V in frame components."""
        d = self.dim
        return tuple(
            sum((self.phi[a][j] * v[j] for j in range(d)),
                start=self.chart.zero())
            for a in range(d))

    def eta_of(self, v: Sequence[Expr]) -> Expr:
        return sum((self.eta[i] * v[i] for i in range(self.dim)),
                   start=self.chart.zero())


def verify_structure_axioms(s: ParacontactStructure) -> list:
    """All defining axioms of an (almost) paracontact metric structure,
    including the contact compatibility d(eta) = g(., phi .)."""
    d = s.dim
    m = s.metric
    zero = s.chart.zero()
    out = []

    def matrix_check(name, statement, entry_fn, notes=None):
        bad = []
        for i in range(d):
            for j in range(d):
                r = entry_fn(i, j)
                if not r.is_zero:
                    bad.append((slot_name((i, j), d), r))
        out.append(CheckOutcome(name, statement, not bad,
                                collect_witnesses(bad),
                                notes=list(notes or [])))

    # phi^2 = I - eta (x) xi
    def phi_sq(a, j):
        acc = zero
        for p in range(d):
            acc = acc + s.phi[a][p] * s.phi[p][j]
        ident = s.chart.one() if a == j else zero
        return acc - (ident - s.eta[j] * s.xi[a])

    matrix_check("phi-squared", "phi^2 = I - eta (x) xi", phi_sq)

    r = s.eta_of(s.xi) - s.chart.one()
    out.append(CheckOutcome("eta-xi", "eta(xi) = 1", r.is_zero,
                            [] if r.is_zero else [f"residual {r}"]))

    phixi = s.phi_apply(s.xi)
    bad = [(f"component e{a + 1}", phixi[a]) for a in range(d)
           if not phixi[a].is_zero]
    out.append(CheckOutcome("phi-xi", "phi(xi) = 0", not bad,
                            collect_witnesses(bad)))

    bad = []
    for j in range(d):
        acc = zero
        for a in range(d):
            acc = acc + s.eta[a] * s.phi[a][j]
        if not acc.is_zero:
            bad.append((f"(e{j + 1})", acc))
    out.append(CheckOutcome("eta-phi", "eta(phi X) = 0", not bad,
                            collect_witnesses(bad)))

    def compat(i, j):
        phii = [s.phi[a][i] for a in range(d)]
        phij = [s.phi[a][j] for a in range(d)]
        return (m.pair_frame(phii, phij)
                - (-m.G[i][j] + s.eta[i] * s.eta[j]))

    matrix_check("metric-compatibility",
                 "g(phi X, phi Y) = -g(X,Y) + eta(X) eta(Y)", compat)

    bad = []
    for i in range(d):
        r = m.pair_frame(s.frame.unit(i), s.xi) - s.eta[i]
        if not r.is_zero:
            bad.append((f"(e{i + 1})", r))
    out.append(CheckOutcome("xi-metric-dual", "g(X, xi) = eta(X)", not bad,
                            collect_witnesses(bad)))

    def skew(i, j):
        phii = [s.phi[a][i] for a in range(d)]
        phij = [s.phi[a][j] for a in range(d)]
        return (m.pair_frame(phii, s.frame.unit(j))
                + m.pair_frame(s.frame.unit(i), phij))

    matrix_check("phi-skew-adjoint", "g(phi X, Y) = -g(X, phi Y)", skew)

    deta = twoform_on_frame(s.frame,
                            exterior_derivative_oneform(s.chart, s.eta_coord))

    def contact(i, j):
        phij = [s.phi[a][j] for a in range(d)]
        return deta.get(i, j) - m.pair_frame(s.frame.unit(i), phij)

    matrix_check("contact-compatibility", "d(eta)(X,Y) = g(X, phi Y)", contact)
    return out


@dataclass
class HResult:
    h: FrameTensor               # (1,1): h[a][j] = e_a comp of h(e_j)
    checks: list = field(default_factory=list)

    @property
    def vanishes(self) -> bool:
        return self.h.is_zero


def compute_h(s: ParacontactStructure, conn: Connection) -> HResult:
    """h = (Lie_xi phi) / 2 with every structural invariant checked exactly."""
    d = s.dim
    frame = s.frame
    m = s.metric
    half = s.chart.const(1) / s.chart.const(2)
    xi_coord = frame.from_frame(s.xi)
    cols = []
    for j in range(d):
        phij_coord = frame.from_frame([s.phi[a][j] for a in range(d)])
        lie1 = frame.to_frame(lie_bracket(xi_coord, phij_coord))
        lie2 = frame.to_frame(lie_bracket(xi_coord, frame.vectors[j]))
        phi_lie2 = s.phi_apply(lie2)
        cols.append(tuple(half * (lie1[a] - phi_lie2[a]) for a in range(d)))
    h = FrameTensor.build((1, 1), d, lambda a, j: cols[j][a])

    checks = []
    hxi = tuple(
        sum((h.get(a, j) * s.xi[j] for j in range(d)), start=s.chart.zero())
        for a in range(d))
    bad = [(f"component e{a + 1}", hxi[a]) for a in range(d)
           if not hxi[a].is_zero]
    checks.append(CheckOutcome("h-xi", "h(xi) = 0", not bad,
                               collect_witnesses(bad)))

    bad = []
    for a in range(d):
        for j in range(d):
            acc = s.chart.zero()
            for p in range(d):
                acc = acc + h.get(a, p) * s.phi[p][j] + s.phi[a][p] * h.get(p, j)
            if not acc.is_zero:
                bad.append((slot_name((a, j), d), acc))
    checks.append(CheckOutcome("h-anticommutes-phi", "h phi + phi h = 0",
                               not bad, collect_witnesses(bad)))

    tr = sum((h.get(a, a) for a in range(d)), start=s.chart.zero())
    checks.append(CheckOutcome("h-traceless", "trace h = 0", tr.is_zero,
                               [] if tr.is_zero else [f"trace {tr}"]))

    bad = []
    for i in range(d):
        for j in range(d):
            hi = [h.get(a, i) for a in range(d)]
            hj = [h.get(a, j) for a in range(d)]
            r = m.pair_frame(hi, frame.unit(j)) - m.pair_frame(frame.unit(i), hj)
            if not r.is_zero:
                bad.append((slot_name((i, j), d), r))
    checks.append(CheckOutcome("h-self-adjoint", "g(hX, Y) = g(X, hY)",
                               not bad, collect_witnesses(bad)))

    # nabla_X xi = -phi X + phi h X, the paracontact shape operator identity
    bad = []
    for i in range(d):
        lhs = nabla_frame(conn, frame.unit(i), s.xi)
        hi = [h.get(a, i) for a in range(d)]
        phi_hi = s.phi_apply(hi)
        phi_i = [s.phi[a][i] for a in range(d)]
        for a in range(d):
            r = lhs[a] + phi_i[a] - phi_hi[a]
            if not r.is_zero:
                bad.append((f"(e{i + 1}) component e{a + 1}", r))
    checks.append(CheckOutcome("reeb-covariant-derivative",
                               "nabla_X xi = -phi X + phi h X",
                               not bad, collect_witnesses(bad)))
    return HResult(h, checks)


@dataclass
class NullityClassification:
    cls: str                     # flat-xi-curvature | para-sasakian | N(k) | (k,mu) | unclassified
    k: Expr | None
    mu: Expr | None
    k_paracontact: bool          # h == 0
    mu_indeterminate: bool       # h == 0 makes mu a free parameter; pinned to 0
    residual: FrameTensor | None
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)


def classify_nullity(s: ParacontactStructure, R: FrameTensor,
                     h: FrameTensor) -> NullityClassification:
    """Exact extraction and verification of the nullity constants."""
    d = s.dim
    zero = s.chart.zero()

    def r_of(vf, wf, uf):
        """Frame comps of R(V,W)U by multilinearity."""
        out = []
        for a in range(d):
            acc = zero
            for i in range(d):
                if vf[i].is_zero:
                    continue
                for j in range(d):
                    if wf[j].is_zero:
                        continue
                    for p in range(d):
                        if uf[p].is_zero:
                            continue
                        acc = acc + vf[i] * wf[j] * uf[p] * R.get(a, i, j, p)
            out.append(acc)
        return out

    # extraction slots: X in ker(eta) via v_i = e_i - eta(e_i) xi, Y = xi
    rows = []
    slots = []
    for i in range(d):
        v = tuple((s.chart.one() if a == i else zero) - s.eta[i] * s.xi[a]
                  for a in range(d))
        hv = tuple(
            sum((h.get(a, p) * v[p] for p in range(d)), start=zero)
            for a in range(d))
        rv = r_of(v, s.xi, s.xi)
        for a in range(d):
            rows.append(([v[a], hv[a]], rv[a]))
            slots.append((i, a))
    sol = solve_exact(rows, 2)
    notes = []
    if sol.status == "inconsistent":
        i, a = slots[sol.witness_row]
        return NullityClassification(
            "unclassified", None, None, h.is_zero, False, None,
            witnesses=[f"(e{i + 1},xi,xi) component e{a + 1}: "
                       f"residual {sol.witness_residual}"],
            notes=["no constants k, mu fit the extraction slots"])
    k, mu = sol.solution
    mu_free = 1 in sol.free_columns
    if mu_free:
        notes.append("h = 0 leaves mu undetermined; pinned to 0")
    if not k.is_constant or not mu.is_constant:
        return NullityClassification(
            "unclassified", k, mu, h.is_zero, mu_free, None,
            witnesses=[f"k = {k}", f"mu = {mu}"],
            notes=notes + ["nullity functions are not constant"])

    # full verification on every pair (X,Y) = (e_i, e_j)
    def residual_entry(a, i, j):
        acc = r_of(s.frame.unit(i), s.frame.unit(j), s.xi)[a]
        delta_ai = s.chart.one() if a == i else zero
        delta_aj = s.chart.one() if a == j else zero
        acc = acc - k * (s.eta[j] * delta_ai - s.eta[i] * delta_aj)
        acc = acc - mu * (s.eta[j] * h.get(a, i) - s.eta[i] * h.get(a, j))
        return acc

    residual = FrameTensor.build((1, 2), d, residual_entry)
    if not residual.is_zero:
        bad = [(f"(e{i + 1},e{j + 1},xi) component e{a + 1}",
                residual.get(a, i, j))
               for (a, i, j) in residual.nonzero_slots(limit=4)]
        return NullityClassification(
            "unclassified", k, mu, h.is_zero, mu_free, residual,
            witnesses=collect_witnesses(bad),
            notes=notes + ["extracted constants do not satisfy the full "
                           "nullity equation"])

    k_is = k.constant_value()
    mu_is = mu.constant_value()
    if k_is == 0 and (mu_is == 0 or h.is_zero):
        cls = "flat-xi-curvature"
    elif mu_is == 0 or h.is_zero:
        cls = "para-sasakian" if (k_is == -1 and h.is_zero) else "N(k)"
    else:
        cls = "(k,mu)"
    return NullityClassification(cls, k, mu, h.is_zero, mu_free, residual,
                                 notes=notes)


def strict_nullity_residual(s: ParacontactStructure, R: FrameTensor,
                            k: Expr) -> tuple:
    """Residual of R(X,Y)xi = k (eta(Y)X - eta(X)Y) with the mu term dropped.

    Returns (tensor, witnesses); nonzero exactly when the space satisfies
    only the wider (k,mu) condition.
    """
    d = s.dim
    zero = s.chart.zero()

    def entry(a, i, j):
        acc = zero
        for p in range(d):
            if not s.xi[p].is_zero:
                acc = acc + R.get(a, i, j, p) * s.xi[p]
        delta_ai = s.chart.one() if a == i else zero
        delta_aj = s.chart.one() if a == j else zero
        return acc - k * (s.eta[j] * delta_ai - s.eta[i] * delta_aj)

    res = FrameTensor.build((1, 2), d, entry)
    bad = [(f"(e{i + 1},e{j + 1},xi) component e{a + 1}", res.get(a, i, j))
           for (a, i, j) in res.nonzero_slots(limit=4)]
    return res, collect_witnesses(bad)


def nullity_constant(metric: MetricOnFrame, R: FrameTensor,
                     xi_frame: Sequence[Expr]):
    """Bare nullity solve R(X,Y)xi = k (eta(Y)X - eta(X)Y), eta = g(., xi).

    Used on instances that carry no (phi, eta) data.  Returns (k, outcome).
    """
    d = metric.dim
    zero = metric.chart.zero()
    eta = metric.lower(xi_frame)
    rows = []
    slots = []
    for i in range(d):
        for j in range(d):
            for a in range(d):
                rxi = zero
                for p in range(d):
                    if not xi_frame[p].is_zero:
                        rxi = rxi + R.get(a, i, j, p) * xi_frame[p]
                delta_ai = metric.chart.one() if a == i else zero
                delta_aj = metric.chart.one() if a == j else zero
                coeff = eta[j] * delta_ai - eta[i] * delta_aj
                rows.append(([coeff], rxi))
                slots.append((i, j, a))
    sol = solve_exact(rows, 1)
    if sol.status == "inconsistent":
        i, j, a = slots[sol.witness_row]
        return None, CheckOutcome(
            "nullity-constant", "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", False,
            witnesses=[f"{slot_name((i, j), d)} component e{a + 1}: "
                       f"residual {sol.witness_residual}"])
    k = sol.solution[0]
    if sol.status == "underdetermined":
        note = ["R(.,.)xi = 0: any k fits; reporting k = 0"]
    else:
        note = []
    if not k.is_constant:
        return k, CheckOutcome("nullity-constant",
                               "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", False,
                               witnesses=[f"k = {k} is not constant"])
    return k, CheckOutcome("nullity-constant",
                           "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", True,
                           notes=note, data={"k": str(k)})


def verify_identity_suite(s: ParacontactStructure, conn: Connection,
                          R: FrameTensor, S: FrameTensor, h: FrameTensor,
                          k: Expr, n: int) -> list:
    """The identity family tied to the strict nullity class, evaluated with
    the classified k.  On a (k,mu) or unclassified space these identities
    are informational; the caller downgrades verdicts accordingly."""
    d = s.dim
    m = s.metric
    zero = s.chart.zero()
    out = []

    # h^2 = (1 + k) phi^2
    bad = []
    for a in range(d):
        for j in range(d):
            h2 = sum((h.get(a, p) * h.get(p, j) for p in range(d)), start=zero)
            phi2 = sum((s.phi[a][p] * s.phi[p][j] for p in range(d)),
                       start=zero)
            r = h2 - (s.chart.one() + k) * phi2
            if not r.is_zero:
                bad.append((slot_name((a, j), d), r))
    out.append(CheckOutcome("h-squared", "h^2 = (1+k) phi^2", not bad,
                            collect_witnesses(bad)))

    # (nabla_X eta)(Y) = g(X, phi Y) - g(h X, phi Y)
    eta_t = FrameTensor((0, 1), d, tuple(s.eta))
    nabla_eta = covariant_derivative_tensor(conn, eta_t)
    bad = []
    for i in range(d):
        hi = [h.get(a, i) for a in range(d)]
        for j in range(d):
            phij = [s.phi[a][j] for a in range(d)]
            r = (nabla_eta.get(i, j) - m.pair_frame(s.frame.unit(i), phij)
                 + m.pair_frame(hi, phij))
            if not r.is_zero:
                bad.append((slot_name((i, j), d), r))
    out.append(CheckOutcome("eta-covariant-derivative",
                            "(nabla_X eta)(Y) = g(X, phi Y) - g(h X, phi Y)",
                            not bad, collect_witnesses(bad)))

    # R(xi, X)Y = k (g(X,Y) xi - eta(Y) X)
    bad = []
    for i in range(d):
        for j in range(d):
            for a in range(d):
                rxiv = sum((s.xi[p] * R.get(a, p, i, j) for p in range(d)),
                           start=zero)
                delta_ai = s.chart.one() if a == i else zero
                r = rxiv - k * (m.G[i][j] * s.xi[a] - s.eta[j] * delta_ai)
                if not r.is_zero:
                    bad.append((f"(xi,e{i + 1},e{j + 1}) component e{a + 1}",
                                r))
    out.append(CheckOutcome("xi-curvature",
                            "R(xi,X)Y = k (g(X,Y) xi - eta(Y) X)",
                            not bad, collect_witnesses(bad)))

    # S(X, xi) = 2 n k eta(X)
    bad = []
    for i in range(d):
        sxxi = sum((S.get(i, j) * s.xi[j] for j in range(d)), start=zero)
        r = sxxi - s.chart.const(2 * n) * k * s.eta[i]
        if not r.is_zero:
            bad.append((f"(e{i + 1},xi)", r))
    out.append(CheckOutcome("ricci-xi", "S(X, xi) = 2 n k eta(X)",
                            not bad, collect_witnesses(bad)))

    # para-Sasakian curvature form: R(X,Y)xi = -(eta(Y)X - eta(X)Y)
    bad = []
    for i in range(d):
        for j in range(d):
            for a in range(d):
                rxi = sum((R.get(a, i, j, p) * s.xi[p] for p in range(d)),
                          start=zero)
                delta_ai = s.chart.one() if a == i else zero
                delta_aj = s.chart.one() if a == j else zero
                r = rxi + (s.eta[j] * delta_ai - s.eta[i] * delta_aj)
                if not r.is_zero:
                    bad.append((slot_name((i, j), d) + f" component e{a + 1}",
                                r))
    out.append(CheckOutcome("para-sasakian-curvature",
                            "R(X,Y)xi = -(eta(Y)X - eta(X)Y)",
                            not bad, collect_witnesses(bad)))
    return out
