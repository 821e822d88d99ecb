"""Full audit orchestration.

Runs, in a fixed order: geometry invariants, structure axioms, the h
tensor, nullity classification, the identity suite, pseudo-symmetry,
the Ricci-generalized trichotomy, the recurrence solver, torse-forming
analysis for each declared field, and finally cross-checks of any
claimed tables carried by the manifest.

Verdict policy: engine-verified identities map to pass/fail; analyzers
report pass with their findings attached; identities whose hypotheses
the manifold does not meet are inapplicable; disagreements between
claimed values and engine values are flagged, never failed.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import __version__
from .conditions import (DegenerateRicciError, generalized_ricci_recurrence_solve,
                         is_einstein, is_semi_symmetric,
                         nullity_pseudo_symmetry_check, pseudo_symmetry_analyze,
                         recurrence_linear_dependence, ricci_generalized_ps_check,
                         torse_forming_analyze)
from .expr import ExprSyntaxError
from .geometry import (FrameTensor, GeometryError, covariant_derivative_tensor,
                       curvature_action, frame_brackets, koszul_connection,
                       nabla_frame, ricci, ricci_naive_trace, riemann,
                       scalar_curvature)
from .manifest import Manifest
from .outcome import collect_witnesses, slot_name
from .paracontact import (classify_nullity, compute_h, nullity_constant,
                          strict_nullity_residual, verify_identity_suite,
                          verify_structure_axioms)
from .report import AuditReport, Check, check_from_outcome

STRICT_CLASSES = ("flat-xi-curvature", "para-sasakian", "N(k)")


@dataclass
class AuditOptions:
    numeric_samples: int = 10
    seed: int = 0
    tolerance: float = 1e-9

    def to_dict(self) -> dict:
        return {"numeric_samples": self.numeric_samples, "seed": self.seed,
                "tolerance": self.tolerance}


def _mat_strs(get, d):
    return [[str(get(i, j)) for j in range(d)] for i in range(d)]


def _vec_str(comps) -> str:
    return "(" + ", ".join(str(c) for c in comps) + ")"


def _claim_matches(chart, claimed: str, engine) -> bool:
    """Claimed strings parse into the grammar when polynomial; quotient
    values fall back to comparison with the canonical rendering."""
    try:
        return chart.parse(claimed) == engine
    except ExprSyntaxError:
        return claimed == str(engine)


def _geometry_block(rep, man, conn, R, S, S_naive, r):
    metric = man.metric
    chart = man.chart
    d = man.dim
    frame = metric.frame
    br = frame_brackets(frame)

    bad = []
    for i in range(d):
        for j in range(i + 1, d):
            lhs = nabla_frame(conn, frame.unit(i), frame.unit(j))
            rhs = nabla_frame(conn, frame.unit(j), frame.unit(i))
            for a in range(d):
                res = lhs[a] - rhs[a] - br[i][j][a]
                if not res.is_zero:
                    bad.append((f"{slot_name((i, j), d)} component e{a + 1}",
                                res))
    rep.add(Check("geometry.torsion-free", "connection has no torsion",
                  "nabla_X Y - nabla_Y X = [X,Y]",
                  "pass" if not bad else "fail", collect_witnesses(bad),
                  data={"brackets": _mat_strs(
                      lambda i, j: _vec_str(br[i][j]), d)}))

    Gt = FrameTensor.build((0, 2), d, lambda i, j: metric.G[i][j])
    nG = covariant_derivative_tensor(conn, Gt)
    bad = [(slot_name(idx, d), nG.get(*idx))
           for idx in nG.nonzero_slots(limit=4)]
    rep.add(Check("geometry.metric-parallel", "metric is parallel",
                  "nabla g = 0", "pass" if nG.is_zero else "fail",
                  collect_witnesses(bad),
                  data={"connection": _mat_strs(
                      lambda i, j: _vec_str(conn.Gamma[i][j]), d)}))

    def r04(i, j, k, l):
        acc = chart.zero()
        for a in range(d):
            acc = acc + R.get(a, i, j, k) * metric.G[a][l]
        return acc

    bad = []
    for idx in R.indices():
        a, i, j, k = idx
        res = R.get(a, i, j, k) + R.get(a, j, i, k)
        if not res.is_zero:
            bad.append((slot_name(idx, d), res))
    rep.add(Check("geometry.riemann-antisymmetry",
                  "curvature is antisymmetric in the argument pair",
                  "R(X,Y)Z + R(Y,X)Z = 0", "pass" if not bad else "fail",
                  collect_witnesses(bad)))

    bad = []
    bad_pair = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                for l in range(d):
                    v = r04(i, j, k, l)
                    res = v + r04(i, j, l, k)
                    if not res.is_zero:
                        bad.append((slot_name((i, j, k, l), d), res))
                    res = v - r04(k, l, i, j)
                    if not res.is_zero:
                        bad_pair.append((slot_name((i, j, k, l), d), res))
    rep.add(Check("geometry.riemann-last-pair-antisymmetry",
                  "lowered curvature is antisymmetric in the last pair",
                  "g(R(X,Y)Z, W) + g(R(X,Y)W, Z) = 0",
                  "pass" if not bad else "fail", collect_witnesses(bad)))
    rep.add(Check("geometry.riemann-pair-symmetry",
                  "lowered curvature is symmetric under pair exchange",
                  "g(R(X,Y)Z, W) = g(R(Z,W)X, Y)",
                  "pass" if not bad_pair else "fail",
                  collect_witnesses(bad_pair)))

    bad = []
    for idx in R.indices():
        a, i, j, k = idx
        res = R.get(a, i, j, k) + R.get(a, j, k, i) + R.get(a, k, i, j)
        if not res.is_zero:
            bad.append((slot_name(idx, d), res))
    rep.add(Check("geometry.first-bianchi", "first Bianchi identity",
                  "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0",
                  "pass" if not bad else "fail", collect_witnesses(bad)))

    R04t = FrameTensor.build((0, 4), d, r04)
    nR = covariant_derivative_tensor(conn, R04t)
    bad = []
    for m in range(d):
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for l in range(d):
                        res = (nR.get(m, i, j, k, l) + nR.get(i, j, m, k, l)
                               + nR.get(j, m, i, k, l))
                        if not res.is_zero:
                            bad.append((slot_name((m, i, j, k, l), d), res))
    rep.add(Check("geometry.second-bianchi", "second Bianchi identity",
                  "(nabla_X R)(Y,Z) + (nabla_Y R)(Z,X) + (nabla_Z R)(X,Y) "
                  "= 0", "pass" if not bad else "fail",
                  collect_witnesses(bad)))

    RG = curvature_action(R, Gt)
    bad = [(slot_name(idx, d), RG.get(*idx))
           for idx in RG.nonzero_slots(limit=4)]
    rep.add(Check("geometry.curvature-kills-metric",
                  "curvature acts trivially on the metric", "R . g = 0",
                  "pass" if RG.is_zero else "fail", collect_witnesses(bad)))

    bad = []
    for i in range(d):
        for j in range(i + 1, d):
            res = S.get(i, j) - S.get(j, i)
            if not res.is_zero:
                bad.append((slot_name((i, j), d), res))
    rep.add(Check("geometry.ricci-symmetric", "Ricci tensor is symmetric",
                  "S(Y,Z) = S(Z,Y)", "pass" if not bad else "fail",
                  collect_witnesses(bad),
                  data={"ricci": _mat_strs(S.get, d),
                        "ricci_alternative_trace": _mat_strs(S_naive.get, d),
                        "scalar_curvature": str(r)}))


def run_audit(man: Manifest, options: AuditOptions | None = None) -> AuditReport:
    opts = options or AuditOptions()
    rep = AuditReport(man.name, opts.to_dict(), engine=f"parageo {__version__}")
    metric = man.metric
    chart = man.chart
    d = man.dim
    conn = koszul_connection(metric)
    R = riemann(conn)
    S = ricci(metric, R)
    S_naive = ricci_naive_trace(metric, R)
    r = scalar_curvature(metric, S)

    _geometry_block(rep, man, conn, R, S, S_naive, r)

    s = man.structure
    cls = None
    hres = None
    xi_frame = None
    k_known = None
    if s is not None:
        for outcome in verify_structure_axioms(s):
            rep.add(check_from_outcome(f"structure.{outcome.name}",
                                       outcome.name, outcome))
        hres = compute_h(s, conn)
        first = True
        for outcome in hres.checks:
            c = check_from_outcome(f"h.{outcome.name}", outcome.name, outcome)
            if first:
                c.data["h"] = _mat_strs(hres.h.get, d)
                first = False
            rep.add(c)

        cls = classify_nullity(s, R, hres.h)
        k_known = cls.k if (cls.k is not None and cls.k.is_constant) else None
        xi_frame = s.xi
        rep.add(Check(
            "paracontact.nullity-class", "nullity classification",
            "R(X,Y)xi = k (eta(Y)X - eta(X)Y) + mu (eta(Y)hX - eta(X)hY)",
            "flagged" if cls.cls == "unclassified" else "pass",
            list(cls.witnesses), list(cls.notes),
            data={"class": cls.cls, "k": str(cls.k), "mu": str(cls.mu),
                  "k_paracontact": cls.k_paracontact,
                  "mu_indeterminate": cls.mu_indeterminate}))

        if cls.cls in STRICT_CLASSES:
            rep.add(Check("paracontact.strict-nullity",
                          "strict nullity identity",
                          "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", "pass",
                          data={"k": str(cls.k)}))
        elif k_known is not None:
            _res, wit = strict_nullity_residual(s, R, cls.k)
            rep.add(Check("paracontact.strict-nullity",
                          "strict nullity identity",
                          "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", "flagged", wit,
                          [f"only the wider (k,mu) identity holds "
                           f"(mu = {cls.mu}); the strict form fails on the "
                           "witnessed slots"],
                          data={"k": str(cls.k), "mu": str(cls.mu)}))
        else:
            rep.add(Check("paracontact.strict-nullity",
                          "strict nullity identity",
                          "R(X,Y)xi = k (eta(Y)X - eta(X)Y)", "flagged",
                          list(cls.witnesses),
                          ["no constant nullity coefficients exist"]))
    elif "nullity_xi" in man.claims:
        xi_frame = tuple(chart.parse(t) for t in man.claims["nullity_xi"])
        k_bare, outcome = nullity_constant(metric, R, xi_frame)
        k_known = k_bare if (k_bare is not None and k_bare.is_constant) \
            else None
        rep.add(check_from_outcome("paracontact.bare-nullity",
                                   "bare nullity solve", outcome))

    try:
        n_rank = chart.contact_rank()
    except GeometryError:
        n_rank = None

    if s is not None and cls is not None and k_known is not None:
        strict = cls.cls in STRICT_CLASSES
        for outcome in verify_identity_suite(s, conn, R, S, hres.h, cls.k,
                                             n_rank):
            cid = f"identities.{outcome.name}"
            if outcome.name in ("h-squared", "eta-covariant-derivative",
                                "ricci-xi"):
                rep.add(check_from_outcome(cid, outcome.name, outcome))
            elif outcome.name == "xi-curvature":
                if outcome.holds or strict:
                    rep.add(check_from_outcome(cid, outcome.name, outcome))
                else:
                    rep.add(check_from_outcome(
                        cid, outcome.name, outcome, verdict="inapplicable",
                        extra_notes=["strict nullity hypothesis unmet "
                                     f"(class {cls.cls})"]))
            elif outcome.name == "para-sasakian-curvature":
                if outcome.holds or cls.cls == "para-sasakian":
                    rep.add(check_from_outcome(cid, outcome.name, outcome))
                else:
                    rep.add(check_from_outcome(
                        cid, outcome.name, outcome, verdict="inapplicable",
                        extra_notes=[f"manifold is not para-Sasakian "
                                     f"(class {cls.cls})"]))

    ps = pseudo_symmetry_analyze(metric, R, "R")
    rep.add(Check("conditions.pseudo-symmetry",
                  "pseudo-symmetry of the curvature tensor",
                  "R(X,Y) . R = L ((X wedge_g Y) . R)", "pass",
                  list(ps.witnesses),
                  list(ps.notes) + ([] if ps.holds else
                                    ["no single scalar L works on all "
                                     "slots"]),
                  data={"holds": ps.holds,
                        "semi_symmetric": ps.semi_symmetric,
                        "L": str(ps.L) if ps.L is not None else None,
                        "constant_type": ps.constant_type}))

    if xi_frame is not None and k_known is not None:
        outcome = nullity_pseudo_symmetry_check(metric, R, xi_frame, k_known)
        strict = (cls.cls in STRICT_CLASSES) if cls is not None else True
        if outcome.holds or strict:
            rep.add(check_from_outcome("conditions.nullity-pseudo-symmetry",
                                       "restricted pseudo-symmetry", outcome))
        else:
            rep.add(check_from_outcome(
                "conditions.nullity-pseudo-symmetry",
                "restricted pseudo-symmetry", outcome,
                verdict="inapplicable",
                extra_notes=["strict nullity hypothesis unmet"]))

        rg = ricci_generalized_ps_check(metric, R, S, xi_frame, k_known,
                                        n_rank if n_rank else 1)
        verdict = "pass"
        notes = list(rg.notes)
        if cls is not None and cls.cls in STRICT_CLASSES and rg.holds \
                and rg.trichotomy is False:
            verdict = "fail"
            notes.append("the condition holds but none of the trichotomy "
                         "branches do")
        if cls is not None and cls.cls not in STRICT_CLASSES:
            notes.append(f"applicability: class {cls.cls} does not satisfy "
                         "the strict nullity hypothesis")
        rep.add(Check("conditions.ricci-generalized-ps",
                      "Ricci-generalized pseudo-symmetry trichotomy",
                      "g((R(xi,X) . R)(Y,Z)W, xi) = "
                      "L g(((xi wedge_S X) . R)(Y,Z)W, xi)", verdict,
                      list(rg.witnesses), notes,
                      data={"holds": rg.holds,
                            "L": str(rg.L) if rg.L is not None else None,
                            "branches": rg.branches,
                            "trichotomy": rg.trichotomy}))

    if S.is_zero:
        rep.add(Check("conditions.ricci-recurrence",
                      "generalized Ricci recurrence",
                      "nabla_X S = A(X) S + B(X) g", "inapplicable",
                      notes=["Ricci tensor vanishes identically"]))
        rec = None
    else:
        rec = generalized_ricci_recurrence_solve(metric, conn, S)
        data = {"exists": rec.exists}
        if rec.exists:
            data.update({"A": [str(a) for a in rec.A],
                         "B": [str(b) for b in rec.B],
                         "non_unique": rec.non_unique,
                         "zeta1": _vec_str(rec.zeta1),
                         "zeta2": _vec_str(rec.zeta2)})
        rep.add(Check("conditions.ricci-recurrence",
                      "generalized Ricci recurrence",
                      "nabla_X S = A(X) S + B(X) g", "pass",
                      list(rec.witnesses), list(rec.notes), data))
        if rec.exists and k_known is not None and n_rank:
            outcome = recurrence_linear_dependence(metric, rec, k_known,
                                                   n_rank)
            strict = (cls.cls in STRICT_CLASSES) if cls is not None else True
            if outcome.holds or strict:
                rep.add(check_from_outcome("conditions.recurrence-dependence",
                                           "recurrence 1-form dependence",
                                           outcome))
            else:
                rep.add(check_from_outcome(
                    "conditions.recurrence-dependence",
                    "recurrence 1-form dependence", outcome,
                    verdict="inapplicable",
                    extra_notes=["strict nullity hypothesis unmet"]))

    for fname, vf in man.fields.items():
        tf = torse_forming_analyze(metric, conn, vf, unit=True,
                                   samples=opts.numeric_samples,
                                   seed=opts.seed, tol=opts.tolerance)
        data = {"is_torse_forming": tf.is_torse_forming}
        verdict = "pass"
        notes = list(tf.notes)
        if tf.is_torse_forming:
            data.update({"rho": str(tf.rho),
                         "beta": [str(b) for b in tf.beta],
                         "special": tf.special})
            if tf.unit is not None:
                ua = tf.unit
                data["unit"] = {"mode": ua.mode,
                                "checks": dict(ua.checks),
                                "samples": ua.samples,
                                "tolerance": ua.tolerance,
                                "max_residual": ua.max_residual}
                notes.extend(ua.notes)
                if not all(ua.checks.values()):
                    verdict = "fail"
                    notes.append("certified unit-field identity failed "
                                 "verification")
        rep.add(Check(f"conditions.torse-forming.{fname}",
                      f"torse-forming analysis of field {fname!r}",
                      "(nabla_X omega)(Y) = rho g(X,Y) + beta(X) omega(Y)",
                      verdict, list(tf.witnesses), notes, data))

    _claims_block(rep, man, conn, R, S, S_naive, r, cls, k_known, n_rank,
                  rec if not S.is_zero else None)
    return rep.finalize()


def _claims_block(rep, man, conn, R, S, S_naive, r, cls, k_known, n_rank,
                  rec):
    claims = man.claims
    if not claims:
        return
    metric = man.metric
    chart = man.chart
    d = man.dim
    frame = metric.frame

    if "bracket" in claims:
        br = frame_brackets(frame)
        bad = []
        for entry in claims["bracket"]:
            i, j = entry["x"] - 1, entry["y"] - 1
            want = tuple(chart.parse(t) for t in entry["value"])
            got = br[i][j]
            if any(not (got[a] - want[a]).is_zero for a in range(d)):
                bad.append(f"[e{i + 1},e{j + 1}]: claimed "
                           f"{_vec_str(want)}, engine {_vec_str(got)}")
        rep.add(Check("claims.bracket-table", "claimed bracket table",
                      "claimed [e_i, e_j] values match the engine",
                      "pass" if not bad else "flagged", bad))

    if "koszul" in claims:
        bad = []
        for i in range(d):
            for j in range(d):
                want = tuple(chart.parse(t) for t in claims["koszul"][i][j])
                got = conn.Gamma[i][j]
                if any(not (got[a] - want[a]).is_zero for a in range(d)):
                    bad.append(f"nabla_e{i + 1} e{j + 1}: claimed "
                               f"{_vec_str(want)}, engine {_vec_str(got)}")
        rep.add(Check("claims.koszul-table", "claimed connection table",
                      "claimed nabla_{e_i} e_j values match the engine",
                      "pass" if not bad else "flagged", bad))

    if "curvature" in claims:
        bad = []
        for entry in claims["curvature"]:
            i, j, k = entry["x"] - 1, entry["y"] - 1, entry["z"] - 1
            want = tuple(chart.parse(t) for t in entry["value"])
            got = tuple(R.get(a, i, j, k) for a in range(d))
            if any(not (got[a] - want[a]).is_zero for a in range(d)):
                bad.append(f"R(e{i + 1},e{j + 1})e{k + 1}: claimed "
                           f"{_vec_str(want)}, engine {_vec_str(got)}")
        rep.add(Check("claims.curvature-table", "claimed curvature table",
                      "claimed R(e_i, e_j)e_k values match the engine",
                      "pass" if not bad else "flagged", bad))

    if "nullity_k" in claims:
        want_k = chart.parse(claims["nullity_k"])
        wit = []
        notes = []
        verdict = "pass"
        data = {"claimed_k": claims["nullity_k"]}
        if k_known is None:
            verdict = "flagged"
            notes.append("engine found no constant nullity coefficient")
        else:
            data["engine_k"] = str(k_known)
            if k_known != want_k:
                verdict = "flagged"
                wit.append(f"k: claimed {want_k}, engine {k_known}")
        if claims.get("nullity_strict") and cls is not None:
            data["engine_class"] = cls.cls
            if cls.cls not in STRICT_CLASSES:
                verdict = "flagged"
                _res, swit = strict_nullity_residual(man.structure, R, cls.k)
                wit.extend(swit)
                notes.append("strict nullity claimed, but the identity "
                             f"fails (engine class {cls.cls} with "
                             f"mu = {cls.mu})")
        rep.add(Check("claims.nullity", "claimed nullity class",
                      "claimed nullity constants match the engine "
                      "classification", verdict, wit, notes, data))

    if "ricci_diagonal" in claims:
        want = [chart.parse(t) for t in claims["ricci_diagonal"]]
        wit = []
        for i in range(d):
            if S.get(i, i) != want[i]:
                wit.append(f"S(e{i + 1},e{i + 1}): engine {S.get(i, i)}, "
                           f"claimed {want[i]}")
        notes = []
        naive_match = all(S_naive.get(i, i) == want[i] for i in range(d))
        if naive_match and wit:
            notes.append("the claimed diagonal coincides with the "
                         "alternative frame-trace convention (sum_i "
                         "g(R(e_i,Y)Z, e_i)), not with the inverse-metric "
                         "trace")
        if k_known is not None and n_rank and man.structure is not None:
            eta_xi = metric.pair_frame(man.structure.xi, man.structure.xi)
            want_szz = chart.const(2 * n_rank) * k_known * eta_xi
            notes.append(f"the identity S(xi,xi) = 2 n k eta(xi) gives "
                         f"{want_szz} here")
        rep.add(Check("claims.ricci-values", "claimed Ricci values",
                      "claimed Ricci diagonal matches the engine",
                      "pass" if not wit else "flagged", wit, notes,
                      data={"claimed_diagonal": claims["ricci_diagonal"],
                            "engine_diagonal": [str(S.get(i, i))
                                                for i in range(d)],
                            "alternative_trace_diagonal": [
                                str(S_naive.get(i, i)) for i in range(d)],
                            "scalar_curvature": str(r)}))

    if "nabla_ricci" in claims:
        nS = covariant_derivative_tensor(conn, S)
        wit = []
        claimed_tables = {}
        for m in range(d):
            claimed = claims["nabla_ricci"][f"e{m + 1}"]
            claimed_tables[m] = [[chart.parse(claimed[i][j])
                                  for j in range(d)] for i in range(d)]
            for i in range(d):
                for j in range(d):
                    want = claimed_tables[m][i][j]
                    if nS.get(m, i, j) != want and len(wit) < 4:
                        wit.append(f"(nabla_e{m + 1} S)(e{i + 1},e{j + 1}): "
                                   f"engine {nS.get(m, i, j)}, claimed "
                                   f"{want}")
        notes = []
        internal_ok = None
        if "ricci_diagonal" in claims:
            diag = [chart.parse(t) for t in claims["ricci_diagonal"]]
            Sc = FrameTensor.build(
                (0, 2), d,
                lambda i, j: diag[i] if i == j else chart.zero())
            nSc = covariant_derivative_tensor(conn, Sc)
            internal_ok = all(
                nSc.get(m, i, j) == claimed_tables[m][i][j]
                for m in range(d) for i in range(d) for j in range(d))
            if wit and internal_ok:
                notes.append("the claimed tables equal the covariant "
                             "derivative of the claimed diagonal Ricci "
                             "matrix (off-diagonal entries taken as zero); "
                             "the engine Ricci tensor differs")
        rep.add(Check("claims.ricci-derivative-table",
                      "claimed Ricci derivative tables",
                      "claimed (nabla_{e_i} S) entries match the engine",
                      "pass" if not wit else "flagged", wit, notes,
                      data={"consistent_with_claimed_diagonal": internal_ok}))

    if "recurrent" in claims:
        wit = []
        notes = []
        data = {"claimed": bool(claims["recurrent"])}
        if rec is None:
            engine_exists = False
            notes.append("Ricci tensor vanishes identically")
        else:
            engine_exists = rec.exists
            wit = list(rec.witnesses)
        data["engine"] = engine_exists
        verdict = "pass" if engine_exists == bool(claims["recurrent"]) \
            else "flagged"
        if verdict == "flagged" and not S_naive.is_zero:
            try:
                rec_naive = generalized_ricci_recurrence_solve(metric, conn,
                                                               S_naive)
                data["engine_alternative_trace"] = rec_naive.exists
                if not rec_naive.exists:
                    notes.append("the recurrence also has no solution for "
                                 "the alternative-trace Ricci tensor")
                    wit.extend(rec_naive.witnesses[:1])
            except DegenerateRicciError:
                pass
        if verdict == "pass" and rec is not None and rec.exists:
            for key, got in (("recurrence_a", rec.A), ("recurrence_b",
                                                       rec.B)):
                if key in claims:
                    for i, text in enumerate(claims[key]):
                        if not _claim_matches(chart, text, got[i]):
                            verdict = "flagged"
                            wit.append(f"{key}[e{i + 1}]: claimed {text}, "
                                       f"engine {got[i]}")
        rep.add(Check("claims.recurrence", "claimed recurrence",
                      "claimed recurrence solvability matches the engine",
                      verdict, wit, notes, data))

    if "recurrence_b_over_a" in claims:
        c = chart.parse(claims["recurrence_b_over_a"])
        wit = []
        notes = []
        verdict = "pass"
        if k_known is not None and n_rank:
            need = chart.const(-2 * n_rank) * k_known
            notes.append(f"2 n k A + B = 0 with k = {k_known}, n = {n_rank} "
                         f"forces B = {need} A")
            if c != need:
                verdict = "flagged"
                wit.append(f"claimed B = {c} A; the dependence identity "
                           f"needs B = {need} A, so both hold only if "
                           "A = 0")
        else:
            notes.append("no nullity constant available to test the "
                         "dependence identity")
        rep.add(Check("claims.recurrence-dependence-sign",
                      "claimed recurrence proportionality",
                      "claimed B = c A is consistent with 2 n k A + B = 0",
                      verdict, wit, notes,
                      data={"claimed_factor": claims["recurrence_b_over_a"]}))

    if "recurrence_check_b_scale" in claims:
        scale = claims["recurrence_check_b_scale"]
        verdict = "pass" if scale == 1 else "flagged"
        wit = []
        if scale != 1:
            wit.append(f"the claimed verification identity uses {scale} B "
                       "in place of B; together with the recurrence "
                       "definition it can hold only if B = 0")
        rep.add(Check("claims.recurrence-verification-scale",
                      "claimed recurrence verification equation",
                      "the claimed verification equation matches the "
                      "recurrence definition", verdict, wit,
                      data={"claimed_scale": scale}))

    if "einstein_c" in claims:
        ein = is_einstein(metric, S)
        want = chart.parse(claims["einstein_c"])
        wit = []
        if not ein.is_einstein:
            wit.append("engine: S is not proportional to g")
            wit.extend(ein.witnesses[:2])
        elif ein.c != want:
            wit.append(f"proportionality: claimed {want}, engine {ein.c}")
        rep.add(Check("claims.einstein", "claimed Einstein constant",
                      "S = c g with the claimed constant c",
                      "pass" if not wit else "flagged", wit,
                      data={"claimed_c": claims["einstein_c"],
                            "engine_c": str(ein.c) if ein.c is not None
                            else None}))

    if "semi_symmetric" in claims:
        outcome = is_semi_symmetric(R)
        agree = outcome.holds == bool(claims["semi_symmetric"])
        rep.add(Check("claims.semi-symmetric", "claimed semi-symmetry",
                      "claimed R . R = 0 verdict matches the engine",
                      "pass" if agree else "flagged",
                      [] if agree else list(outcome.witnesses),
                      data={"claimed": bool(claims["semi_symmetric"]),
                            "engine": outcome.holds}))

    if "scalar_curvature" in claims:
        want = chart.parse(claims["scalar_curvature"])
        agree = r == want
        rep.add(Check("claims.scalar-curvature", "claimed scalar curvature",
                      "claimed scalar curvature matches the engine",
                      "pass" if agree else "flagged",
                      [] if agree else [f"scalar curvature: claimed {want}, "
                                        f"engine {r}"],
                      data={"claimed": claims["scalar_curvature"],
                            "engine": str(r)}))
