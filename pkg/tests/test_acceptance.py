"""Acceptance gate: one test per acceptance criterion, numbered c01..c11.

Every check below is exact (rational arithmetic, zero tolerance) except
the sampled-numeric confirmations of the torse-forming unit analysis,
whose relative tolerance is pinned here.
"""
import json
import random
import time
from fractions import Fraction

from parageo.audit import AuditOptions, run_audit
from parageo.builtins import load_builtin
from parageo.cli import main
from parageo.conditions import (DegenerateRicciError,
                                generalized_ricci_recurrence_solve,
                                nullity_pseudo_symmetry_check,
                                recurrence_linear_dependence,
                                torse_forming_analyze)
from parageo.geometry import (FrameTensor, VectorField,
                              covariant_derivative_tensor, curvature_action,
                              exterior_derivative_oneform, frame_brackets,
                              koszul_connection, twoform_on_frame)
from parageo.paracontact import nullity_constant, strict_nullity_residual
from parageo.report import report_to_dict

from conftest import CORPUS, get_bundle
from oracle_coord import get_oracle

SAMPLED_REL_TOL = 1e-9

_audit_cache = {}


def sec7_audit():
    if "sec7" not in _audit_cache:
        rep = run_audit(load_builtin("sec7"),
                        AuditOptions(tolerance=SAMPLED_REL_TOL)).finalize()
        _audit_cache["sec7"] = report_to_dict(rep)
    return _audit_cache["sec7"]


def find_check(report, cid):
    for c in report["checks"]:
        if c["id"] == cid:
            return c
    raise AssertionError(f"check {cid!r} missing from the report")


def strict_nullity_instances():
    """(bundle, k, xi) for every corpus member in a strict nullity class."""
    out = []
    for name in CORPUS:
        b = get_bundle(name)
        if b.cls is not None:
            if b.cls.cls in ("flat-xi-curvature", "para-sasakian", "N(k)"):
                out.append((b, b.cls.k, b.structure.xi))
        elif "nullity_xi" in b.man.claims:
            xi = tuple(b.chart.parse(t) for t in b.man.claims["nullity_xi"])
            k, outcome = nullity_constant(b.metric, b.R, xi)
            if outcome.holds and k is not None:
                out.append((b, k, xi))
    return out


def test_c01_bracket_table():
    t0 = time.perf_counter()
    man = load_builtin("sec7")
    br = frame_brackets(man.metric.frame)
    elapsed = time.perf_counter() - t0
    chart = man.chart
    want = {(0, 1): ("0", "0", "2"),    # [e1,e2] = 2 e3
            (0, 2): ("0", "-1", "0"),   # [e1,e3] = -e2
            (1, 2): ("0", "0", "0")}    # [e2,e3] = 0
    for (i, j), comps in want.items():
        assert br[i][j] == tuple(chart.parse(t) for t in comps)
    assert elapsed < 1.0
    print("criterion 1: PASS (bracket table exact, "
          f"{elapsed * 1000:.0f} ms)")


def test_c02_koszul_table_and_metric_parallel():
    b = get_bundle("sec7")
    claimed = b.man.claims["koszul"]
    for i in range(3):
        for j in range(3):
            assert b.conn.Gamma[i][j] == b.vec(*claimed[i][j])
    br = frame_brackets(b.frame)
    for i in range(3):
        for j in range(3):
            for a in range(3):
                torsion = (b.conn.Gamma[i][j][a] - b.conn.Gamma[j][i][a]
                           - br[i][j][a])
                assert torsion.is_zero
    Gt = FrameTensor.build((0, 2), 3, lambda i, j: b.metric.G[i][j])
    assert covariant_derivative_tensor(b.conn, Gt).is_zero
    print("criterion 2: PASS (Koszul table, torsion-free, nabla g = 0)")


def test_c03_curvature_table():
    b = get_bundle("sec7")
    rows = b.man.claims["curvature"]
    assert len(rows) == 9
    for row in rows:
        i, j, k = row["x"] - 1, row["y"] - 1, row["z"] - 1
        got = tuple(b.R.get(a, i, j, k) for a in range(3))
        assert got == b.vec(*row["value"])
    print("criterion 3: PASS (all nine curvature values exact)")


def test_c04_nullity_classification_and_strict_flag():
    b = get_bundle("sec7")
    assert b.cls.k == b.e("-1")
    assert b.cls.mu == b.e("2")
    assert not b.cls.mu.is_zero
    res, wit = strict_nullity_residual(b.structure, b.R, b.cls.k)
    assert not res.is_zero

    check = find_check(sec7_audit(), "paracontact.strict-nullity")
    assert check["verdict"] == "flagged"
    assert any(w.startswith("(e1,e3,xi)") for w in check["witnesses"])
    print("criterion 4: PASS (k = -1, mu = 2, strict-slot flag present)")


def test_c05_identity_suite_and_ricci_flag():
    b = get_bundle("sec7")
    # h^2 and (1+k) phi^2 both vanish identically at k = -1
    k = b.cls.k
    for a in range(3):
        for j in range(3):
            h2 = sum((b.hres.h.get(a, p) * b.hres.h.get(p, j)
                      for p in range(3)), start=b.chart.zero())
            phi2 = sum((b.structure.phi[a][p] * b.structure.phi[p][j]
                        for p in range(3)), start=b.chart.zero())
            assert h2.is_zero
            assert ((b.chart.one() + k) * phi2).is_zero
    assert find_check(sec7_audit(), "identities.h-squared")["verdict"] \
        == "pass"

    # engine S(e3,e3) = -2 = 2nk; the claimed diagonal only matches the
    # alternative frame trace and must be flagged, never silently accepted
    assert b.S.get(2, 2) == b.e("-2")
    check = find_check(sec7_audit(), "claims.ricci-values")
    assert check["verdict"] == "flagged"
    assert any("S(e3,e3): engine -2, claimed 2" in w
               for w in check["witnesses"])
    assert check["data"]["alternative_trace_diagonal"] == ["-1", "-3", "2"]
    assert check["data"]["engine_diagonal"] == ["2", "0", "-2"]
    print("criterion 5: PASS (h^2 identity exact, Ricci discrepancy "
          "flagged with both traces shown)")


def test_c06_nullity_pseudo_symmetry_theorem():
    instances = strict_nullity_instances()
    assert len(instances) >= 3
    assert any(b.man.name == "cc-pseudo" for b, _k, _xi in instances)
    for b, k, xi in instances:
        out = nullity_pseudo_symmetry_check(b.metric, b.R, xi, k)
        assert out.holds, f"{b.man.name}: {out.witnesses}"
    names = sorted(b.man.name for b, _k, _xi in instances)
    print(f"criterion 6: PASS (L_R = k exactly on {', '.join(names)})")


def test_c07_recurrence_dependence_theorem():
    verified = []
    for b, k, _xi in strict_nullity_instances():
        try:
            rec = generalized_ricci_recurrence_solve(b.metric, b.conn, b.S)
        except DegenerateRicciError:
            continue
        if not rec.exists:
            continue
        dep = recurrence_linear_dependence(b.metric, rec, k,
                                           b.chart.contact_rank())
        assert dep.holds, f"{b.man.name}: {dep.witnesses}"
        verified.append(b.man.name)
    assert verified, "no instance exercised the dependence identity"

    scale = find_check(sec7_audit(), "claims.recurrence-verification-scale")
    assert scale["verdict"] == "flagged"
    assert str(scale["data"]["claimed_scale"]) == "3"
    sign = find_check(sec7_audit(), "claims.recurrence-dependence-sign")
    assert sign["verdict"] == "flagged"
    assert str(sign["data"]["claimed_factor"]) == "-2"
    print("criterion 7: PASS (2nkA + B = 0 on "
          f"{', '.join(sorted(verified))}; factor-3 and sign flags present)")


def test_c08_torse_forming_analyzer():
    flat = get_bundle("flat3")
    pos = VectorField(flat.chart, tuple(flat.chart.parse(n)
                                        for n in flat.chart.coords))
    rep = torse_forming_analyze(flat.metric, flat.conn, pos,
                                tol=SAMPLED_REL_TOL)
    assert rep.is_torse_forming
    assert rep.rho == flat.chart.one()
    assert all(bb.is_zero for bb in rep.beta)
    assert rep.special == "concurrent"   # rho = 1: concircular and more
    assert rep.unit.concircular
    assert rep.unit.max_residual <= SAMPLED_REL_TOL

    b = get_bundle("sec7")
    xi_coord = b.frame.from_frame(b.structure.xi)
    rep7 = torse_forming_analyze(b.metric, b.conn, xi_coord)
    assert not rep7.is_torse_forming
    assert rep7.witnesses == ["(e1,e1): residual -1"]
    print("criterion 8: PASS (position field (rho, beta) = (1, 0); "
          "reeb field rejected with witness)")


def test_c09_oracle_equivalence():
    rng = random.Random(424242)
    for name in ("sec7", "flat3"):
        b = get_bundle(name)
        o = get_oracle(name)
        for _ in range(10):
            pt = {n: Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                  for n in b.chart.coords}
            for i in range(3):
                for j in range(3):
                    for k in range(3):
                        table = o.curvature_frame(i, j, k)
                        for a in range(3):
                            assert b.R.get(a, i, j, k).eval(pt) == \
                                o.eval_at(table[a], pt)
                    assert b.S.get(i, j).eval(pt) == \
                        o.eval_at(o.ricci_frame(i, j), pt)
    print("criterion 9: PASS (10 exact rational points per manifold, "
          "Riemann and Ricci)")


def test_c10_property_suites():
    for name in CORPUS:
        b = get_bundle(name)
        d = b.frame.dim
        low = FrameTensor.build(
            (0, 4), d,
            lambda i, j, k, el: sum(
                (b.R.get(a, i, j, k) * b.metric.G[a][el] for a in range(d)),
                start=b.chart.zero()))
        for i, j, k, el in low.indices():
            assert b.R.get(i, j, k, el) == -b.R.get(i, k, j, el)
            assert low.get(i, j, k, el) == -low.get(i, j, el, k)
        for a in range(d):
            for i in range(d):
                for j in range(d):
                    for k in range(d):
                        cyc = (b.R.get(a, i, j, k) + b.R.get(a, j, k, i)
                               + b.R.get(a, k, i, j))
                        assert cyc.is_zero
        for i in range(d):
            for j in range(d):
                assert b.S.get(i, j) == b.S.get(j, i)
        Gt = FrameTensor.build((0, 2), d, lambda i, j: b.metric.G[i][j])
        assert curvature_action(b.R, Gt).is_zero
        f = b.chart.one()
        for n in b.chart.coords:
            f = f * b.chart.parse(n) + b.chart.parse(n) ** 2 + b.chart.one()
        ddf = exterior_derivative_oneform(
            b.chart, [f.diff(n) for n in b.chart.coords])
        assert all(c.is_zero for row in ddf for c in row)

    s7 = get_bundle("sec7")
    deta = twoform_on_frame(s7.frame, exterior_derivative_oneform(
        s7.chart, s7.structure.eta_coord))
    for i in range(3):
        for j in range(3):
            phij = [s7.structure.phi[a][j] for a in range(3)]
            assert deta.get(i, j) == s7.metric.pair_frame(s7.frame.unit(i),
                                                          phij)
    print("criterion 10: PASS (exact property suites over all "
          f"{len(CORPUS)} corpus manifolds)")


def test_c11_determinism_and_runtime(tmp_path):
    outs = []
    elapsed = None
    for run in range(2):
        out = tmp_path / f"run{run}.json"
        t0 = time.perf_counter()
        code = main(["audit", "builtin", "sec7", "--format", "json",
                     "--out", str(out)])
        took = time.perf_counter() - t0
        if elapsed is None:
            elapsed = took
        assert code == 0
        parsed = json.loads(out.read_text())
        parsed.pop("generated_at")
        outs.append(parsed)
    assert outs[0] == outs[1]
    assert elapsed < 10.0
    print(f"criterion 11: PASS (identical reports, audit in "
          f"{elapsed:.2f} s)")
