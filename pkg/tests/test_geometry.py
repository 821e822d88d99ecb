"""Frame geometry: brackets, the Levi-Civita connection, curvature and
the derived traces, checked against hand-computed tables on the builtin
manifests plus structural identities that must hold on every chart."""
import pytest

from parageo.expr import Expr
from parageo.geometry import (Chart, Frame, FrameTensor, GeometryError,
                              MetricOnFrame, VectorField,
                              covariant_derivative_tensor, curvature_action,
                              exterior_derivative_oneform, frame_brackets,
                              koszul_connection, lie_bracket, nabla_frame,
                              twoform_on_frame, wedge_endo)

from conftest import CORPUS, get_bundle


def metric_tensor(metric):
    """The frame metric as a (0,2) FrameTensor."""
    return FrameTensor.build((0, 2), metric.dim,
                             lambda i, j: metric.G[i][j])


def lowered_riemann(b):
    """R_{ijkl} = g(R(e_i,e_j)e_k, e_l)."""
    d = b.metric.dim

    def entry(i, j, k, el):
        acc = b.chart.zero()
        for a in range(d):
            acc = acc + b.R.get(a, i, j, k) * b.metric.G[a][el]
        return acc

    return FrameTensor.build((0, 4), d, entry)


# -- charts and frames ---------------------------------------------------------

def test_chart_rejects_duplicate_coordinates():
    with pytest.raises(GeometryError):
        Chart(("x", "y", "x"))


def test_chart_rejects_empty():
    with pytest.raises(GeometryError):
        Chart(())


def test_chart_rejects_inconsistent_contact_rank():
    with pytest.raises(GeometryError):
        Chart(("x", "y", "z"), n=2)


def test_contact_rank():
    assert Chart(("x", "y", "z")).contact_rank() == 1
    assert Chart(("x", "y", "z"), n=1).contact_rank() == 1
    with pytest.raises(GeometryError):
        Chart(("x", "y")).contact_rank()


def test_frame_rejects_singular_matrix():
    chart = Chart(("x", "y", "z"))
    dx = VectorField(chart, (chart.one(), chart.zero(), chart.zero()))
    dz = VectorField(chart, (chart.zero(), chart.zero(), chart.one()))
    with pytest.raises(GeometryError):
        Frame([dx, dx, dz])


def test_frame_determinant(sec7):
    assert sec7.frame.det == sec7.chart.one()


def test_to_frame_of_coordinate_vector(sec7):
    chart = sec7.chart
    dx = VectorField(chart, (chart.one(), chart.zero(), chart.zero()))
    assert sec7.frame.to_frame(dx) == sec7.vec("1", "-z", "2*y")


def test_to_frame_round_trip(sec7):
    comps = sec7.vec("x", "y - 1", "z^2")
    back = sec7.frame.to_frame(sec7.frame.from_frame(comps))
    assert back == comps


def test_to_frame_of_frame_vectors(sec7):
    for i in range(3):
        assert sec7.frame.to_frame(sec7.frame.vectors[i]) == sec7.frame.unit(i)


def test_to_frame_of_zero(sec7):
    zero = VectorField(sec7.chart, (sec7.chart.zero(),) * 3)
    assert all(c.is_zero for c in sec7.frame.to_frame(zero))


# -- Lie brackets --------------------------------------------------------------

def test_bracket_table(sec7):
    br = frame_brackets(sec7.frame)
    assert br[0][1] == sec7.vec("0", "0", "2")
    assert br[0][2] == sec7.vec("0", "-1", "0")
    assert br[1][2] == sec7.vec("0", "0", "0")


def test_bracket_antisymmetry(corpus):
    for b in corpus:
        br = frame_brackets(b.frame)
        d = b.frame.dim
        for i in range(d):
            assert all(c.is_zero for c in br[i][i])
            for j in range(d):
                assert br[i][j] == tuple(-c for c in br[j][i])


def test_bracket_of_coordinate_fields_vanishes(flat3):
    chart = flat3.chart
    for i in range(3):
        for j in range(3):
            X = VectorField(chart, flat3.frame.unit(i))
            Y = VectorField(chart, flat3.frame.unit(j))
            assert lie_bracket(X, Y).is_zero


# -- the Levi-Civita connection ------------------------------------------------

def test_koszul_table(sec7):
    expected = {
        (0, 0): ("0", "0", "1"),
        (0, 1): ("0", "0", "1"),
        (0, 2): ("-1", "-1", "0"),
        (1, 0): ("0", "0", "-1"),
        (1, 1): ("0", "0", "0"),
        (1, 2): ("0", "1", "0"),
        (2, 0): ("-1", "0", "0"),
        (2, 1): ("0", "1", "0"),
        (2, 2): ("0", "0", "0"),
    }
    for (i, j), comps in expected.items():
        assert sec7.conn.Gamma[i][j] == sec7.vec(*comps)


def test_flat_connection_vanishes(flat3):
    for i in range(3):
        for j in range(3):
            assert all(c.is_zero for c in flat3.conn.Gamma[i][j])


def test_connection_is_torsion_free(corpus):
    for b in corpus:
        br = frame_brackets(b.frame)
        d = b.frame.dim
        for i in range(d):
            for j in range(d):
                for a in range(d):
                    t = (b.conn.Gamma[i][j][a] - b.conn.Gamma[j][i][a]
                         - br[i][j][a])
                    assert t.is_zero


def test_metric_is_parallel(corpus):
    for b in corpus:
        nabla_g = covariant_derivative_tensor(b.conn, metric_tensor(b.metric))
        assert nabla_g.is_zero


def test_nabla_is_a_derivation(sec7):
    # nabla_{e1}(y e2) = e1(y) e2 + y nabla_{e1} e2 = z e2 + y e3
    yf = sec7.vec("0", "y", "0")
    assert nabla_frame(sec7.conn, sec7.frame.unit(0), yf) == \
        sec7.vec("0", "z", "y")


def test_covariant_derivative_of_reeb_form(sec7):
    eta = FrameTensor((0, 1), 3, tuple(sec7.structure.eta))
    nabla_eta = covariant_derivative_tensor(sec7.conn, eta)
    assert nabla_eta.get(2, 0).is_zero


def test_flat_derivative_of_constant_tensor_vanishes(flat3):
    chart = flat3.chart
    T = FrameTensor.build((0, 2), 3,
                          lambda i, j: chart.const(2 * i - 3 * j))
    assert covariant_derivative_tensor(flat3.conn, T).is_zero


def test_covariant_derivative_rejects_mixed_valence(sec7):
    with pytest.raises(GeometryError):
        covariant_derivative_tensor(sec7.conn, sec7.R)


# -- curvature -----------------------------------------------------------------

def test_curvature_table(sec7):
    R = sec7.R
    expected = {
        (0, 1, 0): ("3", "0", "0"),
        (0, 1, 1): ("0", "-3", "0"),
        (0, 1, 2): ("0", "0", "0"),
        (1, 2, 0): ("0", "0", "1"),
        (1, 2, 1): ("0", "0", "0"),
        (1, 2, 2): ("0", "-1", "0"),
        (0, 2, 0): ("0", "0", "-2"),
        (0, 2, 1): ("0", "0", "1"),
        (0, 2, 2): ("-1", "2", "0"),
    }
    for (i, j, k), comps in expected.items():
        got = tuple(R.get(a, i, j, k) for a in range(3))
        assert got == sec7.vec(*comps)


def test_flat_curvature_vanishes(flat3):
    assert flat3.R.is_zero


def test_curvature_antisymmetry_in_the_pair(corpus):
    for b in corpus:
        d = b.frame.dim
        for a in range(d):
            for i in range(d):
                for j in range(d):
                    for k in range(d):
                        assert b.R.get(a, i, j, k) == -b.R.get(a, j, i, k)


def test_curvature_antisymmetry_in_the_values(corpus):
    for b in corpus:
        low = lowered_riemann(b)
        d = b.frame.dim
        for idx in low.indices():
            i, j, k, el = idx
            assert low.get(i, j, k, el) == -low.get(i, j, el, k)


def test_curvature_pair_symmetry(corpus):
    for b in corpus:
        low = lowered_riemann(b)
        for i, j, k, el in low.indices():
            assert low.get(i, j, k, el) == low.get(k, el, i, j)


def test_first_bianchi_identity(corpus):
    for b in corpus:
        d = b.frame.dim
        for a in range(d):
            for i in range(d):
                for j in range(d):
                    for k in range(d):
                        cyc = (b.R.get(a, i, j, k) + b.R.get(a, j, k, i)
                               + b.R.get(a, k, i, j))
                        assert cyc.is_zero


def test_curvature_kills_the_metric(corpus):
    for b in corpus:
        acted = curvature_action(b.R, metric_tensor(b.metric))
        assert acted.is_zero


def test_flat_curvature_action_is_trivial(flat3):
    T = FrameTensor.build((1, 1), 3,
                          lambda a, j: flat3.e("x") if a == j else
                          flat3.e("y*z"))
    assert curvature_action(flat3.R, T).is_zero


def test_second_derivative_commutator_is_curvature_action(sec7):
    # for a 1-form: (nabla^2 omega)(X,Y;.) - (nabla^2 omega)(Y,X;.)
    # equals the curvature action of R(X,Y) on omega
    omega = FrameTensor((0, 1), 3, sec7.vec("y^2", "x*z", "1 + x^2"))
    first = covariant_derivative_tensor(sec7.conn, omega)
    second = covariant_derivative_tensor(sec7.conn, first)
    action = curvature_action(sec7.R, omega)
    for m in range(3):
        for i in range(3):
            for j in range(3):
                comm = second.get(m, i, j) - second.get(i, m, j)
                assert comm == action.get(m, i, j)


# -- Ricci and scalar curvature -------------------------------------------------

def test_ricci_table(sec7):
    expected = (("2", "2", "0"), ("2", "0", "0"), ("0", "0", "-2"))
    for i in range(3):
        for j in range(3):
            assert sec7.S.get(i, j) == sec7.e(expected[i][j])


def test_ricci_naive_trace_table(sec7):
    expected = (("-1", "-1", "0"), ("-1", "-3", "0"), ("0", "0", "2"))
    for i in range(3):
        for j in range(3):
            assert sec7.S_naive.get(i, j) == sec7.e(expected[i][j])


def test_ricci_is_symmetric(corpus):
    for b in corpus:
        d = b.frame.dim
        for i in range(d):
            for j in range(d):
                assert b.S.get(i, j) == b.S.get(j, i)


def test_flat_ricci_vanishes(flat3):
    assert flat3.S.is_zero
    assert flat3.S_naive.is_zero


def test_scalar_curvature_values(sec7, flat3, sec7_scaled):
    assert sec7.r == sec7.e("2")
    assert flat3.r.is_zero
    assert sec7_scaled.r == sec7_scaled.e("1")


# -- wedge endomorphisms ---------------------------------------------------------

def test_wedge_of_a_vector_with_itself_vanishes(sec7):
    xf = sec7.vec("x", "1", "y")
    W = wedge_endo(sec7.metric.G, xf, xf)
    assert all(c.is_zero for row in W for c in row)


def test_wedge_table_entry(sec7):
    # (e3 wedge_g e1) e3 = g(e1,e3) e3 - g(e3,e3) e1 = -e1
    W = wedge_endo(sec7.metric.G, sec7.frame.unit(2), sec7.frame.unit(0))
    col = tuple(W[a][2] for a in range(3))
    assert col == sec7.vec("-1", "0", "0")


def test_wedge_on_the_flat_chart(flat3):
    W = wedge_endo(flat3.metric.G, flat3.frame.unit(0), flat3.frame.unit(1))
    col = tuple(W[a][1] for a in range(3))
    assert col == flat3.vec("1", "0", "0")


# -- exterior derivative ---------------------------------------------------------

def test_contact_form_derivative(sec7):
    dd = exterior_derivative_oneform(sec7.chart, sec7.structure.eta_coord)
    on_frame = twoform_on_frame(sec7.frame, dd)
    assert on_frame.get(0, 1) == sec7.e("-1")
    # and d(eta)(X,Y) = g(X, phi Y) across the whole frame
    for i in range(3):
        for j in range(3):
            phij = [sec7.structure.phi[a][j] for a in range(3)]
            assert on_frame.get(i, j) == \
                sec7.metric.pair_frame(sec7.frame.unit(i), phij)


def test_exterior_derivative_antisymmetry(sec7):
    omega = sec7.vec("x*y", "z^2", "x + y")
    dd = exterior_derivative_oneform(sec7.chart, omega)
    for a in range(3):
        for b in range(3):
            assert dd[a][b] == -dd[b][a]


def test_exterior_derivative_of_exact_forms(corpus):
    for b in corpus:
        coords = b.chart.coords
        f = b.chart.one()
        for name in coords:
            f = f * (Expr.var(coords, name) + b.chart.one())
        for name in coords:
            f = f + Expr.var(coords, name) ** 2
        df = [f.diff(name) for name in coords]
        ddf = exterior_derivative_oneform(b.chart, df)
        assert all(c.is_zero for row in ddf for c in row)
