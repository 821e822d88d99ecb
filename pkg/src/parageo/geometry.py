"""Frame-based pseudo-Riemannian geometry with exact scalar entries.

Everything is computed on a moving frame e_1..e_d given by coordinate
components, with the metric supplied as the matrix g(e_i, e_j).  The
frame need not be orthonormal and the metric may be indefinite; the only
requirements are an invertible frame matrix and det g != 0 (checked
exactly, as identical-zero tests on the determinants).

Conventions, fixed once for the whole package:

  * [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i
  * Koszul: 2 g(nabla_X Y, Z) = X g(Y,Z) + Y g(X,Z) - Z g(X,Y)
      + g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X)
  * curvature R(X,Y) = nabla_X nabla_Y - nabla_Y nabla_X - nabla_[X,Y]
  * Ricci S(Y,Z) = sum_{i,j} g^{ij} g(R(e_i,Y)Z, e_j), contracting the
    first lower slot with the true inverse metric.  ricci_naive_trace
    is the orthonormal-style sum_i g(R(e_i,Y)Z, e_i), kept around only
    for comparison against published component tables.
  * one-form derivative d(omega)(X,Y) = (X(omega Y) - Y(omega X)
      - omega([X,Y])) / 2
  * new covariant slots (differentiation slot, curvature-action pair)
    are indexed first.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Iterator, Sequence

from .expr import Expr, ExprDomainError, parse_expr
from .linalg import mat_adjugate, mat_det


class GeometryError(Exception):
    """Raised for degenerate frames/metrics and valence misuse."""


@dataclass(frozen=True)
class Chart:
    """Coordinate chart: ordered coordinate names, optional contact rank n."""

    coords: tuple
    n: int | None = None

    def __post_init__(self):
        if len(set(self.coords)) != len(self.coords):
            raise GeometryError("duplicate coordinate names")
        if not self.coords:
            raise GeometryError("empty chart")
        if self.n is not None and len(self.coords) != 2 * self.n + 1:
            raise GeometryError(
                f"chart has {len(self.coords)} coordinates, "
                f"inconsistent with n={self.n}")

    @property
    def dim(self) -> int:
        return len(self.coords)

    def contact_rank(self) -> int:
        """n with dim = 2n + 1; errors on even-dimensional charts."""
        if self.n is not None:
            return self.n
        if self.dim % 2 == 0:
            raise GeometryError("contact rank needs an odd-dimensional chart")
        return (self.dim - 1) // 2

    def zero(self) -> Expr:
        return Expr.zero(self.coords)

    def one(self) -> Expr:
        return Expr.one(self.coords)

    def const(self, v) -> Expr:
        return Expr.const(self.coords, v)

    def parse(self, text: str) -> Expr:
        return parse_expr(text, self.coords)


@dataclass(frozen=True)
class VectorField:
    """Vector field in coordinate components."""

    chart: Chart
    comps: tuple

    def __post_init__(self):
        if len(self.comps) != self.chart.dim:
            raise GeometryError("component count does not match chart")

    def apply(self, f: Expr) -> Expr:
        """Directional derivative X(f)."""
        acc = self.chart.zero()
        for comp, name in zip(self.comps, self.chart.coords):
            acc = acc + comp * f.diff(name)
        return acc

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.chart, tuple(a + b for a, b
                                             in zip(self.comps, other.comps)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.chart, tuple(a - b for a, b
                                             in zip(self.comps, other.comps)))

    def scale(self, c: Expr) -> "VectorField":
        return VectorField(self.chart, tuple(c * a for a in self.comps))

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.comps)


def lie_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """[X,Y]^i = X^j d_j Y^i - Y^j d_j X^i."""
    chart = X.chart
    comps = []
    for i in range(chart.dim):
        comps.append(X.apply(Y.comps[i]) - Y.apply(X.comps[i]))
    return VectorField(chart, tuple(comps))


class Frame:
    """Moving frame: d vector fields with an exactly invertible matrix."""

    def __init__(self, vectors: Sequence[VectorField]):
        self.chart = vectors[0].chart
        d = self.chart.dim
        if len(vectors) != d:
            raise GeometryError("frame must have dim-many vectors")
        self.vectors = tuple(vectors)
        self.matrix = [list(v.comps) for v in self.vectors]  # rows = frame vectors
        self.det = mat_det(self.matrix)
        if self.det.is_zero:
            raise GeometryError("frame matrix is identically singular")
        self._adj = mat_adjugate(self.matrix)

    @property
    def dim(self) -> int:
        return self.chart.dim

    def apply(self, i: int, f: Expr) -> Expr:
        """e_i acting on a scalar."""
        return self.vectors[i].apply(f)

    def to_frame(self, X: VectorField) -> tuple:
        """Frame components c with sum_i c_i e_i = X (exact, may be rational)."""
        d = self.dim
        out = []
        for j in range(d):
            acc = self.chart.zero()
            for a in range(d):
                acc = acc + X.comps[a] * self._adj[a][j]
            out.append(acc / self.det)
        return tuple(out)

    def from_frame(self, comps: Sequence[Expr]) -> VectorField:
        d = self.dim
        out = []
        for a in range(d):
            acc = self.chart.zero()
            for i in range(d):
                acc = acc + comps[i] * self.matrix[i][a]
            out.append(acc)
        return VectorField(self.chart, tuple(out))

    def unit(self, i: int) -> tuple:
        """Frame components of e_i itself."""
        return tuple(self.chart.one() if j == i else self.chart.zero()
                     for j in range(self.dim))

    def oneform_on_frame(self, omega_coord: Sequence[Expr]) -> tuple:
        """Evaluate a coordinate-cobasis 1-form on each frame vector."""
        out = []
        for i in range(self.dim):
            acc = self.chart.zero()
            for a in range(self.dim):
                acc = acc + self.matrix[i][a] * omega_coord[a]
            out.append(acc)
        return tuple(out)


class MetricOnFrame:
    """Pseudo-Riemannian metric given by its frame matrix g(e_i, e_j)."""

    def __init__(self, frame: Frame, G: Sequence[Sequence[Expr]]):
        self.frame = frame
        self.chart = frame.chart
        d = frame.dim
        if len(G) != d or any(len(row) != d for row in G):
            raise GeometryError("metric matrix shape mismatch")
        for i in range(d):
            for j in range(i + 1, d):
                if not (G[i][j] - G[j][i]).is_zero:
                    raise GeometryError(
                        f"metric is not symmetric at ({i + 1},{j + 1})")
        self.G = [list(row) for row in G]
        self.det = mat_det(self.G)
        if self.det.is_zero:
            raise GeometryError("metric is identically degenerate")
        adj = mat_adjugate(self.G)
        self.Ginv = [[adj[i][j] / self.det for j in range(d)] for i in range(d)]

    @property
    def dim(self) -> int:
        return self.frame.dim

    def pair_frame(self, u: Sequence[Expr], v: Sequence[Expr]) -> Expr:
        """g(U, V) for U, V in frame components."""
        acc = self.chart.zero()
        for a in range(self.dim):
            if u[a].is_zero:
                continue
            for b in range(self.dim):
                acc = acc + u[a] * v[b] * self.G[a][b]
        return acc

    def pair_fields(self, X: VectorField, Y: VectorField) -> Expr:
        return self.pair_frame(self.frame.to_frame(X), self.frame.to_frame(Y))

    def lower(self, v: Sequence[Expr]) -> tuple:
        """1-form on the frame: (g-dual of v)(e_i) = g(v, e_i)."""
        return tuple(self.pair_frame(v, self.frame.unit(i))
                     for i in range(self.dim))

    def raise_form(self, omega_frame: Sequence[Expr]) -> tuple:
        """Frame components of the vector g-dual to a frame 1-form."""
        d = self.dim
        return tuple(
            sum((self.Ginv[i][j] * omega_frame[j] for j in range(d)),
                start=self.chart.zero())
            for i in range(d))


@dataclass(frozen=True)
class FrameTensor:
    """Dense frame-component tensor of valence (r, s) with r in {0, 1}.

    Index order: the contravariant index (if any) first, then covariant
    slots left to right.
    """

    valence: tuple
    dim: int
    comps: tuple

    def __post_init__(self):
        r, s = self.valence
        if r not in (0, 1):
            raise GeometryError("only valences (0,s) and (1,s) are supported")
        if len(self.comps) != self.dim ** (r + s):
            raise GeometryError("component count mismatch")

    @staticmethod
    def build(valence: tuple, dim: int, fn: Callable[..., Expr]) -> "FrameTensor":
        r, s = valence
        comps = tuple(fn(*idx) for idx in iproduct(range(dim), repeat=r + s))
        return FrameTensor(valence, dim, comps)

    def get(self, *idx: int) -> Expr:
        r, s = self.valence
        assert len(idx) == r + s
        flat = 0
        for i in idx:
            flat = flat * self.dim + i
        return self.comps[flat]

    def indices(self) -> Iterator[tuple]:
        r, s = self.valence
        return iproduct(range(self.dim), repeat=r + s)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.comps)

    def nonzero_slots(self, limit: int | None = None) -> list:
        out = []
        for idx in self.indices():
            if not self.get(*idx).is_zero:
                out.append(idx)
                if limit is not None and len(out) >= limit:
                    break
        return out


class Connection:
    """Affine connection on the frame: Gamma[i][j] = frame comps of nabla_{e_i} e_j."""

    def __init__(self, metric: MetricOnFrame, Gamma):
        self.metric = metric
        self.frame = metric.frame
        self.chart = metric.chart
        self.Gamma = Gamma

    @property
    def dim(self) -> int:
        return self.frame.dim


def frame_brackets(frame: Frame):
    """Frame components of [e_i, e_j] for all pairs."""
    d = frame.dim
    out = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            if j < i:
                out[i][j] = tuple(-c for c in out[j][i])
            elif i == j:
                out[i][j] = tuple(frame.chart.zero() for _ in range(d))
            else:
                out[i][j] = frame.to_frame(
                    lie_bracket(frame.vectors[i], frame.vectors[j]))
    return out


def koszul_connection(metric: MetricOnFrame) -> Connection:
    """Levi-Civita connection of the frame metric via the Koszul formula."""
    frame = metric.frame
    d = frame.dim
    br = frame_brackets(frame)

    def pair_unit(u, k):
        acc = metric.chart.zero()
        for a in range(d):
            acc = acc + u[a] * metric.G[a][k]
        return acc

    K = [[[None] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                K[i][j][k] = (frame.apply(i, metric.G[j][k])
                              + frame.apply(j, metric.G[i][k])
                              - frame.apply(k, metric.G[i][j])
                              + pair_unit(br[i][j], k)
                              - pair_unit(br[i][k], j)
                              - pair_unit(br[j][k], i))
    half = metric.chart.const(1) / metric.chart.const(2)
    Gamma = []
    for i in range(d):
        row = []
        for j in range(d):
            comps = []
            for a in range(d):
                acc = metric.chart.zero()
                for k in range(d):
                    acc = acc + metric.Ginv[a][k] * K[i][j][k]
                comps.append(half * acc)
            row.append(tuple(comps))
        Gamma.append(row)
    return Connection(metric, Gamma)


def nabla_frame(conn: Connection, xf: Sequence[Expr], yf: Sequence[Expr]) -> tuple:
    """Frame components of nabla_X Y, both arguments in frame components."""
    d = conn.dim
    frame = conn.frame
    out = []
    for k in range(d):
        acc = conn.chart.zero()
        for i in range(d):
            if xf[i].is_zero:
                continue
            acc = acc + xf[i] * frame.apply(i, yf[k])
            for j in range(d):
                if yf[j].is_zero:
                    continue
                acc = acc + xf[i] * yf[j] * conn.Gamma[i][j][k]
        out.append(acc)
    return tuple(out)


def nabla_vector(conn: Connection, X: VectorField, Y: VectorField) -> VectorField:
    """nabla_X Y for coordinate vector fields, returned in coordinates."""
    frame = conn.frame
    comps = nabla_frame(conn, frame.to_frame(X), frame.to_frame(Y))
    return frame.from_frame(comps)


def covariant_derivative_tensor(conn: Connection, T: FrameTensor) -> FrameTensor:
    """(nabla T) for a (0,s) tensor; the differentiation slot is indexed first."""
    r, s = T.valence
    if r != 0:
        raise GeometryError("covariant_derivative_tensor expects a (0,s) tensor")
    d = T.dim
    frame = conn.frame

    def entry(*idx):
        i, slots = idx[0], idx[1:]
        acc = frame.apply(i, T.get(*slots))
        for m in range(s):
            for a in range(d):
                gam = conn.Gamma[i][slots[m]][a]
                if gam.is_zero:
                    continue
                replaced = slots[:m] + (a,) + slots[m + 1:]
                acc = acc - gam * T.get(*replaced)
        return acc

    return FrameTensor.build((0, s + 1), d, entry)


def riemann(conn: Connection) -> FrameTensor:
    """Curvature (1,3) tensor: get(a,i,j,k) is the e_a component of R(e_i,e_j)e_k."""
    d = conn.dim
    frame = conn.frame
    br = frame_brackets(frame)
    # nabla_{e_i}(nabla_{e_j} e_k) in frame components
    second = [[[None] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                second[i][j][k] = nabla_frame(conn, frame.unit(i),
                                              conn.Gamma[j][k])
    comps = []
    for a in range(d):
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    acc = second[i][j][k][a] - second[j][i][k][a]
                    for m in range(d):
                        c = br[i][j][m]
                        if not c.is_zero:
                            acc = acc - c * conn.Gamma[m][k][a]
                    comps.append(acc)
    return FrameTensor((1, 3), d, tuple(comps))


def ricci(metric: MetricOnFrame, R: FrameTensor) -> FrameTensor:
    """S(Y,Z) = sum_{i,j} g^{ij} g(R(e_i,Y)Z, e_j) with the true inverse metric."""
    d = metric.dim

    def entry(y, z):
        acc = metric.chart.zero()
        for i in range(d):
            for j in range(d):
                if metric.Ginv[i][j].is_zero:
                    continue
                inner = metric.chart.zero()
                for a in range(d):
                    inner = inner + R.get(a, i, y, z) * metric.G[a][j]
                acc = acc + metric.Ginv[i][j] * inner
        return acc

    return FrameTensor.build((0, 2), d, entry)


def ricci_naive_trace(metric: MetricOnFrame, R: FrameTensor) -> FrameTensor:
    """sum_i g(R(e_i,Y)Z, e_i): the orthonormal-style trace taken verbatim
    on a frame that need not be orthonormal.  Reported for comparison only."""
    d = metric.dim

    def entry(y, z):
        acc = metric.chart.zero()
        for i in range(d):
            for a in range(d):
                acc = acc + R.get(a, i, y, z) * metric.G[a][i]
        return acc

    return FrameTensor.build((0, 2), d, entry)


def scalar_curvature(metric: MetricOnFrame, S: FrameTensor) -> Expr:
    d = metric.dim
    acc = metric.chart.zero()
    for i in range(d):
        for j in range(d):
            acc = acc + metric.Ginv[i][j] * S.get(i, j)
    return acc


def derivation_action(endo, T: FrameTensor) -> FrameTensor:
    """Action of an endomorphism A (matrix endo[out][in]) as a derivation:
    plus through the contravariant slot, minus through each covariant slot."""
    r, s = T.valence
    d = T.dim
    zero = T.comps[0].coords
    zero_e = Expr.zero(zero)

    def entry(*idx):
        acc = zero_e
        if r == 1:
            out, covs = idx[0], idx[1:]
            for p in range(d):
                if not endo[out][p].is_zero:
                    acc = acc + endo[out][p] * T.get(p, *covs)
        else:
            covs = idx
        for m in range(s):
            for p in range(d):
                a = endo[p][covs[m]]
                if a.is_zero:
                    continue
                replaced = covs[:m] + (p,) + covs[m + 1:]
                if r == 1:
                    acc = acc - a * T.get(idx[0], *replaced)
                else:
                    acc = acc - a * T.get(*replaced)
        return acc

    return FrameTensor.build((r, s), d, entry)


def curvature_endo(R: FrameTensor, i: int, j: int):
    """R(e_i, e_j) as an endomorphism matrix [out][in]."""
    d = R.dim
    return [[R.get(a, i, j, k) for k in range(d)] for a in range(d)]


def curvature_action(R: FrameTensor, T: FrameTensor) -> FrameTensor:
    """(R . T): two extra covariant slots (the curvature pair) indexed first."""
    r, s = T.valence
    if r not in (0, 1):
        raise GeometryError("curvature_action: unsupported valence")
    d = T.dim
    acted = [[derivation_action(curvature_endo(R, i, j), T)
              for j in range(d)] for i in range(d)]

    def entry(*idx):
        if r == 1:
            out, i, j, rest = idx[0], idx[1], idx[2], idx[3:]
            return acted[i][j].get(out, *rest)
        i, j, rest = idx[0], idx[1], idx[2:]
        return acted[i][j].get(*rest)

    return FrameTensor.build((r, s + 2), d, entry)


def wedge_endo(B, xf: Sequence[Expr], yf: Sequence[Expr]):
    """(X wedge_B Y)Z = B(Y,Z) X - B(X,Z) Y for a bilinear form matrix B."""
    d = len(xf)
    coords = xf[0].coords
    bx = [sum((xf[a] * B[a][i] for a in range(d)), start=Expr.zero(coords))
          for i in range(d)]
    by = [sum((yf[a] * B[a][i] for a in range(d)), start=Expr.zero(coords))
          for i in range(d)]
    return [[by[i] * xf[o] - bx[i] * yf[o] for i in range(d)] for o in range(d)]


def exterior_derivative_oneform(chart: Chart, omega: Sequence[Expr]):
    """Coordinate components of d(omega) with the 1/2 convention:
    (d omega)(X,Y) = (X(omega Y) - Y(omega X) - omega([X,Y])) / 2."""
    d = chart.dim
    half = chart.const(1) / chart.const(2)
    out = [[chart.zero()] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            out[a][b] = half * (omega[b].diff(chart.coords[a])
                                - omega[a].diff(chart.coords[b]))
    return out


def twoform_on_frame(frame: Frame, twoform_coord) -> FrameTensor:
    """Evaluate a coordinate (0,2) tensor on frame pairs."""
    d = frame.dim

    def entry(i, j):
        acc = frame.chart.zero()
        for a in range(d):
            for b in range(d):
                if twoform_coord[a][b].is_zero:
                    continue
                acc = acc + frame.matrix[i][a] * frame.matrix[j][b] \
                    * twoform_coord[a][b]
        return acc

    return FrameTensor.build((0, 2), d, entry)
