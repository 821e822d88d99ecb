"""Independent coordinate-basis curvature pipeline used to cross-check
the frame engine.

The engine never leaves the moving frame.  This oracle goes the other
way: convert the frame metric to the coordinate basis, take Christoffel
symbols there, assemble the coordinate Riemann tensor, and convert back
to frame components only at the very end.  All algebra is done by sympy
with exact rationals, so the two pipelines share no code and agreement
between them is a real check.
"""
from fractions import Fraction

import sympy as sp


def _sympify(text, syms):
    return sp.sympify(str(text).replace("^", "**"), locals=syms, rational=True)


_oracles = {}


def get_oracle(name):
    """Session-cached oracle for a builtin manifest."""
    if name not in _oracles:
        from parageo.builtins import load_builtin
        _oracles[name] = CoordOracle.from_manifest(load_builtin(name))
    return _oracles[name]


class CoordOracle:
    """Coordinate-basis Levi-Civita data for a frame-presented metric."""

    def __init__(self, coord_names, frame_rows, metric_rows):
        self.names = tuple(coord_names)
        self.coords = sp.symbols(self.names)
        syms = dict(zip(self.names, self.coords))
        d = len(self.names)
        self.d = d
        self.M = sp.Matrix([[_sympify(c, syms) for c in row]
                            for row in frame_rows])
        self.G = sp.Matrix([[_sympify(c, syms) for c in row]
                            for row in metric_rows])
        Minv = self.M.inv()
        self.Minv = Minv
        # rows of M are the frame vectors, so g_coord = Minv G Minv^T
        self.g = sp.simplify(Minv * self.G * Minv.T)
        ginv = self.g.inv()
        self.Gamma = [[[sp.simplify(sp.Rational(1, 2) * sum(
            ginv[c, m] * (sp.diff(self.g[a, m], self.coords[b])
                          + sp.diff(self.g[b, m], self.coords[a])
                          - sp.diff(self.g[a, b], self.coords[m]))
            for m in range(d)))
            for c in range(d)] for b in range(d)] for a in range(d)]
        # R(d_a, d_b) d_c = Riem[a][b][c][e] d_e
        self.Riem = [[[[sp.simplify(
            sp.diff(self.Gamma[b][c][e], self.coords[a])
            - sp.diff(self.Gamma[a][c][e], self.coords[b])
            + sum(self.Gamma[b][c][f] * self.Gamma[a][f][e]
                  - self.Gamma[a][c][f] * self.Gamma[b][f][e]
                  for f in range(d)))
            for e in range(d)] for c in range(d)]
            for b in range(d)] for a in range(d)]
        self._table = {}

    @classmethod
    def from_manifest(cls, man):
        frame_rows = [[str(c) for c in v.comps]
                      for v in man.metric.frame.vectors]
        metric_rows = [[str(c) for c in row] for row in man.metric.G]
        return cls(man.chart.coords, frame_rows, metric_rows)

    def curvature_frame(self, i, j, k):
        """Frame components of R(e_i, e_j)e_k, as sympy expressions."""
        key = (i, j, k)
        if key in self._table:
            return self._table[key]
        d = self.d
        v = [sp.simplify(sum(
            self.Riem[a][b][c][e] * self.M[i, a] * self.M[j, b] * self.M[k, c]
            for a in range(d) for b in range(d) for c in range(d)))
            for e in range(d)]
        out = [sp.simplify(sum(v[a] * self.Minv[a, p] for a in range(d)))
               for p in range(d)]
        self._table[key] = out
        return out

    def ricci_frame(self, i, j):
        """S(e_i, e_j) with the inverse-metric trace (true trace of
        X -> R(X, e_i)e_j, which is the m-th frame component summed)."""
        return sp.simplify(sum(self.curvature_frame(m, i, j)[m]
                               for m in range(self.d)))

    def ricci_naive_frame(self, i, j):
        """sum_m g(R(e_m, e_i)e_j, e_m), the plain frame trace."""
        d = self.d
        return sp.simplify(sum(
            self.curvature_frame(m, i, j)[a] * self.G[a, m]
            for m in range(d) for a in range(d)))

    def scalar_curvature(self):
        d = self.d
        Ginv = self.G.inv()
        return sp.simplify(sum(Ginv[i, j] * self.ricci_frame(i, j)
                               for i in range(d) for j in range(d)))

    def eval_at(self, expr, point):
        """Exact rational evaluation; point maps coordinate name -> Fraction."""
        subs = {self.coords[i]: sp.Rational(point[name].numerator,
                                            point[name].denominator)
                for i, name in enumerate(self.names)}
        val = sp.nsimplify(expr.subs(subs))
        assert val.is_Rational
        return Fraction(int(val.p), int(val.q))
