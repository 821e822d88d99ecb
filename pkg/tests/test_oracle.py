"""Cross-check the frame engine against the coordinate-basis pipeline.

Both the full symbolic tables and exact evaluations at random rational
points must agree; the two computations share no code paths.
"""
import random
from fractions import Fraction

import sympy as sp

from oracle_coord import get_oracle, _sympify
from conftest import get_bundle

POINT_COUNT = 10


def to_sympy(expr, oracle):
    syms = dict(zip(oracle.names, oracle.coords))
    return _sympify(str(expr), syms)


def random_points(chart, seed, count=POINT_COUNT):
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append({name: Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                    for name in chart.coords})
    return pts


def check_symbolic_curvature(name):
    b = get_bundle(name)
    o = get_oracle(name)
    d = b.frame.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                table = o.curvature_frame(i, j, k)
                for a in range(d):
                    diff = to_sympy(b.R.get(a, i, j, k), o) - table[a]
                    assert sp.simplify(diff) == 0


def check_pointwise(name, seed):
    b = get_bundle(name)
    o = get_oracle(name)
    d = b.frame.dim
    for point in random_points(b.chart, seed):
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    table = o.curvature_frame(i, j, k)
                    for a in range(d):
                        assert b.R.get(a, i, j, k).eval(point) == \
                            o.eval_at(table[a], point)
                assert b.S.get(i, j).eval(point) == \
                    o.eval_at(o.ricci_frame(i, j), point)


def test_curvature_matches_oracle_on_sec7():
    check_symbolic_curvature("sec7")


def test_curvature_matches_oracle_on_flat3():
    check_symbolic_curvature("flat3")


def test_ricci_matches_oracle_on_sec7():
    b = get_bundle("sec7")
    o = get_oracle("sec7")
    for i in range(3):
        for j in range(3):
            assert sp.simplify(to_sympy(b.S.get(i, j), o)
                               - o.ricci_frame(i, j)) == 0
            assert sp.simplify(to_sympy(b.S_naive.get(i, j), o)
                               - o.ricci_naive_frame(i, j)) == 0


def test_scalar_curvature_matches_oracle_on_sec7():
    b = get_bundle("sec7")
    o = get_oracle("sec7")
    assert sp.simplify(to_sympy(b.r, o) - o.scalar_curvature()) == 0


def test_pointwise_agreement_on_sec7():
    check_pointwise("sec7", seed=7001)


def test_pointwise_agreement_on_flat3():
    check_pointwise("flat3", seed=7002)
