"""Shared fixtures: each builtin manifest together with everything the
engine derives from it, computed once per session and reused."""
import pytest

from parageo.builtins import load_builtin
from parageo.geometry import (koszul_connection, ricci, ricci_naive_trace,
                              riemann, scalar_curvature)
from parageo.paracontact import classify_nullity, compute_h


class Bundle:
    """One manifest with its connection, curvature and Ricci tensors,
    plus the h tensor and nullity classification when a structure is
    declared."""

    def __init__(self, name):
        self.man = load_builtin(name)
        self.chart = self.man.chart
        self.metric = self.man.metric
        self.frame = self.metric.frame
        self.structure = self.man.structure
        self.conn = koszul_connection(self.metric)
        self.R = riemann(self.conn)
        self.S = ricci(self.metric, self.R)
        self.S_naive = ricci_naive_trace(self.metric, self.R)
        self.r = scalar_curvature(self.metric, self.S)
        self.hres = None
        self.cls = None
        if self.structure is not None:
            self.hres = compute_h(self.structure, self.conn)
            self.cls = classify_nullity(self.structure, self.R, self.hres.h)

    def e(self, text):
        return self.chart.parse(text)

    def vec(self, *texts):
        return tuple(self.chart.parse(t) for t in texts)


_bundles = {}

CORPUS = ("sec7", "flat3", "sec7-scaled", "psasaki", "cc-pos", "cc-pseudo",
          "cc-pseudo-quarter", "ricci-recurrent")


def get_bundle(name):
    if name not in _bundles:
        _bundles[name] = Bundle(name)
    return _bundles[name]


@pytest.fixture(scope="session")
def sec7():
    return get_bundle("sec7")


@pytest.fixture(scope="session")
def flat3():
    return get_bundle("flat3")


@pytest.fixture(scope="session")
def sec7_scaled():
    return get_bundle("sec7-scaled")


@pytest.fixture(scope="session")
def psasaki():
    return get_bundle("psasaki")


@pytest.fixture(scope="session")
def cc_pos():
    return get_bundle("cc-pos")


@pytest.fixture(scope="session")
def cc_pseudo():
    return get_bundle("cc-pseudo")


@pytest.fixture(scope="session")
def cc_quarter():
    return get_bundle("cc-pseudo-quarter")


@pytest.fixture(scope="session")
def ricci_recurrent():
    return get_bundle("ricci-recurrent")


@pytest.fixture(scope="session")
def corpus():
    return [get_bundle(name) for name in CORPUS]
