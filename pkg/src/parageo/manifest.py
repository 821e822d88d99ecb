"""Manifest loading: a TOML file describing a chart, a frame, a metric,
and optionally an almost paracontact structure and named vector fields.

The normative example ships as the builtin ``sec7`` data file.  Sections:

    [chart]      coordinates = ["x","y","z"]   n = 1 (optional)
    [frame]      vectors = [["1","z","-2*y"], ...]   (coordinate components)
    [metric]     matrix = [["0","1","0"], ...]       (frame-indexed, symmetric)
    [structure]  phi = d x d matrix (column j = frame components of phi(e_j)),
                 xi = frame components, eta = coordinate-cobasis components
    [fields]     name = coordinate components  (candidates for the
                 torse-forming analyzer)
    [claims]     values claimed for this manifold elsewhere; the auditor
                 cross-checks them and flags disagreements

All entries are expression strings in the engine grammar.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

try:
    import tomllib
except ModuleNotFoundError:            # Python < 3.11
    import tomli as tomllib

from .expr import ExprSyntaxError
from .geometry import Chart, Frame, GeometryError, MetricOnFrame, VectorField
from .paracontact import ParacontactStructure


class ManifestError(Exception):
    """Invalid manifest content; the message carries the offending location."""


@dataclass
class Manifest:
    name: str
    description: str
    chart: Chart
    metric: MetricOnFrame
    structure: ParacontactStructure | None = None
    fields: dict = field(default_factory=dict)    # name -> VectorField
    claims: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.chart.dim


def _require(data: Mapping, key: str, where: str):
    if key not in data:
        raise ManifestError(f"{where}: missing required key {key!r}")
    return data[key]


def _parse_entry(chart: Chart, text, where: str):
    if not isinstance(text, str):
        raise ManifestError(f"{where}: expected an expression string, "
                            f"got {type(text).__name__}")
    try:
        return chart.parse(text)
    except ExprSyntaxError as exc:
        raise ManifestError(f"{where}: {exc}") from exc


def _parse_vector(chart: Chart, items, where: str):
    d = chart.dim
    if not isinstance(items, list) or len(items) != d:
        raise ManifestError(f"{where}: expected a list of {d} expressions")
    return tuple(_parse_entry(chart, items[i], f"{where}[{i}]")
                 for i in range(d))


def _parse_matrix(chart: Chart, items, where: str):
    d = chart.dim
    if not isinstance(items, list) or len(items) != d:
        raise ManifestError(f"{where}: expected a {d}x{d} matrix")
    return tuple(_parse_vector(chart, items[i], f"{where}[{i}]")
                 for i in range(d))


def manifest_from_dict(data: Mapping, label: str) -> Manifest:
    """Build and validate a Manifest from parsed TOML data."""
    chart_tbl = _require(data, "chart", label)
    coords = _require(chart_tbl, "coordinates", f"{label}: [chart]")
    if (not isinstance(coords, list) or not coords
            or not all(isinstance(c, str) for c in coords)):
        raise ManifestError(f"{label}: [chart] coordinates must be a "
                            "nonempty list of names")
    if len(set(coords)) != len(coords):
        raise ManifestError(f"{label}: [chart] duplicate coordinate name")
    n = chart_tbl.get("n")
    if n is not None and (not isinstance(n, int) or n < 1):
        raise ManifestError(f"{label}: [chart] n must be a positive integer")
    try:
        chart = Chart(tuple(coords), n=n)
    except GeometryError as exc:
        raise ManifestError(f"{label}: [chart] {exc}") from exc
    d = chart.dim

    frame_tbl = _require(data, "frame", label)
    vec_rows = _require(frame_tbl, "vectors", f"{label}: [frame]")
    if not isinstance(vec_rows, list) or len(vec_rows) != d:
        raise ManifestError(f"{label}: [frame] vectors must list {d} "
                            "vector fields")
    vectors = tuple(
        VectorField(chart, _parse_vector(chart, vec_rows[i],
                                         f"{label}: [frame] vectors[{i}]"))
        for i in range(d))

    metric_tbl = _require(data, "metric", label)
    G = _parse_matrix(chart, _require(metric_tbl, "matrix",
                                      f"{label}: [metric]"),
                      f"{label}: [metric] matrix")
    for i in range(d):
        for j in range(i + 1, d):
            if G[i][j] != G[j][i]:
                raise ManifestError(f"{label}: [metric] matrix[{i}][{j}] != "
                                    f"matrix[{j}][{i}]: metric must be "
                                    "symmetric")
    try:
        metric = MetricOnFrame(Frame(vectors), G)
    except GeometryError as exc:
        raise ManifestError(f"{label}: {exc}") from exc

    structure = None
    if "structure" in data:
        st = data["structure"]
        phi = _parse_matrix(chart, _require(st, "phi", f"{label}: "
                                            "[structure]"),
                            f"{label}: [structure] phi")
        xi = _parse_vector(chart, _require(st, "xi", f"{label}: "
                                           "[structure]"),
                           f"{label}: [structure] xi")
        eta = _parse_vector(chart, _require(st, "eta", f"{label}: "
                                            "[structure]"),
                            f"{label}: [structure] eta")
        try:
            structure = ParacontactStructure(metric, phi, xi, eta)
        except (GeometryError, ValueError) as exc:
            raise ManifestError(f"{label}: [structure] {exc}") from exc

    fields = {}
    for fname, comps in data.get("fields", {}).items():
        fields[fname] = VectorField(
            chart, _parse_vector(chart, comps, f"{label}: [fields] {fname}"))

    claims = data.get("claims", {})
    if claims and not isinstance(claims, dict):
        raise ManifestError(f"{label}: [claims] must be a table")

    name = data.get("name", "")
    description = data.get("description", "")
    if not isinstance(name, str) or not isinstance(description, str):
        raise ManifestError(f"{label}: name and description must be strings")
    return Manifest(name, description, chart, metric, structure, fields,
                    dict(claims))


def load_manifest(path: str) -> Manifest:
    try:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    except OSError as exc:
        raise ManifestError(f"{path}: {exc}") from exc
    except tomllib.TOMLDecodeError as exc:
        raise ManifestError(f"{path}: TOML parse error: {exc}") from exc
    man = manifest_from_dict(data, path)
    if not man.name:
        man.name = path
    return man
