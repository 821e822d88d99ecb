"""Built-in manifold corpus, shipped as TOML data files."""
from __future__ import annotations

from importlib import resources

try:
    import tomllib
except ModuleNotFoundError:            # Python < 3.11
    import tomli as tomllib

from .manifest import Manifest, ManifestError, manifest_from_dict

_FILES = {
    "sec7": "sec7.toml",
    "flat3": "flat3.toml",
    "sec7-scaled": "sec7_scaled.toml",
    "psasaki": "psasaki.toml",
    "cc-pos": "cc_pos.toml",
    "cc-pseudo": "cc_pseudo.toml",
    "cc-pseudo-quarter": "cc_pseudo_quarter.toml",
    "ricci-recurrent": "ricci_recurrent.toml",
}


def builtin_names() -> list:
    return list(_FILES)


def load_builtin(name: str) -> Manifest:
    if name not in _FILES:
        known = ", ".join(builtin_names())
        raise ManifestError(f"unknown builtin {name!r} (available: {known})")
    blob = (resources.files("parageo") / "data" / _FILES[name]).read_bytes()
    data = tomllib.loads(blob.decode("utf-8"))
    man = manifest_from_dict(data, f"builtin:{name}")
    if man.name != name:
        raise ManifestError(f"builtin {name!r} declares mismatching name "
                            f"{man.name!r}")
    return man


def list_builtins() -> list:
    """(name, description) pairs in a fixed order."""
    return [(name, load_builtin(name).description) for name in _FILES]
