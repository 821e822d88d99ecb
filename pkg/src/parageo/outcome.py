"""Shared result record for exact identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckOutcome:
    """One exact verdict: an identity either holds or fails with witnesses.

    Witnesses are human-readable slot descriptions with residuals; they
    are produced only on failure and capped by the caller.
    """

    name: str
    statement: str
    holds: bool
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)


def slot_name(idx, dim: int, xi_at: int | None = None) -> str:
    """Frame slot label like (e1,e3); index `xi_at` prints as xi."""
    parts = []
    for pos, i in enumerate(idx):
        parts.append("xi" if xi_at is not None and pos == xi_at else f"e{i + 1}")
    return "(" + ",".join(parts) + ")"


def collect_witnesses(pairs, limit: int = 4) -> list:
    """pairs: iterable of (slot label, residual Expr); keeps the first few."""
    out = []
    for label, residual in pairs:
        out.append(f"{label}: residual {residual}")
        if len(out) >= limit:
            break
    return out
