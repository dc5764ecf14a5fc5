"""Survivability and interconnection-latency metrics for a rack placement.

Survivability is the smallest fraction of racks left in gateway-reachable
components after any single SRG failure; latency is the largest
shortest-path delay between two active sites. Both are evaluated directly
from the precomputed matrices, independently of the optimizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exceptions import ValidationError
from .topology import DelayMatrix

# tolerance for objective-value ties; survivability itself is exact
OBJ_TOL = 1e-9


@dataclass(frozen=True)
class Placement:
    """Rack counts per site."""

    x: tuple[int, ...]

    def __post_init__(self):
        if any(v < 0 for v in self.x):
            raise ValidationError("rack counts must be non-negative")

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.x) if v > 0)

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else 0 for v in self.x)

    @property
    def total(self) -> int:
        return sum(self.x)


@dataclass
class MetricReport:
    survivability: float
    survivability_exact: Fraction
    latency_ms: float
    normalized_latency: float
    worst_srg: int | None
    worst_pair: tuple[int, int] | None


def survivability(p: Placement, m: np.ndarray, racks: int) -> tuple[Fraction, int | None]:
    """Worst-case surviving rack fraction and the SRG attaining it.

    Exact rational value; an empty catalog means no failure can occur and
    yields 1. Ties resolve to the smallest SRG id.
    """
    if racks <= 0:
        raise ValidationError(f"total racks must be positive, got {racks}")
    if m.shape[0] == 0:
        return Fraction(1), None
    if m.shape[1] != len(p.x):
        raise ValidationError("placement size does not match accessibility matrix")
    surviving = m @ np.asarray(p.x, dtype=np.int64)
    worst = int(np.argmin(surviving))
    return Fraction(int(surviving[worst]), racks), worst


def latency(p: Placement, d: DelayMatrix) -> tuple[float, tuple[int, int] | None]:
    """Maximum pairwise delay among active sites, with the attaining pair.

    A single active site has latency 0. Ties resolve to the
    lexicographically smallest pair.
    """
    act = p.active
    if not act:
        raise ValidationError("placement has no active site")
    if len(p.x) != d.delays.shape[0]:
        raise ValidationError("placement size does not match delay matrix")
    best = 0.0
    pair: tuple[int, int] | None = None
    for a_pos, i in enumerate(act):
        for j in act[a_pos + 1:]:
            v = float(d.delays[i, j])
            if v > best:
                best, pair = v, (i, j)
    return best, pair


def evaluate(p: Placement, m: np.ndarray, d: DelayMatrix, racks: int) -> MetricReport:
    s, worst_srg = survivability(p, m, racks)
    lat, worst_pair = latency(p, d)
    norm = lat / d.l_max if d.l_max > 0 else 0.0
    return MetricReport(
        survivability=float(s),
        survivability_exact=s,
        latency_ms=lat,
        normalized_latency=norm,
        worst_srg=worst_srg,
        worst_pair=worst_pair,
    )


def objective_value(s: Fraction, lat: float, beta: float, l_max: float) -> float:
    """Weighted trade-off: (1-beta)*s - beta*l/l_max (latency term 0 when
    l_max is 0)."""
    norm = lat / l_max if l_max > 0 else 0.0
    return (1.0 - beta) * float(s) - beta * norm


@dataclass
class Candidate:
    """A feasible placement with its exactly evaluated metrics, ordered by
    the deterministic preference rule shared by the optimizer and the
    enumeration reference: objective (tolerance 1e-9), then higher
    survivability, lower latency, fewer active sites, lexicographically
    smallest rack vector."""

    x: tuple[int, ...]
    s: Fraction
    latency_ms: float
    objective: float
    n_active: int

    @classmethod
    def from_placement(cls, p: Placement, m: np.ndarray, d: DelayMatrix,
                       racks: int, beta: float) -> "Candidate":
        s, _ = survivability(p, m, racks)
        lat, _ = latency(p, d)
        return cls(
            x=p.x,
            s=s,
            latency_ms=lat,
            objective=objective_value(s, lat, beta, d.l_max),
            n_active=len(p.active),
        )

    def beats(self, other: "Candidate | None") -> bool:
        if other is None:
            return True
        if self.objective > other.objective + OBJ_TOL:
            return True
        if self.objective < other.objective - OBJ_TOL:
            return False
        if self.s != other.s:
            return self.s > other.s
        if self.latency_ms != other.latency_ms:
            return self.latency_ms < other.latency_ms
        if self.n_active != other.n_active:
            return self.n_active < other.n_active
        return self.x < other.x
