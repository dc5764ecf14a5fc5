"""Exhaustive reference solver for small instances.

Enumerates every way to distribute the racks over the sites within
capacity, evaluates each placement through the metrics module, and keeps
the best under the same deterministic preference rule as the optimizer.
Used to certify the branch-and-bound search.
"""

from __future__ import annotations

from .exceptions import InfeasibleInstanceError, OracleSizeError, ValidationError
from .metrics import Candidate, Placement
from .optimizer import DesignInstance, DesignResult

MAX_SITES = 10
MAX_COMPOSITIONS = 10_000_000


def count_compositions(caps: list[int], racks: int) -> int:
    """Number of rack vectors with the given total under per-site caps."""
    counts = [0] * (racks + 1)
    counts[0] = 1
    for cap in caps:
        nxt = [0] * (racks + 1)
        for total, ways in enumerate(counts):
            if ways:
                for take in range(0, min(cap, racks - total) + 1):
                    nxt[total + take] += ways
        counts = nxt
    return counts[racks]


def _compositions(caps: list[int], racks: int, prefix: list[int]):
    if len(prefix) == len(caps):
        if racks == 0:
            yield tuple(prefix)
        return
    remaining_cap = sum(caps[len(prefix) + 1:])
    lo = max(0, racks - remaining_cap)
    hi = min(caps[len(prefix)], racks)
    for take in range(lo, hi + 1):
        prefix.append(take)
        yield from _compositions(caps, racks - take, prefix)
        prefix.pop()


def oracle_solve(inst: DesignInstance, beta: float) -> DesignResult:
    """Brute-force optimum; refuses instances beyond the enumeration guard."""
    if not 0.0 <= beta <= 1.0:
        raise ValidationError(f"beta must lie in [0, 1], got {beta}")
    if inst.n_sites > MAX_SITES:
        raise OracleSizeError(
            f"{inst.n_sites} sites exceeds the enumeration limit of {MAX_SITES}")
    caps = [int(c) for c in inst.capacities]
    total = count_compositions(caps, inst.racks)
    if total == 0:
        raise InfeasibleInstanceError(
            f"total capacity {sum(caps)} < racks {inst.racks}")
    if total > MAX_COMPOSITIONS:
        raise OracleSizeError(
            f"{total} candidate placements exceed the limit of {MAX_COMPOSITIONS}")

    best: Candidate | None = None
    for x in _compositions(caps, inst.racks, []):
        cand = Candidate.from_placement(
            Placement(x), inst.access, inst.delay, inst.racks, beta)
        if cand.beats(best):
            best = cand
    assert best is not None
    norm = best.latency_ms / inst.l_max if inst.l_max > 0 else 0.0
    return DesignResult(
        beta=beta,
        x=best.x,
        u=Placement(best.x).u,
        survivability=float(best.s),
        survivability_exact=best.s,
        latency_ms=best.latency_ms,
        normalized_latency=norm,
        objective=best.objective,
        status="certified-optimal",
        gap=0.0,
        nodes_explored=total,
    )
