"""Independent feasibility checker for solver outputs.

Re-states every constraint of the design program with plain loops over the
instance data, deliberately sharing no code with the LP model builder.
"""

from __future__ import annotations

from .metrics import OBJ_TOL
from .optimizer import DesignInstance, DesignResult


def check_result(inst: DesignInstance, res: DesignResult) -> list[str]:
    """Return a list of violated-constraint descriptions (empty if clean)."""
    bad: list[str] = []
    n = inst.n_sites
    x, u = res.x, res.u
    s, lat = res.survivability, res.latency_ms

    if len(x) != n or len(u) != n:
        return [f"dimension mismatch: |x|={len(x)}, |u|={len(u)}, sites={n}"]

    for i in range(n):
        if not isinstance(x[i], int) or x[i] < 0:
            bad.append(f"x[{i}]={x[i]} is not a non-negative integer")
        if u[i] not in (0, 1):
            bad.append(f"u[{i}]={u[i]} is not binary")
    if s < -OBJ_TOL or lat < -OBJ_TOL:
        bad.append(f"negative metric: s={s}, l={lat}")

    for f in inst.catalog:
        surviving = sum(inst.access[f.id, i] * x[i] for i in range(n))
        if surviving - s * inst.racks < -OBJ_TOL:
            bad.append(f"survivability cut violated for SRG {f.id}: "
                       f"{surviving} < s*R = {s * inst.racks}")
    for i in range(n):
        for j in range(i + 1, n):
            d = inst.delay.delays[i, j]
            if lat - d * u[i] - d * u[j] < -d - OBJ_TOL:
                bad.append(f"latency bound violated for pair ({i}, {j})")
    for i in range(n):
        if inst.racks * u[i] - x[i] < 0:
            bad.append(f"activation upper coupling violated at site {i}")
        if u[i] > x[i]:
            bad.append(f"activation lower coupling violated at site {i}")
        if x[i] > inst.capacities[i]:
            bad.append(f"capacity exceeded at site {i}: {x[i]} > {inst.capacities[i]}")
    if sum(x) != inst.racks:
        bad.append(f"total racks {sum(x)} != {inst.racks}")
    return bad
