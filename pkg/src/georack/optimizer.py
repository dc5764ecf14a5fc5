"""Rack placement optimizer.

Maximizes (1-beta)*s - beta*l/l_max over integer rack counts, where s is
worst-case survivability and l the maximum active-pair delay. The search is
branch-and-bound on the site-activation variables (extending to rack counts
when the relaxation stays fractional), bounded by the LP relaxation.

The incumbent comparison never prunes objective ties, so on fully explored
instances the returned placement is the deterministic tie-break winner over
all optimal placements, matching the exhaustive reference solver.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .exceptions import InfeasibleInstanceError, ValidationError
from .failures import SrgCatalog, catalog_for, disconnection_matrix
from .metrics import Candidate, OBJ_TOL, Placement
from .topology import DEFAULT_SPEED_MPS, DelayMatrix, Topology, delay_matrix

# slack added to LP bounds to absorb solver tolerance; pruning stays safe
LP_SLACK = 1e-7
INT_TOL = 1e-6

DEFAULT_NODE_BUDGET = 200_000


@dataclass
class DesignInstance:
    """Everything the solver needs: topology, derived matrices, and sizing."""

    topology: Topology
    delay: DelayMatrix
    catalog: SrgCatalog
    access: np.ndarray  # |F| x |D| accessibility matrix
    racks: int
    capacities: np.ndarray

    def __post_init__(self):
        if self.racks <= 0:
            raise ValidationError(f"total racks must be positive, got {self.racks}")
        if len(self.capacities) != self.topology.n_sites:
            raise ValidationError("capacity vector size mismatch")

    @property
    def n_sites(self) -> int:
        return self.topology.n_sites

    @property
    def l_max(self) -> float:
        return self.delay.l_max

    def feasible(self) -> bool:
        return int(self.capacities.sum()) >= self.racks


def build_instance(t: Topology, racks: int, capacity: int | None = None,
                   speed_mps: float = DEFAULT_SPEED_MPS,
                   catalog: SrgCatalog | None = None) -> DesignInstance:
    """Assemble a solver instance from a topology."""
    cat = catalog if catalog is not None else catalog_for(t)
    return DesignInstance(
        topology=t,
        delay=delay_matrix(t, speed_mps),
        catalog=cat,
        access=disconnection_matrix(t, cat),
        racks=racks,
        capacities=t.capacities(uniform=capacity),
    )


@dataclass
class LpModel:
    """LP relaxation in standard (minimize, A_ub x <= b_ub) form.

    Variable order: [s, l, u_0..u_{n-1}, x_0..x_{n-1}].
    """

    c: np.ndarray
    a_ub: np.ndarray
    b_ub: np.ndarray
    a_eq: np.ndarray
    b_eq: np.ndarray
    n_sites: int

    @property
    def num_constraints(self) -> int:
        return self.a_ub.shape[0] + self.a_eq.shape[0]


def build_model(inst: DesignInstance, beta: float) -> LpModel:
    """Constraint rows, per site pair / SRG / site, mirroring the design
    program: survivability cut per SRG, latency activation per unordered
    pair, activation coupling per site, capacity per site, and the total
    rack equality."""
    if not 0.0 <= beta <= 1.0:
        raise ValidationError(f"beta must lie in [0, 1], got {beta}")
    n = inst.n_sites
    nf = len(inst.catalog)
    nvar = 2 + 2 * n
    i_s, i_l = 0, 1
    u0, x0 = 2, 2 + n

    c = np.zeros(nvar)
    c[i_s] = -(1.0 - beta)
    c[i_l] = beta / inst.l_max if inst.l_max > 0 else 0.0

    pairs = list(itertools.combinations(range(n), 2))
    rows = nf + len(pairs) + 3 * n
    a_ub = np.zeros((rows, nvar))
    b_ub = np.zeros(rows)
    r = 0
    # s*R - sum_i M_fi * x_i <= 0
    for f in range(nf):
        a_ub[r, i_s] = inst.racks
        a_ub[r, x0:x0 + n] = -inst.access[f]
        r += 1
    # d_ij*u_i + d_ij*u_j - l <= d_ij
    for i, j in pairs:
        d = inst.delay.delays[i, j]
        a_ub[r, i_l] = -1.0
        a_ub[r, u0 + i] = d
        a_ub[r, u0 + j] = d
        b_ub[r] = d
        r += 1
    for i in range(n):
        # x_i - R*u_i <= 0
        a_ub[r, x0 + i] = 1.0
        a_ub[r, u0 + i] = -inst.racks
        r += 1
    for i in range(n):
        # u_i - x_i <= 0
        a_ub[r, u0 + i] = 1.0
        a_ub[r, x0 + i] = -1.0
        r += 1
    for i in range(n):
        # x_i <= Z_i
        a_ub[r, x0 + i] = 1.0
        b_ub[r] = inst.capacities[i]
        r += 1

    a_eq = np.zeros((1, nvar))
    a_eq[0, x0:x0 + n] = 1.0
    b_eq = np.array([float(inst.racks)])
    return LpModel(c=c, a_ub=a_ub, b_ub=b_ub, a_eq=a_eq, b_eq=b_eq, n_sites=n)


@dataclass
class DesignResult:
    beta: float
    x: tuple[int, ...]
    u: tuple[int, ...]
    survivability: float
    survivability_exact: Fraction
    latency_ms: float
    normalized_latency: float
    objective: float
    status: str  # "certified-optimal" or "gap-bounded"
    gap: float
    nodes_explored: int

    @property
    def n_active(self) -> int:
        return sum(self.u)


@dataclass
class ParetoPoint:
    beta: float
    survivability: float
    latency_ms: float
    normalized_latency: float
    active_sites: int
    status: str = "certified-optimal"
    gap: float = 0.0


@dataclass(order=True)
class _Node:
    sort_key: tuple = field(compare=True)
    u_lo: np.ndarray = field(compare=False, default=None)
    u_hi: np.ndarray = field(compare=False, default=None)
    x_lo: np.ndarray = field(compare=False, default=None)
    x_hi: np.ndarray = field(compare=False, default=None)
    bound: float = field(compare=False, default=math.inf)


def _round_to_feasible(x_frac: np.ndarray, caps: np.ndarray, x_lo: np.ndarray,
                       x_hi: np.ndarray, racks: int) -> tuple[int, ...] | None:
    """Largest-remainder rounding of a fractional rack vector, respecting
    the node's box; returns None if it cannot hit the rack total."""
    base = np.maximum(np.floor(x_frac + 1e-12).astype(np.int64), x_lo)
    base = np.minimum(base, x_hi)
    deficit = racks - int(base.sum())
    if deficit < 0:
        order = np.lexsort((np.arange(len(base)), x_frac - base))
        for i in order:
            take = min(-deficit, int(base[i] - x_lo[i]))
            base[i] -= take
            deficit += take
            if deficit == 0:
                break
    elif deficit > 0:
        frac = x_frac - np.floor(x_frac)
        order = np.lexsort((np.arange(len(base)), -frac))
        for i in order:
            add = min(deficit, int(x_hi[i] - base[i]))
            base[i] += add
            deficit -= add
            if deficit == 0:
                break
    if deficit != 0:
        return None
    return tuple(int(v) for v in base)


class _Search:
    """Best-first branch-and-bound over activation and rack-count boxes.

    The node bound decouples the two objective terms: an upper bound on
    survivability from an LP over rack counts only (tightened by rounding
    the surviving-rack total down to an integer), and a lower bound on
    latency from the pairs of sites already fixed active. Both sides are
    valid for every completion of the node, so pruning is exact.
    """

    def __init__(self, inst: DesignInstance, beta: float, gap: float,
                 node_budget: int):
        self.inst = inst
        self.beta = beta
        self.gap_cfg = gap
        self.node_budget = node_budget
        self.n = inst.n_sites
        self.incumbent: Candidate | None = None
        self.nodes = 0
        self._tick = itertools.count()
        # survivability LP over [s, x]: maximize s with s*R <= M x per SRG
        nf = len(inst.catalog)
        self.use_lp = beta < 1.0 and nf > 0
        if self.use_lp:
            a = np.zeros((nf, 1 + self.n))
            a[:, 0] = inst.racks
            a[:, 1:] = -inst.access
            self.s_a_ub = a
            self.s_b_ub = np.zeros(nf)
            self.s_a_eq = np.concatenate(([0.0], np.ones(self.n)))[None, :]
            self.s_b_eq = np.array([float(inst.racks)])
            self.s_c = np.concatenate(([-1.0], np.zeros(self.n)))

    def offer(self, x: tuple[int, ...]) -> None:
        """Evaluate a feasible placement and keep it if it wins."""
        if sum(x) != self.inst.racks:
            return
        if any(v > c for v, c in zip(x, self.inst.capacities)):
            return
        cand = Candidate.from_placement(
            Placement(x), self.inst.access, self.inst.delay,
            self.inst.racks, self.beta)
        if cand.beats(self.incumbent):
            self.incumbent = cand

    def _latency_floor(self, node: _Node) -> float:
        """Exact latency lower bound: worst delay among fixed-active pairs."""
        fixed = np.flatnonzero(node.u_lo == 1)
        if fixed.size < 2:
            return 0.0
        sub = self.inst.delay.delays[np.ix_(fixed, fixed)]
        return float(sub.max())

    def _node_bound(self, node: _Node):
        """Upper bound on any completion's objective, plus the relaxation's
        rack vector for branching and rounding (None without an LP)."""
        l_term = self.beta * self._latency_floor(node) / self.inst.l_max \
            if self.inst.l_max > 0 else 0.0
        if not self.use_lp:
            return (1.0 - self.beta) * 1.0 - l_term, None
        bounds = [(0.0, 1.0)]
        bounds += [(float(lo), float(hi)) for lo, hi in zip(node.x_lo, node.x_hi)]
        res = linprog(self.s_c, A_ub=self.s_a_ub, b_ub=self.s_b_ub,
                      A_eq=self.s_a_eq, b_eq=self.s_b_eq,
                      bounds=bounds, method="highs")
        if res.status != 0:
            return None
        # surviving rack counts are integers: round the bound down
        s_cap = math.floor(-res.fun * self.inst.racks + 1e-5) / self.inst.racks
        s_cap = min(1.0, max(0.0, s_cap))
        return (1.0 - self.beta) * s_cap - l_term, res.x[1:]

    def _push(self, heap, node: _Node) -> None:
        node.sort_key = (-node.bound, next(self._tick))
        heapq.heappush(heap, node)

    def run(self, warm: tuple[int, ...] | None = None) -> tuple[Candidate, str, float, int]:
        inst, n = self.inst, self.n
        if not inst.feasible():
            raise InfeasibleInstanceError(
                f"total capacity {int(inst.capacities.sum())} < racks {inst.racks}")
        # greedy fill guarantees an incumbent exists before any pruning
        greedy = np.minimum(inst.capacities,
                            np.maximum(0, inst.racks - np.concatenate(
                                ([0], np.cumsum(inst.capacities)[:-1]))))
        self.offer(tuple(int(v) for v in greedy))
        if warm is not None:
            self.offer(warm)

        root = _Node(sort_key=(), u_lo=np.zeros(n, np.int64), u_hi=np.ones(n, np.int64),
                     x_lo=np.zeros(n, np.int64), x_hi=inst.capacities.copy(),
                     bound=math.inf)
        heap: list[_Node] = []
        self._push(heap, root)
        budget_hit = False

        while heap:
            if self.nodes >= self.node_budget:
                budget_hit = True
                break
            node = heapq.heappop(heap)
            if self.incumbent is not None and \
                    node.bound < self.incumbent.objective - OBJ_TOL:
                heap.clear()  # best-first: every remaining bound is no better
                break
            if (node.x_lo > node.x_hi).any():
                continue
            if int(node.x_lo.sum()) > inst.racks or int(node.x_hi.sum()) < inst.racks:
                continue
            # rack counts fixed => activation is implied; evaluate exactly
            if (node.x_lo == node.x_hi).all():
                self.offer(tuple(int(v) for v in node.x_lo))
                continue
            self.nodes += 1
            lp = self._node_bound(node)
            if lp is None:
                continue
            bound, x_val = lp
            node.bound = bound + LP_SLACK
            if self.incumbent is not None and \
                    node.bound < self.incumbent.objective - OBJ_TOL:
                continue
            if x_val is not None:
                rounded = _round_to_feasible(x_val, inst.capacities, node.x_lo,
                                             node.x_hi, inst.racks)
                if rounded is not None:
                    self.offer(rounded)
            self._branch(heap, node, x_val)

        best_remaining = max((nd.bound for nd in heap), default=-math.inf)
        if self.incumbent is None:
            raise InfeasibleInstanceError("no feasible placement found")
        gap = max(0.0, best_remaining - self.incumbent.objective)
        tol = max(self.gap_cfg, OBJ_TOL) + LP_SLACK
        if not budget_hit or gap <= tol:
            status, gap_out = "certified-optimal", 0.0
        else:
            status, gap_out = "gap-bounded", gap
        return self.incumbent, status, gap_out, self.nodes

    def _branch(self, heap, node: _Node, x_val: np.ndarray | None) -> None:
        free_u = np.flatnonzero(node.u_lo < node.u_hi)
        if free_u.size:
            if x_val is not None:
                # activate the site the relaxation loads most heavily
                i = int(free_u[int(np.argmax(x_val[free_u]))])
            else:
                i = int(free_u[0])
            up = _Node(sort_key=(), u_lo=node.u_lo.copy(), u_hi=node.u_hi.copy(),
                       x_lo=node.x_lo.copy(), x_hi=node.x_hi.copy(), bound=node.bound)
            up.u_lo[i] = 1
            up.x_lo[i] = max(1, up.x_lo[i])
            down = _Node(sort_key=(), u_lo=node.u_lo.copy(), u_hi=node.u_hi.copy(),
                         x_lo=node.x_lo.copy(), x_hi=node.x_hi.copy(), bound=node.bound)
            down.u_hi[i] = 0
            down.x_lo[i] = 0
            down.x_hi[i] = 0
            self._push(heap, up)
            self._push(heap, down)
            return
        free_x = np.flatnonzero(node.x_lo < node.x_hi)
        if not free_x.size:
            return
        if x_val is not None:
            frac = np.abs(x_val[free_x] - np.round(x_val[free_x]))
            i = int(free_x[int(np.argmax(frac))])
            split = int(math.floor(x_val[i]))
        else:
            i = int(free_x[0])
            split = (int(node.x_lo[i]) + int(node.x_hi[i])) // 2
        split = min(max(split, int(node.x_lo[i])), int(node.x_hi[i]) - 1)
        lo_child = _Node(sort_key=(), u_lo=node.u_lo.copy(), u_hi=node.u_hi.copy(),
                         x_lo=node.x_lo.copy(), x_hi=node.x_hi.copy(), bound=node.bound)
        lo_child.x_hi[i] = split
        hi_child = _Node(sort_key=(), u_lo=node.u_lo.copy(), u_hi=node.u_hi.copy(),
                         x_lo=node.x_lo.copy(), x_hi=node.x_hi.copy(), bound=node.bound)
        hi_child.x_lo[i] = split + 1
        self._push(heap, lo_child)
        self._push(heap, hi_child)


def solve(inst: DesignInstance, beta: float, gap: float = 0.0,
          node_budget: int = DEFAULT_NODE_BUDGET,
          warm_start: tuple[int, ...] | None = None,
          threads: int = 1) -> DesignResult:
    """Solve the placement program for one beta.

    The result is deterministic for fixed inputs and configuration; the
    search is sequential regardless of ``threads`` so output never depends
    on scheduling.
    """
    if not 0.0 <= beta <= 1.0:
        raise ValidationError(f"beta must lie in [0, 1], got {beta}")
    search = _Search(inst, beta, gap, node_budget)
    cand, status, gap_out, nodes = search.run(warm=warm_start)
    norm = cand.latency_ms / inst.l_max if inst.l_max > 0 else 0.0
    return DesignResult(
        beta=beta,
        x=cand.x,
        u=Placement(cand.x).u,
        survivability=float(cand.s),
        survivability_exact=cand.s,
        latency_ms=cand.latency_ms,
        normalized_latency=norm,
        objective=cand.objective,
        status=status,
        gap=gap_out,
        nodes_explored=nodes,
    )


def beta_grid(start: float, end: float, step: float) -> list[float]:
    """Inclusive grid start, start+step, ..., end with values snapped to
    exact multiples of the step to avoid accumulation drift."""
    if not (0.0 <= start <= end <= 1.0):
        raise ValidationError("beta grid must satisfy 0 <= start <= end <= 1")
    if step <= 0:
        raise ValidationError("beta step must be positive")
    count = int(round((end - start) / step))
    grid = [round(start + k * step, 12) for k in range(count + 1)]
    return [b for b in grid if b <= 1.0 + 1e-12]


def sweep(inst: DesignInstance, beta_start: float = 0.0, beta_end: float = 1.0,
          beta_step: float = 0.05, gap: float = 0.0,
          node_budget: int = DEFAULT_NODE_BUDGET,
          threads: int = 1) -> list[ParetoPoint]:
    """One solve per beta grid value; each point is re-verified against the
    metrics module before emission. The previous optimum warm-starts the
    next solve."""
    from . import metrics

    points = []
    warm = None
    for beta in beta_grid(beta_start, beta_end, beta_step):
        res = solve(inst, beta, gap=gap, node_budget=node_budget,
                    warm_start=warm, threads=threads)
        report = metrics.evaluate(Placement(res.x), inst.access, inst.delay, inst.racks)
        if abs(report.survivability - res.survivability) > OBJ_TOL or \
                abs(report.latency_ms - res.latency_ms) > OBJ_TOL:
            raise RuntimeError(
                f"solver/metric disagreement at beta={beta}: "
                f"({res.survivability}, {res.latency_ms}) vs "
                f"({report.survivability}, {report.latency_ms})")
        points.append(ParetoPoint(
            beta=beta,
            survivability=res.survivability,
            latency_ms=res.latency_ms,
            normalized_latency=res.normalized_latency,
            active_sites=res.n_active,
            status=res.status,
            gap=res.gap,
        ))
        warm = res.x
    return points
