"""Scikit-learn style front door for the placement optimizer.

``RackPlacementDesigner`` is a BaseEstimator whose ``fit`` takes a topology
(object, dict, or file path) and computes an optimal rack placement; fitted
attributes expose the placement and its metrics. ``get_params`` /
``set_params`` make it usable in parameter searches over beta or capacity.
"""

from __future__ import annotations

from pathlib import Path

from sklearn.base import BaseEstimator

from .exceptions import ValidationError
from . import optimizer
from .topology import DEFAULT_SPEED_MPS, Topology, load_topology, parse_topology


def as_topology(data) -> Topology:
    """Accept a Topology, a schema dict, or a JSON file path."""
    if isinstance(data, Topology):
        return data
    if isinstance(data, dict):
        return parse_topology(data)
    if isinstance(data, (str, Path)):
        return load_topology(data)
    raise ValidationError(f"cannot interpret {type(data).__name__} as a topology")


class RackPlacementDesigner(BaseEstimator):
    """Place ``racks`` racks on a WAN topology trading survivability
    against interconnection latency with weight ``beta``.

    Parameters
    ----------
    beta : float, trade-off weight in [0, 1]; 0 maximizes survivability,
        1 minimizes latency.
    racks : int, total racks to distribute.
    capacity : int or None, uniform per-site capacity; None uses the
        per-site values from the topology.
    speed_mps : float, propagation speed for distance-to-delay conversion.
    gap : float, acceptable absolute optimality gap (0 = certified optimum).
    node_budget : int, search-node limit before a gap-bounded result is
        returned.
    """

    def __init__(self, beta: float = 0.5, racks: int = 1024,
                 capacity: int | None = None,
                 speed_mps: float = DEFAULT_SPEED_MPS,
                 gap: float = 0.0,
                 node_budget: int = optimizer.DEFAULT_NODE_BUDGET):
        self.beta = beta
        self.racks = racks
        self.capacity = capacity
        self.speed_mps = speed_mps
        self.gap = gap
        self.node_budget = node_budget

    def fit(self, X, y=None):
        t = as_topology(X)
        self.instance_ = optimizer.build_instance(
            t, racks=self.racks, capacity=self.capacity,
            speed_mps=self.speed_mps)
        res = optimizer.solve(self.instance_, self.beta, gap=self.gap,
                              node_budget=self.node_budget)
        self.result_ = res
        self.placement_ = res.x
        self.active_sites_ = res.u
        self.survivability_ = res.survivability
        self.latency_ms_ = res.latency_ms
        self.objective_ = res.objective
        self.status_ = res.status
        return self

    def score(self, X=None, y=None) -> float:
        """Objective value of the fitted placement."""
        if not hasattr(self, "result_"):
            raise ValidationError("estimator is not fitted")
        return self.objective_
