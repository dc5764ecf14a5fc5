"""Design toolkit for geo-distributed data center rack placement.

Models a WAN of candidate sites, evaluates worst-case survivability under
shared-risk-group failures and inter-site propagation latency, and solves
the weighted trade-off between the two to certified optimality.
"""

from .estimator import RackPlacementDesigner, as_topology
from .exceptions import InfeasibleInstanceError, OracleSizeError, ValidationError
from .failures import (
    Srg,
    SrgCatalog,
    accessible_subnetworks,
    catalog_for,
    disconnection_matrix,
    enumerate_single_failure_srgs,
)
from .metrics import MetricReport, Placement, evaluate, latency, survivability
from .optimizer import (
    DesignInstance,
    DesignResult,
    ParetoPoint,
    build_instance,
    build_model,
    solve,
    sweep,
)
from .oracle import oracle_solve
from .topology import (
    DEFAULT_SPEED_MPS,
    DelayMatrix,
    Link,
    Site,
    Topology,
    delay_matrix,
    delay_of_length,
    link_length,
    load_topology,
    parse_topology,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SPEED_MPS",
    "DelayMatrix",
    "DesignInstance",
    "DesignResult",
    "InfeasibleInstanceError",
    "Link",
    "MetricReport",
    "OracleSizeError",
    "ParetoPoint",
    "Placement",
    "RackPlacementDesigner",
    "Site",
    "Srg",
    "SrgCatalog",
    "Topology",
    "ValidationError",
    "accessible_subnetworks",
    "as_topology",
    "build_instance",
    "build_model",
    "catalog_for",
    "delay_matrix",
    "delay_of_length",
    "disconnection_matrix",
    "enumerate_single_failure_srgs",
    "evaluate",
    "latency",
    "link_length",
    "load_topology",
    "oracle_solve",
    "parse_topology",
    "solve",
    "survivability",
    "sweep",
]
