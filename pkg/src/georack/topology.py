"""WAN topology model: candidate DC sites, links, and propagation delays.

Sites carry geographic coordinates; link lengths default to the great-circle
distance between their endpoints and can be overridden in the input file.
Delays are propagation-only, in milliseconds.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import dijkstra
from scipy.sparse import csr_matrix

from .exceptions import ValidationError

EARTH_RADIUS_KM = 6371.0
DEFAULT_SPEED_MPS = 2.0e8

# absolute tolerance for delay comparisons, in ms
DELAY_ATOL = 1e-9

_SITE_KEYS = {"id", "name", "lat", "lon", "gateway", "capacity"}
_LINK_KEYS = {"a", "b", "length_km"}
_TOP_KEYS = {"sites", "links", "srgs"}


@dataclass(frozen=True)
class Site:
    id: int
    name: str
    lat: float
    lon: float
    gateway: bool = False
    capacity: int | None = None

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValidationError(f"site {self.id}: latitude {self.lat} outside [-90, 90]")
        if not -180.0 <= self.lon <= 180.0:
            raise ValidationError(f"site {self.id}: longitude {self.lon} outside [-180, 180]")
        if self.capacity is not None and self.capacity < 0:
            raise ValidationError(f"site {self.id}: negative capacity {self.capacity}")


@dataclass(frozen=True)
class Link:
    a: int
    b: int
    length_km: float | None = None

    def __post_init__(self):
        if self.a == self.b:
            raise ValidationError(f"link ({self.a}, {self.b}): endpoints must differ")
        if self.length_km is not None and self.length_km < 0:
            raise ValidationError(f"link ({self.a}, {self.b}): negative length")

    @property
    def pair(self) -> tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


@dataclass
class Topology:
    sites: list[Site]
    links: list[Link]
    # optional raw SRG spec carried through from the input file
    srg_spec: list[dict] | None = field(default=None, compare=False)

    def __post_init__(self):
        self.validate()

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    def site(self, site_id: int) -> Site:
        return self.sites[site_id]

    def validate(self) -> None:
        ids = [s.id for s in self.sites]
        if ids != list(range(len(self.sites))):
            raise ValidationError("site ids must be dense 0..n-1 in order")
        seen = set()
        for ln in self.links:
            for end in (ln.a, ln.b):
                if not 0 <= end < len(self.sites):
                    raise ValidationError(f"link endpoint {end} is not a known site")
            if ln.pair in seen:
                raise ValidationError(f"duplicate link between sites {ln.pair[0]} and {ln.pair[1]}")
            seen.add(ln.pair)
        if not any(s.gateway for s in self.sites):
            raise ValidationError("topology has no gateway site")
        # every site must reach a gateway in the failure-free network
        g = self.graph()
        gateways = {s.id for s in self.sites if s.gateway}
        reachable = set()
        for gw in gateways:
            reachable |= nx.node_connected_component(g, gw)
        for s in self.sites:
            if s.id not in reachable:
                raise ValidationError(f"site {s.id} ({s.name}) cannot reach any gateway")

    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(s.id for s in self.sites)
        g.add_edges_from((ln.a, ln.b) for ln in self.links)
        return g

    def link_lengths_km(self) -> list[float]:
        """Effective length of each link: file value if given, else great-circle."""
        return [
            ln.length_km if ln.length_km is not None
            else link_length(self.sites[ln.a], self.sites[ln.b])
            for ln in self.links
        ]

    def capacities(self, uniform: int | None = None) -> np.ndarray:
        """Per-site rack capacities; a uniform value overrides per-site ones."""
        if uniform is not None:
            if uniform < 0:
                raise ValidationError(f"negative capacity {uniform}")
            return np.full(self.n_sites, uniform, dtype=np.int64)
        caps = []
        for s in self.sites:
            if s.capacity is None:
                raise ValidationError(
                    f"site {s.id} has no capacity and no uniform capacity was given"
                )
            caps.append(s.capacity)
        return np.asarray(caps, dtype=np.int64)


@dataclass
class DelayMatrix:
    """All-pairs shortest-path propagation delays, in ms."""

    delays: np.ndarray
    l_max: float

    def __post_init__(self):
        self.delays = np.asarray(self.delays, dtype=float)


def link_length(a: Site, b: Site) -> float:
    """Great-circle distance between two sites, in km (sphere of radius 6371 km)."""
    la1, lo1, la2, lo2 = map(math.radians, (a.lat, a.lon, b.lat, b.lon))
    dlat = la2 - la1
    dlon = lo2 - lo1
    h = math.sin(dlat / 2) ** 2 + math.cos(la1) * math.cos(la2) * math.sin(dlon / 2) ** 2
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


def delay_of_length(length_km: float, speed_mps: float = DEFAULT_SPEED_MPS) -> float:
    """Propagation delay in ms over ``length_km`` at ``speed_mps``."""
    if speed_mps <= 0:
        raise ValidationError(f"propagation speed must be positive, got {speed_mps}")
    if length_km < 0:
        raise ValidationError(f"negative length {length_km}")
    return length_km * 1e6 / speed_mps


def delay_matrix(t: Topology, speed_mps: float = DEFAULT_SPEED_MPS) -> DelayMatrix:
    """Shortest-path delay between every pair of sites.

    Raises ValidationError naming an unreachable pair if the failure-free
    topology is disconnected.
    """
    n = t.n_sites
    if n == 0:
        raise ValidationError("topology has no sites")
    edge_delay: dict[tuple[int, int], float] = {}
    for ln, length in zip(t.links, t.link_lengths_km()):
        d = delay_of_length(length, speed_mps)
        edge_delay[ln.pair] = min(d, edge_delay.get(ln.pair, math.inf))
    rows, cols, data = [], [], []
    for (i, j), d in edge_delay.items():
        rows += [i, j]
        cols += [j, i]
        data += [d, d]
    # explicit zero entries must survive: a zero-length link is still an edge
    graph = csr_matrix((data, (rows, cols)), shape=(n, n))
    mat = dijkstra(graph, directed=False)
    if np.isinf(mat).any():
        i, j = map(int, np.argwhere(np.isinf(mat))[0])
        raise ValidationError(f"no path between sites {i} and {j}")
    # enforce exact symmetry despite floating-point summation order
    mat = np.minimum(mat, mat.T)
    np.fill_diagonal(mat, 0.0)
    return DelayMatrix(delays=mat, l_max=float(mat.max()))


def _require_keys(obj: dict, allowed: set[str], what: str) -> None:
    extra = set(obj) - allowed
    if extra:
        raise ValidationError(f"unknown key(s) {sorted(extra)} in {what}")


def parse_topology(data: dict) -> Topology:
    """Build a Topology from the JSON schema; unknown keys are rejected."""
    if not isinstance(data, dict):
        raise ValidationError("topology file must contain a JSON object")
    _require_keys(data, _TOP_KEYS, "topology object")
    if "sites" not in data or "links" not in data:
        raise ValidationError('topology object requires "sites" and "links"')
    sites = []
    for raw in data["sites"]:
        _require_keys(raw, _SITE_KEYS, f"site entry {raw.get('id', '?')}")
        try:
            sites.append(Site(
                id=int(raw["id"]),
                name=str(raw["name"]),
                lat=float(raw["lat"]),
                lon=float(raw["lon"]),
                gateway=bool(raw["gateway"]),
                capacity=int(raw["capacity"]) if "capacity" in raw else None,
            ))
        except KeyError as exc:
            raise ValidationError(f"site entry missing key {exc}") from exc
    links = []
    for raw in data["links"]:
        _require_keys(raw, _LINK_KEYS, f"link entry {raw}")
        try:
            links.append(Link(
                a=int(raw["a"]),
                b=int(raw["b"]),
                length_km=float(raw["length_km"]) if "length_km" in raw else None,
            ))
        except KeyError as exc:
            raise ValidationError(f"link entry missing key {exc}") from exc
    srg_spec = data.get("srgs")
    if srg_spec is not None and not isinstance(srg_spec, list):
        raise ValidationError('"srgs" must be a list')
    return Topology(sites=sites, links=links, srg_spec=srg_spec)


def load_topology(path: str | Path) -> Topology:
    """Read and validate a topology JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: not valid JSON ({exc})") from exc
    return parse_topology(data)
