"""Shared Risk Group enumeration and post-failure accessibility analysis.

A site survives a failure iff, after removing every member of the SRG, its
connected component still contains a gateway. Rows of the accessibility
matrix encode exactly that: entry (f, i) is 1 iff site i stays reachable
from some gateway after SRG f fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from .exceptions import ValidationError
from .topology import Topology


@dataclass(frozen=True)
class Srg:
    id: int
    node_members: frozenset[int] = frozenset()
    link_members: frozenset[int] = frozenset()  # indices into topology.links


@dataclass
class SrgCatalog:
    srgs: list[Srg]

    def __post_init__(self):
        if [s.id for s in self.srgs] != list(range(len(self.srgs))):
            raise ValidationError("SRG ids must be dense 0..|F|-1 in order")

    def __len__(self) -> int:
        return len(self.srgs)

    def __iter__(self):
        return iter(self.srgs)


@dataclass
class AccessibleSubnetworks:
    """Connected components left after a failure, each flagged accessible."""

    components: list[tuple[frozenset[int], bool]]

    def accessible_sites(self) -> frozenset[int]:
        out: set[int] = set()
        for comp, ok in self.components:
            if ok:
                out |= comp
        return frozenset(out)


def enumerate_single_failure_srgs(t: Topology) -> SrgCatalog:
    """One SRG per site and one per link: the single-failure model.

    Node SRGs come first, ordered by site id, then link SRGs by link index.
    """
    srgs = [Srg(id=s.id, node_members=frozenset({s.id})) for s in t.sites]
    off = t.n_sites
    srgs += [
        Srg(id=off + k, link_members=frozenset({k}))
        for k in range(len(t.links))
    ]
    return SrgCatalog(srgs=srgs)


def _check_members(t: Topology, f: Srg) -> None:
    for nid in f.node_members:
        if not 0 <= nid < t.n_sites:
            raise ValidationError(f"SRG {f.id}: unknown site member {nid}")
    for lid in f.link_members:
        if not 0 <= lid < len(t.links):
            raise ValidationError(f"SRG {f.id}: unknown link member {lid}")


def accessible_subnetworks(t: Topology, f: Srg) -> AccessibleSubnetworks:
    """Components of the topology after removing SRG f's sites and links."""
    _check_members(t, f)
    g = t.graph()
    for lid in f.link_members:
        ln = t.links[lid]
        if g.has_edge(ln.a, ln.b):
            g.remove_edge(ln.a, ln.b)
    g.remove_nodes_from(f.node_members)
    comps = []
    for comp in nx.connected_components(g):
        ok = any(t.site(i).gateway for i in comp)
        comps.append((frozenset(comp), ok))
    comps.sort(key=lambda c: min(c[0]))
    return AccessibleSubnetworks(components=comps)


def disconnection_matrix(t: Topology, cat: SrgCatalog) -> np.ndarray:
    """|F| x |D| binary matrix; entry (f, i) = 1 iff site i remains
    connected to a gateway after SRG f fails. Sites belonging to the SRG
    are disconnected by definition.
    """
    m = np.zeros((len(cat), t.n_sites), dtype=np.int64)
    for f in cat:
        alive = accessible_subnetworks(t, f).accessible_sites()
        for i in alive:
            m[f.id, i] = 1
    return m


def parse_srg_catalog(t: Topology, raw: list[dict]) -> SrgCatalog:
    """Build a catalog from the optional "srgs" JSON block."""
    srgs = []
    for k, entry in enumerate(raw):
        extra = set(entry) - {"nodes", "links"}
        if extra:
            raise ValidationError(f"unknown key(s) {sorted(extra)} in SRG entry {k}")
        nodes = frozenset(int(v) for v in entry.get("nodes", []))
        links = frozenset(int(v) for v in entry.get("links", []))
        if not nodes and not links:
            raise ValidationError(f"SRG entry {k} has no members")
        srg = Srg(id=k, node_members=nodes, link_members=links)
        _check_members(t, srg)
        srgs.append(srg)
    return SrgCatalog(srgs=srgs)


def catalog_for(t: Topology) -> SrgCatalog:
    """Explicit catalog from the topology file when present, else the
    single-failure model."""
    if t.srg_spec is not None:
        return parse_srg_catalog(t, t.srg_spec)
    return enumerate_single_failure_srgs(t)
