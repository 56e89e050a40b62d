"""
The underlying simple graph G(I) and the graph facts the classification
theorems are stated in
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
import networkx as nx
from algebra.decomposition import PrimeSupport
from structure.support2 import Support2Profile
from utils.config import get_settings
from utils.errors import CoverBoundError, DomainError


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph on the vertices 1..n"""
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        normalized = set()
        for a, b in self.edges:
            if a == b:
                raise DomainError(f"loop at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise DomainError(f"edge {{{a}, {b}}} outside vertices 1..{self.n}")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(1, self.n + 1))
        G.add_edges_from(self.edges)
        return G

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> List[int]:
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def active_vertices(self) -> List[int]:
        """Vertices with at least one edge"""
        return sorted({v for e in self.edges for v in e})


@dataclass(frozen=True)
class WhiskerStructure:
    """
    A whiskered graph W_H: core vertex cores[k] carries the whisker leaf
    whiskers[k]

    `ambiguous` lists the K2 components whose core was picked by least index.
    """
    n: int
    cores: Tuple[int, ...]
    whiskers: Tuple[int, ...]
    ambiguous: Tuple[Tuple[int, int], ...] = ()

    @property
    def m(self) -> int:
        return len(self.cores)

    @property
    def core_of(self) -> Dict[int, int]:
        return dict(zip(self.whiskers, self.cores))

    def mapping(self) -> Dict[int, int]:
        """Relabeling: cores to 1..m, the whisker of core k to m+k, the rest after 2m"""
        relabeling = {}
        for k, (c, leaf) in enumerate(zip(self.cores, self.whiskers), start=1):
            relabeling[c] = k
            relabeling[leaf] = self.m + k
        rest = [v for v in range(1, self.n + 1) if v not in relabeling]
        for k, v in enumerate(rest, start=2 * self.m + 1):
            relabeling[v] = k
        return relabeling


def graph_of(p: Support2Profile) -> SimpleGraph:
    return SimpleGraph(p.n, tuple(p.edge_keys()))


def _active_subgraph(G: SimpleGraph) -> nx.Graph:
    return nx.Graph(list(G.edges))


def is_bipartite(G: SimpleGraph) -> bool:
    return nx.is_bipartite(G.to_networkx())


def girth(G: SimpleGraph) -> Optional[int]:
    """Length of a shortest cycle, None for forests"""
    H = G.to_networkx()
    best = None
    # Shortest cycle through an edge = shortest detour between its endpoints + 1.
    for a, b in G.edges:
        H.remove_edge(a, b)
        try:
            length = nx.shortest_path_length(H, a, b) + 1
            if best is None or length < best:
                best = length
        except nx.NetworkXNoPath:
            pass
        H.add_edge(a, b)
    return best


def is_triangle_free(G: SimpleGraph) -> bool:
    return girth(G) != 3


def distance(G: SimpleGraph, u: int, v: int) -> Optional[int]:
    try:
        return nx.shortest_path_length(G.to_networkx(), u, v)
    except nx.NetworkXNoPath:
        return None


def leaves(G: SimpleGraph) -> List[int]:
    return [v for v in range(1, G.n + 1) if G.degree(v) == 1]


def minimal_vertex_covers(G: SimpleGraph) -> List[PrimeSupport]:
    """
    All inclusion-minimal vertex covers

    Complements of maximal independent sets, found as maximal cliques of
    the complement graph.

    Raises:
        CoverBoundError: above the configured vertex bound
    """
    bound = get_settings().cover_bound
    if G.n > bound:
        raise CoverBoundError(f"cover enumeration limited to {bound} vertices, graph has {G.n}")
    if not G.edges:
        return []
    vertices = set(range(1, G.n + 1))
    covers = {PrimeSupport(tuple(vertices - set(clique))) for clique in nx.find_cliques(nx.complement(G.to_networkx()))}
    return sorted(covers, key=PrimeSupport.sort_key)


def cover_separates_edge(G: SimpleGraph, i: int, j: int) -> bool:
    """True iff no minimal vertex cover contains both i and j"""
    return not any(i in C.vars and j in C.vars for C in minimal_vertex_covers(G))


def recognize_cycle(G: SimpleGraph) -> Optional[int]:
    """Length of the cycle formed by the non-isolated vertices, if they form one"""
    H = _active_subgraph(G)
    if H.number_of_nodes() < 3 or not nx.is_connected(H):
        return None
    if any(d != 2 for _, d in H.degree()):
        return None
    return H.number_of_nodes()


def cycle_order(G: SimpleGraph) -> List[int]:
    """
    Vertices of a cycle graph in traversal order, starting from the least
    vertex and stepping to its smaller neighbor
    """
    if recognize_cycle(G) is None:
        raise DomainError("graph is not a cycle")
    start = G.active_vertices()[0]
    order = [start, G.neighbors(start)[0]]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = [v for v in G.neighbors(cur) if v != prev][0]
        if nxt == start:
            return order
        order.append(nxt)


def shape(G: SimpleGraph) -> str:
    """Short name for the shape of the non-isolated part: cycle, path, tree, forest or graph"""
    H = _active_subgraph(G)
    if H.number_of_nodes() == 0:
        return "empty"
    n = recognize_cycle(G)
    if n is not None:
        return f"cycle C{n}"
    if nx.is_forest(H):
        if not nx.is_connected(H):
            return "forest"
        if max(d for _, d in H.degree()) <= 2:
            return f"path P{H.number_of_nodes()}"
        return "tree"
    return "graph"


def recognize_whisker(G: SimpleGraph) -> Optional[WhiskerStructure]:
    """
    Recognize G as W_H: every non-leaf has exactly one leaf neighbor and
    every leaf hangs off a non-leaf

    Isolated K2 components are accepted with the lower vertex as core.
    """
    active = G.active_vertices()
    if not active:
        return None
    leaf_set = {v for v in active if G.degree(v) == 1}
    pairs = []
    ambiguous = []
    for v in sorted(leaf_set):
        u = G.neighbors(v)[0]
        if u in leaf_set:
            # K2 component: one endpoint is core, the other its whisker.
            if v < u:
                pairs.append((v, u))
                ambiguous.append((v, u))
            continue
        pairs.append((u, v))
    cores = [c for c, _ in pairs]
    core_set = set(cores)
    if len(core_set) != len(cores):
        return None
    for v in active:
        if v in leaf_set:
            continue
        if v not in core_set:
            return None
    pairs.sort()
    return WhiskerStructure(
        n=G.n,
        cores=tuple(c for c, _ in pairs),
        whiskers=tuple(w for _, w in pairs),
        ambiguous=tuple(ambiguous),
    )
