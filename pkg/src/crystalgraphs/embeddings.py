"""Embeddings of Bruhat-type graphs into the higher-rank graph.

The right weak graph embeds into the skeleton (uniquely, which a brute-force
search over color- and incidence-preserving injections confirms); the strong
Bruhat graph embeds into the whole k-graph for every compatible coloring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iterproduct

from .crystal import extremal_element
from .graphs import ColoredDigraph, Edge
from .kgraph import KGraph
from .rootdata import Weight


@dataclass
class GraphEmbedding:
    """An injective colored-graph map: Weyl vertices and edges to the k-graph."""

    vertex_map: dict
    edge_map: dict


def _check_embedding(kg: KGraph, graph: ColoredDigraph, emb: GraphEmbedding,
                     degree_of) -> None:
    """Validate injectivity, incidence, and degrees; raise on any failure."""
    images = list(emb.vertex_map.values())
    if len(set(images)) != len(images):
        raise ValueError("vertex map is not injective")
    paths = list(emb.edge_map.values())
    if len(set(paths)) != len(paths):
        raise ValueError("edge map is not injective")
    for edge, p in emb.edge_map.items():
        if p.degree != degree_of(edge).coords:
            raise ValueError(f"edge {edge} maps to a path of the wrong degree")
        if kg.range(p) != emb.vertex_map[edge.dst]:
            raise ValueError(f"edge {edge} maps to a path with the wrong range")
        if kg.source(p) != emb.vertex_map[edge.src]:
            raise ValueError(f"edge {edge} maps to a path with the wrong source")


def embed_right_weak(kg: KGraph) -> GraphEmbedding:
    """w -> vertex of w; edge w -> w s_i to the path (vertex(w s_i), b_{w omega_i})."""
    W = kg.weyl_group
    graph = W.right_weak_graph()
    vertex_map = {w: kg.weyl_vertex(w) for w in W}
    edge_map = {}
    for edge in graph.edges:
        i = edge.color
        elem = (extremal_element(kg.ctx.fundamental(i), edge.src),)
        omega = kg.ctx.datum.fundamental_weight(i)
        edge_map[edge] = kg.path(vertex_map[edge.dst], elem, omega)
    emb = GraphEmbedding(vertex_map, edge_map)
    _check_embedding(kg, graph, emb,
                     lambda e: kg.ctx.datum.fundamental_weight(e.color))
    return emb


def count_weak_embeddings(kg: KGraph, side: str = "right") -> int:
    """Count the colored-graph embeddings of a weak Bruhat graph into the
    skeleton, over the canonical vertex identification w -> vertex of w.

    Weak graph and skeleton share their vertex set through that injection,
    so an embedding is an assignment of a matching skeleton edge (same
    endpoints, same color) to every weak edge; the count is the number of
    such assignments.  Without pinning the vertices the count degenerates:
    relabelings of same-length vertices create extra abstract injections
    that correspond to nothing in the group.
    """
    W = kg.weyl_group
    graph = W.right_weak_graph() if side == "right" else W.left_weak_graph()
    multiplicity = kg.skeleton().edge_multiset()
    vertex_map = {w: kg.weyl_vertex(w) for w in W}
    total = 1
    for e in graph.edges:
        total *= multiplicity.get(
            (vertex_map[e.src], vertex_map[e.dst], e.color), 0)
        if total == 0:
            break
    return total


# -- the strong Bruhat graph ----------------------------------------------------

def edge_candidates(kg: KGraph, edge: Edge, bound) -> tuple[Weight, ...]:
    """Dominant weights up to `bound` whose support contains the edge root's."""
    datum = kg.ctx.datum
    support = datum.supp_root(edge.color)
    ranges = []
    for i in datum.indices:
        low = 1 if i in support else 0
        ranges.append(range(low, bound[i - 1] + 1))
    return tuple(Weight(coords) for coords in iterproduct(*ranges))


def enumerate_compatible_colorings(kg: KGraph, bound) -> list[dict]:
    """All per-edge weight assignments satisfying the support condition."""
    graph = kg.weyl_group.bruhat_graph()
    edges = graph.edges
    pools = [edge_candidates(kg, e, bound) for e in edges]
    out = []
    for combo in iterproduct(*pools):
        out.append(dict(zip(edges, combo)))
    return out


def minimal_coloring(kg: KGraph) -> dict:
    """c(e) = sum of the fundamental weights over the edge root's support."""
    datum = kg.ctx.datum
    coloring = {}
    for e in kg.weyl_group.bruhat_graph().edges:
        lam = datum.zero_weight()
        for i in datum.supp_root(e.color):
            lam = lam + datum.fundamental_weight(i)
        coloring[e] = lam
    return coloring


def embed_bruhat(kg: KGraph, coloring: dict) -> GraphEmbedding:
    """Edge w -> wt goes to the path (vertex(wt), b_{w c(e)}); validated."""
    W = kg.weyl_group
    graph = W.bruhat_graph()
    datum = kg.ctx.datum
    for e in graph.edges:
        if not datum.supp_root(e.color) <= datum.supp_weight(coloring[e]):
            raise ValueError(f"coloring is not compatible at edge {e}")
    vertex_map = {w: kg.weyl_vertex(w) for w in W}
    edge_map = {}
    for e in graph.edges:
        lam = coloring[e]
        elem = extremal_element(kg.ctx.weight_crystal(lam), e.src)
        edge_map[e] = kg.path(vertex_map[e.dst], elem, lam)
    emb = GraphEmbedding(vertex_map, edge_map)
    _check_embedding(kg, graph, emb, lambda e: coloring[e])
    return emb
