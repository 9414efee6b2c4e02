"""The higher-rank graph of a crystal context.

Vertices are the right-end tuples of B(rho); a path is a pair (vertex,
element) whose degree is the highest weight of the element's crystal,
identified with a vector of nonnegative integers.  Sources, composition,
the skeleton, exhaustive enumeration and the factorization axiom live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iterproduct

from .crystal import CrystalContext, canonical_isomorphism, extremal_element
from .graphs import ColoredDigraph, Edge
from .rightends import in_cartan_component, right_end_chain, right_end_tuple
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class KPath:
    """A path (v, b): range vertex v, element b of B(degree), flat-tuple form."""

    vertex: tuple
    element: tuple
    degree: tuple[int, ...]


class KGraph:
    def __init__(self, ctx: CrystalContext):
        self.ctx = ctx
        self.datum = ctx.datum
        rho = ctx.rho_crystal()
        fibers: dict[tuple, list] = {}
        for c in rho.elements:
            v = right_end_tuple(ctx, c)
            fibers.setdefault(v, []).append(c)
        self._vertices = tuple(sorted(fibers, key=str))
        self._fibers = {v: tuple(cs) for v, cs in fibers.items()}
        self._weyl: WeylGroup | None = None
        self._weyl_labels: dict[tuple, WeylElement] | None = None
        self._sources: dict[KPath, tuple] = {}
        self._paths: dict[tuple, tuple[KPath, ...]] = {}
        self._compose_isos: dict[tuple, dict] = {}

    # -- vertices -----------------------------------------------------------

    def vertices(self) -> tuple[tuple, ...]:
        return self._vertices

    def fiber(self, v: tuple) -> tuple:
        """All elements of B(rho) whose right-end tuple is v."""
        return self._fibers[v]

    @property
    def weyl_group(self) -> WeylGroup:
        if self._weyl is None:
            self._weyl = WeylGroup.generate(self.datum)
        return self._weyl

    def weyl_vertex(self, w: WeylElement) -> tuple:
        """The vertex of a Weyl group element: its tuple of extremal factors."""
        v = tuple(extremal_element(self.ctx.fundamental(i), w)
                  for i in self.datum.indices)
        if v not in self._fibers:
            raise RuntimeError(f"extremal tuple {v!r} is not a vertex")
        return v

    def weyl_label(self, v: tuple) -> WeylElement | None:
        """The Weyl group element mapping to v, when there is one."""
        if self._weyl_labels is None:
            self._weyl_labels = {}
            for w in self.weyl_group:
                vw = self.weyl_vertex(w)
                if vw in self._weyl_labels:
                    raise RuntimeError("Weyl vertex map is not injective")
                self._weyl_labels[vw] = w
        return self._weyl_labels.get(v)

    def vertex_leq(self, v: tuple, u: tuple) -> bool:
        """Componentwise crystal order: each v_i reachable from u_i by lowering."""
        return all(self.ctx.fundamental(i).leq(v[i - 1], u[i - 1])
                   for i in self.datum.indices)

    # -- paths ---------------------------------------------------------------

    def is_path(self, v: tuple, element: tuple, degree) -> bool:
        lam = self.ctx.weight(degree)
        if v not in self._fibers:
            return False
        if element not in self.ctx.weight_crystal(lam):
            return False
        rep = self._fibers[v][0]
        funds = tuple(self.datum.indices) + self.ctx.fundamental_indices(lam)
        return in_cartan_component(self.ctx, funds, rep + tuple(element))

    def path(self, v: tuple, element: tuple, degree) -> KPath:
        lam = self.ctx.weight(degree)
        if not self.is_path(v, element, lam):
            raise ValueError(f"({v!r}, {element!r}) is not a path of degree {lam.coords}")
        return KPath(v, tuple(element), lam.coords)

    def identity_path(self, v: tuple) -> KPath:
        return self.path(v, (), self.ctx.weight((0,) * self.datum.rank))

    def range(self, p: KPath) -> tuple:
        return p.vertex

    def degree(self, p: KPath) -> tuple[int, ...]:
        return p.degree

    def source(self, p: KPath) -> tuple:
        """Componentwise right ends of v_i (x) b; memoized."""
        if p not in self._sources:
            lam_funds = self.ctx.fundamental_indices(self.ctx.weight(p.degree))
            out = []
            for i in self.datum.indices:
                end = right_end_chain(self.ctx, (i,) + lam_funds,
                                      (p.vertex[i - 1],) + p.element, 1)
                if end is None:
                    raise ValueError(f"{p} is not a valid path")
                out.append(end)
            v = tuple(out)
            if v not in self._fibers:
                raise RuntimeError(f"source {v!r} of {p} is not a vertex")
            self._sources[p] = v
        return self._sources[p]

    # -- composition ----------------------------------------------------------

    def _compose_iso(self, deg1: tuple, deg2: tuple) -> dict:
        key = (deg1, deg2)
        if key not in self._compose_isos:
            funds_cat = (self.ctx.fundamental_indices(self.ctx.weight(deg1))
                         + self.ctx.fundamental_indices(self.ctx.weight(deg2)))
            total = self.ctx.weight(tuple(a + b for a, b in zip(deg1, deg2)))
            if not funds_cat:
                self._compose_isos[key] = {(): ()}
            else:
                comp = self.ctx.cartan_of(funds_cat)
                self._compose_isos[key] = canonical_isomorphism(
                    comp, self.ctx.weight_crystal(total))
        return self._compose_isos[key]

    def compose(self, p: KPath, q: KPath) -> KPath:
        """(p, q) -> (range p, projection of b_p (x) b_q); needs s(p) = r(q)."""
        if self.source(p) != q.vertex:
            raise ValueError("paths are not composable: source(p) != range(q)")
        elem_cat = p.element + q.element
        iso = self._compose_iso(p.degree, q.degree)
        if elem_cat not in iso:
            raise RuntimeError(
                f"{p} and {q} are composable but their product left the "
                "Cartan component")
        degree = tuple(a + b for a, b in zip(p.degree, q.degree))
        return KPath(p.vertex, iso[elem_cat], degree)

    # -- enumeration ------------------------------------------------------------

    def paths_of_degree(self, degree) -> tuple[KPath, ...]:
        lam = self.ctx.weight(degree)
        if lam.coords not in self._paths:
            crystal = self.ctx.weight_crystal(lam)
            found = []
            for v in self._vertices:
                for b in crystal.elements:
                    if self.is_path(v, b, lam):
                        found.append(KPath(v, b, lam.coords))
            self._paths[lam.coords] = tuple(found)
        return self._paths[lam.coords]

    def degrees_up_to(self, bound) -> tuple[tuple[int, ...], ...]:
        bound = tuple(bound)
        ranges = [range(b + 1) for b in bound]
        return tuple(sorted(iterproduct(*ranges), key=lambda d: (sum(d), d)))

    def enumerate_paths(self, bound=None) -> tuple[KPath, ...]:
        """All paths of degree componentwise at most `bound` (default all 2s)."""
        if bound is None:
            bound = (2,) * self.datum.rank
        out: list[KPath] = []
        for d in self.degrees_up_to(bound):
            out.extend(self.paths_of_degree(d))
        return tuple(out)

    # -- skeleton -----------------------------------------------------------------

    def skeleton(self) -> ColoredDigraph:
        """Vertices plus the degree-omega_i paths as i-colored edges.

        Parallel edges are kept distinct by their defining element.
        """
        edges = []
        for i in self.datum.indices:
            omega = tuple(1 if j == i else 0 for j in self.datum.indices)
            for p in self.paths_of_degree(omega):
                edges.append(Edge(self.source(p), p.vertex, i, key=p.element))
        return ColoredDigraph(self._vertices, edges, name="skeleton")

    def path_json(self, p: KPath, element_str=str) -> dict:
        """Wire form of a path: vertex, element, degree, and derived source."""
        return {
            "vertex": [element_str(x) for x in p.vertex],
            "element": element_str(p.element),
            "degree": list(p.degree),
            "source": [element_str(x) for x in self.source(p)],
        }

    # -- the factorization axiom ------------------------------------------------

    def factorization_check(self, p: KPath, m, n) -> tuple[KPath, KPath]:
        """The unique (g, h) with degrees (m, n) and compose(g, h) = p.

        Searches exhaustively; raises if the pair is missing or ambiguous,
        either of which would falsify the factorization axiom.
        """
        m, n = tuple(m), tuple(n)
        if tuple(a + b for a, b in zip(m, n)) != p.degree:
            raise ValueError(f"split {m} + {n} does not add up to {p.degree}")
        matches = []
        for g in self.paths_of_degree(m):
            if g.vertex != p.vertex:
                continue
            sg = self.source(g)
            for h in self.paths_of_degree(n):
                if h.vertex != sg:
                    continue
                if self.compose(g, h) == p:
                    matches.append((g, h))
        if len(matches) != 1:
            raise ValueError(
                f"{p} has {len(matches)} factorizations of type {m}+{n}; expected 1")
        return matches[0]
