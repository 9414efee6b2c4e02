"""Finite crystals: Kashiwara operators, tensor products, Weyl action,
Cartan components and the Cartan braiding.

A crystal is stored as its lowering maps; zero is an absent value, never a
sentinel element.  Tensor products support both bracketing conventions behind
a single flag, applied left-associatively across the factor list.
"""

from __future__ import annotations

import json
from collections import deque
from enum import Enum
from itertools import product as iterproduct

from .rootdata import RootDatum, Weight


class Convention(Enum):
    """Tensor-product convention for the Kashiwara operators."""

    HONG_KANG = "hong-kang"
    OPPOSITE = "opposite"


def as_convention(value) -> Convention:
    if isinstance(value, Convention):
        return value
    return Convention(str(value).lower().replace("_", "-"))


class Crystal:
    """A finite crystal: element ids, a weight map, and partial operators.

    ``lowering[i][b] = b'`` encodes that the i-th lowering operator sends b to
    b'; absence encodes the value 0.  Raising maps are derived by inversion.
    """

    def __init__(self, datum: RootDatum, elements, weights, lowering,
                 name: str = "B", factors=None, validate: bool = True):
        self.datum = datum
        self.name = name
        self.elements = tuple(elements)
        self.factors = tuple(factors) if factors is not None else None
        self._wt = dict(weights)
        self._f = {i: dict(lowering.get(i, {})) for i in datum.indices}
        self._e: dict[int, dict] = {}
        for i, fmap in self._f.items():
            inv = {}
            for b, b2 in fmap.items():
                if b2 in inv:
                    raise ValueError(f"{name}: lowering operator {i} is not injective")
                inv[b2] = b
            self._e[i] = inv
        if len(set(self.elements)) != len(self.elements):
            raise ValueError(f"{name}: duplicate element ids")
        self._desc: dict = {}
        if validate:
            self.validate()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b):
        return b in self._wt

    def __repr__(self):
        return f"Crystal({self.name}, {len(self.elements)} elements)"

    def wt(self, b) -> Weight:
        return self._wt[b]

    def f(self, i: int, b):
        """Lowering operator; None encodes 0."""
        return self._f[i].get(b)

    def e(self, i: int, b):
        """Raising operator; None encodes 0."""
        return self._e[i].get(b)

    def phi(self, i: int, b) -> int:
        k = 0
        while (b := self._f[i].get(b)) is not None:
            k += 1
        return k

    def epsilon(self, i: int, b) -> int:
        k = 0
        while (b := self._e[i].get(b)) is not None:
            k += 1
        return k

    def validate(self) -> None:
        r = self.datum.rank
        for b in self.elements:
            w = self._wt[b]
            if len(w.coords) != r:
                raise ValueError(f"{self.name}: weight of {b!r} has wrong rank")
        for i in self.datum.indices:
            alpha = self.datum.weight_of_root(self.datum.simple_root(i))
            for b, b2 in self._f[i].items():
                if b not in self._wt or b2 not in self._wt:
                    raise ValueError(f"{self.name}: operator {i} touches unknown elements")
                if self._wt[b2] != self._wt[b] - alpha:
                    raise ValueError(
                        f"{self.name}: lowering {i} does not shift the weight by -alpha_{i}")
        for b in self.elements:
            for i in self.datum.indices:
                if self.phi(i, b) - self.epsilon(i, b) != self.datum.pairing(self._wt[b], i):
                    raise ValueError(
                        f"{self.name}: phi - epsilon mismatch at {b!r}, index {i}")

    # -- structure ----------------------------------------------------------

    def highest_weight_elements(self) -> tuple:
        return tuple(b for b in self.elements
                     if all(self.epsilon(i, b) == 0 for i in self.datum.indices))

    def hw_element(self):
        hws = self.highest_weight_elements()
        if len(hws) != 1:
            raise ValueError(f"{self.name} has {len(hws)} highest weight elements")
        return hws[0]

    @property
    def highest_weight(self) -> Weight:
        return self._wt[self.hw_element()]

    def component_elements(self, b) -> tuple:
        """Elements reachable from b under all operators, in BFS order."""
        seen = {b}
        order = [b]
        queue = deque([b])
        while queue:
            x = queue.popleft()
            for i in self.datum.indices:
                for y in (self.f(i, x), self.e(i, x)):
                    if y is not None and y not in seen:
                        seen.add(y)
                        order.append(y)
                        queue.append(y)
        return tuple(order)

    def connected_component(self, b) -> "Crystal":
        elems = self.component_elements(b)
        keep = set(elems)
        lowering = {i: {x: y for x, y in self._f[i].items() if x in keep}
                    for i in self.datum.indices}
        return Crystal(self.datum, elems, {x: self._wt[x] for x in elems},
                       lowering, name=f"{self.name}.comp", factors=self.factors,
                       validate=False)

    def is_connected(self) -> bool:
        return len(self.component_elements(self.elements[0])) == len(self.elements)

    def descendants(self, b) -> frozenset:
        """b together with everything reachable by lowering operators."""
        if b not in self._desc:
            seen = {b}
            queue = deque([b])
            while queue:
                x = queue.popleft()
                for i in self.datum.indices:
                    y = self.f(i, x)
                    if y is not None and y not in seen:
                        seen.add(y)
                        queue.append(y)
            self._desc[b] = frozenset(seen)
        return self._desc[b]

    def leq(self, b1, b2) -> bool:
        """b1 <= b2 when b1 is reachable from b2 by lowering operators."""
        return b1 in self.descendants(b2)


def trivial_crystal(datum: RootDatum) -> Crystal:
    """B(0): a single element of weight zero, with empty factor list."""
    return Crystal(datum, [()], {(): datum.zero_weight()}, {},
                   name="B(0)", factors=(), validate=False)


# -- tensor products --------------------------------------------------------

def _tensor_phi_eps(factors, conv: Convention, elem, i: int) -> tuple[int, int]:
    """Closed-form string lengths of a tensor element, folded left to right."""
    phi = factors[0].phi(i, elem[0])
    eps = factors[0].epsilon(i, elem[0])
    for c, b in zip(factors[1:], elem[1:]):
        p2, e2 = c.phi(i, b), c.epsilon(i, b)
        if conv is Convention.HONG_KANG:
            phi, eps = p2 + max(0, phi - e2), eps + max(0, e2 - phi)
        else:
            phi, eps = phi + max(0, p2 - eps), e2 + max(0, eps - p2)
    return phi, eps


def _tensor_apply(factors, conv: Convention, elem, i: int, lower: bool):
    """Apply a Kashiwara operator to a tensor element; None encodes 0."""
    if len(elem) == 1:
        b2 = factors[0].f(i, elem[0]) if lower else factors[0].e(i, elem[0])
        return None if b2 is None else (b2,)
    phi_p, eps_p = _tensor_phi_eps(factors[:-1], conv, elem[:-1], i)
    last_c, last_b = factors[-1], elem[-1]
    if conv is Convention.HONG_KANG:
        act_left = phi_p > last_c.epsilon(i, last_b) if lower \
            else phi_p >= last_c.epsilon(i, last_b)
    else:
        act_right = last_c.phi(i, last_b) > eps_p if lower \
            else last_c.phi(i, last_b) >= eps_p
        act_left = not act_right
    if act_left:
        res = _tensor_apply(factors[:-1], conv, elem[:-1], i, lower)
        return None if res is None else res + (last_b,)
    b2 = last_c.f(i, last_b) if lower else last_c.e(i, last_b)
    return None if b2 is None else elem[:-1] + (b2,)


def _check_factors(factors):
    factors = tuple(factors)
    if not factors:
        raise ValueError("tensor products need at least one factor")
    datum = factors[0].datum
    if any(c.datum != datum for c in factors):
        raise ValueError("tensor factors live over different Cartan data")
    return factors, datum


def tensor(factors, convention=Convention.HONG_KANG, name: str = "") -> Crystal:
    """The full tensor product crystal; element ids are tuples of factor ids."""
    factors, datum = _check_factors(factors)
    conv = as_convention(convention)
    elements = list(iterproduct(*[c.elements for c in factors]))
    weights = {}
    for elem in elements:
        w = datum.zero_weight()
        for c, b in zip(factors, elem):
            w = w + c.wt(b)
        weights[elem] = w
    lowering = {i: {} for i in datum.indices}
    for i in datum.indices:
        for elem in elements:
            res = _tensor_apply(factors, conv, elem, i, lower=True)
            if res is not None:
                lowering[i][elem] = res
    name = name or "(" + " x ".join(c.name for c in factors) + ")"
    return Crystal(datum, elements, weights, lowering, name=name,
                   factors=factors, validate=False)


def tensor_component(factors, convention=Convention.HONG_KANG, seed=None,
                     name: str = "") -> Crystal:
    """The connected component of `seed` in a tensor product, built lazily.

    Defaults to the component of the product of highest weight elements,
    i.e. the Cartan component.  Only the component is ever materialized, so
    large ambient products cost nothing.
    """
    factors, datum = _check_factors(factors)
    conv = as_convention(convention)
    if seed is None:
        seed = tuple(c.hw_element() for c in factors)
    seen = {seed}
    order = [seed]
    queue = deque([seed])
    lowering = {i: {} for i in datum.indices}
    while queue:
        elem = queue.popleft()
        for i in datum.indices:
            down = _tensor_apply(factors, conv, elem, i, lower=True)
            if down is not None:
                lowering[i][elem] = down
                if down not in seen:
                    seen.add(down)
                    order.append(down)
                    queue.append(down)
            up = _tensor_apply(factors, conv, elem, i, lower=False)
            if up is not None:
                if up not in seen:
                    seen.add(up)
                    order.append(up)
                    queue.append(up)
                lowering[i][up] = elem
    weights = {}
    for elem in order:
        w = datum.zero_weight()
        for c, b in zip(factors, elem):
            w = w + c.wt(b)
        weights[elem] = w
    name = name or "cartan(" + " x ".join(c.name for c in factors) + ")"
    return Crystal(datum, order, weights, lowering, name=name,
                   factors=factors, validate=False)


def cartan_component(crystal: Crystal) -> Crystal:
    """The component of the product of highest weight elements."""
    if crystal.factors is None:
        raise ValueError(f"{crystal.name} has no recorded factor list")
    if not crystal.factors:
        return crystal
    seed = tuple(c.hw_element() for c in crystal.factors)
    return crystal.connected_component(seed)


# -- Weyl group action -------------------------------------------------------

def weyl_action(crystal: Crystal, i: int, b):
    """The reflection action on crystal elements; never 0."""
    k = crystal.datum.pairing(crystal.wt(b), i)
    for _ in range(abs(k)):
        b = crystal.f(i, b) if k > 0 else crystal.e(i, b)
        if b is None:
            raise RuntimeError(
                f"{crystal.name}: reflection action ran past the string end; "
                "the crystal is malformed")
    return b


def weyl_action_word(crystal: Crystal, word, b):
    """Apply the reflections of a word, rightmost letter first."""
    for i in reversed(tuple(word)):
        b = weyl_action(crystal, i, b)
    return b


def extremal_element(crystal: Crystal, w):
    """The unique element of extremal weight w(lambda) in a connected crystal."""
    word = getattr(w, "word", w)
    return weyl_action_word(crystal, word, crystal.hw_element())


# -- canonical isomorphisms and the Cartan braiding ---------------------------

def canonical_isomorphism(c1: Crystal, c2: Crystal) -> dict:
    """The unique crystal isomorphism between connected crystals.

    Propagates from highest weight elements along lowering edges; raises if
    the crystals are not isomorphic.
    """
    h1, h2 = c1.hw_element(), c2.hw_element()
    if c1.wt(h1) != c2.wt(h2):
        raise ValueError(f"highest weights differ: {c1.name} vs {c2.name}")
    if len(c1) != len(c2):
        raise ValueError(f"sizes differ: {c1.name} vs {c2.name}")
    mapping = {h1: h2}
    queue = deque([h1])
    while queue:
        x = queue.popleft()
        y = mapping[x]
        for i in c1.datum.indices:
            x2, y2 = c1.f(i, x), c2.f(i, y)
            if (x2 is None) != (y2 is None):
                raise ValueError(f"{c1.name} and {c2.name} are not isomorphic")
            if x2 is None:
                continue
            if x2 in mapping:
                if mapping[x2] != y2:
                    raise ValueError(f"{c1.name} and {c2.name} are not isomorphic")
            else:
                mapping[x2] = y2
                queue.append(x2)
    if len(mapping) != len(c1):
        raise ValueError(f"{c1.name} is not connected")
    return mapping


def cartan_braiding(c1: Crystal, c2: Crystal,
                    convention=Convention.HONG_KANG) -> dict:
    """The braiding c1 (x) c2 -> c2 (x) c1 as a pair table; None encodes 0.

    It is the canonical isomorphism between the Cartan components of the two
    products and zero on every other element.
    """
    conv = as_convention(convention)
    p12 = tensor((c1, c2), conv)
    comp12 = cartan_component(p12)
    comp21 = tensor_component((c2, c1), conv)
    iso = canonical_isomorphism(comp12, comp21)
    return {pair: iso.get(pair) for pair in p12.elements}


# -- fundamental crystals ------------------------------------------------------

def _is_type_a(datum: RootDatum) -> bool:
    r = datum.rank
    return all(datum.cartan[i][j] == (2 if i == j else (-1 if abs(i - j) == 1 else 0))
               for i in range(r) for j in range(r))


def _is_c2(datum: RootDatum) -> bool:
    return datum.rank == 2 and datum.cartan == ((2, -2), (-1, 2))


def _box_weight(datum: RootDatum, v: int) -> Weight:
    coords = [0] * datum.rank
    if v <= datum.rank:
        coords[v - 1] += 1
    if v - 1 >= 1:
        coords[v - 2] -= 1
    return Weight(tuple(coords))


def _type_a_fundamental(datum: RootDatum, k: int) -> Crystal:
    """Columns: strictly increasing k-subsets of {1..rank+1}.

    The lowering operator i turns an entry i into i+1 when i is present and
    i+1 is not; this is the column rule induced by the reading embedding into
    a tensor power of the vector crystal.
    """
    from itertools import combinations

    elements = list(combinations(range(1, datum.rank + 2), k))
    weights = {}
    for col in elements:
        w = datum.zero_weight()
        for v in col:
            w = w + _box_weight(datum, v)
        weights[col] = w
    lowering = {i: {} for i in datum.indices}
    for i in datum.indices:
        for col in elements:
            if i in col and i + 1 not in col:
                out = tuple(sorted(set(col) - {i} | {i + 1}))
                lowering[i][col] = out
    return Crystal(datum, elements, weights, lowering, name=f"B(w{k})")


def _c2_fundamental(datum: RootDatum, k: int) -> Crystal:
    if k == 1:
        elements = ["a1", "a2", "a3", "a4"]
        lowering = {1: {"a1": "a2", "a3": "a4"}, 2: {"a2": "a3"}}
    else:
        elements = ["b1", "b2", "b3", "b4", "b5"]
        lowering = {1: {"b2": "b3", "b3": "b4"}, 2: {"b1": "b2", "b4": "b5"}}
    weights = {elements[0]: datum.fundamental_weight(k)}
    alpha = {i: datum.weight_of_root(datum.simple_root(i)) for i in datum.indices}
    changed = True
    while changed:
        changed = False
        for i, fmap in lowering.items():
            for b, b2 in fmap.items():
                if b in weights and b2 not in weights:
                    weights[b2] = weights[b] - alpha[i]
                    changed = True
    return Crystal(datum, elements, weights, lowering, name=f"B(w{k})")


def build_fundamental(datum: RootDatum, i: int) -> Crystal:
    """The fundamental crystal B(omega_i) for supported Cartan data."""
    datum._check_index(i)
    if _is_type_a(datum):
        return _type_a_fundamental(datum, i)
    if _is_c2(datum):
        return _c2_fundamental(datum, i)
    raise ValueError(
        f"no built-in fundamental crystals for datum {datum.name or datum.cartan}; "
        "register one from a data file")


def crystal_from_dict(datum: RootDatum, data: dict, name: str = "") -> Crystal:
    """Load a crystal from {"weight", "elements", "wt", "f"} and validate it."""
    elements = list(data["elements"])
    weights = {b: Weight(tuple(int(c) for c in data["wt"][b])) for b in elements}
    lowering = {int(i): dict(fmap) for i, fmap in data["f"].items()}
    for i in lowering:
        datum._check_index(i)
    crystal = Crystal(datum, elements, weights, lowering,
                      name=name or "B(file)", validate=True)
    declared = Weight(tuple(int(c) for c in data["weight"]))
    if not crystal.is_connected():
        raise ValueError("crystal data file is not connected")
    if crystal.highest_weight != declared:
        raise ValueError("declared weight does not match the highest weight")
    return crystal


def crystal_from_file(datum: RootDatum, path: str, name: str = "") -> Crystal:
    with open(path) as fh:
        return crystal_from_dict(datum, json.load(fh), name=name or path)


# -- the context: one algebra, one convention, shared caches -------------------

class CrystalContext:
    """Builds and caches the crystals of one Cartan datum under one convention.

    All caches are filled on first use and shared read-only afterwards:
    fundamental crystals, connected realizations of highest weight crystals
    (as components of products of fundamentals, indices sorted increasingly),
    and the pairwise braiding tables between fundamental crystals.
    """

    def __init__(self, datum: RootDatum, convention=Convention.HONG_KANG):
        self.datum = datum
        self.convention = as_convention(convention)
        self._fund: dict[int, Crystal] = {}
        self._products: dict[tuple, Crystal] = {}
        self._components: dict[tuple, Crystal] = {}
        self._weight_crystals: dict[tuple, Crystal] = {}
        self._braidings: dict[tuple, dict] = {}
        self._crystal_braidings: dict[tuple, dict] = {}
        self._braiding_sources: list = []  # keeps id() keys valid

    def fundamental(self, i: int) -> Crystal:
        if i not in self._fund:
            self._fund[i] = build_fundamental(self.datum, i)
        return self._fund[i]

    def register_fundamental(self, i: int, crystal: Crystal) -> None:
        self.datum._check_index(i)
        if crystal.highest_weight != self.datum.fundamental_weight(i):
            raise ValueError(f"crystal is not a realization of B(omega_{i})")
        self._fund[i] = crystal

    def weight(self, coords) -> Weight:
        if isinstance(coords, Weight):
            return coords
        return Weight(tuple(int(c) for c in coords))

    @property
    def rho(self) -> Weight:
        return self.datum.rho()

    def fundamental_indices(self, lam) -> tuple[int, ...]:
        """The sorted multiset of fundamental indices summing to lam."""
        lam = self.weight(lam)
        if not self.datum.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        return tuple(i for i in self.datum.indices for _ in range(lam.coords[i - 1]))

    def product_crystal(self, funds: tuple[int, ...]) -> Crystal:
        """The full tensor product of fundamental crystals, in the given order."""
        funds = tuple(funds)
        if funds not in self._products:
            if not funds:
                self._products[funds] = trivial_crystal(self.datum)
            else:
                self._products[funds] = tensor(
                    [self.fundamental(i) for i in funds], self.convention)
        return self._products[funds]

    def cartan_of(self, funds: tuple[int, ...]) -> Crystal:
        """The Cartan component of a product of fundamentals, built lazily."""
        funds = tuple(funds)
        if funds not in self._components:
            if not funds:
                self._components[funds] = trivial_crystal(self.datum)
            else:
                self._components[funds] = tensor_component(
                    [self.fundamental(i) for i in funds], self.convention)
        return self._components[funds]

    def weight_crystal(self, lam) -> Crystal:
        """B(lam), realized inside the sorted product of fundamentals."""
        lam = self.weight(lam)
        if lam.coords not in self._weight_crystals:
            comp = self.cartan_of(self.fundamental_indices(lam))
            comp.name = f"B{lam.coords}"
            self._weight_crystals[lam.coords] = comp
        return self._weight_crystals[lam.coords]

    def rho_crystal(self) -> Crystal:
        return self.weight_crystal(self.rho)

    def braiding(self, i: int, j: int) -> dict:
        """Braiding table between fundamental crystals i and j."""
        if (i, j) not in self._braidings:
            self._braidings[(i, j)] = cartan_braiding(
                self.fundamental(i), self.fundamental(j), self.convention)
        return self._braidings[(i, j)]

    def braiding_of(self, c1: Crystal, c2: Crystal) -> dict:
        key = (id(c1), id(c2))
        if key not in self._crystal_braidings:
            self._crystal_braidings[key] = cartan_braiding(c1, c2, self.convention)
            self._braiding_sources.append((c1, c2))
        return self._crystal_braidings[key]
