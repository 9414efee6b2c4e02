"""Right ends of crystal elements, computed by chains of adjacent braidings.

Elements of highest weight crystals are flat tuples in a product of
fundamental crystals, so every computation below reduces to the cached
pairwise braiding tables between fundamentals.  The inclusion realization
B(lam) -> B(lam - mu) (x) B(mu) is also provided; it serves as an independent
second route for the same values.
"""

from __future__ import annotations

from .crystal import (Crystal, CrystalContext, canonical_isomorphism,
                      cartan_component, tensor)


def apply_chain(ctx: CrystalContext, funds, elem, k: int):
    """Apply the adjacent braidings at positions k, k+1, ..., n-1 (1-based).

    Returns the transformed (funds, elem) pair, or None as soon as a braiding
    gives 0.  The factor starting at position k ends up rightmost.
    """
    funds = list(funds)
    elem = list(elem)
    n = len(elem)
    if not 1 <= k <= n:
        raise IndexError(f"chain start {k} outside 1..{n}")
    for pos in range(k - 1, n - 1):
        i, j = funds[pos], funds[pos + 1]
        out = ctx.braiding(i, j)[(elem[pos], elem[pos + 1])]
        if out is None:
            return None
        elem[pos], elem[pos + 1] = out
        funds[pos], funds[pos + 1] = j, i
    return tuple(funds), tuple(elem)


def right_end_chain(ctx: CrystalContext, funds, elem, k: int):
    """The rightmost factor after the chain starting at position k; None for 0."""
    moved = apply_chain(ctx, funds, elem, k)
    if moved is None:
        return None
    return moved[1][-1]


def in_cartan_component(ctx: CrystalContext, funds, elem) -> bool:
    """Cartan membership test: every chain k = 1..n-1 must stay nonzero."""
    n = len(elem)
    for k in range(1, n):
        if apply_chain(ctx, funds, elem, k) is None:
            return False
    return True


def right_end_tuple(ctx: CrystalContext, elem) -> tuple:
    """(R_1(b), ..., R_r(b)) for b a Cartan element of B(w1) (x) ... (x) B(wr)."""
    funds = tuple(ctx.datum.indices)
    if len(elem) != len(funds):
        raise ValueError(f"expected a {len(funds)}-factor element, got {elem!r}")
    if not in_cartan_component(ctx, funds, elem):
        raise ValueError(f"{elem!r} is outside the Cartan component")
    out = []
    for k in funds:
        end = right_end_chain(ctx, funds, elem, k)
        if end is None:
            raise ValueError(f"{elem!r} is outside the Cartan component")
        out.append(end)
    return tuple(out)


def right_end_inclusion(ctx: CrystalContext, crystal: Crystal, b, mu):
    """R_mu(b) through the inclusion B(lam) -> B(lam - mu) (x) B(mu).

    `crystal` is either a connected crystal or a tensor product with recorded
    factors; elements outside the Cartan component map to None (the value 0).
    """
    mu = ctx.weight(mu)
    if not crystal.is_connected():
        comp = cartan_component(crystal)
        if b not in comp:
            return None
        total = comp.highest_weight
        sorted_real = ctx.weight_crystal(total)
        b = canonical_isomorphism(comp, sorted_real)[b]
        crystal = sorted_real
    lam = crystal.highest_weight
    if not (ctx.datum.is_dominant(mu) and ctx.datum.dominant_diff(lam, mu)):
        raise ValueError(f"weights do not satisfy the right-end precondition: "
                         f"{lam} vs {mu}")
    left = ctx.weight_crystal(lam - mu)
    right = ctx.weight_crystal(mu)
    pair = tensor((left, right), ctx.convention)
    comp = cartan_component(pair)
    iso = canonical_isomorphism(crystal, comp)
    return iso[b][1]


def source_identity_holds(ctx: CrystalContext, c_elem, lam, b_elem) -> bool:
    """Check R_i(c (x) b) = R_i(c_i (x) b) for all i, for c in B(rho).

    c is given by its flat tuple in the fundamentals realization of B(rho)
    and b by its flat tuple in the realization of B(lam).
    """
    lam_funds = ctx.fundamental_indices(lam)
    rho_funds = tuple(ctx.datum.indices)
    whole_funds = rho_funds + lam_funds
    whole = tuple(c_elem) + tuple(b_elem)
    tuple_ends = right_end_tuple(ctx, c_elem)
    for i in ctx.datum.indices:
        lhs = right_end_chain(ctx, whole_funds, whole, i)
        rhs = right_end_chain(ctx, (i,) + lam_funds,
                              (tuple_ends[i - 1],) + tuple(b_elem), 1)
        if lhs != rhs or lhs is None:
            return False
    return True
