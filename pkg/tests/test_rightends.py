import pytest

from crystalgraphs import (apply_chain, extremal_element, in_cartan_component,
                           right_end_chain, right_end_inclusion,
                           right_end_tuple, source_identity_holds)

from conftest import A1_, A2_, A3_, B1_, B2_, B3_


def test_single_factor_chain(a2):
    assert right_end_chain(a2, (1,), (A2_,), 1) == A2_


def test_chain_on_known_pair(a2):
    # sigma(a_2 (x) b_2) = b_3 (x) a_1, so the chain from position 1 ends at a_1
    assert right_end_chain(a2, (1, 2), (A2_, B2_), 1) == A1_
    assert right_end_chain(a2, (1, 2), (A2_, B2_), 2) == B2_
    assert apply_chain(a2, (1, 2), (A1_, B3_), 1) is None


def test_right_end_tuple_examples(a2):
    assert right_end_tuple(a2, (A3_, B1_)) == (A2_, B1_)
    assert right_end_tuple(a2, (A1_, B1_)) == (A1_, B1_)
    with pytest.raises(ValueError):
        right_end_tuple(a2, (A1_, B3_))


def test_right_end_inclusion_examples(a2):
    rho = a2.rho_crystal()
    omega1 = a2.datum.fundamental_weight(1)
    omega2 = a2.datum.fundamental_weight(2)
    hw = rho.hw_element()
    # highest weight goes to highest weight
    assert right_end_inclusion(a2, rho, hw, omega2) == (B1_,)
    # R_1(a_3 (x) b_1) = a_2
    P = a2.product_crystal((1, 2))
    assert right_end_inclusion(a2, P, (A3_, B1_), omega1) == (A2_,)
    # outside the Cartan component the value is 0
    assert right_end_inclusion(a2, P, (A1_, B3_), omega1) is None
    with pytest.raises(ValueError):
        right_end_inclusion(a2, rho, hw, a2.weight((2, 0)))


def test_chain_route_equals_inclusion_route(a2, c2_opp):
    # the two computation routes agree on every element of B(rho)
    for ctx in (a2, c2_opp):
        rho = ctx.rho_crystal()
        for b in rho.elements:
            ends = right_end_tuple(ctx, b)
            for i in ctx.datum.indices:
                via_inclusion = right_end_inclusion(
                    ctx, rho, b, ctx.datum.fundamental_weight(i))
                assert via_inclusion == (ends[i - 1],)


def test_membership_chain_equals_component(a2, c2_opp):
    for ctx in (a2, c2_opp):
        for funds in ((1, 2), (2, 1), (1, 1, 2)):
            P = ctx.product_crystal(funds)
            comp = set(ctx.cartan_of(funds).elements)
            for elem in P.elements:
                assert in_cartan_component(ctx, funds, elem) == (elem in comp)


def test_extremal_tuples(a2, c2, a2_weyl):
    from crystalgraphs.weyl import WeylGroup
    for ctx in (a2, c2):
        W = WeylGroup.generate(ctx.datum)
        rho = ctx.rho_crystal()
        for w in W:
            b = extremal_element(rho, w)
            expected = tuple(extremal_element(ctx.fundamental(i), w)
                             for i in ctx.datum.indices)
            assert right_end_tuple(ctx, b) == expected == b


def test_right_ends_stable_on_fundamental_factors(a2):
    # a right-end tuple is componentwise a fixed point
    rho = a2.rho_crystal()
    for b in rho.elements:
        ends = right_end_tuple(a2, b)
        for i in a2.datum.indices:
            assert right_end_chain(a2, (i,), (ends[i - 1],), 1) == ends[i - 1]


def test_right_end_of_composite_weight(a2, a2_weyl):
    # R with respect to rho on B(2 rho) sends extremal to extremal
    two_rho = a2.weight((2, 2))
    big = a2.weight_crystal(two_rho)
    rho = a2.rho_crystal()
    for w in a2_weyl:
        b = extremal_element(big, w)
        end = right_end_inclusion(a2, big, b, a2.datum.rho())
        assert end == extremal_element(rho, w)


def test_source_identity_exhaustive(a2, c2_opp):
    cases = [(a2, a2.datum.fundamental_weight(1)),
             (c2_opp, c2_opp.datum.fundamental_weight(2))]
    for ctx, lam in cases:
        rho = ctx.rho_crystal()
        lam_funds = ctx.fundamental_indices(lam)
        rho_funds = tuple(ctx.datum.indices)
        checked = 0
        for c in rho.elements:
            for b in ctx.weight_crystal(lam).elements:
                if in_cartan_component(ctx, rho_funds + lam_funds, c + b):
                    assert source_identity_holds(ctx, c, lam, b)
                    checked += 1
        assert checked > 0
