import json

import pytest

from crystalgraphs import (Convention, Crystal, Weight, builtin_datum,
                           canonical_isomorphism, cartan_braiding,
                           cartan_component, crystal_from_dict,
                           crystal_from_file, extremal_element, tensor,
                           tensor_component, trivial_crystal, weyl_action,
                           weyl_action_word)
from crystalgraphs.crystal import _tensor_phi_eps

from conftest import A1_, A2_, A3_, B1_, B2_, B3_


def test_type_a_fundamentals(a2):
    b_w1 = a2.fundamental(1)
    assert list(b_w1.elements) == [A1_, A2_, A3_]
    assert b_w1.f(1, A1_) == A2_ and b_w1.f(2, A2_) == A3_
    b_w2 = a2.fundamental(2)
    assert b_w2.f(2, B1_) == B2_ and b_w2.f(1, B2_) == B3_
    assert b_w2.f(1, B1_) is None


def test_rank_one_and_higher_columns():
    a1 = builtin_datum("A1")
    chain = __import__("crystalgraphs").build_fundamental(a1, 1)
    assert len(chain) == 2
    a3 = builtin_datum("A3")
    b_w2 = __import__("crystalgraphs").build_fundamental(a3, 2)
    assert len(b_w2) == 6  # 4 choose 2


def test_string_lengths(a2, c2):
    b_w1 = a2.fundamental(1)
    assert b_w1.phi(1, A1_) == 1 and b_w1.epsilon(1, A1_) == 0
    c_w1 = c2.fundamental(1)
    assert c_w1.epsilon(1, "a4") == 1
    hw = a2.rho_crystal().hw_element()
    assert all(a2.rho_crystal().epsilon(i, hw) == 0 for i in (1, 2))


def test_c2_fundamental_chains(c2):
    c_w1 = c2.fundamental(1)
    assert [c_w1.f(i, b) for i, b in ((1, "a1"), (2, "a2"), (1, "a3"))] == \
        ["a2", "a3", "a4"]
    c_w2 = c2.fundamental(2)
    chain = [(2, "b1"), (1, "b2"), (1, "b3"), (2, "b4")]
    assert [c_w2.f(i, b) for i, b in chain] == ["b2", "b3", "b4", "b5"]
    assert c_w2.f(1, "b1") is None and c_w2.f(2, "b2") is None


def test_opposite_is_reversed_hong_kang(a2, c2):
    # applying the opposite rule equals reversing, applying hong-kang, reversing
    for ctx in (a2, c2):
        f1, f2 = ctx.fundamental(1), ctx.fundamental(2)
        fwd = tensor((f1, f2), Convention.OPPOSITE)
        rev = tensor((f2, f1), Convention.HONG_KANG)
        for (x, y) in fwd.elements:
            for i in ctx.datum.indices:
                for lower in (True, False):
                    a = fwd.f(i, (x, y)) if lower else fwd.e(i, (x, y))
                    b = rev.f(i, (y, x)) if lower else rev.e(i, (y, x))
                    assert a == (None if b is None else (b[1], b[0]))


def test_c2_fundamental_weights(c2):
    c_w1 = c2.fundamental(1)
    assert c_w1.wt("a1") == Weight((1, 0))
    assert c_w1.wt("a4") == Weight((-1, 0))
    c_w2 = c2.fundamental(2)
    assert c_w2.wt("b3") == Weight((0, 0))
    assert c_w2.wt("b5") == Weight((0, -1))


def test_crystal_validation_catches_bad_weights():
    datum = builtin_datum("A1")
    with pytest.raises(ValueError):
        Crystal(datum, ["x", "y"], {"x": Weight((1,)), "y": Weight((1,))},
                {1: {"x": "y"}})


def test_tensor_rule_opposite_c2(c2_opp):
    P = tensor((c2_opp.fundamental(1), c2_opp.fundamental(2)),
               Convention.OPPOSITE)
    assert P.f(1, ("a1", "b1")) == ("a2", "b1")
    assert P.f(2, ("a1", "b1")) == ("a1", "b2")
    assert P.f(1, ("a1", "b2")) == ("a1", "b3")


def test_tensor_rule_hong_kang_a2(a2):
    P = tensor((a2.fundamental(1), a2.fundamental(2)), Convention.HONG_KANG)
    assert P.f(1, (A1_, B2_)) == (A2_, B2_)
    # the highest weight of the Cartan component kills every raising operator
    hw = (A1_, B1_)
    assert P.e(1, hw) is None and P.e(2, hw) is None


def test_lowering_stays_nonzero_up_to_phi(a2):
    B = a2.rho_crystal()
    hw = B.hw_element()
    k = B.phi(1, hw)
    cur = hw
    for _ in range(k):
        cur = B.f(1, cur)
        assert cur is not None
    assert B.f(1, cur) is None


def test_tensor_phi_eps_closed_form_matches_walk(a2, c2_opp):
    for ctx, funds in ((a2, (1, 2)), (c2_opp, (1, 2)), (c2_opp, (2, 1))):
        factors = tuple(ctx.fundamental(i) for i in funds)
        P = tensor(factors, ctx.convention)
        for elem in P.elements:
            for i in ctx.datum.indices:
                phi, eps = _tensor_phi_eps(factors, ctx.convention, elem, i)
                assert phi == P.phi(i, elem)
                assert eps == P.epsilon(i, elem)


def test_weyl_action_examples(a2):
    b_w1 = a2.fundamental(1)
    assert weyl_action(b_w1, 1, A1_) == A2_
    # zero pairing leaves the element fixed
    assert weyl_action(a2.fundamental(2), 1, B1_) == B1_


def test_weyl_action_involution_on_rho(a2):
    B = a2.rho_crystal()
    for b in B.elements:
        for i in (1, 2):
            assert weyl_action(B, i, weyl_action(B, i, b)) == b
            # wt(s_i b) = s_i wt(b)
            assert B.wt(weyl_action(B, i, b)) == a2.datum.reflect_weight(i, B.wt(b))


def test_extremal_elements(a2, a2_weyl):
    b_w1 = a2.fundamental(1)
    assert extremal_element(b_w1, a2_weyl.identity) == A1_
    assert extremal_element(b_w1, a2_weyl.element_from_word((1,))) == A2_
    assert extremal_element(b_w1, a2_weyl.element_from_word((2, 1))) == A3_
    # independent of the reduced word chosen for the longest element
    B = a2.rho_crystal()
    assert (weyl_action_word(B, (1, 2, 1), B.hw_element())
            == weyl_action_word(B, (2, 1, 2), B.hw_element()))
    for w in a2_weyl:
        b = extremal_element(B, w)
        assert B.wt(b) == a2_weyl.act_on_weight(w, a2.datum.rho())


def test_cartan_component_sizes(a2, c2_opp):
    P = tensor((a2.fundamental(1), a2.fundamental(2)), a2.convention)
    assert len(cartan_component(P)) == 8
    assert len(c2_opp.rho_crystal()) == 16
    B = a2.fundamental(1)
    assert cartan_component(tensor((B,), a2.convention)).elements == tuple(
        (b,) for b in B.elements)


def test_tensor_component_matches_full_product_component(a2):
    factors = (a2.fundamental(1), a2.fundamental(1), a2.fundamental(2))
    lazy = tensor_component(factors, a2.convention)
    full = cartan_component(tensor(factors, a2.convention))
    assert set(lazy.elements) == set(full.elements)
    lazy.validate()


def test_canonical_isomorphism(a2):
    B = a2.rho_crystal()
    iso = canonical_isomorphism(B, B)
    assert all(iso[b] == b for b in B.elements)
    other = tensor_component((a2.fundamental(2), a2.fundamental(1)),
                             a2.convention)
    iso = canonical_isomorphism(B, other)
    assert len(iso) == 8
    for b, image in iso.items():
        assert B.wt(b) == other.wt(image)
    with pytest.raises(ValueError):
        canonical_isomorphism(a2.fundamental(1), a2.fundamental(2))


def test_braiding_values(a2, c2_opp):
    t = a2.braiding(1, 2)
    assert t[(A2_, B2_)] == (B3_, A1_)
    assert t[(A1_, B3_)] is None
    t2 = c2_opp.braiding(1, 2)
    assert t2[("a2", "b3")] == ("b1", "a4")


def test_braiding_general_equals_fundamental_table(a2):
    table = cartan_braiding(a2.fundamental(1), a2.fundamental(2), a2.convention)
    assert table == a2.braiding(1, 2)


def test_trivial_crystal(a2):
    B = trivial_crystal(a2.datum)
    assert B.elements == ((),)
    assert B.wt(()).is_zero()
    assert a2.weight_crystal((0, 0)) is a2.cartan_of(())


def test_crystal_file_roundtrip(tmp_path, c2):
    B = c2.fundamental(1)
    data = {
        "weight": [1, 0],
        "elements": list(B.elements),
        "wt": {b: list(B.wt(b).coords) for b in B.elements},
        "f": {str(i): {b: B.f(i, b) for b in B.elements if B.f(i, b)}
              for i in (1, 2)},
    }
    path = tmp_path / "fund.json"
    path.write_text(json.dumps(data))
    loaded = crystal_from_file(c2.datum, str(path))
    assert list(loaded.elements) == list(B.elements)
    assert loaded.f(1, "a1") == "a2"

    ctx2 = type(c2)(c2.datum, c2.convention)
    ctx2.register_fundamental(1, loaded)
    assert ctx2.fundamental(1) is loaded

    bad = dict(data, weight=[0, 1])
    with pytest.raises(ValueError):
        crystal_from_dict(c2.datum, bad)
    broken = dict(data, f={"1": {"a1": "a2"}, "2": {}})
    with pytest.raises(ValueError):
        crystal_from_dict(c2.datum, broken)


def test_crystal_order(a2):
    B = a2.fundamental(1)
    assert B.leq(A3_, A1_) and not B.leq(A1_, A3_)
    assert B.leq(A2_, A2_)
