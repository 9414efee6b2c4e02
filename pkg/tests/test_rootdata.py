import json

import pytest
from hypothesis import given, strategies as st

from crystalgraphs import (NonFiniteTypeError, RootVector, Weight,
                           builtin_datum, datum_from_dict, load_datum,
                           resolve_datum)
from crystalgraphs.weyl import WeylGroup

A2 = builtin_datum("A2")
C2 = builtin_datum("C2")


def w(*coords):
    return Weight(tuple(coords))


def r(*coords):
    return RootVector(tuple(coords))


def test_pairing_delta():
    assert A2.pairing(A2.fundamental_weight(1), 1) == 1
    assert A2.pairing(A2.fundamental_weight(1), 2) == 0


def test_pairing_of_simple_root():
    assert A2.pairing(A2.simple_root(1), 2) == -1
    assert C2.pairing(C2.simple_root(2), 1) == -2


def test_pairing_index_range():
    with pytest.raises(IndexError):
        A2.pairing(A2.rho(), 3)


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=2),
       st.lists(st.integers(-20, 20), min_size=2, max_size=2),
       st.sampled_from([1, 2]))
def test_pairing_linear(a, b, i):
    lam, mu = w(*a), w(*b)
    assert A2.pairing(lam + mu, i) == A2.pairing(lam, i) + A2.pairing(mu, i)


def test_reflect_weight_examples():
    assert A2.reflect_weight(1, w(0, 1)) == w(0, 1)
    # s_1 w_1 = w_1 - alpha_1
    assert A2.reflect_weight(1, w(1, 0)) == w(-1, 1)


@given(st.lists(st.integers(-10, 10), min_size=2, max_size=2),
       st.sampled_from([1, 2]))
def test_reflect_weight_involution(coords, i):
    lam = w(*coords)
    assert C2.reflect_weight(i, C2.reflect_weight(i, lam)) == lam


def test_reflect_by_root_long_root_a2():
    # oracle: t_{a1+a2} = s_1 s_2 s_1
    gamma = r(1, 1)
    lam = w(1, 0)
    composed = lam
    for i in (1, 2, 1):
        composed = A2.reflect_weight(i, composed)
    assert A2.reflect_by_root(gamma, lam) == composed == w(0, -1)


def test_reflect_by_root_simple_case():
    for i in (1, 2):
        for lam in (w(1, 0), w(2, -3), w(1, 1)):
            assert A2.reflect_by_root(A2.simple_root(i), lam) == A2.reflect_weight(i, lam)


def test_reflect_by_root_fixed_point():
    # (w_2, a_1^vee) = 0
    assert A2.reflect_by_root(A2.simple_root(1), w(0, 1)) == w(0, 1)


def test_reflect_by_root_rejects_non_roots():
    with pytest.raises(ValueError):
        A2.reflect_by_root(r(2, 0), w(1, 0))


def test_supports():
    assert A2.supp_root(r(1, 1)) == {1, 2}
    assert A2.supp_weight(w(0, 1)) == {2}
    assert A2.supp_weight(w(0, 0)) == frozenset()
    for datum in (A2, C2):
        for gamma in datum.positive_roots():
            support = datum.supp_root(gamma)
            assert support and support <= set(datum.indices)


def test_dominance():
    assert A2.is_dominant(A2.rho())
    assert A2.dominant_diff(A2.rho(), w(1, 0))
    assert not A2.dominant_diff(w(1, 0), w(0, 1))


def test_positive_roots_counts():
    a2_roots = A2.positive_roots()
    assert set(a2_roots) == {r(1, 0), r(0, 1), r(1, 1)}
    assert len(C2.positive_roots()) == 4
    assert builtin_datum("A1").positive_roots() == (RootVector((1,)),)


def test_positive_roots_match_reflections():
    for datum in (A2, C2, builtin_datum("A3")):
        group = WeylGroup.generate(datum)
        assert len(group.reflections()) == len(datum.positive_roots())


def test_non_finite_type_caught():
    # affine A1: the closure never stops growing
    data = {"rank": 2, "cartan": [[2, -2], [-2, 2]], "symmetrizer": [1, 1]}
    datum = datum_from_dict(data)
    with pytest.raises(NonFiniteTypeError):
        datum.positive_roots()


def test_datum_validation():
    with pytest.raises(ValueError):
        datum_from_dict({"rank": 2, "cartan": [[2, 1], [-1, 2]], "symmetrizer": [1, 1]})
    with pytest.raises(ValueError):
        datum_from_dict({"rank": 2, "cartan": [[2, -1], [0, 2]], "symmetrizer": [1, 1]})
    with pytest.raises(ValueError):
        datum_from_dict({"rank": 2, "cartan": [[2, -2], [-1, 2]], "symmetrizer": [1, 1]})


def test_datum_file_roundtrip(tmp_path):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({
        "rank": 2, "cartan": [[2, -2], [-1, 2]], "symmetrizer": [1, 2],
    }))
    datum = load_datum(str(path))
    assert datum.cartan == C2.cartan
    assert resolve_datum(str(path)).rank == 2
    assert resolve_datum("C2").name == "C2"
    with pytest.raises((ValueError, OSError)):
        resolve_datum("Z9")
