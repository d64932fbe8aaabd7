from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from gbdq.perm import (
    Permutation,
    Transposition,
    compose,
    gb_cover,
    gb_leq,
    gb_rank,
    inversion_length,
    k_bruhat_cover,
    relabel,
    transposition,
    up_down_sets,
)

e = Permutation.identity()
ZETA = Permutation.parse("(1,4,5,3,2,6)")


def perm_on(points):
    return st.permutations(points).map(lambda img: Permutation(dict(zip(points, img))))


SMALL = [Permutation(dict(zip(range(1, 5), img))) for img in permutations(range(1, 5))]


def test_compose_identity_and_involution():
    p = Permutation.parse("(2,5,3)")
    assert compose(e, p) == p == compose(p, e)
    assert compose(transposition(2, 3), transposition(2, 3)) == e


def test_compose_matches_pointwise_evaluation():
    p = compose(Permutation.parse("(2,5,3)"), transposition(2, 3))
    assert p == transposition(3, 5)
    assert [p(x) for x in (2, 3, 5)] == [2, 5, 3]


def test_parse_roundtrip():
    assert str(ZETA) == "(1,4,5,3,2,6)"
    assert ZETA.one_line_string() == "462531"
    assert Permutation.parse("456123") == Permutation.parse("(1,4)(2,5)(3,6)")
    assert Permutation.parse(ZETA.one_line_string()) == ZETA


def test_parse_rejects_bad_text():
    with pytest.raises(ValueError):
        Permutation.parse("(1,2,1)")
    with pytest.raises(ValueError):
        Transposition.of(3, 3)


def test_inversion_length():
    assert inversion_length(e) == 0
    assert inversion_length(transposition(4, 5)) == 1
    assert inversion_length(Permutation.parse("456123")) == 9
    assert inversion_length(Permutation.parse("142635")) == 4


def test_up_down_sets():
    assert up_down_sets(e) == (frozenset(), frozenset())
    assert up_down_sets(transposition(2, 7)) == ({2}, {7})
    # 5 -> 3 and 6 -> 1 both move down
    assert up_down_sets(ZETA) == ({1, 2, 4}, {3, 5, 6})


def test_gb_leq_examples():
    assert gb_leq(e, ZETA)
    assert gb_leq(transposition(2, 3), ZETA)
    assert not gb_leq(transposition(1, 2), ZETA)
    assert not gb_leq(transposition(1, 2), e)


def test_gb_cover_examples():
    assert gb_cover(e, transposition(2, 3)) == 3
    assert gb_cover(transposition(2, 3), Permutation.parse("(2,5,3)")) == 5
    assert gb_cover(e, Permutation.parse("(2,5,3)")) is None
    assert gb_rank(ZETA) == 5


def test_k_bruhat_cover_examples():
    for k in range(1, 5):
        s = transposition(k, k + 1)
        assert k_bruhat_cover(e, s, k) == k + 1
    u = Permutation.parse("142635")
    assert k_bruhat_cover(u, u, 3) is None
    w = compose(transposition(2, 3), u)
    assert inversion_length(w) == inversion_length(u) + 1
    assert k_bruhat_cover(u, w, 3) == 3


def test_relabel_examples():
    p = Permutation.parse("(1,4,2)(3,5)")
    assert relabel(p, [1, 3, 5, 7, 9]) == Permutation.parse("(1,7,3)(5,9)")
    assert relabel(p, range(1, 6)) == p
    assert relabel(transposition(1, 2), [4, 9]) == transposition(4, 9)
    with pytest.raises(ValueError):
        relabel(p, [1, 2, 3])


@given(perm_on([1, 2, 3, 4, 5]))
def test_gb_leq_reflexive(z):
    assert gb_leq(z, z)


def test_gb_leq_is_a_partial_order_on_s4():
    leq = {(x, y): gb_leq(x, y) for x in SMALL for y in SMALL}
    for x in SMALL:
        for y in SMALL:
            if x != y and leq[x, y]:
                assert not leq[y, x]
            for z in SMALL:
                if leq[x, y] and leq[y, z]:
                    assert leq[x, z]


@given(perm_on([1, 2, 3, 4, 5]), perm_on([1, 2, 3, 4, 5]))
def test_relabel_is_a_homomorphism(p, q):
    idx = [2, 3, 5, 8, 13]
    assert relabel(compose(p, q), idx) == compose(relabel(p, idx), relabel(q, idx))


@given(perm_on([1, 2, 3, 4, 5]), perm_on([1, 2, 3, 4, 5]))
def test_relabel_preserves_gb_order(p, q):
    idx = [2, 4, 5, 9, 10]
    assert gb_leq(p, q) == gb_leq(relabel(p, idx), relabel(q, idx))
