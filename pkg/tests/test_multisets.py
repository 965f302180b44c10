from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chromsym.multisets import MultiMap, WordMultiset

words = st.tuples(*[st.integers(1, 3)] * 3)
mults = st.fractions(min_value=0, max_value=5, max_denominator=8)
multisets = st.dictionaries(words, mults, max_size=6).map(WordMultiset)


def test_basic_operations():
    a = WordMultiset({(1, 2): 2, (1, 1): Fraction(1, 2)})
    b = WordMultiset([(1, 2), (2, 1)])
    assert a.norm() == Fraction(5, 2)
    assert (a + b)[(1, 2)] == 3
    assert (a - b) == WordMultiset({(1, 2): 1, (1, 1): Fraction(1, 2)})
    assert (a & b) == WordMultiset({(1, 2): 1})
    assert (3 * b).norm() == 6
    assert b <= a + b and not a <= b
    assert a.filter(lambda w: w[1] == 2) == WordMultiset({(1, 2): 2})
    assert WordMultiset({(1,): 0}).support() == set()


def test_negative_multiplicities_rejected():
    with pytest.raises(ValueError):
        WordMultiset({(1,): -1})
    with pytest.raises(ValueError):
        WordMultiset([(1,)]) * -1


@given(multisets, multisets)
def test_norm_is_additive(a, b):
    assert (a + b).norm() == a.norm() + b.norm()


@given(multisets, mults)
def test_scaling(a, r):
    assert (r * a).norm() == r * a.norm()


@given(multisets, multisets)
def test_difference_and_meet_rebuild(a, b):
    assert (a - b) + (a & b) == a
    assert a & b <= a and a & b <= b


def test_multimap_image_and_injection():
    f = MultiMap({
        (1, 2): WordMultiset({(1, 2, 1): Fraction(1, 2), (2, 1, 1): Fraction(1, 2)}),
        (2, 1): WordMultiset({(1, 2, 1): 1}),
    })
    src = WordMultiset({(1, 2): 2, (2, 1): 1})
    img = f.image(src)
    assert img == WordMultiset({(1, 2, 1): 2, (2, 1, 1): 1})
    assert img.norm() == src.norm()
    assert f.is_multi_injection(src, img)
    small = WordMultiset({(1, 2, 1): 1, (2, 1, 1): 1})
    assert f.violations(src, small) == [((1, 2, 1), 2, 1)]
