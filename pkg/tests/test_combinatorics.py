import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym.combinatorics import (
    SkewShape,
    Tableau,
    blocks,
    coarsenings,
    concatenations,
    conjugate,
    conjugate_partition,
    dominance_leq,
    enumerate_compositions,
    hook_decompositions,
    is_hook,
    is_yamanouchi,
    kostka,
    lp,
    m_power,
    parse_compact_word,
    partitions,
    reading_word,
    refinements,
    refines,
    reverse,
    ribbon_shape,
    ribbon_tableau_from_word,
    run_factorization,
    semistandard_tableaux,
    sign,
    word_content,
    word_shape,
)

compositions = st.lists(st.integers(1, 4), min_size=1, max_size=6).map(tuple).filter(lambda c: sum(c) <= 9)


def brute_refines(coarse, fine):
    # try every way of cutting `fine` into len(coarse) consecutive blocks
    fine = tuple(fine)
    for cuts in itertools.combinations(range(1, len(fine)), len(coarse) - 1):
        bounds = (0, *cuts, len(fine))
        if tuple(sum(fine[a:b]) for a, b in zip(bounds, bounds[1:])) == tuple(coarse):
            return True
    return False


def brute_conjugate(comp):
    """Column lengths of the ribbon, read right to left, from the drawn boxes."""
    shape = ribbon_shape(comp)
    cols = {}
    for r, c in shape.boxes():
        cols[c] = cols.get(c, 0) + 1
    return tuple(cols[c] for c in sorted(cols, reverse=True))


class TestCompositions:
    def test_sign_and_m_power(self):
        assert sign((2, 1)) == -1
        assert sign((1, 1, 1)) == 1
        assert m_power((1, 2, 1)) == 4
        assert m_power(()) == 1

    @pytest.mark.parametrize(
        "comp, expected",
        [((3,), (1, 1, 1)), ((1, 2), (1, 2)), ((1, 3), (1, 1, 2)), ((2, 1), (2, 1)), ((1, 2, 1), (2, 2))],
    )
    def test_conjugate(self, comp, expected):
        assert conjugate(comp) == expected
        assert brute_conjugate(comp) == expected

    @pytest.mark.parametrize(
        "coarse, fine, expected",
        [((3,), (1, 2), True), ((1, 2), (2, 1), False), ((2, 2), (1, 1, 2), True)],
    )
    def test_refines(self, coarse, fine, expected):
        assert refines(coarse, fine) is expected
        assert brute_refines(coarse, fine) is expected

    def test_concatenations(self):
        assert concatenations((1,), (2,)) == ((1, 2), (3,))
        assert concatenations((1,), (1, 1)) == ((1, 1, 1), (2, 1))
        assert concatenations((2, 1), (1, 3)) == ((2, 1, 1, 3), (2, 2, 3))

    def test_families(self):
        assert set(enumerate_compositions(4, "C")) == {(2, 1, 1), (1, 2, 1), (1, 1, 1, 1)}
        assert set(enumerate_compositions(3, "all")) == {(3,), (2, 1), (1, 2), (1, 1, 1)}
        assert set(enumerate_compositions(4, "C_prime")) == {(4,), (2, 2)}
        assert enumerate_compositions(0, "all") == ((),)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_family_sizes_and_predicates(self, n):
        allc = enumerate_compositions(n, "all")
        assert len(allc) == 2 ** (n - 1) == len(set(allc))
        assert set(enumerate_compositions(n, "C")) == {
            c for c in allc if set(c) <= {1, 2} and c[-1] == 1
        }
        assert set(enumerate_compositions(n, "C_prime")) == {c for c in allc if min(c) >= 2}
        assert set(enumerate_compositions(n, "C_double_prime")) == {
            c for c in allc if set(c) <= {1, 2} and c[0] == 1 and c[-1] == 1
        }

    def test_refinements_are_exactly_the_refining_compositions(self):
        for comp in enumerate_compositions(5):
            assert set(refinements(comp)) == {j for j in enumerate_compositions(5) if refines(comp, j)}
            assert set(coarsenings(comp)) == {j for j in enumerate_compositions(5) if refines(j, comp)}

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            enumerate_compositions(3, "nope")


@given(compositions)
def test_conjugate_is_an_involution(comp):
    assert conjugate(conjugate(comp)) == comp
    assert conjugate(comp) == brute_conjugate(comp)


@given(compositions, compositions)
def test_refinement_dualities(a, b):
    if sum(a) != sum(b):
        return
    r = refines(a, b)
    assert r == brute_refines(a, b)
    assert r == refines(conjugate(b), conjugate(a))
    assert r == refines(reverse(a), reverse(b))


@settings(max_examples=200)
@given(st.lists(st.integers(1, 2), min_size=1, max_size=12).map(tuple).filter(lambda c: sum(c) <= 12))
def test_ones_count_from_conjugate_length(comp):
    n = sum(comp)
    assert comp.count(1) == n + 2 - 2 * len(conjugate(comp))


class TestHooks:
    def test_h3(self):
        got = {d.result() for d in hook_decompositions(relative_to=(3,))}
        assert got == {(3,), (1, 2), (1, 1, 1)}

    def test_h12_display(self):
        ds = hook_decompositions(relative_to=(1, 2))
        shown = {(d.result(), str(d)) for d in ds}
        assert shown == {((3,), "1▷2"), ((2, 1), "1▷11"), ((1, 2), "1◁2"), ((1, 1, 1), "1◁11")}

    def test_decompositions_of_two(self):
        assert sorted(str(d) for d in hook_decompositions((2,))) == ["1▷1", "2"]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_every_decomposition_rebuilds_its_target(self, n):
        for target in enumerate_compositions(n):
            ds = hook_decompositions(target)
            assert ds, target
            for d in ds:
                assert d.result() == target
                assert all(is_hook(h) for h in d.hooks)

    @pytest.mark.parametrize("sizes", [(1, 2), (2, 2), (3, 1), (1, 1, 2)])
    def test_block_filter_matches_forward_enumeration(self, sizes):
        forward = {(d.hooks, d.ops) for d in hook_decompositions(relative_to=sizes)}
        backward = {
            (d.hooks, d.ops)
            for t in enumerate_compositions(sum(sizes))
            for d in hook_decompositions(t, relative_to=sizes)
        }
        assert forward == backward


class TestBlocks:
    def test_lp(self):
        assert lp((1, 2), (3,)) == 2
        assert blocks((1, 1, 2, 1), (2, 3)) == [(1, 1), (2, 1)]
        assert lp((1, 1, 2, 1), (2, 3)) == 1
        assert lp((2, 3), (2, 3)) == 6

    def test_lp_requires_refinement(self):
        with pytest.raises(ValueError):
            lp((2, 1), (1, 2))


class TestPartitionsAndKostka:
    def test_partition_counts(self):
        assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_dominance(self):
        assert dominance_leq((1, 1, 1), (3,))
        assert not dominance_leq((3,), (1, 1, 1))
        assert dominance_leq((2, 2), (3, 1))

    def test_kostka_examples(self):
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((1, 1), (2,)) == 0
        for lam in partitions(6):
            assert kostka(lam, lam) == 1

    @pytest.mark.parametrize("n", range(1, 7))
    def test_kostka_against_tableau_enumeration(self, n):
        for lam in partitions(n):
            for mu in partitions(n):
                tabs = semistandard_tableaux(SkewShape(lam), mu)
                assert all(t.is_semistandard() and t.content() == mu for t in tabs)
                assert kostka(lam, mu) == len(tabs)

    @given(st.integers(1, 12).flatmap(lambda n: st.sampled_from(partitions(n))))
    def test_conjugate_partition_involution(self, lam):
        assert conjugate_partition(conjugate_partition(lam)) == lam


class TestShapesAndWords:
    def test_ribbon_shapes(self):
        assert str(ribbon_shape((1, 2))) == "21"
        assert str(ribbon_shape((2, 1))) == "22/1"
        for comp in enumerate_compositions(6):
            shape = ribbon_shape(comp)
            assert shape.is_ribbon()
            assert shape.row_lengths_top_down() == comp
            assert shape.size == 6

    def test_non_ribbon(self):
        assert not SkewShape((2, 2)).is_ribbon()
        assert not SkewShape((2, 1), (1,)).is_ribbon()

    def test_run_factorization(self):
        rs, tau, _ = run_factorization((1, 2, 1, 2, 1, 3))
        assert rs == [(1, 2), (1, 2), (1, 3)] and tau == (2, 2, 2)
        rs, tau, _ = run_factorization((1, 2, 1, 2, 3))
        assert rs == [(1, 2), (1, 2, 3)] and tau == (2, 3)

    def test_yamanouchi(self):
        assert is_yamanouchi((1, 2, 1, 2, 1, 3))
        assert not is_yamanouchi((1, 2, 2))
        assert is_yamanouchi((1,))

    def test_compact_words(self):
        assert parse_compact_word("[2][3]") == (1, 2, 1, 2, 3)
        assert parse_compact_word("[2](134)") == (1, 2, 1, 3, 4)
        word = parse_compact_word("α[2][2]1", {"α": "[2][3]"})
        assert word == (1, 2, 1, 2, 3, 1, 2, 1, 2, 1)
        assert word_content(word) == (5, 4, 1)
        assert parse_compact_word("[2,4]1") == (2, 3, 4, 1)

    @pytest.mark.parametrize("bad", ["[0]", "[3,2]", "(1", "x", "[2]]"])
    def test_compact_word_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_compact_word(bad)

    def test_tableau_requires_full_filling(self):
        with pytest.raises(ValueError):
            Tableau(SkewShape((2,)), {(1, 1): 1})


@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_word_to_tableau_to_word(word):
    tab = ribbon_tableau_from_word(word)
    assert reading_word(tab) == tuple(word)
    assert tab.shape == word_shape(word)
    assert tab.shape.is_ribbon()


@pytest.mark.parametrize("n", range(1, 8))
def test_ribbon_tableau_to_word_to_tableau(n):
    for comp in enumerate_compositions(n):
        shape = ribbon_shape(comp)
        for mu in partitions(n):
            if len(mu) > 4:
                continue
            for tab in semistandard_tableaux(shape, mu):
                again = ribbon_tableau_from_word(reading_word(tab))
                assert again.shape == shape
                assert dict(again.entries) == dict(tab.entries)


@given(st.lists(st.integers(1, 5), min_size=1, max_size=10))
def test_yamanouchi_contents_are_partitions(word):
    if is_yamanouchi(word):
        c = word_content(word)
        assert list(c) == sorted(c, reverse=True)
