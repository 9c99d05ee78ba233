from fractions import Fraction

import pytest

from imbalattice import (
    KraftSumNotOne,
    LengthMismatch,
    NegativeDepth,
    NotSorted,
    OrderVerdict,
    ScaleTooSmall,
    SequenceError,
    compare,
    enumerate_universe,
    format_sequence,
    leq,
    parse_components,
    scaled_partial_sums,
    suffix_length,
    validate,
)


def seq(*components):
    return validate(components)


class TestValidate:
    def test_single_leaf(self):
        assert seq(0).components == (0,)

    def test_five_components(self):
        assert seq(1, 2, 3, 4, 4).components == (1, 2, 3, 4, 4)

    def test_kraft_excess_reports_exact_sum(self):
        with pytest.raises(KraftSumNotOne) as info:
            seq(1, 2, 2, 3)
        assert info.value.kraft_sum == Fraction(9, 8)
        assert info.value.deficit == Fraction(-1, 8)

    def test_kraft_deficit_reports_exact_sum(self):
        with pytest.raises(KraftSumNotOne) as info:
            seq(2, 2, 2)
        assert info.value.kraft_sum == Fraction(3, 4)
        assert info.value.deficit == Fraction(1, 4)

    def test_not_sorted(self):
        with pytest.raises(NotSorted):
            seq(2, 1, 1)

    def test_negative_depth(self):
        with pytest.raises(NegativeDepth):
            seq(-1, 1)

    def test_empty(self):
        with pytest.raises(SequenceError):
            validate(())

    def test_single_nonzero_fails_kraft(self):
        with pytest.raises(KraftSumNotOne):
            seq(3)

    def test_accepts_any_iterable(self):
        assert validate([1, 1]) == validate((1, 1))

    def test_depth_bound(self):
        # Kraft equality alone caps the depth at n - 1.
        for n in range(1, 10):
            for l in enumerate_universe(n):
                assert l.last <= n - 1 or n == 1 and l.last == 0


class TestTextSyntax:
    def test_parse(self):
        assert parse_components("1,2,3,4,4") == (1, 2, 3, 4, 4)

    def test_round_trip(self):
        assert format_sequence(seq(1, 2, 3, 4, 4)) == "1,2,3,4,4"
        assert str(seq(0)) == "0"

    @pytest.mark.parametrize("text", ["", "1,,2", "1, 2", "a,b", "1;2"])
    def test_rejects_junk(self, text):
        with pytest.raises(ValueError):
            parse_components(text)

    def test_parse_is_not_validation(self):
        # a parseable but invalid sequence fails only at validate()
        parts = parse_components("2,1,1")
        with pytest.raises(NotSorted):
            validate(parts)


class TestSuffixLength:
    @pytest.mark.parametrize(
        "components, expected",
        [((1, 2, 3, 4, 4), 2), ((2, 2, 2, 2), 4), ((1, 3, 3, 3, 3), 4), ((0,), 1)],
    )
    def test_examples(self, components, expected):
        assert suffix_length(validate(components)) == expected

    def test_even_for_multi_component(self):
        for n in range(2, 10):
            for l in enumerate_universe(n):
                assert suffix_length(l) % 2 == 0


class TestScaledPartialSums:
    def test_pair(self):
        assert scaled_partial_sums(seq(1, 1), 1).sums == (1, 2)

    def test_five_at_eighth_scale(self):
        assert scaled_partial_sums(seq(2, 2, 2, 3, 3), 3).sums == (2, 4, 6, 7, 8)

    def test_caterpillar_at_sixteenth_scale(self):
        assert scaled_partial_sums(seq(1, 2, 3, 4, 4), 4).sums == (8, 12, 14, 15, 16)

    def test_default_scale_is_last(self):
        witness = scaled_partial_sums(seq(2, 2, 2, 3, 3))
        assert witness.scale_exponent == 3

    def test_scale_too_small(self):
        with pytest.raises(ScaleTooSmall):
            scaled_partial_sums(seq(1, 2, 3, 4, 4), 3)

    def test_strictly_increasing_and_kraft_tail(self):
        for n in range(1, 9):
            for l in enumerate_universe(n):
                witness = scaled_partial_sums(l, l.last + 2)
                assert list(witness.sums) == sorted(set(witness.sums))
                assert witness.sums[-1] == 1 << witness.scale_exponent


class TestCompare:
    def test_equal(self):
        l = seq(1, 2, 3, 4, 4)
        assert compare(l, l) is OrderVerdict.EQUAL

    def test_more_balanced(self):
        assert compare(seq(2, 2, 2, 3, 3), seq(1, 3, 3, 3, 3)) is OrderVerdict.MORE_BALANCED

    def test_less_balanced_mirror(self):
        assert compare(seq(1, 3, 3, 3, 3), seq(2, 2, 2, 3, 3)) is OrderVerdict.LESS_BALANCED

    def test_incomparable(self):
        assert (
            compare(seq(2, 2, 2, 3, 4, 5, 5), seq(1, 3, 3, 4, 4, 4, 4))
            is OrderVerdict.INCOMPARABLE
        )

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compare(seq(0), seq(1, 1))
        with pytest.raises(LengthMismatch):
            leq(seq(0), seq(1, 1))

    def test_leq_matches_compare(self):
        for n in range(1, 9):
            pool = enumerate_universe(n).elements
            for a in pool:
                for b in pool:
                    expected = compare(a, b) in (OrderVerdict.EQUAL, OrderVerdict.MORE_BALANCED)
                    assert leq(a, b) == expected

    def test_scale_independence(self):
        for n in range(1, 9):
            pool = enumerate_universe(n).elements
            for a in pool:
                for b in pool:
                    base = max(a.last, b.last)
                    for extra in (1, 3, 7):
                        assert compare(a, b, scale=base + extra) == compare(a, b)


class TestOrderLaws:
    def test_partial_order_small(self):
        # reflexive, antisymmetric, transitive over every universe to n=8
        for n in range(1, 9):
            pool = enumerate_universe(n).elements
            for a in pool:
                assert leq(a, a)
            for a in pool:
                for b in pool:
                    if leq(a, b) and leq(b, a):
                        assert a == b
            for a in pool:
                for b in pool:
                    if not leq(a, b):
                        continue
                    for c in pool:
                        if leq(b, c):
                            assert leq(a, c)

    def test_last_and_suffix_monotone(self):
        for n in range(1, 10):
            pool = enumerate_universe(n).elements
            for a in pool:
                for b in pool:
                    if leq(a, b):
                        assert a.last <= b.last
                        if a.last == b.last:
                            assert suffix_length(a) <= suffix_length(b)
