import json

import pytest

from imbalattice import (
    LengthMismatch,
    NotAnExcessIndex,
    ResourceLimit,
    balancing_step,
    bottom,
    covering_pairs,
    enumerate_universe,
    excess_indices,
    hasse,
    hasse_dot,
    hasse_json,
    join,
    leq,
    meet,
    minimal_balancing_relation,
    sum_components,
    top,
    validate,
)
from imbalattice.errors import ElementNotInUniverse

NINE_OF_SEVEN = [
    (1, 2, 3, 4, 5, 6, 6),
    (1, 2, 3, 5, 5, 5, 5),
    (1, 2, 4, 4, 4, 5, 5),
    (1, 3, 3, 3, 4, 5, 5),
    (1, 3, 3, 4, 4, 4, 4),
    (2, 2, 2, 3, 4, 5, 5),
    (2, 2, 2, 4, 4, 4, 4),
    (2, 2, 3, 3, 3, 4, 4),
    (2, 3, 3, 3, 3, 3, 3),
]


def seq(*components):
    return validate(components)


class TestEnumerate:
    def test_base_case(self):
        assert [el.components for el in enumerate_universe(1)] == [(0,)]

    def test_four(self):
        assert {el.components for el in enumerate_universe(4)} == {(2, 2, 2, 2), (1, 2, 3, 3)}

    def test_seven_lists_all_nine(self):
        assert [el.components for el in enumerate_universe(7)] == NINE_OF_SEVEN

    def test_counts(self):
        assert [len(enumerate_universe(n)) for n in range(1, 11)] == [
            1, 1, 1, 2, 3, 5, 9, 16, 28, 50,
        ]

    def test_ceiling(self):
        with pytest.raises(ResourceLimit):
            enumerate_universe(21)
        assert len(enumerate_universe(21, ceiling=21)) > len(enumerate_universe(20))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            enumerate_universe(0)

    def test_universe_lookup(self):
        universe = enumerate_universe(7)
        assert seq(2, 2, 2, 4, 4, 4, 4) in universe
        assert universe.index(seq(2, 3, 3, 3, 3, 3, 3)) == 8
        with pytest.raises(ElementNotInUniverse):
            universe.index(seq(1, 1))


class TestMeet:
    def test_idempotent(self):
        l = seq(1, 2, 3, 4, 4)
        assert meet(l, l) == l

    def test_comparable_pair(self):
        assert meet(seq(1, 3, 3, 3, 3), seq(1, 2, 3, 4, 4)) == seq(1, 3, 3, 3, 3)

    def test_incomparable_pair(self):
        assert meet(seq(2, 2, 2, 3, 4, 5, 5), seq(1, 3, 3, 4, 4, 4, 4)) == seq(
            2, 2, 2, 4, 4, 4, 4
        )

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            meet(seq(0), seq(1, 1))

    def test_last_law(self):
        for n in range(1, 10):
            pool = enumerate_universe(n).elements
            for s in pool:
                for t in pool:
                    assert meet(s, t).last == min(s.last, t.last)

    def test_semilattice_laws(self):
        for n in range(1, 9):
            pool = enumerate_universe(n).elements
            for s in pool:
                assert meet(s, s) == s
                for t in pool:
                    low = meet(s, t)
                    assert low == meet(t, s)
                    assert leq(low, s) and leq(low, t)
        for n in range(1, 8):
            pool = enumerate_universe(n).elements
            for s in pool:
                for t in pool:
                    low = meet(s, t)
                    for u in pool:
                        if leq(u, s) and leq(u, t):
                            assert leq(u, low)
                        assert meet(low, u) == meet(s, meet(t, u))


class TestJoin:
    def test_idempotent(self):
        l = seq(1, 2, 3, 4, 4)
        assert join(l, l) == l

    def test_bottom_is_neutral(self):
        for n in range(1, 9):
            for l in enumerate_universe(n):
                assert join(bottom(n), l) == l

    def test_incomparable_pair(self):
        assert join(seq(2, 2, 2, 3, 4, 5, 5), seq(1, 3, 3, 4, 4, 4, 4)) == seq(
            1, 3, 3, 3, 4, 5, 5
        )

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            join(seq(0), seq(1, 1))

    def test_absorption(self):
        for n in range(1, 9):
            pool = enumerate_universe(n).elements
            for s in pool:
                for t in pool:
                    assert join(s, meet(s, t)) == s
                    assert meet(s, join(s, t)) == s


class TestExcessIndices:
    def test_examples(self):
        assert excess_indices(seq(1, 2, 3, 4, 4)) == (4,)
        assert excess_indices(seq(2, 2, 3, 3, 3, 3)) == ()
        assert excess_indices(seq(1, 3, 3, 3, 4, 5, 5)) == (2, 6)

    def test_empty_iff_bottom_iff_near_constant(self):
        for n in range(1, 10):
            for l in enumerate_universe(n):
                flat = len(set(l.components)) <= 1 or (
                    len(set(l.components)) == 2
                    and max(l.components) - min(l.components) == 1
                )
                assert (excess_indices(l) == ()) == flat == (l == bottom(n))


class TestBalancingStep:
    def test_examples(self):
        assert balancing_step(seq(1, 2, 3, 4, 4), 4) == seq(1, 3, 3, 3, 3)
        assert balancing_step(seq(1, 3, 3, 3, 4, 5, 5), 2) == seq(2, 2, 2, 3, 4, 5, 5)
        assert balancing_step(seq(1, 3, 3, 3, 4, 5, 5), 6) == seq(1, 3, 3, 4, 4, 4, 4)

    def test_rejects_non_excess_index(self):
        with pytest.raises(NotAnExcessIndex):
            balancing_step(seq(1, 2, 3, 4, 4), 2)

    def test_strict_descent_by_exact_amount(self):
        for n in range(1, 10):
            for l in enumerate_universe(n):
                for j in excess_indices(l):
                    target = balancing_step(l, j)
                    deep = l[j - 1]
                    shallow = max(c for c in l if c <= deep - 2)
                    assert sum_components(l) - sum_components(target) == deep - shallow - 1
                    assert deep - shallow - 1 >= 1
                    assert leq(target, l) and target != l


class TestMinimalBalancingRelation:
    def test_five(self):
        steps = minimal_balancing_relation(5)
        as_tuples = {(s.target.components, s.source.components, s.excess_index) for s in steps}
        assert as_tuples == {
            ((1, 3, 3, 3, 3), (1, 2, 3, 4, 4), 4),
            ((2, 2, 2, 3, 3), (1, 3, 3, 3, 3), 2),
        }

    def test_trivial_universes(self):
        for n in (1, 2, 3):
            assert minimal_balancing_relation(n) == ()

    def test_contains_non_cover_step_at_seven(self):
        steps = {(s.target.components, s.source.components) for s in minimal_balancing_relation(7)}
        witness = ((1, 3, 3, 4, 4, 4, 4), (1, 2, 4, 4, 4, 5, 5))
        assert witness in steps
        cover_set = {(a.components, b.components) for a, b in covering_pairs(7)}
        assert witness not in cover_set
        between = seq(1, 3, 3, 3, 4, 5, 5)
        assert leq(seq(*witness[0]), between) and leq(between, seq(*witness[1]))


class TestCovering:
    def test_five_is_a_chain(self):
        assert [(a.components, b.components) for a, b in covering_pairs(5)] == [
            ((1, 3, 3, 3, 3), (1, 2, 3, 4, 4)),
            ((2, 2, 2, 3, 3), (1, 3, 3, 3, 3)),
        ]

    def test_six_is_a_five_chain(self):
        assert len(enumerate_universe(6)) == 5
        assert len(covering_pairs(6)) == 4

    def test_seven_chain_diamond_chain(self):
        universe = hasse(7)
        assert len(universe.cover_edges) == 9
        lower_cover_counts = {el: 0 for el in universe.elements}
        for a, b in universe.cover_edges:
            lower_cover_counts[universe.elements[b]] += 1
        doubled = [el for el, c in lower_cover_counts.items() if c == 2]
        assert [el.components for el in doubled] == [(1, 3, 3, 3, 4, 5, 5)]

    def test_chain_below_seven_and_first_incomparable_pair(self):
        for n in range(1, 7):
            pool = enumerate_universe(n).elements
            for a in pool:
                for b in pool:
                    assert leq(a, b) or leq(b, a)
        pool = enumerate_universe(7).elements
        incomparable = {
            tuple(sorted((a.components, b.components)))
            for a in pool
            for b in pool
            if not leq(a, b) and not leq(b, a)
        }
        assert incomparable == {((1, 3, 3, 4, 4, 4, 4), (2, 2, 2, 3, 4, 5, 5))}


class TestBottomTop:
    def test_examples(self):
        assert bottom(5) == seq(2, 2, 2, 3, 3)
        assert top(5) == seq(1, 2, 3, 4, 4)
        assert bottom(1) == top(1) == seq(0)
        assert bottom(7) == seq(2, 3, 3, 3, 3, 3, 3)

    def test_match_enumerated_extremes(self):
        for n in range(1, 11):
            pool = enumerate_universe(n).elements
            assert [u for u in pool if all(leq(u, v) for v in pool)] == [bottom(n)]
            assert [u for u in pool if all(leq(v, u) for v in pool)] == [top(n)]


class TestHasseExports:
    def test_json_five(self):
        assert hasse_json(hasse(5)) == (
            '{"n": 5, "nodes": [[1, 2, 3, 4, 4], [1, 3, 3, 3, 3], '
            '[2, 2, 2, 3, 3]], "covers": [[1, 0], [2, 1]]}'
        )

    def test_json_schema(self):
        payload = json.loads(hasse_json(hasse(7)))
        assert payload["n"] == 7
        assert payload["nodes"] == [list(c) for c in NINE_OF_SEVEN]
        for a, b in payload["covers"]:
            assert leq(seq(*payload["nodes"][a]), seq(*payload["nodes"][b]))

    def test_dot_five(self):
        assert hasse_dot(hasse(5)) == (
            "digraph imbalance_lattice_5 {\n"
            '    "1,2,3,4,4";\n'
            '    "1,3,3,3,3";\n'
            '    "2,2,2,3,3";\n'
            '    "1,2,3,4,4" -> "1,3,3,3,3";\n'
            '    "1,3,3,3,3" -> "2,2,2,3,3";\n'
            "}\n"
        )

    def test_exports_need_cover_edges(self):
        with pytest.raises(ValueError):
            hasse_json(enumerate_universe(5))
        with pytest.raises(ValueError):
            hasse_dot(enumerate_universe(5))
