"""Named, machine-checkable law suite over the whole library.

Each check sweeps every universe size up to a requested maximum and returns
a ``PropertyReport``; the first counterexample found becomes the witness.
The registry keys are the stable names the command line accepts, and the
report order always follows the registry, so output is deterministic no
matter how the checks are scheduled.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .irreducibility import (
    decompose_segments,
    is_join_irreducible_by_balancing,
    is_join_irreducible_by_covers,
    is_join_irreducible_by_decomposition,
    is_near_constant,
)
from .lattice import (
    DEFAULT_CEILING,
    bottom,
    covering_pairs,
    balancing_step,
    enumerate_universe,
    excess_indices,
    join,
    meet,
    minimal_balancing_relation,
    top,
)
from .oracle import (
    PropertyReport,
    closure_equals_order,
    enumerate_by_partition,
    join_bruteforce,
    meet_bruteforce,
)
from .sequences import (
    PathLengthSequence,
    compare,
    leq,
    suffix_length,
)
from .transforms import contraction, expansion_at, lower_expansion, upper_expansion
from .trees import (
    canonical_code,
    leaf_codewords,
    nodes_within_depth,
    sequence_from_tree,
    sum_components,
    tree_from_sequence,
)

__all__ = ["CHECKS", "run_checks"]

Check = Callable[[int, int], "PropertyReport"]


def _sizes(max_n: int, start: int = 1) -> range:
    return range(start, max_n + 1)


def _ordered_pairs(
    elements: Iterable[PathLengthSequence],
) -> Iterator[tuple[PathLengthSequence, PathLengthSequence]]:
    pool = tuple(elements)
    for a in pool:
        for b in pool:
            yield a, b


def _lower_covers(l, universe):
    lowers = [u for u in universe if u != l and leq(u, l)]
    return [u for u in lowers if not any(v != u and leq(u, v) for v in lowers)]


def _check_partial_order_laws(max_n: int, ceiling: int) -> PropertyReport:
    name = "partial-order-laws"
    for n in _sizes(max_n):
        pool = enumerate_universe(n, ceiling).elements
        for a in pool:
            if not leq(a, a):
                return PropertyReport(name, max_n, "fail", f"not reflexive at {a}")
        for a, b in _ordered_pairs(pool):
            if leq(a, b) and leq(b, a) and a != b:
                return PropertyReport(name, max_n, "fail", f"not antisymmetric: {a}, {b}")
        for a in pool:
            for b in pool:
                if not leq(a, b):
                    continue
                for c in pool:
                    if leq(b, c) and not leq(a, c):
                        return PropertyReport(
                            name, max_n, "fail", f"not transitive: {a}, {b}, {c}"
                        )
    return PropertyReport(name, max_n, "pass")


def _check_last_suffix_monotonicity(max_n: int, ceiling: int) -> PropertyReport:
    name = "last-suffix-monotonicity"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if not leq(a, b):
                continue
            if a.last > b.last:
                return PropertyReport(name, max_n, "fail", f"last {a} > last {b}")
            if a.last == b.last and suffix_length(a) > suffix_length(b):
                return PropertyReport(name, max_n, "fail", f"suf {a} > suf {b}")
    return PropertyReport(name, max_n, "pass")


def _check_scale_independence(max_n: int, ceiling: int) -> PropertyReport:
    name = "scale-independence"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            base = max(a.last, b.last)
            if any(compare(a, b, scale=base + extra) != compare(a, b) for extra in (1, 5)):
                return PropertyReport(name, max_n, "fail", f"verdict varies: {a} vs {b}")
    return PropertyReport(name, max_n, "pass")


def _check_expansion_monotonicity(max_n: int, ceiling: int) -> PropertyReport:
    name = "expansion-monotonicity"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if leq(a, b):
                if not leq(lower_expansion(a), lower_expansion(b)):
                    return PropertyReport(name, max_n, "fail", f"lower fails: {a}, {b}")
                if not leq(upper_expansion(a), upper_expansion(b)):
                    return PropertyReport(name, max_n, "fail", f"upper fails: {a}, {b}")
    return PropertyReport(name, max_n, "pass")


def _check_expansion_coincidence(max_n: int, ceiling: int) -> PropertyReport:
    name = "expansion-coincidence"
    for n in _sizes(max_n):
        for l in enumerate_universe(n, ceiling):
            constant = len(set(l.components)) == 1
            if constant != (lower_expansion(l) == upper_expansion(l)):
                return PropertyReport(name, max_n, "fail", f"at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_upper_lower_expansion(max_n: int, ceiling: int) -> PropertyReport:
    name = "upper-lower-expansion"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if leq(a, b) and a.last < b.last:
                if not leq(upper_expansion(a), lower_expansion(b)):
                    return PropertyReport(name, max_n, "fail", f"{a} vs {b}")
    return PropertyReport(name, max_n, "pass")


def _check_contraction_sandwich(max_n: int, ceiling: int) -> PropertyReport:
    name = "contraction-sandwich"
    for n in _sizes(max_n, start=2):
        for l in enumerate_universe(n, ceiling):
            squeezed = contraction(l)
            if not (leq(lower_expansion(squeezed), l) and leq(l, upper_expansion(squeezed))):
                return PropertyReport(name, max_n, "fail", f"at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_contraction_round_trip(max_n: int, ceiling: int) -> PropertyReport:
    name = "contraction-round-trip"
    for n in _sizes(max_n, start=2):
        for l in enumerate_universe(n, ceiling):
            merged_position = n - suffix_length(l) + 1
            if expansion_at(contraction(l), merged_position) != l:
                return PropertyReport(name, max_n, "fail", f"at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_enumeration_oracle(max_n: int, ceiling: int) -> PropertyReport:
    name = "enumeration-oracle"
    for n in _sizes(max_n):
        fast = set(enumerate_universe(n, ceiling).elements)
        slow = set(enumerate_by_partition(n, ceiling))
        if fast != slow:
            extra = sorted(x.components for x in fast ^ slow)
            return PropertyReport(name, max_n, "fail", f"n={n} differs at {extra[:3]}")
    return PropertyReport(name, max_n, "pass")


def _check_bottom_top_extremes(max_n: int, ceiling: int) -> PropertyReport:
    name = "bottom-top-extremes"
    for n in _sizes(max_n):
        pool = enumerate_universe(n, ceiling).elements
        least = [u for u in pool if all(leq(u, v) for v in pool)]
        greatest = [u for u in pool if all(leq(v, u) for v in pool)]
        if least != [bottom(n)]:
            return PropertyReport(name, max_n, "fail", f"bottom({n}) != {least}")
        if greatest != [top(n)]:
            return PropertyReport(name, max_n, "fail", f"top({n}) != {greatest}")
    return PropertyReport(name, max_n, "pass")


def _check_excess_iff_not_bottom(max_n: int, ceiling: int) -> PropertyReport:
    name = "excess-iff-not-bottom"
    for n in _sizes(max_n):
        for l in enumerate_universe(n, ceiling):
            no_excess = not excess_indices(l)
            flat = bool(is_near_constant(l.components))
            if not (no_excess == flat == (l == bottom(n))):
                return PropertyReport(name, max_n, "fail", f"at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_lattice_bounds_unique(max_n: int, ceiling: int) -> PropertyReport:
    name = "lattice-bounds-unique"
    for n in _sizes(max_n):
        universe = enumerate_universe(n, ceiling)
        for a, b in _ordered_pairs(universe):
            meet_bruteforce(a, b, universe)  # raises NotALattice on failure
            join_bruteforce(a, b, universe)
    return PropertyReport(name, max_n, "pass")


def _check_meet_oracle_agreement(max_n: int, ceiling: int) -> PropertyReport:
    name = "meet-oracle-agreement"
    for n in _sizes(max_n):
        universe = enumerate_universe(n, ceiling)
        for a, b in _ordered_pairs(universe):
            if meet(a, b) != meet_bruteforce(a, b, universe):
                return PropertyReport(name, max_n, "fail", f"meet({a}, {b})")
            if join(a, b, ceiling) != join_bruteforce(a, b, universe):
                return PropertyReport(name, max_n, "fail", f"join({a}, {b})")
    return PropertyReport(name, max_n, "pass")


def _check_meet_last_law(max_n: int, ceiling: int) -> PropertyReport:
    name = "meet-last-law"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if meet(a, b).last != min(a.last, b.last):
                return PropertyReport(name, max_n, "fail", f"meet({a}, {b})")
    return PropertyReport(name, max_n, "pass")


def _check_meet_semilattice_laws(max_n: int, ceiling: int) -> PropertyReport:
    name = "meet-semilattice-laws"
    for n in _sizes(max_n):
        pool = enumerate_universe(n, ceiling).elements
        for a in pool:
            if meet(a, a) != a:
                return PropertyReport(name, max_n, "fail", f"not idempotent at {a}")
        for a, b in _ordered_pairs(pool):
            low = meet(a, b)
            if low != meet(b, a):
                return PropertyReport(name, max_n, "fail", f"not commutative: {a}, {b}")
            if not (leq(low, a) and leq(low, b)):
                return PropertyReport(name, max_n, "fail", f"not a lower bound: {a}, {b}")
        for a in pool:
            for b in pool:
                low = meet(a, b)
                for c in pool:
                    if leq(c, a) and leq(c, b) and not leq(c, low):
                        return PropertyReport(name, max_n, "fail", f"not greatest: {a}, {b}, {c}")
                    if meet(low, c) != meet(a, meet(b, c)):
                        return PropertyReport(name, max_n, "fail", f"not associative: {a}, {b}, {c}")
    return PropertyReport(name, max_n, "pass")


def _check_join_absorption(max_n: int, ceiling: int) -> PropertyReport:
    name = "join-absorption"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if join(a, meet(a, b), ceiling) != a:
                return PropertyReport(name, max_n, "fail", f"join-absorb: {a}, {b}")
            if meet(a, join(a, b, ceiling)) != a:
                return PropertyReport(name, max_n, "fail", f"meet-absorb: {a}, {b}")
    return PropertyReport(name, max_n, "pass")


def _check_closure_equals_order(max_n: int, ceiling: int) -> PropertyReport:
    name = "closure-equals-order"
    for n in _sizes(max_n):
        report = closure_equals_order(n, ceiling)
        if not report.passed:
            return PropertyReport(name, max_n, "fail", f"n={n}: {report.witness}")
    return PropertyReport(name, max_n, "pass")


def _check_covering_within_balancing(max_n: int, ceiling: int) -> PropertyReport:
    name = "covering-within-balancing"
    for n in _sizes(max_n):
        steps = {(s.target, s.source) for s in minimal_balancing_relation(n, ceiling)}
        for low, high in covering_pairs(n, ceiling):
            if (low, high) not in steps:
                return PropertyReport(name, max_n, "fail", f"cover {low} < {high}")
    return PropertyReport(name, max_n, "pass")


def _check_balancing_step_decrement(max_n: int, ceiling: int) -> PropertyReport:
    name = "balancing-step-decrement"
    for n in _sizes(max_n):
        for step in minimal_balancing_relation(n, ceiling):
            l, j, target = step.source, step.excess_index, step.target
            deep = l[j - 1]
            shallow = max(c for c in l if c <= deep - 2)
            drop = sum_components(l) - sum_components(target)
            if drop != deep - shallow - 1 or drop < 1:
                return PropertyReport(name, max_n, "fail", f"{l} at {j}")
            if not (leq(target, l) and target != l):
                return PropertyReport(name, max_n, "fail", f"{l} at {j} not a descent")
    return PropertyReport(name, max_n, "pass")


def _check_irreducibility_triple_agreement(max_n: int, ceiling: int) -> PropertyReport:
    name = "irreducibility-triple-agreement"
    for n in _sizes(max_n):
        universe = enumerate_universe(n, ceiling)
        for l in universe:
            by_covers = is_join_irreducible_by_covers(l, universe)
            by_balancing = is_join_irreducible_by_balancing(l)
            by_shape = is_join_irreducible_by_decomposition(l)
            if not (by_covers == by_balancing == by_shape):
                return PropertyReport(
                    name, max_n, "fail",
                    f"{l}: covers={by_covers} balancing={by_balancing} shape={by_shape}",
                )
            if decompose_segments(l).concatenation() != l.components:
                return PropertyReport(name, max_n, "fail", f"split broken at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_unique_cover_first_step(max_n: int, ceiling: int) -> PropertyReport:
    name = "unique-cover-first-step"
    for n in _sizes(max_n, start=2):
        universe = enumerate_universe(n, ceiling)
        for l in universe:
            if not is_join_irreducible_by_covers(l, universe):
                continue
            covers = _lower_covers(l, universe)
            if covers != [balancing_step(l, excess_indices(l)[0])]:
                return PropertyReport(name, max_n, "fail", f"at {l}")
    return PropertyReport(name, max_n, "pass")


def _check_monotone_parameters(max_n: int, ceiling: int) -> PropertyReport:
    name = "monotone-parameters"
    for n in _sizes(max_n):
        for a, b in _ordered_pairs(enumerate_universe(n, ceiling)):
            if not leq(a, b):
                continue
            if a != b and not sum_components(a) < sum_components(b):
                return PropertyReport(name, max_n, "fail", f"sum not strict: {a}, {b}")
            for d in range(n + 1):
                if nodes_within_depth(a, d) < nodes_within_depth(b, d):
                    return PropertyReport(name, max_n, "fail", f"{a}, {b} at d={d}")
    return PropertyReport(name, max_n, "pass")


def _check_kraft_realization(max_n: int, ceiling: int) -> PropertyReport:
    name = "kraft-realization"
    for n in _sizes(max_n):
        for l in enumerate_universe(n, ceiling):
            code = canonical_code(l)
            if tuple(len(w) for w in code) != l.components:
                return PropertyReport(name, max_n, "fail", f"lengths differ at {l}")
            for a in code:
                for b in code:
                    if a != b and b.startswith(a):
                        return PropertyReport(name, max_n, "fail", f"prefix clash at {l}")
            tree = tree_from_sequence(l)
            if sequence_from_tree(tree) != l:
                return PropertyReport(name, max_n, "fail", f"round trip at {l}")
            if tree_from_sequence(sequence_from_tree(tree)) != tree:
                return PropertyReport(name, max_n, "fail", f"tree round trip at {l}")
            if tuple(sorted(leaf_codewords(tree))) != tuple(sorted(code)):
                return PropertyReport(name, max_n, "fail", f"codewords differ at {l}")
    return PropertyReport(name, max_n, "pass")


CHECKS: dict[str, Check] = {
    "partial-order-laws": _check_partial_order_laws,
    "last-suffix-monotonicity": _check_last_suffix_monotonicity,
    "scale-independence": _check_scale_independence,
    "expansion-monotonicity": _check_expansion_monotonicity,
    "expansion-coincidence": _check_expansion_coincidence,
    "upper-lower-expansion": _check_upper_lower_expansion,
    "contraction-sandwich": _check_contraction_sandwich,
    "contraction-round-trip": _check_contraction_round_trip,
    "enumeration-oracle": _check_enumeration_oracle,
    "bottom-top-extremes": _check_bottom_top_extremes,
    "excess-iff-not-bottom": _check_excess_iff_not_bottom,
    "lattice-bounds-unique": _check_lattice_bounds_unique,
    "meet-oracle-agreement": _check_meet_oracle_agreement,
    "meet-last-law": _check_meet_last_law,
    "meet-semilattice-laws": _check_meet_semilattice_laws,
    "join-absorption": _check_join_absorption,
    "closure-equals-order": _check_closure_equals_order,
    "covering-within-balancing": _check_covering_within_balancing,
    "balancing-step-decrement": _check_balancing_step_decrement,
    "irreducibility-triple-agreement": _check_irreducibility_triple_agreement,
    "unique-cover-first-step": _check_unique_cover_first_step,
    "monotone-parameters": _check_monotone_parameters,
    "kraft-realization": _check_kraft_realization,
}


def run_checks(
    max_n: int,
    names: Iterable[str] | None = None,
    ceiling: int = DEFAULT_CEILING,
) -> list[PropertyReport]:
    """Run the named checks (all by default) for sizes up to ``max_n``.

    Reports come back in registry order regardless of the order names were
    given in, keeping output stable.
    """
    selected = set(CHECKS) if names is None else set(names)
    unknown = selected - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    return [check(max_n, ceiling) for name, check in CHECKS.items() if name in selected]
