"""Brute-force enumeration of small structures and the verification sweep.

Labeled preorders on n elements correspond exactly to topologies on n
points, so enumerating relations enumerates spaces. The sweep instantiates
every (space, partition) pair up to a size bound, reruns every
equivalence-group agreement from the decomposition module, and checks the
order-level statements against every labeled partial order on the stratum
set. A correct build reports zero failures; the first failure is captured
as a serializable document bundle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .decomposition import Decomposition, as_poset_stratified
from .errors import InternalInvariantError, PreconditionError, ValidationError
from .order import (
    Poset,
    Proset,
    adjunction_roundtrips,
    alexandrov_space,
    singleton_local_closure_check,
)
from .topology import FiniteSpace, final_topology, iter_bits

#: Known totals, re-derived independently by the tests via the naive filter.
PREORDER_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}
POSET_COUNTS = {0: 1, 1: 1, 2: 3, 3: 19, 4: 219}
PARTITION_COUNTS = {0: 1, 1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203}

MAX_ORDER_ELEMENTS = 4
MAX_PARTITION_ELEMENTS = 6


@lru_cache(maxsize=None)
def labeled_preorder_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Every reflexive transitive relation on n labeled elements.

    Candidates are the 2**(n*n - n) assignments of off-diagonal bits,
    visited in ascending numeric order (row-major pair order), filtered for
    transitivity. The result is deterministic and duplicate free.
    """
    if n > 6:
        raise ValidationError("relation enumeration is limited to 6 elements")
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for code in range(1 << len(positions)):
        rows = [1 << i for i in range(n)]
        for b, (i, j) in enumerate(positions):
            if (code >> b) & 1:
                rows[i] |= 1 << j
        ok = True
        for i in range(n):
            acc = rows[i]
            for j in iter_bits(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                ok = False
                break
        if ok:
            out.append(tuple(rows))
    return tuple(out)


@lru_cache(maxsize=None)
def labeled_poset_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """The antisymmetric members of ``labeled_preorder_rows``."""
    out = []
    for rows in labeled_preorder_rows(n):
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if (rows[i] >> j) & 1 and (rows[j] >> i) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(rows)
    return tuple(out)


def naive_preorder_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Independent rederivation: filter all 2**(n*n) boolean matrices.

    Slow by design; the in-repo oracle for the enumeration counts.
    """
    if n > 3:
        raise ValidationError("the naive relation filter is limited to 3 elements")
    out = []
    for code in range(1 << (n * n)):
        rows = [0] * n
        for i in range(n):
            for j in range(n):
                if (code >> (i * n + j)) & 1:
                    rows[i] |= 1 << j
        if any(not (rows[i] >> i) & 1 for i in range(n)):
            continue
        ok = True
        for i in range(n):
            acc = rows[i]
            for j in iter_bits(rows[i]):
                acc |= rows[j]
            if acc != rows[i]:
                ok = False
                break
        if ok:
            out.append(tuple(rows))
    return tuple(out)


def _default_elements(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def enumerate_prosets(n: int, max_n: int = MAX_ORDER_ELEMENTS) -> Iterator[Proset]:
    """All labeled preorders on elements "0".."n-1", deterministic order."""
    if n > max_n:
        raise ValidationError(f"preorder enumeration bound is {max_n} elements")
    elements = _default_elements(n)
    for rows in labeled_preorder_rows(n):
        yield Proset(elements, rows)


def enumerate_posets(n: int, max_n: int = MAX_ORDER_ELEMENTS) -> Iterator[Poset]:
    """All labeled partial orders on elements "0".."n-1"."""
    if n > max_n:
        raise ValidationError(f"poset enumeration bound is {max_n} elements")
    elements = _default_elements(n)
    for rows in labeled_poset_rows(n):
        yield Poset(elements, rows)


def set_partitions(items: Sequence[str]) -> Iterator[tuple[tuple[str, ...], ...]]:
    """Every partition of the items into nonempty blocks.

    Blocks appear in first-occurrence order (restricted-growth order), so
    the iteration is deterministic and complete: the counts are the Bell
    numbers.
    """
    items = tuple(items)
    n = len(items)
    if n == 0:
        yield ()
        return

    def rec(i: int, blocks: list[list[str]]):
        if i == n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([items[i]])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [[items[0]]])


def enumerate_partitions(n: int, max_n: int = MAX_PARTITION_ELEMENTS) -> Iterator[
    tuple[tuple[str, ...], ...]
]:
    """All partitions of points "0".."n-1"."""
    if n > max_n:
        raise ValidationError(f"partition enumeration bound is {max_n} elements")
    yield from set_partitions(_default_elements(n))


# -- the sweep ----------------------------------------------------------------


@dataclass(frozen=True)
class Tally:
    passed: int
    failed: int

    @property
    def total(self) -> int:
        return self.passed + self.failed


@dataclass(frozen=True, eq=False)
class SweepReport:
    n: int
    spaces: int
    instances: int
    order_pairs: int
    tallies: tuple[tuple[str, Tally], ...]
    first_counterexample: dict | None

    @property
    def failures(self) -> int:
        return sum(t.failed for _, t in self.tallies)

    def summary(self) -> str:
        return f"{self.instances} instances, {self.failures} failures"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "spaces": self.spaces,
            "instances": self.instances,
            "order_pairs": self.order_pairs,
            "failures": self.failures,
            "checks": {
                name: {"passed": t.passed, "failed": t.failed} for name, t in self.tallies
            },
            "first_counterexample": self.first_counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def exhaustive_verify(n: int, max_n: int = 4) -> SweepReport:
    """Recheck every order-and-decomposition statement on all instances of
    size n. See the module docstring for what one instance contributes."""
    if n > max_n:
        raise ValidationError(f"exhaustive sweep bound is {max_n} points")

    counts: dict[str, list[int]] = {}
    first_cex: list[dict | None] = [None]

    def record(name: str, ok: bool, context=None) -> None:
        slot = counts.setdefault(name, [0, 0])
        slot[0 if ok else 1] += 1
        if not ok and first_cex[0] is None:
            from .documents import payload_of

            bundle = {"check": name}
            if context is not None:
                space, dec = context
                bundle["space"] = payload_of(space)
                if dec is not None:
                    bundle["decomposition"] = payload_of(dec)
            first_cex[0] = bundle

    points = _default_elements(n)
    partitions = tuple(set_partitions(points))
    spaces = 0
    instances = 0
    order_pairs = 0

    for rows in labeled_preorder_rows(n):
        spaces += 1
        proset = Proset(points, rows)
        space = alexandrov_space(proset)
        ctx = (space, None)

        try:
            adjunction_roundtrips(proset, space)
            ok = True
        except InternalInvariantError:
            ok = False
        record("adjunction_roundtrips", ok, ctx)

        try:
            singleton_local_closure_check(proset)
            ok = True
        except InternalInvariantError:
            ok = False
        record("poset_iff_singletons_locally_closed", ok, ctx)

        family = []
        for mask in dict.fromkeys(space.min_open):
            member = space.names_of(mask)
            sub = space.subspace(member)
            family.append((sub, {p: p for p in sub.points}))
        record(
            "open_cover_final_topology_recovers_space",
            final_topology(space.points, family) == space,
            ctx,
        )

        for partition in partitions:
            instances += 1
            dec = Decomposition.from_strata(
                space, {str(b): block for b, block in enumerate(partition)}
            )
            ctx = (space, dec)

            record(
                "quotient_fixpoint_matches_subset_filter",
                dec.quotient_space == dec.quotient_space_by_subset_filter(),
                ctx,
            )

            try:
                dec.preorder
                ok = True
            except InternalInvariantError:
                ok = False
            record("closed_saturation_matches_preorder_down_sets", ok, ctx)

            group_values = {}
            for name, call in (
                ("alexandrov_triple_agreement", dec.alexandrov_equivalences),
                ("frontier_quadruple_agreement", dec.frontier_equivalences),
                ("poset_stratified_triple_agreement", dec.poset_stratified_equivalences),
            ):
                try:
                    group_values[name] = call().value
                    ok = True
                except InternalInvariantError:
                    group_values[name] = None
                    ok = False
                record(name, ok, ctx)

            try:
                dec.semicontinuity()
                ok = True
            except InternalInvariantError:
                ok = False
            record("semicontinuity_pairings", ok, ctx)

            locally_closed = all(v.holds for _, v in dec.locally_closed_strata())
            frontier = group_values["frontier_quadruple_agreement"]
            poset_strat = group_values["poset_stratified_triple_agreement"]
            pi_open = bool(dec.pi_map.is_open())
            if frontier is not None and poset_strat is not None:
                record(
                    "locally_closed_and_frontier_iff_poset_stratified_and_open",
                    (locally_closed and frontier) == (poset_strat and pi_open),
                    ctx,
                )

            try:
                strat = dec.is_stratification().holds
            except InternalInvariantError:
                strat = None
            if strat:
                try:
                    as_poset_stratified(dec)
                    ok = True
                except (InternalInvariantError, PreconditionError):
                    ok = False
                record("stratification_induces_initial_partial_order", ok, ctx)

            if poset_strat and strat is not None:
                # over its own preorder: stratification iff the map is open
                # (local finiteness holds identically at finite scale)
                record(
                    "stratification_iff_quotient_map_open_over_own_order",
                    strat == pi_open,
                    ctx,
                )

            base = dec.preorder.up
            k = dec.k
            for orows in labeled_poset_rows(k):
                order_pairs += 1
                cont = dec._pi_continuous_rows(orows)
                if not cont:
                    continue
                record(
                    "compatible_orders_contain_decomposition_preorder",
                    not any(base[i] & ~orows[i] for i in range(k)),
                    ctx,
                )
                opn = dec._pi_open_rows(orows)
                if opn and strat is not None:
                    record(
                        "continuous_open_order_implies_stratification", strat, ctx
                    )
                if strat and orows != base and not any(base[i] & ~orows[i] for i in range(k)):
                    record(
                        "strict_refinement_is_continuous_never_open",
                        cont and not opn,
                        ctx,
                    )

    tallies = tuple(
        (name, Tally(passed, failed)) for name, (passed, failed) in sorted(counts.items())
    )
    return SweepReport(
        n=n,
        spaces=spaces,
        instances=instances,
        order_pairs=order_pairs,
        tallies=tallies,
        first_counterexample=first_cex[0],
    )
