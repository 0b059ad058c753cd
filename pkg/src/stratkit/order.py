"""Preorders, partial orders, and their correspondence with finite spaces.

The up-set map p -> {q : p <= q} of a preorder is exactly the minimal-open
map of a topology whose opens are the upward-closed sets, and every finite
space arises this way from its specialization preorder (x <= y iff x lies
in the closure of {y}). The two translations are mutually inverse; both
directions live here, together with the poset reflection and a small
catalog of symbolic infinite families used for local-finiteness questions
that have no finite witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InternalInvariantError, ValidationError
from .topology import FiniteSpace, Verdict, checked_names, iter_bits


@dataclass(frozen=True, repr=False)
class Proset:
    """A finite preordered set.

    The relation is stored row-compressed: ``up[i]`` is the bit mask of all
    j with ``elements[i] <= elements[j]``. Construction validates
    reflexivity and transitivity.
    """

    elements: tuple[str, ...]
    up: tuple[int, ...]

    def __post_init__(self):
        els = checked_names(self.elements, "element")
        rows = tuple(self.up)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "up", rows)
        n = len(els)
        if len(rows) != n:
            raise ValidationError("relation must have a row for every element")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if not isinstance(row, int) or row < 0 or row > full:
                raise ValidationError(f"relation row out of range at {els[i]!r}")
            if not (row >> i) & 1:
                raise ValidationError(f"relation not reflexive: ({els[i]!r}, {els[i]!r}) missing")
        for i, row in enumerate(rows):
            for j in iter_bits(row):
                extra = rows[j] & ~row
                if extra:
                    k = next(iter_bits(extra))
                    raise ValidationError(
                        f"relation not transitive: ({els[i]!r}, {els[k]!r}) missing "
                        f"(given ({els[i]!r}, {els[j]!r}) and ({els[j]!r}, {els[k]!r}))"
                    )

    @classmethod
    def from_pairs(
        cls, elements: Iterable[str], pairs: Iterable[tuple[str, str]], close: bool = True
    ) -> "Proset":
        """Build from a pair list.

        With ``close`` the reflexive-transitive closure is taken; otherwise
        the pairs must already form a preorder and the violating pair is
        reported.
        """
        els = checked_names(elements, "element")
        index = {e: i for i, e in enumerate(els)}
        n = len(els)
        rows = [0] * n
        for a, b in pairs:
            if a not in index:
                raise ValidationError(f"pair mentions unknown element: {a!r}")
            if b not in index:
                raise ValidationError(f"pair mentions unknown element: {b!r}")
            rows[index[a]] |= 1 << index[b]
        if close:
            for i in range(n):
                rows[i] |= 1 << i
            changed = True
            while changed:
                changed = False
                for i in range(n):
                    acc = rows[i]
                    for j in iter_bits(rows[i]):
                        acc |= rows[j]
                    if acc != rows[i]:
                        rows[i] = acc
                        changed = True
        return cls(els, tuple(rows))

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        rels = ", ".join(
            f"{a}<={self.elements[j]}"
            for i, a in enumerate(self.elements)
            for j in iter_bits(self.up[i])
            if i != j
        )
        return f"{type(self).__name__}([{', '.join(self.elements)}]; {rels})"

    @cached_property
    def _index(self) -> dict:
        return {e: i for i, e in enumerate(self.elements)}

    @cached_property
    def down(self) -> tuple[int, ...]:
        """Column masks: ``down[j]`` is the set of i with i <= j."""
        cols = [0] * len(self.elements)
        for i, row in enumerate(self.up):
            for j in iter_bits(row):
                cols[j] |= 1 << i
        return tuple(cols)

    def element_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValidationError(f"unknown element: {name!r}") from None

    def leq(self, a: str, b: str) -> bool:
        return bool((self.up[self.element_index(a)] >> self.element_index(b)) & 1)

    def up_set(self, e: str) -> frozenset[str]:
        """All q with e <= q: the minimal open neighborhood in the order topology."""
        return frozenset(self.elements[j] for j in iter_bits(self.up[self.element_index(e)]))

    def down_set(self, e: str) -> frozenset[str]:
        """All q with q <= e: the minimal closed neighborhood in the order topology."""
        return frozenset(self.elements[i] for i in iter_bits(self.down[self.element_index(e)]))

    def is_poset(self) -> Verdict:
        """Antisymmetry check; the witness on failure is a two-cycle pair."""
        order = sorted(range(len(self.elements)), key=lambda i: self.elements[i])
        for pos, i in enumerate(order):
            for j in order[pos + 1 :]:
                if (self.up[i] >> j) & 1 and (self.up[j] >> i) & 1:
                    a, b = sorted((self.elements[i], self.elements[j]))
                    return Verdict(False, witness=(a, b), note="two-cycle")
        return Verdict(True)

    def equivalence_classes(self) -> tuple[tuple[str, ...], ...]:
        """Classes of mutual comparability, each sorted, ordered by least member."""
        n = len(self.elements)
        seen = 0
        classes = []
        for i in range(n):
            if (seen >> i) & 1:
                continue
            mask = self.up[i] & self.down[i]
            seen |= mask
            classes.append(tuple(sorted(self.elements[j] for j in iter_bits(mask))))
        return tuple(sorted(classes))

    def reflection(self) -> tuple["Poset", "MonotoneMap"]:
        """Quotient by mutual comparability.

        Classes are named by their lexicographically least member; the
        induced order [p] <= [q] iff p <= q is well defined and a partial
        order. Returns the poset and the monotone quotient map.
        """
        classes = self.equivalence_classes()
        reps = tuple(c[0] for c in classes)
        rep_index = {}
        for ci, members in enumerate(classes):
            for m in members:
                rep_index[m] = ci
        rows = []
        for ci in range(len(classes)):
            i = self.element_index(reps[ci])
            row = 0
            for cj in range(len(classes)):
                if (self.up[i] >> self.element_index(reps[cj])) & 1:
                    row |= 1 << cj
            rows.append(row)
        poset = Poset(reps, tuple(rows))
        quotient = MonotoneMap(
            self, poset, tuple(rep_index[e] for e in self.elements)
        )
        return poset, quotient


@dataclass(frozen=True, repr=False)
class Poset(Proset):
    """A proset whose relation is also antisymmetric."""

    def __post_init__(self):
        super().__post_init__()
        verdict = self.is_poset()
        if not verdict:
            a, b = verdict.witness
            raise ValidationError(
                f"relation not antisymmetric: ({a!r}, {b!r}) and ({b!r}, {a!r}) both present"
            )

    def hasse(self) -> tuple[tuple[str, str], ...]:
        """Cover pairs (a, b): a < b with nothing strictly between."""
        n = len(self.elements)
        covers = []
        for i in range(n):
            for j in iter_bits(self.up[i]):
                if i == j:
                    continue
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((self.elements[i], self.elements[j]))
        return tuple(sorted(covers))


@dataclass(frozen=True, repr=False)
class MonotoneMap:
    """A map between prosets; monotonicity is a check, not an invariant."""

    source: Proset
    target: Proset
    assignment: tuple[int, ...]  # source element index -> target element index

    def __post_init__(self):
        asg = tuple(self.assignment)
        object.__setattr__(self, "assignment", asg)
        if len(asg) != len(self.source.elements):
            raise ValidationError("assignment must cover every source element")
        n_target = len(self.target.elements)
        for i, t in enumerate(asg):
            if not isinstance(t, int) or t < 0 or t >= n_target:
                raise ValidationError(
                    f"assignment for {self.source.elements[i]!r} lands outside the target"
                )

    @classmethod
    def from_names(
        cls, source: Proset, target: Proset, mapping: Mapping[str, str]
    ) -> "MonotoneMap":
        asg = []
        for e in source.elements:
            if e not in mapping:
                raise ValidationError(f"assignment missing source element {e!r}")
            asg.append(target.element_index(mapping[e]))
        return cls(source, target, tuple(asg))

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{e}->{self.target.elements[t]}"
            for e, t in zip(self.source.elements, self.assignment)
        )
        return f"MonotoneMap({pairs})"

    def apply(self, name: str) -> str:
        return self.target.elements[self.assignment[self.source.element_index(name)]]

    def is_monotone(self) -> Verdict:
        src = self.source
        for i in sorted(range(len(src.elements)), key=lambda i: src.elements[i]):
            for j in iter_bits(src.up[i]):
                if not (self.target.up[self.assignment[i]] >> self.assignment[j]) & 1:
                    return Verdict(
                        False,
                        witness=(src.elements[i], src.elements[j]),
                        note="comparable pair whose images are not comparable",
                    )
        return Verdict(True)


# -- the two functors ----------------------------------------------------


def alexandrov_space(p: Proset) -> FiniteSpace:
    """Order topology of a preorder: opens are exactly the up-closed sets.

    The minimal open neighborhood of p is its up-set, so the stored
    relation rows double as the minimal-open table.
    """
    return FiniteSpace(p.elements, p.up)


def specialization_preorder(space: FiniteSpace) -> Proset:
    """Specialization preorder of a finite space: x <= y iff x in closure({y}).

    Computed twice, via singleton closures and via minimal-open membership
    (x <= y iff y in U_x); the two must agree.
    """
    n = len(space.points)
    via_closure = [0] * n
    for j in range(n):
        col = space.closure_mask(1 << j)
        for i in iter_bits(col):
            via_closure[i] |= 1 << j
    direct = list(space.min_open)
    if tuple(via_closure) != tuple(direct):
        raise InternalInvariantError(
            "specialization preorder: closure route disagrees with minimal-open route"
        )
    return Proset(space.points, tuple(direct))


@dataclass(frozen=True)
class AdjunctionReport:
    """Round-trip results for the order/space translations."""

    unit_is_identity: bool  # preorder -> space -> preorder returns the input
    counit_is_identity: bool  # space -> preorder -> space returns the input


def adjunction_roundtrips(p: Proset, x: FiniteSpace) -> AdjunctionReport:
    """Check both round-trips exactly; failure is a library defect."""
    unit = specialization_preorder(alexandrov_space(p)) == Proset(p.elements, p.up)
    counit = alexandrov_space(specialization_preorder(x)) == x
    if not unit:
        raise InternalInvariantError("order -> space -> order round-trip changed the relation")
    if not counit:
        raise InternalInvariantError("space -> order -> space round-trip changed the topology")
    return AdjunctionReport(unit, counit)


def singleton_local_closure_check(p: Proset) -> bool:
    """A preorder is a partial order iff every singleton of its order
    topology is locally closed. Both sides are evaluated independently and
    must agree; the common value is returned.
    """
    antisymmetric = bool(p.is_poset())
    space = alexandrov_space(p)
    all_lc = all(space.is_locally_closed((e,)) for e in p.elements)
    if antisymmetric != all_lc:
        raise InternalInvariantError(
            "antisymmetry disagrees with local closure of singletons"
        )
    return antisymmetric


# -- symbolic infinite families -------------------------------------------

# Local finiteness splits into two inequivalent notions on infinite orders:
# a poset is locally finite when every interval [p, q] is finite, while its
# order topology is a locally finite space when every up-set [p, oo) is
# finite. Finite inputs cannot separate them, so the distinction is carried
# by a closed catalog of symbolic families with hard-coded analytic answers.


@dataclass(frozen=True)
class SymbolicFamily:
    """An infinite order family with precomputed local-finiteness answers."""

    tag: str
    locally_finite_space: bool
    locally_finite_poset: bool
    space_reason: str
    poset_reason: str


SYMBOLIC_FAMILIES: dict[str, SymbolicFamily] = {
    "NatUsual": SymbolicFamily(
        "NatUsual",
        locally_finite_space=False,
        locally_finite_poset=True,
        space_reason="the up-set [p, oo) of any p is infinite in the usual order on the naturals",
        poset_reason="every interval [p, q] in the usual order on the naturals is finite",
    ),
    "NatOpposite": SymbolicFamily(
        "NatOpposite",
        locally_finite_space=True,
        locally_finite_poset=True,
        space_reason="up-sets in the reversed order on the naturals are finite initial segments",
        poset_reason="intervals in the reversed order are slices of finite initial segments",
    ),
    "NatDiscrete": SymbolicFamily(
        "NatDiscrete",
        locally_finite_space=True,
        locally_finite_poset=True,
        space_reason="every up-set in the discrete order is a singleton",
        poset_reason="every interval in the discrete order is a singleton",
    ),
}


def symbolic_local_finiteness(tag: str) -> SymbolicFamily:
    """Catalog lookup; unknown tags are input errors."""
    try:
        return SYMBOLIC_FAMILIES[tag]
    except KeyError:
        raise ValidationError(f"unknown symbolic family tag: {tag!r}") from None
