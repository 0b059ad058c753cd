"""Decompositions of finite spaces and the classification ladder.

A decomposition is a partition of a space into named nonempty strata. Its
quotient map onto the stratum set induces the quotient topology (the
decomposition space) and, through specialization, the decomposition
preorder. The checks in this module grade a decomposition along the
ladder

    decomposition  ->  Alexandrov  ->  poset-stratified  ->  stratification

where each rung is characterized several independent ways. Every
characterization is computed separately and the results are asserted
equal: a disagreement raises InternalInvariantError, since it can only
mean a defect in this library, never bad input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InternalInvariantError, PreconditionError, ValidationError
from .order import Poset, Proset, alexandrov_space, specialization_preorder
from .topology import MAX_POINTS, FiniteSpace, SpaceMap, Verdict, iter_bits

#: The decomposition preorder is an ordinary preorder on stratum ids.
DecompositionPreorder = Proset


@dataclass(frozen=True)
class AgreementReport:
    """Independently computed values of one equivalence group.

    The builder asserts all values equal before constructing the report,
    so ``value`` is well defined. ``witnesses`` carries a human-readable
    counterexample per failing label.
    """

    labels: tuple[str, ...]
    values: tuple[bool, ...]
    witnesses: tuple[tuple[str, str], ...] = ()

    @property
    def value(self) -> bool:
        return self.values[0] if self.values else True

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True)
class StratificationVerdict:
    holds: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class SemicontinuityReport:
    """Saturation formulas and quotient-map properties, evaluated separately.

    Saturating every open set to a union of strata yields opens iff the
    quotient map is open; dually for closed sets and closed maps. The
    classical naming follows the map side: open means lower semicontinuous,
    closed means upper semicontinuous, both means continuous.
    """

    sat_open_open: bool
    sat_closed_closed: bool
    pi_open: bool
    pi_closed: bool

    @property
    def lower_semicontinuous(self) -> bool:
        return self.pi_open

    @property
    def upper_semicontinuous(self) -> bool:
        return self.pi_closed

    @property
    def label(self) -> str:
        if self.pi_open and self.pi_closed:
            return "continuous"
        if self.pi_open:
            return "lower-semicontinuous"
        if self.pi_closed:
            return "upper-semicontinuous"
        return "neither"


@dataclass(frozen=True)
class OrderCheck:
    """How the quotient map behaves against a supplied partial order."""

    continuous: bool
    surjective: bool
    open: bool
    continuity_witness: object = None
    openness_witness: object = None


def _agree(labels, values, witnesses=()) -> AgreementReport:
    if len(set(values)) > 1:
        detail = ", ".join(f"{l}={v}" for l, v in zip(labels, values))
        raise InternalInvariantError(f"equivalent conditions disagree: {detail}")
    return AgreementReport(tuple(labels), tuple(values), tuple(witnesses))


@dataclass(frozen=True, repr=False)
class Decomposition:
    """A finite space with a validated partition into named strata.

    ``strata`` holds (stratum id, point mask) pairs with the ids strictly
    sorted. Strata must be nonempty, pairwise disjoint, and cover the
    space. The induced quotient map sends a point to the id of its
    stratum.
    """

    space: FiniteSpace
    strata: tuple[tuple[str, int], ...]

    def __post_init__(self):
        items = tuple(self.strata)
        object.__setattr__(self, "strata", items)
        ids = [sid for sid, _ in items]
        if ids != sorted(ids) or len(set(ids)) != len(ids):
            raise ValidationError("stratum ids must be unique and sorted")
        for sid in ids:
            if not isinstance(sid, str) or not sid:
                raise ValidationError(f"stratum ids must be nonempty strings, got {sid!r}")
        union = 0
        full = self.space.full_mask
        for sid, mask in items:
            if not isinstance(mask, int) or mask <= 0 or mask > full:
                raise ValidationError(f"stratum empty: {sid!r}")
            if mask & union:
                raise ValidationError("strata not disjoint")
            union |= mask
        if union != full:
            raise ValidationError("strata do not cover the space")

    @classmethod
    def from_strata(
        cls, space: FiniteSpace, strata: Mapping[str, Iterable[str]]
    ) -> "Decomposition":
        items = tuple(
            (sid, space.mask_of(strata[sid])) for sid in sorted(strata)
        )
        return cls(space, items)

    @classmethod
    def pointwise(cls, space: FiniteSpace) -> "Decomposition":
        """One stratum per point, named after the point."""
        return cls.from_strata(space, {p: (p,) for p in space.points})

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{sid}={{{','.join(sorted(self.space.names_of(mask)))}}}"
            for sid, mask in self.strata
        )
        return f"Decomposition({parts})"

    # -- basic accessors -------------------------------------------------

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(sid for sid, _ in self.strata)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask for _, mask in self.strata)

    @property
    def k(self) -> int:
        return len(self.strata)

    @cached_property
    def _point_to_stratum(self) -> tuple[int, ...]:
        out = [0] * len(self.space.points)
        for t, mask in enumerate(self.masks):
            for i in iter_bits(mask):
                out[i] = t
        return tuple(out)

    def stratum(self, sid: str) -> frozenset[str]:
        for s, mask in self.strata:
            if s == sid:
                return self.space.names_of(mask)
        raise ValidationError(f"unknown stratum id: {sid!r}")

    def pi(self, point: str) -> str:
        """Stratum id of a point: the decomposition map."""
        return self.ids[self._point_to_stratum[self.space.point_index(point)]]

    def _strata_meeting_mask(self, point_mask: int) -> int:
        out = 0
        for t, mask in enumerate(self.masks):
            if mask & point_mask:
                out |= 1 << t
        return out

    def _preimage_mask(self, idx_mask: int) -> int:
        out = 0
        for t in iter_bits(idx_mask):
            out |= self.masks[t]
        return out

    # -- quotient topology -------------------------------------------------

    @cached_property
    def quotient_space(self) -> FiniteSpace:
        """The stratum set with the quotient topology.

        The minimal open around stratum i is the least id-set J containing
        i whose preimage is open, reached by saturation: while some point
        of the preimage has a neighborhood escaping it, add the strata that
        neighborhood meets. The least such J exists because sets with open
        preimage are closed under intersection.
        """
        rows = []
        for i in range(self.k):
            j_mask = 1 << i
            while True:
                pre = self._preimage_mask(j_mask)
                hull = self.space.open_hull_mask(pre)
                grown = self._strata_meeting_mask(hull)
                if grown == j_mask:
                    break
                j_mask = grown
            rows.append(j_mask)
        return FiniteSpace(self.ids, tuple(rows))

    def quotient_open_family(self, max_points: int | None = None) -> tuple[int, ...]:
        """All id-sets with open preimage, by brute 2**k filtering.

        This is the definition of the quotient topology; the fixpoint route
        in ``quotient_space`` must induce exactly this family.
        """
        limit = MAX_POINTS if max_points is None else max_points
        if self.k > limit:
            raise ValidationError(
                f"quotient family needs 2**{self.k} candidates; guard is {limit} strata"
            )
        return tuple(
            j for j in range(1 << self.k) if self.space.is_open_mask(self._preimage_mask(j))
        )

    def quotient_space_by_subset_filter(self) -> FiniteSpace:
        """Quotient space built from the filtered open family (oracle route)."""
        family = self.quotient_open_family()
        full = (1 << self.k) - 1
        rows = []
        for i in range(self.k):
            acc = full
            for j in family:
                if (j >> i) & 1:
                    acc &= j
            rows.append(acc)
        return FiniteSpace(self.ids, tuple(rows))

    @cached_property
    def pi_map(self) -> SpaceMap:
        return SpaceMap(self.space, self.quotient_space, self._point_to_stratum)

    # -- decomposition preorder ---------------------------------------------

    def _closed_saturation(self, t: int) -> int:
        """Least id-set containing stratum t whose preimage is closed."""
        j_mask = 1 << t
        while True:
            pre = self._preimage_mask(j_mask)
            grown = self._strata_meeting_mask(self.space.closure_mask(pre))
            if grown == j_mask:
                break
            j_mask = grown
        return j_mask

    @cached_property
    def preorder(self) -> DecompositionPreorder:
        """Specialization preorder of the quotient: i <= j iff i in closure({j}).

        Cross-checked against the direct description: the down-set of j
        must equal the least stratum-set whose preimage is closed, and
        i <= j must coincide with stratum i lying inside that preimage.
        """
        p = specialization_preorder(self.quotient_space)
        for j in range(self.k):
            saturation = self._closed_saturation(j)
            if saturation != p.down[j]:
                raise InternalInvariantError(
                    "decomposition preorder: closed saturation disagrees with down-set"
                )
            closed_union = self._preimage_mask(saturation)
            for i in range(self.k):
                inside = not (self.masks[i] & ~closed_union)
                if inside != bool((p.up[i] >> j) & 1):
                    raise InternalInvariantError(
                        "decomposition preorder: containment description disagrees"
                    )
        return p

    # -- classification rungs -------------------------------------------------

    def locally_finite(self) -> bool:
        """Each point has an open neighborhood meeting finitely many strata.

        The minimal open neighborhood witnesses this for every point of a
        finite space, so the check is real but never fails here; it is kept
        so the stratification test states all of its clauses.
        """
        for i in range(len(self.space.points)):
            meeting = self._strata_meeting_mask(self.space.min_open[i])
            if meeting.bit_count() > self.k:  # unreachable on finite data
                return False
        return True

    def locally_closed_strata(self) -> tuple[tuple[str, Verdict], ...]:
        return tuple(
            (sid, self.space.is_locally_closed(self.space.names_of(mask)))
            for sid, mask in self.strata
        )

    def alexandrov_equivalences(self) -> AgreementReport:
        """Three characterizations of the quotient being an Alexandrov space.

        (1) every stratum has a minimal open neighborhood in the filtered
        quotient family, (2) that family coincides with the up-set topology
        of the decomposition preorder, (3) the quotient map is continuous
        into the preorder topology. All three hold for finite inputs; the
        point of the operation is their agreement.
        """
        family = self.quotient_open_family()
        family_set = frozenset(family)
        full = (1 << self.k) - 1
        has_min_open = True
        for i in range(self.k):
            acc = full
            for j in family:
                if (j >> i) & 1:
                    acc &= j
            if acc not in family_set:
                has_min_open = False
                break
        p = self.preorder
        up_family = frozenset(
            j
            for j in range(1 << self.k)
            if all(not (p.up[i] & ~j) for i in iter_bits(j))
        )
        same_topology = family_set == up_family
        continuous = bool(
            SpaceMap(self.space, alexandrov_space(p), self._point_to_stratum).is_continuous()
        )
        return _agree(
            (
                "quotient_has_minimal_opens",
                "preorder_topology_equals_quotient_topology",
                "map_to_preorder_space_continuous",
            ),
            (has_min_open, same_topology, continuous),
        )

    def frontier_equivalences(self) -> AgreementReport:
        """Four characterizations of the frontier condition.

        (1) a stratum meeting another's closure is contained in it, (2)
        each stratum closure is the minimal closed union of strata around
        it, (3) the decomposition preorder coincides with closure
        containment, (4) the quotient map is open. Witnesses name the
        lexicographically first counterexample.
        """
        closures = [self.space.closure_mask(mask) for mask in self.masks]
        witnesses = []

        frontier = True
        for i in range(self.k):
            for j in range(self.k):
                if self.masks[i] & closures[j] and self.masks[i] & ~closures[j]:
                    frontier = False
                    witnesses.append(
                        (
                            "frontier_condition",
                            f"stratum {self.ids[i]!r} meets the closure of "
                            f"{self.ids[j]!r} without being contained in it",
                        )
                    )
                    break
            if not frontier:
                break

        p = self.preorder
        closure_is_saturation = True
        for j in range(self.k):
            if closures[j] != self._preimage_mask(p.down[j]):
                closure_is_saturation = False
                witnesses.append(
                    (
                        "closure_is_minimal_closed_saturation",
                        f"closure of stratum {self.ids[j]!r} is not a union of strata",
                    )
                )
                break

        order_matches = True
        for i in range(self.k):
            for j in range(self.k):
                contained = not (self.masks[i] & ~closures[j])
                if contained != bool((p.up[i] >> j) & 1):
                    order_matches = False
                    witnesses.append(
                        (
                            "preorder_equals_closure_containment",
                            f"pair ({self.ids[i]!r}, {self.ids[j]!r}) ordered by only "
                            "one of the two descriptions",
                        )
                    )
                    break
            if not order_matches:
                break

        open_verdict = self.pi_map.is_open()
        if not open_verdict:
            witnesses.append(
                (
                    "quotient_map_open",
                    f"open set {sorted(open_verdict.witness)} has a non-open image",
                )
            )

        return _agree(
            (
                "frontier_condition",
                "closure_is_minimal_closed_saturation",
                "preorder_equals_closure_containment",
                "quotient_map_open",
            ),
            (frontier, closure_is_saturation, order_matches, open_verdict.holds),
            witnesses,
        )

    def _pi_continuous_rows(self, up_rows: tuple[int, ...]) -> bool:
        """Continuity of the quotient map into the order topology of up_rows
        (masks over stratum indices)."""
        for s in range(self.k):
            if not self.space.is_open_mask(self._preimage_mask(up_rows[s])):
                return False
        return True

    def _pi_open_rows(self, up_rows: tuple[int, ...]) -> bool:
        """Openness of the quotient map into the order topology of up_rows."""
        for basic in set(self.space.min_open):
            image = self._strata_meeting_mask(basic)
            for s in iter_bits(image):
                if up_rows[s] & ~image:
                    return False
        return True

    def poset_stratified_equivalences(self) -> AgreementReport:
        """Three characterizations of being poset-stratified.

        (1) some partial order on the stratum ids makes the quotient map
        continuous into its order topology (decided by exhaustive search
        for at most four strata, used as a cross-check of the others), (2)
        the decomposition preorder is a partial order and the quotient map
        is continuous into its order topology, (3) every stratum is open in
        the preimage of its minimal closed stratum-set. When the common
        value is true, every order found by the search must contain the
        decomposition preorder (the preorder is initial).
        """
        p = self.preorder
        continuous = self._pi_continuous_rows(p.up)
        cond2 = bool(p.is_poset()) and continuous

        cond3 = True
        for i in range(self.k):
            around = self._preimage_mask(self._closed_saturation(i))
            for x in iter_bits(self.masks[i]):
                if self.space.min_open[x] & around & ~self.masks[i]:
                    cond3 = False
                    break
            if not cond3:
                break

        valid_orders: list[tuple[int, ...]] = []
        if self.k <= 4:
            from .oracle import labeled_poset_rows

            for rows in labeled_poset_rows(self.k):
                if self._pi_continuous_rows(rows):
                    valid_orders.append(rows)
            cond1 = bool(valid_orders)
        else:
            # search is infeasible; fall back to the direct characterization
            cond1 = cond2

        report = _agree(
            (
                "stratified_over_some_partial_order",
                "preorder_is_partial_order_and_map_continuous",
                "strata_open_in_minimal_closed_saturation",
            ),
            (cond1, cond2, cond3),
        )
        if report.value:
            for rows in valid_orders:
                if any(p.up[i] & ~rows[i] for i in range(self.k)):
                    raise InternalInvariantError(
                        "decomposition preorder not contained in a valid partial order"
                    )
        return report

    def is_stratification(self) -> StratificationVerdict:
        """Local finiteness, locally closed strata, and the frontier condition.

        Also cross-checks the combination law: locally closed strata plus
        the frontier condition must coincide with being poset-stratified
        with an open quotient map.
        """
        reasons = []
        if not self.locally_finite():
            reasons.append("decomposition is not locally finite")
        locally_closed = self.locally_closed_strata()
        for sid, verdict in locally_closed:
            if not verdict:
                reasons.append(f"stratum {sid!r} is not locally closed")
        frontier_report = self.frontier_equivalences()
        if not frontier_report.value:
            reasons.append("frontier condition fails")
        holds = not reasons

        all_lc = all(v.holds for _, v in locally_closed)
        combined = all_lc and frontier_report.value
        other = self.poset_stratified_equivalences().value and bool(self.pi_map.is_open())
        if combined != other:
            raise InternalInvariantError(
                "locally closed strata + frontier condition disagrees with "
                "poset-stratified + open quotient map"
            )
        return StratificationVerdict(holds, tuple(reasons))

    def check_against_order(self, order: Poset) -> OrderCheck:
        """Behavior of the quotient map into the order topology of a given
        partial order on the stratum ids.

        Ids with no preimage cannot appear: the order elements must be
        exactly the stratum ids (see ``order_restricted_to_nonempty`` for
        the explicit filtering convenience).
        """
        _require_matching_elements(self, order)
        target = alexandrov_space(order)
        f = SpaceMap.from_names(
            self.space, target, {p: self.pi(p) for p in self.space.points}
        )
        cont = f.is_continuous()
        opn = f.is_open()
        # every order element is a stratum id and strata are nonempty
        surjective = True
        return OrderCheck(
            continuous=cont.holds,
            surjective=surjective,
            open=opn.holds,
            continuity_witness=None if cont else cont.witness,
            openness_witness=None if opn else opn.witness,
        )

    def coarsen(self) -> tuple["Decomposition", "PosetStratification"]:
        """Merge strata along the equivalence classes of the preorder.

        The merged decomposition is poset-stratified over the reflection of
        the decomposition preorder; classes are named by their least member
        id. Two strata land in the same class exactly when their minimal
        closed stratum-unions coincide, which is asserted.
        """
        p = self.preorder
        classes = p.equivalence_classes()
        merged: dict[str, int] = {}
        for members in classes:
            mask = 0
            for sid in members:
                mask |= self.masks[self.ids.index(sid)]
            merged[members[0]] = mask
        poset, _ = p.reflection()

        for i in range(self.k):
            for j in range(self.k):
                same_class = bool(p.up[i] & (1 << j)) and bool(p.up[j] & (1 << i))
                same_saturation = self._closed_saturation(i) == self._closed_saturation(j)
                if same_class != same_saturation:
                    raise InternalInvariantError(
                        "coarsening classes disagree with closed saturations"
                    )

        dec = Decomposition(
            self.space, tuple(sorted((sid, mask) for sid, mask in merged.items()))
        )
        return dec, PosetStratification(dec, poset)

    def semicontinuity(self) -> SemicontinuityReport:
        """Saturation formulas versus quotient-map properties.

        Saturation (preimage of image) commutes with unions, so it is
        enough to saturate the minimal opens and the point closures. Each
        saturation formula must agree with its map-side counterpart.
        """
        sat_open_open = True
        for basic in set(self.space.min_open):
            sat = self._preimage_mask(self._strata_meeting_mask(basic))
            if not self.space.is_open_mask(sat):
                sat_open_open = False
                break
        sat_closed_closed = True
        for i in range(len(self.space.points)):
            basic = self.space.closure_mask(1 << i)
            sat = self._preimage_mask(self._strata_meeting_mask(basic))
            if not self.space.is_closed_mask(sat):
                sat_closed_closed = False
                break
        pi_open = bool(self.pi_map.is_open())
        pi_closed = bool(self.pi_map.is_closed())
        if sat_open_open != pi_open:
            raise InternalInvariantError("open saturation disagrees with quotient map openness")
        if sat_closed_closed != pi_closed:
            raise InternalInvariantError(
                "closed saturation disagrees with quotient map closedness"
            )
        return SemicontinuityReport(sat_open_open, sat_closed_closed, pi_open, pi_closed)


def _require_matching_elements(d: Decomposition, order: Poset) -> None:
    extra = set(order.elements) - set(d.ids)
    if extra:
        raise ValidationError(
            f"order element {sorted(extra)[0]!r} has empty preimage in the decomposition"
        )
    missing = set(d.ids) - set(order.elements)
    if missing:
        raise ValidationError(f"order is missing stratum id {sorted(missing)[0]!r}")


def order_restricted_to_nonempty(d: Decomposition, order: Poset) -> Poset:
    """Drop order elements with empty preimage, logging what was removed.

    Convenience for orders indexing more strata than the decomposition
    has; the strict constructors reject such orders outright.
    """
    import logging

    keep = [e for e in order.elements if e in set(d.ids)]
    dropped = [e for e in order.elements if e not in set(d.ids)]
    if dropped:
        logging.getLogger(__name__).info(
            "dropping order elements with empty preimage: %s", ", ".join(sorted(dropped))
        )
    pairs = [
        (a, b)
        for a in keep
        for b in keep
        if a != b and order.leq(a, b)
    ]
    return Poset.from_pairs(keep, pairs, close=True)


@dataclass(frozen=True, repr=False)
class PosetStratification:
    """A decomposition together with a partial order on its stratum ids
    making the quotient map a continuous surjection onto the order
    topology. Both properties are validated at construction."""

    dec: Decomposition
    order: Poset

    def __post_init__(self):
        _require_matching_elements(self.dec, self.order)
        if not self.pi_into_order.is_continuous():
            raise ValidationError(
                "decomposition map is not continuous for the given order"
            )

    @cached_property
    def pi_into_order(self) -> SpaceMap:
        target = alexandrov_space(self.order)
        return SpaceMap.from_names(
            self.dec.space, target, {p: self.dec.pi(p) for p in self.dec.space.points}
        )

    def __repr__(self) -> str:
        return f"PosetStratification({self.dec!r}, order={self.order!r})"


# -- derived constructions ---------------------------------------------------


def as_poset_stratified(d: Decomposition) -> PosetStratification:
    """View a stratification as poset-stratified over its frontier order.

    Requires ``is_stratification``; the failed clauses are reported
    otherwise. The resulting order is the decomposition preorder, which is
    asserted to be antisymmetric, to coincide with closure containment of
    strata, and to make the quotient map continuous.
    """
    verdict = d.is_stratification()
    if not verdict:
        raise PreconditionError(
            "input decomposition is not a stratification", reasons=verdict.reasons
        )
    p = d.preorder
    if not p.is_poset():
        raise InternalInvariantError("stratification produced a non-antisymmetric preorder")
    closures = [d.space.closure_mask(mask) for mask in d.masks]
    for i in range(d.k):
        for j in range(d.k):
            contained = not (d.masks[i] & ~closures[j])
            if contained != bool((p.up[i] >> j) & 1):
                raise InternalInvariantError(
                    "stratification order differs from closure containment"
                )
    order = Poset(p.elements, p.up)
    try:
        return PosetStratification(d, order)
    except ValidationError as exc:  # guaranteed continuous for stratifications
        raise InternalInvariantError(str(exc)) from exc


@dataclass(frozen=True)
class OpenMapStratificationReport:
    """Outcome of confirming a stratification from an open quotient map."""

    order_space_locally_finite: bool
    pi_open: bool
    stratification: bool
    order_refines_decomposition_preorder: bool


def stratification_from_open_map(ps: PosetStratification) -> OpenMapStratificationReport:
    """A poset-stratified space over a locally finite order topology with an
    open quotient map decomposes into a stratification.

    The hypotheses are checked and reported (failure raises
    PreconditionError naming the failed one; local finiteness always holds
    at finite scale). The conclusion and the refinement property of the
    supplied order are asserted.
    """
    d = ps.dec
    order_space = alexandrov_space(ps.order)
    locally_finite = all(
        order_space.min_open[i].bit_count() < (1 << len(order_space.points))
        for i in range(len(order_space.points))
    )
    if not locally_finite:  # unreachable on finite data
        raise PreconditionError("order topology is not locally finite")
    open_verdict = ps.pi_into_order.is_open()
    if not open_verdict:
        raise PreconditionError(
            "decomposition map is not an open map for the supplied order",
            reasons=(f"open set {sorted(open_verdict.witness)} has a non-open image",),
        )
    verdict = d.is_stratification()
    if not verdict:
        raise InternalInvariantError(
            "open map over a locally finite order did not yield a stratification: "
            + "; ".join(verdict.reasons)
        )
    p = d.preorder
    for i, sid in enumerate(d.ids):
        for j in iter_bits(p.up[i]):
            if not ps.order.leq(sid, d.ids[j]):
                raise InternalInvariantError(
                    "supplied order does not refine the decomposition preorder"
                )
    return OpenMapStratificationReport(
        order_space_locally_finite=True,
        pi_open=True,
        stratification=True,
        order_refines_decomposition_preorder=True,
    )


@dataclass(frozen=True)
class CompatibleOrdersReport:
    """All partial orders on the stratum ids that make the quotient map
    continuous; the decomposition preorder is contained in each."""

    orders: tuple[Poset, ...]

    @property
    def count(self) -> int:
        return len(self.orders)


def compatible_orders(d: Decomposition, bound: int = 4) -> CompatibleOrdersReport:
    """Enumerate the partial orders a poset-stratified decomposition works
    over, asserting the decomposition preorder is initial among them."""
    if not d.poset_stratified_equivalences().value:
        raise PreconditionError("decomposition is not poset-stratified")
    if d.k > bound:
        raise ValidationError(f"stratum count {d.k} exceeds the enumeration bound {bound}")
    from .oracle import labeled_poset_rows

    p = d.preorder
    found = []
    for rows in labeled_poset_rows(d.k):
        if d._pi_continuous_rows(rows):
            if any(p.up[i] & ~rows[i] for i in range(d.k)):
                raise InternalInvariantError(
                    "decomposition preorder not contained in a compatible order"
                )
            found.append(Poset(d.ids, rows))
    return CompatibleOrdersReport(tuple(found))


@dataclass(frozen=True)
class RefinementReport:
    refinements_tested: int


def strict_refinements_never_open(d: Decomposition, bound: int = 4) -> RefinementReport:
    """Over every strict refinement of the frontier order of a
    stratification, the quotient map stays continuous but is never open."""
    verdict = d.is_stratification()
    if not verdict:
        raise PreconditionError(
            "input decomposition is not a stratification", reasons=verdict.reasons
        )
    if d.k > bound:
        raise ValidationError(f"stratum count {d.k} exceeds the enumeration bound {bound}")
    from .oracle import labeled_poset_rows

    base = d.preorder.up
    tested = 0
    for rows in labeled_poset_rows(d.k):
        if rows == base or any(base[i] & ~rows[i] for i in range(d.k)):
            continue
        tested += 1
        if not d._pi_continuous_rows(rows):
            raise InternalInvariantError("refinement broke continuity of the quotient map")
        if d._pi_open_rows(rows):
            raise InternalInvariantError("quotient map became open over a strict refinement")
    return RefinementReport(tested)


# -- the aggregated report -----------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Every classification rung for one decomposition, with witnesses."""

    alexandrov: AgreementReport
    locally_finite: bool
    locally_closed: tuple[tuple[str, bool], ...]
    frontier: AgreementReport
    poset_stratified: AgreementReport
    stratification: StratificationVerdict
    semicontinuity: SemicontinuityReport

    @property
    def witnesses(self) -> tuple[tuple[str, str], ...]:
        return tuple(self.frontier.witnesses)

    def verdict(self) -> str:
        """Highest rung of the ladder the decomposition reaches."""
        if self.stratification.holds:
            return "stratification"
        if self.poset_stratified.value:
            return "poset-stratified"
        if self.alexandrov.value:
            return "alexandrov"
        return "decomposition"

    def to_json_dict(self) -> dict:
        return {
            "alexandrov": dict(zip(self.alexandrov.labels, self.alexandrov.values)),
            "locally_finite": self.locally_finite,
            "locally_closed": dict(self.locally_closed),
            "frontier": dict(zip(self.frontier.labels, self.frontier.values)),
            "poset_stratified": dict(
                zip(self.poset_stratified.labels, self.poset_stratified.values)
            ),
            "stratification": {
                "holds": self.stratification.holds,
                "reasons": list(self.stratification.reasons),
            },
            "semicontinuity": {
                "sat_open_open": self.semicontinuity.sat_open_open,
                "sat_closed_closed": self.semicontinuity.sat_closed_closed,
                "pi_open": self.semicontinuity.pi_open,
                "pi_closed": self.semicontinuity.pi_closed,
                "label": self.semicontinuity.label,
            },
            "verdict": self.verdict(),
            "witnesses": dict(self.witnesses),
        }


def classify(d: Decomposition) -> ClassificationReport:
    """Run every classification check and collect the results."""
    return ClassificationReport(
        alexandrov=d.alexandrov_equivalences(),
        locally_finite=d.locally_finite(),
        locally_closed=tuple((sid, v.holds) for sid, v in d.locally_closed_strata()),
        frontier=d.frontier_equivalences(),
        poset_stratified=d.poset_stratified_equivalences(),
        stratification=d.is_stratification(),
        semicontinuity=d.semicontinuity(),
    )
