from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from stratkit import (
    FiniteSpace,
    MonotoneMap,
    Poset,
    Proset,
    ValidationError,
    adjunction_roundtrips,
    alexandrov_space,
    singleton_local_closure_check,
    specialization_preorder,
    symbolic_local_finiteness,
)
from stratkit.oracle import enumerate_prosets


def diamond() -> Poset:
    return Poset.from_pairs("0123", [("0", "1"), ("0", "2"), ("1", "3"), ("2", "3")])


@st.composite
def random_prosets(draw, max_elements: int = 5) -> Proset:
    n = draw(st.integers(0, max_elements))
    elements = tuple(f"e{i}" for i in range(n))
    if n == 0:
        return Proset.from_pairs((), [])
    pairs = draw(
        st.lists(
            st.tuples(st.sampled_from(elements), st.sampled_from(elements)), max_size=8
        )
    )
    return Proset.from_pairs(elements, pairs, close=True)


class TestConstruction:
    def test_closure_infers_transitivity(self):
        p = Proset.from_pairs("012", [("0", "1"), ("1", "2")], close=True)
        assert p.leq("0", "2")

    def test_two_cycle_is_not_a_poset(self):
        p = Proset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")], close=True)
        verdict = p.is_poset()
        assert not verdict and verdict.witness == ("i", "j")

    def test_no_pairs_gives_discrete_order(self):
        p = Proset.from_pairs(("0", "1"), [], close=True)
        assert p.leq("0", "0") and not p.leq("0", "1") and not p.leq("1", "0")

    def test_unclosed_input_must_be_reflexive(self):
        with pytest.raises(ValidationError, match=r"not reflexive: \('a', 'a'\)"):
            Proset.from_pairs(("a", "b"), [("a", "b")], close=False)

    def test_unclosed_input_must_be_transitive(self):
        pairs = [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]
        with pytest.raises(ValidationError, match=r"not transitive: \('a', 'c'\)"):
            Proset.from_pairs(("a", "b", "c"), pairs, close=False)

    def test_explicit_preorder_accepted_without_closing(self):
        pairs = [("a", "a"), ("b", "b"), ("a", "b")]
        p = Proset.from_pairs(("a", "b"), pairs, close=False)
        assert p.leq("a", "b")

    def test_unknown_element_in_pair(self):
        with pytest.raises(ValidationError, match="unknown element"):
            Proset.from_pairs(("a",), [("a", "zz")])

    def test_poset_constructor_rejects_cycles(self):
        with pytest.raises(ValidationError, match="not antisymmetric"):
            Poset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")])


class TestOrderTopology:
    def test_chain_gives_sierpinski(self):
        p = Proset.from_pairs(("0", "1"), [("0", "1")])
        space = alexandrov_space(p)
        assert helpers.open_masks(space) == [0b00, 0b10, 0b11]

    def test_diamond_min_opens(self):
        space = alexandrov_space(diamond())
        assert space.minimal_open("0") == {"0", "1", "2", "3"}
        assert space.minimal_open("1") == {"1", "3"}
        assert space.minimal_open("2") == {"2", "3"}
        assert space.minimal_open("3") == {"3"}

    def test_antichain_gives_discrete(self):
        p = Proset.from_pairs(("0", "1"), [])
        assert alexandrov_space(p) == FiniteSpace.discrete(("0", "1"))

    def test_opens_are_exactly_up_sets(self):
        for n in range(5):
            for p in enumerate_prosets(n):
                space = alexandrov_space(p)
                for mask in range(1 << n):
                    up_closed = all(
                        not (p.up[i] & ~mask) for i in range(n) if (mask >> i) & 1
                    )
                    assert space.is_open_mask(mask) == up_closed

    def test_specialization_preorder_of_two_point_discrete(self):
        p = specialization_preorder(FiniteSpace.discrete(("0", "1")))
        assert not p.leq("0", "1") and not p.leq("1", "0")

    def test_specialization_preorder_of_sierpinski(self, sierpinski):
        p = specialization_preorder(sierpinski)
        assert p.leq("c", "o") and not p.leq("o", "c")

    def test_specialization_preorder_of_pseudo_circle(self):
        space = FiniteSpace.from_subbasis(
            "abxy", [("a",), ("b",), ("a", "b", "x"), ("a", "b", "y")]
        )
        p = specialization_preorder(space)
        expected = {("x", "a"), ("x", "b"), ("y", "a"), ("y", "b")}
        actual = {
            (a, b)
            for a in space.points
            for b in space.points
            if a != b and p.leq(a, b)
        }
        assert actual == expected


class TestAdjunction:
    def test_two_cycle_roundtrip(self):
        p = Proset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")])
        report = adjunction_roundtrips(p, alexandrov_space(p))
        assert report.unit_is_identity and report.counit_is_identity

    def test_pseudo_circle_roundtrip(self):
        space = FiniteSpace.from_subbasis(
            "abxy", [("a",), ("b",), ("a", "b", "x"), ("a", "b", "y")]
        )
        assert alexandrov_space(specialization_preorder(space)) == space

    def test_exhaustive_on_three_elements(self):
        seen = 0
        for p in enumerate_prosets(3):
            adjunction_roundtrips(p, alexandrov_space(p))
            seen += 1
        assert seen == 29


class TestReflection:
    def test_two_cycle_collapses(self):
        p = Proset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")])
        poset, q = p.reflection()
        assert poset.elements == ("i",)
        assert q.apply("i") == q.apply("j") == "i"
        assert q.is_monotone()

    def test_poset_reflects_to_itself(self):
        d = diamond()
        poset, q = d.reflection()
        assert poset.elements == d.elements and poset.up == d.up
        assert len(set(q.assignment)) == len(d.elements)  # bijection

    def test_three_cycle_collapses(self):
        p = Proset.from_pairs("012", [("0", "1"), ("1", "2"), ("2", "0")])
        poset, _ = p.reflection()
        assert len(poset.elements) == 1

    def test_reflection_idempotent(self):
        for p in enumerate_prosets(3):
            poset, _ = p.reflection()
            again, _ = poset.reflection()
            assert again.elements == poset.elements and again.up == poset.up


class TestNeighborhoods:
    def test_diamond_top(self):
        d = diamond()
        assert d.up_set("3") == {"3"}
        assert d.down_set("3") == {"0", "1", "2", "3"}

    def test_chain_middle(self):
        p = Proset.from_pairs("012", [("0", "1"), ("1", "2")])
        assert p.up_set("1") == {"1", "2"}
        assert p.down_set("1") == {"0", "1"}

    def test_antichain(self):
        p = Proset.from_pairs(("a", "b"), [])
        assert p.up_set("a") == {"a"} and p.down_set("a") == {"a"}

    def test_unknown_element(self):
        with pytest.raises(ValidationError, match="unknown element"):
            diamond().up_set("9")

    def test_up_down_are_min_open_and_min_closed(self):
        for p in enumerate_prosets(3):
            space = alexandrov_space(p)
            for e in p.elements:
                up = space.mask_of(p.up_set(e))
                down = space.mask_of(p.down_set(e))
                assert up == space.min_open[space.point_index(e)]
                assert down == space.closure_mask(1 << space.point_index(e))


class TestSingletonLocalClosure:
    def test_chain_is_poset(self):
        p = Proset.from_pairs("012", [("0", "1"), ("1", "2")])
        assert singleton_local_closure_check(p)

    def test_two_cycle_is_not(self):
        p = Proset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")])
        assert not singleton_local_closure_check(p)
        space = alexandrov_space(p)
        assert not space.is_locally_closed(("i",))

    def test_agreement_on_all_small_prosets(self):
        for n in range(5):
            for p in enumerate_prosets(n):
                singleton_local_closure_check(p)  # raises on disagreement


class TestHasse:
    def test_chain_covers(self):
        p = Poset.from_pairs("012", [("0", "1"), ("1", "2")])
        assert p.hasse() == (("0", "1"), ("1", "2"))

    def test_diamond_covers(self):
        assert diamond().hasse() == (
            ("0", "1"),
            ("0", "2"),
            ("1", "3"),
            ("2", "3"),
        )

    def test_antichain_has_no_covers(self):
        assert Poset.from_pairs(("a", "b"), []).hasse() == ()

    def test_closure_of_covers_recovers_the_order(self):
        from stratkit.oracle import enumerate_posets

        for n in range(5):
            for p in enumerate_posets(n):
                rebuilt = Poset.from_pairs(p.elements, p.hasse(), close=True)
                assert rebuilt.up == p.up


class TestMonotoneMap:
    def test_monotone_witness(self):
        chain = Poset.from_pairs(("0", "1"), [("0", "1")])
        anti = Poset.from_pairs(("a", "b"), [])
        f = MonotoneMap.from_names(chain, anti, {"0": "a", "1": "b"})
        verdict = f.is_monotone()
        assert not verdict and verdict.witness == ("0", "1")

    def test_quotient_map_is_monotone(self):
        for p in enumerate_prosets(3):
            _, q = p.reflection()
            assert q.is_monotone()


class TestSymbolicFamilies:
    def test_usual_order_splits_the_notions(self):
        fam = symbolic_local_finiteness("NatUsual")
        assert not fam.locally_finite_space
        assert fam.locally_finite_poset

    def test_discrete_and_opposite(self):
        for tag in ("NatDiscrete", "NatOpposite"):
            fam = symbolic_local_finiteness(tag)
            assert fam.locally_finite_space and fam.locally_finite_poset

    def test_justifications_present(self):
        for tag in ("NatUsual", "NatDiscrete", "NatOpposite"):
            fam = symbolic_local_finiteness(tag)
            assert fam.space_reason and fam.poset_reason

    def test_unknown_tag(self):
        with pytest.raises(ValidationError, match="unknown symbolic family"):
            symbolic_local_finiteness("IntUsual")

    def test_finite_prosets_are_locally_finite_both_ways(self):
        # documented degeneracy: both notions hold identically at finite scale
        for p in enumerate_prosets(3):
            for e in p.elements:
                assert len(p.up_set(e)) < 10**9
                for f in p.elements:
                    assert len(p.up_set(e) & p.down_set(f)) < 10**9


class TestRandomizedLaws:
    @given(random_prosets())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip(self, p):
        adjunction_roundtrips(p, alexandrov_space(p))

    @given(random_prosets())
    @settings(max_examples=60, deadline=None)
    def test_reflection_produces_poset(self, p):
        poset, q = p.reflection()
        assert poset.is_poset()
        assert q.is_monotone()
        # reflecting again changes nothing
        again, _ = poset.reflection()
        assert again == poset
