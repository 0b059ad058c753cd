from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratkit import (
    Decomposition,
    FiniteSpace,
    ParseError,
    Poset,
    Proset,
    SpaceMap,
    ValidationError,
    classify,
    export_dot,
    face_poset_model,
    fixture,
    fixture_names,
    generate,
    load,
    save,
)
from stratkit.documents import Document


class TestRoundTrips:
    def test_save_load_save_is_identity(self):
        text = save(fixture("line_3").document)
        doc = load(text)
        assert save(doc) == text
        assert isinstance(doc.value, Decomposition)
        assert len(doc.value.ids) == 2

    def test_subbasis_input_is_normalized(self):
        text = json.dumps(
            {"kind": "space", "points": ["c", "o"], "subbasis": [["o"]]}
        )
        doc = load(text)
        assert doc.value.minimal_open("c") == {"c", "o"}
        assert "min_open" in save(doc) and "subbasis" not in save(doc)

    def test_canonical_output_is_sorted(self):
        a = save(Document("space", FiniteSpace.discrete(("b", "a"))))
        b = save(Document("space", FiniteSpace.discrete(("a", "b"))))
        assert a == b

    def test_all_fixtures_round_trip(self):
        for name in fixture_names():
            text = save(fixture(name).document)
            assert save(load(text)) == text

    def test_map_document_round_trip(self, sierpinski):
        f = SpaceMap.from_names(sierpinski, sierpinski, {"c": "c", "o": "o"})
        text = save(Document("map", f))
        doc = load(text)
        assert isinstance(doc.value, SpaceMap)
        assert save(doc) == text

    def test_proset_document_with_cycle(self):
        p = Proset.from_pairs(("i", "j"), [("i", "j"), ("j", "i")])
        doc = load(save(Document("proset", p)))
        assert doc.value.leq("i", "j") and doc.value.leq("j", "i")

    def test_order_on_strata_is_a_poset(self):
        text = json.dumps(
            {
                "kind": "order-on-strata",
                "elements": ["S0", "S1"],
                "leq_pairs": [["S0", "S1"]],
                "close": True,
            }
        )
        assert isinstance(load(text).value, Poset)

    def test_fixture_space_reference(self):
        text = json.dumps(
            {
                "kind": "decomposition",
                "space": {"fixture": "line_3"},
                "strata": {"A": ["m", "z", "p"]},
            }
        )
        dec = load(text).value
        assert dec.stratum("A") == {"m", "z", "p"}


class TestErrors:
    def test_parse_error_carries_position(self):
        with pytest.raises(ParseError) as exc:
            load("{not json")
        assert exc.value.line == 1 and exc.value.column is not None

    def test_unknown_kind(self):
        with pytest.raises(ValidationError, match="unknown document kind"):
            load(json.dumps({"kind": "homology"}))

    def test_overlapping_strata(self):
        text = json.dumps(
            {
                "kind": "decomposition",
                "space": {"fixture": "sierpinski"},
                "strata": {"A": ["c", "o"], "B": ["o"]},
            }
        )
        with pytest.raises(ValidationError, match="strata not disjoint"):
            load(text)

    def test_space_needs_exactly_one_table(self):
        with pytest.raises(ValidationError, match="exactly one"):
            load(json.dumps({"kind": "space", "points": ["a"]}))

    def test_symbolic_family_must_match_catalog(self):
        with pytest.raises(ValidationError, match="disagrees with the catalog"):
            load(
                json.dumps(
                    {
                        "kind": "symbolic-family",
                        "tag": "NatUsual",
                        "locally_finite_space": True,
                    }
                )
            )


class TestFixtureCatalog:
    def test_known_names(self):
        assert fixture_names() == (
            "chain_3",
            "line_3",
            "nat_discrete",
            "nat_opposite",
            "nat_usual",
            "pseudo_circle_4",
            "quadrant_4",
            "sierpinski",
            "two_point_discrete",
        )

    def test_unknown_fixture(self):
        with pytest.raises(ValidationError, match="unknown fixture"):
            fixture("nope")

    def test_pseudo_circle_shape(self):
        dec = fixture("pseudo_circle_4").document.value
        assert len(dec.space.points) == 4 and len(dec.ids) == 2

    def test_quadrant_shape(self):
        dec = fixture("quadrant_4").document.value
        assert len(dec.space.points) == 4 and len(dec.ids) == 4

    def test_notes_present(self):
        for name in fixture_names():
            assert fixture(name).notes


class TestFacePosets:
    def test_single_edge(self):
        model = face_poset_model([("v0", "v1")])
        assert len(model.poset.elements) == 3
        assert model.poset.leq("v0", "v0,v1")
        assert model.poset.leq("v1", "v0,v1")

    def test_triangle_boundary_skeleton_is_a_stratification(self):
        model = face_poset_model([("A", "B"), ("B", "C"), ("A", "C")])
        assert len(model.poset.elements) == 6
        skeleton = model.skeleton()
        assert skeleton.ids == ("d0", "d1")
        assert skeleton.is_stratification()

    def test_single_vertex(self):
        model = face_poset_model([("v",)])
        assert model.space.points == ("v",)

    def test_empty_facet_rejected(self):
        with pytest.raises(ValidationError, match="empty facet"):
            face_poset_model([()])


class TestGenerate:
    def test_density_zero_is_discrete(self):
        doc = generate("preorder", 3, {"density": 0.0}, seed=99)
        p = doc.value
        assert all(not p.leq(a, b) for a in p.elements for b in p.elements if a != b)

    def test_density_one_is_indiscrete(self):
        doc = generate("preorder", 3, {"density": 1.0}, seed=99)
        p = doc.value
        assert all(p.leq(a, b) for a in p.elements for b in p.elements)

    def test_determinism(self):
        args = ("preorder", 4, {"density": 0.4}, 123456789)
        assert save(generate(*args)) == save(generate(*args))
        args = ("partition", 4, {"blocks": 2}, 42)
        assert save(generate(*args)) == save(generate(*args))

    def test_different_seeds_differ(self):
        texts = {save(generate("preorder", 4, {"density": 0.5}, s)) for s in range(20)}
        assert len(texts) > 1

    def test_partition_block_count_and_relabeling(self):
        dec = generate("partition", 6, {"blocks": 3}, seed=7).value
        assert len(dec.ids) == 3
        assert dec.ids == ("0", "1", "2")
        # canonical relabeling: block "0" owns the first point
        assert dec.pi(dec.space.points[0]) == "0"

    def test_partition_over_fixture_space(self):
        dec = generate("partition", 4, {"space": "quadrant_4", "blocks": 2}, seed=3).value
        assert set(dec.space.points) == {"0", "1", "2", "3"}
        assert len(dec.ids) == 2

    def test_invalid_params(self):
        with pytest.raises(ValidationError, match="density"):
            generate("preorder", 3, {"density": 1.5}, seed=0)
        with pytest.raises(ValidationError, match="blocks"):
            generate("partition", 3, {"blocks": 9}, seed=0)
        with pytest.raises(ValidationError, match="kind"):
            generate("lattice", 3, {}, seed=0)
        with pytest.raises(ValidationError, match="points but n="):
            generate("partition", 5, {"space": "quadrant_4"}, seed=0)

    def test_generated_documents_validate(self):
        for seed in range(30):
            doc = generate("preorder", 4, {"density": 0.5}, seed)
            assert isinstance(doc.value, Proset)
            doc = generate("partition", 5, {}, seed)
            assert isinstance(doc.value, Decomposition)

    @given(st.integers(min_value=0, max_value=2**64 - 1), st.integers(0, 5))
    @settings(max_examples=50, deadline=None)
    def test_generate_round_trips_through_documents(self, seed, n):
        doc = generate("preorder", n, {"density": 0.3}, seed)
        assert save(load(save(doc))) == save(doc)


class TestDotExport:
    def test_chain(self):
        p = Poset.from_pairs("012", [("0", "1"), ("1", "2")])
        text = export_dot(p)
        assert '"0" -> "1";' in text and '"1" -> "2";' in text
        assert '"0" -> "2";' not in text

    def test_quadrant_decomposition(self, quadrant_4):
        text = export_dot(quadrant_4)
        assert text.count("->") == 4
        assert "verdict: stratification" in text
        assert "locally closed" in text

    def test_antichain_has_nodes_only(self):
        text = export_dot(Poset.from_pairs(("a", "b"), []))
        assert '"a";' in text and "->" not in text

    def test_preorder_cycles_render_dashed(self, pseudo_circle_4):
        text = export_dot(pseudo_circle_4.preorder)
        assert "style=dashed" in text

    def test_determinism(self, quadrant_4):
        assert export_dot(quadrant_4) == export_dot(quadrant_4)
