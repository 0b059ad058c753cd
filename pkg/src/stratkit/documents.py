"""JSON document format for spaces, orders, decompositions, and maps.

One document per value, dispatched on a "kind" key:

    space            {"kind": "space", "points": [...],
                      "min_open": {pt: [pts]}}        or "subbasis": [[pts]]
    proset / poset   {"kind": ..., "elements": [...],
                      "leq_pairs": [[a, b], ...], "close": bool}
    order-on-strata  poset payload whose elements name strata
    decomposition    {"kind": "decomposition", "space": <space|{"fixture": name}>,
                      "strata": {id: [pts]}}
    map              {"kind": "map", "source": <space>, "target": <space>,
                      "assignment": {pt: pt}}
    symbolic-family  {"kind": "symbolic-family", "tag": ...} plus the
                      catalog answers

Saving is canonical: keys sorted, point and element lists sorted, the
subbasis form normalized to min_open, relations written as their
non-reflexive pairs with close=true. Structurally equal values therefore
serialize identically, and load(save(x)) returns x for loaded documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .decomposition import Decomposition
from .errors import ParseError, ValidationError
from .order import SYMBOLIC_FAMILIES, Poset, Proset, SymbolicFamily
from .topology import FiniteSpace, SpaceMap, iter_bits

KINDS = (
    "space",
    "proset",
    "poset",
    "decomposition",
    "map",
    "order-on-strata",
    "symbolic-family",
)


@dataclass(frozen=True)
class Document:
    kind: str
    value: object


def load(text: str) -> Document:
    """Parse and validate one document."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            line=exc.lineno,
            column=exc.colno,
        ) from None
    return from_payload(payload)


def save(doc: Document) -> str:
    """Serialize one document canonically."""
    return json.dumps(payload_of(doc.value, kind=doc.kind), sort_keys=True, indent=2) + "\n"


def from_payload(payload: object) -> Document:
    if not isinstance(payload, dict):
        raise ValidationError("document must be a JSON object")
    kind = payload.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"unknown document kind: {kind!r}")
    if kind == "space":
        return Document(kind, _space_from(payload))
    if kind in ("proset", "poset", "order-on-strata"):
        return Document(kind, _relation_from(payload, kind))
    if kind == "decomposition":
        return Document(kind, _decomposition_from(payload))
    if kind == "map":
        return Document(kind, _map_from(payload))
    return Document(kind, _symbolic_from(payload))


def payload_of(value: object, kind: str | None = None) -> dict:
    """Canonical JSON payload for a supported value."""
    if isinstance(value, FiniteSpace):
        return _space_payload(value)
    if isinstance(value, Decomposition):
        return _decomposition_payload(value)
    if isinstance(value, Poset):
        return _relation_payload(value, kind or "poset")
    if isinstance(value, Proset):
        return _relation_payload(value, kind or "proset")
    if isinstance(value, SpaceMap):
        return _map_payload(value)
    if isinstance(value, SymbolicFamily):
        return _symbolic_payload(value)
    raise ValidationError(f"cannot serialize value of type {type(value).__name__}")


# -- spaces -------------------------------------------------------------------


def _space_payload(space: FiniteSpace) -> dict:
    pts = sorted(space.points)
    return {
        "kind": "space",
        "points": pts,
        "min_open": {
            p: sorted(space.names_of(space.min_open[space.point_index(p)])) for p in pts
        },
    }


def _space_from(payload: dict) -> FiniteSpace:
    points = _string_list(payload, "points")
    has_min_open = "min_open" in payload
    has_subbasis = "subbasis" in payload
    if has_min_open == has_subbasis:
        raise ValidationError("space needs exactly one of min_open or subbasis")
    if has_min_open:
        table = payload["min_open"]
        if not isinstance(table, dict):
            raise ValidationError("min_open must be an object mapping points to point lists")
        return FiniteSpace.from_min_open(points, {k: tuple(v) for k, v in table.items()})
    gens = payload["subbasis"]
    if not isinstance(gens, list):
        raise ValidationError("subbasis must be a list of point lists")
    return FiniteSpace.from_subbasis(points, [tuple(g) for g in gens])


# -- relations ------------------------------------------------------------------


def _relation_payload(p: Proset, kind: str) -> dict:
    els = sorted(p.elements)
    pairs = sorted(
        [a, p.elements[j]]
        for i, a in enumerate(p.elements)
        for j in iter_bits(p.up[i])
        if p.elements[j] != a
    )
    return {"kind": kind, "elements": els, "leq_pairs": pairs, "close": True}


def _relation_from(payload: dict, kind: str) -> Proset:
    elements = _string_list(payload, "elements")
    raw = payload.get("leq_pairs", [])
    if not isinstance(raw, list):
        raise ValidationError("leq_pairs must be a list of element pairs")
    pairs = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValidationError(f"leq_pairs entries must be pairs, got {item!r}")
        pairs.append((item[0], item[1]))
    close = payload.get("close", True)
    if not isinstance(close, bool):
        raise ValidationError("close must be a boolean")
    cls = Poset if kind in ("poset", "order-on-strata") else Proset
    return cls.from_pairs(elements, pairs, close=close)


# -- decompositions ---------------------------------------------------------------


def _decomposition_payload(dec: Decomposition) -> dict:
    return {
        "kind": "decomposition",
        "space": _space_payload(dec.space),
        "strata": {
            sid: sorted(dec.space.names_of(mask)) for sid, mask in dec.strata
        },
    }


def _decomposition_from(payload: dict) -> Decomposition:
    ref = payload.get("space")
    if isinstance(ref, dict) and set(ref) == {"fixture"}:
        from .fixtures import fixture

        value = fixture(ref["fixture"]).document.value
        if isinstance(value, Decomposition):
            space = value.space
        elif isinstance(value, FiniteSpace):
            space = value
        else:
            raise ValidationError(
                f"fixture {ref['fixture']!r} does not carry a space"
            )
    elif isinstance(ref, dict):
        if ref.get("kind", "space") != "space":
            raise ValidationError("decomposition space must be a space document")
        space = _space_from({"kind": "space", **ref})
    else:
        raise ValidationError("decomposition needs a space object or a fixture reference")
    strata = payload.get("strata")
    if not isinstance(strata, dict) or not all(isinstance(v, list) for v in strata.values()):
        raise ValidationError("strata must map stratum ids to point lists")
    return Decomposition.from_strata(space, {k: tuple(v) for k, v in strata.items()})


# -- maps --------------------------------------------------------------------------


def _map_payload(f: SpaceMap) -> dict:
    return {
        "kind": "map",
        "source": _space_payload(f.source),
        "target": _space_payload(f.target),
        "assignment": {
            p: f.target.points[t] for p, t in zip(f.source.points, f.assignment)
        },
    }


def _map_from(payload: dict) -> SpaceMap:
    source = _space_from({"kind": "space", **_subobject(payload, "source")})
    target = _space_from({"kind": "space", **_subobject(payload, "target")})
    assignment = payload.get("assignment")
    if not isinstance(assignment, dict):
        raise ValidationError("assignment must map source points to target points")
    return SpaceMap.from_names(source, target, assignment)


# -- symbolic families ---------------------------------------------------------------


def _symbolic_payload(fam: SymbolicFamily) -> dict:
    return {
        "kind": "symbolic-family",
        "tag": fam.tag,
        "locally_finite_space": fam.locally_finite_space,
        "locally_finite_poset": fam.locally_finite_poset,
        "space_reason": fam.space_reason,
        "poset_reason": fam.poset_reason,
    }


def _symbolic_from(payload: dict) -> SymbolicFamily:
    tag = payload.get("tag")
    fam = SYMBOLIC_FAMILIES.get(tag)
    if fam is None:
        raise ValidationError(f"unknown symbolic family tag: {tag!r}")
    for key in ("locally_finite_space", "locally_finite_poset"):
        if key in payload and payload[key] != getattr(fam, key):
            raise ValidationError(f"symbolic family {tag!r} disagrees with the catalog on {key}")
    return fam


# -- shared helpers --------------------------------------------------------------------


def _string_list(payload: dict, key: str) -> tuple[str, ...]:
    value = payload.get(key)
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ValidationError(f"{key} must be a list of strings")
    return tuple(value)


def _subobject(payload: dict, key: str) -> dict:
    value = payload.get(key)
    if not isinstance(value, dict):
        raise ValidationError(f"{key} must be an object")
    return value
