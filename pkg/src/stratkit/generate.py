"""Seeded random generation of preorders and partitions.

Determinism contract: generate() is a pure function of (kind, n, params,
seed), stable across releases. All randomness flows from the splitmix64
generator below, fully specified here rather than borrowed from the
standard library so the byte stream can never drift.
"""

from __future__ import annotations

from typing import Mapping

from .decomposition import Decomposition
from .documents import Document
from .errors import ValidationError
from .order import Proset
from .topology import FiniteSpace

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 sequence.

    State update: s += 0x9E3779B97F4A7C15 (mod 2**64). Output mix of the
    new state z: z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
    z *= 0x94D049BB133111EB; z ^= z >> 31; all modulo 2**64.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1): the top 53 bits scaled by 2**-53."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, bound: int) -> int:
        """Uniform-ish in [0, bound) by modulo; bias is irrelevant here."""
        if bound <= 0:
            raise ValidationError("bound must be positive")
        return self.next_u64() % bound

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, high index down."""
        for i in range(len(items) - 1, 0, -1):
            j = self.next_below(i + 1)
            items[i], items[j] = items[j], items[i]


def generate(kind: str, n: int, params: Mapping, seed: int) -> Document:
    """Deterministically generate a document.

    kind "preorder": elements "0".."n-1"; each ordered pair (i, j) with
    i != j is drawn independently at params["density"] (default 0.5) in
    row-major order, then the reflexive-transitive closure is taken.

    kind "partition": partitions the points of params["space"] (a fixture
    name or inline space payload; default: the discrete space on n fresh
    points) into params["blocks"] blocks (default: drawn from 1..n). A
    deterministic shuffle seeds one point per block so the labeling map is
    surjective; remaining points are placed independently. Blocks are
    relabeled "0", "1", ... by first occurrence along the point list.
    """
    if not isinstance(n, int) or n < 0:
        raise ValidationError("n must be a nonnegative integer")
    rng = SplitMix64(seed)
    if kind == "preorder":
        return _gen_preorder(n, params, rng)
    if kind == "partition":
        return _gen_partition(n, params, rng)
    raise ValidationError(f"unknown generation kind: {kind!r}")


def _gen_preorder(n: int, params: Mapping, rng: SplitMix64) -> Document:
    density = params.get("density", 0.5)
    if not isinstance(density, (int, float)) or not 0.0 <= density <= 1.0:
        raise ValidationError("density must lie in [0, 1]")
    elements = tuple(str(i) for i in range(n))
    pairs = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rng.next_float() < density:
                pairs.append((elements[i], elements[j]))
    return Document("proset", Proset.from_pairs(elements, pairs, close=True))


def _resolve_space(n: int, params: Mapping) -> FiniteSpace:
    spec = params.get("space")
    if spec is None:
        return FiniteSpace.discrete(tuple(str(i) for i in range(n)))
    if isinstance(spec, FiniteSpace):
        space = spec
    elif isinstance(spec, str):
        from .fixtures import fixture

        value = fixture(spec).document.value
        if isinstance(value, Decomposition):
            space = value.space
        elif isinstance(value, FiniteSpace):
            space = value
        else:
            raise ValidationError(f"fixture {spec!r} does not carry a space")
    elif isinstance(spec, dict):
        from .documents import from_payload

        value = from_payload({"kind": "space", **spec}).value
        space = value
    else:
        raise ValidationError("space must be a fixture name or a space payload")
    if len(space.points) != n:
        raise ValidationError(
            f"space has {len(space.points)} points but n={n} was requested"
        )
    return space


def _gen_partition(n: int, params: Mapping, rng: SplitMix64) -> Document:
    space = _resolve_space(n, params)
    if n == 0:
        return Document("decomposition", Decomposition(space, ()))
    blocks = params.get("blocks")
    if blocks is None:
        blocks = 1 + rng.next_below(n)
    if not isinstance(blocks, int) or not 1 <= blocks <= n:
        raise ValidationError(f"blocks must lie in 1..{n}")
    order = list(range(n))
    rng.shuffle(order)
    label_of = [0] * n
    for b, i in enumerate(order[:blocks]):
        label_of[i] = b
    for i in order[blocks:]:
        label_of[i] = rng.next_below(blocks)
    # canonical relabeling by first occurrence along the point list
    relabel: dict[int, int] = {}
    for i in range(n):
        relabel.setdefault(label_of[i], len(relabel))
    strata: dict[str, list[str]] = {}
    for i, p in enumerate(space.points):
        strata.setdefault(str(relabel[label_of[i]]), []).append(p)
    return Document("decomposition", Decomposition.from_strata(space, strata))
