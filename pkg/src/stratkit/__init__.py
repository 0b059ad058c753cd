"""stratkit: finite topological spaces, preorders, and decomposition
classification, verified by exhaustive brute force on small instances."""

from .decomposition import (
    AgreementReport,
    ClassificationReport,
    CompatibleOrdersReport,
    Decomposition,
    DecompositionPreorder,
    OpenMapStratificationReport,
    OrderCheck,
    PosetStratification,
    RefinementReport,
    SemicontinuityReport,
    StratificationVerdict,
    as_poset_stratified,
    classify,
    compatible_orders,
    order_restricted_to_nonempty,
    strict_refinements_never_open,
    stratification_from_open_map,
)
from .documents import Document, load, save
from .errors import InternalInvariantError, ParseError, PreconditionError, ValidationError
from .fixtures import FaceModel, Fixture, face_poset_model, fixture, fixture_names
from .generate import SplitMix64, generate
from .dot import export_dot
from .oracle import (
    SweepReport,
    enumerate_partitions,
    enumerate_posets,
    enumerate_prosets,
    exhaustive_verify,
)
from .order import (
    AdjunctionReport,
    MonotoneMap,
    Poset,
    Proset,
    SymbolicFamily,
    adjunction_roundtrips,
    alexandrov_space,
    singleton_local_closure_check,
    specialization_preorder,
    symbolic_local_finiteness,
)
from .topology import (
    FiniteSpace,
    SpaceMap,
    Verdict,
    continuity_by_closure_inclusion,
    final_topology,
    openness_by_closure_inclusion,
)

__version__ = "0.1.0"

__all__ = [
    "AdjunctionReport",
    "AgreementReport",
    "ClassificationReport",
    "CompatibleOrdersReport",
    "Decomposition",
    "DecompositionPreorder",
    "Document",
    "FaceModel",
    "FiniteSpace",
    "Fixture",
    "InternalInvariantError",
    "MonotoneMap",
    "OpenMapStratificationReport",
    "OrderCheck",
    "ParseError",
    "Poset",
    "PosetStratification",
    "PreconditionError",
    "Proset",
    "RefinementReport",
    "SemicontinuityReport",
    "SpaceMap",
    "SplitMix64",
    "StratificationVerdict",
    "SweepReport",
    "SymbolicFamily",
    "ValidationError",
    "Verdict",
    "adjunction_roundtrips",
    "alexandrov_space",
    "as_poset_stratified",
    "classify",
    "compatible_orders",
    "continuity_by_closure_inclusion",
    "enumerate_partitions",
    "enumerate_posets",
    "enumerate_prosets",
    "exhaustive_verify",
    "export_dot",
    "face_poset_model",
    "final_topology",
    "fixture",
    "fixture_names",
    "generate",
    "load",
    "openness_by_closure_inclusion",
    "order_restricted_to_nonempty",
    "save",
    "singleton_local_closure_check",
    "specialization_preorder",
    "strict_refinements_never_open",
    "stratification_from_open_map",
    "symbolic_local_finiteness",
]
