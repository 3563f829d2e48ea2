"""Categorical syllogisms, relabelings and sorites over a cell/region set model."""

from .core import (
    STANDARD,
    Cell,
    Kind,
    Literal,
    Region,
    StatementNF,
    SurfaceStatement,
    Universe,
    lit,
    normalize,
    surface_forms,
)
from .errors import CapabilityError, CategoricaError, MalformedError, OutOfDomain
from .oracle import EntailmentVerdict, Model, entails, pinpoint_search, satisfiable
from .parsing import ParseError, parse_conclusion, parse_sorite, parse_statement, render
from .pcp import (
    PCP,
    Conclusion,
    MoodName,
    PcpType,
    bound_subset_group,
    classify,
    derive,
    enumerate_all,
    mood_name,
)
from .relabel import ELEMENTS, CanonicalForm, Relabeling, apply, canonicalize, compose, metathesis
from .rules import (
    coexistence,
    distribution,
    esc_compatible,
    joint_universal_consequence,
    rofvca_check,
    rofvca_predict,
    rofvs_dofa,
    signature,
)
from .sorites import (
    Sorite,
    eliminated_lc,
    retinends,
    solve,
    substitution_trace,
    verify_universal,
)

__all__ = [
    "STANDARD",
    "Cell",
    "Kind",
    "Literal",
    "Region",
    "StatementNF",
    "SurfaceStatement",
    "Universe",
    "lit",
    "normalize",
    "surface_forms",
    "CapabilityError",
    "CategoricaError",
    "MalformedError",
    "OutOfDomain",
    "EntailmentVerdict",
    "Model",
    "entails",
    "pinpoint_search",
    "satisfiable",
    "ParseError",
    "parse_conclusion",
    "parse_sorite",
    "parse_statement",
    "render",
    "PCP",
    "Conclusion",
    "MoodName",
    "PcpType",
    "bound_subset_group",
    "classify",
    "derive",
    "enumerate_all",
    "mood_name",
    "ELEMENTS",
    "CanonicalForm",
    "Relabeling",
    "apply",
    "canonicalize",
    "compose",
    "metathesis",
    "coexistence",
    "distribution",
    "esc_compatible",
    "joint_universal_consequence",
    "rofvca_check",
    "rofvca_predict",
    "rofvs_dofa",
    "signature",
    "Sorite",
    "eliminated_lc",
    "retinends",
    "solve",
    "substitution_trace",
    "verify_universal",
]

__version__ = "0.1.0"
