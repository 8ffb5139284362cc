"""Epistemic logic programs: world views, epistemic splitting and top-down composition."""
from .errors import (
    CapExceeded,
    ElpError,
    GroundingError,
    InconsistentProgram,
    InvalidSplittingSet,
    MalformedCorpus,
    NotHomogeneous,
    NotObjectiveError,
    ParseError,
)
from .objective import answer_sets, gamma, gl_reduct, is_classical_model, least_model
from .semantics import (
    Semantics,
    g91_reduct,
    is_world_view,
    k15_reduct,
    s16_filter,
    world_views,
    wv_satisfies,
)
from .splitting import (
    Splitting,
    enumerate_splitting_sets,
    esp_world_views,
    is_splitting_set,
    split,
    subjective_reduct,
    wbt,
)
from .stratification import StratificationResult, stratify
from .syntax import (
    Atom,
    ObjectiveLiteral,
    Program,
    Rule,
    SubjectiveLiteral,
    format_program,
    format_world_view,
    ground,
    parse_atoms,
    parse_program,
    parse_world_view,
    validate_elp,
)
from .topdown import (
    EquivalenceReport,
    check_equivalence,
    detach,
    interface_world_views,
    requisite_sets,
    tdesp_candidates,
    tdespb_candidates,
    top_down_influence,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
