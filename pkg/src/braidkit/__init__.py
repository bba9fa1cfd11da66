"""Knot invariants of braid closures and a genus-2 obstruction for graph manifolds."""

from .alexander import (
    LSpaceAlexanderForm,
    alexander_burau,
    alexander_from_homfly,
    from_lspace_form,
    to_lspace_form,
)
from .braid import (
    BraidWord,
    ClosureSummary,
    Verdict,
    braid_positivity_obstruction,
    closure_summary,
    is_positive,
    mirror,
    parse_braid,
    positive_braid_genus,
)
from .dataset import KnotRecord, load_dataset, load_graph_manifolds
from .errors import BraidkitError, ResourceLimit
from .graphmanifold import (
    GluingMatrix,
    GraphManifoldPresentation,
    SfsPiece,
    format_regina,
    genus2_obstruction,
    parse_regina,
)
from .homfly import Budget, homfly_az, homfly_vz, mfw_bound
from .polynomial import OneVarLaurent, TwoVarLaurent, format_laurent, parse_laurent
from .skein import SkeinOracle
from .verify import VerificationReport, verify_record, verify_records

__version__ = "0.1.0"
