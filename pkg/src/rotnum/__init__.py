"""Exact rotation-number calculus for circle maps.

Combinatorial maximal monotone maps, extremal rotation numbers of
positive words (ziggurats), exact piecewise-linear circle
homeomorphisms, and surface-group representation invariants.
"""

from .configs import ZPeriodicConfig, enumerate_configs
from .errors import (
    ComplexityExceeded,
    InconsistentSplitting,
    InvalidArgument,
    InvalidComparison,
    InvalidPL,
    InvalidSpec,
    InverseNotSupported,
    LiftObstruction,
    NotInCentralizer,
    NotResolved,
    ParseError,
    RelatorNotSatisfied,
    RotnumError,
)
from .monotone import (
    LabeledPoint,
    MaxMapSpec,
    apply_max_map,
    estimate_rot,
    evaluate_word,
    realize_max_map,
    rot_of_word,
)
from .plmaps import (
    PLLift,
    RotResult,
    canonical_commutator,
    compose,
    detect_rational_rot,
    format_pl,
    parse_pl,
    tau,
)
from .rationals import IRRATIONAL, farey_fractions, format_fraction, parse_fraction
from .surface import (
    ComparisonResult,
    Fingerprint,
    LiftCensus,
    SurfaceRep,
    bend,
    compare_fingerprints,
    euler_number,
    fingerprint,
    lift_census,
    rotation_rep,
    trivial_rep,
    twist,
    validate_relator,
)
from .words import Word
from .ziggurat import (
    MilnorWoodChain,
    R_w,
    ZigguratGrid,
    closed_form_Rfg,
    commutator_rot_bound,
    inf_w,
    milnor_wood_chain,
    ziggurat_grid,
)

__version__ = "0.1.0"
