"""Seiberg-Witten invariants of 4-manifolds with fixed-point-free circle actions,
computed from the quotient 3-orbifold."""

__version__ = "0.1.0"

from .abelian import (
    FgAbGroup,
    GroupEl,
    GroupHom,
    canonical_rep,
    express,
    is_torsion,
    quotient,
    smith_normal_form,
)
from .fourman import (
    CircleFourManifold,
    CohomologyReport,
    cohomology,
    intersection_form,
    pullback_map,
    square_of_pullback,
)
from .groupring import GroupRingElem, add, coefficient, fold, is_symmetric, mul
from .orbifold import (
    E,
    Locus,
    Orbifold3,
    PicardElem,
    desingularize,
    is_smooth_total_space,
    pic_add,
    pic_group,
    pic_neg,
    unit_circle_gluing,
)
from .swcalc import (
    ChamberNote,
    SeifertMatrix,
    SW3Invariant,
    SW4Invariant,
    alexander_from_seifert,
    check_simple_type,
    dimension_of_pullback,
    example_63,
    sw4_from_sw3,
    theorem_a_validate,
    wall_crossing_invariant,
    whitehead_construction,
)
