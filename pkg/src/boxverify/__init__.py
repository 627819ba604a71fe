"""Validated complex-ball and affine-jet arithmetic with a certified
box-subdivision verifier for two-generator isometry groups.

The public surface: exact/ball complex kernels with rigorous rounding
radii, affine complex 1-jets over the tri-disk, 2x2 jet matrices with
their geometric invariants, the box-condition evaluator, and the advice-
driven subdivision driver behind the `verify` command.
"""

from .roundoff import (
    EPS,
    FpEnvironment,
    HALFEPS,
    RoundingModeError,
    environment,
    infinity,
    initialize_roundoff,
    record_value,
    roundoff_ok,
)
from .complex_ball import (
    BallComplex,
    ExactComplex,
    abs_lb_x,
    abs_ub_x,
    add_aa,
    add_xd,
    add_xx,
    div_aa,
    div_dx,
    div_xd,
    div_xx,
    hypot_is_faithful,
    mul_xd,
    mul_xx,
    neg_x,
    sqrt_x,
    sub_aa,
    sub_xd,
    sub_xx,
)
from .jet import (
    Jet,
    abs_lb_j,
    abs_ub_j,
    add_jd,
    add_jj,
    div_dj,
    div_jd,
    div_jj,
    is_sentinel,
    jet,
    mul_jd,
    mul_jj,
    neg_j,
    sentinel_jet,
    size_j,
    sqrt_j,
    sub_jd,
    sub_jj,
)
from .sl2 import (
    JetMatrix,
    close_generator,
    identity_matrix,
    mat_inverse,
    mat_length,
    mat_mul,
    not_f_power,
    not_identity,
    orthodist,
    short_generator,
)
from .conditions import (
    BoxGeometry,
    Condition,
    Hole,
    LONG_BOUND,
    SHORT_BOUND,
    UnsupportedConditionError,
    box_geometry,
    covers_hole,
    evaluate_word,
    hole_table,
    horizon,
    inequality_holds,
    larger_angle,
    make_params,
    parse_condition,
    word_implies_commuting,
)
from .verifier import (
    AdviceStream,
    ConditionList,
    MAX_DEPTH,
    VerifyFatal,
    load_conditionlist,
    run_cli,
    verify,
)
