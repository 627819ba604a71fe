"""Floating-point environment contract.

Every error radius produced by the kernel layers is valid only under
round-to-nearest binary64 arithmetic with no underflow.  This module owns
both halves of that contract: a startup self-test for the rounding mode,
and a sticky underflow flag fed by magnitude checks on kernel results.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

EPS = 2.0 ** -52
HALFEPS = EPS / 2.0

# Smallest positive normal binary64; any nonzero magnitude below it is a
# subnormal and voids the (1 + k*EPS) error model.
TINIEST_NORMAL = 2.0 ** -1022


class RoundingModeError(RuntimeError):
    """The arithmetic probes detected a non-default rounding mode."""


@dataclass
class FpEnvironment:
    eps: float = EPS
    half_eps: float = HALFEPS
    underflow_flag: bool = False
    rounding_verified: bool = False


_ENV = FpEnvironment()


def environment() -> FpEnvironment:
    """The process-wide environment; its underflow flag is sticky."""
    return _ENV


def record_value(env: FpEnvironment, v: float) -> None:
    """Set the sticky flag if v is a nonzero subnormal.

    This is the only mutation path to the flag.  NaN and infinities pass
    through unflagged (the comparisons below are false for them).
    """
    if 0.0 < abs(v) < TINIEST_NORMAL:
        env.underflow_flag = True


def roundoff_ok(env: FpEnvironment) -> bool:
    """True iff no monitored operation underflowed during the run."""
    return not env.underflow_flag


def infinity() -> float:
    return math.inf


def initialize_roundoff() -> FpEnvironment:
    """Verify round-to-nearest-even by probing, then arm monitoring.

    Raises RoundingModeError if any probe fails; the error formulas in the
    ball and jet layers are unsound under any other rounding mode.
    """
    env = _ENV
    if EPS != sys.float_info.epsilon or 1.0 + EPS == 1.0:
        raise RoundingModeError("machine epsilon is not 2^-52")
    probes = (
        1.0 + HALFEPS == 1.0,            # tie rounds to the even neighbor 1.0
        -1.0 - HALFEPS == -1.0,          # fails under round-toward-negative
        1.0 + EPS == math.nextafter(1.0, 2.0),
        1.0 + (EPS + HALFEPS) == 1.0 + 2.0 * EPS,  # ties-to-even, not ties-away
        (1.0 + EPS) * 0.5 > 0.5,
        (1.0 - EPS) * 0.5 < 0.5,
    )
    if not all(probes):
        raise RoundingModeError("rounding self-test failed: not round-to-nearest-even")
    env.rounding_verified = True
    return env


def _reset_for_tests() -> None:
    # Test isolation only; production code never clears the sticky flag.
    _ENV.underflow_flag = False
    _ENV.rounding_verified = False
