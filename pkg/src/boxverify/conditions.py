"""The condition evaluator: box geometry, parameter jets, word evaluation,
the exceptional-hole table, and the inequality dispatcher.

A box address is a string over {0, 1}; bit d halves coordinate d mod 6 of
a six-real-dimensional box and shifts its center down or up.  The three
complex parameters (along, ortho, whirle) are read off coordinate pairs
(0,3), (1,4), (2,5) as jets whose classes cover the box.

Only boxes that could meet one of the eleven recorded exceptional holes
need work: `covers_hole` compares addresses at every third position, and
a miss lets `inequality_holds` succeed immediately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import roundoff
from .roundoff import EPS, HALFEPS
from .complex_ball import ExactComplex, div_xx
from .jet import Jet, abs_lb_j, abs_ub_j, jet, size_j, sqrt_j
from .sl2 import (
    JetMatrix,
    close_generator,
    identity_matrix,
    mat_inverse,
    mat_length,
    not_identity,
    short_generator,
)

_ENV = roundoff.environment()
_ZERO_X = ExactComplex(0.0, 0.0)

CONDITION_KINDS = "slnfWwL2O"
WORD_SYMBOLS = "fwFW"

SHORT_BOUND = 1.10274
LONG_BOUND = 3.63201


class UnsupportedConditionError(Exception):
    """Raised for the 'O' condition: parsed but rejected, never evaluated."""


@dataclass(frozen=True, slots=True)
class Condition:
    kind: str
    word: str | None = None  # delimited form "(...)" for kinds L, 2, O


def parse_condition(text: str) -> Condition:
    """Parse one conditionlist line: s | l | n | f | W | w | L(w) | 2(w) | O(w)."""
    text = text.rstrip()
    if not text:
        raise ValueError("empty condition")
    kind = text[0]
    if kind not in CONDITION_KINDS:
        raise ValueError(f"unknown condition kind {kind!r}")
    if kind not in "L2O":
        return Condition(kind)
    if len(text) < 2 or text[1] != "(" or ")" not in text:
        raise ValueError(f"condition {kind!r} needs a '(word)' argument: {text!r}")
    word = text[1:text.index(")") + 1]
    for ch in word[1:-1]:
        if ch not in WORD_SYMBOLS:
            raise ValueError(f"bad word symbol {ch!r} in {text!r}")
    return Condition(kind, word)


@dataclass(frozen=True, slots=True)
class BoxGeometry:
    pos: tuple[float, float, float, float, float, float]
    size: tuple[float, float, float, float, float, float]


def box_geometry(where: str) -> BoxGeometry:
    """Scaled center and rigorous half-widths of the box at an address."""
    pos = [0.0] * 6
    size = [4.0] * 6
    scale = [2.0 ** ((5 - i) / 6.0) for i in range(6)]
    for d, bit in enumerate(where):
        size[d % 6] /= 2.0
        if bit == "0":
            pos[d % 6] -= size[d % 6]
        elif bit == "1":
            pos[d % 6] += size[d % 6]
        else:
            raise ValueError(f"bad box address symbol {bit!r}")
    for i in range(6):
        pos[i] *= scale[i]
        size[i] = (1.0 + 2.0 * EPS) * (size[i] * scale[i] + HALFEPS * math.fabs(pos[i]))
        roundoff.record_value(_ENV, pos[i])
        roundoff.record_value(_ENV, size[i])
    return BoxGeometry(tuple(pos), tuple(size))


def make_params(g: BoxGeometry) -> tuple[Jet, Jet, Jet]:
    """The three complex box parameters as jets covering the box."""
    pos, size = g.pos, g.size
    along = jet((pos[0], pos[3]), (size[0], size[3]), 0.0, 0.0)
    ortho = jet((pos[1], pos[4]), 0.0, (size[1], size[4]), 0.0)
    whirle = jet((pos[2], pos[5]), 0.0, 0.0, (size[2], size[5]))
    return along, ortho, whirle


def evaluate_word(word: str, along: Jet, ortho: Jet, whirle: Jet) -> JetMatrix:
    """Left-to-right product of generators named by a delimited word."""
    f = short_generator(along)
    w = close_generator(ortho, whirle)
    f_inv = mat_inverse(f)
    w_inv = mat_inverse(w)
    g = identity_matrix()
    i = 1
    while i < len(word) and word[i] != ")":
        sym = word[i]
        if sym == "w":
            g = g * w
        elif sym == "W":
            g = g * w_inv
        elif sym == "f":
            g = g * f
        elif sym == "F":
            g = g * f_inv
        else:
            raise ValueError(f"bad word symbol {sym!r}")
        i += 1
    if i >= len(word):
        raise ValueError(f"unterminated word {word!r}")
    return g


def word_implies_commuting(word: str) -> bool:
    """True iff the word normalizes to f^k w^l: every interior adjacent
    pair keeps all f-letters (in one sign) before all w-letters."""
    i = 1
    while word[i] != ")" and word[i + 1] != ")":
        pair = word[i] + word[i + 1]
        if pair not in ("ff", "FF", "ww", "WW", "fw", "fW", "Fw", "FW"):
            return False
        i += 1
    return True


def horizon(ortho: Jet) -> Jet:
    """Square of the core-geodesic translation whose argument is the
    minimum visual angle separating the axis from its ortho-translate.

    Operates on a private copy: a negative-real-part input is replaced by
    its negation before use, and the caller's jet is untouched.
    """
    if ortho.f.re < 0.0:
        ortho = -ortho
    r = ortho * (ortho - 6.0) + 1.0
    d = (ortho * (-4.0) + 4.0) * sqrt_j(-ortho)
    x = div_xx(r.f, d.f)
    if x.z.re > 0.0:
        h = (r + d) / ((ortho + 1.0) * (ortho + 1.0))
    else:
        h = (r - d) / ((ortho + 1.0) * (ortho + 1.0))
    if ortho.f.re < (1.0 + EPS) * (size_j(ortho) + ortho.e):
        # Box straddles re = 0: drop the linear structure, keep a bound.
        h = Jet(h.f, _ZERO_X, _ZERO_X, _ZERO_X, (1.0 + EPS) * (size_j(h) + h.e))
    return h


def larger_angle(x: Jet, y: Jet) -> bool:
    """True certifies |arg x| > |arg y|; sign-uncertain inputs yield False."""
    xy = jet(0.0)
    if x.f.im > (1.0 + EPS) * (size_j(x) + x.e):
        if y.f.im > (1.0 + EPS) * (size_j(y) + y.e):
            xy = x / y
        if -y.f.im > (1.0 + EPS) * (size_j(y) + y.e):
            xy = x * y
    if -x.f.im > (1.0 + EPS) * (size_j(x) + x.e):
        if y.f.im > (1.0 + EPS) * (size_j(y) + y.e):
            xy = (-x) * y
        if -y.f.im > (1.0 + EPS) * (size_j(y) + y.e):
            xy = (-x) / y
    return xy.f.im > (1.0 + EPS) * (size_j(xy) + xy.e)


# --- exceptional holes -----------------------------------------------------

QUARTER = jet((0.0, 1.0))
THIRD = jet((-0.5, math.sqrt(0.75)), e=EPS)
VOL3 = jet((-0.3933, 0.91942), e=1.415 * EPS)

# (address, max visual angle) for the eleven exceptional sub-boxes; the
# minimum ortho distance of each is computed from its own box geometry.
HOLE_TABLE_DATA: tuple[tuple[str, Jet], ...] = (
    ("001000110001110110011101000110111110100010110000100011101101001101001000110101011000000100000", THIRD),
    ("001000110101010010101010110001100101110111100001101010111100100000010001111100", THIRD),
    ("1110000000010001100110111011010110001111010111100011001111111001101100000000100010100010", THIRD),
    ("11100000000100011001100100111110101001111011011011110110001111111011011010000111101", THIRD),
    ("11100000000100011001100100111110101011111001011001110100001101111001011000000101101", THIRD),
    ("0010001101111100011010010101010110010110110101111011011000011011010001110100011101011001011101110111110100", VOL3),
    ("0010011101101100001010000101000110000110100101101011001000001011000001100100001101001001001101100111100100", VOL3),
    ("0010001100011101110011110001011111111011111001110011110000011110111101111", THIRD),
    ("0010011100001101100011100001001111101011101001100011100000001110101101101", THIRD),
    ("1110000000010001111111111101010011110111110101111111111100010010110001110", THIRD),
    ("1110010000000001101111101101000011100111100101101111101100000010100001100", THIRD),
)


@dataclass(frozen=True, slots=True)
class Hole:
    where: str
    min_d: float
    max_angle: Jet


def _hole_min_d(where: str) -> float:
    _, ortho, _ = make_params(box_geometry(where))
    return abs_lb_j(ortho)


@lru_cache(maxsize=1)
def hole_table() -> tuple[Hole, ...]:
    # min_d values are computed once here, up front; afterwards the table
    # is immutable and covers_hole is pure.
    return tuple(Hole(where, _hole_min_d(where), angle)
                 for where, angle in HOLE_TABLE_DATA)


def covers_hole(where: str) -> tuple[bool, float, Jet]:
    """Whether the box could meet an exceptional hole.

    Returns (matched, min_d, max_angle).  A hole counts as met when the
    addresses agree at positions 0, 3, 6, ... up to the shorter length;
    min_d and max_angle fold in every hole met.  A box that IS a recorded
    vol3 hole returns unmatched immediately.
    """
    min_d = 4.0
    max_angle = QUARTER
    depth = len(where)
    for hole in hole_table():
        if hole.max_angle.f.re == VOL3.f.re and where == hole.where:
            return False, min_d, max_angle
        max_j = len(hole.where)
        if max_j > depth:
            max_j = depth
        j = 0
        while j < max_j and j < depth:
            if where[j] != hole.where[j]:
                break
            j += 3
        if j >= max_j:
            if hole.min_d < min_d:
                min_d = hole.min_d
            if larger_angle(hole.max_angle, max_angle):
                max_angle = hole.max_angle
    return min_d <= 3.0, min_d, max_angle


def inequality_holds(cond: Condition, where: str) -> bool:
    """True proves the box needs no further work: either no hole is met,
    or the condition's inequality holds over the whole box."""
    matched, min_d, max_angle = covers_hole(where)
    if not matched:
        return True
    along, ortho, whirle = make_params(box_geometry(where))
    kind = cond.kind
    if kind == "s":
        return abs_ub_j(along) < SHORT_BOUND
    if kind == "l":
        return abs_lb_j(along) > LONG_BOUND
    if kind == "n":
        return abs_ub_j(ortho) < min_d
    if kind == "f":
        angle = horizon(ortho)
        return larger_angle(max_angle, angle)
    if kind == "W":
        return abs_ub_j(whirle) < 1.0
    if kind == "w":
        wh = abs_lb_j(whirle)
        return (1.0 - EPS) * wh * wh > abs_ub_j(along)
    if kind in ("L", "2", "O"):
        g = evaluate_word(cond.word, along, ortho, whirle)
        length = mat_length(g)
        if kind == "O":
            raise UnsupportedConditionError("condition 'O' is unsupported")
        if kind == "L":
            return (not_identity(g)
                    and abs_ub_j(length / along) < 1.0
                    and abs_lb_j(length * along) > 1.0)
        return (word_implies_commuting(cond.word)
                and abs_ub_j(length / along) < 1.0
                and abs_lb_j(length * along) > 1.0)
    raise ValueError(f"unknown condition kind {kind!r}")
