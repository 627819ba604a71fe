"""Recursive subdivision driver, conditionlist loading, and the CLI.

The driver consumes a stream of advice integers.  A negative code marks
the current box as an exceptional leaf (printed, space-terminated); zero
splits the box and recurses; a positive code names a conditionlist line
to certify the box with.  If certification fails, both halves are retried
with the same code without consuming further advice, so the advice stream
steers the proof but can never make it claim more than it checked.

Output protocol (bit-exact):

    verified fudging <address> - { <leaf> <leaf> ... }.

with exit status 0; or, after a monitored underflow, the line ends with
". underflow may have occurred" and status 1 instead.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from . import roundoff
from .conditions import Condition, UnsupportedConditionError, inequality_holds, parse_condition
from .roundoff import RoundingModeError

MAX_DEPTH = 200
MAX_CONDITIONS = 13200
MAX_CONDITIONLIST_BYTES = 300000

PROG = "verify"


class VerifyFatal(Exception):
    """Unrecoverable driver error; the CLI prints it and exits 1."""


@dataclass(frozen=True)
class ConditionList:
    """1-indexed condition texts; line 1 is the first line of the file."""
    lines: tuple[str, ...]
    _parsed: dict = field(default_factory=dict, repr=False, compare=False)

    def condition_for(self, code: int) -> Condition:
        if code < 1 or code > len(self.lines):
            raise VerifyFatal(
                f"code {code} out of range [1,{len(self.lines) + 1}] in inequalityFor")
        cond = self._parsed.get(code)
        if cond is None:
            try:
                cond = parse_condition(self.lines[code - 1])
            except ValueError as exc:
                raise VerifyFatal(f"bad condition on line {code}: {exc}") from exc
            self._parsed[code] = cond
        return cond


def load_conditionlist(source) -> ConditionList:
    """Read a conditionlist from bytes, text, or a file object.

    The capacity limits are validated, not silently truncated; a final
    newline does not create an empty trailing line.
    """
    if hasattr(source, "read"):
        data = source.read(MAX_CONDITIONLIST_BYTES + 1)
    else:
        data = source
    if isinstance(data, bytes):
        text = data.decode("ascii")
    else:
        text = data
    if len(text.encode("ascii")) > MAX_CONDITIONLIST_BYTES:
        raise VerifyFatal(f"conditionlist larger than {MAX_CONDITIONLIST_BYTES} bytes")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) > MAX_CONDITIONS:
        raise VerifyFatal(f"conditionlist has more than {MAX_CONDITIONS} lines")
    return ConditionList(tuple(lines))


class AdviceStream:
    """Whitespace-separated signed decimal integers, counted as read."""

    def __init__(self, source):
        if hasattr(source, "read"):
            text = source.read()
        else:
            text = source
        if isinstance(text, bytes):
            text = text.decode("ascii")
        self._tokens = iter(text.split())
        self.reads = 0

    def next_code(self, where: str) -> int:
        tok = next(self._tokens, None)
        if tok is None:
            raise VerifyFatal(f"verify: advice exhausted at {where}")
        try:
            code = int(tok)
        except ValueError:
            raise VerifyFatal(f"verify: bad advice token {tok!r} at {where}") from None
        self.reads += 1
        return code


def verify(where: str, depth: int, autocode: int, advice: AdviceStream, out,
           conditions) -> None:
    """Certify the box at `where` (depth == len(where)), writing every
    exceptional leaf to `out`.  `conditions` maps a positive code to a
    Condition; lookups happen lazily, so advice without positive codes
    never touches the conditionlist."""
    if depth >= MAX_DEPTH:
        raise VerifyFatal(f"verify: fatal error at {where}")
    if autocode == 0:
        code = advice.next_code(where)
    else:
        code = autocode
    if code < 0:
        out.write(f"{where} ")
    elif code != 0 and inequality_holds(conditions(code), where):
        pass  # box certified, nothing to report
    else:
        verify(where + "0", depth + 1, code, advice, out, conditions)
        verify(where + "1", depth + 1, code, advice, out, conditions)


def _lazy_condition_source(path: str):
    loaded: list[ConditionList] = []

    def lookup(code: int) -> Condition:
        if not loaded:
            try:
                stream = open(path, "rb")
            except OSError:
                raise VerifyFatal("can't open conditionlist") from None
            with stream:
                loaded.append(load_conditionlist(stream))
        return loaded[0].condition_for(code)

    return lookup


def run_cli(args=None, stdin=None, stdout=None, stderr=None) -> int:
    """The `verify <address>` command; advice integers on standard input."""
    args = list(sys.argv[1:] if args is None else args)
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    conditionlist_path = "conditionlist"
    positional = []
    i = 0
    while i < len(args):
        arg = args[i]
        if arg == "--conditionlist":
            if i + 1 >= len(args):
                stderr.write(f"Usage: {PROG} position < data\n")
                return 1
            conditionlist_path = args[i + 1]
            i += 2
            continue
        if arg.startswith("--conditionlist="):
            conditionlist_path = arg[len("--conditionlist="):]
            i += 1
            continue
        positional.append(arg)
        i += 1

    if len(positional) != 1:
        stderr.write(f"Usage: {PROG} position < data\n")
        return 1
    where = positional[0]
    for ch in where:
        if ch not in "01":
            stderr.write(f"bad position {where}\n")
            return 1

    stdout.write(f"verified fudging {where} - {{ ")
    try:
        roundoff.initialize_roundoff()
    except RoundingModeError as exc:
        stderr.write(f"{exc}\n")
        return 1
    advice = AdviceStream(stdin)
    try:
        verify(where, len(where), 0, advice, stdout, _lazy_condition_source(conditionlist_path))
    except (VerifyFatal, UnsupportedConditionError, ValueError) as exc:
        stderr.write(f"{exc}\n")
        return 1
    if not roundoff.roundoff_ok(roundoff.environment()):
        stdout.write(". underflow may have occurred\n")
        return 1
    stdout.write("}.\n")
    return 0


def main() -> None:
    sys.exit(run_cli())
