"""Indeterminate strings: letters, matching, ordering, prefix tables.

An indeterminate string is a sequence of letters, each letter a nonempty set
of symbols; two letters match when their symbol sets intersect.  Matching is
reflexive and symmetric but not transitive, which is what separates these
strings from regular ones (every letter a single symbol).

Symbols are positive integer ranks.  Ranks 1..26 render as 'a'..'z', larger
ranks render as decimal integers.  Letters are kept as strictly increasing
tuples so that matching and comparison are single merge scans.

External indexing is 1-based everywhere (reports, diagnostics, exports);
internally plain 0-based sequences are used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Symbol = int
Letter = tuple[Symbol, ...]
IndetString = tuple[Letter, ...]
FeasibleArray = tuple[int, ...]


class ParseError(ValueError):
    """Malformed string or array text.  token is the 1-based bad token index."""

    def __init__(self, message: str, token: int):
        super().__init__(message)
        self.token = token


class FeasibleArrayError(ValueError):
    """Array violates a feasibility bound.  index is the 1-based offender."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


def letter(symbols: Iterable[int]) -> Letter:
    """Normalize symbols into a letter: sorted, nonempty, no duplicates."""
    syms = tuple(sorted(symbols))
    if not syms:
        raise ValueError("letter must contain at least one symbol")
    if syms[0] < 1:
        raise ValueError("symbol ranks start at 1")
    for a, b in zip(syms, syms[1:]):
        if a == b:
            raise ValueError(f"duplicate symbol {render_symbol(a)} in letter")
    return syms


def letters_match(a: Letter, b: Letter) -> bool:
    """True when the two symbol sets intersect."""
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return True
        if a[i] < b[j]:
            i += 1
        else:
            j += 1
    return False


def compare_letters(a: Letter, b: Letter) -> int:
    """Total order on letters: -1, 0 or 1.

    A strict prefix comes first; otherwise the smaller symbol at the first
    difference decides.  So {a,b,w,x,y,z} precedes {a,c}.
    """
    for s, t in zip(a, b):
        if s != t:
            return -1 if s < t else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def compare_strings(x1: Sequence[Letter], x2: Sequence[Letter]) -> int:
    """Positionwise lift of the letter order, strict prefixes first."""
    for a, b in zip(x1, x2):
        c = compare_letters(a, b)
        if c != 0:
            return c
    if len(x1) == len(x2):
        return 0
    return -1 if len(x1) < len(x2) else 1


def compute_prefix_table(x: Sequence[Letter]) -> FeasibleArray:
    """Prefix table of x: entry i is the length of the longest prefix of
    x[i..n] that matches a prefix of x.  Entry 1 is always n.

    Plain quadratic scan; each position extends until the first mismatch.
    """
    n = len(x)
    if n == 0:
        return ()
    table = [n]
    for i in range(1, n):
        j = 0
        while i + j < n and letters_match(x[j], x[i + j]):
            j += 1
        table.append(j)
    return tuple(table)


@dataclass(frozen=True)
class TableCheck:
    """Outcome of the two-condition prefix-table verification."""

    ok: bool
    position: int | None = None  # 1-based first failing position
    condition: str | None = None  # "a": claimed match broken; "b": match extends

    def __bool__(self) -> bool:
        return self.ok


def verify_prefix_table(x: Sequence[Letter], y: Sequence[int]) -> TableCheck:
    """Check, position by position, that y is the prefix table of x.

    Condition (a): the claimed match holds, i.e. x[1..y[i]] matches
    x[i..i+y[i]-1] letter by letter.  Condition (b): the match cannot be
    extended, i.e. when i+y[i] <= n the letters x[y[i]+1] and x[i+y[i]] do
    not match.  Passing both everywhere is equivalent to
    compute_prefix_table(x) == y.
    """
    n = len(x)
    if len(y) != n:
        raise ValueError(
            f"length mismatch: string has {n} positions, array has {len(y)}"
        )
    for i in range(1, n + 1):
        v = y[i - 1]
        if v < 0 or i + v - 1 > n:
            return TableCheck(False, i, "a")
        for h in range(1, v + 1):
            if not letters_match(x[h - 1], x[i + h - 2]):
                return TableCheck(False, i, "a")
        if i + v <= n and letters_match(x[v], x[i + v - 1]):
            return TableCheck(False, i, "b")
    return TableCheck(True)


def validate_feasible(values: Sequence[int]) -> FeasibleArray:
    """Return the array as a validated tuple.

    Feasible means y[1] = n and 0 <= y[i] <= n-i+1 for i in 2..n.  The empty
    array is feasible (the empty string).  Raises FeasibleArrayError naming
    the first violating 1-based index.
    """
    y = tuple(values)
    n = len(y)
    if n == 0:
        return y
    if y[0] != n:
        raise FeasibleArrayError(f"y[1] = {y[0]} but must equal the length {n}", 1)
    for i in range(2, n + 1):
        v = y[i - 1]
        if v < 0 or v > n - i + 1:
            raise FeasibleArrayError(f"y[{i}] = {v} out of range 0..{n - i + 1}", i)
    return y


# --- text grammar ---------------------------------------------------------
#
# string  := position (' ' position)* | ''
# position:= symbol | '{' symbol (',' symbol)* '}'
# symbol  := [a-z] | decimal >= 1
# array   := decimal (' ' decimal)* | ''
#
# Singleton letters print bare, multi-symbol letters print braced with the
# symbols ascending.  parse(format(x)) == x for every valid x.

_SYMBOL_RE = re.compile(r"[a-z]|[1-9][0-9]*")
_ARRAY_TOKEN_RE = re.compile(r"0|[1-9][0-9]*")


def render_symbol(rank: Symbol) -> str:
    if 1 <= rank <= 26:
        return chr(ord("a") + rank - 1)
    return str(rank)


def _parse_symbol(text: str) -> Symbol:
    if not _SYMBOL_RE.fullmatch(text):
        raise ValueError(f"bad symbol {text!r}")
    if text.isalpha():
        return ord(text) - ord("a") + 1
    return int(text)


def format_letter(a: Letter) -> str:
    if len(a) == 1:
        return render_symbol(a[0])
    return "{" + ",".join(render_symbol(s) for s in a) + "}"


def format_string(x: Sequence[Letter]) -> str:
    return " ".join(format_letter(a) for a in x)


def parse_string(text: str) -> IndetString:
    """Parse text like 'a b a {a,b} c' into a string of letters."""
    out: list[Letter] = []
    for k, tok in enumerate(text.split(), start=1):
        if tok.startswith("{") and tok.endswith("}") and len(tok) > 2:
            pieces = tok[1:-1].split(",")
        else:
            pieces = [tok]
        try:
            out.append(letter(_parse_symbol(p) for p in pieces))
        except ValueError as e:
            raise ParseError(f"bad token {tok!r} at position {k}: {e}", k) from None
    return tuple(out)


def format_array(y: Sequence[int]) -> str:
    return " ".join(str(v) for v in y)


def parse_array(text: str) -> tuple[int, ...]:
    """Parse space-separated nonnegative decimals; no feasibility check."""
    values: list[int] = []
    for k, tok in enumerate(text.split(), start=1):
        if not _ARRAY_TOKEN_RE.fullmatch(tok):
            raise ParseError(f"bad token {tok!r} at position {k}", k)
        values.append(int(tok))
    return tuple(values)


def symbols_used(x: Sequence[Letter]) -> frozenset[Symbol]:
    return frozenset(s for a in x for s in a)
