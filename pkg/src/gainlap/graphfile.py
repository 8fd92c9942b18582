"""Plain-text gain graph files.

Format (vertices are 0-based)::

    # comment
    vertices 3
    0 1 i
    0 2 0.7071067811865476,0.7071067811865476
    1 2 polar:1.5707963267948966

Gain tokens: ``1``, ``-1``, ``i``, ``-i``, a decimal pair ``re,im``, or
``polar:theta`` with theta in radians. Blank lines and ``#`` comments
(whole-line or trailing) are ignored.
"""

from __future__ import annotations

import math
import os

from .errors import (
    BadHeaderError,
    DuplicateEdgeError,
    GraphFileError,
    GraphFileSyntaxError,
    NonUnitGainError,
)
from .graph import GainGraph, as_gain, build

NAMED_GAINS = {"1": 1 + 0j, "-1": -1 + 0j, "i": 1j, "-i": -1j}


class GraphFileNonUnitGainError(GraphFileError, NonUnitGainError):
    pass


class GraphFileDuplicateEdgeError(GraphFileError, DuplicateEdgeError):
    pass


def parse_gain(token: str) -> complex:
    """Parse one gain token; raises ValueError on bad syntax, NonUnitGainError off the circle."""
    if token in NAMED_GAINS:
        return NAMED_GAINS[token]
    if token.startswith("polar:"):
        theta = float(token[len("polar:"):])
        if not math.isfinite(theta):
            raise ValueError(f"non-finite angle in {token!r}")
        return complex(math.cos(theta), math.sin(theta))
    parts = token.split(",")
    if len(parts) != 2:
        raise ValueError(f"unrecognized gain token {token!r}")
    re_, im_ = (float(p) for p in parts)
    return as_gain(complex(re_, im_))


def _column(raw: str, token: str, start: int = 0) -> int:
    return raw.index(token, start) + 1


def parse_text(text: str) -> GainGraph:
    n = None
    edges = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "vertices":
                raise BadHeaderError("expected header 'vertices <n>' before any edge", lineno, 1)
            if len(fields) != 2 or not fields[1].isdigit():
                raise BadHeaderError("header must be 'vertices <n>' with n a non-negative integer",
                                     lineno, 1)
            n = int(fields[1])
            continue
        if fields[0] == "vertices":
            raise BadHeaderError("duplicate 'vertices' header", lineno, 1)
        if len(fields) != 3:
            raise GraphFileSyntaxError(f"expected 'u v gain', got {len(fields)} fields", lineno, 1)
        u_tok, v_tok, g_tok = fields
        try:
            u, v = int(u_tok), int(v_tok)
        except ValueError:
            raise GraphFileSyntaxError("vertex indices must be integers", lineno, 1) from None
        gain_col = _column(raw, g_tok, raw.index(v_tok) + len(v_tok))
        for tok, w in ((u_tok, u), (v_tok, v)):
            if not 0 <= w < n:
                raise GraphFileSyntaxError(f"vertex {w} not in [0, {n})", lineno, _column(raw, tok))
        if u == v:
            raise GraphFileSyntaxError(f"self-loop at vertex {u}", lineno, 1)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFileDuplicateEdgeError(
                f"edge {key} already given on line {seen[key]}", lineno, 1)
        seen[key] = lineno
        try:
            gain = parse_gain(g_tok)
        except NonUnitGainError as exc:
            raise GraphFileNonUnitGainError(str(exc), lineno, gain_col) from None
        except ValueError as exc:
            raise GraphFileSyntaxError(str(exc), lineno, gain_col) from None
        edges.append((u, v, gain))
    if n is None:
        raise BadHeaderError("missing 'vertices <n>' header")
    return build(n, edges)


def parse(path: str | os.PathLike) -> GainGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())


def format_gain(z: complex) -> str:
    for name, val in NAMED_GAINS.items():
        if z == val:
            return name
    return f"{z.real!r},{z.imag!r}"


def serialize(g: GainGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"vertices {g.n}")
    lines.extend(f"{u} {v} {format_gain(z)}" for u, v, z in g.edges)
    return "\n".join(lines) + "\n"


def write(g: GainGraph, path: str | os.PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(g, comment))
