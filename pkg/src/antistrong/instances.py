"""Plain-text instance files.

Header "digraph n m", "graph n m" or "multigraph n m", followed by m
lines "u v" with 0-based ids.  '#' starts a comment anywhere on a line;
blank lines are skipped.  Edge order in the file is the edge identity
used by every certificate, so parsing and serialization preserve it.
"""

from __future__ import annotations

import hashlib
from typing import Union

from .errors import ParseError
from .graphs import Digraph, UGraph

Instance = Union[Digraph, UGraph]

_KINDS = ("digraph", "graph", "multigraph")


def parse_instance(text: str) -> Instance:
    header = None
    pairs: list[tuple[int, int]] = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] not in _KINDS:
                raise ParseError(
                    "expected header 'digraph|graph|multigraph n m'",
                    line=lineno,
                )
            try:
                n, m = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError("header counts must be integers", line=lineno)
            if n < 0 or m < 0:
                raise ParseError("header counts must be nonnegative", line=lineno)
            header = (tokens[0], n, m)
            header_line = lineno
            continue
        if len(tokens) != 2:
            raise ParseError("expected an edge line 'u v'", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", line=lineno)
        kind, n, m = header
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range 0..{n - 1}", line=lineno)
        if u == v:
            raise ParseError("loops are not allowed", line=lineno)
        if len(pairs) >= m:
            raise ParseError("more edge lines than the header promised", line=lineno)
        if kind == "digraph" and (u, v) in pairs:
            raise ParseError("duplicate arc", line=lineno)
        if kind != "multigraph":
            key = (min(u, v), max(u, v))
            copies = sum(1 for a, b in pairs if (min(a, b), max(a, b)) == key)
            if kind == "graph" and copies >= 1:
                raise ParseError("duplicate edge (use 'multigraph')", line=lineno)
        else:
            key = (min(u, v), max(u, v))
            copies = sum(1 for a, b in pairs if (min(a, b), max(a, b)) == key)
            if copies >= 2:
                raise ParseError("at most two parallel copies", line=lineno)
        pairs.append((u, v))
    if header is None:
        raise ParseError("empty instance file", line=1)
    kind, n, m = header
    if len(pairs) != m:
        raise ParseError(
            f"header promises {m} edges, found {len(pairs)}", line=header_line
        )
    if kind == "digraph":
        return Digraph(n, tuple(pairs))
    return UGraph(n, tuple(pairs), multigraph=(kind == "multigraph"))


def serialize_instance(obj: Instance) -> str:
    if isinstance(obj, Digraph):
        kind, pairs = "digraph", obj.arcs
    elif isinstance(obj, UGraph):
        kind = "multigraph" if obj.multigraph else "graph"
        pairs = obj.edges
    else:
        raise TypeError(f"not an instance: {type(obj)!r}")
    lines = [f"{kind} {obj.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"


def instance_hash(obj: Instance) -> str:
    """Canonical content hash used to tie certificates to their input."""
    return hashlib.sha256(serialize_instance(obj).encode()).hexdigest()
