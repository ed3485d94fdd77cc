"""Graph files, witness pair files, and name-map sidecars.

Graph files are DIMACS-style ASCII: ``c`` comment lines, one ``p edge <n>
<m>`` problem line before any edge, then ``m`` lines ``e <u> <v>`` with
1-based endpoints.  Vertices are stored 0-based in memory; every external
surface (files, reports) is 1-based.
"""

from __future__ import annotations

import os
from typing import Union

from .graph import Graph, GraphError

PathLike = Union[str, os.PathLike]


class ParseError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


def parse_graph(path: PathLike) -> Graph:
    """Read a graph file, validating counts, labels, and duplicates."""
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    with open(path, "r", encoding="ascii") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            tokens = line.split()
            if tokens[0] == "p":
                if n is not None:
                    raise ParseError("second problem line", line_no)
                if len(tokens) != 4 or tokens[1] != "edge":
                    raise ParseError(f"malformed problem line {line!r}", line_no)
                try:
                    n, m = int(tokens[2]), int(tokens[3])
                except ValueError:
                    raise ParseError(f"malformed problem line {line!r}", line_no) from None
                if n < 0 or m < 0:
                    raise ParseError("negative counts in problem line", line_no)
            elif tokens[0] == "e":
                if n is None:
                    raise ParseError("edge before problem line", line_no)
                if len(tokens) != 3:
                    raise ParseError(f"malformed edge line {line!r}", line_no)
                try:
                    u, v = int(tokens[1]), int(tokens[2])
                except ValueError:
                    raise ParseError(f"malformed edge line {line!r}", line_no) from None
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ParseError(f"vertex label out of range 1..{n}", line_no)
                if u == v:
                    raise ParseError(f"self-loop at vertex {u}", line_no)
                key = (u, v) if u < v else (v, u)
                if key in seen:
                    raise ParseError(f"duplicate edge ({u}, {v})", line_no)
                seen.add(key)
                edges.append((u - 1, v - 1))
            else:
                raise ParseError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != m:
        raise ParseError(f"problem line promised {m} edges, file has {len(edges)}")
    return Graph.from_edges(n, edges)


def write_graph(g: Graph, path: PathLike, comment: str | None = None) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        if comment:
            for part in comment.splitlines():
                fh.write(f"c {part}\n")
        fh.write(f"p edge {g.n} {g.m}\n")
        for u, v in zip(g.edge_u.tolist(), g.edge_v.tolist()):
            fh.write(f"e {u + 1} {v + 1}\n")


def parse_pairs(path: PathLike, g: Graph) -> list[int]:
    """Read 1-based ``u v`` lines and resolve them to edge indices of g."""
    indices = []
    with open(path, "r", encoding="ascii") as fh:
        for line_no, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise ParseError(f"expected two labels, got {line!r}", line_no)
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError(f"expected two labels, got {line!r}", line_no) from None
            if not (1 <= u <= g.n and 1 <= v <= g.n):
                raise ParseError(f"vertex label out of range 1..{g.n}", line_no)
            try:
                indices.append(g.edge_id(u - 1, v - 1))
            except GraphError:
                raise ParseError(f"({u}, {v}) is not an edge of the graph", line_no) from None
    return indices


def write_pairs(g: Graph, edge_indices, path: PathLike) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for i in sorted(set(int(i) for i in edge_indices)):
            e = g.edge(i)
            fh.write(f"{e.u + 1} {e.v + 1}\n")


def write_name_map(name_map: dict[str, int], path: PathLike) -> None:
    """Sidecar mapping gadget vertex names to 1-based file labels."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for name in sorted(name_map, key=lambda s: name_map[s]):
            fh.write(f"{name} {name_map[name] + 1}\n")


def edge_pairs_1based(g: Graph, edge_indices) -> list[list[int]]:
    """Sorted 1-based endpoint pairs for report output."""
    pairs = []
    for i in sorted(set(int(i) for i in edge_indices)):
        e = g.edge(i)
        pairs.append([e.u + 1, e.v + 1])
    return pairs


def check_roundtrip(g: Graph, path: PathLike) -> bool:
    """Write + reparse and compare; used by tests and the io self-check."""
    write_graph(g, path)
    h = parse_graph(path)
    return h == g


__all__ = ["ParseError", "parse_graph", "write_graph", "parse_pairs",
           "write_pairs", "write_name_map", "edge_pairs_1based",
           "check_roundtrip"]
