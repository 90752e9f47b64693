"""Immutable bipartite graph model with loaders for common text formats.

Nodes live on two sides (primary and secondary) and edges only cross
sides.  Graphs are frozen after construction; analyses of the secondary
side swap roles via :func:`mirror` or a ``side`` argument rather than
mutating the graph.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import BimotifError


class EmptyInput(BimotifError):
    """Input contained no usable rows or an empty label."""


class BipartiteViolation(BimotifError):
    """A label was used on both sides, or side integrity failed."""


class NonBinaryEntry(BimotifError):
    """A biadjacency entry was not 0 or 1."""


class DimensionMismatch(BimotifError):
    """Matrix shape and label counts disagree."""


class MalformedInput(BimotifError):
    """A text input line could not be parsed."""


class Side(Enum):
    """The two node roles of a two-mode network."""

    PRIMARY = "primary"
    SECONDARY = "secondary"

    def other(self) -> "Side":
        return Side.SECONDARY if self is Side.PRIMARY else Side.PRIMARY


@dataclass(frozen=True)
class NodeRef:
    """A node identified by its side and dense index within that side."""

    side: Side
    index: int


@dataclass(frozen=True)
class BipartiteGraph:
    """A simple, immutable two-mode graph.

    ``adjacency_primary[i]`` is the sorted tuple of secondary indices
    adjacent to primary node ``i``; ``adjacency_secondary`` is its
    mirror.  Both views describe the same edge set.
    """

    primary_labels: tuple[str, ...]
    secondary_labels: tuple[str, ...]
    adjacency_primary: tuple[tuple[int, ...], ...]
    adjacency_secondary: tuple[tuple[int, ...], ...]
    edge_count: int

    def labels(self, side: Side) -> tuple[str, ...]:
        return self.primary_labels if side is Side.PRIMARY else self.secondary_labels

    def node_count(self, side: Side) -> int:
        return len(self.labels(side))

    def adjacency(self, side: Side) -> tuple[tuple[int, ...], ...]:
        """Per-node neighbor tuples for nodes of ``side``."""
        if side is Side.PRIMARY:
            return self.adjacency_primary
        return self.adjacency_secondary

    def neighbors(self, v: NodeRef) -> tuple[int, ...]:
        """Sorted opposite-side indices adjacent to ``v``."""
        adj = self.adjacency(v.side)
        if not 0 <= v.index < len(adj):
            raise IndexError(f"no node {v.index} on the {v.side.value} side")
        return adj[v.index]

    def degree_sequence(self, side: Side) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency(side))

    def to_edge_list(self) -> list[tuple[str, str]]:
        """Edges as (primary_label, secondary_label) pairs in index order."""
        out = []
        for i, nbrs in enumerate(self.adjacency_primary):
            for j in nbrs:
                out.append((self.primary_labels[i], self.secondary_labels[j]))
        return out


def mirror(g: BipartiteGraph) -> BipartiteGraph:
    """The same graph with primary and secondary roles exchanged."""
    return BipartiteGraph(
        primary_labels=g.secondary_labels,
        secondary_labels=g.primary_labels,
        adjacency_primary=g.adjacency_secondary,
        adjacency_secondary=g.adjacency_primary,
        edge_count=g.edge_count,
    )


def _assemble(
    primary_labels: Sequence[str],
    secondary_labels: Sequence[str],
    edges: Iterable[tuple[int, int]],
) -> BipartiteGraph:
    """Build a graph from index edges, deriving both adjacency views."""
    adj_p: list[set[int]] = [set() for _ in primary_labels]
    adj_s: list[set[int]] = [set() for _ in secondary_labels]
    count = 0
    for i, j in edges:
        adj_p[i].add(j)
        adj_s[j].add(i)
        count += 1
    return BipartiteGraph(
        primary_labels=tuple(primary_labels),
        secondary_labels=tuple(secondary_labels),
        adjacency_primary=tuple(tuple(sorted(s)) for s in adj_p),
        adjacency_secondary=tuple(tuple(sorted(s)) for s in adj_s),
        edge_count=count,
    )


def from_indexed_edges(
    primary_labels: Sequence[str],
    secondary_labels: Sequence[str],
    edges: Iterable[tuple[int, int]],
) -> BipartiteGraph:
    """Build a graph from already-deduplicated (primary, secondary) index pairs."""
    return _assemble(primary_labels, secondary_labels, set(edges))


def from_edge_list(
    rows: Sequence[tuple[str, str]],
) -> tuple[BipartiteGraph, int]:
    """Build a graph from labeled edge rows.

    Returns the graph and the number of duplicate rows that were
    collapsed.  Node order is first appearance.  A label seen on both
    sides raises BipartiteViolation.
    """
    if not rows:
        raise EmptyInput("edge list is empty")
    p_index: dict[str, int] = {}
    s_index: dict[str, int] = {}
    p_labels: list[str] = []
    s_labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    duplicates = 0
    for a, b in rows:
        if not a or not b:
            raise EmptyInput(f"empty label in row ({a!r}, {b!r})")
        if a in s_index:
            raise BipartiteViolation(f"label {a!r} appears on both sides")
        if b in p_index:
            raise BipartiteViolation(f"label {b!r} appears on both sides")
        if a not in p_index:
            p_index[a] = len(p_labels)
            p_labels.append(a)
        if b not in s_index:
            s_index[b] = len(s_labels)
            s_labels.append(b)
        e = (p_index[a], s_index[b])
        if e in edges:
            duplicates += 1
        else:
            edges.add(e)
    return _assemble(p_labels, s_labels, edges), duplicates


def from_biadjacency(
    matrix: Sequence[Sequence[int]],
    row_labels: Sequence[str],
    col_labels: Sequence[str],
) -> BipartiteGraph:
    """Build a graph from a 0/1 matrix; rows are primary nodes."""
    if len(row_labels) != len(matrix):
        raise DimensionMismatch(
            f"{len(row_labels)} row labels for {len(matrix)} rows"
        )
    if len(set(row_labels)) != len(row_labels):
        raise BipartiteViolation("duplicate primary label")
    if len(set(col_labels)) != len(col_labels):
        raise BipartiteViolation("duplicate secondary label")
    both = set(row_labels) & set(col_labels)
    if both:
        raise BipartiteViolation(f"label {sorted(both)[0]!r} appears on both sides")
    edges = []
    for i, row in enumerate(matrix):
        if len(row) != len(col_labels):
            raise DimensionMismatch(
                f"row {i} has {len(row)} entries, expected {len(col_labels)}"
            )
        for j, entry in enumerate(row):
            if entry == 1:
                edges.append((i, j))
            elif entry != 0:
                raise NonBinaryEntry(f"entry {entry!r} at ({i}, {j})")
    return _assemble(row_labels, col_labels, edges)


def _data_lines(text: str) -> list[str]:
    """Non-blank lines with comment lines removed."""
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            out.append(line)
    return out


def load_edge_list(path: str | Path) -> tuple[BipartiteGraph, int]:
    """Load a two-column edge file, TAB or comma separated.

    The delimiter is detected from the first data line and must be used
    consistently.  Lines starting with ``#`` are ignored.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = _data_lines(text)
    if not lines:
        raise EmptyInput(f"no data rows in {path}")
    delim = "\t" if "\t" in lines[0] else ","
    rows = []
    for line in lines:
        parts = [p.strip() for p in line.split(delim)]
        if len(parts) != 2:
            raise MalformedInput(
                f"expected 2 fields separated by {delim!r}, got {len(parts)}: {line!r}"
            )
        rows.append((parts[0], parts[1]))
    return from_edge_list(rows)


def load_biadjacency(path: str | Path) -> BipartiteGraph:
    """Load a biadjacency CSV.

    First row: blank cell, then secondary labels.  Each later row: a
    primary label followed by 0/1 entries.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = _data_lines(text)
    if not lines:
        raise EmptyInput(f"no data rows in {path}")
    reader = csv.reader(io.StringIO("\n".join(lines)))
    header = next(reader)
    if len(header) < 2 or header[0].strip():
        raise MalformedInput("first biadjacency row must start with a blank cell")
    col_labels = [c.strip() for c in header[1:]]
    row_labels = []
    matrix = []
    for row in reader:
        if not row:
            continue
        row_labels.append(row[0].strip())
        entries = []
        for cell in row[1:]:
            cell = cell.strip()
            if cell not in ("0", "1"):
                raise NonBinaryEntry(f"entry {cell!r} in row {row[0]!r}")
            entries.append(int(cell))
        matrix.append(entries)
    if not matrix:
        raise EmptyInput(f"no matrix rows in {path}")
    return from_biadjacency(matrix, row_labels, col_labels)


def detect_format(path: str | Path) -> str:
    """Guess "biadjacency" or "edgelist" from the first data line.

    A line starting with an empty CSV field can only be a biadjacency
    header, anything else is treated as an edge row.
    """
    text = Path(path).read_text(encoding="utf-8")
    lines = _data_lines(text)
    if not lines:
        raise EmptyInput(f"no data rows in {path}")
    first = lines[0]
    if "\t" not in first and first.split(",")[0].strip() == "":
        return "biadjacency"
    return "edgelist"


def load_graph(path: str | Path, fmt: str = "auto") -> tuple[BipartiteGraph, int]:
    """Load either supported format; returns (graph, duplicate_row_count)."""
    if fmt == "auto":
        fmt = detect_format(path)
    if fmt == "biadjacency":
        return load_biadjacency(path), 0
    if fmt == "edgelist":
        return load_edge_list(path)
    raise ValueError(f"unknown format {fmt!r}")


def load_southern_women() -> BipartiteGraph:
    """The bundled 18-women by 14-events attendance network."""
    ref = resources.files("bimotif.data").joinpath("southern_women.csv")
    with resources.as_file(ref) as p:
        return load_biadjacency(p)
