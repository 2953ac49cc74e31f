"""Plain-text file formats shared by the CLI.

Matrix: a header line ``rows cols`` then one 0/1 string per row.
Graph:  a ``p edge N M`` header then ``e u v`` lines with 1-based vertices.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .gf2 import BinaryMatrix


def format_matrix(m: BinaryMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(m.to_strings())
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BinaryMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    rows, cols = (int(x) for x in lines[0].split())
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"header says {rows} rows, found {len(body)}")
    for ln in body:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row {ln!r}")
    if rows == 0:
        return BinaryMatrix.zeros(0, cols)
    return BinaryMatrix.from_strings(body)


def write_matrix(path: str | Path, m: BinaryMatrix) -> None:
    Path(path).write_text(format_matrix(m))


def read_matrix(path: str | Path) -> BinaryMatrix:
    return parse_matrix(Path(path).read_text())


def format_graph(n: int, edges: Iterable[tuple[int, int]], ordered: bool = False) -> str:
    """DIMACS-style text; ``ordered`` lists each edge in both directions."""
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    if ordered:
        edges = sorted(edges + [(v, u) for u, v in edges])
    lines = [f"p edge {n} {len(edges)}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    n = m = None
    edges = []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"unrecognised graph line {ln!r}")
    if n is None:
        raise ValueError("missing 'p edge' header")
    if len(edges) != m:
        raise ValueError(f"header says {m} edges, found {len(edges)}")
    return n, edges


def write_labels(path: str | Path, labels: Sequence) -> None:
    payload = {str(i + 1): list(lab) for i, lab in enumerate(labels)}
    Path(path).write_text(json.dumps(payload, indent=1) + "\n")


def read_labels(path: str | Path) -> list[tuple[int, ...]]:
    payload = json.loads(Path(path).read_text())
    return [tuple(payload[str(i + 1)]) for i in range(len(payload))]


def parse_edge_list_diagram(text: str) -> tuple[int, list[tuple[int, int, int | float]]]:
    """Coxeter diagram as lines ``i j m`` (0-based nodes; ``m`` may be ``inf``).

    An optional first line ``n N`` fixes the node count.
    """
    n = 0
    edges = []
    for ln in text.splitlines():
        parts = ln.split()
        if not parts or parts[0].startswith("#"):
            continue
        if parts[0] == "n":
            n = int(parts[1])
            continue
        i, j = int(parts[0]), int(parts[1])
        m = float("inf") if parts[2] in ("inf", "oo") else int(parts[2])
        edges.append((i, j, m))
        n = max(n, i + 1, j + 1)
    return n, edges
