"""Graph text formats and record serialization.

graph6 cannot carry loops, so a looped graph is written as the graph6 string
of its loop-free part followed by an optional sidecar ``:v1,v2,...`` listing
0-based loop vertices, e.g. ``A_:0`` is K_2 with a loop on vertex 0.
"""
from __future__ import annotations

import csv
import dataclasses
import json
import math
from dataclasses import dataclass
from typing import IO, Any, Iterable, Iterator, Mapping

from .graph import LoopedGraph, from_edge_list, num_pairs
from .spectra import Spectrum

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    pass


# graph6 ---------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)``."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for b in data[start:start + width]:
        n = n << 6 | (b - 63)
    return n, start + width


def emit_graph6(g: LoopedGraph, header: bool = False) -> str:
    """graph6 encoding of ``g`` plus the loop sidecar when ``g`` has loops."""
    m = num_pairs(g.n)
    out = [GRAPH6_HEADER] if header else []
    out.append(_encode_n(g.n))
    adj = g.adj
    for start in range(0, m, 6):
        val = 0
        for k in range(start, start + 6):
            val = val << 1 | (adj >> k & 1 if k < m else 0)
        out.append(chr(63 + val))
    if g.loops:
        out.append(":" + ",".join(str(v) for v in g.loop_set))
    return "".join(out)


def parse_graph6(text: str) -> LoopedGraph:
    """Parse graph6 with an optional ``>>graph6<<`` header and loop sidecar."""
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    body, sep, sidecar = text.partition(":")
    try:
        data = body.encode("ascii")
    except UnicodeEncodeError:
        raise GraphFormatError("graph6 must be ASCII") from None
    for b in data:
        if not 63 <= b <= 126:
            raise GraphFormatError(f"byte {b} outside [63, 126]")
    n, used = _decode_n(data)
    m = num_pairs(n)
    payload = data[used:]
    if len(payload) != (m + 5) // 6:
        raise GraphFormatError(f"order {n} needs {(m + 5) // 6} adjacency bytes, got {len(payload)}")
    adj = 0
    k = 0
    for b in payload:
        val = b - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < m:
                adj |= bit << k
            elif bit:
                raise GraphFormatError("non-zero padding bits")
            k += 1
    loops = []
    if sep and sidecar.strip():
        for tok in sidecar.split(","):
            tok = tok.strip()
            if not tok.isdigit():
                raise GraphFormatError(f"bad loop index {tok!r}")
            v = int(tok)
            if v >= n:
                raise GraphFormatError(f"loop index {v} out of range for order {n}")
            loops.append(v)
    return LoopedGraph(n, adj, sum(1 << v for v in set(loops)))


# edge lists -----------------------------------------------------------------

def parse_edgelist(text: str) -> LoopedGraph:
    """Parse ``n <count>`` followed by ``u v`` and ``loop v`` lines.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    n = None
    edges, loops = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if n is None:
                if len(parts) != 2 or parts[0] != "n":
                    raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
                n = int(parts[1])
                if n < 0:
                    raise GraphFormatError(f"line {lineno}: negative order")
            elif parts[0] == "loop" and len(parts) == 2:
                loops.append(int(parts[1]))
            elif len(parts) == 2:
                edges.append((int(parts[0]), int(parts[1])))
            else:
                raise GraphFormatError(f"line {lineno}: malformed {raw!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {lineno}: malformed {raw!r}") from None
    if n is None:
        raise GraphFormatError("missing 'n <count>' line")
    try:
        return from_edge_list(n, edges, loops)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def emit_edgelist(g: LoopedGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    lines += [f"loop {v}" for v in g.loop_set]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class GraphDocument:
    source: str
    graph: LoopedGraph
    format: str  # "graph6" | "edgelist"


def read_graph(text: str) -> GraphDocument:
    """Parse either format; a leading ``n`` token selects the edge-list reader."""
    stripped = text.strip()
    first = stripped.split(None, 1)[0] if stripped else ""
    if first == "n":
        return GraphDocument(text, parse_edgelist(text), "edgelist")
    line = stripped.splitlines()[0] if stripped else ""
    return GraphDocument(text, parse_graph6(line), "graph6")


# records --------------------------------------------------------------------

def format_number(x: float) -> str:
    return f"{x:.17g}"


def _flatten(record: Any) -> dict[str, Any]:
    if dataclasses.is_dataclass(record):
        items = [(f.name, getattr(record, f.name)) for f in dataclasses.fields(record)]
    else:
        items = list(record.items())
    row: dict[str, Any] = {}
    for key, value in items:
        if isinstance(value, Mapping):
            prefix = {"deltas": "delta", "tolerances": "tol", "values": "value"}.get(key, key)
            for k, v in value.items():
                row[f"{prefix}_{k}"] = v
        elif isinstance(value, Spectrum):
            row[key] = list(value.values)
        else:
            row[key] = value
    return row


def _csv_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_number(v)
    if isinstance(v, (list, tuple)):
        return " ".join(_csv_cell(x) for x in v)
    return str(v)


def _json_token(v: Any) -> str:
    if isinstance(v, float):
        return format_number(v) if math.isfinite(v) else "null"
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_json_token(x) for x in v) + "]"
    return json.dumps(v)


def to_row(record: Any) -> dict[str, Any]:
    return _flatten(record)


def jsonl_line(record: Any) -> str:
    row = _flatten(record)
    return "{" + ",".join(f"{json.dumps(k)}:{_json_token(v)}" for k, v in row.items()) + "}"


class ReportSink:
    """Streams records as CSV (RFC 4180 quoting) or JSON lines.

    Floats are written with 17 significant digits in both formats.
    """

    def __init__(self, stream: IO[str], fmt: str = "csv"):
        if fmt not in ("csv", "jsonl"):
            raise ValueError(f"unknown sink format {fmt!r}")
        self.stream = stream
        self.format = fmt
        self.count = 0
        self._writer = None

    def write(self, record: Any) -> None:
        if self.format == "jsonl":
            self.stream.write(jsonl_line(record) + "\n")
        else:
            row = _flatten(record)
            if self._writer is None:
                self._writer = csv.DictWriter(self.stream, fieldnames=list(row), lineterminator="\r\n")
                self._writer.writeheader()
            self._writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        self.count += 1

    def write_all(self, records: Iterable[Any]) -> Iterator[Any]:
        """Write each record and pass it through."""
        for rec in records:
            self.write(rec)
            yield rec
