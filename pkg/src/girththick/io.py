"""Reading and writing decomposition documents.

Three formats:

``json``
    The interchange document (``schema_version`` ``"1"``).
``edgelist``
    ``#`` header lines for host and girth, then one block per part with one
    ``a b`` edge per line; blocks are separated by a line ``--``.
``dot``
    Graphviz export only; one ``subgraph part_<i>`` per part.

Output is deterministic: parts keep construction order and edges inside a
part are sorted canonically.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Optional

import jsonschema

from .graph import (
    Complete,
    CompleteTripartite,
    Decomposition,
    Edge,
    Explicit,
    Host,
    PartiteVertex,
    SimpleGraph,
    edge,
)

SCHEMA_VERSION = "1"

_PAIR = {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}

DOCUMENT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["schema_version", "host", "girth_min", "parts"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "host": {
            "type": "object",
            "required": ["kind", "n_or_m"],
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["complete_tripartite", "complete", "explicit"]},
                "n_or_m": {"type": "integer", "minimum": 1},
                "vertices": {"type": "array", "items": {"type": "string"}},
                "edges": {"type": "array", "items": _PAIR},
            },
        },
        "girth_min": {"type": "integer", "minimum": 3},
        "parts": {"type": "array", "minItems": 1, "items": {"type": "array", "items": _PAIR}},
        "metadata": {"type": "object"},
    },
}

_TRIPARTITE_NAME = re.compile(r"^[uvw][1-9][0-9]*$")
_PLAIN_NAME = re.compile(r"^[1-9][0-9]*$")


class DocumentError(ValueError):
    """Input does not parse as a decomposition document."""


@dataclass(frozen=True)
class Document:
    decomposition: Decomposition
    girth_min: int = 4
    metadata: dict[str, Any] = field(default_factory=dict)


# -- host descriptors -------------------------------------------------------

def host_kind(host: Host) -> str:
    if isinstance(host, CompleteTripartite):
        return "complete_tripartite"
    if isinstance(host, Complete):
        return "complete"
    return "explicit"


def host_size(host: Host) -> int:
    if isinstance(host, CompleteTripartite):
        return host.n
    if isinstance(host, Complete):
        return host.m
    return host.host_graph.n_vertices


def parse_host(text: str) -> Host:
    """Parse a CLI host override such as ``complete_tripartite:5`` or ``complete:10``."""
    kind, _, size = text.partition(":")
    try:
        k = int(size)
    except ValueError:
        raise DocumentError(f"bad host descriptor {text!r}") from None
    if k < 1:
        raise DocumentError(f"host size must be positive in {text!r}")
    if kind in ("complete_tripartite", "knnn"):
        return CompleteTripartite(k)
    if kind in ("complete", "k"):
        return Complete(k)
    raise DocumentError(f"bad host kind in {text!r}")


def _vertex(name: str, kind: str) -> PartiteVertex:
    if kind == "complete":
        ok = _PLAIN_NAME.match(name)
    elif kind == "complete_tripartite":
        ok = _TRIPARTITE_NAME.match(name)
    else:
        ok = _PLAIN_NAME.match(name) or _TRIPARTITE_NAME.match(name)
    if not ok:
        raise DocumentError(f"vertex name {name!r} does not fit a {kind} host")
    return PartiteVertex.parse(name)


def _edge(pair: list[str], kind: str) -> Edge:
    a, b = (_vertex(x, kind) for x in pair)
    if a == b:
        raise DocumentError(f"loop edge {a}-{b}")
    return edge(a, b)


def _part(pairs: list[list[str]], kind: str, index: int) -> frozenset[Edge]:
    es = [_edge(p, kind) for p in pairs]
    if len(set(es)) != len(es):
        raise DocumentError(f"part {index + 1} lists an edge twice")
    return frozenset(es)


# -- JSON ---------------------------------------------------------------------

def _sorted_pairs(edges) -> list[list[str]]:
    return [[str(a), str(b)] for a, b in sorted(edges)]


def to_document(d: Decomposition, girth_min: int = 4,
                metadata: Optional[dict[str, Any]] = None) -> dict[str, Any]:
    host: dict[str, Any] = {"kind": host_kind(d.host), "n_or_m": host_size(d.host)}
    if isinstance(d.host, Explicit):
        g = d.host.host_graph
        host["vertices"] = [str(x) for x in g.sorted_vertices]
        host["edges"] = _sorted_pairs(g.edges)
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "host": host,
        "girth_min": girth_min,
        "parts": [_sorted_pairs(p) for p in d.parts],
    }
    if metadata:
        doc["metadata"] = metadata
    return doc


def from_document(doc: Any) -> Document:
    try:
        jsonschema.validate(doc, DOCUMENT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise DocumentError(f"schema violation: {exc.message}") from None
    h = doc["host"]
    kind = h["kind"]
    if kind == "complete_tripartite":
        host: Host = CompleteTripartite(h["n_or_m"])
    elif kind == "complete":
        host = Complete(h["n_or_m"])
    else:
        if "vertices" not in h or "edges" not in h:
            raise DocumentError("explicit host needs 'vertices' and 'edges'")
        vs = [_vertex(x, kind) for x in h["vertices"]]
        try:
            host = Explicit(SimpleGraph(vs, [_edge(p, kind) for p in h["edges"]]))
        except ValueError as exc:
            raise DocumentError(f"bad explicit host: {exc}") from None
    parts = tuple(_part(p, kind, i) for i, p in enumerate(doc["parts"]))
    return Document(Decomposition(host, parts), doc["girth_min"], doc.get("metadata", {}))


def dumps_json(d: Decomposition, girth_min: int = 4,
               metadata: Optional[dict[str, Any]] = None) -> str:
    return json.dumps(to_document(d, girth_min, metadata), indent=2) + "\n"


def loads_json(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(raw)


# -- edge-list blocks ---------------------------------------------------------

def dumps_edgelist(d: Decomposition, girth_min: int = 4) -> str:
    lines = [f"# host: {host_kind(d.host)} {host_size(d.host)}", f"# girth_min: {girth_min}"]
    if isinstance(d.host, Explicit):
        g = d.host.host_graph
        lines.append("# vertices: " + " ".join(str(x) for x in g.sorted_vertices))
        lines.append("# host_edges: " + " ".join(f"{a}-{b}" for a, b in sorted(g.edges)))
    for i, p in enumerate(d.parts):
        if i:
            lines.append("--")
        lines.extend(f"{a} {b}" for a, b in sorted(p))
    return "\n".join(lines) + "\n"


def _infer_host(parts: list[list[list[str]]]) -> tuple[str, int]:
    names = [x for p in parts for pair in p for x in pair]
    if names and all(_PLAIN_NAME.match(x) for x in names):
        return "complete", max(int(x) for x in names)
    if names and all(_TRIPARTITE_NAME.match(x) for x in names):
        return "complete_tripartite", max(int(x[1:]) for x in names)
    raise DocumentError("cannot infer host from vertex names; add a '# host:' header")


def loads_edgelist(text: str) -> Document:
    header: dict[str, str] = {}
    parts: list[list[list[str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].partition(":")
            if sep:
                header[key.strip()] = value.strip()
            continue
        if line == "--":
            parts.append([])
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise DocumentError(f"line {lineno}: expected 'a b', got {raw!r}")
        parts[-1].append(tokens)

    if "host" in header:
        kind, _, size = header["host"].partition(" ")
        try:
            n_or_m = int(size)
        except ValueError:
            raise DocumentError(f"bad host header {header['host']!r}") from None
    else:
        kind, n_or_m = _infer_host(parts)
    try:
        girth_min = int(header.get("girth_min", "4"))
    except ValueError:
        raise DocumentError(f"bad girth_min header {header['girth_min']!r}") from None

    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "host": {"kind": kind, "n_or_m": n_or_m},
        "girth_min": girth_min,
        "parts": parts,
    }
    if kind == "explicit":
        doc["host"]["vertices"] = header.get("vertices", "").split()
        doc["host"]["edges"] = [e.split("-") for e in header.get("host_edges", "").split()]
    return from_document(doc)


# -- DOT export ---------------------------------------------------------------

def dumps_dot(d: Decomposition, name: str = "decomposition") -> str:
    lines = [f"graph {name} {{"]
    for i, p in enumerate(d.parts, 1):
        lines.append(f"  subgraph part_{i} {{")
        lines.append(f'    label="part {i}";')
        lines.extend(f'    "{a}" -- "{b}";' for a, b in sorted(p))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- dispatch -----------------------------------------------------------------

def loads(text: str) -> Document:
    """Parse JSON or edge-list text, choosing by the first non-blank character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return loads_json(text)
    return loads_edgelist(text)


def dumps(d: Decomposition, fmt: str = "json", girth_min: int = 4,
          metadata: Optional[dict[str, Any]] = None) -> str:
    if fmt == "json":
        return dumps_json(d, girth_min, metadata)
    if fmt == "edgelist":
        return dumps_edgelist(d, girth_min)
    if fmt == "dot":
        return dumps_dot(d)
    raise ValueError(f"unknown format {fmt!r}")

