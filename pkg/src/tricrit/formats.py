"""GraphDocument JSON (the only ingestion format) and DOT export."""
from __future__ import annotations

import json
import sys
from typing import Any

from .graphs import GRAPH_CLASSES, Graph, GraphError, VertexKind

DOCUMENT_VERSION = 1

ALLOWED_KINDS = {
    "local-tree": {VertexKind.REGION},
    "point-graph": {VertexKind.WHITE, VertexKind.BLACK, VertexKind.GRAY},
    "distinguishing": {VertexKind.WHITE, VertexKind.BLACK, VertexKind.GRAY, VertexKind.JUNCTION},
}


class DocumentError(GraphError):
    pass


def to_document(g: Graph) -> dict[str, Any]:
    if g.graph_class not in GRAPH_CLASSES:
        raise DocumentError(f"graphs of class {g.graph_class!r} have no document form")
    vertices = []
    for v, k in g.kinds.items():
        entry: dict[str, Any] = {"id": v, "kind": k.value}
        if k is VertexKind.WHITE and v in g.signs:
            entry["sign"] = g.signs[v]
        vertices.append(entry)
    return {
        "version": DOCUMENT_VERSION,
        "class": g.graph_class,
        "vertices": vertices,
        "edges": [[u, v] for u, v in g.edges],
    }


def dumps(g: Graph) -> str:
    return json.dumps(to_document(g), indent=2) + "\n"


def from_document(doc: Any) -> Graph:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    if doc.get("version") != DOCUMENT_VERSION:
        raise DocumentError(f"unsupported document version {doc.get('version')!r}")
    cls_name = doc.get("class")
    if cls_name not in GRAPH_CLASSES:
        raise DocumentError(f"unknown class {cls_name!r}")
    verts = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise DocumentError("'vertices' and 'edges' must be lists")
    kinds: dict[int, VertexKind] = {}
    signs: dict[int, int] = {}
    for entry in verts:
        if not isinstance(entry, dict) or "id" not in entry or "kind" not in entry:
            raise DocumentError(f"malformed vertex entry {entry!r}")
        vid = entry["id"]
        if not isinstance(vid, int) or isinstance(vid, bool) or vid < 0:
            raise DocumentError(f"vertex id must be a non-negative integer, got {vid!r}")
        if vid in kinds:
            raise DocumentError(f"duplicate vertex id {vid}")
        try:
            kind = VertexKind(entry["kind"])
        except ValueError:
            raise DocumentError(f"unknown vertex kind {entry['kind']!r}") from None
        if kind not in ALLOWED_KINDS[cls_name]:
            raise DocumentError(f"kind {kind.value!r} is not allowed in a {cls_name} document")
        kinds[vid] = kind
        if "sign" in entry:
            if kind is not VertexKind.WHITE:
                raise DocumentError(f"sign given on non-white vertex {vid}")
            if entry["sign"] not in (1, -1) or isinstance(entry["sign"], bool):
                raise DocumentError(f"sign of vertex {vid} must be +1 or -1")
            signs[vid] = entry["sign"]
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise DocumentError(f"malformed edge {e!r}")
        u, v = e
        if u not in kinds or v not in kinds:
            raise DocumentError(f"edge {e} references an unknown vertex")
        pairs.append((u, v))
    return GRAPH_CLASSES[cls_name](kinds, tuple(pairs), signs)


def loads(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def load(path: str) -> Graph:
    """Read a document from ``path``; ``-`` reads standard input."""
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    return loads(text)


_DOT_STYLE = {
    VertexKind.REGION: 'shape=ellipse, label=""',
    VertexKind.WHITE: 'shape=circle, style=filled, fillcolor=white',
    VertexKind.BLACK: 'shape=circle, style=filled, fillcolor=black, fontcolor=white, label=""',
    VertexKind.GRAY: 'shape=circle, style=filled, fillcolor=gray, label=""',
    VertexKind.JUNCTION: 'shape=point, width=0.08, label=""',
}


def to_dot(g: Graph, name: str = "G") -> str:
    """Export for visualization only; DOT is never read back."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v, k in g.kinds.items():
        style = _DOT_STYLE[k]
        if k is VertexKind.WHITE:
            sign = g.signs.get(v)
            label = "" if sign is None else ("+1" if sign > 0 else "-1")
            style += f", label={json.dumps(label)}"
        lines.append(f"  v{v} [{style}];")
    for u, v in g.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

