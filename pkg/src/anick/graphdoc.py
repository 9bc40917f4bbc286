"""Line-oriented graph documents.

Format, by example:

    # a 2-cycle
    vertices: v w
    edges:
      e: v -> w
      f: w -> v

"vertices:" lists vertex names on one line; "edges:" opens a block of
indented records "name: dom -> cod". Record order is meaningful: the first
edge listed out of a vertex is its top edge. Blank lines and full-line #
comments are skipped; anything else is an error carrying its line number.
"""

from .errors import GraphDocumentError
from .leavitt import Graph


class GraphDocument:
    """Parsed but unvalidated graph text: names are checked by to_graph."""

    def __init__(self, vertices, edges):
        self.vertices = list(vertices)
        self.edges = list(edges)

    def to_graph(self):
        return Graph(self.vertices, self.edges)


def _parse_edge(lineno, text):
    name, sep, rest = text.partition(":")
    name = name.strip()
    parts = rest.split()
    if not sep or not name or len(parts) != 3 or parts[1] != "->":
        raise GraphDocumentError(
            lineno, f"expected 'name: dom -> cod', got {text!r}"
        )
    return (name, parts[0], parts[2])


def parse_graph_document(text):
    vertices = None
    edges = None
    in_edges = False
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if line[:1].isspace():
            if not in_edges:
                raise GraphDocumentError(
                    lineno, "indented record outside an edges block"
                )
            edges.append(_parse_edge(lineno, stripped))
            continue
        in_edges = False
        key, sep, rest = stripped.partition(":")
        key = key.strip()
        if not sep:
            raise GraphDocumentError(
                lineno, f"expected 'key: ...', got {stripped!r}"
            )
        if key == "vertices":
            if vertices is not None:
                raise GraphDocumentError(lineno, "duplicate 'vertices' key")
            vertices = rest.split()
            if not vertices:
                raise GraphDocumentError(lineno, "empty vertex list")
        elif key == "edges":
            if edges is not None:
                raise GraphDocumentError(lineno, "duplicate 'edges' key")
            if rest.strip():
                raise GraphDocumentError(
                    lineno, "'edges:' takes indented records, not a value"
                )
            edges = []
            in_edges = True
        else:
            raise GraphDocumentError(lineno, f"unknown key {key!r}")
    if vertices is None:
        raise GraphDocumentError(lineno + 1, "missing 'vertices' key")
    return GraphDocument(vertices, edges or [])


def graph_from_text(text):
    return parse_graph_document(text).to_graph()


def format_graph_document(g):
    """Round-trip partner of parse_graph_document."""
    lines = ["vertices: " + " ".join(g.vertices)]
    if g.edges:
        lines.append("edges:")
        for name, dom, cod in g.edges:
            lines.append(f"  {name}: {dom} -> {cod}")
    return "\n".join(lines) + "\n"
