"""Text file formats for presentations and based graphs, plus DOT export.

Presentation files:
    gens: a b
    rel: a a
    rel: b b b
Graph files:
    vertices: 3
    base: 0
    edge: 0 a 1
Lines starting with '#' are comments.  Serialization is canonical: graphs
are renumbered in BFS order from the base, so parse and serialize round-trip
byte-identically on canonical files.
"""

from __future__ import annotations

from .errors import ParseError
from .words import Alphabet, Presentation, Word
from .xgraph import BasedXGraph, XGraph, canonicalize, is_folded


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_presentation(text: str) -> Presentation:
    alphabet = None
    relators = []
    for lineno, line in _content_lines(text):
        if line.startswith("gens:"):
            if alphabet is not None:
                raise ParseError("duplicate gens line", lineno)
            names = line[len("gens:"):].split()
            if not names:
                raise ParseError("empty generator list", lineno)
            try:
                alphabet = Alphabet(names)
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
        elif line.startswith("rel:"):
            if alphabet is None:
                raise ParseError("rel before gens", lineno)
            try:
                relators.append(alphabet.parse_word(line[len("rel:"):].strip()))
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
    if alphabet is None:
        raise ParseError("missing gens line")
    try:
        return Presentation(alphabet, relators)
    except ValueError as e:
        raise ParseError(str(e)) from None


def serialize_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.alphabet.names)]
    lines += ["rel: " + p.alphabet.format_word(r) for r in p.relators]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, alphabet: Alphabet) -> BasedXGraph:
    vertices = None
    base = None
    edges = []
    for lineno, line in _content_lines(text):
        if line.startswith("vertices:"):
            vertices = int(line[len("vertices:"):])
        elif line.startswith("base:"):
            base = int(line[len("base:"):])
        elif line.startswith("edge:"):
            parts = line[len("edge:"):].split()
            if len(parts) != 3:
                raise ParseError("edge needs origin, letter, terminus", lineno)
            try:
                u, v = int(parts[0]), int(parts[2])
            except ValueError:
                raise ParseError("bad vertex id", lineno) from None
            try:
                li = alphabet.index(parts[1])
            except ValueError as e:
                raise ParseError(str(e), lineno) from None
            edges.append((u, li, v))
        else:
            raise ParseError(f"unrecognized line: {line!r}", lineno)
    if vertices is None:
        raise ParseError("missing vertices line")
    if base is None:
        raise ParseError("missing base line")
    try:
        return BasedXGraph(XGraph(alphabet, vertices, edges), base)
    except ValueError as e:
        raise ParseError(str(e)) from None


def serialize_graph(g: BasedXGraph) -> str:
    if is_folded(g.graph):
        g, _ = canonicalize(g)
    lines = [f"vertices: {g.vertex_count}", f"base: {g.base}"]
    names = g.alphabet.names
    lines += [f"edge: {u} {names[li]} {v}" for (u, li, v) in g.graph.edges]
    return "\n".join(lines) + "\n"


def export_dot(g: BasedXGraph) -> str:
    """Graphviz output; edges carry generator names, the base is a double
    circle."""
    names = g.alphabet.names
    lines = ["digraph subgroup_graph {"]
    for v in range(g.vertex_count):
        shape = "doublecircle" if v == g.base else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for (u, li, v) in g.graph.edges:
        lines.append(f'  {u} -> {v} [label="{names[li]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
