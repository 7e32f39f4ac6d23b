"""The ``gallai-coloring v1`` text format, DOT export, and JSON report envelopes."""

from __future__ import annotations

import json
from importlib import resources

from .coloring import EdgeColoring
from .errors import ParameterError, ParseError, ValidationError

HEADER = "gallai-coloring v1"

DEFAULT_PALETTE = (
    "red", "blue", "green3", "orange", "purple", "brown",
    "deeppink", "cyan4", "gold3", "gray40", "navy", "olivedrab",
)


def serialize_coloring(c: EdgeColoring) -> str:
    lines = [HEADER, f"n={c.n} k={c.k}"]
    for row in c.rows()[:-1]:
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, raw, line


def _column(raw: str, token_index: int) -> int:
    pos = 0
    for i, tok in enumerate(raw.split()):
        pos = raw.index(tok, pos)
        if i == token_index:
            return pos + 1
        pos += len(tok)
    return len(raw) + 1


def parse_coloring(text: str) -> EdgeColoring:
    lines = list(_content_lines(text))
    if not lines or lines[0][2] != HEADER:
        where = lines[0][0] if lines else 1
        raise ParseError(f"expected header {HEADER!r}", where)
    if len(lines) < 2:
        raise ParseError("missing 'n=<n> k=<k>' line", lines[0][0] + 1)
    lineno, raw, dims = lines[1]
    if dims == HEADER:
        raise ParseError("duplicate header", lineno, 1)
    try:
        fields = dict(tok.split("=", 1) for tok in dims.split())
        n, k = int(fields.pop("n")), int(fields.pop("k"))
        if fields:
            raise ValueError
    except (KeyError, ValueError):
        raise ParseError("expected 'n=<n> k=<k>'", lineno, 1) from None
    if n < 1 or k < 1:
        raise ParseError(f"n and k must be positive, got n={n} k={k}", lineno, 1)
    body = lines[2:]
    if len(body) != n - 1:
        where = body[n - 1][0] if len(body) > n - 1 else (lines[-1][0] + 1)
        raise ParseError(f"expected {n - 1} color rows, found {len(body)}", where)
    c = EdgeColoring(n, k, 1)
    for u, (lineno, raw, line) in enumerate(body):
        if line == HEADER or line.startswith("n="):
            raise ParseError("duplicate header", lineno, 1)
        toks = line.split()
        if len(toks) != n - 1 - u:
            raise ParseError(f"vertex {u} needs {n - 1 - u} colors, found {len(toks)}", lineno)
        for j, tok in enumerate(toks):
            try:
                col = int(tok)
            except ValueError:
                raise ParseError(f"bad color token {tok!r}", lineno, _column(raw, j)) from None
            v = u + 1 + j
            if not 1 <= col <= k:
                raise ValidationError(f"edge ({u},{v}) has color {col} outside 1..{k}", (u, v))
            c.set_color(u, v, col)
    return c


def read_coloring(path) -> EdgeColoring:
    with open(path, encoding="utf-8") as fh:
        return parse_coloring(fh.read())


def write_coloring(c: EdgeColoring, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_coloring(c))


def export_dot(c: EdgeColoring, palette=None) -> str:
    palette = tuple(palette) if palette is not None else DEFAULT_PALETTE
    if c.k > len(palette):
        raise ParameterError(f"palette has {len(palette)} colors but the coloring uses k={c.k}")
    out = ["graph coloring {", "  node [shape=circle];"]
    out += [f"  {v};" for v in range(c.n)]
    for u, v, col in c.edges():
        out.append(f'  {u} -- {v} [color="{palette[col - 1]}", class="c{col}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def report(kind: str, inputs: dict, results: dict) -> dict:
    return {"version": 1, "kind": kind, "inputs": inputs, "results": results}


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def report_schema() -> dict:
    text = resources.files("gallai_ramsey").joinpath("data/report_v1.schema.json").read_text()
    return json.loads(text)
