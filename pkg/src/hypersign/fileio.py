"""Instance files: a small line-oriented text format plus a JSON mirror.

Text format::

    # comment, blank lines ignored
    vertices 6
    edge e1 +1 -2 +3 +4

`+v` / `-v` encode the orientation at vertex v; the sign is mandatory.
The JSON mirror is {"n": ..., "edges": [{"name": ..., "incidences":
[{"v": ..., "sign": ...}]}]}.  Serialization is canonical — incidences
sorted by vertex, edges kept in order — so parse(serialize(g)) is g and
serialize(parse(text)) canonicalizes text.
"""

from __future__ import annotations

import json
from importlib import resources

from .core import OrientedHypergraph, build
from .errors import ParseError

__all__ = [
    "parse",
    "parse_text",
    "load",
    "save",
    "serialize",
    "to_json_dict",
    "from_json_dict",
    "bundled_names",
    "load_bundled",
]


def parse_text(text: str) -> OrientedHypergraph:
    """Parse the text format; syntax problems carry a 1-based line number."""
    n: int | None = None
    edge_specs: list[list[tuple[int, int]]] = []
    names: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if n is not None:
                raise ParseError(lineno, "duplicate 'vertices' line")
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(lineno, "expected: vertices <count>")
            n = int(tokens[1])
        elif tokens[0] == "edge":
            if n is None:
                raise ParseError(lineno, "'edge' before the 'vertices' line")
            if len(tokens) < 2:
                raise ParseError(lineno, "expected: edge <name> <+v|-v> ...")
            name = tokens[1]
            if name in names:
                raise ParseError(lineno, f"duplicate edge name {name!r}")
            incidences = []
            for token in tokens[2:]:
                if len(token) < 2 or token[0] not in "+-" or not token[1:].isdigit():
                    raise ParseError(
                        lineno, f"incidence token {token!r} must look like +3 or -3"
                    )
                incidences.append(
                    (int(token[1:]), 1 if token[0] == "+" else -1)
                )
            edge_specs.append(incidences)
            names.append(name)
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    if n is None:
        raise ParseError(1, "missing 'vertices' line")
    return build(n, edge_specs, names)


def from_json_dict(data: dict) -> OrientedHypergraph:
    try:
        n = int(data["n"])
        edge_specs = []
        names = []
        for entry in data["edges"]:
            names.append(str(entry["name"]))
            edge_specs.append(
                [(int(inc["v"]), int(inc["sign"])) for inc in entry["incidences"]]
            )
    except (KeyError, TypeError) as exc:
        raise ParseError(0, f"malformed instance JSON: {exc}") from exc
    return build(n, edge_specs, names)


def to_json_dict(g: OrientedHypergraph) -> dict:
    return {
        "n": g.n,
        "edges": [
            {
                "name": g.names[j],
                "incidences": [
                    {"v": v, "sign": s} for v, s in sorted(g.edges[j])
                ],
            }
            for j in range(g.m)
        ],
    }


def serialize(g: OrientedHypergraph, fmt: str = "ohg") -> str:
    """Canonical text (or JSON) form of an instance."""
    if fmt == "json":
        return json.dumps(to_json_dict(g), indent=2) + "\n"
    if fmt != "ohg":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"vertices {g.n}"]
    for j in range(g.m):
        name = g.names[j]
        if any(ch.isspace() for ch in name):
            raise ValueError(f"edge name {name!r} cannot contain whitespace")
        tokens = " ".join(
            f"{'+' if s > 0 else '-'}{v}" for v, s in sorted(g.edges[j])
        )
        lines.append(f"edge {name} {tokens}".rstrip())
    return "\n".join(lines) + "\n"


def _parse_content(text: str) -> OrientedHypergraph:
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.lineno, f"bad JSON: {exc.msg}") from exc
        return from_json_dict(data)
    return parse_text(text)


def parse(source: str) -> OrientedHypergraph:
    """Parse a path or raw content (text or JSON, sniffed by shape)."""
    stripped = source.lstrip()
    if "\n" in source or stripped.startswith(("vertices", "#", "{")):
        return _parse_content(source)
    return load(source)


def load(path) -> OrientedHypergraph:
    with open(path, "r", encoding="utf-8") as handle:
        return _parse_content(handle.read())


def save(g: OrientedHypergraph, path) -> None:
    fmt = "json" if str(path).endswith(".json") else "ohg"
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize(g, fmt))


def bundled_names() -> list[str]:
    """Names of the instances shipped with the package."""
    folder = resources.files(__package__).joinpath("data")
    return sorted(
        entry.name[: -len(".ohg")]
        for entry in folder.iterdir()
        if entry.name.endswith(".ohg")
    )


def load_bundled(name: str) -> OrientedHypergraph:
    """One of the shipped instances, by name (with or without .ohg)."""
    filename = name if name.endswith(".ohg") else f"{name}.ohg"
    traversable = resources.files(__package__).joinpath("data").joinpath(filename)
    return _parse_content(traversable.read_text(encoding="utf-8"))
