import json

import pytest

import hypersign as hs
from hypersign.errors import EmptyEdgeError, ParseError, VertexOutOfRangeError


GOOD = """\
# a comment
vertices 3

edge first +1 -2
edge second +2 +3
"""


def test_parse_text_basic():
    g = hs.parse_text(GOOD)
    assert g.n == 3
    assert g.m == 2
    assert g.names == ("first", "second")
    assert g.orientation(0, 2) == -1


def test_parse_error_line_numbers():
    with pytest.raises(ParseError) as err:
        hs.parse_text("vertices 2\nvertices 3\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        hs.parse_text("edge e1 +1\n")
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        hs.parse_text("vertices 2\nedge e1 +1\nedge e1 +2\n")
    assert err.value.line == 3
    with pytest.raises(ParseError) as err:
        hs.parse_text("vertices 2\nedge e1 1\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        hs.parse_text("vertices 2\nedge e1 +x\n")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        hs.parse_text("vertices two\n")
    assert err.value.line == 1
    with pytest.raises(ParseError):
        hs.parse_text("frobnicate 3\n")
    with pytest.raises(ParseError):
        hs.parse_text("# nothing but comments\n")


def test_parse_text_propagates_structural_errors():
    with pytest.raises(VertexOutOfRangeError):
        hs.parse_text("vertices 2\nedge e1 +5\n")
    with pytest.raises(EmptyEdgeError):
        hs.parse_text("vertices 2\nedge e1\n")


def test_serialize_is_canonical(ex):
    text = hs.serialize(ex, "ohg")
    lines = text.splitlines()
    assert lines[0] == "vertices 6"
    assert lines[1] == "edge e1 +1 -2 +3 +4"
    # round trip is exact
    assert hs.parse(text) == ex
    with pytest.raises(ValueError):
        hs.serialize(ex, "xml")


def test_serialize_sorts_incidences_by_vertex():
    g = hs.build(3, [[(3, 1), (1, -1)]])
    assert "edge e1 -1 +3" in hs.serialize(g, "ohg")


def test_json_round_trip(ex):
    blob = hs.serialize(ex, "json")
    data = json.loads(blob)
    assert data["n"] == 6
    assert data["edges"][0]["name"] == "e1"
    assert hs.parse(blob) == ex
    assert hs.from_json_dict(hs.to_json_dict(ex)) == ex


def test_parse_sniffs_json_and_text(ex):
    assert hs.parse(hs.serialize(ex, "json")) == ex
    assert hs.parse(hs.serialize(ex, "ohg")) == ex
    with pytest.raises(ParseError):
        hs.parse("{not json")


def test_save_and_load(tmp_path, ex):
    text_path = tmp_path / "instance.ohg"
    hs.save(ex, text_path)
    assert hs.load(text_path) == ex
    json_path = tmp_path / "instance.json"
    hs.save(ex, json_path)
    assert json.loads(json_path.read_text())["n"] == 6
    assert hs.load(json_path) == ex


def test_parse_accepts_path_or_content(tmp_path, ex):
    p = tmp_path / "x.ohg"
    hs.save(ex, p)
    assert hs.parse(str(p)) == ex


def test_bundled_fixtures_parse(ex, e1, triangle):
    names = hs.bundled_names()
    assert set(names) >= {"e1", "ex_c3_42", "triangle_one_negative"}
    assert hs.load_bundled("ex_c3_42").edges == ex.edges
    assert hs.load_bundled("e1.ohg").edges == e1.edges
    assert hs.load_bundled("triangle_one_negative").edges == triangle.edges


def test_round_trip_random_instances():
    import random

    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 8)
        g = hs.generate(
            n,
            rng.randint(0, 5),
            size_range=(1, min(4, n)),
            p_neg=0.5,
            seed=rng.randrange(2**32),
        )
        assert hs.parse(hs.serialize(g, "ohg")) == g
        assert hs.parse(hs.serialize(g, "json")) == g
