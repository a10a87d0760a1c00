"""Tests for BGF, JSON graph documents and DOT export."""

import pytest

from tests.conftest import nonthin_brace
from thinbrace.errors import InputError, ParseError
from thinbrace.formats import load_graph, parse_graph
from thinbrace.formats.bgf import parse_bgf, serialize_bgf
from thinbrace.formats.dot import to_dot
from thinbrace.formats.json_graph import parse_json_graph, serialize_json_graph
from thinbrace.graph.model import Shore

C4_BGF = """c the 4-cycle
c name square
p bgf 2 2 4
e 0 0
e 0 1
e 1 0
e 1 1
"""


# --- BGF ---


class TestParseBgf:
    def test_default_labels(self):
        g = parse_bgf(C4_BGF)
        assert g.name == "square"
        assert g.part_a == ("a0", "a1")
        assert g.part_b == ("b0", "b1")
        assert g.m == 4

    def test_labels(self):
        text = "c labels a x y\nc labels b p q\np bgf 2 2 2\ne 1 0\ne 0 1\n"
        g = parse_bgf(text)
        assert g.edge_labels() == (("x", "q"), ("y", "p"))
        assert g.name is None

    def test_blank_lines_and_comments_anywhere(self):
        text = "\n\nc hello\np bgf 1 1 1\n\nc mid\ne 0 0\n"
        assert parse_bgf(text).m == 1

    @pytest.mark.parametrize(
        "text, line",
        [
            ("p bgf 2 2 1\np bgf 2 2 1\ne 0 0\n", 2),
            ("e 0 0\n", 1),
            ("p bgf 2 2\n", 1),
            ("p bgf x 2 1\n", 1),
            ("p bgf 2 2 1\ne 2 0\n", 2),
            ("p bgf 2 2 1\ne 0 2\n", 2),
            ("p bgf 2 2 1\ne 0\n", 2),
            ("p bgf 2 2 2\ne 0 0\ne 0 0\n", 3),
            ("p bgf 2 2 1\ne 0 0\ne 1 1\n", 3),
            ("p bgf 2 2 1\nx 0 0\n", 2),
            ("p bgf 2 2 1\ne -1 0\n", 2),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(ParseError) as excinfo:
            parse_bgf(text)
        assert excinfo.value.line == line
        assert str(excinfo.value).startswith(f"line {line}:")

    @pytest.mark.parametrize(
        "text",
        [
            "c only a comment\n",
            "p bgf 2 2 2\ne 0 0\n",
            "c labels a x\np bgf 2 1 0\n",
        ],
    )
    def test_whole_file_errors(self, text):
        with pytest.raises(ParseError) as excinfo:
            parse_bgf(text)
        assert excinfo.value.line is None

    def test_parse_error_is_input_error(self):
        assert issubclass(ParseError, InputError)


class TestSerializeBgf:
    def test_roundtrip_named(self, q3, heawood):
        for g in (q3, heawood, nonthin_brace()):
            assert parse_bgf(serialize_bgf(g)) == g

    def test_layout(self, c4):
        text = serialize_bgf(c4)
        assert text.splitlines() == [
            "c name c4",
            "c labels a a1 a2",
            "c labels b b1 b2",
            "p bgf 2 2 4",
            "e 0 0",
            "e 0 1",
            "e 1 0",
            "e 1 1",
        ]


# --- JSON ---


class TestJsonGraph:
    def test_roundtrip(self, q3):
        assert parse_json_graph(serialize_json_graph(q3)) == q3

    def test_edges_in_either_order(self):
        text = '{"part_a": ["x"], "part_b": ["y", "z"], "edges": [["y", "x"], ["x", "z"]]}'
        g = parse_json_graph(text)
        assert g.edge_labels() == (("x", "y"), ("x", "z"))

    @pytest.mark.parametrize(
        "text",
        [
            "{not json",
            '{"part_a": ["x"], "edges": []}',
            '{"part_a": ["x"], "part_b": ["y"], "edges": [["x", "y"], ["x", "y"]]}',
            '{"part_a": ["x"], "part_b": ["y"], "edges": [["x", "w"]]}',
            '{"part_a": ["x", "w"], "part_b": ["y"], "edges": [["x", "w"]]}',
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_json_graph(text)


class TestLoading:
    def test_dispatch(self, c4):
        assert parse_graph("  \n" + serialize_json_graph(c4)) == c4
        assert parse_graph(serialize_bgf(c4)) == c4

    def test_load_file(self, tmp_path, heawood):
        path = tmp_path / "heawood.bgf"
        path.write_text(serialize_bgf(heawood), encoding="utf-8")
        assert load_graph(path) == heawood

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            load_graph(tmp_path / "missing.bgf")


# --- DOT ---


class TestToDot:
    def test_plain(self, c4):
        text = to_dot(c4)
        assert text.startswith('graph "c4" {\n')
        assert '  "a1" [part=A];' in text
        assert '  "b2" [part=B];' in text
        assert '  "a1" -- "b1";' in text
        assert text.rstrip().endswith("}")

    def test_shore(self, c4):
        text = to_dot(c4, shore=Shore.of(c4, ["a1"]))
        assert '"a1" [part=A shore=X' in text
        assert '"b1" [part=B shore=Xbar' in text

    def test_dashed_either_orientation(self, c4):
        text = to_dot(c4, dashed=[("b1", "a1")])
        assert '  "a1" -- "b1" [style=dashed];' in text
        assert '  "a2" -- "b2";' in text

    def test_title_quoting(self, c4):
        assert to_dot(c4, title='say "hi"').startswith('graph "say \\"hi\\"" {')
