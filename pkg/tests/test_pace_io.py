import io

import pytest

from decompositions.tree_decomposition import TreeDecomposition, validate_td
from families.generators import grid, path
from harness.pace_io import emit_gr, emit_td, parse_gr, parse_td, read_text
from utils.errors import InputError, PaceFormatError

P3_GR = """c a path on three vertices
p tw 3 2
1 2

2 3
"""


class TestGr:
    def test_parse(self):
        g = parse_gr(P3_GR)
        assert g == path(3)

    def test_single_edge(self):
        g = parse_gr("p tw 2 1\n1 2\n")
        assert (g.n, g.sorted_edges()) == (2, [(0, 1)])

    def test_from_stream(self):
        assert parse_gr(io.StringIO(P3_GR)) == path(3)

    def test_emit_is_canonical(self):
        text = emit_gr(parse_gr("p tw 3 2\n3 2\n2 1\n"))
        assert text == "p tw 3 2\n1 2\n2 3\n"

    def test_round_trip(self):
        g = grid(3, 3)
        assert parse_gr(emit_gr(g)) == g

    def test_empty_graph(self):
        assert parse_gr("p tw 0 0\n").n == 0

    @pytest.mark.parametrize(
        "text,line",
        [
            ("p tw 2 1\n1 3\n", 2),
            ("p tw 2 1\n1 1\n", 2),
            ("1 2\n", 1),
            ("p tw 2 1\np tw 2 1\n", 2),
            ("p td 2 1\n", 1),
            ("p tw 2 1\n1 x\n", 2),
            ("c\np tw 2 1\n1 2 3\n", 3),
        ],
    )
    def test_line_numbered_errors(self, text, line):
        with pytest.raises(PaceFormatError) as exc:
            parse_gr(text)
        assert exc.value.line_number == line
        assert str(exc.value).startswith(f"line {line}:")

    def test_edge_count_mismatch(self):
        with pytest.raises(PaceFormatError, match="declares 2 edges"):
            parse_gr("p tw 3 2\n1 2\n")

    def test_duplicate_edge_counts_against_header(self):
        with pytest.raises(PaceFormatError):
            parse_gr("p tw 2 2\n1 2\n2 1\n")

    def test_missing_header(self):
        with pytest.raises(PaceFormatError, match="missing"):
            parse_gr("c nothing here\n")

    def test_is_input_error(self):
        with pytest.raises(InputError):
            parse_gr("")


class TestTd:
    P4_TD = "s td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n"

    def test_parse(self):
        td, n = parse_td(self.P4_TD)
        assert n == 4
        assert td.bags == (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}))
        assert validate_td(path(4), td) == 1

    def test_emit(self):
        td = TreeDecomposition.build([{0, 1}, {1, 2}, {2, 3}], [(0, 1), (1, 2)])
        assert emit_td(td, 4) == self.P4_TD

    def test_round_trip(self):
        td, n = parse_td(self.P4_TD)
        assert parse_td(emit_td(td, n)) == (td, n)

    def test_empty_bag(self):
        td, _ = parse_td("s td 1 0 0\nb 1\n")
        assert td.bags == (frozenset(),)

    @pytest.mark.parametrize(
        "text",
        [
            "b 1 1\n",
            "s td 1 1 1\nb 2 1\n",
            "s td 1 1 1\nb 1 2\n",
            "s td 2 1 2\nb 1 1\nb 1 2\n",
            "s td 2 1 2\nb 1 1\nb 2 2\n1 3\n",
            "s td 1 2 2\nb 1 1\n",
            "s td 2 1 2\nb 1 1\n",
        ],
    )
    def test_rejects(self, text):
        with pytest.raises(PaceFormatError):
            parse_td(text)


class TestReadText:
    def test_stdin(self):
        assert read_text("-", io.StringIO("p tw 1 0\n")) == "p tw 1 0\n"

    def test_file(self, tmp_path):
        target = tmp_path / "g.gr"
        target.write_text(P3_GR, encoding="utf-8")
        assert read_text(str(target)) == P3_GR

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            read_text(str(tmp_path / "absent.gr"))
