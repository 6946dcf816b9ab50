"""Tests for the Hoffman graph model, isomorphism and the .hg format."""

from pathlib import Path

import networkx as nx
import pytest

from hofflat.errors import (
    DuplicateVertexName,
    EmptyAttachment,
    FatFatEdge,
    FatWithoutSlimNeighbor,
    FileNotFound,
    HgSyntaxError,
    SelfLoop,
    UnknownVertex,
)
from hofflat.families import family_a5, family_ht
from hofflat.graph import (
    GraphDescription,
    HoffmanGraph,
    are_isomorphic,
    attach_fat,
    decode_hg,
    delete_slim,
    find_isomorphism,
    format_hg,
    format_hg_stream,
    induced_closure,
    load_hg,
    parse_hg,
    parse_hg_stream,
    predicates,
    relabel,
    to_networkx,
    validate,
)


def _nx_isomorphic(H1: HoffmanGraph, H2: HoffmanGraph) -> bool:
    return nx.is_isomorphic(
        to_networkx(H1), to_networkx(H2), node_match=lambda a, b: a["label"] == b["label"]
    )


class TestValidate:
    """Tests for the validate function."""

    def test_valid_graph(self) -> None:
        """Test that a valid description keeps its order."""
        H = validate(GraphDescription(("x", "y"), ("f",), (("x", "y"), ("x", "f"))))

        assert H.slim_names == ("x", "y")
        assert H.fat_names == ("f",)
        assert H.slim_adj == (frozenset({1}), frozenset({0}))
        assert H.slim_fat == (frozenset({0}), frozenset())

    def test_mapping_input(self) -> None:
        """Test that a plain mapping is accepted."""
        H = validate({"slim": ["x"], "fat": ["f"], "edges": [["f", "x"]]})

        assert H.slim_fat == (frozenset({0}),)

    def test_duplicate_name(self) -> None:
        """Test that a name declared twice is rejected."""
        with pytest.raises(DuplicateVertexName) as exc_info:
            validate({"slim": ["x"], "fat": ["x"]})
        assert exc_info.value.vertices == ("x",)

    def test_self_loop(self) -> None:
        """Test that a self-loop is rejected."""
        with pytest.raises(SelfLoop):
            validate({"slim": ["x"], "edges": [["x", "x"]]})

    def test_unknown_vertex(self) -> None:
        """Test that an edge to an undeclared vertex is rejected."""
        with pytest.raises(UnknownVertex):
            validate({"slim": ["x"], "edges": [["x", "y"]]})

    def test_fat_fat_edge(self) -> None:
        """Test that two adjacent fat vertices are rejected."""
        with pytest.raises(FatFatEdge) as exc_info:
            validate({"slim": ["x"], "fat": ["f", "g"], "edges": [["f", "g"], ["x", "f"]]})
        assert exc_info.value.vertices == ("f", "g")

    def test_fat_without_slim_neighbor(self) -> None:
        """Test that an isolated fat vertex is rejected."""
        with pytest.raises(FatWithoutSlimNeighbor):
            validate({"slim": ["x"], "fat": ["f"]})

    def test_error_name(self) -> None:
        """Test that errors report their class name."""
        with pytest.raises(FatFatEdge) as exc_info:
            validate({"slim": ["x"], "fat": ["f", "g"], "edges": [["f", "g"]]})
        assert exc_info.value.name == "FatFatEdge"


class TestSubgraphs:
    """Tests for induced closures, deletion and fat attachment."""

    def test_induced_closure(self, a3tilde: HoffmanGraph) -> None:
        """Test that the closure keeps every fat neighbor of the chosen vertices."""
        H = induced_closure(a3tilde, ["0", "2"])

        assert H.slim_names == ("0", "2")
        assert H.fat_names == ("f0", "f1", "f2", "f3")
        assert H.slim_adj == (frozenset({1}), frozenset({0}))

    def test_delete_slim_drops_orphan_fats(self) -> None:
        """Test that fat vertices losing every neighbor disappear."""
        H = validate({"slim": ["x", "y"], "fat": ["f", "g"], "edges": [["x", "f"], ["y", "g"]]})

        result = delete_slim(H, ["y"])

        assert result.slim_names == ("x",)
        assert result.fat_names == ("f",)

    def test_delete_unknown(self, a3tilde: HoffmanGraph) -> None:
        """Test that deleting a fat or missing name is rejected."""
        with pytest.raises(UnknownVertex):
            delete_slim(a3tilde, ["f0"])

    def test_attach_fat(self, a3tilde: HoffmanGraph) -> None:
        """Test attaching a fresh fat vertex."""
        H = attach_fat(a3tilde, ["0", "1"])

        assert H.fat_names[-1] == "f4"
        assert H.fat_neighborhood(4) == frozenset({0, 1})

    def test_attach_fat_to_nothing(self, a3tilde: HoffmanGraph) -> None:
        """Test that a fat vertex needs a slim neighbor."""
        with pytest.raises(EmptyAttachment):
            attach_fat(a3tilde, [])

    def test_relabel(self, a3tilde: HoffmanGraph) -> None:
        """Test renaming vertices."""
        H = relabel(a3tilde, {"0": "a", "f0": "g"})

        assert H.slim_names[0] == "a"
        assert H.fat_names[0] == "g"

    def test_relabel_clash(self, a3tilde: HoffmanGraph) -> None:
        """Test that renaming onto an existing name is rejected."""
        with pytest.raises(DuplicateVertexName):
            relabel(a3tilde, {"0": "1"})


class TestPredicates:
    """Tests for the predicates function."""

    def test_fat_graph(self, a3tilde: HoffmanGraph) -> None:
        """Test labels of a fat graph."""
        report = predicates(a3tilde)

        assert report.to_dict() == {
            "is_fat": True,
            "is_slim": False,
            "slim_count": 4,
            "fat_count": 4,
        }

    def test_slim_graph(self, two_slim_no_fat: HoffmanGraph) -> None:
        """Test labels of a graph without fat vertices."""
        report = predicates(two_slim_no_fat)

        assert report.is_slim
        assert not report.is_fat


class TestIsomorphism:
    """Tests for find_isomorphism and are_isomorphic."""

    def test_relabeled_graph(self, a3tilde: HoffmanGraph) -> None:
        """Test that a renamed graph is isomorphic through a valid mapping."""
        names = {"0": "d", "1": "c", "2": "b", "3": "a", "f0": "g0"}
        other = relabel(a3tilde, names)

        mapping = find_isomorphism(a3tilde, other)

        assert mapping is not None
        image = relabel(a3tilde, mapping)
        assert {frozenset(e) for e in image.edges()} == {frozenset(e) for e in other.edges()}

    def test_non_isomorphic_pair(self) -> None:
        """Test the two graphs built by identifying fat vertices."""
        H0, H1 = family_a5()

        assert not are_isomorphic(H0, H1)
        assert not _nx_isomorphic(H0, H1)

    def test_fat_degree_matters(self) -> None:
        """Test graphs that differ only in fat neighborhoods."""
        one = validate({"slim": ["x", "y"], "fat": ["f"], "edges": [["x", "f"], ["y", "f"]]})
        two = validate(
            {"slim": ["x", "y"], "fat": ["f", "g"], "edges": [["x", "f"], ["y", "g"]]}
        )

        assert not are_isomorphic(one, two)

    def test_agrees_with_networkx(self) -> None:
        """Test agreement with networkx on the small family graphs."""
        graphs = [family_ht(1), family_ht(2), family_ht(3), *family_a5()]
        for H1 in graphs:
            for H2 in graphs:
                assert are_isomorphic(H1, H2) == _nx_isomorphic(H1, H2)


class TestHgFormat:
    """Tests for .hg parsing and formatting."""

    def test_format(self) -> None:
        """Test the canonical serialization."""
        H = validate({"slim": ["x", "y"], "fat": ["f"], "edges": [["x", "y"], ["x", "f"]]})

        assert format_hg(H) == "slim x\nslim y\nfat f\nedge f x\nedge x y\n"

    def test_parse_with_comments(self) -> None:
        """Test that comments and blank lines are ignored."""
        H = parse_hg("# header\nslim x  # the only slim vertex\n\nfat f\nedge x f\n")

        assert H.slim_names == ("x",)
        assert H.fat_names == ("f",)

    def test_parse_round_trip(self, a3tilde: HoffmanGraph) -> None:
        """Test that formatting then parsing gives the same graph."""
        assert parse_hg(format_hg(a3tilde)) == a3tilde

    def test_unknown_keyword(self) -> None:
        """Test that a bad keyword reports its line."""
        with pytest.raises(HgSyntaxError) as exc_info:
            parse_hg("slim x\nnode y\n")
        assert exc_info.value.line_number == 2

    def test_wrong_arity(self) -> None:
        """Test that an edge needs two names."""
        with pytest.raises(HgSyntaxError):
            parse_hg("slim x\nedge x\n")

    def test_invalid_name(self) -> None:
        """Test that names are restricted."""
        with pytest.raises(HgSyntaxError):
            parse_hg("slim x,y\n")

    def test_stream(self) -> None:
        """Test a stream of graphs separated by ---."""
        graphs = [family_ht(1), family_ht(2)]
        text = format_hg_stream(graphs)

        assert "---\n" in text
        assert parse_hg_stream(text) == graphs

    def test_stream_skips_empty_blocks(self) -> None:
        """Test that empty blocks produce no graph."""
        assert parse_hg_stream("---\n# nothing\n---\nslim x\n") == [parse_hg("slim x\n")]

    def test_stream_line_numbers(self) -> None:
        """Test that errors in later blocks report absolute line numbers."""
        with pytest.raises(HgSyntaxError) as exc_info:
            parse_hg_stream("slim x\n---\nslim y\nbad\n")
        assert exc_info.value.line_number == 4

    def test_load(self, a3tilde_file: Path, a3tilde: HoffmanGraph) -> None:
        """Test reading a file."""
        assert load_hg(a3tilde_file) == [a3tilde]

    def test_load_missing_file(self, temp_dir: Path) -> None:
        """Test that a missing file is a domain error."""
        with pytest.raises(FileNotFound):
            load_hg(temp_dir / "missing.hg")

    def test_load_invalid_utf8(self, temp_dir: Path) -> None:
        """Test that undecodable bytes are a syntax error on their line."""
        path = temp_dir / "binary.hg"
        path.write_bytes(b"slim x\n\xff\xfe\n")

        with pytest.raises(HgSyntaxError) as exc_info:
            load_hg(path)
        assert exc_info.value.line_number == 2
        assert "0xff" in str(exc_info.value)

    def test_decode_crlf(self) -> None:
        """Test that Windows line endings still parse."""
        assert parse_hg_stream(decode_hg(b"slim x\r\nfat f1\r\nedge x f1\r\n")) == [family_ht(1)]
