import networkx as nx
import pytest

from cocentralizer_spectra.exceptions import DisconnectedGraphError
from cocentralizer_spectra.finite_groups.domain.centralizer_family import CentralizerFamily
from cocentralizer_spectra.finite_groups.domain.element_set import ElementSet
from cocentralizer_spectra.graphs.centralizer_graphs import CentralizerGraphBuilder
from cocentralizer_spectra.graphs.distance_matrices import DistanceMatrices
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.graphs.domain.multipartite_shape import MultipartiteShape
from cocentralizer_spectra.graphs.exporters.edge_list_exporter import EdgeListExporter


def _family(cardinalities):
    sets = tuple(ElementSet(tuple(range(index, index + size))) for index, size in enumerate(cardinalities))
    return CentralizerFamily(sets, tuple(cardinalities), tuple(range(len(cardinalities))))


class TestCentralizerGraphBuilder:
    """Tests for the centralizer graph, its complement and multipartite recognition."""

    def test_centralizer_graph_joins_equal_cardinalities(self):
        graph = CentralizerGraphBuilder().centralizer_graph(_family([6, 4, 4, 4]))

        assert sorted(graph.edges) == [(1, 2), (1, 3), (2, 3)]

    def test_complement_of_triangle_plus_vertex_is_a_star(self):
        builder = CentralizerGraphBuilder()
        cocentralizer = builder.complement(builder.centralizer_graph(_family([6, 4, 4, 4])))
        shape = builder.recognize_complete_multipartite(cocentralizer)

        assert builder.is_connected(cocentralizer)
        assert shape == MultipartiteShape((3, 1), ((1, 2, 3), (0,)))

    def test_recognizes_tripartite_parts_in_descending_size(self):
        graph = nx.complete_multipartite_graph(5, 10, 6)
        shape = CentralizerGraphBuilder.recognize_complete_multipartite(graph)

        assert shape is not None
        assert shape.part_sizes == (10, 6, 5)
        assert shape.vertex_count == 21

    def test_rejects_graph_that_is_not_complete_multipartite(self):
        assert CentralizerGraphBuilder.recognize_complete_multipartite(nx.path_graph(4)) is None
        assert CentralizerGraphBuilder.recognize_complete_multipartite(nx.Graph()) is None

    def test_single_cardinality_gives_edgeless_cocentralizer(self):
        builder = CentralizerGraphBuilder()
        cocentralizer = builder.complement(builder.centralizer_graph(_family([4, 4, 4])))

        assert cocentralizer.number_of_edges() == 0
        assert not builder.is_connected(cocentralizer)

    def test_reordered_follows_target_sizes(self):
        shape = MultipartiteShape((10, 6, 5), (tuple(range(10)), tuple(range(10, 16)), tuple(range(16, 21))))
        reordered = shape.reordered((5, 10, 6))

        assert reordered.part_sizes == (5, 10, 6)
        assert reordered.parts[0] == tuple(range(16, 21))
        with pytest.raises(ValueError):
            shape.reordered((7, 7, 7))


class TestDistanceMatrices:
    """Tests for D, D^L and D^Q of small graphs."""

    @pytest.fixture
    def star(self):
        return nx.star_graph(3)

    def test_star_distance_matrix(self, star):
        distances = DistanceMatrices().distance_matrix(star)

        assert distances.rows == ((0, 1, 1, 1), (1, 0, 2, 2), (1, 2, 0, 2), (1, 2, 2, 0))
        assert DistanceMatrices.transmissions(distances) == (3, 5, 5, 5)

    def test_laplacian_and_signless_laplacian(self, star):
        matrices = DistanceMatrices()
        dl = matrices.matrix_of_kind(star, MatrixKindEnum.DL)
        dq = matrices.matrix_of_kind(star, MatrixKindEnum.DQ)

        assert dl.rows[0] == (3, -1, -1, -1)
        assert dq.rows[1] == (1, 5, 2, 2)
        assert dl.row_sums() == (0, 0, 0, 0)
        assert dl.is_symmetric() and dq.is_symmetric()

    def test_disconnected_graph_raises(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(3))
        graph.add_edge(0, 1)

        with pytest.raises(DisconnectedGraphError):
            DistanceMatrices().distance_matrix(graph)

    def test_multipartite_distances_are_one_or_two(self):
        distances = DistanceMatrices().distance_matrix(nx.complete_multipartite_graph(2, 3))

        assert {value for row in distances.rows for value in row} == {0, 1, 2}
        assert distances.trace() == 0


class TestIntMatrix:
    """Tests for the exact integer matrix value type."""

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_shifted_and_matvec(self):
        matrix = IntMatrix.from_rows([[2, 1], [1, 2]])

        assert matrix.shifted(3).rows == ((-1, 1), (1, -1))
        assert matrix.matvec((1, 1)) == (3, 3)
        with pytest.raises(ValueError):
            matrix.matvec((1, 1, 1))


class TestEdgeListExporter:
    """Tests for the edge-list export."""

    def test_export_is_one_indexed_with_header(self):
        text = EdgeListExporter.export_edge_list(nx.star_graph(2))

        assert text == "p 3 2\ne 1 2\ne 1 3\n"

    def test_write_creates_parent_directories(self, tmp_path):
        path = EdgeListExporter.write_edge_list(nx.path_graph(3), tmp_path / "graphs" / "path.txt")

        assert path.read_text(encoding="utf-8") == "p 3 2\ne 1 2\ne 2 3\n"
