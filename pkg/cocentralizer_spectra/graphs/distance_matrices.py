import logging
from typing import Optional

import networkx as nx

from cocentralizer_spectra.exceptions import DisconnectedGraphError
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum


class DistanceMatrices:
    """Distance matrix D, transmissions Tr, D^L = Tr - D and D^Q = Tr + D over vertices in sorted order."""

    ERROR_MSG_DISCONNECTED = "Distances are undefined on a disconnected graph (%d vertices, %d components)"

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def distance_matrix(self, graph: nx.Graph) -> IntMatrix:
        vertices = sorted(graph.nodes)
        if not vertices or not nx.is_connected(graph):
            components = nx.number_connected_components(graph) if vertices else 0
            self._logger.error(self.ERROR_MSG_DISCONNECTED, len(vertices), components)
            raise DisconnectedGraphError(self.ERROR_MSG_DISCONNECTED % (len(vertices), components))
        lengths = dict(nx.all_pairs_shortest_path_length(graph))
        return IntMatrix.from_rows([[lengths[u][v] for v in vertices] for u in vertices])

    @staticmethod
    def transmissions(distances: IntMatrix) -> tuple[int, ...]:
        return distances.row_sums()

    @staticmethod
    def dl_matrix(distances: IntMatrix) -> IntMatrix:
        return DistanceMatrices._with_transmission_diagonal(distances, sign=-1)

    @staticmethod
    def dq_matrix(distances: IntMatrix) -> IntMatrix:
        return DistanceMatrices._with_transmission_diagonal(distances, sign=1)

    def matrix_of_kind(self, graph: nx.Graph, kind: MatrixKindEnum) -> IntMatrix:
        kind = MatrixKindEnum(kind)
        distances = self.distance_matrix(graph)
        if kind is MatrixKindEnum.D:
            return distances
        if kind is MatrixKindEnum.DL:
            return self.dl_matrix(distances)
        return self.dq_matrix(distances)

    @staticmethod
    def _with_transmission_diagonal(distances: IntMatrix, sign: int) -> IntMatrix:
        transmission = distances.row_sums()
        return IntMatrix.from_rows(
            [
                [transmission[i] if i == j else sign * value for j, value in enumerate(row)]
                for i, row in enumerate(distances.rows)
            ]
        )
