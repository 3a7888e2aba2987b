import logging
from typing import Optional

import networkx as nx

from cocentralizer_spectra.finite_groups.domain.centralizer_family import CentralizerFamily
from cocentralizer_spectra.graphs.domain.multipartite_shape import MultipartiteShape


class CentralizerGraphBuilder:
    """Centralizer graphs, their complements and complete multipartite recognition on networkx graphs."""

    LOG_MSG_GRAPH = "Centralizer graph on %d vertices with %d edges"

    def __init__(self, logger: Optional[logging.Logger] = None) -> None:
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    def centralizer_graph(self, family: CentralizerFamily) -> nx.Graph:
        """Vertex i ~ j iff the centralizers have equal cardinality."""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(family)))
        cardinalities = family.cardinalities
        graph.add_edges_from(
            (i, j)
            for i in range(len(cardinalities))
            for j in range(i + 1, len(cardinalities))
            if cardinalities[i] == cardinalities[j]
        )
        self._logger.debug(self.LOG_MSG_GRAPH, graph.number_of_nodes(), graph.number_of_edges())
        return graph

    @staticmethod
    def complement(graph: nx.Graph) -> nx.Graph:
        return nx.complement(graph)

    @staticmethod
    def is_connected(graph: nx.Graph) -> bool:
        if graph.number_of_nodes() == 0:
            return False
        return nx.is_connected(graph)

    @staticmethod
    def recognize_complete_multipartite(graph: nx.Graph) -> Optional[MultipartiteShape]:
        """Parts are the connected components of the complement, sorted by descending size."""
        if graph.number_of_nodes() == 0:
            return None
        components = [tuple(sorted(component)) for component in nx.connected_components(nx.complement(graph))]
        for component in components:
            if graph.subgraph(component).number_of_edges():
                return None
        sizes = [len(component) for component in components]
        cross_edges = (sum(sizes) ** 2 - sum(size * size for size in sizes)) // 2
        if graph.number_of_edges() != cross_edges:
            return None
        components.sort(key=lambda component: (-len(component), component))
        return MultipartiteShape(tuple(len(component) for component in components), tuple(components))
