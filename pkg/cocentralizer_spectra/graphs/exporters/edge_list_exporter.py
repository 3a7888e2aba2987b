from pathlib import Path

import networkx as nx


class EdgeListExporter:
    """Edge-list text: header "p <n> <m>" then one "e u v" line per edge, vertices 1-indexed."""

    @staticmethod
    def export_edge_list(graph: nx.Graph) -> str:
        index = {vertex: position + 1 for position, vertex in enumerate(sorted(graph.nodes))}
        edges = sorted(tuple(sorted((index[u], index[v]))) for u, v in graph.edges)
        lines = [f"p {graph.number_of_nodes()} {graph.number_of_edges()}"]
        lines.extend(f"e {u} {v}" for u, v in edges)
        return "\n".join(lines) + "\n"

    @staticmethod
    def write_edge_list(graph: nx.Graph, path: Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(EdgeListExporter.export_edge_list(graph), encoding="utf-8")
        return path
