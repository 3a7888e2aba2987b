from typing import Sequence


class MultipartiteEigenvectors:
    """Explicit integer eigenvectors of D^L for a complete multipartite graph on N vertices."""

    @staticmethod
    def dl_eigenvectors(parts: Sequence[Sequence[int]]) -> list[tuple[int, tuple[int, ...]]]:
        """
        (eigenvalue, vector) pairs, linearly independent:

          all-ones                              -> 0
          e_u - e_v for u, v in one part P_i    -> N + |P_i|
          |P_j|·1_{P_i} - |P_i|·1_{P_j}         -> N
        """
        total = sum(len(part) for part in parts)
        pairs: list[tuple[int, tuple[int, ...]]] = [(0, (1,) * total)]
        for part in parts:
            anchor = part[0]
            for vertex in part[1:]:
                vector = [0] * total
                vector[anchor] = 1
                vector[vertex] = -1
                pairs.append((total + len(part), tuple(vector)))
        for left, right in zip(parts, parts[1:]):
            vector = [0] * total
            for vertex in left:
                vector[vertex] = len(right)
            for vertex in right:
                vector[vertex] = -len(left)
            pairs.append((total, tuple(vector)))
        return pairs
