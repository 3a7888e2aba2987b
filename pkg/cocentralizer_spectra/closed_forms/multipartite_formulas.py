from typing import Sequence

from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly


class MultipartiteFormulas:
    @staticmethod
    def multipartite_distance_charpoly(parts: Sequence[int]) -> BigPoly:
        """
        Distance characteristic polynomial of K_{n_1,...,n_k}:

            (λ+2)^(n-k) · [Π(λ - n_i + 2) - Σ n_i Π_{j≠i}(λ - n_j + 2)]
        """
        if len(parts) < 2:
            raise ValueError("a complete multipartite graph needs at least 2 parts")
        if any(size <= 0 for size in parts):
            raise ValueError("part sizes must be positive")
        factors = [BigPoly.linear_root(size - 2) for size in parts]
        product = BigPoly.one()
        for factor in factors:
            product = product * factor
        correction = BigPoly.zero()
        for i, size in enumerate(parts):
            others = BigPoly.constant(size)
            for j, factor in enumerate(factors):
                if j != i:
                    others = others * factor
            correction = correction + others
        return BigPoly.linear_root(-2) ** (sum(parts) - len(parts)) * (product - correction)
