from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of exact integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(value) for value in row) for row in self.rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("IntMatrix must be square")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, dimension: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(dimension)) for i in range(dimension)))

    @classmethod
    def zeros(cls, dimension: int) -> "IntMatrix":
        return cls(tuple((0,) * dimension for _ in range(dimension)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def entry(self, row: int, column: int) -> int:
        return self.rows[row][column]

    def is_symmetric(self) -> bool:
        n = self.dimension
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i + 1, n))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dimension))

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.dimension))

    def shifted(self, mu: int) -> "IntMatrix":
        """M - mu*I."""
        return IntMatrix(
            tuple(tuple(value - mu if i == j else value for j, value in enumerate(row)) for i, row in enumerate(self.rows))
        )

    def matvec(self, vector: Sequence[int]) -> tuple[int, ...]:
        if len(vector) != self.dimension:
            raise ValueError("vector length must equal the matrix dimension")
        return tuple(sum(value * component for value, component in zip(row, vector)) for row in self.rows)

    def frobenius_norm(self) -> float:
        return float(np.sqrt(sum(value * value for row in self.rows for value in row)))

    def to_numpy(self, dtype: type = float) -> np.ndarray:
        return np.array(self.rows, dtype=dtype).reshape(self.dimension, self.dimension)
