from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class StarShape:
    leaves: int

    @property
    def parts(self) -> tuple[int, ...]:
        return 1, self.leaves

    @property
    def vertex_count(self) -> int:
        return self.leaves + 1

    def to_text(self) -> str:
        return f"K_{{1,{self.leaves}}}"


@dataclass(frozen=True)
class TripartiteShape:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError("tripartite part sizes must be positive")

    @property
    def parts(self) -> tuple[int, ...]:
        return self.a, self.b, self.c

    @property
    def vertex_count(self) -> int:
        return self.a + self.b + self.c

    def to_text(self) -> str:
        return f"K_{{{self.a},{self.b},{self.c}}}"


@dataclass(frozen=True)
class MultipartiteOtherShape:
    """A complete multipartite graph that is neither a star nor tripartite."""

    part_sizes: tuple[int, ...]

    @property
    def parts(self) -> tuple[int, ...]:
        return self.part_sizes

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    def to_text(self) -> str:
        return "K_{" + ",".join(str(size) for size in self.part_sizes) + "}"


@dataclass(frozen=True)
class DegenerateShape:
    reason: str

    @property
    def parts(self) -> tuple[int, ...]:
        return ()

    def to_text(self) -> str:
        return f"Degenerate({self.reason})"


GraphShape = Union[StarShape, TripartiteShape, MultipartiteOtherShape, DegenerateShape]
