from dataclasses import dataclass


@dataclass(frozen=True)
class MultipartiteShape:
    """Parts of a recognized complete multipartite graph, with their vertex sets."""

    part_sizes: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(len(part) for part in self.parts) != self.part_sizes:
            raise ValueError("part sizes must match the vertex sets")
        if any(size <= 0 for size in self.part_sizes):
            raise ValueError("part sizes must be positive")

    @property
    def vertex_count(self) -> int:
        return sum(self.part_sizes)

    def reordered(self, target_sizes: tuple[int, ...]) -> "MultipartiteShape":
        """Parts rearranged to follow target_sizes when the multisets agree."""
        if sorted(target_sizes) != sorted(self.part_sizes):
            raise ValueError(f"part sizes {self.part_sizes} do not match {target_sizes}")
        remaining = list(self.parts)
        ordered: list[tuple[int, ...]] = []
        for size in target_sizes:
            position = next(i for i, part in enumerate(remaining) if len(part) == size)
            ordered.append(remaining.pop(position))
        return MultipartiteShape(tuple(target_sizes), tuple(ordered))
