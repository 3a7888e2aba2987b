from dataclasses import dataclass


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]
    tolerance: float
    sweeps: int = 0

    def __post_init__(self) -> None:
        values = tuple(sorted(float(value) for value in self.values))
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class SpectrumMatch:
    matched: bool
    residuals: tuple[float, ...]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)
