from dataclasses import dataclass
from typing import Iterable, Union

from cocentralizer_spectra.constants import POLY_VARIABLE


@dataclass(frozen=True)
class BigPoly:
    """Integer polynomial in λ, coefficients constant term first, trailing zeros stripped."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coefficients = [int(value) for value in self.coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> "BigPoly":
        return cls(tuple(coefficients))

    @classmethod
    def zero(cls) -> "BigPoly":
        return cls(())

    @classmethod
    def one(cls) -> "BigPoly":
        return cls((1,))

    @classmethod
    def constant(cls, value: int) -> "BigPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> "BigPoly":
        return cls((0,) * power + (coefficient,))

    @classmethod
    def linear_root(cls, mu: int) -> "BigPoly":
        """λ - mu."""
        return cls((-mu, 1))

    @classmethod
    def from_descending(cls, coefficients: Iterable[int]) -> "BigPoly":
        return cls(tuple(reversed(tuple(coefficients))))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, power: int) -> int:
        return self.coefficients[power] if 0 <= power < len(self.coefficients) else 0

    def evaluate(self, value: int) -> int:
        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def __add__(self, other: Union["BigPoly", int]) -> "BigPoly":
        other = _as_poly(other)
        size = max(len(self.coefficients), len(other.coefficients))
        return BigPoly(tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "BigPoly":
        return BigPoly(tuple(-value for value in self.coefficients))

    def __sub__(self, other: Union["BigPoly", int]) -> "BigPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: int) -> "BigPoly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["BigPoly", int]) -> "BigPoly":
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return BigPoly.zero()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, left in enumerate(self.coefficients):
            if left == 0:
                continue
            for j, right in enumerate(other.coefficients):
                product[i + j] += left * right
        return BigPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BigPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result, base = BigPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod_monic(self, divisor: "BigPoly") -> tuple["BigPoly", "BigPoly"]:
        """Quotient and remainder by a monic divisor; exact over the integers."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        remainder = list(self.coefficients)
        divisor_degree = divisor.degree
        if len(remainder) - 1 < divisor_degree:
            return BigPoly.zero(), self
        quotient = [0] * (len(remainder) - divisor_degree)
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + divisor_degree]
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, value in enumerate(divisor.coefficients):
                remainder[shift + i] -= factor * value
        return BigPoly(tuple(quotient)), BigPoly(tuple(remainder[:divisor_degree]))

    def to_text(self, variable: str = POLY_VARIABLE) -> str:
        if self.is_zero():
            return "0"
        pieces: list[str] = []
        for power in range(self.degree, -1, -1):
            coefficient = self.coefficients[power]
            if coefficient == 0:
                continue
            magnitude = abs(coefficient)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = variable if power == 1 else f"{variable}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}·{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if coefficient < 0 else body)
            else:
                pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()


def _as_poly(value: Union[BigPoly, int]) -> BigPoly:
    return value if isinstance(value, BigPoly) else BigPoly.constant(value)
