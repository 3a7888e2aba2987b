import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sympy import factorint

from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exceptions import MalformedSpectrumError


@dataclass(frozen=True)
class SurdValue:
    """
    The conjugate pair (p ± √d)/q.

    Construct through `normalized` to get the unique form: the square part of d, p and q share
    no common factor and q > 0.
    """

    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("SurdValue requires d >= 0")
        if self.q <= 0:
            raise ValueError("SurdValue requires q > 0")

    @classmethod
    def normalized(cls, p: int, d: int, q: int) -> "SurdValue":
        if q == 0:
            raise ValueError("SurdValue requires q != 0")
        if d < 0:
            raise ValueError("SurdValue requires d >= 0")
        if q < 0:
            p, q = -p, -q
        square_root, square_free = _split_square(d)
        common = math.gcd(math.gcd(p, square_root), q)
        if common > 1:
            p //= common
            square_root //= common
            q //= common
        return cls(p=p, d=square_root * square_root * square_free, q=q)

    @property
    def is_rational(self) -> bool:
        return math.isqrt(self.d) ** 2 == self.d

    def rational_roots(self) -> Optional[tuple[Fraction, Fraction]]:
        if not self.is_rational:
            return None
        root = math.isqrt(self.d)
        return Fraction(self.p - root, self.q), Fraction(self.p + root, self.q)

    def numeric_values(self) -> tuple[float, float]:
        root = math.sqrt(self.d)
        return (self.p - root) / self.q, (self.p + root) / self.q

    def quadratic(self) -> BigPoly:
        """λ² - (2p/q)λ + (p² - d)/q², which must have integer coefficients."""
        linear, linear_remainder = divmod(2 * self.p, self.q)
        constant, constant_remainder = divmod(self.p * self.p - self.d, self.q * self.q)
        if linear_remainder or constant_remainder:
            raise MalformedSpectrumError(f"{self.to_text()} is not a root pair of a monic integer quadratic")
        return BigPoly((constant, -linear, 1))

    def to_text(self) -> str:
        body = f"{self.p} ± √{self.d}"
        return body if self.q == 1 else f"({body})/{self.q}"

    def __str__(self) -> str:
        return self.to_text()


def _split_square(value: int) -> tuple[int, int]:
    """value = root² · square_free."""
    if value == 0:
        return 0, 1
    root, square_free = 1, 1
    for prime, exponent in factorint(value).items():
        root *= prime ** (exponent // 2)
        if exponent % 2:
            square_free *= prime
    return root, square_free
