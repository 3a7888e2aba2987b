from dataclasses import dataclass


@dataclass(frozen=True)
class FieldGF2k:
    """GF(2^k) in polynomial basis; elements are bit patterns of degree < k."""

    k: int
    modulus: int

    @property
    def size(self) -> int:
        return 1 << self.k

    def contains(self, element: int) -> bool:
        return 0 <= element < self.size

    def modulus_text(self) -> str:
        terms: list[str] = []
        for power in range(self.k, -1, -1):
            if not (self.modulus >> power) & 1:
                continue
            if power == 0:
                terms.append("1")
            elif power == 1:
                terms.append("x")
            else:
                terms.append(f"x^{power}")
        return " + ".join(terms)
