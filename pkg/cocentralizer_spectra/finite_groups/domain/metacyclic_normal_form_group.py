from typing import Optional

import numpy as np

from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec


class MetacyclicNormalFormGroup(FiniteGroup):
    """
    Group <a, b | a^M = 1, b^J = a^s, b a b^-1 = a^r> with normal forms a^i b^j.

    Element index is j*M + i, so the first M indices are the cyclic subgroup <a>.
    Requires r^J = 1 (mod M) and s*r = s (mod M).
    """

    def __init__(
        self,
        spec: GroupSpec,
        cyclic_order: int,
        top_order: int,
        twist: int,
        top_power: int,
        generator_names: tuple[str, str] = ("a", "b"),
        cayley_table_max_order: Optional[int] = None,
    ) -> None:
        if pow(twist, top_order, cyclic_order) != 1 % cyclic_order:
            raise ValueError("twist must have order dividing the top order")
        if (top_power * twist - top_power) % cyclic_order != 0:
            raise ValueError("b^J must be fixed by conjugation")
        self._cyclic_order = cyclic_order
        self._top_order = top_order
        self._top_power = top_power % cyclic_order
        self._twist_powers = np.array([pow(twist, j, cyclic_order) for j in range(top_order)], dtype=np.int64)
        self._generator_names = generator_names
        order = cyclic_order * top_order
        indices = np.arange(order, dtype=np.int64)
        self._a_exponents = indices % cyclic_order
        self._b_exponents = indices // cyclic_order
        super().__init__(spec, indices.copy(), 0, cayley_table_max_order)

    @property
    def cyclic_order(self) -> int:
        return self._cyclic_order

    def index_of(self, a_exponent: int, b_exponent: int) -> int:
        return (b_exponent % self._top_order) * self._cyclic_order + a_exponent % self._cyclic_order

    def exponents_of(self, element: int) -> tuple[int, int]:
        return element % self._cyclic_order, element // self._cyclic_order

    def element_label(self, element: int) -> str:
        i, j = self.exponents_of(element)
        a_name, b_name = self._generator_names
        parts: list[str] = []
        if i:
            parts.append(a_name if i == 1 else f"{a_name}^{i}")
        if j:
            parts.append(b_name if j == 1 else f"{b_name}^{j}")
        return " ".join(parts) or "1"

    def _multiply(self, left: int, right: int) -> int:
        i1, j1 = self.exponents_of(left)
        i2, j2 = self.exponents_of(right)
        carry = self._top_power if j1 + j2 >= self._top_order else 0
        i = (i1 + i2 * int(self._twist_powers[j1]) + carry) % self._cyclic_order
        return self.index_of(i, j1 + j2)

    def _compute_left_products(self, element: int) -> np.ndarray:
        i1, j1 = self.exponents_of(element)
        j_sum = j1 + self._b_exponents
        carry = np.where(j_sum >= self._top_order, self._top_power, 0)
        i = (i1 + self._a_exponents * self._twist_powers[j1] + carry) % self._cyclic_order
        return (j_sum % self._top_order) * self._cyclic_order + i

    def _compute_right_products(self, element: int) -> np.ndarray:
        i2, j2 = self.exponents_of(element)
        j_sum = self._b_exponents + j2
        carry = np.where(j_sum >= self._top_order, self._top_power, 0)
        i = (self._a_exponents + i2 * self._twist_powers[self._b_exponents] + carry) % self._cyclic_order
        return (j_sum % self._top_order) * self._cyclic_order + i
