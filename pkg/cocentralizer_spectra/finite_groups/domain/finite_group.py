from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec


class FiniteGroup(ABC):
    """
    A finite group as canonical element codes plus a multiplication oracle.

    Elements are addressed by index 0..order-1. Subclasses provide the product of one element
    with every element on either side as a vectorized oracle; a Cayley table is materialized
    only when the caller supplies a size limit the order fits under.
    """

    def __init__(
        self,
        spec: GroupSpec,
        codes: np.ndarray,
        identity_index: int,
        cayley_table_max_order: Optional[int] = None,
    ) -> None:
        self._spec = spec
        self._codes = codes
        self._codes.setflags(write=False)
        self._identity_index = identity_index
        self._table: Optional[np.ndarray] = None
        if cayley_table_max_order is not None and self.order <= cayley_table_max_order:
            table = np.vstack([self._compute_left_products(index) for index in range(self.order)])
            table.setflags(write=False)
            self._table = table

    @property
    def spec(self) -> GroupSpec:
        return self._spec

    @property
    def order(self) -> int:
        return int(self._codes.shape[0])

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(int(code) for code in self._codes)

    @property
    def identity_index(self) -> int:
        return self._identity_index

    @property
    def has_cayley_table(self) -> bool:
        return self._table is not None

    def multiply(self, left: int, right: int) -> int:
        if self._table is not None:
            return int(self._table[left, right])
        return self._multiply(left, right)

    def left_products(self, element: int) -> np.ndarray:
        """Indices of element*h for every h."""
        if self._table is not None:
            return self._table[element]
        return self._compute_left_products(element)

    def right_products(self, element: int) -> np.ndarray:
        """Indices of h*element for every h."""
        if self._table is not None:
            return self._table[:, element]
        return self._compute_right_products(element)

    def commuting_mask(self, element: int) -> np.ndarray:
        return self.left_products(element) == self.right_products(element)

    def inverse(self, element: int) -> int:
        return int(np.flatnonzero(self.left_products(element) == self._identity_index)[0])

    def power(self, element: int, exponent: int) -> int:
        result = self._identity_index
        for _ in range(exponent):
            result = self.multiply(result, element)
        return result

    def index_of_code(self, code: int) -> int:
        matches = np.flatnonzero(self._codes == code)
        if matches.size == 0:
            raise KeyError(code)
        return int(matches[0])

    @abstractmethod
    def element_label(self, element: int) -> str:
        pass

    @abstractmethod
    def _multiply(self, left: int, right: int) -> int:
        pass

    @abstractmethod
    def _compute_left_products(self, element: int) -> np.ndarray:
        pass

    @abstractmethod
    def _compute_right_products(self, element: int) -> np.ndarray:
        pass
