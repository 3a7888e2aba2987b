import random
from typing import Optional

import numpy as np

from cocentralizer_spectra.constants import ASSOCIATIVITY_FULL_CHECK_ORDER, ASSOCIATIVITY_SAMPLE_TRIPLES
from cocentralizer_spectra.finite_groups.domain.element_set import ElementSet
from cocentralizer_spectra.finite_groups.domain.finite_group import FiniteGroup


class GroupAxiomChecker:
    """Checks closure, identity, inverses and associativity of a constructed group."""

    @staticmethod
    def is_latin_square(group: FiniteGroup) -> bool:
        expected = np.arange(group.order)
        for element in range(group.order):
            if not np.array_equal(np.sort(group.left_products(element)), expected):
                return False
            if not np.array_equal(np.sort(group.right_products(element)), expected):
                return False
        return True

    @staticmethod
    def has_two_sided_identity(group: FiniteGroup) -> bool:
        identity = group.identity_index
        expected = np.arange(group.order)
        return np.array_equal(group.left_products(identity), expected) and np.array_equal(
            group.right_products(identity), expected
        )

    @staticmethod
    def has_inverses(group: FiniteGroup) -> bool:
        return all(
            group.multiply(group.inverse(element), element) == group.identity_index for element in range(group.order)
        )

    @staticmethod
    def is_associative(
        group: FiniteGroup,
        samples: int = ASSOCIATIVITY_SAMPLE_TRIPLES,
        seed: Optional[int] = 0,
    ) -> bool:
        """Full check up to the full-check order; sampled triples above it."""
        if group.order <= ASSOCIATIVITY_FULL_CHECK_ORDER:
            for a in range(group.order):
                left = group.left_products(a)
                for b in range(group.order):
                    ab = group.multiply(a, b)
                    # (ab)c versus a(bc) for every c at once
                    if not np.array_equal(group.left_products(ab), left[group.left_products(b)]):
                        return False
            return True
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (rng.randrange(group.order) for _ in range(3))
            if group.multiply(group.multiply(a, b), c) != group.multiply(a, group.multiply(b, c)):
                return False
        return True

    @staticmethod
    def is_subgroup(group: FiniteGroup, members: ElementSet) -> bool:
        allowed = np.zeros(group.order, dtype=bool)
        allowed[list(members.members)] = True
        if not allowed[group.identity_index]:
            return False
        return all(allowed[group.left_products(element)[list(members.members)]].all() for element in members)
