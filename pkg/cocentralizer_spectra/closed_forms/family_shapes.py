from collections import Counter

from cocentralizer_spectra.closed_forms.domain.graph_shape import (
    DegenerateShape,
    GraphShape,
    StarShape,
    TripartiteShape,
)
from cocentralizer_spectra.exceptions import DegenerateSpecError
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec

REASON_SINGLE_CARDINALITY = "all centralizer cardinalities equal %d; co-centralizer graph is edgeless"
REASON_PSL2_DEGREE = "PSL(2,2^k) closed forms apply only for k >= 2"


class FamilyShapes:
    """Claimed co-centralizer shapes and centralizer cardinalities per family."""

    @staticmethod
    def family_cocentralizer_shape(spec: GroupSpec) -> GraphShape:
        family = spec.family
        if family is GroupFamilyEnum.Q4N:
            if spec.n == 2:
                return DegenerateShape(REASON_SINGLE_CARDINALITY % 4)
            return StarShape(spec.n)
        if family in (GroupFamilyEnum.D2M, GroupFamilyEnum.M2MN):
            m = spec.m
            if m == 4:
                return DegenerateShape(REASON_SINGLE_CARDINALITY % FamilyShapes._m_four_cardinality(spec))
            return StarShape(m // 2 if m % 2 == 0 else m)
        if family is GroupFamilyEnum.QD2N:
            return StarShape(1 << (spec.n - 2))
        if spec.k < 2:
            return DegenerateShape(REASON_PSL2_DEGREE)
        q = 1 << spec.k
        return TripartiteShape(q + 1, (q // 2) * (q + 1), (q // 2) * (q - 1))

    @staticmethod
    def claimed_centralizer_cardinalities(spec: GroupSpec) -> Counter:
        """Cardinality -> number of distinct proper centralizers, as the families are described."""
        claim: Counter = Counter()
        family = spec.family
        if family is GroupFamilyEnum.Q4N:
            claim[2 * spec.n] += 1
            claim[4] += spec.n
        elif family is GroupFamilyEnum.D2M:
            m = spec.m
            claim[m] += 1
            if m % 2:
                claim[2] += m
            else:
                claim[4] += m // 2
        elif family is GroupFamilyEnum.QD2N:
            claim[1 << (spec.n - 1)] += 1
            claim[4] += 1 << (spec.n - 2)
        elif family is GroupFamilyEnum.M2MN:
            m, n = spec.m, spec.n
            claim[m * n] += 1
            if m % 2:
                claim[2 * n] += m
            else:
                claim[4 * n] += m // 2
        else:
            if spec.k < 2:
                raise DegenerateSpecError(REASON_PSL2_DEGREE)
            q = 1 << spec.k
            claim[q] += q + 1
            claim[q - 1] += (q // 2) * (q + 1)
            claim[q + 1] += (q // 2) * (q - 1)
        return claim

    @staticmethod
    def _m_four_cardinality(spec: GroupSpec) -> int:
        return 4 if spec.family is GroupFamilyEnum.D2M else 4 * spec.n
