from collections import Counter

import numpy as np
import pytest

from cocentralizer_spectra.closed_forms.family_shapes import FamilyShapes
from cocentralizer_spectra.exceptions import InvalidGroupSpecError, NoProperCentralizersError
from cocentralizer_spectra.finite_groups.centralizers.centralizer_calculator import CentralizerCalculator
from cocentralizer_spectra.finite_groups.concretes.family_group_builder import FamilyGroupBuilder
from cocentralizer_spectra.finite_groups.concretes.metacyclic_presentation_group_builder import (
    MetacyclicPresentationGroupBuilder,
)
from cocentralizer_spectra.finite_groups.concretes.psl2_matrix_group_builder import Psl2MatrixGroupBuilder
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.finite_groups.domain.metacyclic_normal_form_group import MetacyclicNormalFormGroup
from cocentralizer_spectra.finite_groups.group_axioms import GroupAxiomChecker


@pytest.fixture
def builder():
    return FamilyGroupBuilder()


@pytest.fixture
def calculator():
    return CentralizerCalculator()


class TestGroupSpec:
    """Tests for GroupSpec parameter validation."""

    @pytest.mark.parametrize(
        "factory",
        [
            lambda: GroupSpec.q4n(1),
            lambda: GroupSpec.d2m(2),
            lambda: GroupSpec.qd2n(3),
            lambda: GroupSpec.m2mn(2, 1),
            lambda: GroupSpec.m2mn(3, 0),
            lambda: GroupSpec.psl2(0),
            lambda: GroupSpec.psl2(6),
            lambda: GroupSpec(GroupFamilyEnum.Q4N),
            lambda: GroupSpec(GroupFamilyEnum.Q4N, n=3, m=2),
        ],
    )
    def test_invalid_parameters_raise(self, factory):
        with pytest.raises(InvalidGroupSpecError):
            factory()

    @pytest.mark.parametrize(
        "spec, order",
        [
            (GroupSpec.q4n(3), 12),
            (GroupSpec.d2m(5), 10),
            (GroupSpec.qd2n(4), 16),
            (GroupSpec.m2mn(3, 2), 12),
            (GroupSpec.psl2(2), 60),
            (GroupSpec.psl2(3), 504),
        ],
    )
    def test_order(self, spec, order):
        assert spec.order == order

    def test_label_and_params(self):
        spec = GroupSpec.m2mn(3, 2)

        assert spec.params == {"m": 3, "n": 2}
        assert spec.label == "M2MN(m=3,n=2)"

    def test_family_accepts_text_value(self):
        assert GroupSpec("PSL2", k=2).family is GroupFamilyEnum.PSL2


class TestGroupBuilders:
    """Tests for the presentation and matrix group builders."""

    @pytest.mark.parametrize(
        "spec",
        [
            GroupSpec.q4n(2),
            GroupSpec.q4n(5),
            GroupSpec.d2m(4),
            GroupSpec.d2m(7),
            GroupSpec.qd2n(4),
            GroupSpec.qd2n(5),
            GroupSpec.m2mn(3, 2),
            GroupSpec.m2mn(6, 3),
            GroupSpec.psl2(1),
            GroupSpec.psl2(2),
        ],
    )
    def test_built_groups_satisfy_the_axioms(self, builder, spec):
        group = builder.build_group(spec)

        assert group.order == spec.order
        assert GroupAxiomChecker.is_latin_square(group)
        assert GroupAxiomChecker.has_two_sided_identity(group)
        assert GroupAxiomChecker.has_inverses(group)
        assert GroupAxiomChecker.is_associative(group)

    def test_sampled_associativity_for_larger_group(self, builder):
        group = builder.build_group(GroupSpec.psl2(3))

        assert group.order == 504
        assert GroupAxiomChecker.is_associative(group, samples=300, seed=7)

    def test_quaternion_relations(self, builder):
        n = 3
        group = builder.build_group(GroupSpec.q4n(n))
        assert isinstance(group, MetacyclicNormalFormGroup)
        x, y = group.index_of(1, 0), group.index_of(0, 1)

        assert group.multiply(y, y) == group.index_of(n, 0)
        assert group.multiply(group.multiply(y, x), group.inverse(y)) == group.index_of(-1, 0)
        assert group.power(x, 2 * n) == group.identity_index
        assert group.element_label(group.index_of(2, 1)) == "x^2 y"

    def test_psl2_identity_matrix(self, builder):
        group = builder.build_group(GroupSpec.psl2(2))

        assert group.matrix_of(group.identity_index) == ((1, 0), (0, 1))
        assert group.index_of_matrix(((1, 0), (0, 1))) == group.identity_index

    def test_table_and_oracle_agree(self):
        spec = GroupSpec.qd2n(5)
        with_table = MetacyclicPresentationGroupBuilder(cayley_table_max_order=1000).build_group(spec)
        without_table = MetacyclicPresentationGroupBuilder(cayley_table_max_order=None).build_group(spec)

        assert with_table.has_cayley_table
        assert not without_table.has_cayley_table
        for element in range(spec.order):
            assert np.array_equal(with_table.left_products(element), without_table.left_products(element))
            assert np.array_equal(with_table.right_products(element), without_table.right_products(element))

    def test_psl2_builder_table_and_oracle_agree(self):
        spec = GroupSpec.psl2(2)
        with_table = Psl2MatrixGroupBuilder(cayley_table_max_order=100).build_group(spec)
        without_table = Psl2MatrixGroupBuilder(cayley_table_max_order=None).build_group(spec)

        for left in range(0, 60, 7):
            for right in range(0, 60, 5):
                assert with_table.multiply(left, right) == without_table.multiply(left, right)

    def test_builder_rejects_foreign_family(self):
        with pytest.raises(InvalidGroupSpecError):
            MetacyclicPresentationGroupBuilder().build_group(GroupSpec.psl2(2))
        with pytest.raises(InvalidGroupSpecError):
            Psl2MatrixGroupBuilder().build_group(GroupSpec.q4n(3))

    def test_family_builder_without_matching_builder(self):
        only_matrices = FamilyGroupBuilder(builders=[Psl2MatrixGroupBuilder()])

        assert not only_matrices.supports(GroupFamilyEnum.Q4N)
        with pytest.raises(InvalidGroupSpecError):
            only_matrices.build_group(GroupSpec.q4n(3))


class TestCentralizerCalculator:
    """Tests for centers and deduplicated proper centralizers."""

    @pytest.mark.parametrize(
        "spec, center_size, cardinalities",
        [
            (GroupSpec.q4n(2), 2, {4: 3}),
            (GroupSpec.q4n(3), 2, {6: 1, 4: 3}),
            (GroupSpec.d2m(5), 1, {5: 1, 2: 5}),
            (GroupSpec.d2m(6), 2, {6: 1, 4: 3}),
            (GroupSpec.qd2n(4), 2, {8: 1, 4: 4}),
            (GroupSpec.m2mn(3, 2), 2, {6: 1, 4: 3}),
            (GroupSpec.psl2(1), 1, {3: 1, 2: 3}),
            (GroupSpec.psl2(2), 1, {5: 6, 4: 5, 3: 10}),
        ],
    )
    def test_centralizer_cardinalities(self, builder, calculator, spec, center_size, cardinalities):
        group = builder.build_group(spec)
        family = calculator.proper_centralizer_family(group)

        assert calculator.center(group).cardinality == center_size
        assert family.cardinality_multiset() == Counter(cardinalities)
        assert list(family.cardinalities) == sorted(family.cardinalities, reverse=True)

    @pytest.mark.parametrize(
        "spec",
        [GroupSpec.q4n(4), GroupSpec.d2m(9), GroupSpec.d2m(10), GroupSpec.qd2n(5), GroupSpec.m2mn(5, 3)],
    )
    def test_computed_cardinalities_agree_with_claims(self, builder, calculator, spec):
        family = calculator.proper_centralizer_family(builder.build_group(spec))

        assert family.cardinality_multiset() == FamilyShapes.claimed_centralizer_cardinalities(spec)

    def test_centralizers_are_subgroups_containing_the_center(self, builder, calculator):
        group = builder.build_group(GroupSpec.psl2(2))
        center = calculator.center(group)
        family = calculator.proper_centralizer_family(group)

        for centralizer, representative in zip(family.centralizers, family.representatives):
            assert GroupAxiomChecker.is_subgroup(group, centralizer)
            assert center.issubset(centralizer)
            assert representative in centralizer
            assert calculator.centralizer(group, representative) == centralizer

    def test_abelian_group_has_no_proper_centralizers(self, calculator):
        group = MetacyclicNormalFormGroup(GroupSpec.d2m(3), cyclic_order=3, top_order=2, twist=1, top_power=0)

        with pytest.raises(NoProperCentralizersError):
            calculator.proper_centralizer_family(group)
