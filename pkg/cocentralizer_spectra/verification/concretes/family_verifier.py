import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx

from cocentralizer_spectra.closed_forms.domain.dq_variant_enum import DqVariantEnum
from cocentralizer_spectra.closed_forms.domain.eigenvalue_expr import IntEigenvalue
from cocentralizer_spectra.closed_forms.domain.graph_shape import (
    DegenerateShape,
    GraphShape,
    MultipartiteOtherShape,
    StarShape,
    TripartiteShape,
)
from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.closed_forms.family_shapes import REASON_SINGLE_CARDINALITY, FamilyShapes
from cocentralizer_spectra.closed_forms.family_spectrum_claims import FamilySpectrumClaims
from cocentralizer_spectra.closed_forms.multipartite_eigenvectors import MultipartiteEigenvectors
from cocentralizer_spectra.closed_forms.multipartite_formulas import MultipartiteFormulas
from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.constants import (
    DEFAULT_EXACT_DIMENSION_CAP,
    DEFAULT_MATCH_TOLERANCE,
    DEFAULT_SWEEP_TOLERANCE,
)
from cocentralizer_spectra.exact_linear.domain.big_poly import BigPoly
from cocentralizer_spectra.exact_linear.exact_linear_algebra import ExactLinearAlgebra
from cocentralizer_spectra.exact_linear.polynomial_roots import PolynomialRoots
from cocentralizer_spectra.exact_linear.spectrum_polynomials import SpectrumPolynomials
from cocentralizer_spectra.exceptions import (
    CocentralizerSpectraError,
    DegenerateSpecError,
    EigenSolverDidNotConvergeError,
    NoProperCentralizersError,
)
from cocentralizer_spectra.finite_groups.centralizers.centralizer_calculator import CentralizerCalculator
from cocentralizer_spectra.finite_groups.concretes.family_group_builder import FamilyGroupBuilder
from cocentralizer_spectra.finite_groups.concretes.metacyclic_presentation_group_builder import (
    MetacyclicPresentationGroupBuilder,
)
from cocentralizer_spectra.finite_groups.concretes.psl2_matrix_group_builder import Psl2MatrixGroupBuilder
from cocentralizer_spectra.finite_groups.domain.centralizer_family import CentralizerFamily
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.finite_groups.interfaces.group_builder_interface import IGroupBuilder
from cocentralizer_spectra.graphs.centralizer_graphs import CentralizerGraphBuilder
from cocentralizer_spectra.graphs.distance_matrices import DistanceMatrices
from cocentralizer_spectra.graphs.domain.int_matrix import IntMatrix
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.graphs.domain.multipartite_shape import MultipartiteShape
from cocentralizer_spectra.numeric_eig.domain.numeric_spectrum import NumericSpectrum
from cocentralizer_spectra.numeric_eig.jacobi_eigen_solver import JacobiEigenSolver
from cocentralizer_spectra.numeric_eig.spectrum_matcher import SpectrumMatcher
from cocentralizer_spectra.verification.domain.outcome_enum import OutcomeEnum
from cocentralizer_spectra.verification.domain.verification_report import (
    ClaimCheckReport,
    MismatchDetail,
    VariantOutcome,
    VerificationReport,
)
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier

LEMMA1_MIN_VERTEX_CAP = 40
EXACT_PATH_CHAR_POLY = "char_poly"
EXACT_PATH_NULLITY = "nullity"

REASON_DISCONNECTED = "co-centralizer graph is disconnected"
REASON_ABELIAN = "group is abelian; no proper centralizers"


@dataclass(frozen=True)
class CocentralizerStructure:
    """Centralizer family and co-centralizer graph of one group, or why there is no usable graph."""

    family: Optional[CentralizerFamily]
    graph: Optional[nx.Graph]
    multipartite: Optional[MultipartiteShape]
    degenerate_reason: Optional[str] = None


@dataclass(frozen=True)
class _VariantResult:
    variant: DqVariantEnum
    claimed: SpectrumSpec
    outcome: OutcomeEnum
    mismatch: Optional[MismatchDetail]
    residual: Optional[float]
    notes: tuple[str, ...]


class FamilyVerifier(IFamilyVerifier):
    """
    Runs group -> centralizers -> co-centralizer graph -> matrix -> spectrum for one family instance and
    compares the result with the family's closed forms, exactly when the dimension allows and numerically always.
    """

    LOG_MSG_VERIFYING = "Verifying %s %s"
    LOG_MSG_OUTCOME = "%s %s: %s"
    LOG_MSG_DEGENERATE = "%s is degenerate: %s"
    ERROR_MSG_LEMMA1_PARTS = "verify_lemma1 needs at least 2 positive parts with total <= %d (got %s)"

    def __init__(
        self,
        group_builder: Optional[IGroupBuilder] = None,
        centralizer_calculator: Optional[CentralizerCalculator] = None,
        graph_builder: Optional[CentralizerGraphBuilder] = None,
        distance_matrices: Optional[DistanceMatrices] = None,
        exact_linear_algebra: Optional[ExactLinearAlgebra] = None,
        polynomial_roots: Optional[PolynomialRoots] = None,
        eigen_solver: Optional[JacobiEigenSolver] = None,
        spectrum_matcher: Optional[SpectrumMatcher] = None,
        match_tolerance: float = DEFAULT_MATCH_TOLERANCE,
        sweep_tolerance: float = DEFAULT_SWEEP_TOLERANCE,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._group_builder: IGroupBuilder = group_builder or FamilyGroupBuilder()
        self._centralizer_calculator = centralizer_calculator or CentralizerCalculator()
        self._graph_builder = graph_builder or CentralizerGraphBuilder()
        self._distance_matrices = distance_matrices or DistanceMatrices()
        self._exact = exact_linear_algebra or ExactLinearAlgebra(DEFAULT_EXACT_DIMENSION_CAP)
        self._lemma1_exact = ExactLinearAlgebra(max(LEMMA1_MIN_VERTEX_CAP, self._exact.exact_dimension_cap))
        self._roots = polynomial_roots or PolynomialRoots()
        self._eigen_solver = eigen_solver or JacobiEigenSolver()
        self._matcher = spectrum_matcher or SpectrumMatcher()
        self._match_tolerance = match_tolerance
        self._sweep_tolerance = sweep_tolerance
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)
        self._structures: dict[GroupSpec, CocentralizerStructure] = {}

    @classmethod
    def from_settings(cls, settings: VerificationSettings, logger: Optional[logging.Logger] = None) -> "FamilyVerifier":
        table_cap = settings.cayley_table_max_order
        return cls(
            group_builder=FamilyGroupBuilder(
                (MetacyclicPresentationGroupBuilder(table_cap), Psl2MatrixGroupBuilder(table_cap))
            ),
            exact_linear_algebra=ExactLinearAlgebra(settings.exact_dimension_cap),
            match_tolerance=settings.match_tolerance,
            sweep_tolerance=settings.sweep_tolerance,
            logger=logger,
        )

    @property
    def exact_dimension_cap(self) -> int:
        return self._exact.exact_dimension_cap

    def cocentralizer_structure(self, spec: GroupSpec) -> CocentralizerStructure:
        """Builds (once per spec) the centralizer family and the co-centralizer graph."""
        cached = self._structures.get(spec)
        if cached is not None:
            return cached
        group = self._group_builder.build_group(spec)
        try:
            family = self._centralizer_calculator.proper_centralizer_family(group)
        except NoProperCentralizersError:
            structure = CocentralizerStructure(None, None, None, REASON_ABELIAN)
        else:
            if family.has_single_cardinality():
                reason = REASON_SINGLE_CARDINALITY % family.cardinalities[0]
                structure = CocentralizerStructure(family, None, None, reason)
            else:
                graph = self._graph_builder.complement(self._graph_builder.centralizer_graph(family))
                if not self._graph_builder.is_connected(graph):
                    structure = CocentralizerStructure(family, graph, None, REASON_DISCONNECTED)
                else:
                    multipartite = self._graph_builder.recognize_complete_multipartite(graph)
                    structure = CocentralizerStructure(family, graph, multipartite)
        self._structures[spec] = structure
        return structure

    def verify_family(self, spec: GroupSpec, kind: MatrixKindEnum) -> VerificationReport:
        kind = MatrixKindEnum(kind)
        self._logger.info(self.LOG_MSG_VERIFYING, spec.label, kind.value)
        structure = self.cocentralizer_structure(spec)
        claimed_shape = FamilyShapes.family_cocentralizer_shape(spec)

        if structure.degenerate_reason is not None:
            self._logger.info(self.LOG_MSG_DEGENERATE, spec.label, structure.degenerate_reason)
            return VerificationReport(
                spec=spec,
                kind=kind,
                shape=DegenerateShape(structure.degenerate_reason),
                outcome=OutcomeEnum.DEGENERATE,
                claimed_shape=claimed_shape,
                degenerate_reason=structure.degenerate_reason,
            )

        shape = self._graph_shape(structure.multipartite, claimed_shape)
        if isinstance(claimed_shape, DegenerateShape):
            self._logger.info(self.LOG_MSG_DEGENERATE, spec.label, claimed_shape.reason)
            return VerificationReport(
                spec=spec,
                kind=kind,
                shape=shape,
                outcome=OutcomeEnum.DEGENERATE,
                claimed_shape=claimed_shape,
                degenerate_reason=claimed_shape.reason,
                notes=(f"computed co-centralizer graph {shape.to_text()}",),
            )

        if sorted(shape.parts) != sorted(claimed_shape.parts):
            mismatch = MismatchDetail(
                factor=f"shape {claimed_shape.to_text()}",
                computed_multiplicity=0,
                claimed_multiplicity=1,
                description=f"computed {shape.to_text()}",
            )
            self._logger.info(self.LOG_MSG_OUTCOME, spec.label, kind.value, mismatch.to_text())
            return VerificationReport(
                spec=spec,
                kind=kind,
                shape=shape,
                outcome=OutcomeEnum.MISMATCH,
                claimed_shape=claimed_shape,
                mismatch=mismatch,
            )

        assert structure.graph is not None
        matrix = self._distance_matrices.matrix_of_kind(structure.graph, kind)
        report = self._compare_spectra(spec, kind, matrix, shape, claimed_shape)
        self._logger.info(self.LOG_MSG_OUTCOME, spec.label, kind.value, report.outcome.value)
        return report

    def verify_lemma1(self, parts: Sequence[int]) -> bool:
        parts = [int(size) for size in parts]
        cap = self._lemma1_exact.exact_dimension_cap
        if len(parts) < 2 or any(size <= 0 for size in parts) or sum(parts) > cap:
            raise ValueError(self.ERROR_MSG_LEMMA1_PARTS % (cap, parts))
        graph = nx.complete_multipartite_graph(*parts)
        computed = self._lemma1_exact.char_poly(self._distance_matrices.distance_matrix(graph))
        return computed == MultipartiteFormulas.multipartite_distance_charpoly(parts)

    def verify_centralizer_claims(self, spec: GroupSpec) -> ClaimCheckReport:
        structure = self.cocentralizer_structure(spec)
        computed = structure.family.cardinality_multiset() if structure.family is not None else Counter()
        computed_text = format_cardinalities(computed)
        try:
            claimed = FamilyShapes.claimed_centralizer_cardinalities(spec)
        except DegenerateSpecError as ex:
            return ClaimCheckReport(
                spec, "centralizer cardinalities", OutcomeEnum.DEGENERATE, computed_text, "", (str(ex),)
            )
        outcome = OutcomeEnum.EXACT_MATCH if computed == claimed else OutcomeEnum.MISMATCH
        return ClaimCheckReport(
            spec, "centralizer cardinalities", outcome, computed_text, format_cardinalities(claimed)
        )

    def verify_eigenvectors(self, spec: GroupSpec) -> ClaimCheckReport:
        """Checks D^L x = μx for the explicit part vectors and their counts against the claimed D^L spectrum."""
        claim = "distance Laplacian eigenvectors"
        structure = self.cocentralizer_structure(spec)
        if structure.degenerate_reason is not None or structure.multipartite is None or structure.graph is None:
            reason = structure.degenerate_reason or "co-centralizer graph is not complete multipartite"
            return ClaimCheckReport(spec, claim, OutcomeEnum.DEGENERATE, "", "", (reason,))
        try:
            claimed = FamilySpectrumClaims.claimed_spectrum(spec, MatrixKindEnum.DL)
        except DegenerateSpecError as ex:
            return ClaimCheckReport(spec, claim, OutcomeEnum.DEGENERATE, "", "", (str(ex),))

        matrix = self._distance_matrices.matrix_of_kind(structure.graph, MatrixKindEnum.DL)
        notes: list[str] = []
        found: Counter = Counter()
        for mu, vector in MultipartiteEigenvectors.dl_eigenvectors(structure.multipartite.parts):
            if matrix.matvec(vector) != tuple(mu * value for value in vector):
                notes.append(f"vector for {mu} fails D^L x = {mu} x")
            else:
                found[mu] += 1
        claimed_counts: Counter = Counter()
        for expression, multiplicity in claimed.entries:
            if isinstance(expression, IntEigenvalue):
                claimed_counts[expression.value] += multiplicity
        outcome = OutcomeEnum.EXACT_MATCH if not notes and found == claimed_counts else OutcomeEnum.MISMATCH
        return ClaimCheckReport(
            spec, claim, outcome, format_multiplicities(found), format_multiplicities(claimed_counts), tuple(notes)
        )

    def cocentralizer_graph(self, spec: GroupSpec) -> Optional[nx.Graph]:
        return self.cocentralizer_structure(spec).graph

    def computed_spectrum(self, spec: GroupSpec, kind: MatrixKindEnum) -> Optional[SpectrumSpec]:
        """Exact spectrum of the co-centralizer matrix, or None when degenerate or above the exact cap."""
        structure = self.cocentralizer_structure(spec)
        if structure.degenerate_reason is not None or structure.graph is None:
            return None
        if structure.graph.number_of_nodes() > self._exact.exact_dimension_cap:
            return None
        matrix = self._distance_matrices.matrix_of_kind(structure.graph, MatrixKindEnum(kind))
        return self._roots.exact_spectrum(self._exact.char_poly(matrix), source=f"{spec.label} {kind.value}")

    def _compare_spectra(
        self,
        spec: GroupSpec,
        kind: MatrixKindEnum,
        matrix: IntMatrix,
        shape: GraphShape,
        claimed_shape: GraphShape,
    ) -> VerificationReport:
        exact_path = EXACT_PATH_CHAR_POLY if matrix.dimension <= self._exact.exact_dimension_cap else EXACT_PATH_NULLITY
        char_poly = self._exact.char_poly(matrix) if exact_path == EXACT_PATH_CHAR_POLY else None

        numeric: Optional[NumericSpectrum] = None
        numeric_failure: Optional[str] = None
        try:
            numeric = self._eigen_solver.jacobi_spectrum(matrix, self._sweep_tolerance)
        except EigenSolverDidNotConvergeError as ex:
            numeric_failure = str(ex)

        variants = (
            (DqVariantEnum.STATEMENT_TEXT, DqVariantEnum.PROOF_BLOCKS)
            if spec.family is GroupFamilyEnum.PSL2 and kind is MatrixKindEnum.DQ
            else (DqVariantEnum.PROOF_BLOCKS,)
        )
        results = [
            self._compare_variant(spec, kind, variant, matrix, char_poly, numeric, numeric_failure)
            for variant in variants
        ]
        chosen = next((result for result in results if result.outcome is OutcomeEnum.EXACT_MATCH), results[-1])

        notes = list(chosen.notes)
        if len(results) > 1:
            for result in results:
                detail = f" ({result.mismatch.to_text()})" if result.mismatch else ""
                notes.append(f"variant {result.variant.value}: {result.outcome.value}{detail}")

        computed_spectrum = None
        if char_poly is not None:
            try:
                computed_spectrum = self._roots.exact_spectrum(char_poly, source=f"{spec.label} {kind.value}")
            except CocentralizerSpectraError as ex:
                notes.append(f"exact spectrum extraction failed: {ex}")

        return VerificationReport(
            spec=spec,
            kind=kind,
            shape=shape,
            outcome=chosen.outcome,
            claimed_shape=claimed_shape,
            mismatch=chosen.mismatch,
            computed_charpoly=char_poly,
            computed_spectrum=computed_spectrum,
            claimed_spectrum=chosen.claimed,
            numeric_residual=chosen.residual,
            numeric_values=numeric.values if numeric is not None else (),
            exact_path=exact_path,
            variants=tuple(VariantOutcome(result.variant, result.outcome, result.mismatch) for result in results)
            if len(results) > 1
            else (),
            notes=tuple(notes),
        )

    def _compare_variant(
        self,
        spec: GroupSpec,
        kind: MatrixKindEnum,
        variant: DqVariantEnum,
        matrix: IntMatrix,
        char_poly: Optional[BigPoly],
        numeric: Optional[NumericSpectrum],
        numeric_failure: Optional[str],
    ) -> _VariantResult:
        claimed = FamilySpectrumClaims.claimed_spectrum(spec, kind, variant)
        notes: list[str] = []

        if claimed.root_count != matrix.dimension:
            mismatch = MismatchDetail(
                factor="root count",
                computed_multiplicity=matrix.dimension,
                claimed_multiplicity=claimed.root_count,
                description="claimed multiplicities do not sum to the vertex count",
            )
            return _VariantResult(variant, claimed, OutcomeEnum.MISMATCH, mismatch, None, ())

        if char_poly is not None:
            mismatch = self._first_differing_factor(char_poly, claimed)
        else:
            mismatch = self._first_nullity_difference(matrix, claimed)
            int_roots = sum(
                multiplicity for expression, multiplicity in claimed.entries if isinstance(expression, IntEigenvalue)
            )
            notes.append(
                f"integer eigenvalues checked by nullity ({int_roots} of {matrix.dimension}); "
                f"remaining {matrix.dimension - int_roots} checked numerically"
            )

        residual: Optional[float] = None
        if numeric is not None:
            residual = self._matcher.match_spectra(numeric, claimed, self._match_tolerance).max_residual
        else:
            notes.append(f"numeric cross-check unavailable: {numeric_failure}")

        if mismatch is None and (residual is None or residual > self._match_tolerance):
            mismatch = MismatchDetail(
                factor="numeric cross-check",
                computed_multiplicity=0,
                claimed_multiplicity=0,
                description=f"max relative residual {residual} exceeds {self._match_tolerance}",
            )
        outcome = OutcomeEnum.EXACT_MATCH if mismatch is None else OutcomeEnum.MISMATCH
        return _VariantResult(variant, claimed, outcome, mismatch, residual, tuple(notes))

    def _first_differing_factor(self, char_poly: BigPoly, claimed: SpectrumSpec) -> Optional[MismatchDetail]:
        if SpectrumPolynomials.spectrum_to_poly(claimed) == char_poly:
            return None
        remaining = char_poly
        for expression, multiplicity in claimed.entries:
            remaining, found = self._roots.factor_multiplicity(remaining, expression.factor())
            if found != multiplicity:
                return MismatchDetail(
                    factor=expression.to_text(),
                    computed_multiplicity=found,
                    claimed_multiplicity=multiplicity,
                    description=self._unclaimed_description(char_poly, claimed),
                )
        return MismatchDetail(
            factor=remaining.to_text(),
            computed_multiplicity=1,
            claimed_multiplicity=0,
            description="computed factor not claimed",
        )

    def _unclaimed_description(self, char_poly: BigPoly, claimed: SpectrumSpec) -> str:
        claimed_values = {
            expression.value for expression, _ in claimed.entries if isinstance(expression, IntEigenvalue)
        }
        try:
            computed = self._roots.exact_spectrum(char_poly)
        except CocentralizerSpectraError:
            return ""
        unclaimed = [
            f"{expression.value}×{multiplicity}"
            for expression, multiplicity in computed.entries
            if isinstance(expression, IntEigenvalue) and expression.value not in claimed_values
        ]
        return f"computed {', '.join(unclaimed)}" if unclaimed else ""

    def _first_nullity_difference(self, matrix: IntMatrix, claimed: SpectrumSpec) -> Optional[MismatchDetail]:
        for expression, multiplicity in claimed.entries:
            if not isinstance(expression, IntEigenvalue):
                continue
            nullity = self._exact.nullity_at(matrix, expression.value)
            if nullity != multiplicity:
                return MismatchDetail(
                    factor=expression.to_text(),
                    computed_multiplicity=nullity,
                    claimed_multiplicity=multiplicity,
                    description="nullity of M - μI",
                )
        return None

    @staticmethod
    def _graph_shape(multipartite: Optional[MultipartiteShape], claimed: GraphShape) -> GraphShape:
        if multipartite is None:
            return DegenerateShape("co-centralizer graph is not complete multipartite")
        sizes = multipartite.part_sizes
        if claimed.parts and sorted(claimed.parts) == sorted(sizes):
            sizes = claimed.parts
        if len(sizes) == 2 and 1 in sizes:
            return StarShape(sizes[1] if sizes[0] == 1 else sizes[0])
        if len(sizes) == 3:
            return TripartiteShape(*sizes)
        return MultipartiteOtherShape(tuple(sizes))


def format_cardinalities(counts: Counter) -> str:
    """{6:1, 4:3}: cardinality -> count, largest cardinality first."""
    return "{" + ", ".join(f"{size}:{count}" for size, count in sorted(counts.items(), reverse=True)) + "}"


def format_multiplicities(counts: Counter) -> str:
    return "{" + ", ".join(f"{value}×{count}" for value, count in sorted(counts.items())) + "}"
