from abc import ABC, abstractmethod
from typing import Optional, Sequence

import networkx as nx

from cocentralizer_spectra.closed_forms.domain.spectrum_spec import SpectrumSpec
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.verification.domain.verification_report import ClaimCheckReport, VerificationReport


class IFamilyVerifier(ABC):
    @abstractmethod
    def verify_family(self, spec: GroupSpec, kind: MatrixKindEnum) -> VerificationReport:
        """
        Brute-force spectrum of the co-centralizer graph compared against its closed form.

        Never raises for domain failures; they are encoded in the report outcome.
        """
        pass

    @abstractmethod
    def verify_lemma1(self, parts: Sequence[int]) -> bool:
        """
        Whether the complete multipartite distance polynomial formula matches brute force.
        """
        pass

    @abstractmethod
    def verify_centralizer_claims(self, spec: GroupSpec) -> ClaimCheckReport:
        pass

    @abstractmethod
    def verify_eigenvectors(self, spec: GroupSpec) -> ClaimCheckReport:
        pass

    @abstractmethod
    def cocentralizer_graph(self, spec: GroupSpec) -> Optional[nx.Graph]:
        """
        The co-centralizer graph, or None when all proper centralizers share one cardinality.
        """
        pass

    @abstractmethod
    def computed_spectrum(self, spec: GroupSpec, kind: MatrixKindEnum) -> Optional[SpectrumSpec]:
        """
        Exact spectrum of the co-centralizer matrix; None when degenerate or too large for the exact path.
        """
        pass
