from unittest.mock import MagicMock

import pytest

from cocentralizer_spectra.closed_forms.domain.graph_shape import StarShape
from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.verification.domain.outcome_enum import OutcomeEnum
from cocentralizer_spectra.verification.domain.verification_job import VerificationJob
from cocentralizer_spectra.verification.domain.verification_report import VerificationReport
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier
from cocentralizer_spectra.verification.runners.verification_runner import VerificationRunner


class TestVerificationRunner:
    """Tests for VerificationRunner"""

    @pytest.fixture
    def mock_verifier(self):
        verifier = MagicMock(spec=IFamilyVerifier)
        verifier.verify_family.side_effect = lambda spec, kind: VerificationReport(
            spec=spec, kind=kind, shape=StarShape(3), outcome=OutcomeEnum.EXACT_MATCH
        )
        return verifier

    @pytest.mark.asyncio
    async def test_inline_run_keeps_job_order(self, mock_verifier):
        runner = VerificationRunner(VerificationSettings(parallelism=1), verifier=mock_verifier)
        jobs = [VerificationJob(GroupSpec.q4n(n), kind) for n in (3, 4) for kind in MatrixKindEnum]

        reports = await runner.run(jobs)

        assert [(report.spec, report.kind) for report in reports] == [(job.spec, job.kind) for job in jobs]
        assert mock_verifier.verify_family.call_count == len(jobs)

    @pytest.mark.asyncio
    async def test_empty_job_list(self, mock_verifier):
        runner = VerificationRunner(VerificationSettings(parallelism=4), verifier=mock_verifier)

        assert await runner.run([]) == []
        mock_verifier.verify_family.assert_not_called()

    @pytest.mark.asyncio
    async def test_single_job_runs_inline_even_with_parallelism(self, mock_verifier):
        runner = VerificationRunner(VerificationSettings(parallelism=8), verifier=mock_verifier)

        reports = await runner.run([VerificationJob(GroupSpec.d2m(5), MatrixKindEnum.D)])

        assert len(reports) == 1
        mock_verifier.verify_family.assert_called_once_with(GroupSpec.d2m(5), MatrixKindEnum.D)

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_process_pool_matches_inline(self):
        jobs = [VerificationJob(GroupSpec.d2m(m), kind) for m in (5, 6, 7) for kind in MatrixKindEnum]

        inline = await VerificationRunner(VerificationSettings(parallelism=1)).run(jobs)
        pooled = await VerificationRunner(VerificationSettings(parallelism=2)).run(jobs)

        assert [report.outcome for report in pooled] == [report.outcome for report in inline]
        assert all(report.outcome is OutcomeEnum.EXACT_MATCH for report in pooled)
        assert [report.spec for report in pooled] == [job.spec for job in jobs]
