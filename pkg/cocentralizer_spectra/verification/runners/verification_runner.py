import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.verification.concretes.family_verifier import FamilyVerifier
from cocentralizer_spectra.verification.domain.verification_job import VerificationJob
from cocentralizer_spectra.verification.domain.verification_report import VerificationReport
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier

_worker_verifiers: dict[VerificationSettings, FamilyVerifier] = {}


def _verify_in_worker(settings: VerificationSettings, job: VerificationJob) -> VerificationReport:
    # one verifier per worker process so structures are reused across kinds of the same spec
    verifier = _worker_verifiers.get(settings)
    if verifier is None:
        verifier = _worker_verifiers[settings] = FamilyVerifier.from_settings(settings)
    return verifier.verify_family(job.spec, job.kind)


class VerificationRunner:
    """Runs verification jobs inline or across worker processes; reports come back in job order."""

    LOG_MSG_RUNNING = "Running %d verification jobs with parallelism %d"
    LOG_MSG_FINISHED = "Finished %d verification jobs"

    def __init__(
        self,
        settings: VerificationSettings,
        verifier: Optional[IFamilyVerifier] = None,
        logger: Optional[logging.Logger] = None,
    ) -> None:
        self._settings = settings
        self._verifier: IFamilyVerifier = verifier or FamilyVerifier.from_settings(settings)
        self._logger: logging.Logger = logger or logging.getLogger(self.__class__.__name__)

    @property
    def settings(self) -> VerificationSettings:
        return self._settings

    async def run(self, jobs: Sequence[VerificationJob]) -> list[VerificationReport]:
        parallelism = min(self._settings.parallelism, max(len(jobs), 1))
        self._logger.info(self.LOG_MSG_RUNNING, len(jobs), parallelism)
        if parallelism <= 1:
            reports = [self._verifier.verify_family(job.spec, job.kind) for job in jobs]
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=parallelism) as executor:
                reports = list(
                    await asyncio.gather(
                        *(loop.run_in_executor(executor, _verify_in_worker, self._settings, job) for job in jobs)
                    )
                )
        self._logger.info(self.LOG_MSG_FINISHED, len(reports))
        return reports
