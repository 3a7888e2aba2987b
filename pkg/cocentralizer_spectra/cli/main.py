"""
Command-line front end.

Usage:
    cocg group --family q4n -n 3
    cocg spectrum --family qd2n -n 4 --kind D
    cocg verify --family q4n --n-range 3..40 --kind all --format json
    cocg verify --lemma1 --parts 5,10,6
    cocg scan --family q4n --kind D --range 3..1000000

Exit codes: 0 success, 1 any mismatch, 2 invalid input, 3 only degenerate results.
"""

import argparse
import asyncio
import itertools
import logging
import sys
from pathlib import Path
from typing import IO, Iterable, Optional, Sequence

from pydantic import ValidationError

from cocentralizer_spectra.cli.domain.report_records import (
    CLAIM_CSV_COLUMNS,
    GROUP_CSV_COLUMNS,
    LEMMA1_CSV_COLUMNS,
    REPORT_CSV_COLUMNS,
    SCAN_CSV_COLUMNS,
    SPECTRUM_CSV_COLUMNS,
    ClaimCheckRecord,
    GroupSummaryRecord,
    Lemma1Record,
    ScanRowRecord,
    SpectrumRecord,
    VerificationReportRecord,
)
from cocentralizer_spectra.cli.domain.run_config import RunConfig
from cocentralizer_spectra.cli.writers.report_writer import ReportWriter
from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.exceptions import CocentralizerSpectraError
from cocentralizer_spectra.finite_groups.domain.group_family_enum import GroupFamilyEnum
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.graphs.domain.matrix_kind_enum import MatrixKindEnum
from cocentralizer_spectra.graphs.exporters.edge_list_exporter import EdgeListExporter
from cocentralizer_spectra.ioc.composition_root import CocentralizerCompositionRoot
from cocentralizer_spectra.verification.domain.outcome_enum import OutcomeEnum
from cocentralizer_spectra.verification.domain.verification_job import VerificationJob
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_INPUT = 2
EXIT_DEGENERATE = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"

ALL_KINDS = (MatrixKindEnum.D, MatrixKindEnum.DL, MatrixKindEnum.DQ)

logger = logging.getLogger("cocentralizer_spectra.cli")


def _kind_argument(text: str) -> str:
    text = text.strip().upper()
    if text != "ALL":
        MatrixKindEnum.from_text(text)
    return text


def _family_argument(text: str) -> GroupFamilyEnum:
    try:
        return GroupFamilyEnum.from_text(text)
    except ValueError as ex:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}") from ex


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=_family_argument, help="q4n | d2m | qd2n | m2mn | psl2")
    common.add_argument("-n", type=int)
    common.add_argument("-m", type=int)
    common.add_argument("-k", type=int)
    common.add_argument("--kind", type=_kind_argument, help="D | DL | DQ | all")
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "text"))
    common.add_argument("--output", type=Path)
    common.add_argument("--report-dir", type=Path)
    common.add_argument("--tol", dest="tolerance", type=float, help="numeric match tolerance (overrides COCG_TOL)")
    common.add_argument("--jobs", type=int, help="worker processes (overrides COCG_PARALLELISM)")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="cocg", description="Co-centralizer graph spectra verification")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    subparsers.add_parser("group", parents=[common], help="order, center and centralizer cardinalities")

    spectrum = subparsers.add_parser("spectrum", parents=[common], help="exact and numeric spectrum")
    spectrum.add_argument("--dump-graph", type=Path, help="write the co-centralizer graph as an edge list")

    verify = subparsers.add_parser("verify", parents=[common], help="compare spectra with the closed forms")
    verify.add_argument("--n-range")
    verify.add_argument("--m-range")
    verify.add_argument("--k-range")
    verify.add_argument("--lemma1", action="store_true", help="check the multipartite distance polynomial")
    verify.add_argument("--parts", help="comma separated part sizes for --lemma1")
    verify.add_argument("--centralizers", action="store_true", help="check centralizer cardinality claims")
    verify.add_argument("--eigenvectors", action="store_true", help="check explicit D^L eigenvectors")
    verify.add_argument("--dump-graph", type=Path)

    scan = subparsers.add_parser("scan", parents=[common], help="integrality condition scan")
    scan.add_argument("--range", dest="parameter_range", required=True, help="a..b")
    return parser


def parse_run_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Raises SystemExit for argparse errors and ValidationError for inconsistent options."""
    arguments = vars(build_parser().parse_args(argv))
    subcommand = arguments["subcommand"]
    kind_text = arguments.pop("kind")
    if kind_text is None:
        kind_text = "ALL" if subcommand == "verify" else "D"
    arguments["kinds"] = ALL_KINDS if kind_text == "ALL" else (MatrixKindEnum.from_text(kind_text),)
    if arguments.get("output_format") is None:
        arguments["output_format"] = "csv" if subcommand == "scan" else "text"
    return RunConfig(**{name: value for name, value in arguments.items() if value is not None})


def _values(single: Optional[int], bounds: Optional[tuple[int, int]]) -> list[Optional[int]]:
    if bounds is not None:
        return list(range(bounds[0], bounds[1] + 1))
    return [single]


def specs_from_config(config: RunConfig) -> list[GroupSpec]:
    """Every GroupSpec the options describe; ranges expand, M2MN takes the product of m and n."""
    family = config.family
    assert family is not None
    n_values = _values(config.n, config.n_range)
    m_values = _values(config.m, config.m_range)
    k_values = _values(config.k, config.k_range)
    if family in (GroupFamilyEnum.Q4N, GroupFamilyEnum.QD2N):
        return [GroupSpec(family, n=n) for n in n_values]
    if family is GroupFamilyEnum.D2M:
        return [GroupSpec(family, m=m) for m in m_values]
    if family is GroupFamilyEnum.M2MN:
        return [GroupSpec(family, m=m, n=n) for m, n in itertools.product(m_values, n_values)]
    return [GroupSpec(family, k=k) for k in k_values]


def exit_code_for(outcomes: Iterable[OutcomeEnum]) -> int:
    outcomes = list(outcomes)
    if any(outcome is OutcomeEnum.MISMATCH for outcome in outcomes):
        return EXIT_MISMATCH
    if outcomes and all(outcome is OutcomeEnum.DEGENERATE for outcome in outcomes):
        return EXIT_DEGENERATE
    return EXIT_OK


class CliApplication:
    """Dispatches one RunConfig against the services resolved from the composition root."""

    LOG_MSG_DUMPED_GRAPH = "Co-centralizer graph of %s written to %s"
    LOG_MSG_NO_GRAPH = "%s has no co-centralizer graph to export"

    def __init__(
        self,
        container: CocentralizerCompositionRoot,
        config: RunConfig,
        stream: Optional[IO[str]] = None,
    ) -> None:
        self._container = container
        self._config = config
        self._stream = stream
        self._settings: VerificationSettings = container.settings()

    async def run(self) -> int:
        subcommand = self._config.subcommand
        if subcommand == "group":
            return self.cmd_group()
        if subcommand == "spectrum":
            return self.cmd_spectrum()
        if subcommand == "verify":
            return await self.cmd_verify()
        return self.cmd_scan()

    def _writer(self, columns: Sequence[str]) -> ReportWriter:
        return ReportWriter(
            output_format=self._config.output_format,
            columns=columns,
            config_hash=self._config.config_hash(),
            output=self._config.output,
            report_dir=self._settings.report_directory,
            stream=self._stream,
        )

    def cmd_group(self) -> int:
        builder = self._container.get_group_builder()
        calculator = self._container.get_centralizer_calculator()
        with self._writer(GROUP_CSV_COLUMNS) as writer:
            for spec in specs_from_config(self._config):
                group = builder.build_group(spec)
                center = calculator.center(group)
                family = calculator.proper_centralizer_family(group)
                writer.write(
                    GroupSummaryRecord.from_counts(spec, group.order, center.cardinality, family.cardinality_multiset())
                )
        return EXIT_OK

    def cmd_spectrum(self) -> int:
        verifier = self._container.get_family_verifier()
        outcomes: list[OutcomeEnum] = []
        specs = specs_from_config(self._config)
        with self._writer(SPECTRUM_CSV_COLUMNS) as writer:
            for spec in specs:
                for kind in self._config.kinds:
                    report = verifier.verify_family(spec, kind)
                    outcomes.append(report.outcome)
                    writer.write(SpectrumRecord.from_report(report))
        self._dump_graph(verifier, specs)
        return EXIT_DEGENERATE if outcomes and all(o is OutcomeEnum.DEGENERATE for o in outcomes) else EXIT_OK

    async def cmd_verify(self) -> int:
        config = self._config
        if config.lemma1:
            assert config.parts is not None
            holds = self._container.get_family_verifier().verify_lemma1(config.parts)
            with self._writer(LEMMA1_CSV_COLUMNS) as writer:
                writer.write(Lemma1Record(parts=list(config.parts), holds=holds))
            return EXIT_OK if holds else EXIT_MISMATCH

        specs = specs_from_config(config)
        if config.centralizers or config.eigenvectors:
            verifier = self._container.get_family_verifier()
            check = verifier.verify_centralizer_claims if config.centralizers else verifier.verify_eigenvectors
            claims = [check(spec) for spec in specs]
            with self._writer(CLAIM_CSV_COLUMNS) as writer:
                for claim in claims:
                    writer.write(ClaimCheckRecord.from_report(claim))
            return exit_code_for(claim.outcome for claim in claims)

        jobs = [VerificationJob(spec, kind) for spec in specs for kind in config.kinds]
        reports = await self._container.get_verification_runner().run(jobs)
        with self._writer(REPORT_CSV_COLUMNS) as writer:
            for report in reports:
                writer.write(VerificationReportRecord.from_report(report))
        self._dump_graph(self._container.get_family_verifier(), specs)
        return exit_code_for(report.outcome for report in reports)

    def cmd_scan(self) -> int:
        config = self._config
        assert config.family is not None and config.parameter_range is not None
        scanner = self._container.get_integrality_scanner()
        low, high = config.parameter_range
        kind = config.kinds[0]
        disagreements = 0
        with self._writer(SCAN_CSV_COLUMNS) as writer:
            for row in scanner.iter_integrality(config.family, kind, range(low, high + 1), fixed_n=config.n or 1):
                disagreements += row.agrees is False
                writer.write(ScanRowRecord.from_row(config.family.value, kind, row))
        return EXIT_MISMATCH if disagreements else EXIT_OK

    def _dump_graph(self, verifier: IFamilyVerifier, specs: Sequence[GroupSpec]) -> None:
        path = self._config.dump_graph
        if path is None or not specs:
            return
        spec = specs[0]
        graph = verifier.cocentralizer_graph(spec)
        if graph is None:
            logger.warning(self.LOG_MSG_NO_GRAPH, spec.label)
            return
        EdgeListExporter.write_edge_list(graph, path)
        logger.info(self.LOG_MSG_DUMPED_GRAPH, spec.label, path)


async def load_settings(container: CocentralizerCompositionRoot, config: RunConfig) -> VerificationSettings:
    container.get_environment_loader().load_environment()
    settings = await VerificationSettings.hydrate(container.get_settings_retriever())
    return settings.with_overrides(
        match_tolerance=config.tolerance,
        parallelism=config.jobs,
        report_directory=config.report_dir,
    )


async def main(argv: Optional[Sequence[str]] = None, stream: Optional[IO[str]] = None) -> int:
    try:
        config = parse_run_config(argv)
    except SystemExit as ex:
        return EXIT_OK if ex.code in (0, None) else EXIT_INVALID_INPUT
    except ValidationError as ex:
        print(f"cocg: invalid options: {ex}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    logging.basicConfig(level=logging.DEBUG if config.verbose else logging.WARNING, format=LOG_FORMAT)

    container = CocentralizerCompositionRoot()
    try:
        settings = await load_settings(container, config)
        container.settings.override(settings)
        return await CliApplication(container, config, stream).run()
    except (CocentralizerSpectraError, ValueError) as ex:
        logger.error("Invalid input: %s", ex)
        return EXIT_INVALID_INPUT
    finally:
        container.settings.reset_override()


def run() -> None:
    raise SystemExit(asyncio.run(main()))


if __name__ == "__main__":
    run()
