import logging

from dependency_injector import containers, providers

from cocentralizer_spectra.configuration.concretes.dotenv.dotenv_environment_loader import DotenvEnvironmentLoader
from cocentralizer_spectra.configuration.concretes.env_variable.environment_variables_settings_retriever import (
    EnvironmentVariablesSettingsRetriever,
)
from cocentralizer_spectra.configuration.concretes.local_file.local_file_settings_retriever import (
    LocalFileSettingsRetriever,
)
from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.configuration.interfaces.environment_loader_interface import IEnvironmentLoader
from cocentralizer_spectra.configuration.interfaces.settings_retriever_interface import ISettingsRetriever
from cocentralizer_spectra.finite_groups.centralizers.centralizer_calculator import CentralizerCalculator
from cocentralizer_spectra.finite_groups.concretes.family_group_builder import FamilyGroupBuilder
from cocentralizer_spectra.finite_groups.concretes.metacyclic_presentation_group_builder import (
    MetacyclicPresentationGroupBuilder,
)
from cocentralizer_spectra.finite_groups.concretes.psl2_matrix_group_builder import Psl2MatrixGroupBuilder
from cocentralizer_spectra.finite_groups.interfaces.group_builder_interface import IGroupBuilder
from cocentralizer_spectra.ioc.configuration.ioc_configuration import IocConfig
from cocentralizer_spectra.verification.concretes.family_verifier import FamilyVerifier
from cocentralizer_spectra.verification.integrality_scanner import IntegralityScanner
from cocentralizer_spectra.verification.interfaces.family_verifier_interface import IFamilyVerifier
from cocentralizer_spectra.verification.runners.verification_runner import VerificationRunner


def _create_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


class CocentralizerCompositionRoot(containers.DeclarativeContainer):
    """
    IoC container for the verification toolkit.

    `settings` starts at the defaults; the CLI overrides it with hydrated settings
    (container.settings.override(settings)) before resolving any service.
    """

    settings = providers.Object(VerificationSettings())

    # note "private" _ to encapsulate in this class
    _settings_retriever: ISettingsRetriever = providers.Selector(
        providers.Callable(IocConfig.settings_source),
        ENVIRONMENT=providers.Singleton(
            EnvironmentVariablesSettingsRetriever,
            logger=providers.Callable(_create_logger, name="EnvironmentVariablesSettingsRetriever"),
        ),
        LOCALFILE=providers.Singleton(
            LocalFileSettingsRetriever,
            properties_file_names=providers.List(providers.Callable(IocConfig.settings_file)),
            logger=providers.Callable(_create_logger, name="LocalFileSettingsRetriever"),
        ),
    )

    _environment_loader: IEnvironmentLoader = providers.Singleton(
        DotenvEnvironmentLoader,
        logger=providers.Callable(_create_logger, name="DotenvEnvironmentLoader"),
    )

    _group_builder: IGroupBuilder = providers.Singleton(
        FamilyGroupBuilder,
        builders=providers.List(
            providers.Factory(
                MetacyclicPresentationGroupBuilder,
                cayley_table_max_order=settings.provided.cayley_table_max_order,
            ),
            providers.Factory(
                Psl2MatrixGroupBuilder,
                cayley_table_max_order=settings.provided.cayley_table_max_order,
            ),
        ),
        logger=providers.Callable(_create_logger, name="FamilyGroupBuilder"),
    )

    _centralizer_calculator = providers.Singleton(
        CentralizerCalculator,
        logger=providers.Callable(_create_logger, name="CentralizerCalculator"),
    )

    _family_verifier: IFamilyVerifier = providers.Factory(
        FamilyVerifier.from_settings,
        settings=settings,
        logger=providers.Callable(_create_logger, name="FamilyVerifier"),
    )

    _integrality_scanner = providers.Factory(
        IntegralityScanner,
        verifier=_family_verifier,
        scan_cross_check_order=settings.provided.scan_cross_check_order,
        exact_dimension_cap=settings.provided.exact_dimension_cap,
        logger=providers.Callable(_create_logger, name="IntegralityScanner"),
    )

    _verification_runner = providers.Factory(
        VerificationRunner,
        settings=settings,
        verifier=_family_verifier,
        logger=providers.Callable(_create_logger, name="VerificationRunner"),
    )

    # below ("public") accessors follow the get_ naming convention
    get_settings_retriever: ISettingsRetriever = providers.Callable(lambda retriever: retriever, retriever=_settings_retriever)

    get_environment_loader: IEnvironmentLoader = providers.Callable(lambda loader: loader, loader=_environment_loader)

    get_group_builder: IGroupBuilder = providers.Callable(lambda builder: builder, builder=_group_builder)

    get_centralizer_calculator: CentralizerCalculator = providers.Callable(
        lambda calculator: calculator, calculator=_centralizer_calculator
    )

    get_family_verifier: IFamilyVerifier = providers.Callable(lambda verifier: verifier, verifier=_family_verifier)

    get_integrality_scanner: IntegralityScanner = providers.Callable(
        lambda scanner: scanner, scanner=_integrality_scanner
    )

    get_verification_runner: VerificationRunner = providers.Callable(lambda runner: runner, runner=_verification_runner)
