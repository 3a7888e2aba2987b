import pytest

from cocentralizer_spectra.configuration.concretes.dotenv.dotenv_environment_loader import DotenvEnvironmentLoader
from cocentralizer_spectra.configuration.concretes.env_variable.environment_variables_settings_retriever import (
    EnvironmentVariablesSettingsRetriever,
)
from cocentralizer_spectra.configuration.concretes.local_file.local_file_settings_retriever import (
    LocalFileSettingsRetriever,
)
from cocentralizer_spectra.configuration.domain.verification_settings import VerificationSettings
from cocentralizer_spectra.exceptions import InvalidSettingError
from cocentralizer_spectra.finite_groups.concretes.family_group_builder import FamilyGroupBuilder
from cocentralizer_spectra.finite_groups.domain.group_spec import GroupSpec
from cocentralizer_spectra.ioc.composition_root import CocentralizerCompositionRoot
from cocentralizer_spectra.ioc.configuration.ioc_configuration import IocConfig
from cocentralizer_spectra.verification.concretes.family_verifier import FamilyVerifier
from cocentralizer_spectra.verification.integrality_scanner import IntegralityScanner
from cocentralizer_spectra.verification.runners.verification_runner import VerificationRunner


class TestIocConfig:
    """Tests for IocConfig"""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("COCG_SETTINGS_SOURCE", raising=False)
        monkeypatch.delenv("COCG_SETTINGS_FILE", raising=False)

        assert IocConfig.settings_source() == "ENVIRONMENT"
        assert IocConfig.settings_file() == "cocentralizer.settings.txt"

    def test_source_is_case_insensitive(self, monkeypatch):
        monkeypatch.setenv("COCG_SETTINGS_SOURCE", " localfile ")

        assert IocConfig.settings_source() == "LOCALFILE"

    def test_invalid_source_raises(self, monkeypatch):
        monkeypatch.setenv("COCG_SETTINGS_SOURCE", "VAULT")

        with pytest.raises(InvalidSettingError):
            IocConfig.settings_source()


class TestCocentralizerCompositionRoot:
    """Tests for CocentralizerCompositionRoot"""

    def test_environment_source_selects_environment_retriever(self, monkeypatch):
        monkeypatch.setenv("COCG_SETTINGS_SOURCE", "ENVIRONMENT")

        retriever = CocentralizerCompositionRoot().get_settings_retriever()

        assert isinstance(retriever, EnvironmentVariablesSettingsRetriever)

    @pytest.mark.asyncio
    async def test_local_file_source_reads_the_configured_file(self, monkeypatch, tmp_path):
        settings_file = tmp_path / "run.settings.txt"
        settings_file.write_text("COCG_EXACT_CAP=48\n")
        monkeypatch.setenv("COCG_SETTINGS_SOURCE", "LOCALFILE")
        monkeypatch.setenv("COCG_SETTINGS_FILE", str(settings_file))

        retriever = CocentralizerCompositionRoot().get_settings_retriever()
        settings = await VerificationSettings.hydrate(retriever)

        assert isinstance(retriever, LocalFileSettingsRetriever)
        assert settings.exact_dimension_cap == 48

    def test_invalid_source_raises_on_resolution(self, monkeypatch):
        monkeypatch.setenv("COCG_SETTINGS_SOURCE", "VAULT")

        with pytest.raises(InvalidSettingError):
            CocentralizerCompositionRoot().get_settings_retriever()

    def test_services_resolve(self):
        container = CocentralizerCompositionRoot()

        assert isinstance(container.get_environment_loader(), DotenvEnvironmentLoader)
        assert isinstance(container.get_group_builder(), FamilyGroupBuilder)
        assert isinstance(container.get_family_verifier(), FamilyVerifier)
        assert isinstance(container.get_integrality_scanner(), IntegralityScanner)
        assert isinstance(container.get_verification_runner(), VerificationRunner)
        assert container.get_group_builder() is container.get_group_builder()

    def test_settings_override_flows_to_services(self):
        container = CocentralizerCompositionRoot()
        settings = VerificationSettings(exact_dimension_cap=7, parallelism=1)

        container.settings.override(settings)
        try:
            assert container.get_family_verifier().exact_dimension_cap == 7
            assert container.get_verification_runner().settings is settings
        finally:
            container.settings.reset_override()

    def test_group_builder_builds_every_family(self):
        builder = CocentralizerCompositionRoot().get_group_builder()

        assert builder.build_group(GroupSpec.q4n(3)).order == 12
        assert builder.build_group(GroupSpec.psl2(2)).order == 60
