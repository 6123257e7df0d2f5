# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Settings Tests
==============

"""


# =============================================================================
# Imports
# =============================================================================

# Import | Libraries
import pytest

# Import | Local Modules
from swing_smc import conf
from swing_smc.conf import DEFAULT_SMC_SETTINGS, configure_settings, get_smc_config


# =============================================================================
# Tests
# =============================================================================

def test_defaults_are_returned():
    assert get_smc_config("engine", "c_ess") == 0.7
    assert get_smc_config("dynamics", "nu") == 100.0
    assert get_smc_config("engine", "scheme") == "ssp"
    assert get_smc_config("output", "float_format") == "%.17g"


def test_override_wins_over_default():
    configure_settings({"engine": {"c_ess": 0.5}})
    assert get_smc_config("engine", "c_ess") == 0.5
    assert get_smc_config("engine", "scheme") == "ssp"


def test_clearing_overrides_restores_defaults():
    configure_settings({"engine": {"c_ess": 0.5}})
    configure_settings(None)
    assert get_smc_config("engine", "c_ess") == 0.7


def test_unknown_key_falls_back_to_base_then_default():
    assert get_smc_config("engine", "log_errors") is True
    assert get_smc_config("engine", "missing", default=3) == 3
    assert get_smc_config("nowhere", "float_tolerance") == DEFAULT_SMC_SETTINGS["base"]["float_tolerance"]


def test_returned_values_are_copies():
    value = get_smc_config("logging", "format")
    configure_settings({"models": {"lg_initial_variance": [1, 2]}})
    first = get_smc_config("models", "lg_initial_variance")
    first.append(3)
    assert get_smc_config("models", "lg_initial_variance") == [1, 2]
    assert isinstance(value, str)


def test_settings_file_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "settings.yaml"
    path.write_text("engine:\n  n_particles: 42\n", encoding="utf-8")
    monkeypatch.setenv(conf.SETTINGS_ENV_VAR, str(path))
    monkeypatch.setattr(conf, "_user_settings", None)
    assert get_smc_config("engine", "n_particles") == 42


@pytest.mark.parametrize("section", sorted(DEFAULT_SMC_SETTINGS))
def test_every_section_is_a_mapping(section):
    assert isinstance(DEFAULT_SMC_SETTINGS[section], dict)
