import json

import pytest

from bsfan.settings import ComputationSettings, OutputSettings, SettingsManager


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({
        'display_settings': {'zero_symbol': '0', 'unknown_symbol': '?'},
        'output_settings': {'default_output': 'json', 'json_indent': 4},
        'computation_settings': {'strict_window': True, 'facet_method': 'both', 'facet_cross_check': False},
    }))
    return path


def test_defaults_when_the_file_is_missing(clean_env, tmp_path):
    manager = SettingsManager(str(tmp_path / "missing.json"))
    assert manager.output_settings.default_output == 'both'
    assert manager.display_settings.zero_symbol == '.'
    assert manager.computation_settings.facet_method == 'chain'


def test_load_from_file(clean_env, settings_file):
    manager = SettingsManager(str(settings_file))
    assert manager.display_settings.zero_symbol == '0'
    assert manager.output_settings.json_indent == 4
    assert manager.computation_settings.strict_window is True
    assert manager.app_settings.log_level == 'WARNING'


def test_environment_wins_over_the_file(clean_env, settings_file):
    clean_env.setenv('BSFAN_OUTPUT', 'text')
    clean_env.setenv('BSFAN_STRICT_WINDOW', 'no')
    clean_env.setenv('BSFAN_LOG_LEVEL', 'debug')
    manager = SettingsManager(str(settings_file))
    assert manager.output_settings.default_output == 'text'
    assert manager.output_settings.json_indent == 4
    assert manager.computation_settings.strict_window is False
    assert manager.app_settings.log_level == 'DEBUG'


def test_broken_file_falls_back_to_defaults(clean_env, tmp_path, caplog):
    path = tmp_path / "settings.json"
    path.write_text("{not json")
    manager = SettingsManager(str(path))
    assert manager.output_settings.default_output == 'both'
    assert "Error loading settings" in caplog.text


def test_update_and_save(clean_env, tmp_path):
    path = tmp_path / "settings.json"
    manager = SettingsManager(str(path))
    assert manager.update_display_settings(zero_symbol='-')
    saved = json.loads(path.read_text())
    assert saved['display_settings']['zero_symbol'] == '-'
    assert 'last_updated' in saved
    assert SettingsManager(str(path)).display_settings.zero_symbol == '-'
    assert manager.get_settings_summary()['zero_symbol'] == '-'


def test_invalid_values_are_rejected():
    with pytest.raises(ValueError):
        OutputSettings(default_output='yaml')
    with pytest.raises(ValueError):
        ComputationSettings(facet_method='guess')
