"""
Settings module for display, output and computation defaults
"""

import json
import logging
import os
from dataclasses import asdict, dataclass
from datetime import datetime
from typing import Dict

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_FILE = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                                     'config', 'settings.json')

OUTPUT_MODES = ('json', 'text', 'both')
FACET_METHODS = ('chain', 'supernatural', 'both')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR')


@dataclass
class DisplaySettings:
    """Text grid settings"""
    zero_symbol: str = "."
    unknown_symbol: str = "?"


@dataclass
class OutputSettings:
    """Command line output settings"""
    default_output: str = "both"  # 'json', 'text', 'both'
    json_indent: int = 2

    def __post_init__(self):
        if self.default_output not in OUTPUT_MODES:
            raise ValueError(f"Unknown output mode: {self.default_output}")


@dataclass
class ComputationSettings:
    """Algorithm defaults"""
    strict_window: bool = False
    facet_method: str = "chain"  # 'chain', 'supernatural', 'both'
    facet_cross_check: bool = False

    def __post_init__(self):
        if self.facet_method not in FACET_METHODS:
            raise ValueError(f"Unknown facet method: {self.facet_method}")


@dataclass
class AppSettings:
    """Main application settings"""
    app_name: str = "bsfan"
    version: str = "1.0.0"
    log_level: str = "WARNING"

    def __post_init__(self):
        self.log_level = self.log_level.upper()
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level: {self.log_level}")


def _env_flag(value: str) -> bool:
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


class SettingsManager:
    """Loads settings from a JSON file, then applies environment overrides"""

    def __init__(self, settings_file: str = None):
        self.settings_file = settings_file or os.getenv('BSFAN_SETTINGS', DEFAULT_SETTINGS_FILE)
        self.display_settings = DisplaySettings()
        self.output_settings = OutputSettings()
        self.computation_settings = ComputationSettings()
        self.app_settings = AppSettings()
        self.load_settings()

    def load_settings(self):
        """Load settings from the JSON file and environment variables"""
        if os.path.exists(self.settings_file):
            try:
                with open(self.settings_file, 'r') as f:
                    data = json.load(f)

                if 'display_settings' in data:
                    self.display_settings = DisplaySettings(**data['display_settings'])

                if 'output_settings' in data:
                    self.output_settings = OutputSettings(**data['output_settings'])

                if 'computation_settings' in data:
                    self.computation_settings = ComputationSettings(**data['computation_settings'])

                if 'app_settings' in data:
                    self.app_settings = AppSettings(**data['app_settings'])

            except Exception as e:
                logger.warning("Error loading settings file %s: %s", self.settings_file, e)

        self._load_from_env()

    def _load_from_env(self):
        """Environment variables win over the file"""
        if os.getenv('BSFAN_OUTPUT'):
            self.output_settings = OutputSettings(os.getenv('BSFAN_OUTPUT'), self.output_settings.json_indent)

        if os.getenv('BSFAN_LOG_LEVEL'):
            self.app_settings.log_level = os.getenv('BSFAN_LOG_LEVEL').upper()
            self.app_settings.__post_init__()

        if os.getenv('BSFAN_ZERO_SYMBOL'):
            self.display_settings.zero_symbol = os.getenv('BSFAN_ZERO_SYMBOL')

        if os.getenv('BSFAN_STRICT_WINDOW'):
            self.computation_settings.strict_window = _env_flag(os.getenv('BSFAN_STRICT_WINDOW'))

        if os.getenv('BSFAN_FACET_METHOD'):
            self.computation_settings.facet_method = os.getenv('BSFAN_FACET_METHOD')
            self.computation_settings.__post_init__()

    def save_settings(self) -> bool:
        """Save settings to the JSON file"""
        try:
            data = {
                'display_settings': asdict(self.display_settings),
                'output_settings': asdict(self.output_settings),
                'computation_settings': asdict(self.computation_settings),
                'app_settings': asdict(self.app_settings),
                'last_updated': datetime.now().isoformat()
            }

            with open(self.settings_file, 'w') as f:
                json.dump(data, f, indent=2)

            return True
        except Exception as e:
            logger.warning("Error saving settings: %s", e)
            return False

    def _update(self, section, **kwargs) -> bool:
        for key, value in kwargs.items():
            if hasattr(section, key):
                setattr(section, key, value)
        if hasattr(section, '__post_init__'):
            section.__post_init__()
        return self.save_settings()

    def update_display_settings(self, **kwargs) -> bool:
        """Update display settings"""
        return self._update(self.display_settings, **kwargs)

    def update_output_settings(self, **kwargs) -> bool:
        """Update output settings"""
        return self._update(self.output_settings, **kwargs)

    def update_computation_settings(self, **kwargs) -> bool:
        """Update computation settings"""
        return self._update(self.computation_settings, **kwargs)

    def update_app_settings(self, **kwargs) -> bool:
        """Update application settings"""
        return self._update(self.app_settings, **kwargs)

    def get_settings_summary(self) -> Dict:
        """Get a summary of all settings"""
        return {
            'settings_file': self.settings_file,
            'app_name': self.app_settings.app_name,
            'version': self.app_settings.version,
            'log_level': self.app_settings.log_level,
            'default_output': self.output_settings.default_output,
            'zero_symbol': self.display_settings.zero_symbol,
            'strict_window': self.computation_settings.strict_window,
            'facet_method': self.computation_settings.facet_method,
        }


# Global settings instance
settings_manager = SettingsManager()
