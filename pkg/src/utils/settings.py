"""
User settings persistence and campaign config parsing.

Saves and loads engine preferences (log level, debug checks, dictionary
backend) across sessions, and reads the flat key-value campaign files used
by the benchmark harness.
"""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Any, List, Optional

from src.utils.config import (
    ALGORITHMS,
    DICTIONARY_BACKENDS,
    GENERATOR_FAMILIES,
    COMMENT_PREFIX,
)
from src.utils.exceptions import ConfigError, FileOperationError
from src.utils.logging_config import log_info, log_warning

# Default settings
DEFAULT_SETTINGS = {
    'log_level': 'INFO',
    'log_to_file': False,
    'debug_checks': False,
    'dictionary_backend': 'two-level',
    'bench_workers': 1,
    'default_seed': 0,
}

SETTINGS_FILE = Path.home() / '.edge_coloring' / 'settings.json'
LOG_FILE = Path.home() / '.edge_coloring' / 'engine.log'


def get_log_file_path() -> Optional[str]:
    """Get log file path if logging is enabled."""
    settings = load_settings()
    if settings.get('log_to_file'):
        _ensure_config_dir()
        return str(LOG_FILE)
    return None


def _ensure_config_dir() -> bool:
    """Ensure config directory exists."""
    try:
        SETTINGS_FILE.parent.mkdir(parents=True, exist_ok=True)
        return True
    except OSError:
        return False


def load_settings() -> Dict[str, Any]:
    """
    Load user settings from file.

    Returns:
        Dictionary of settings (uses defaults for missing keys)
    """
    settings = DEFAULT_SETTINGS.copy()

    if not SETTINGS_FILE.exists():
        return settings

    try:
        with open(SETTINGS_FILE, 'r', encoding='utf-8') as f:
            saved = json.load(f)

        # Unknown keys from older versions are ignored
        for key, value in saved.items():
            if key in settings:
                settings[key] = value

        if settings['dictionary_backend'] not in DICTIONARY_BACKENDS:
            log_warning(f"Unknown dictionary backend {settings['dictionary_backend']!r}, using default")
            settings['dictionary_backend'] = DEFAULT_SETTINGS['dictionary_backend']
        return settings
    except (json.JSONDecodeError, OSError):
        return settings


def save_settings(settings: Dict[str, Any]) -> bool:
    """
    Save user settings to file.

    Args:
        settings: Dictionary of settings to save

    Returns:
        True if save successful
    """
    if not _ensure_config_dir():
        return False

    try:
        with open(SETTINGS_FILE, 'w', encoding='utf-8') as f:
            json.dump(settings, f, indent=2)
        log_info(f"Settings saved to {SETTINGS_FILE}")
        return True
    except OSError:
        log_warning("Failed to save settings")
        return False


def get_setting(key: str, default: Any = None) -> Any:
    """
    Get a single setting value.

    Args:
        key: Setting key
        default: Default value if not found

    Returns:
        Setting value or default
    """
    settings = load_settings()
    return settings.get(key, default)


def update_setting(key: str, value: Any) -> bool:
    """
    Update a single setting and save.

    Args:
        key: Setting key
        value: New value

    Returns:
        True if save successful
    """
    settings = load_settings()
    settings[key] = value
    return save_settings(settings)


# === Campaign config ===

@dataclass
class CampaignConfig:
    """A benchmark campaign: the cross product of families, sizes, seeds and algorithms."""
    families: List[str] = field(default_factory=list)
    sizes: List[int] = field(default_factory=list)
    m_factor: int = 4
    degrees: List[int] = field(default_factory=list)
    seeds: List[int] = field(default_factory=list)
    algorithms: List[str] = field(default_factory=list)
    repetitions: int = 1
    workers: int = 1
    out: Optional[str] = None

    def is_empty(self) -> bool:
        return not (self.families and self.sizes and self.seeds and self.algorithms)


_LIST_KEYS = {'families': str, 'sizes': int, 'degrees': int, 'seeds': int, 'algorithms': str}
_SCALAR_KEYS = {'m_factor': int, 'repetitions': int, 'workers': int, 'out': str}


def _convert(key: str, raw: str, kind: type, line_no: int):
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError(f"line {line_no}: bad value {raw!r} for {key}")


def parse_campaign_config(text: str) -> CampaignConfig:
    """
    Parse a flat ``key = value`` campaign description.

    Args:
        text: Config file contents; list values are comma-separated

    Returns:
        CampaignConfig with defaults for keys not given

    Raises:
        ConfigError: On unknown keys, malformed lines or invalid values
    """
    config = CampaignConfig()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split(COMMENT_PREFIX, 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f"line {line_no}: expected 'key = value', got {raw.strip()!r}")
        key, value = (part.strip() for part in line.split('=', 1))

        if key in _LIST_KEYS:
            items = [item.strip() for item in value.split(',') if item.strip()]
            setattr(config, key, [_convert(key, item, _LIST_KEYS[key], line_no) for item in items])
        elif key in _SCALAR_KEYS:
            setattr(config, key, _convert(key, value, _SCALAR_KEYS[key], line_no))
        else:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")

    unknown_families = [f for f in config.families if f not in GENERATOR_FAMILIES]
    if unknown_families:
        raise ConfigError(f"Unknown generator families: {', '.join(unknown_families)}")
    unknown_algorithms = [a for a in config.algorithms if a not in ALGORITHMS]
    if unknown_algorithms:
        raise ConfigError(f"Unknown algorithms: {', '.join(unknown_algorithms)}")
    if config.m_factor < 1 or config.repetitions < 1 or config.workers < 1:
        raise ConfigError("m_factor, repetitions and workers must be positive")
    if any(size < 2 for size in config.sizes):
        raise ConfigError("sizes must be at least 2")
    return config


def load_campaign_config(path: str) -> CampaignConfig:
    """Read and parse a campaign config file."""
    filepath = Path(path)
    if not filepath.exists():
        raise FileOperationError(f"File not found: {path}")
    try:
        text = filepath.read_text(encoding='utf-8')
    except OSError as e:
        raise FileOperationError(f"Failed to load config: {e}")
    config = parse_campaign_config(text)
    log_info(f"Loaded campaign config from {path}")
    return config
