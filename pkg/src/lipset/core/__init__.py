from .settings import LipsetSettings, get_settings
from .logging_config import JsonLogFormatter, configure_logging

__all__ = ["LipsetSettings", "get_settings", "JsonLogFormatter", "configure_logging"]
