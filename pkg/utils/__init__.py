"""
Utility module initialization
"""
from .config import Settings, get_settings
from .errors import SimisCalcError

__all__ = ['Settings', 'get_settings', 'SimisCalcError']
