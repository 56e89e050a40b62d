"""
Structure module initialization
"""
from .support2 import Support2Profile, analyze

__all__ = ['Support2Profile', 'analyze']
