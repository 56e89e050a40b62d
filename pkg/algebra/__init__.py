"""
Algebra module initialization
"""
from .monomial import Monomial, RingContext
from .ideal import MonomialIdeal, from_generators

__all__ = ['Monomial', 'RingContext', 'MonomialIdeal', 'from_generators']
