"""
Theorems module initialization
"""
from .models import Verdict, WitnessReport
from .predicates import evaluate_all

__all__ = ['Verdict', 'WitnessReport', 'evaluate_all']
