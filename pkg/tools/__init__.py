"""
Tools module initialization
"""
from .ideal_loader import IdealDocument, IdealLoader
from .reports import Report

__all__ = ['IdealDocument', 'IdealLoader', 'Report']
