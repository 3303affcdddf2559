"""
Domain models package for the Spectral Turan Workbench
Contains the immutable Graph value type and bitset helpers
"""

from .graph import Graph, iter_bits, mask_of

__all__ = ['Graph', 'iter_bits', 'mask_of']
