"""Lie algebra data and the Chevalley-Eilenberg differential."""
from .algebra import LieAlgebraData, LieValidationReport, validate_lie_algebra
from .differential import ce_differential, differential_of_generator

__all__ = ['LieAlgebraData', 'LieValidationReport', 'validate_lie_algebra',
           'ce_differential', 'differential_of_generator']
