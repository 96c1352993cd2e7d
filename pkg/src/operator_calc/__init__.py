"""Commutators, Laplacians and the exact identity suites."""
from .commutators import graded_commutator, joint_kernel, laplacian
from .decomposition import DecompositionReport, is_self_adjoint, orthogonal_decomposition_check
from .identities import IdentityCheck, IdentitySuiteReport, identity_suite
from .selection import BASIC_OPERATORS, canonical_selection, laplacian_by_name, operator_by_name

__all__ = [
    'graded_commutator', 'joint_kernel', 'laplacian',
    'DecompositionReport', 'is_self_adjoint', 'orthogonal_decomposition_check',
    'IdentityCheck', 'IdentitySuiteReport', 'identity_suite',
    'BASIC_OPERATORS', 'canonical_selection', 'laplacian_by_name', 'operator_by_name',
]
