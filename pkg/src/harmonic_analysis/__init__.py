"""Harmonic spaces, Hodge numbers, Lefschetz and spectral audits."""
from .spaces import (
    COMPOSITE_SPACES,
    HarmonicSpace,
    bigraded_sum,
    check_degree,
    contains,
    harmonic_space,
    intersection,
    orthocomplement,
    orthogonal_projection,
    same_span,
)
from .betti import HodgeNumbers, hodge_betti_numbers, invariant_betti_numbers
from .hodge import DecompositionVerdict, PureFullVerdict, hodge_decomposition_check, pure_full_check
from .hlc import HlcDegree, HlcReport, LefschetzMap, hlc_audit
from .spectral import MuNorms, laplacian_roots, mu_norms, spectral_gap
from .membership import (
    FAMILIES,
    INEQUALITIES,
    InequalityReport,
    MembershipResult,
    inequality_audit,
    membership_constant,
    sample_vectors,
)
from .dlambda_norms import DLambdaNormReport, dlambda_norm_audit
from .theorems import TheoremCheck, TheoremReport, self_dual_dimension, theorem_audit
from .decompose import FormDecomposition, decompose_form
from .perturb import perturb, perturbations, sample_rng, transvection
from .report import GAP_OPERATORS, HodgeReport, build_report

__all__ = [
    'COMPOSITE_SPACES', 'HarmonicSpace', 'bigraded_sum', 'check_degree', 'contains', 'harmonic_space',
    'intersection', 'orthocomplement', 'orthogonal_projection', 'same_span',
    'HodgeNumbers', 'hodge_betti_numbers', 'invariant_betti_numbers',
    'DecompositionVerdict', 'PureFullVerdict', 'hodge_decomposition_check', 'pure_full_check',
    'HlcDegree', 'HlcReport', 'LefschetzMap', 'hlc_audit',
    'MuNorms', 'laplacian_roots', 'mu_norms', 'spectral_gap',
    'FAMILIES', 'INEQUALITIES', 'InequalityReport', 'MembershipResult', 'inequality_audit',
    'membership_constant', 'sample_vectors',
    'DLambdaNormReport', 'dlambda_norm_audit',
    'TheoremCheck', 'TheoremReport', 'self_dual_dimension', 'theorem_audit',
    'FormDecomposition', 'decompose_form',
    'perturb', 'perturbations', 'sample_rng', 'transvection',
    'GAP_OPERATORS', 'HodgeReport', 'build_report',
]
