"""Almost Kaehler structures on Lie algebras and their structure operators."""
from .calculus import STAR_PARTNERS, StructureCalculus
from .bigrading import D_COMPONENTS, bidegree_parts, bidegrees
from .nijenhuis import NijenhuisReport, nijenhuis_vector
from .operators import (
    adjoint,
    bigrade_projection,
    cal_J,
    d_lambda_ops,
    hodge_star,
    lefschetz_decomposition,
    lefschetz_ops,
    nijenhuis,
    primitive_space,
    split_d,
    symplectic_star,
)
from .structure import AXIOMS, AKManifold, AlmostComplexStructure, SymplecticData, validate_ak

__all__ = [
    'STAR_PARTNERS', 'StructureCalculus', 'D_COMPONENTS', 'bidegree_parts', 'bidegrees',
    'NijenhuisReport', 'nijenhuis_vector',
    'adjoint', 'bigrade_projection', 'cal_J', 'd_lambda_ops', 'hodge_star', 'lefschetz_decomposition',
    'lefschetz_ops', 'nijenhuis', 'primitive_space', 'split_d', 'symplectic_star',
    'AXIOMS', 'AKManifold', 'AlmostComplexStructure', 'SymplecticData', 'validate_ak',
]
