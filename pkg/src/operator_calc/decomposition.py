"""Kernel and image of a self-adjoint operator in one degree."""
from math import comb
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from ..almost_kahler import AKManifold
from ..exact_algebra import ZERO, column_space, span_rank
from ..exterior import FormValue, GradedOperator
from ..shared.errors import ConsistencyError, ValidationError
from ..shared.logger import log


class DecompositionReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    operator: str
    degree: int
    kernel_dimension: int
    image_dimension: int
    total_dimension: int
    orthogonal: bool
    kernel_basis: List[dict]

    @property
    def complementary(self) -> bool:
        return self.kernel_dimension + self.image_dimension == self.total_dimension


def is_self_adjoint(m: AKManifold, op: GradedOperator, k: int) -> bool:
    if op.sign != 1 or op.offset != 0:
        return False
    form = m.tower.gram(k) @ op.block(k)
    return form == form.conjugate_transpose()


def orthogonal_decomposition_check(m: AKManifold, op: GradedOperator, k: int,
                                   expected_kernel: Optional[List] = None) -> DecompositionReport:
    """Omega^k = ker op (+) im op, orthogonal for the Gram product.

    ``expected_kernel`` is an independently computed basis that must span
    the same space as ker op.
    """
    if not 0 <= k <= m.dimension:
        raise ValidationError("DEGREE", f"degree {k} outside 0..{m.dimension}")
    if not is_self_adjoint(m, op, k):
        raise ValidationError("SELF_ADJOINT", f"{op.label} is not self-adjoint on degree {k}")
    block = op.block(k)
    kernel = block.nullspace()
    image = column_space(block)
    gram = m.tower.gram(k)
    orthogonal = all(not sum((a.conjugate() * b for a, b in zip(u, gram.apply(v))), ZERO)
                     for u in image for v in kernel)
    if expected_kernel is not None:
        size = comb(m.dimension, k)
        joint = span_rank(list(kernel) + list(expected_kernel), size)
        if not (len(kernel) == len(expected_kernel) == joint):
            raise ConsistencyError("KERNEL", f"ker {op.label} on degree {k} differs from the expected space",
                                   defect={"kernel": len(kernel), "expected": len(expected_kernel), "joint": joint})
    report = DecompositionReport(
        operator=op.label,
        degree=k,
        kernel_dimension=len(kernel),
        image_dimension=len(image),
        total_dimension=comb(m.dimension, k),
        orthogonal=orthogonal,
        kernel_basis=[FormValue.from_vector(m.dimension, k, v).to_json() for v in kernel],
    )
    log.debug(f"{m.name}: {op.label} on degree {k} splits as {report.kernel_dimension} + {report.image_dimension}")
    return report
