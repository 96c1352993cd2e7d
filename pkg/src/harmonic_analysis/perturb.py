"""Seeded compatible perturbations of an almost Kaehler structure.

J is conjugated by rational symplectic transvections
T x = x + c omega(v, x) v, which preserve omega and keep J compatible with
a positive metric; omega is then rescaled by a positive rational.
"""
import random
from fractions import Fraction
from typing import Iterator

from ..almost_kahler import AKManifold, AlmostComplexStructure, validate_ak
from ..almost_kahler.structure import omega_matrix
from ..exact_algebra import ExactMatrix
from ..shared.config import get_config
from ..shared.logger import log


def transvection(m: AKManifold, v, c: Fraction, inverse: bool = False) -> ExactMatrix:
    """I + c v v^T Omega; the inverse flips the sign of c."""
    n = m.dimension
    column = ExactMatrix.from_columns([v], n)
    rank_one = column @ column.transpose() @ omega_matrix(m)
    return ExactMatrix.identity(n) + rank_one.scale(-c if inverse else c)


def perturb(m: AKManifold, rng: random.Random, transvections: int = None, label: str = None) -> AKManifold:
    """One random compatible pair on the same Lie algebra."""
    if transvections is None:
        transvections = get_config().audit.fuzz_transvections
    j = m.acs.matrix
    for _ in range(transvections):
        v = [Fraction(rng.randint(-2, 2)) for _ in range(m.dimension)]
        if not any(v):
            v[rng.randrange(m.dimension)] = Fraction(1)
        c = Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 3))
        j = transvection(m, v, c) @ j @ transvection(m, v, c, inverse=True)
    scale = Fraction(rng.randint(1, 4), rng.randint(1, 4))
    acs = AlmostComplexStructure.from_rows([[x.re for x in row] for row in j.tolist()])
    return validate_ak(
        label or f"{m.name}~",
        m.algebra,
        acs,
        m.omega.scale(scale),
        compact_quotient=m.compact_quotient,
        nomizu=m.nomizu,
        annotations=m.annotations + (f"perturbed: {transvections} transvections, omega scaled by {scale}",),
    )


def sample_rng(seed: int, index: int) -> random.Random:
    """Independent stream for perturbation ``index`` under ``seed``."""
    return random.Random(seed * 1_000_003 + index)


def perturbations(m: AKManifold, seed: int = None, count: int = None) -> Iterator[AKManifold]:
    """``count`` reproducible perturbations of ``m``; sample i uses its own stream."""
    config = get_config()
    seed = config.audit.seed if seed is None else seed
    count = config.audit.fuzz_samples if count is None else count
    for index in range(count):
        sample = perturb(m, sample_rng(seed, index), label=f"{m.name}~{seed}.{index}")
        log.debug(f"perturbation {sample.name} validated")
        yield sample
