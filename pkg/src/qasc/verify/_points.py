"""Seeded rational parameter points for the verification suites."""

from fractions import Fraction

import numpy as np

from qasc.algebra import ParamPoint
from qasc.partition import Partition, eigenvalue, eigenvalue_tilde, partitions_up_to
from qasc.utils import QascValueError, qasc_logger

MAX_DENOMINATOR = 7
MAX_TRIES = 1000


def find_resonance(pt: ParamPoint, degmax: int) -> tuple[Partition, Partition] | None:
    """Return a pair of partitions with clashing eigenvalues, or None.

    Both e and e~ must separate the partitions with |kappa| <= degmax and at
    most n parts; e covers the Macdonald polynomials and the V family, e~
    the U family.
    """
    labels = partitions_up_to(degmax, pt.nvars)
    for statistic in (eigenvalue, eigenvalue_tilde):
        seen: dict[Fraction, Partition] = {}
        for kappa in labels:
            value = statistic(kappa, pt)
            if value in seen:
                return seen[value], kappa
            seen[value] = kappa
    return None


def _draw(rng: np.random.Generator, low: int, high_ratio: Fraction) -> Fraction:
    # A fraction num/den with den in [low, MAX_DENOMINATOR] and num/den <= ratio
    den = int(rng.integers(low, MAX_DENOMINATOR + 1))
    top = max(1, int(high_ratio * den))
    return Fraction(int(rng.integers(1, top + 1)), den)


def random_param_points(
    seed: int,
    count: int,
    n: int,
    degmax: int,
    k: int | None = None,
) -> list[ParamPoint]:
    """Draw `count` non-resonant points with small numerators and denominators.

    q lies in (0, 2/3] and a in [-2, 0). If k is given t = q^k, otherwise t
    is drawn from (0, 1) independently of q.

    Args:
        seed: Seed of `numpy.random.default_rng`.
        count: Number of points.
        n: Number of variables.
        degmax: Partitions up to this size must not resonate.
        k: Optional exponent tying t to q.

    Raises:
        QascValueError: If no admissible point is found within the retry budget.
    """
    if count < 1:
        raise QascValueError(f"count must be positive, got {count}.")
    rng = np.random.default_rng(seed)
    points: list[ParamPoint] = []
    for _ in range(MAX_TRIES):
        q = _draw(rng, 3, Fraction(2, 3))
        t = q**k if k is not None else _draw(rng, 2, Fraction(1))
        a = -_draw(rng, 1, Fraction(2))
        if t == 1 or (k is None and t == q):
            continue
        pt = ParamPoint(q=q, t=t, a=a, nvars=n)
        if pt in points:
            continue
        pair = find_resonance(pt, degmax)
        if pair is not None:
            qasc_logger.debug(f"Rejecting {pt}: resonance between {pair}.")
            continue
        points.append(pt)
        if len(points) == count:
            return points
    raise QascValueError(
        f"No {count} non-resonant points found for n={n}, degmax={degmax}."
    )
