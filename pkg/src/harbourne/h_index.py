"""
Harbourne index computations

For a blow-up at a set P of s points, the strict transform satisfies
C-bar^2 = C^2 - sum m_p^2, and H(C, P) = C-bar^2 / s. The H-index is the
minimum of H(C, P) over nonempty P.

Candidate points are restricted to Sing(C). Adding a smooth point (m = 1)
turns N/s into (N - 1)/(s + 1), which only lowers H while H > -1; adding a
point off the curve (m = 0) only lowers H while H > 0. Every configuration of
interest has H <= -1, and the restriction makes the minimum well defined.
"""

from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from harbourne.arrangement import (
    Arrangement,
    SurfaceKind,
    require_abelian,
    require_ordinary,
    self_intersection,
)
from harbourne.config import Config
from harbourne.exceptions import BadInput, EmptyPointSet, NoSingularities
from harbourne.logging_config import HarbourneLogger
from harbourne.rational import Rat

logger = HarbourneLogger.get_logger(__name__)


class Witness(NamedTuple):
    """
    Point set realising an H value, given as multiplicity -> number of points

    Points of equal multiplicity are interchangeable, so counts per
    multiplicity identify the set up to symmetry.
    """

    taken: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return sum(count for _, count in self.taken)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.taken)

    def __str__(self) -> str:
        return ";".join(f"{k}:{count}" for k, count in self.taken)


class HIndex(NamedTuple):
    """Exact minimum of H(C, P) together with a minimising point set"""

    value: Rat
    witness: Witness


def h_at_points(c_square: int, multiplicities: Iterable[int]) -> Rat:
    """
    H(C, P) = (C^2 - sum m_p^2) / s for a point set with given multiplicities

    Args:
        c_square: Self-intersection C^2 of the curve
        multiplicities: Multiplicity m_p >= 0 of C at each point of P

    Returns:
        Exact quotient

    Raises:
        EmptyPointSet: If no points are given
        BadInput: If a multiplicity is negative
    """
    s = 0
    subtracted = 0
    for m in multiplicities:
        if m < 0:
            raise BadInput(f"Point multiplicity must be >= 0, got {m}")
        s += 1
        subtracted += m * m
    if s == 0:
        raise EmptyPointSet("H(C, P) needs at least one point")
    return Rat(c_square - subtracted, s)


def _require_singularities(arr: Arrangement) -> None:
    require_ordinary(arr)
    if arr.moments.f0 == 0:
        raise NoSingularities(f"{arr.label}: arrangement has no singular points")


def h_at_sing(arr: Arrangement) -> Rat:
    """
    H(C, Sing C) = (C^2 - f2) / f0

    Raises:
        NotOrdinary: If the arrangement is not ordinary
        NoSingularities: If f0 = 0
    """
    _require_singularities(arr)
    f0, _, f2 = arr.moments
    return Rat(self_intersection(arr) - f2, f0)


def h_index(arr: Arrangement) -> HIndex:
    """
    Exact H-index: minimum of H(C, P) over nonempty P inside Sing(C)

    For a fixed size s the best P takes the s points of largest
    multiplicity. Inside one multiplicity group, taking j more points of
    multiplicity m gives (A - m^2 j) / (S + j), a Moebius function of j and
    hence monotone, so the minimum over s = 1..f0 is attained at s = 1 or at
    a group boundary. Only those sizes are evaluated. Ties keep the smallest s.

    Raises:
        NotOrdinary: If the arrangement is not ordinary
        NoSingularities: If f0 = 0
    """
    _require_singularities(arr)
    c_square = self_intersection(arr)
    groups = list(reversed(arr.spectrum.counts))

    best: Optional[Rat] = None
    best_taken: Tuple[Tuple[int, int], ...] = ()

    def consider(value: Rat, taken: List[Tuple[int, int]]):
        nonlocal best, best_taken
        if best is None or value < best:
            best = value
            best_taken = tuple(taken)

    top_k, _ = groups[0]
    consider(Rat(c_square - top_k * top_k, 1), [(top_k, 1)])

    taken: List[Tuple[int, int]] = []
    size = 0
    subtracted = 0
    for k, t in groups:
        taken.append((k, t))
        size += t
        subtracted += k * k * t
        consider(Rat(c_square - subtracted, size), taken)

    logger.debug(f"{arr.label}: h_index evaluated {len(groups) + 1} candidate sizes")
    return HIndex(best, Witness(best_taken))


def h_index_exhaustive(arr: Arrangement) -> HIndex:
    """
    H-index by enumerating all 2^f0 - 1 nonempty subsets of Sing(C)

    Reference oracle for h_index; limited to f0 <= Config.EXHAUSTIVE_LIMIT.
    Ties keep the smallest subset, then the one found first.

    Raises:
        BadInput: If the arrangement has too many singular points
    """
    _require_singularities(arr)
    points = arr.spectrum.points()
    if len(points) > Config.EXHAUSTIVE_LIMIT:
        raise BadInput(
            f"{arr.label}: exhaustive search limited to {Config.EXHAUSTIVE_LIMIT} points, "
            f"got {len(points)}"
        )
    c_square = self_intersection(arr)

    n_points = len(points)
    squares = [0] * (1 << n_points)
    sizes = [0] * (1 << n_points)
    best_num, best_den, best_mask = None, 1, 0
    for mask in range(1, 1 << n_points):
        low = mask & -mask
        index = low.bit_length() - 1
        rest = mask ^ low
        squares[mask] = squares[rest] + points[index] * points[index]
        sizes[mask] = sizes[rest] + 1

        num, den = c_square - squares[mask], sizes[mask]
        if best_num is None or num * best_den < best_num * den or (
            num * best_den == best_num * den and den < best_den
        ):
            best_num, best_den, best_mask = num, den, mask

    counts: Dict[int, int] = {}
    for index, m in enumerate(points):
        if best_mask >> index & 1:
            counts[m] = counts.get(m, 0) + 1
    taken = tuple(sorted(counts.items(), reverse=True))
    return HIndex(Rat(best_num, best_den), Witness(taken))


def pullback(arr: Arrangement, degree: int) -> Arrangement:
    """
    Pull an arrangement back along a finite map of the given degree

    Each point has `degree` preimages of the same multiplicity, so every
    t_k, every component count, C^2 and g - 1 are multiplied by the degree.
    Abelian arrangements stay abelian; other surfaces become generic.

    Raises:
        BadInput: If degree < 1
    """
    if degree < 1:
        raise BadInput(f"Pullback degree must be >= 1, got {degree}")
    if degree == 1:
        return arr
    surface = arr.surface if arr.surface == SurfaceKind.ABELIAN else SurfaceKind.GENERIC
    return arr.scaled(degree, surface)


def isogeny_scale(arr: Arrangement, m: int) -> Arrangement:
    """
    Pull an abelian arrangement back along an isogeny of degree m

    Raises:
        WrongSurface: If the surface is not abelian
        BadInput: If m < 1
    """
    require_abelian(arr)
    return pullback(arr, m)
