"""
Inequality engine: every bound on singularity spectra as an exact predicate

Each bound reports both sides. Bounds are evaluated even when their
hypotheses fail, with `applicable` carrying the hypothesis check, so the
engine also works as a feasibility filter on hypothetical spectra.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional

from harbourne.arrangement import (
    Arrangement,
    SingularitySpectrum,
    f_moments,
    require_abelian,
    require_ordinary,
)
from harbourne.exceptions import BadInput, NoSingularities
from harbourne.logging_config import HarbourneLogger
from harbourne.rational import Rat

logger = HarbourneLogger.get_logger(__name__)

ELLIPTIC = "elliptic"
GENUS = "genus"
ABELIAN_SPECTRUM = "abelian_spectrum"
B1 = "b1"
B2 = "b2"
ZZBAUER = "zzbauer"
HIRZ86 = "hirz86"

# Fixed reporting order
BOUND_ORDER = (ELLIPTIC, GENUS, ABELIAN_SPECTRUM, B1, B2, ZZBAUER, HIRZ86)


@dataclass(frozen=True)
class BoundResult:
    """
    One inequality lhs >= rhs, evaluated exactly

    Attributes:
        name: Bound identifier, one of BOUND_ORDER
        lhs: Left-hand side
        rhs: Right-hand side
        applicable: Whether the hypotheses of the inequality hold
        applicability_note: Hypotheses in words
        floor: Optional further lower bound for rhs (the -4 of the elliptic chain)
    """

    name: str
    lhs: Rat
    rhs: Rat
    applicable: bool = True
    applicability_note: str = ""
    floor: Optional[Rat] = None
    relation: str = ">="

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def slack(self) -> Rat:
        return self.lhs - self.rhs

    @property
    def above_floor(self) -> Optional[bool]:
        """rhs >= floor, when a floor is recorded"""
        if self.floor is None:
            return None
        return self.rhs >= self.floor


class LineBounds(NamedTuple):
    """H(C, Sing C) of a line arrangement with its two lower bounds"""

    h_sing: Rat
    b1: BoundResult
    b2: BoundResult
    b2_ge_b1: bool


class HirzebruchLineChecks(NamedTuple):
    zzbauer: BoundResult
    hirz86: BoundResult


def _tail(spectrum: SingularitySpectrum, weight) -> int:
    return sum(weight(k) * t for k, t in spectrum.items() if k >= 5)


def _require_points(f0: int) -> None:
    if f0 == 0:
        raise NoSingularities("Bound needs at least one singular point")


def elliptic_bound(spectrum: SingularitySpectrum, g: int) -> BoundResult:
    """
    -f1/f0 >= (t2 + t3/4 - 7g + 7)/f0 - 4

    For g = 1 the right-hand side is itself >= -4, with equality iff
    t2 = t3 = 0; that floor is recorded.

    Raises:
        NoSingularities: If f0 = 0
    """
    f0, f1, _ = f_moments(spectrum)
    _require_points(f0)
    numerator = spectrum.t(2) + Rat(spectrum.t(3), 4) - 7 * g + 7
    return BoundResult(
        name=ELLIPTIC,
        lhs=Rat(-f1, f0),
        rhs=numerator / f0 - 4,
        applicable=True,
        applicability_note="ordinary arrangement on an abelian surface",
        floor=Rat(-4) if g == 1 else None,
    )


def genus_bound(arr: Arrangement) -> BoundResult:
    """
    (2g-2-f1)/f0 >= (2 t2 + 9/8 t3 + 1/2 t4 + 8 - 8g)/f0 - 9/2

    The left-hand side is H(C, Sing C) on an abelian surface.

    Raises:
        WrongSurface, NotOrdinary, NoSingularities
    """
    require_abelian(arr)
    require_ordinary(arr)
    f0, f1, _ = arr.moments
    _require_points(f0)
    spectrum = arr.spectrum
    gm1 = arr.genus_minus_one
    numerator = (
        2 * spectrum.t(2) + Rat(9, 8) * spectrum.t(3) + Rat(1, 2) * spectrum.t(4) - 8 * gm1
    )
    return BoundResult(
        name=GENUS,
        lhs=Rat(2 * gm1 - f1, f0),
        rhs=numerator / f0 - Rat(9, 2),
        applicable=True,
        applicability_note="ordinary arrangement on an abelian surface",
    )


def abelian_spectrum_ineq(spectrum: SingularitySpectrum, g: int) -> BoundResult:
    """10g - 10 + t2 + 3/4 t3 >= sum_{k>=5} (2k-9) t_k"""
    return BoundResult(
        name=ABELIAN_SPECTRUM,
        lhs=10 * g - 10 + spectrum.t(2) + Rat(3, 4) * spectrum.t(3),
        rhs=Rat(_tail(spectrum, lambda k: 2 * k - 9)),
        applicable=True,
        applicability_note="ordinary arrangement on an abelian surface",
    )


def _line_hypotheses(d: int, spectrum: SingularitySpectrum, depth: int) -> bool:
    return d >= 6 and all(spectrum.t(d - i) == 0 for i in range(depth))


def hirzebruch_line_checks(d: int, spectrum: SingularitySpectrum) -> HirzebruchLineChecks:
    """
    Hirzebruch's inequalities for d lines in the plane

    zzbauer: t2 + 3/4 t3 >= d + sum_{k>=5} (k-4) t_k,
        needs d >= 6 and t_d = t_(d-1) = t_(d-2) = t_(d-3) = 0
    hirz86: t2 + 3/4 t3 >= d + sum_{k>=5} (2k-9) t_k,
        needs d >= 6 and t_d = t_(d-1) = t_(d-2) = 0

    Raises:
        BadInput: If d < 2
    """
    if d < 2:
        raise BadInput(f"Line arrangement needs d >= 2, got {d}")
    lhs = spectrum.t(2) + Rat(3, 4) * spectrum.t(3)
    zzbauer = BoundResult(
        name=ZZBAUER,
        lhs=lhs,
        rhs=Rat(d + _tail(spectrum, lambda k: k - 4)),
        applicable=_line_hypotheses(d, spectrum, 4),
        applicability_note="d >= 6 and no points of multiplicity d, d-1, d-2, d-3",
    )
    hirz86 = BoundResult(
        name=HIRZ86,
        lhs=lhs,
        rhs=Rat(d + _tail(spectrum, lambda k: 2 * k - 9)),
        applicable=_line_hypotheses(d, spectrum, 3),
        applicability_note="d >= 6 and no points of multiplicity d, d-1, d-2",
    )
    return HirzebruchLineChecks(zzbauer, hirz86)


def line_bounds(d: int, spectrum: SingularitySpectrum) -> LineBounds:
    """
    H(C, Sing C) = (d - f1)/f0 of d lines and its lower bounds

    B1 = -4 + (2d + t2 + t3/4)/f0 follows from zzbauer,
    B2 = (3/2 d + 2 t2 + 9/8 t3 + 1/2 t4)/f0 - 9/2 from hirz86, and each
    inherits the applicability of the inequality it rests on.

    Raises:
        BadInput: If d < 2
        NoSingularities: If f0 = 0
    """
    checks = hirzebruch_line_checks(d, spectrum)
    f0, f1, _ = f_moments(spectrum)
    _require_points(f0)
    t2, t3, t4 = spectrum.t(2), spectrum.t(3), spectrum.t(4)

    h_sing = Rat(d - f1, f0)
    b1_value = -4 + (2 * d + t2 + Rat(t3, 4)) / f0
    b2_value = (Rat(3, 2) * d + 2 * t2 + Rat(9, 8) * t3 + Rat(1, 2) * t4) / f0 - Rat(9, 2)

    b1 = BoundResult(
        name=B1,
        lhs=h_sing,
        rhs=b1_value,
        applicable=checks.zzbauer.applicable,
        applicability_note=checks.zzbauer.applicability_note,
    )
    b2 = BoundResult(
        name=B2,
        lhs=h_sing,
        rhs=b2_value,
        applicable=checks.hirz86.applicable,
        applicability_note=checks.hirz86.applicability_note,
    )
    logger.debug(f"line bounds d={d} {spectrum}: H={h_sing} B1={b1_value} B2={b2_value}")
    return LineBounds(h_sing, b1, b2, b2_value >= b1_value)
