"""
Chern invariants of (Z/nZ)^d covers branched over abelian-surface arrangements

Let X_n be the resolution of the (Z/nZ)^d cover of an abelian surface A
branched with index n over each of the d components of C, after blowing up
the points of multiplicity >= 3. Its Euler number and canonical square are
quadratics in n once divided by n^(d-2); every value here is reported in that
normalized form.

Miyaoka's theorem assumes non-negative Kodaira dimension. That holds for
covers of abelian surfaces and is not checked combinatorially.
"""

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

from harbourne import polynomials
from harbourne.arrangement import (
    Arrangement,
    require_abelian,
    require_ordinary,
    self_intersection,
)
from harbourne.config import Config
from harbourne.exceptions import BadInput, BadMultiplicity, BadOrder, NotElliptic
from harbourne.logging_config import HarbourneLogger
from harbourne.rational import Rat

logger = HarbourneLogger.get_logger(__name__)


@dataclass(frozen=True)
class CoverInvariants:
    """
    Normalized invariants of the cover X_n

    Attributes:
        n: Branching order
        d: Number of branch components
        euler_norm: e(X_n) / n^(d-2)
        k2_norm: K^2 / n^(d-2)
        defect_norm: (3 c2 - K^2) / n^(d-2)
    """

    n: int
    d: int
    euler_norm: Rat
    k2_norm: Rat
    defect_norm: Rat

    @property
    def scale(self) -> Rat:
        """n^(d-2), the factor between normalized and actual values"""
        return Rat(self.n) ** (self.d - 2)

    @property
    def euler(self) -> Rat:
        return self.euler_norm * self.scale

    @property
    def k2(self) -> Rat:
        return self.k2_norm * self.scale

    @property
    def defect(self) -> Rat:
        return self.defect_norm * self.scale

    @property
    def chern_ratio(self) -> Optional[Rat]:
        """c1^2 / c2, or None when the Euler number vanishes"""
        if self.euler_norm == 0:
            return None
        return self.k2_norm / self.euler_norm


class RefinedDefect(NamedTuple):
    """Miyaoka-Yau defect against the refined right-hand side at n = 2 or 3"""

    n: int
    defect: Rat
    refined_rhs: Rat

    @property
    def holds(self) -> bool:
        return self.defect >= self.refined_rhs


@dataclass(frozen=True)
class BallQuotientReport:
    """
    Ball-quotient criterion on the blow-up X of A at Sing(C)

    Attributes:
        log_ck_square: (K_X + C-bar)^2 = f1 - f0
        log_euler: e(X minus C-bar) = f0
        is_ball_quotient: 4 f0 = f1 with only 4-points
        log_chern_equality: (K_X + C-bar)^2 = 3 e(X minus C-bar)
        symbolic_identity: defect polynomial equals f0 (n-3)^2 identically
        defect_violations: (n, defect) pairs where defect != f0 (n-3)^2
    """

    log_ck_square: int
    log_euler: int
    is_ball_quotient: bool
    log_chern_equality: bool
    symbolic_identity: Optional[bool] = None
    defect_violations: Tuple[Tuple[int, Rat], ...] = ()


def _require_cover_input(arr: Arrangement, n: int) -> None:
    require_abelian(arr)
    require_ordinary(arr)
    if arr.d < 2:
        raise BadInput(f"{arr.label}: covers need d >= 2 branch components, got {arr.d}")
    if n < 2:
        raise BadInput(f"Branching order must be >= 2, got {n}")


def exceptional_fiber(k: int, n: int) -> Tuple[int, int]:
    """
    Coefficients of n^(k-2) in e(F_p) and (F_p)^2 over a k-point

    F_p is a (Z/nZ)^(k-1) cover of the exceptional curve ramified at k
    points, so e(F_p) = n^(k-2) (2n + k(1-n)) and (F_p)^2 = -n^(k-2).

    Raises:
        BadMultiplicity: If k < 3 (nodes are not blown up)
        BadInput: If n < 2
    """
    if k < 3:
        raise BadMultiplicity(f"Exceptional fibres exist over k >= 3 points, got k={k}")
    if n < 2:
        raise BadInput(f"Branching order must be >= 2, got {n}")
    return 2 * n + k * (1 - n), -1


def euler_cover(arr: Arrangement, n: int) -> Rat:
    """
    e(X_n)/n^(d-2) = (2g-2+f1-f0) n^2 + 2(1-g+f0-f1) n + f1 - t2

    Raises:
        WrongSurface, NotOrdinary, BadInput
    """
    _require_cover_input(arr, n)
    f0, f1, _ = arr.moments
    gm1 = arr.genus_minus_one
    t2 = arr.spectrum.t(2)
    return Rat((2 * gm1 + f1 - f0) * n * n + 2 * (-gm1 + f0 - f1) * n + f1 - t2)


def euler_cover_by_strata(arr: Arrangement, n: int) -> Rat:
    """
    e(X_n)/n^(d-2) assembled over the strata of the cover

    The complement of C contributes n^2 e(A minus C), the smooth part of C
    contributes n e(C minus Sing C), each node one point, and each k-point
    with k >= 3 the exceptional fibre Euler factor.
    """
    _require_cover_input(arr, n)
    f0, f1, _ = arr.moments
    gm1 = arr.genus_minus_one
    total = n * n * (2 * gm1 + f1 - f0) + n * (-2 * gm1 - f1) + arr.spectrum.t(2)
    for k, t in arr.spectrum.items():
        if k >= 3:
            euler_factor, _ = exceptional_fiber(k, n)
            total += t * euler_factor
    return Rat(total)


def canonical_square_cover(arr: Arrangement, n: int) -> Rat:
    """
    K^2/n^(d-2) = (2g-2+3f1-4f0) n^2 + 4(f0-f1-g+1) n - f0 + f1 + t2 + 2g - 2

    Raises:
        WrongSurface, NotOrdinary, BadInput
    """
    _require_cover_input(arr, n)
    f0, f1, _ = arr.moments
    gm1 = arr.genus_minus_one
    t2 = arr.spectrum.t(2)
    return Rat(
        (2 * gm1 + 3 * f1 - 4 * f0) * n * n + 4 * (f0 - f1 - gm1) * n - f0 + f1 + t2 + 2 * gm1
    )


def canonical_square_by_divisor(arr: Arrangement, n: int) -> Rat:
    """
    K^2/n^(d-2) from the pulled-back canonical divisor

    K is numerically the pullback of sum_p (2n-1+k_p(1-n))/n E_p +
    (n-1)/n pi^*C, whose square times n^2 is
    -sum_{k>=3} (2n-1+k(1-n))^2 t_k + (n-1)^2 C^2.
    """
    _require_cover_input(arr, n)
    total = (n - 1) ** 2 * self_intersection(arr)
    for k, t in arr.spectrum.items():
        if k >= 3:
            total -= (2 * n - 1 + k * (1 - n)) ** 2 * t
    return Rat(total)


def my_defect(arr: Arrangement, n: int) -> Rat:
    """
    Miyaoka-Yau defect (3 c2 - K^2)/n^(d-2)
    = (f0+4g-4) n^2 + 2(f0-f1-g+1) n + 2 f1 + f0 - 4 t2 - 2g + 2

    Raises:
        WrongSurface, NotOrdinary, BadInput
    """
    _require_cover_input(arr, n)
    f0, f1, _ = arr.moments
    gm1 = arr.genus_minus_one
    t2 = arr.spectrum.t(2)
    return Rat((f0 + 4 * gm1) * n * n + 2 * (f0 - f1 - gm1) * n + 2 * f1 + f0 - 4 * t2 - 2 * gm1)


def cover_invariants(arr: Arrangement, n: int) -> CoverInvariants:
    """Bundle the normalized Euler number, canonical square and defect"""
    invariants = CoverInvariants(
        n=n,
        d=arr.d,
        euler_norm=euler_cover(arr, n),
        k2_norm=canonical_square_cover(arr, n),
        defect_norm=my_defect(arr, n),
    )
    logger.debug(
        f"{arr.label}: n={n} e={invariants.euler_norm} K2={invariants.k2_norm} "
        f"defect={invariants.defect_norm}"
    )
    return invariants


def miyaoka_refined_rhs(m_minus2_curves: int, elliptic_self_ints: Sequence[int]) -> Rat:
    """
    Lower bound (9/2) m - sum D_j^2 for 3 c2 - K^2 on a surface carrying m
    disjoint (-2)-curves and disjoint elliptic curves D_j

    Raises:
        BadInput: If m < 0 or an elliptic self-intersection is not negative
    """
    if m_minus2_curves < 0:
        raise BadInput(f"Number of (-2)-curves must be >= 0, got {m_minus2_curves}")
    positive = [s for s in elliptic_self_ints if s >= 0]
    if positive:
        raise BadInput(f"Elliptic curve self-intersections must be negative, got {positive}")
    return Rat(9, 2) * m_minus2_curves - sum(elliptic_self_ints)


def refined_rhs_normalized(arr: Arrangement, n: int) -> Rat:
    """
    Refined Miyaoka right-hand side divided by n^(d-2)

    n = 2: 2^(d-3) t3 disjoint (-2)-curves and 2^(d-4) t4 elliptic curves of
    self-intersection -4, giving (9/4) t3 + t4.
    n = 3: 3^(d-3) t3 elliptic curves of self-intersection -3, giving t3.

    Raises:
        BadOrder: If n is not 2 or 3
    """
    t3 = arr.spectrum.t(3)
    if n == 2:
        return Rat(9, 4) * t3 + arr.spectrum.t(4)
    if n == 3:
        return Rat(t3)
    raise BadOrder(f"Refined Miyaoka bound exists for n = 2 or 3, got {n}")


def refined_defect_check(arr: Arrangement, n: int) -> RefinedDefect:
    """
    Compare the normalized defect with the refined Miyaoka right-hand side

    Raises:
        BadOrder: If n is not 2 or 3
        WrongSurface, NotOrdinary, BadInput
    """
    if n not in (2, 3):
        raise BadOrder(f"Refined Miyaoka bound exists for n = 2 or 3, got {n}")
    return RefinedDefect(n, my_defect(arr, n), refined_rhs_normalized(arr, n))


def ball_quotient_check(arr: Arrangement) -> BallQuotientReport:
    """
    Ball-quotient criterion for an elliptic arrangement on an abelian surface

    (X, C-bar) compactifies a ball quotient exactly when
    (K_X + C-bar)^2 = 3 e(X minus C-bar), i.e. f1 - f0 = 3 f0, which forces
    only 4-points. When it holds, the defect of every cover must equal
    f0 (n-3)^2, vanishing at n = 3; any mismatch is reported.

    Raises:
        WrongSurface, NotOrdinary
        NotElliptic: If a component has genus != 1
    """
    require_abelian(arr)
    require_ordinary(arr)
    if not arr.is_elliptic():
        raise NotElliptic(f"{arr.label}: ball-quotient criterion needs elliptic components")

    f0, f1, _ = arr.moments
    log_chern_equality = f1 - f0 == 3 * f0
    is_ball_quotient = log_chern_equality and arr.spectrum.only(4) and f0 > 0
    if not is_ball_quotient:
        return BallQuotientReport(f1 - f0, f0, False, log_chern_equality)

    violations: List[Tuple[int, Rat]] = []
    symbolic = None
    if arr.d >= 2:
        for n in Config.DEFECT_CHECK_RANGE:
            defect = my_defect(arr, n)
            if defect != f0 * (n - 3) ** 2:
                violations.append((n, defect))
        symbolic = polynomials.defect_is_ball_quotient_square(arr)
    if violations:
        logger.warning(f"{arr.label}: ball-quotient defect identity fails at {violations}")
    return BallQuotientReport(f1 - f0, f0, True, log_chern_equality, symbolic, tuple(violations))
