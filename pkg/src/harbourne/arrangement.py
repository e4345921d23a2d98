"""
Arrangement data model: singularity spectra, component classes and the
combinatorial bookkeeping shared by every computation.

An arrangement is stored purely numerically. Components with identical
(genus, self-intersection) are grouped into one class with a count, and the
singular points are summarised by the spectrum k -> t_k of ordinary k-points.
No coordinates or equations are represented.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple

from harbourne.exceptions import NotOrdinary, ValidationError, WrongSurface
from harbourne.logging_config import HarbourneLogger

logger = HarbourneLogger.get_logger(__name__)


class SurfaceKind(str, Enum):
    """Ambient surface of an arrangement, valued by its document spelling"""

    PROJECTIVE_PLANE = "P2"
    ABELIAN = "abelian"
    GENERIC = "surface"


class Moments(NamedTuple):
    """Moments f_i = sum k^i t_k of a singularity spectrum"""

    f0: int
    f1: int
    f2: int


class EulerNumbers(NamedTuple):
    """Topological Euler numbers of C, of C minus Sing(C) and of A minus C"""

    e_c: int
    e_c_minus_sing: int
    e_complement: int


@dataclass(frozen=True)
class SingularitySpectrum:
    """
    Sparse map from multiplicity k >= 2 to the number t_k of k-points

    Stored as a sorted tuple of (k, t_k) pairs with zero counts dropped, so
    two spectra compare equal exactly when they describe the same points.
    """

    counts: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: Dict[int, int] = {}
        for k, t in self.counts:
            if isinstance(k, bool) or not isinstance(k, int) or k < 2:
                raise ValidationError(f"Multiplicity must be an integer >= 2, got {k!r}")
            if isinstance(t, bool) or not isinstance(t, int) or t < 0:
                raise ValidationError(f"Point count for k={k} must be an integer >= 0, got {t!r}")
            merged[k] = merged.get(k, 0) + t
        normalized = tuple(sorted((k, t) for k, t in merged.items() if t > 0))
        object.__setattr__(self, "counts", normalized)

    @classmethod
    def of(cls, mapping: Optional[Mapping[int, int]] = None) -> "SingularitySpectrum":
        """Build a spectrum from a {k: t_k} mapping"""
        return cls(tuple((mapping or {}).items()))

    def t(self, k: int) -> int:
        """Number of k-points"""
        for key, count in self.counts:
            if key == k:
                return count
        return 0

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self.counts)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    @property
    def multiplicities(self) -> Tuple[int, ...]:
        return tuple(k for k, _ in self.counts)

    @property
    def max_multiplicity(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    def is_empty(self) -> bool:
        return not self.counts

    def only(self, *multiplicities: int) -> bool:
        """True when every singular point has one of the given multiplicities"""
        return all(k in multiplicities for k, _ in self.counts)

    def scaled(self, factor: int) -> "SingularitySpectrum":
        """Spectrum with every t_k multiplied by factor"""
        return SingularitySpectrum(tuple((k, t * factor) for k, t in self.counts))

    def points(self) -> List[int]:
        """Multiplicities of the individual singular points, largest first"""
        expanded: List[int] = []
        for k, t in reversed(self.counts):
            expanded.extend([k] * t)
        return expanded

    def __str__(self) -> str:
        return "{" + ", ".join(f"{k}:{t}" for k, t in self.counts) + "}"


@dataclass(frozen=True)
class ComponentClass:
    """A group of `count` components sharing geometric genus and self-intersection"""

    genus: int
    self_intersection: int
    count: int = 1

    def __post_init__(self):
        for name in ("genus", "self_intersection", "count"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f"Component {name} must be an integer, got {value!r}")
        if self.genus < 0:
            raise ValidationError(f"Component genus must be >= 0, got {self.genus}")
        if self.count < 1:
            raise ValidationError(f"Component count must be >= 1, got {self.count}")

    def scaled(self, factor: int) -> "ComponentClass":
        return ComponentClass(self.genus, self.self_intersection, self.count * factor)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(): hard errors reject, warnings are advisory"""

    errors: Tuple[str, ...] = ()
    warnings: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class Arrangement:
    """
    A reduced curve C = sum C_i on a surface, described combinatorially

    Attributes:
        label: Display name
        surface: Ambient surface kind
        ordinary: True when every singular point is an ordinary k-point
        components: Component classes (genus, self-intersection, count)
        spectrum: Singularity spectrum k -> t_k
        c_square_override: C^2 to use instead of the ordinary bookkeeping;
            only for arrangements with ordinary = False
        warnings: Soft validation findings attached by the parser; not part
            of equality
    """

    label: str
    surface: SurfaceKind
    ordinary: bool
    components: Tuple[ComponentClass, ...]
    spectrum: SingularitySpectrum
    c_square_override: Optional[int] = None
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "surface", SurfaceKind(self.surface))
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def d(self) -> int:
        """Number of irreducible components"""
        return sum(c.count for c in self.components)

    @property
    def genus_minus_one(self) -> int:
        """g - 1 = sum over components of (g_i - 1)"""
        return sum(c.count * (c.genus - 1) for c in self.components)

    @property
    def genus(self) -> int:
        """Geometric genus g of C"""
        return self.genus_minus_one + 1

    @property
    def sum_self(self) -> int:
        """Sum of the component self-intersections C_i^2"""
        return sum(c.count * c.self_intersection for c in self.components)

    @property
    def moments(self) -> Moments:
        return f_moments(self.spectrum)

    def is_elliptic(self) -> bool:
        """True when every component has genus 1"""
        return all(c.genus == 1 for c in self.components)

    def is_line_arrangement(self) -> bool:
        """True for a union of lines in the projective plane"""
        return self.surface == SurfaceKind.PROJECTIVE_PLANE and all(
            c.genus == 0 and c.self_intersection == 1 for c in self.components
        )

    def scaled(self, factor: int, surface: Optional[SurfaceKind] = None) -> "Arrangement":
        """Arrangement with all linear data multiplied by factor"""
        override = None if self.c_square_override is None else self.c_square_override * factor
        return Arrangement(
            label=self.label if factor == 1 else f"{self.label}x{factor}",
            surface=surface or self.surface,
            ordinary=self.ordinary,
            components=tuple(c.scaled(factor) for c in self.components),
            spectrum=self.spectrum.scaled(factor),
            c_square_override=override,
        )

    def with_warnings(self, warnings: Iterable[str]) -> "Arrangement":
        return Arrangement(
            self.label,
            self.surface,
            self.ordinary,
            self.components,
            self.spectrum,
            self.c_square_override,
            tuple(warnings),
        )


def f_moments(spectrum: SingularitySpectrum) -> Moments:
    """
    Compute f0 = sum t_k, f1 = sum k t_k and f2 = sum k^2 t_k

    Args:
        spectrum: Singularity spectrum

    Returns:
        Moments (f0, f1, f2); (0, 0, 0) for an empty spectrum
    """
    f0 = f1 = f2 = 0
    for k, t in spectrum.items():
        f0 += t
        f1 += k * t
        f2 += k * k * t
    return Moments(f0, f1, f2)


def self_intersection(arr: Arrangement) -> int:
    """
    C^2 of the whole curve: sum C_i^2 + f2 - f1, or the stored override

    Raises:
        NotOrdinary: If the arrangement is not ordinary and has no override
    """
    if arr.c_square_override is not None:
        return arr.c_square_override
    if not arr.ordinary:
        raise NotOrdinary(f"{arr.label}: C^2 needs ordinary singularities or an override")
    _, f1, f2 = arr.moments
    return arr.sum_self + f2 - f1


def euler_numbers(arr: Arrangement) -> EulerNumbers:
    """
    Euler numbers e(C), e(C minus Sing C) and e(A minus C) on an abelian surface

    Raises:
        WrongSurface: If the surface is not abelian
        NotOrdinary: If the arrangement is not ordinary
    """
    require_abelian(arr)
    require_ordinary(arr)
    f0, f1, _ = arr.moments
    two_minus_2g = -2 * arr.genus_minus_one
    e_c = two_minus_2g + f0 - f1
    return EulerNumbers(e_c, two_minus_2g - f1, -e_c)


def require_ordinary(arr: Arrangement) -> None:
    if not arr.ordinary:
        raise NotOrdinary(f"{arr.label}: arrangement is not ordinary")


def require_abelian(arr: Arrangement) -> None:
    if arr.surface != SurfaceKind.ABELIAN:
        raise WrongSurface(f"{arr.label}: needs an abelian surface, got {arr.surface.value}")


def plane_degree(component: ComponentClass) -> Optional[int]:
    """Degree of a plane curve from C^2 = deg^2, or None if not a positive square"""
    if component.self_intersection <= 0:
        return None
    root = math.isqrt(component.self_intersection)
    return root if root * root == component.self_intersection else None


def determined_pair_count(arr: Arrangement) -> Optional[int]:
    """
    Sum over i < j of C_i.C_j when the surface determines it

    In the plane C_i.C_j = deg_i deg_j by Bezout; on other surfaces the
    component data does not fix the intersection numbers.
    """
    if arr.surface != SurfaceKind.PROJECTIVE_PLANE:
        return None
    degrees = [(plane_degree(c), c.count) for c in arr.components]
    if any(deg is None for deg, _ in degrees):
        return None
    total = sum(deg * count for deg, count in degrees)
    squares = sum(deg * deg * count for deg, count in degrees)
    return (total * total - squares) // 2


def validate(arr: Arrangement) -> ValidationReport:
    """
    Check an arrangement against the invariants of its surface kind

    Hard errors make the data unusable; warnings flag data that is accepted
    but breaks an identity ordinary arrangements satisfy.

    Args:
        arr: Arrangement to check

    Returns:
        ValidationReport with errors and warnings
    """
    errors: List[str] = []
    warnings: List[str] = []

    if arr.d < 1:
        errors.append("arrangement needs at least one component")

    if arr.surface == SurfaceKind.ABELIAN:
        for c in arr.components:
            if c.genus == 0:
                errors.append("abelian surfaces contain no rational curves (genus 0 component)")
            if c.self_intersection != 2 * c.genus - 2:
                errors.append(
                    f"adjunction fails on abelian surface: genus {c.genus} component has "
                    f"self-intersection {c.self_intersection}, expected {2 * c.genus - 2}"
                )
    elif arr.surface == SurfaceKind.PROJECTIVE_PLANE:
        for c in arr.components:
            deg = plane_degree(c)
            if deg is None:
                errors.append(
                    f"plane curve self-intersection must be a positive square, got {c.self_intersection}"
                )
            elif c.genus > (deg - 1) * (deg - 2) // 2:
                errors.append(
                    f"genus {c.genus} exceeds the arithmetic genus of a degree {deg} plane curve"
                )

    f0, f1, f2 = arr.moments
    pairs = determined_pair_count(arr)

    if arr.ordinary:
        if arr.c_square_override is not None:
            errors.append("c_square_override is only allowed when ordinary is false")
        if (f2 - f1) % 2 != 0:
            errors.append(f"f2 - f1 = {f2 - f1} must be even for ordinary singularities")
        elif pairs is not None and (f2 - f1) // 2 != pairs:
            errors.append(
                f"pair count (f2 - f1)/2 = {(f2 - f1) // 2} differs from the "
                f"intersection count {pairs} of the components"
            )
    else:
        if arr.c_square_override is None:
            warnings.append("non-ordinary arrangement without c_square_override: C^2 is undefined")
        if pairs is not None and (f2 - f1) != 2 * pairs:
            warnings.append(
                f"pair count identity does not hold: f2 - f1 = {f2 - f1}, "
                f"2 * intersection count = {2 * pairs}"
            )

    if arr.spectrum.max_multiplicity > arr.d:
        warnings.append(
            f"a {arr.spectrum.max_multiplicity}-point needs more branches than the "
            f"{arr.d} components provide"
        )

    for message in warnings:
        logger.debug(f"{arr.label}: {message}")

    return ValidationReport(tuple(errors), tuple(warnings))


def require_valid(arr: Arrangement) -> Arrangement:
    """
    Validate and return the arrangement with its warnings attached

    Raises:
        ValidationError: If any hard invariant fails
    """
    report = validate(arr)
    if not report.ok:
        raise ValidationError(f"{arr.label}: " + "; ".join(report.errors), report.errors)
    for message in report.warnings:
        logger.warning(f"{arr.label}: {message}")
    return arr.with_warnings(report.warnings)
