"""
Catalog of named configurations and the C_n family of plane cubics

Spectra of the line configurations are stored as constants. Each one is
certified by the incidence identity sum k(k-1) t_k = d(d-1) and by the
recorded H and bound values, rather than built from coordinates.

Catalog names are stable public identifiers:
    dual-hesse, hirzebruch-gauss, holzapfel-eisenstein, product-M-N,
    diagonal, klein, fermat18, wiman, generic-N, cn-N, hn-N
"""

import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Dict, List, Mapping, NamedTuple, Tuple, Union

from harbourne.arrangement import (
    Arrangement,
    ComponentClass,
    SingularitySpectrum,
    SurfaceKind,
    require_valid,
)
from harbourne.exceptions import BadParameter, UnknownCatalogName
from harbourne.logging_config import HarbourneLogger
from harbourne.rational import Rat

logger = HarbourneLogger.get_logger(__name__)

Claim = Union[Rat, bool]

LINE = ComponentClass(genus=0, self_intersection=1)

PAIRING_STATED = "stated"
PAIRING_INCIDENCE = "incidence"

# sum_{i<j} C_i.C_j = coefficient * (n^2 - 3) on the blow-up
_PAIRING_COEFFICIENTS = {PAIRING_STATED: 4, PAIRING_INCIDENCE: 12}


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named arrangement with the values claimed for it

    Attributes:
        name: Catalog identifier
        arrangement: The arrangement, validated at its ordinariness level
        expected: Quantity name -> claimed exact value
    """

    name: str
    arrangement: Arrangement
    expected: Mapping[str, Claim] = field(default_factory=dict)


class CnFamily(NamedTuple):
    """C_n in the plane and the elliptic configuration H_n it comes from"""

    plane: Arrangement
    on_z: Arrangement


class CnValue(NamedTuple):
    """H(C_n, Sing C_n) with its numerator and denominator"""

    h: Rat
    c_bar_square: int
    s: int


def _lines(label: str, d: int, spectrum: Dict[int, int]) -> Arrangement:
    return Arrangement(
        label=label,
        surface=SurfaceKind.PROJECTIVE_PLANE,
        ordinary=True,
        components=(ComponentClass(LINE.genus, LINE.self_intersection, d),),
        spectrum=SingularitySpectrum.of(spectrum),
    )


def _elliptic(label: str, d: int, spectrum: Dict[int, int]) -> Arrangement:
    return Arrangement(
        label=label,
        surface=SurfaceKind.ABELIAN,
        ordinary=True,
        components=(ComponentClass(genus=1, self_intersection=0, count=d),),
        spectrum=SingularitySpectrum.of(spectrum),
    )


def dual_hesse() -> Arrangement:
    """The 9 lines and 12 triple points of the dual Hesse configuration"""
    return _lines("dual-hesse", 9, {3: 12})


def hirzebruch_gauss() -> Arrangement:
    """4 elliptic curves through a single 4-point on the Gaussian abelian surface"""
    return _elliptic("hirzebruch-gauss", 4, {4: 1})


def holzapfel_eisenstein() -> Arrangement:
    """6 elliptic curves with three 4-points on the Eisenstein abelian surface"""
    return _elliptic("holzapfel-eisenstein", 6, {4: 3})


def product_fibers(m: int, n: int) -> Arrangement:
    """
    m fibres of E x E' -> E and n fibres of E x E' -> E', meeting in m n nodes

    Raises:
        BadParameter: If m or n < 1
    """
    if m < 1 or n < 1:
        raise BadParameter(f"product fibres need m, n >= 1, got {m}, {n}")
    return _elliptic(f"product-{m}-{n}", m + n, {2: m * n})


def diagonal_config() -> Arrangement:
    """Diagonal and the two coordinate curves of E x E, one 3-point at the origin"""
    return _elliptic("diagonal", 3, {3: 1})


def klein() -> Arrangement:
    """Klein configuration: 21 lines, 28 triple and 21 quadruple points"""
    return _lines("klein", 21, {3: 28, 4: 21})


def fermat18() -> Arrangement:
    """Fermat configuration of 18 lines: 36 triple and 3 sextuple points"""
    return _lines("fermat18", 18, {3: 36, 6: 3})


def wiman() -> Arrangement:
    """Wiman configuration: 45 lines with 120 triple, 45 quadruple and 36 quintuple points"""
    return _lines("wiman", 45, {3: 120, 4: 45, 5: 36})


def generic_lines(d: int) -> Arrangement:
    """
    d lines in general position

    Raises:
        BadParameter: If d < 2
    """
    if d < 2:
        raise BadParameter(f"generic arrangement needs d >= 2 lines, got {d}")
    return _lines(f"generic-{d}", d, {2: d * (d - 1) // 2})


def _require_cn_parameter(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n <= 0 or n % 3 != 0:
        raise BadParameter(f"C_n needs n a positive multiple of 3, got {n!r}")


def cn_h_value(n: int, pairing: str = PAIRING_STATED) -> CnValue:
    """
    H(C_n, Sing C_n) from the blow-up bookkeeping of the C_n family

    Each strict transform has C-bar_i^2 = -(n^2 - 9). With the stated
    intersection sum 4 (n^2 - 3) this gives
    C-bar^2 = -(4/3)(n^2 - 3)(n^2 - 15), over s = 12 + (1/3)(n^2 - 3)(n^2 - 9)
    points. pairing="incidence" uses the sum 12 (n^2 - 3) implied by the
    3-point count instead.

    Raises:
        BadParameter: If n is not a positive multiple of 3, or pairing is unknown
    """
    _require_cn_parameter(n)
    if pairing not in _PAIRING_COEFFICIENTS:
        raise BadParameter(f"Unknown pairing {pairing!r}")
    m = n * n - 3
    components = 4 * m // 3
    pairs = _PAIRING_COEFFICIENTS[pairing] * m
    c_bar_square = -(n * n - 9) * components + 2 * pairs
    s = 12 + m * (n * n - 9) // 3
    return CnValue(Rat(c_bar_square, s), c_bar_square, s)


def cn_gap(n: int) -> Rat:
    """
    Closed form of H(C_n, Sing C_n) + 4 = (24 n^2 + 72)/((n^2 - 3)(n^2 - 9) + 36)

    Raises:
        BadParameter: If n is not a positive multiple of 3
    """
    _require_cn_parameter(n)
    return Rat(24 * n * n + 72, (n * n - 3) * (n * n - 9) + 36)


def cn_family(n: int) -> CnFamily:
    """
    The configuration C_n of plane cubics and its model H_n on the blow-up Z

    C_n: (4/3)(n^2 - 3) smooth cubics with (1/3)(n^2 - 3)(n^2 - 9) 4-points and
    the 12 dual Hesse points of multiplicity n^2 - 3. Those 12 points carry
    infinitely near structure, so C_n is stored as non-ordinary with the C^2
    that reproduces cn_h_value over all its singular points.

    H_n: the same number of elliptic curves on the blow-up of the plane at the
    12 points, with 4 (n^2 - 3) 3-points and the same 4-points.

    Raises:
        BadParameter: If n is not a positive multiple of 3
    """
    _require_cn_parameter(n)
    m = n * n - 3
    d = 4 * m // 3
    t4 = m * (n * n - 9) // 3
    plane_spectrum = SingularitySpectrum.of({4: t4, m: 12})
    f2 = sum(k * k * t for k, t in plane_spectrum.items())

    plane = Arrangement(
        label=f"cn-{n}",
        surface=SurfaceKind.PROJECTIVE_PLANE,
        ordinary=False,
        components=(ComponentClass(genus=1, self_intersection=9, count=d),),
        spectrum=plane_spectrum,
        c_square_override=cn_h_value(n).c_bar_square + f2,
    )
    on_z = Arrangement(
        label=f"hn-{n}",
        surface=SurfaceKind.GENERIC,
        ordinary=True,
        components=(ComponentClass(genus=1, self_intersection=0, count=d),),
        spectrum=SingularitySpectrum.of({3: 4 * m, 4: t4}),
    )
    return CnFamily(plane, on_z)


def _fixed_entries() -> List[CatalogEntry]:
    return [
        CatalogEntry(
            "dual-hesse",
            dual_hesse(),
            {"h_at_sing": Rat(-9, 4), "b2": Rat(-9, 4)},
        ),
        CatalogEntry(
            "hirzebruch-gauss",
            hirzebruch_gauss(),
            {"h_index": Rat(-4), "ball_quotient": True, "defect_n3": Rat(0)},
        ),
        CatalogEntry(
            "holzapfel-eisenstein",
            holzapfel_eisenstein(),
            {"h_index": Rat(-4), "ball_quotient": True, "defect_n3": Rat(0)},
        ),
        CatalogEntry("diagonal", diagonal_config(), {"h_index": Rat(-3)}),
        CatalogEntry(
            "klein",
            klein(),
            {"h_at_sing": Rat(-3), "h_index": Rat(-3), "b1": Rat(-3), "b2": Rat(-3)},
        ),
        CatalogEntry(
            "fermat18",
            fermat18(),
            {"h_at_sing": Rat(-36, 13), "b1": Rat(-37, 13), "b2": Rat(-36, 13)},
        ),
        CatalogEntry("wiman", wiman(), {"h_index": Rat(-225, 67)}),
    ]


def _product_entry(m: int, n: int) -> CatalogEntry:
    return CatalogEntry(f"product-{m}-{n}", product_fibers(m, n), {"h_index": Rat(-2)})


def _generic_entry(d: int) -> CatalogEntry:
    return CatalogEntry(f"generic-{d}", generic_lines(d), {})


def _cn_entry(n: int) -> CatalogEntry:
    return CatalogEntry(
        f"cn-{n}", cn_family(n).plane, {"h_at_sing": cn_h_value(n).h, "gap": cn_gap(n)}
    )


def _hn_entry(n: int) -> CatalogEntry:
    return CatalogEntry(f"hn-{n}", cn_family(n).on_z, {})


# Parametric families: pattern, constructor, example name for listings
FAMILIES: Tuple[Tuple["re.Pattern", Callable[..., CatalogEntry], str], ...] = (
    (re.compile(r"^product-(\d+)-(\d+)$"), _product_entry, "product-M-N"),
    (re.compile(r"^generic-(\d+)$"), _generic_entry, "generic-N"),
    (re.compile(r"^cn-(\d+)$"), _cn_entry, "cn-N"),
    (re.compile(r"^hn-(\d+)$"), _hn_entry, "hn-N"),
)

CATALOG: Mapping[str, CatalogEntry] = MappingProxyType(
    {entry.name: entry for entry in _fixed_entries()}
)


def resolve(name: str) -> CatalogEntry:
    """
    Look up a catalog entry by name, building parametric families on demand

    Raises:
        UnknownCatalogName: If the name matches no entry or family
        BadParameter: If a family parameter is invalid
    """
    if name in CATALOG:
        entry = CATALOG[name]
    else:
        for pattern, build, _ in FAMILIES:
            match = pattern.match(name)
            if match:
                entry = build(*(int(group) for group in match.groups()))
                break
        else:
            raise UnknownCatalogName(f"Unknown catalog name: {name!r}")
    logger.debug(f"Resolved catalog entry {name}")
    return CatalogEntry(entry.name, require_valid(entry.arrangement), entry.expected)
