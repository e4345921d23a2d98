"""
Report building for the command-line surface

Each command produces a Record (analyze), a Table (catalog, sweep-cn, cover)
or a CheckReport (check), and each of those renders itself as human text,
CSV or JSON. Rationals are encoded exactly as "p/q" strings in CSV and JSON;
decimal approximations appear only as separate display columns or in
human output.
"""

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from harbourne import catalog, covers, polynomials
from harbourne.arrangement import (
    Arrangement,
    EulerNumbers,
    SurfaceKind,
    euler_numbers,
    self_intersection,
)
from harbourne.config import Config
from harbourne.document import parse_file
from harbourne.exceptions import BadParameter
from harbourne.h_index import HIndex, h_at_sing, h_index, h_index_exhaustive, pullback
from harbourne.inequalities import (
    ABELIAN_SPECTRUM,
    B1,
    B2,
    BOUND_ORDER,
    ELLIPTIC,
    GENUS,
    HIRZ86,
    ZZBAUER,
    BoundResult,
    abelian_spectrum_ineq,
    elliptic_bound,
    genus_bound,
    hirzebruch_line_checks,
    line_bounds,
)
from harbourne.logging_config import HarbourneLogger
from harbourne.rational import Rat, format_both, format_decimal, format_exact

logger = HarbourneLogger.get_logger(__name__)

CATALOG_PREFIX = "catalog:"

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

SWEEP_COLUMNS = ("n", "c_bar_square", "s", "h", "h_decimal", "gap", "gap_decimal")
COVER_COLUMNS = (
    "n",
    "euler_norm",
    "k2_norm",
    "defect_norm",
    "chern_ratio",
    "ball_quotient_defect",
)
CATALOG_COLUMNS = ("name", "surface", "d", "spectrum")
CHECK_COLUMNS = ("status", "statement", "detail")

BOUND_STATEMENTS = {
    ELLIPTIC: "-f1/f0 >= (t2 + t3/4 - 7g + 7)/f0 - 4",
    GENUS: "(2g - 2 - f1)/f0 >= (2 t2 + 9/8 t3 + 1/2 t4 + 8 - 8g)/f0 - 9/2",
    ABELIAN_SPECTRUM: "10g - 10 + t2 + 3/4 t3 >= sum_{k>=5} (2k - 9) t_k",
    B1: "H(C, Sing C) >= B1 = -4 + (2d + t2 + t3/4)/f0",
    B2: "H(C, Sing C) >= B2 = (3/2 d + 2 t2 + 9/8 t3 + 1/2 t4)/f0 - 9/2",
    ZZBAUER: "t2 + 3/4 t3 >= d + sum_{k>=5} (k - 4) t_k",
    HIRZ86: "t2 + 3/4 t3 >= d + sum_{k>=5} (2k - 9) t_k",
}

# Result each check line verifies, appended to the statement in brackets
ANCHOR_ELLIPTIC = "elliptic curve bound"
ANCHOR_GENUS = "genus bound"
ANCHOR_HIRZEBRUCH = "Hirzebruch inequality"
ANCHOR_EULER_COVER = "Euler number of the cover"
ANCHOR_CANONICAL_COVER = "canonical square of the cover"
ANCHOR_DEFECT = "Miyaoka-Yau defect of the cover"
ANCHOR_REFINED = "refined Miyaoka inequality"
ANCHOR_BALL_QUOTIENT = "ball-quotient criterion"
ANCHOR_H_INDEX = "H-index"

BOUND_ANCHORS = {
    ELLIPTIC: ANCHOR_ELLIPTIC,
    GENUS: ANCHOR_GENUS,
    ABELIAN_SPECTRUM: "abelian spectrum inequality",
    B1: "B1 bound from the strengthened Hirzebruch inequality",
    B2: "B2 bound from the Hirzebruch inequality",
    ZZBAUER: "strengthened Hirzebruch inequality",
    HIRZ86: ANCHOR_HIRZEBRUCH,
}

EXHAUSTIVE_STATEMENT = f"H-index equals the exhaustive subset minimum [{ANCHOR_H_INDEX}]"

# Normalized refined Miyaoka right-hand side by branching order
REFINED_RHS = {2: "9/4 t3 + t4", 3: "t3"}


# ---------------------------------------------------------------------------
# Cell encoding
# ---------------------------------------------------------------------------


def _text(value: Any, human: bool = False) -> str:
    if value is None:
        return "n/a" if human else ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Rat):
        return format_both(value) if human else format_exact(value)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, Rat):
        return format_exact(value)
    return value


def _csv_text(columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_text(value) for value in row])
    return buffer.getvalue()


def _json_text(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _require_format(fmt: str) -> None:
    if fmt not in Config.FORMATS:
        raise BadParameter(f"Unknown format {fmt!r}; choose from {', '.join(Config.FORMATS)}")


@dataclass
class Table:
    """Rows of cells under fixed columns"""

    columns: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def render(self, fmt: str) -> str:
        _require_format(fmt)
        if fmt == "csv":
            return _csv_text(self.columns, self.rows)
        if fmt == "json":
            return _json_text(
                [
                    {column: _json_value(value) for column, value in zip(self.columns, row)}
                    for row in self.rows
                ]
            )
        cells = [list(self.columns)] + [[_text(value) for value in row] for row in self.rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(self.columns))]
        lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
        return "\n".join(lines) + "\n"


@dataclass
class Record:
    """Ordered key/value report for a single arrangement"""

    fields: List[Tuple[str, Any]]
    warnings: Tuple[str, ...] = ()

    def get(self, key: str) -> Any:
        return dict(self.fields)[key]

    def render(self, fmt: str) -> str:
        _require_format(fmt)
        if fmt == "csv":
            return _csv_text([key for key, _ in self.fields], [[value for _, value in self.fields]])
        if fmt == "json":
            data: Dict[str, Any] = {key: _json_value(value) for key, value in self.fields}
            data["warnings"] = list(self.warnings)
            return _json_text(data)
        lines = [f"{key}: {_text(value, human=True)}" for key, value in self.fields]
        lines.extend(f"warning: {message}" for message in self.warnings)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Targets
# ---------------------------------------------------------------------------


def load_target(target: str) -> Tuple[Arrangement, Mapping[str, Any]]:
    """
    Resolve "catalog:NAME" or a document path to an arrangement and its claims

    Raises:
        UnknownCatalogName, BadParameter: For catalog targets
        ParseError, ValidationError: For document files
    """
    if target.startswith(CATALOG_PREFIX):
        entry = catalog.resolve(target[len(CATALOG_PREFIX):])
        return entry.arrangement, entry.expected
    return parse_file(target), {}


def _map_rows(compute: Callable[[int], Tuple[Any, ...]], values: Sequence[int], jobs: int):
    """Evaluate independent rows, in parallel when jobs > 1, keeping input order"""
    if jobs > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(compute, values))
    return [compute(value) for value in values]


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HReport:
    """Every quantity analyze reports for one arrangement; None marks n/a"""

    arrangement: Arrangement
    c_square: Optional[int]
    h_sing: Optional[Rat]
    h_index: Optional[HIndex]
    euler: Optional[EulerNumbers]
    bounds: Tuple[BoundResult, ...]
    ball_quotient: Optional[covers.BallQuotientReport]

    def bound(self, name: str) -> Optional[BoundResult]:
        for result in self.bounds:
            if result.name == name:
                return result
        return None


def _bounds_for(arr: Arrangement) -> List[BoundResult]:
    f0 = arr.moments.f0
    if not arr.ordinary or f0 == 0:
        return []
    found: Dict[str, BoundResult] = {}
    if arr.surface == SurfaceKind.ABELIAN:
        found[ELLIPTIC] = elliptic_bound(arr.spectrum, arr.genus)
        found[GENUS] = genus_bound(arr)
        found[ABELIAN_SPECTRUM] = abelian_spectrum_ineq(arr.spectrum, arr.genus)
    if arr.is_line_arrangement() and arr.d >= 2:
        lines = line_bounds(arr.d, arr.spectrum)
        checks = hirzebruch_line_checks(arr.d, arr.spectrum)
        found.update({B1: lines.b1, B2: lines.b2, ZZBAUER: checks.zzbauer, HIRZ86: checks.hirz86})
    return [found[name] for name in BOUND_ORDER if name in found]


def build_h_report(arr: Arrangement) -> HReport:
    """
    Evaluate H values, Euler numbers, bounds and the ball-quotient criterion

    Non-ordinary arrangements with a C^2 override get H(C, Sing C) from the
    override over all their singular points; their H-index is not defined.
    """
    f0, _, f2 = arr.moments
    c_square = self_intersection(arr) if arr.ordinary or arr.c_square_override is not None else None

    h_sing_value: Optional[Rat] = None
    index: Optional[HIndex] = None
    if f0 > 0 and arr.ordinary:
        h_sing_value = h_at_sing(arr)
        index = h_index(arr)
    elif f0 > 0 and c_square is not None:
        h_sing_value = Rat(c_square - f2, f0)

    abelian_ordinary = arr.surface == SurfaceKind.ABELIAN and arr.ordinary
    euler = euler_numbers(arr) if abelian_ordinary else None
    ball = covers.ball_quotient_check(arr) if abelian_ordinary and arr.is_elliptic() else None

    logger.info(f"Analyzed {arr.label}: h_sing={h_sing_value} h_index={index.value if index else None}")
    return HReport(arr, c_square, h_sing_value, index, euler, tuple(_bounds_for(arr)), ball)


def analyze(arr: Arrangement) -> Record:
    """Aggregate the H report of an arrangement into a fixed-order record"""
    report = build_h_report(arr)
    moments = arr.moments
    fields: List[Tuple[str, Any]] = [
        ("label", arr.label),
        ("surface", arr.surface.value),
        ("ordinary", arr.ordinary),
        ("components", arr.d),
        ("genus", arr.genus),
        ("f0", moments.f0),
        ("f1", moments.f1),
        ("f2", moments.f2),
        ("c_square", report.c_square),
        ("h_sing", report.h_sing),
        ("h_index", report.h_index.value if report.h_index else None),
        ("witness", str(report.h_index.witness) if report.h_index else None),
    ]
    if report.euler is not None:
        fields.extend(
            [
                ("e_c", report.euler.e_c),
                ("e_c_minus_sing", report.euler.e_c_minus_sing),
                ("e_complement", report.euler.e_complement),
            ]
        )
    for bound in report.bounds:
        fields.extend(
            [
                (f"{bound.name}_lhs", bound.lhs),
                (f"{bound.name}_rhs", bound.rhs),
                (f"{bound.name}_holds", bound.holds),
                (f"{bound.name}_applicable", bound.applicable),
            ]
        )
    if report.ball_quotient is not None:
        fields.append(("ball_quotient", report.ball_quotient.is_ball_quotient))
    return Record(fields, arr.warnings)


# ---------------------------------------------------------------------------
# sweep-cn
# ---------------------------------------------------------------------------


def _sweep_row(n: int) -> Tuple[Any, ...]:
    value = catalog.cn_h_value(n)
    gap = value.h + 4
    return (
        n,
        value.c_bar_square,
        value.s,
        value.h,
        format_decimal(value.h),
        gap,
        format_decimal(gap),
    )


def sweep_cn(start: int, stop: int, step: int = 3, jobs: int = 1) -> Table:
    """
    H(C_n, Sing C_n) and its gap to -4 for n = start, start + step, ..., <= stop

    Raises:
        BadParameter: Unless start, stop and step are positive multiples of 3
            with start <= stop
    """
    for name, value in (("from", start), ("to", stop), ("step", step)):
        if value <= 0 or value % 3 != 0:
            raise BadParameter(f"--{name} must be a positive multiple of 3, got {value}")
    if start > stop:
        raise BadParameter(f"--from {start} exceeds --to {stop}")
    values = list(range(start, stop + 1, step))
    logger.info(f"Sweeping C_n over {len(values)} values of n")
    return Table(SWEEP_COLUMNS, _map_rows(_sweep_row, values, jobs))


# ---------------------------------------------------------------------------
# cover
# ---------------------------------------------------------------------------


def cover_table(arr: Arrangement, n_min: int, n_max: int, jobs: int = 1) -> Table:
    """
    Normalized cover invariants for n = n_min..n_max

    The ball_quotient_defect column carries f0 (n - 3)^2 when the
    arrangement satisfies the ball-quotient criterion, and is empty otherwise.

    Raises:
        BadParameter: Unless 2 <= n_min <= n_max <= Config.COVER_N_LIMIT
        WrongSurface, NotOrdinary, BadInput
    """
    if not 2 <= n_min <= n_max <= Config.COVER_N_LIMIT:
        raise BadParameter(
            f"Need 2 <= n-min <= n-max <= {Config.COVER_N_LIMIT}, got {n_min}..{n_max}"
        )
    # Fail on the first row's preconditions before any worker starts
    covers.cover_invariants(arr, n_min)
    ball = arr.is_elliptic() and covers.ball_quotient_check(arr).is_ball_quotient
    f0 = arr.moments.f0

    def row(n: int) -> Tuple[Any, ...]:
        invariants = covers.cover_invariants(arr, n)
        return (
            n,
            invariants.euler_norm,
            invariants.k2_norm,
            invariants.defect_norm,
            invariants.chern_ratio,
            f0 * (n - 3) ** 2 if ball else None,
        )

    return Table(COVER_COLUMNS, _map_rows(row, list(range(n_min, n_max + 1)), jobs))


# ---------------------------------------------------------------------------
# catalog listing
# ---------------------------------------------------------------------------


def catalog_listing() -> Table:
    """Fixed catalog entries followed by the parametric families"""
    rows: List[Tuple[Any, ...]] = []
    for name, entry in catalog.CATALOG.items():
        arr = entry.arrangement
        rows.append((name, arr.surface.value, arr.d, str(arr.spectrum)))
    for _, _, example in catalog.FAMILIES:
        rows.append((example, None, None, None))
    return Table(CATALOG_COLUMNS, rows)


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


@dataclass
class CheckReport:
    """Outcome of every check run against one target"""

    label: str
    results: List[Tuple[str, str, str]] = field(default_factory=list)

    def add(self, status: str, statement: str, detail: str = "") -> None:
        self.results.append((status, statement, detail))

    def expect(self, condition: bool, statement: str, detail: str = "") -> None:
        self.add(PASS if condition else FAIL, statement, detail)

    def count(self, status: str) -> int:
        return sum(1 for result in self.results if result[0] == status)

    @property
    def ok(self) -> bool:
        return self.count(FAIL) == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def summary(self) -> str:
        return (
            f"{self.label}: {self.count(PASS)} passed, {self.count(FAIL)} failed, "
            f"{self.count(SKIP)} skipped"
        )

    def render(self, fmt: str) -> str:
        _require_format(fmt)
        if fmt == "csv":
            return _csv_text(CHECK_COLUMNS, self.results)
        if fmt == "json":
            return _json_text(
                {
                    "label": self.label,
                    "checks": [dict(zip(CHECK_COLUMNS, result)) for result in self.results],
                    "passed": self.count(PASS),
                    "failed": self.count(FAIL),
                    "skipped": self.count(SKIP),
                    "ok": self.ok,
                }
            )
        lines = [
            f"{status} {statement}" + (f" ({detail})" if detail else "")
            for status, statement, detail in self.results
        ]
        lines.append(self.summary())
        return "\n".join(lines) + "\n"


def _anchored(statement: str, anchor: str) -> str:
    return f"{statement} [{anchor}]"


def _check_h_index(arr: Arrangement, report: HReport, out: CheckReport) -> None:
    if report.h_index is None:
        out.add(SKIP, EXHAUSTIVE_STATEMENT, "H-index undefined")
        return
    out.expect(
        report.h_index.value <= report.h_sing,
        _anchored("H(C) <= H(C, Sing C)", ANCHOR_H_INDEX),
        f"{format_exact(report.h_index.value)} <= {format_exact(report.h_sing)}",
    )
    if arr.moments.f0 <= Config.EXHAUSTIVE_LIMIT:
        oracle = h_index_exhaustive(arr)
        out.expect(
            oracle.value == report.h_index.value,
            EXHAUSTIVE_STATEMENT,
            f"greedy {format_exact(report.h_index.value)}, exhaustive {format_exact(oracle.value)}",
        )
    else:
        out.add(
            SKIP,
            EXHAUSTIVE_STATEMENT,
            f"f0 > {Config.EXHAUSTIVE_LIMIT}",
        )

    degrees = Config.PULLBACK_CHECK_DEGREES
    statement = _anchored(
        f"H(C, Sing C) and H(C) invariant under pullback of degree {degrees.start}..{degrees.stop - 1}",
        ANCHOR_H_INDEX,
    )
    if report.c_square < 0:
        out.add(SKIP, statement, "C^2 < 0")
        return
    broken = [
        degree
        for degree in degrees
        if h_at_sing(pullback(arr, degree)) != report.h_sing
        or h_index(pullback(arr, degree)).value != report.h_index.value
    ]
    out.expect(not broken, statement, f"fails for degrees {broken}" if broken else "")


def _check_bounds(arr: Arrangement, report: HReport, out: CheckReport) -> None:
    for bound in report.bounds:
        statement = _anchored(f"{bound.name}: {BOUND_STATEMENTS[bound.name]}", BOUND_ANCHORS[bound.name])
        detail = f"{format_exact(bound.lhs)} {bound.relation} {format_exact(bound.rhs)}"
        if bound.applicable:
            out.expect(bound.holds, statement, detail)
        else:
            verdict = "holds" if bound.holds else "fails"
            out.add(SKIP, statement, f"{detail}, {verdict}; needs {bound.applicability_note}")
        if bound.above_floor is not None:
            out.expect(
                bound.above_floor,
                _anchored("elliptic chain: (t2 + t3/4)/f0 - 4 >= -4", ANCHOR_ELLIPTIC),
                f"{format_exact(bound.rhs)} >= {format_exact(bound.floor)}",
            )

    b1, b2 = report.bound(B1), report.bound(B2)
    hirz86 = report.bound(HIRZ86)
    if b1 is not None and b2 is not None and hirz86 is not None:
        statement = _anchored("B2 >= B1 under t2 + 3/4 t3 >= d + sum_{k>=5} (2k - 9) t_k", ANCHOR_HIRZEBRUCH)
        if hirz86.holds:
            out.expect(b2.rhs >= b1.rhs, statement, f"{format_exact(b2.rhs)} >= {format_exact(b1.rhs)}")
        else:
            out.add(SKIP, statement, "inequality does not hold")


def _check_covers(arr: Arrangement, report: HReport, out: CheckReport) -> None:
    if arr.surface != SurfaceKind.ABELIAN or not arr.ordinary or arr.d < 2:
        return
    orders = Config.DEFECT_CHECK_RANGE
    span = f"n = {orders.start}..{orders.stop - 1}"
    strata = [n for n in orders if covers.euler_cover_by_strata(arr, n) != covers.euler_cover(arr, n)]
    out.expect(
        not strata,
        _anchored(f"e(X_n) by strata matches the closed form, {span}", ANCHOR_EULER_COVER),
        _orders_detail(strata),
    )
    divisor = [
        n for n in orders if covers.canonical_square_by_divisor(arr, n) != covers.canonical_square_cover(arr, n)
    ]
    out.expect(
        not divisor,
        _anchored(f"K^2 from the canonical divisor matches the closed form, {span}", ANCHOR_CANONICAL_COVER),
        _orders_detail(divisor),
    )
    defect = [
        n
        for n in orders
        if 3 * covers.euler_cover(arr, n) - covers.canonical_square_cover(arr, n) != covers.my_defect(arr, n)
    ]
    out.expect(
        not defect,
        _anchored(f"3 e - K^2 equals the Miyaoka-Yau defect, {span}", ANCHOR_DEFECT),
        _orders_detail(defect),
    )
    out.expect(
        polynomials.defect_is_three_euler_minus_canonical(arr),
        _anchored("3 e - K^2 equals the defect polynomial in n", ANCHOR_DEFECT),
    )

    f0 = arr.moments.f0
    if f0 == 0:
        return
    for n in (2, 3):
        refined = covers.refined_defect_check(arr, n)
        out.expect(
            refined.holds,
            _anchored(f"3 e - K^2 >= {REFINED_RHS[n]} at n = {n}", ANCHOR_REFINED),
            f"{format_exact(refined.defect)} >= {format_exact(refined.refined_rhs)}",
        )
    elliptic = report.bound(ELLIPTIC)
    third = covers.refined_defect_check(arr, 3)
    out.expect(
        elliptic.slack == (third.defect - third.refined_rhs) / (4 * f0),
        _anchored("elliptic bound is the n = 3 refined inequality divided by 4 f0", ANCHOR_ELLIPTIC),
    )
    if arr.genus == 1:
        genus = report.bound(GENUS)
        second = covers.refined_defect_check(arr, 2)
        out.expect(
            genus.slack == (second.defect - second.refined_rhs) / (2 * f0),
            _anchored("genus bound is the n = 2 refined inequality divided by 2 f0", ANCHOR_GENUS),
        )

    ball = report.ball_quotient
    if ball is None:
        return
    statement = _anchored("ball quotient: (K + C)^2 = 3 e(X - C) with only 4-points", ANCHOR_BALL_QUOTIENT)
    if not ball.is_ball_quotient:
        out.add(SKIP, statement, f"{ball.log_ck_square} != 3 * {ball.log_euler}")
        return
    out.add(PASS, statement, f"{ball.log_ck_square} = 3 * {ball.log_euler}")
    out.expect(
        not ball.defect_violations,
        _anchored(f"defect equals f0 (n - 3)^2, {span}", ANCHOR_BALL_QUOTIENT),
        _orders_detail([n for n, _ in ball.defect_violations]),
    )
    out.expect(
        bool(ball.symbolic_identity),
        _anchored("defect polynomial equals f0 (n - 3)^2", ANCHOR_BALL_QUOTIENT),
    )


def _orders_detail(orders: List[int]) -> str:
    return f"fails for n = {orders}" if orders else ""


def _claimed_value(key: str, arr: Arrangement, report: HReport) -> Any:
    if key == "h_index":
        return report.h_index.value if report.h_index else None
    if key == "h_at_sing":
        return report.h_sing
    if key == "gap":
        return None if report.h_sing is None else report.h_sing + 4
    if key in (B1, B2):
        bound = report.bound(key)
        return bound.rhs if bound else None
    if key == "ball_quotient":
        return report.ball_quotient.is_ball_quotient if report.ball_quotient else None
    if key == "defect_n3":
        return covers.my_defect(arr, 3)
    raise BadParameter(f"Unknown claimed quantity {key!r}")


def _check_claims(arr: Arrangement, report: HReport, expected: Mapping[str, Any], out: CheckReport) -> None:
    for key, claimed in expected.items():
        computed = _claimed_value(key, arr, report)
        out.expect(
            computed == claimed,
            f"claimed {key} = {_text(claimed)}",
            f"computed {_text(computed, human=True)}",
        )


def check(arr: Arrangement, expected: Optional[Mapping[str, Any]] = None) -> CheckReport:
    """
    Run every applicable invariant and claim check against an arrangement

    The report fails when any applicable statement fails; bounds whose
    hypotheses do not hold are reported as SKIP with both sides shown.
    """
    out = CheckReport(arr.label)
    out.add(
        PASS,
        "arrangement invariants",
        f"{len(arr.warnings)} warning(s)" if arr.warnings else "",
    )
    report = build_h_report(arr)
    _check_h_index(arr, report, out)
    _check_bounds(arr, report, out)
    _check_covers(arr, report, out)
    _check_claims(arr, report, expected or {}, out)
    logger.info(out.summary())
    return out
