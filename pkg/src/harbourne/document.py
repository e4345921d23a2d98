"""
Arrangement documents: JSON text in, validated Arrangement out, and back

Schema (unknown keys are rejected):
    {
      "label": "hirzebruch-gauss",
      "surface": "abelian",              # "P2" | "abelian" | "surface"
      "ordinary": true,
      "components": [{"genus": 1, "self_intersection": 0, "count": 4}],
      "spectrum": {"4": 1},              # decimal multiplicity -> count
      "c_square_override": 123           # optional, only when ordinary is false
    }
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Union

from harbourne.arrangement import (
    Arrangement,
    ComponentClass,
    SingularitySpectrum,
    SurfaceKind,
    require_valid,
)
from harbourne.exceptions import ParseError, ValidationError
from harbourne.logging_config import HarbourneLogger

logger = HarbourneLogger.get_logger(__name__)

REQUIRED_KEYS = ("label", "surface", "ordinary", "components", "spectrum")
OPTIONAL_KEYS = ("c_square_override",)
COMPONENT_KEYS = ("genus", "self_intersection", "count")

# ASCII decimal digits only
_MULTIPLICITY_KEY = re.compile(r"[0-9]+")


def _require_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where} must be an integer, got {value!r}")
    return value


def _check_keys(obj: Dict[str, Any], required, optional, where: str) -> None:
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise ParseError(f"{where}: unknown field(s) {', '.join(unknown)}")
    missing = [key for key in required if key not in obj]
    if missing:
        raise ParseError(f"{where}: missing field(s) {', '.join(missing)}")


def _parse_component(raw: Any, index: int) -> ComponentClass:
    where = f"components[{index}]"
    if not isinstance(raw, dict):
        raise ParseError(f"{where} must be an object")
    # count defaults to 1
    _check_keys(raw, COMPONENT_KEYS[:2], COMPONENT_KEYS[2:], where)
    values = {key: _require_int(raw[key], f"{where}.{key}") for key in raw}
    try:
        return ComponentClass(**values)
    except ValidationError as e:
        raise ParseError(f"{where}: {e}") from e


def _parse_spectrum(raw: Any) -> SingularitySpectrum:
    if not isinstance(raw, dict):
        raise ParseError("spectrum must be an object mapping multiplicity to count")
    counts = []
    for key, value in raw.items():
        if not isinstance(key, str) or not _MULTIPLICITY_KEY.fullmatch(key):
            raise ParseError(f"spectrum key must be a decimal integer, got {key!r}")
        k = int(key)
        if k < 2:
            raise ParseError(f"spectrum multiplicity must be >= 2, got {k}")
        t = _require_int(value, f"spectrum[{key!r}]")
        if t < 0:
            raise ParseError(f"spectrum count for k={k} must be >= 0, got {t}")
        counts.append((k, t))
    return SingularitySpectrum(tuple(counts))


def parse(document: str) -> Arrangement:
    """
    Parse and validate an arrangement document

    Args:
        document: UTF-8 JSON text

    Returns:
        Validated Arrangement with its soft warnings attached

    Raises:
        ParseError: If the text is not a well-formed document
        ValidationError: If a hard invariant fails
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e}") from e

    if not isinstance(raw, dict):
        raise ParseError("Arrangement document must be a JSON object")
    _check_keys(raw, REQUIRED_KEYS, OPTIONAL_KEYS, "document")

    label = raw["label"]
    if not isinstance(label, str) or not label:
        raise ParseError(f"label must be a non-empty string, got {label!r}")
    try:
        surface = SurfaceKind(raw["surface"])
    except ValueError as e:
        choices = ", ".join(kind.value for kind in SurfaceKind)
        raise ParseError(f"surface must be one of {choices}, got {raw['surface']!r}") from e
    if not isinstance(raw["ordinary"], bool):
        raise ParseError(f"ordinary must be a boolean, got {raw['ordinary']!r}")
    if not isinstance(raw["components"], list):
        raise ParseError("components must be a list")

    override = raw.get("c_square_override")
    if override is not None:
        override = _require_int(override, "c_square_override")

    arrangement = Arrangement(
        label=label,
        surface=surface,
        ordinary=raw["ordinary"],
        components=tuple(_parse_component(c, i) for i, c in enumerate(raw["components"])),
        spectrum=_parse_spectrum(raw["spectrum"]),
        c_square_override=override,
    )
    logger.debug(f"Parsed arrangement {label}: d={arrangement.d} spectrum={arrangement.spectrum}")
    return require_valid(arrangement)


def parse_file(path: Union[str, Path]) -> Arrangement:
    """
    Read and parse an arrangement document from disk

    Raises:
        ParseError: If the file cannot be read or is malformed
        ValidationError: If a hard invariant fails
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e}") from e
    return parse(text)


def to_dict(arr: Arrangement) -> Dict[str, Any]:
    """Document fields of an arrangement in canonical key order"""
    components: List[Dict[str, int]] = [
        {"genus": c.genus, "self_intersection": c.self_intersection, "count": c.count}
        for c in arr.components
    ]
    data: Dict[str, Any] = {
        "label": arr.label,
        "surface": arr.surface.value,
        "ordinary": arr.ordinary,
        "components": components,
        "spectrum": {str(k): t for k, t in arr.spectrum.items()},
    }
    if arr.c_square_override is not None:
        data["c_square_override"] = arr.c_square_override
    return data


def emit(arr: Arrangement) -> str:
    """Serialize an arrangement as a document that parse() reads back to an equal value"""
    return json.dumps(to_dict(arr), indent=2) + "\n"
