"""Module defining the file formats."""

from __future__ import annotations

import json
import re
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from .builder import Certificate, Construction
from .const import INF
from .exception import SetFileError, TargetSpecError, ZeroSetSpecError
from .forms import IntSet
from .target import Multiplicity, TargetSpec, format_multiplicity
from .zeroset import BaseZeroSet, EmptySet, parse_zero_set, zero_set_from_json

_DECIMAL = re.compile(r"-?[0-9]+")


def _is_int(value: object) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def parse_set(text: str) -> IntSet:
    """Parse a set: JSON array, JSON object with a `set` key, or one integer per line."""
    stripped = text.strip()
    if stripped.startswith(("[", "{")):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as ex:
            raise SetFileError(f"malformed JSON: {ex.msg}", ex.lineno) from ex
        if isinstance(data, dict):
            data = data.get("set")
        if not isinstance(data, list) or not all(_is_int(v) for v in data):
            raise SetFileError("expected a JSON array of integers")
        return IntSet.of(data)
    values = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if not _DECIMAL.fullmatch(line):
            raise SetFileError(f"not an integer: {line!r}", line_number)
        values.append(int(line))
    return IntSet.of(values)


def load_set(path: Path) -> IntSet:
    """Read a set file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as ex:
        raise SetFileError(f"can not read {path}: {ex.strerror}") from ex
    return parse_set(text)


def dump_set(values: IntSet) -> list[int]:
    """Return the JSON form of a set."""
    return values.to_list()


def _parse_multiplicity(value: Any, where: str) -> Multiplicity:
    if value == "inf":
        return INF
    if not _is_int(value):
        raise TargetSpecError(f"{where} must be an integer or \"inf\", got {value!r}")
    return value  # type: ignore[no-any-return]


def target_spec_from_json(data: Mapping[str, Any]) -> TargetSpec:
    """Create a TargetSpec from its JSON object."""
    if not isinstance(data, Mapping):
        raise TargetSpecError("target spec must be a JSON object")
    default = _parse_multiplicity(data.get("default", 1), "default")
    raw_overrides = data.get("overrides", {})
    if not isinstance(raw_overrides, Mapping):
        raise TargetSpecError("overrides must be a JSON object")
    overrides: dict[int, Multiplicity] = {}
    for key, value in raw_overrides.items():
        try:
            n = int(key)
        except ValueError as ex:
            raise TargetSpecError(f"override key {key!r} is not an integer") from ex
        overrides[n] = _parse_multiplicity(value, f"override for {key}")
    raw_zero_set = data.get("zero_set")
    zero_set: BaseZeroSet = EmptySet() if raw_zero_set is None else zero_set_from_json(raw_zero_set)
    return TargetSpec(default, overrides, zero_set)


def target_spec_to_json(spec: TargetSpec) -> dict[str, Any]:
    """Serialize a TargetSpec."""
    return {
        "default": format_multiplicity(spec.default),
        "overrides": {str(n): format_multiplicity(v) for n, v in spec.overrides.items()},
        "zero_set": spec.zero_set.to_json(),
    }


def _read_json(path: Path, error: type[Exception]) -> Any:
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as ex:
        raise error(f"can not read {path}: {ex.strerror}") from ex
    except json.JSONDecodeError as ex:
        raise error(f"{path}: malformed JSON: {ex.msg}") from ex


def parse_target(text: str) -> TargetSpec:
    """Parse `const:V` (V an integer or inf) or `@path` to a JSON spec."""
    if text.startswith("@"):
        return target_spec_from_json(_read_json(Path(text[1:]), TargetSpecError))
    name, _, argument = text.partition(":")
    if name != "const" or not argument:
        raise TargetSpecError(f"malformed target `{text}`; use const:V or @spec.json")
    if argument == "inf":
        return TargetSpec.constant(INF)
    try:
        return TargetSpec.constant(int(argument))
    except ValueError as ex:
        raise TargetSpecError(f"malformed target `{text}`") from ex


def parse_zero_set_argument(text: str) -> BaseZeroSet:
    """Parse a compact zero set or `@path` to its JSON object."""
    if text.startswith("@"):
        return zero_set_from_json(_read_json(Path(text[1:]), ZeroSetSpecError))
    return parse_zero_set(text)


def construction_to_json(
    c: Construction, certificate: Certificate | None = None, explain: bool = False
) -> dict[str, Any]:
    """Serialize a construction dump."""
    data: dict[str, Any] = {
        "form": [c.form.u1, c.form.u2],
        "bezout": [c.bezout.v1, c.bezout.v2],
        "target": target_spec_to_json(c.spec),
        "window": c.radius,
        "rounds": c.rounds,
        "steps": [step.to_json(explain) for step in c.chain],
        "set": dump_set(c.final_set),
    }
    if certificate is not None:
        data["certificate"] = certificate.to_json()
    return data


def to_json_text(data: Any) -> str:
    """Render a payload deterministically."""
    return json.dumps(data, indent=2, allow_nan=False)
