"""JSON file helpers and exact-number encoding."""
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

import orjson

from ..errors import InvalidInput

Rational = Union[int, Fraction]


def read_json(path: Path) -> Any:
    """Read and parse JSON from a file."""
    path = Path(path)
    if not path.exists():
        raise InvalidInput(f"File not found: {path}")
    try:
        return orjson.loads(path.read_bytes())
    except orjson.JSONDecodeError as e:
        raise InvalidInput(f"Invalid JSON in {path}: {e}")


def write_json(path: Path, data: Any) -> None:
    """Write JSON data to a file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dumps(data) + b"\n")


def dumps(data: Any) -> bytes:
    """Serialize with the project's fixed options (indented, insertion order)."""
    return orjson.dumps(data, option=orjson.OPT_INDENT_2)


def rational_to_str(value: Rational) -> str:
    """Encode an exact rational as "p/q" ("p" for integers)."""
    return str(Fraction(value))


def rational_from_str(text: Union[str, int]) -> Fraction:
    """Decode "p/q", "p" or an integer into a Fraction."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"Not an exact rational: {text!r}") from e
