"""JSON helpers shared by the CLI and the family directory format"""

import json
import logging
import os
from fractions import Fraction
from typing import Any, Dict, Iterable

from config import Config

from ..errors import SerializationError

logger = logging.getLogger(__name__)


def format_rational(value: Fraction) -> str:
    """Lowest-terms "p/q" string; integers keep the "/1" denominator"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys, no timestamps)"""
    return json.dumps(obj, indent=Config.JSON_INDENT, sort_keys=True)


def loads(text: str, source: str = '<input>') -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"{source}: invalid JSON ({e})") from e


def read_json(path: str) -> Any:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return loads(f.read(), source=path)
    except OSError as e:
        raise SerializationError(f"Cannot read {path}: {e}") from e


def write_json(obj: Any, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(obj))
        f.write('\n')


def write_bundle(directory: str, files: Dict[str, Any]) -> None:
    """Write one JSON file per entry of `files` into `directory`"""
    os.makedirs(directory, exist_ok=True)
    for name, obj in sorted(files.items()):
        write_json(obj, os.path.join(directory, name))
    logger.info(f"Wrote {len(files)} file(s) to {directory}")


def read_bundle(directory: str, names: Iterable[str] = None) -> Dict[str, Any]:
    """
    Read JSON files from a directory

    Args:
        directory: Directory to read
        names: File names to read; defaults to every *.json file

    Raises:
        SerializationError: If the directory or a named file is missing
    """
    if not os.path.isdir(directory):
        raise SerializationError(f"Not a directory: {directory}")
    if names is None:
        names = sorted(n for n in os.listdir(directory) if n.endswith('.json'))
    return {name: read_json(os.path.join(directory, name)) for name in names}
