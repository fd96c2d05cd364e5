"""Input validation utilities."""

import re
from typing import Any

from ..core.exceptions import ConfigurationError
from ..models.params import ScaledFormula

# Complex literals in the "1+i", "2-0.5i", "4i" or "1+2j" style
_IMAGINARY_UNIT = re.compile(r"(?<=[0-9.])i$|^i$|(?<=[+-])i$")


def parse_complex(text: Any) -> complex:
    """
    Parse a complex number written with i or j as the imaginary unit.

    Args:
        text: String such as "2", "1+i", "-3", "4i" (numbers pass through)

    Returns:
        The parsed value

    Raises:
        ConfigurationError: If the text is not a complex literal
    """
    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = str(text).strip().replace(" ", "")
    if not cleaned:
        raise ConfigurationError("complex value cannot be empty")
    cleaned = _IMAGINARY_UNIT.sub("j", cleaned)
    if cleaned.endswith("j") and (cleaned == "j" or cleaned[-2] in "+-"):
        cleaned = cleaned[:-1] + "1j"
    try:
        return complex(cleaned)
    except ValueError as e:
        raise ConfigurationError(f"not a complex number: {text!r}", e)


def format_complex(value: complex) -> str:
    """Render a complex number the way parse_complex reads it back."""
    return repr(complex(value)).strip("()")


def parse_int_list(text: str) -> list[int]:
    """
    Parse a comma- or space-separated list of integers.

    Raises:
        ConfigurationError: If an entry is not an integer or the list is empty
    """
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if not parts:
        raise ConfigurationError("integer list cannot be empty")
    try:
        return [int(p) for p in parts]
    except ValueError as e:
        raise ConfigurationError(f"not an integer list: {text!r}", e)


def validate_formula(name: str) -> ScaledFormula:
    """
    Resolve a scaled formula identifier.

    Raises:
        ConfigurationError: If the identifier is unknown
    """
    try:
        return ScaledFormula(name.strip().lower())
    except ValueError as e:
        known = ", ".join(f.value for f in ScaledFormula)
        raise ConfigurationError(f"unknown formula {name!r}; expected one of {known}", e)


def validate_choice(value: str, choices: tuple[str, ...], label: str) -> str:
    """
    Check that ``value`` is one of ``choices``.

    Raises:
        ConfigurationError: If it is not
    """
    if value not in choices:
        raise ConfigurationError(f"unknown {label} {value!r}; expected one of {', '.join(choices)}")
    return value


def require(params: dict[str, Any], key: str) -> Any:
    """
    Fetch a required grid parameter.

    Raises:
        ConfigurationError: If the key is missing
    """
    if key not in params or params[key] is None:
        raise ConfigurationError(f"grid point {params} is missing {key!r}")
    return params[key]
