"""Checked 64-bit signed arithmetic.

Python integers never wrap, so "checked" here means every result is compared
against the signed 64-bit range and an :class:`OverflowError` is raised as
soon as a value leaves it.
"""

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def check_int64(value: int, what: str = "value") -> int:
    if value > INT64_MAX or value < INT64_MIN:
        raise OverflowError(f"{what} = {value} does not fit in a signed 64-bit integer")
    return value


def checked_add(a: int, b: int) -> int:
    return check_int64(a + b, "sum")


def checked_mul(a: int, b: int) -> int:
    return check_int64(a * b, "product")


def pos_int(value, name: str = "n") -> int:
    """Validate a positive integer in ``[1, 2**63 - 1]`` and return it as ``int``."""
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            import numpy as np
        except ImportError:  # pragma: no cover
            np = None
        if np is not None and isinstance(value, np.integer):
            value = int(value)
        else:
            raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value}")
    if value > INT64_MAX:
        raise OverflowError(f"{name} = {value} exceeds the signed 64-bit range")
    return value
