"""Plain-text signal files: one finite decimal float per line."""

from __future__ import annotations

import math

import numpy as np

from .errors import SignalFormatError


def read_signal(path) -> np.ndarray:
    """Read a signal file; length is inferred from the line count.

    Non-numeric or non-finite lines are rejected with a line-number
    diagnostic.
    """
    values = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                raise SignalFormatError(f"{path}: line {lineno}: empty line")
            try:
                value = float(text)
            except ValueError:
                raise SignalFormatError(
                    f"{path}: line {lineno}: not a number: {text!r}"
                ) from None
            if not math.isfinite(value):
                raise SignalFormatError(
                    f"{path}: line {lineno}: non-finite value: {text!r}"
                )
            values.append(value)
    if not values:
        raise SignalFormatError(f"{path}: empty signal file")
    return np.array(values, dtype=np.float64)


def write_signal(path, x) -> None:
    """Write a signal with 17 significant digits (float64 round-trip)."""
    x = np.asarray(x, dtype=np.float64)
    with open(path, "w", encoding="ascii") as fh:
        for value in x:
            fh.write(f"{value:.17g}\n")
