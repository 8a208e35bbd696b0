"""Input checks shared by the estimator wrappers."""
from __future__ import annotations

import numpy as np

from .exceptions import DomainError, EmptyInputError


def check_series(x, *, name: str = "X") -> np.ndarray:
    """Return ``x`` as a finite 1-D float64 array."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise EmptyInputError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise DomainError(f"{name} contains a non-finite value at position {bad}")
    return arr


def check_windows(X, *, name: str = "X") -> np.ndarray:
    """Return ``X`` as a finite 2-D array of shape (n_windows, window_size).

    A 1-D input is treated as a single window.
    """
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 1-D or 2-D, got shape {arr.shape}")
    if arr.shape[1] == 0 or arr.shape[0] == 0:
        raise EmptyInputError(f"{name} is empty")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite values")
    return arr


def check_window_size(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"window_size must be an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"window_size must be >= 1, got {n}")
    return int(n)
