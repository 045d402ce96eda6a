"""Instance-size guards shared by the exhaustive routines."""

import os


class SizeGuardError(RuntimeError):
    pass


def guard_limit(default):
    """Return the size limit, overridable through ``BIPTW_GUARD``."""
    raw = os.environ.get("BIPTW_GUARD")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise SizeGuardError(f"BIPTW_GUARD must be an integer, got {raw!r}") from exc


def check(size, default, what):
    limit = guard_limit(default)
    if size > limit:
        raise SizeGuardError(f"{what}: size {size} exceeds guard {limit}")
