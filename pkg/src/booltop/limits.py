import os

TENSOR_LIMIT = 4096
ELEMENT_LIMIT = 1 << 18
SIGN_LENGTH_LIMIT = 6


def size_limit(default: int) -> int:
    """Return the active size guard; ``BOOLTOP_LIMIT`` overrides every default."""
    raw = os.environ.get("BOOLTOP_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return default
