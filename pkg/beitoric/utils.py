"""Utility functions for validation, environment lookups and logging."""

import logging
import os
from typing import Any, Dict, Optional

# Configure logger for the package
logger = logging.getLogger(__name__)


def validate_vertex_count(n: int, cap: Optional[int] = None) -> None:
    """
    Validate that ``n`` is a usable vertex count.

    Args:
        n: The vertex count to validate
        cap: Optional inclusive upper bound

    Raises:
        TypeError: If n is not an integer
        ValueError: If n is negative or above the cap
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"Vertex count must be an integer, got {type(n).__name__}")

    if n < 0:
        raise ValueError(f"Vertex count must be non-negative, got {n}")

    if cap is not None and n > cap:
        raise ValueError(f"Vertex count must be <= {cap}, got {n}")


def env_int(name: str) -> Optional[int]:
    """
    Read a non-negative integer from the environment.

    Unset variables give None; unparsable or negative values are ignored with a
    warning.
    """
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer")
        return None
    if value < 0:
        logger.warning(f"Ignoring {name}={raw!r}: must be non-negative")
        return None
    return value


def get_backend_info() -> Dict[str, Any]:
    """
    Get the versions of the libraries the exact computations rely on.

    Returns:
        Dictionary with availability and version of numpy, sympy and networkx
    """
    info: Dict[str, Any] = {
        "numpy_available": False,
        "sympy_available": False,
        "networkx_available": False,
    }

    try:
        import numpy as np
        info["numpy_available"] = True
        info["numpy_version"] = np.__version__
    except ImportError:
        pass

    try:
        import sympy
        info["sympy_available"] = True
        info["sympy_version"] = sympy.__version__
    except ImportError:
        pass

    try:
        import networkx as nx
        info["networkx_available"] = True
        info["networkx_version"] = nx.__version__
    except ImportError:
        pass

    return info


def log_stage(stage: str, **details: Any) -> None:
    """
    Log one pipeline stage with its details in a uniform format.

    Args:
        stage: Name of the stage (for example ``"decide_toric"``)
        **details: Values reported after the stage name, sorted by key
    """
    rendered = " ".join(f"{key}={details[key]}" for key in sorted(details))
    logger.info(f"{stage}: {rendered}" if rendered else stage)
