"""netrel: exact two-terminal reliability for heterogeneous-arc binary-state networks."""

from importlib import resources


def bundled(name):
    """Path-like handle to a bundled example file (e.g. "fig1.net")."""
    return resources.files(__name__) / "data" / name
