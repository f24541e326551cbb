"""Old quantum theory of hydrogen-like atoms with semiclassical cross-checks."""

__version__ = "0.1.0"
