"""Packaged example data."""
from importlib import resources


def fixture_path():
    """Path to ``synthetic_monthly.csv`` (dated format, 60 points)."""
    return resources.files(__name__) / "synthetic_monthly.csv"
