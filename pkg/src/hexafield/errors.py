"""Error types shared across the package.

Domain errors (bad math input) are plain ValueError; CapacityError marks
inputs that exceed a configured enumeration cap and is a distinct class so
callers can tell "wrong" from "too big".
"""


class CapacityError(Exception):
    """A configured size cap would be exceeded by this computation."""
