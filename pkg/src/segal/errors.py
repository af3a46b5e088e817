"""Error taxonomy shared across the package.

Exit-code mapping used by the CLI:
  1 usage error, 2 data/format error, 3 numeric failure.
"""


class DataFormatError(Exception):
    """Malformed file, header/payload mismatch, or invalid on-disk schema."""


class NumericError(Exception):
    """Non-finite value (NaN/Inf) or degenerate numeric input."""
