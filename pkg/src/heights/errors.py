"""Exception types raised across the pipeline.

Every failure mode surfaces as a subclass of HeightsError so callers
(and the fuzz tests) can distinguish expected rejections from bugs.
"""


class HeightsError(Exception):
    """Base class for all errors raised by this package."""


# --- LAS / text point input -------------------------------------------------

class LasError(HeightsError):
    """Base class for LAS parsing and writing failures."""


class BadMagic(LasError):
    """File does not start with the 'LASF' signature."""


class UnsupportedVersion(LasError):
    """LAS version outside the supported 1.2-1.4 range."""


class UnsupportedPointFormat(LasError):
    """Point data format id outside the supported {0, 1, 2, 3} set."""


class Truncated(LasError):
    """Input ends before the header or the declared point records do."""


class InvalidHeader(LasError):
    """Header parsed but violates a structural invariant (scale <= 0,
    inverted bbox, record length below the format minimum, ...)."""


class QuantizationOverflow(LasError):
    """Coordinate does not fit a 32-bit raw integer at the chosen scale."""


class MalformedLine(LasError):
    """Bad data line in the xyz text format; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str = ""):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if message else f"line {lineno}")


# --- gridding ----------------------------------------------------------------

class EmptyInput(HeightsError):
    """No points available where at least one is required."""


class SpecMismatch(HeightsError):
    """Two grids that must share a GridSpec do not."""


# --- gap filling --------------------------------------------------------------

class AllNoData(HeightsError):
    """Grid contains no valid cell, so no donor exists."""


class InsufficientDonors(HeightsError):
    """Fewer valid cells than the k requested for kNN filling."""


# --- masks --------------------------------------------------------------------

class ParseError(HeightsError):
    """Mask document is not a readable GeoJSON FeatureCollection."""


class InvalidMask(HeightsError):
    """A single mask feature violates the ObjectMask invariants."""

    def __init__(self, mask_id: str, reason: str):
        self.mask_id = mask_id
        self.reason = reason
        super().__init__(f"mask {mask_id!r}: {reason}")


# --- zonal stats ----------------------------------------------------------------

class EmptyObject(HeightsError):
    """Mask covers no valid surface cell; the record is skipped upstream."""


# --- export ---------------------------------------------------------------------

class MissingGeometry(HeightsError):
    """Table record has no mask polygon to attach in GeoJSON output."""

    def __init__(self, record_id: str):
        self.record_id = record_id
        super().__init__(f"no geometry for record {record_id!r}")


# --- configuration ----------------------------------------------------------------

class ConfigError(HeightsError):
    """Pipeline configuration failed validation."""
