"""Exception types raised by panelscope operations."""

from __future__ import annotations


class PanelscopeError(Exception):
    """Base class for data and contract errors raised by this package."""


class MissingColumnError(PanelscopeError):
    """A designated key/index/value column does not exist in the data."""


class UnknownColumnError(PanelscopeError):
    """A referenced column is absent from the table at hand."""


class NonNumericColumnError(PanelscopeError):
    """A column that must hold numbers holds something else."""


class MissingValueError(PanelscopeError):
    """A key or index cell is missing; panels require both on every row."""


class DuplicateKeyIndexError(PanelscopeError):
    """The same (key, index) pair occurs on more than one row."""

    def __init__(self, key, index, line: int | None = None):
        self.key = key
        self.index = index
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate (key, index) pair ({key!r}, {index!r}){where}")


class EmptyTableError(PanelscopeError):
    """The operation needs at least one row."""


class TooFewIndexValuesError(PanelscopeError):
    """Index regularity needs at least two distinct index values."""


class ColumnCollisionError(PanelscopeError):
    """Adding a column whose name is already taken."""


class KeyMismatchError(PanelscopeError):
    """A key present on one side of a join is absent from the other."""


class EmptyInputError(PanelscopeError):
    """A value sequence is empty (after dropping missing values)."""


class NonFiniteInputError(PanelscopeError):
    """A value sequence contains NaN or infinities where finite reals are required."""


class TooFewValuesError(PanelscopeError):
    """A feature needs more values than the sequence provides."""


class AllMissingForKeyError(PanelscopeError):
    """Every value of the requested variable is missing for some key."""

    def __init__(self, key):
        self.key = key
        super().__init__(f"all values missing for key {key!r}")


class DuplicateNameError(PanelscopeError):
    """A feature name is already registered in the set."""


class SizeExceedsKeysError(PanelscopeError):
    """Requested sample size exceeds the number of distinct keys."""


class FracOutOfRangeError(PanelscopeError):
    """Sampling fraction must lie in (0, 1]."""


class TooManyStrataError(PanelscopeError):
    """More strata requested than there are keys."""


class NotEnoughKeysError(PanelscopeError):
    """Facet sampling needs n_per_facet * n_facets keys."""


class MissingFitError(PanelscopeError):
    """A key in the panel has no fitted line."""


class NOutOfRangeError(PanelscopeError):
    """top/bottom-n selection needs 0 < |n| <= number of keys."""


class EmptyFeaturesError(PanelscopeError):
    """The feature table holds no rows."""


class ParseError(PanelscopeError):
    """A delimited-text line could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class DegenerateKeyWarning(UserWarning):
    """A key had fewer than two distinct predictor values and was skipped."""
