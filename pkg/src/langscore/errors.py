"""Exception types shared across the package.

Loading raises; validation reports. Anything wrong with the *content* of a
syntactically well-formed dataset is a violation entry in a ValidationReport,
not an exception (see `langscore.dataset.validate_dataset`). Exceptions are
reserved for inputs that cannot be resolved into objects at all, and for
scoring calls against data the validator would have rejected.
"""

from __future__ import annotations


class LangscoreError(Exception):
    """Base class for all package errors."""


class ParseError(LangscoreError):
    """A file or document could not be parsed into model objects.

    Carries a `location` (file path, JSON pointer-ish field path, or
    line/column) so CLI and service layers can report where the problem is.
    """

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class UnresolvedReferenceError(ParseError):
    """A document references an id that is not defined anywhere in it."""


class DuplicateIdError(ParseError):
    """Two entities in one namespace share an id."""


class MissingCellError(LangscoreError):
    """A rating cell required for scoring is absent."""

    def __init__(self, subject: str, parameter: str, sub_parameter: str | None = None):
        self.subject = subject
        self.parameter = parameter
        self.sub_parameter = sub_parameter
        where = f"{subject}/{parameter}"
        if sub_parameter is not None:
            where += f"/{sub_parameter}"
        super().__init__(f"missing rating cell: {where}")


class UnknownSubjectError(LangscoreError):
    """An operation was asked about a subject the data does not cover."""


class MissingAttributesError(LangscoreError):
    """Transition attributes are required but absent on a subject."""


class DegenerateSnapshotError(LangscoreError):
    """A demand sub-feature is zero for every subject, so max-normalization
    is undefined."""


class UnknownOverrideTargetError(LangscoreError):
    """A what-if override names a parameter, subject, or cell that does not
    exist in the dataset."""
