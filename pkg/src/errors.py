"""Exceptions raised by the senLDA pipeline."""


class SenLDAError(Exception):
    """Base class for pipeline errors."""


class AllDocumentsEmpty(SenLDAError, ValueError):
    """Preprocessing removed every token of every document."""


class InputFormatError(SenLDAError, ValueError):
    """An input file does not follow its documented format."""


class ModelFormatError(SenLDAError, ValueError):
    """A model or corpus file failed validation."""


class DomainError(SenLDAError, ValueError):
    """A math helper was called outside its domain."""


class NumericalError(SenLDAError, ArithmeticError):
    """Sampling weights or count structures became unusable."""


class NoTokens(SenLDAError, ValueError):
    """Every held-out token was out of vocabulary."""


class IterationMismatch(SenLDAError, ValueError):
    """Two diagnostics series were not evaluated on the same iterations."""


class DocIdMismatch(SenLDAError, ValueError):
    """Feature matrices or labels do not cover the same documents."""


class DegenerateLabels(SenLDAError, ValueError):
    """A binary problem is missing its positive or negative class."""
