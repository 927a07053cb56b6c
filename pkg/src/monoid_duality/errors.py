"""Exception types.

User-facing input problems derive from :class:`MonoidError` (a ``ValueError``).
:class:`DualityViolation` marks internal consistency failures: a proven
identity did not hold, which means a bug in this package, never bad input.
"""

from __future__ import annotations


class MonoidError(ValueError):
    pass


class NotAssociative(MonoidError):
    def __init__(self, i: int, j: int, k: int, labels=None):
        self.triple = (i, j, k)
        names = tuple(labels[t] for t in self.triple) if labels else self.triple
        super().__init__(f"not associative: (x*y)*z != x*(y*z) for (x, y, z) = {names}")


class UnitLawViolated(MonoidError):
    def __init__(self, i: int, labels=None):
        self.element = i
        name = labels[i] if labels else i
        super().__init__(f"unit law fails at element {name!r}")


class DuplicateLabel(MonoidError):
    pass


class IndexOutOfRange(MonoidError):
    pass


class NotInverse(MonoidError):
    pass


class NotClifford(MonoidError):
    pass


class NotAbelian(MonoidError):
    pass


class NotAGroup(MonoidError):
    pass


class NotASemilattice(MonoidError):
    pass


class LinkIncompatible(MonoidError):
    pass


class NotAbelianComponent(MonoidError):
    pass


class InvalidMorphism(MonoidError):
    pass


class SizeLimitExceeded(MonoidError):
    pass


class ParseError(MonoidError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class DualityViolation(RuntimeError):
    pass


class HomNotFound(DualityViolation):
    pass


class EvaluationNotAHom(DualityViolation):
    pass


class NoPreimage(DualityViolation):
    pass
