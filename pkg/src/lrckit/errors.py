"""Exceptions shared across the package."""


class LrcError(Exception):
    """Base class for lrckit errors."""


class MdsPropertyError(LrcError):
    """A matrix that must have the MDS property does not.

    Carries the first failing column subset (lexicographic order) and, for
    block constructions, the index of the offending block.
    """

    def __init__(self, witness, block=None, which="matrix"):
        self.witness = tuple(witness)
        self.block = block
        self.which = which
        where = which if block is None else f"{which} of block {block}"
        super().__init__(
            f"{where} fails the MDS property: columns {self.witness} are dependent"
        )


class BudgetExceededError(LrcError):
    """An exhaustive search hit its work budget before finishing.

    Raised instead of returning a possibly wrong answer.
    """


class LocalRepairError(LrcError):
    """Local repair cannot proceed; the caller should escalate to global repair."""
