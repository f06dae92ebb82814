"""Exception types raised across the package."""


class SylContactError(ValueError):
    """Base class for all errors raised by sylcontact."""


class InventoryError(SylContactError):
    pass


class TokenizationError(SylContactError):
    def __init__(self, transcription, position):
        self.transcription = transcription
        self.position = position
        super().__init__(
            f"untokenizable residue {transcription[position:]!r} at position {position} "
            f"of {transcription!r}"
        )


class SyllabificationError(SylContactError):
    pass


class RepairError(SylContactError):
    pass


class UndefinedEventError(SylContactError):
    """A PMI event has zero marginal probability."""


class EmptyTableError(SylContactError):
    pass


class TrendFitError(SylContactError):
    pass


class LexiconFormatError(SylContactError):
    pass
