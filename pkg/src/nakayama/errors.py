"""Exception types raised by the library."""


class NakayamaError(ValueError):
    pass


class InvalidSeries(NakayamaError):
    """A sequence that is not the Kupisch series of a connected non-semisimple Nakayama algebra."""

    def __init__(self, reason, index=None):
        self.reason = reason
        self.index = index
        msg = reason if index is None else f"{reason} (at index {index})"
        super().__init__(msg)


class InvalidModule(NakayamaError):
    pass


class HypothesisViolated(NakayamaError):
    pass


class OutOfRange(NakayamaError):
    pass
