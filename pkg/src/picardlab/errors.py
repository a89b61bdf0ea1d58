"""Exception hierarchy shared by all modules."""


class PicardLabError(ValueError):
    """Base class for domain errors (invalid classes, types, generators)."""


class DimensionError(PicardLabError):
    pass


class InvalidInputError(PicardLabError):
    pass


class InvalidGeneratorError(PicardLabError):
    pass


class UnsupportedContextError(PicardLabError):
    pass


class ParseError(PicardLabError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
