class OiluError(ValueError):
    """Base class for domain errors; ``code`` is the machine-readable tag used by the CLI."""

    code = "domain_error"

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class EmptyInput(OiluError):
    code = "empty_input"


class InvalidCharacter(OiluError):
    code = "invalid_character"


class InvalidDigit(OiluError):
    code = "invalid_digit"


class OddLength(OiluError):
    code = "odd_length"


class UnknownPair(OiluError):
    code = "unknown_pair"


class StepDomainError(OiluError):
    code = "step_domain"

    def __init__(self, message, step=None, position=None, iteration=None):
        super().__init__(message, position)
        self.step = step
        self.iteration = iteration


class SizeTooSmall(OiluError):
    code = "size_too_small"


class UnreadableLevel(OiluError):
    code = "unreadable_level"

    def __init__(self, level):
        super().__init__(f"level {level} does not classify as an OILU glyph", level)
        self.level = level


class BadImage(OiluError):
    code = "bad_image"
