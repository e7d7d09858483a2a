"""Exception hierarchy shared by all modules."""


class FrameworkError(Exception):
    """Base class for every error raised by this package."""


class UnknownRecogniser(FrameworkError, IndexError):
    pass


class ObjectDomainError(FrameworkError, ValueError):
    """An object does not belong to the framework's object domain."""


class InvalidLanguage(FrameworkError, ValueError):
    pass


class AlphabetMismatch(FrameworkError, ValueError):
    pass


class FreeVariableError(FrameworkError, ValueError):
    pass


class ArityError(FrameworkError, ValueError):
    pass


class ParseError(FrameworkError, ValueError):
    pass


class PreconditionError(FrameworkError, ValueError):
    """An operation was called outside its documented precondition."""


class SpaceTooLarge(FrameworkError, ValueError):
    pass


class NotFound(FrameworkError, LookupError):
    """No enumerated object within the budget realizes a point."""
