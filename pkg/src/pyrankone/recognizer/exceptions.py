class RecognizerError(Exception):
    """Base exception for occurrence recognition failures."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NoWitnessError(RecognizerError):
    """Exception raised when no non-constant-gap witness exists, so the context bound is undefined."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NotAnOccurrenceError(RecognizerError):
    """Exception raised when the queried position does not start an occurrence of W_n."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class EmptyNeedleError(RecognizerError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class InsufficientContextError(RecognizerError):
    """Exception raised when a word is too short to decide whether an occurrence is expected."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)
