class CentralizerError(Exception):
    """Base exception for language tables, block codes and the phi pipeline."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NoStabilizationError(CentralizerError):
    """Exception raised when factor sets keep changing up to the last allowed stage."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class RepeatingScheduleError(CentralizerError):
    """Exception raised when a language is requested for a schedule with no non-repeating evidence."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class OffsetExceedsRadiusError(CentralizerError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class CodeDomainError(CentralizerError):
    """Exception raised when a block code is applied outside the words it is defined on."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NormalizationRequiredError(CentralizerError):
    """Exception raised when some return has no partner in (i - h_1, i] at a stage-0 base level."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class OffsetsInconsistentError(CentralizerError):
    """Exception raised when the matched offsets i - phi(i) are not all equal."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)
