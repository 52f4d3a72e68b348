class TowerError(Exception):
    """Base exception for schedule, word and expected-set failures."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class ScheduleError(TowerError):
    """Exception raised for an invalid cutting schedule."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class QInvalidError(ScheduleError):
    """Exception raised when a stage has fewer than two copies."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class SpacerCountMismatchError(ScheduleError):
    """Exception raised when a stage does not carry exactly q - 1 spacer counts."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NegativeSpacerError(ScheduleError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class H0InvalidError(ScheduleError):
    """Exception raised when the stage-0 height is not positive."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class TailInvalidError(ScheduleError):
    """Exception raised when a tail rule cannot extend the schedule."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class ScheduleFormatError(ScheduleError):
    """Exception raised when a raw schedule document is malformed."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class UnknownScheduleError(ScheduleError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class BudgetExceededError(TowerError):
    """Exception raised when a computation would exceed its configured budget."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class HeightOverflowError(BudgetExceededError):
    """Exception raised when a tower height grows beyond `max_height`."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class StageRangeError(TowerError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)
