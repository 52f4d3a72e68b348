class PointError(Exception):
    """Base exception for point-address arithmetic."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class AddressFormatError(PointError):
    """Exception raised when an address string is not of the form 'depth:level'."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class LevelOutOfRangeError(PointError):
    """Exception raised when a level index does not satisfy 0 <= j < h_N."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class StageOutOfRangeError(PointError):
    """Exception raised when a stage lies outside the range an operation accepts."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class CopyIndexOutOfRangeError(PointError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class WindowExceedsDepthError(PointError):
    """Exception raised when a return window leaves the depth-N tower; extend the address first."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class NotInteriorError(PointError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class TooFewReturnsError(PointError):
    """Exception raised when a window holds too few returns for the requested analysis."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class AnchorNotFoundError(PointError):
    """Exception raised when no return of a window sits at the base of the stage-n tower."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class DepthMismatchError(PointError):
    """Exception raised when two addresses that must be compared have different depths."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class IdenticalAddressesError(PointError):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)
