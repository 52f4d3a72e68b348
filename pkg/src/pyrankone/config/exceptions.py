class ConfigError(Exception):
    """Base exception for invalid budgets or run configuration."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class BudgetFormatError(ConfigError):
    """Exception raised when a budget override cannot be parsed."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class ConfigFileError(ConfigError):
    """Exception raised when a TOML configuration file cannot be read."""
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)
