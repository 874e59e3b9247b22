"""Exception types raised by the package."""


class ValidationError(ValueError):
    """An input failed a named structural or numerical check."""

    def __init__(self, check, message):
        self.check = check
        super().__init__(f"{check}: {message}")


class NotPositiveSemidefiniteError(ValidationError):
    def __init__(self, eigenvalue):
        self.eigenvalue = float(eigenvalue)
        super().__init__(
            "positive-semidefinite",
            f"eigenvalue {self.eigenvalue:.3e} is below the clamping tolerance",
        )


class UnsupportedDimensionError(ValidationError):
    def __init__(self, message):
        super().__init__("dimension", message)


class PurityError(ValidationError):
    def __init__(self, purity):
        self.purity = float(purity)
        super().__init__("purity", f"Tr(rho^2) = {self.purity:.12g}, expected 1")


class MeasureRangeError(ValidationError):
    def __init__(self, name, value):
        self.value = float(value)
        super().__init__("measure-range", f"{name} = {self.value:.3e} lies outside [0, 1]")
