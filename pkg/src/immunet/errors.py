"""Exception types shared across the package."""


class ImmunetError(Exception):
    pass


class GraphParseError(ImmunetError, ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based."""

    def __init__(self, lineno, line):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: expected two vertex labels, got {line!r}")


class CapabilityError(ImmunetError):
    """An exhaustive or dense routine was asked to run past its size guard."""


class StateError(ImmunetError):
    pass


class NonConvergenceError(ImmunetError):
    """Power iteration hit ``max_iter``; ``result`` holds the best estimate."""

    def __init__(self, result):
        self.result = result
        super().__init__(
            f"power iteration did not converge in {result.iterations} iterations "
            f"(lambda1 ~ {result.lambda1:.12g}, residual {result.residual:.3g})"
        )
