"""COPD Simulator Module"""
# standard library
import logging

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class BaseValueError(ValueError):
    """Raise customized exception."""

    def __init__(self, field_name: str, message: str):
        """Customize the exception message."""
        _logger.debug(f'event=value-error, field={field_name}, message="{message}"')
        self.field_name = field_name
        self.message = message
        super().__init__(message)


class ConstraintViolation(BaseValueError):
    """A single configuration field failed one of its bounds."""

    @classmethod
    def bound(cls, field_name: str, operation: str, constraint: float | int | str):
        """Return a violation worded as "<field> must be <operation> <constraint>"."""
        return cls(field_name, f'{field_name} must be {operation} {constraint}')


class InvalidSide(BaseValueError):
    """Raise customized exception."""

    def __init__(self, side: int):
        """Customize the exception message."""
        super().__init__('side', f'side must be at least 3 (got {side})')


class NotAdjacent(BaseValueError):
    """Raise customized exception."""

    def __init__(self, x: int, y: int):
        """Customize the exception message."""
        super().__init__('cell', f'cells {x} and {y} are not Moore neighbors')


class WindowTooLarge(BaseValueError):
    """Raise customized exception."""

    def __init__(self, tail_window: int, length: int):
        """Customize the exception message."""
        super().__init__(
            'tail_window', f'tail_window {tail_window} exceeds series length {length}'
        )


class MixedConfigs(BaseValueError):
    """Raise customized exception."""

    def __init__(self, digests: set[str]):
        """Customize the exception message."""
        super().__init__(
            'config_digest',
            f'cannot aggregate results of {len(digests)} different configs',
        )


class StateSpaceOverflow(BaseValueError):
    """Raise customized exception."""

    def __init__(self, cap: int):
        """Customize the exception message."""
        super().__init__('big_delta', f'reachable weight set exceeded {cap} states')


class InvariantViolation(BaseValueError):
    """Raise customized exception."""

    def __init__(self, step: int, message: str):
        """Customize the exception message."""
        super().__init__('grid', f'invariant violated after MC step {step}: {message}')


class ConfigValidationError(ValueError):
    """Every constraint violated by one configuration."""

    def __init__(self, violations: list[ConstraintViolation]):
        """Initialize instance properties."""
        self.violations = violations
        super().__init__('; '.join(v.message for v in violations))


class OutputError(OSError):
    """Writing an output file failed."""

    def __init__(self, path, error: Exception):
        """Customize the exception message."""
        _logger.error(f'event=output-error, path={path}, error="{error}"')
        self.path = path
        super().__init__(f'failed writing {path}: {error}')
