"""COPD Simulator Module"""
# standard library
import logging

# per-step diagnostics sit below DEBUG
logging.TRACE = logging.DEBUG - 5  # type: ignore
logging.addLevelName(logging.TRACE, 'TRACE')  # type: ignore


class TraceLogger(logging.Logger):
    """Logger with a TRACE level for per-MC-step records."""

    def trace(self, msg, *args, **kwargs):
        """Log at trace level, attributing the record to the caller of trace()."""
        if self.isEnabledFor(logging.TRACE):  # type: ignore
            kwargs.setdefault('stacklevel', 2)
            self._log(logging.TRACE, msg, args, **kwargs)  # type: ignore
