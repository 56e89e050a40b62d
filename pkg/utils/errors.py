"""
Error hierarchy shared by every simiscalc module
"""
from typing import Optional


class SimisCalcError(Exception):
    """Base class for all simiscalc errors"""


class AmbientMismatchError(SimisCalcError, ValueError):
    """Operands belong to rings with different variable counts"""

    def __init__(self, left: int, right: int):
        super().__init__(f"ambient mismatch: {left} variables vs {right} variables")
        self.left = left
        self.right = right


class ConfigError(SimisCalcError, ValueError):
    """A SIMISCALC_* setting is malformed or out of range"""

    def __init__(self, name: str, value: str, reason: str):
        super().__init__(f"invalid {name}={value!r}: {reason}")
        self.name = name
        self.value = value


class ExponentOverflowError(SimisCalcError, OverflowError):
    """Checked exponent arithmetic left the fixed-width range"""


class GeneratorLimitError(SimisCalcError, RuntimeError):
    """An intermediate ideal grew beyond the configured generator ceiling"""

    def __init__(self, count: int, limit: int):
        super().__init__(
            f"generator ceiling exceeded: {count} candidates > limit {limit} "
            f"(raise SIMISCALC_GEN_LIMIT to allow more)"
        )
        self.count = count
        self.limit = limit


class DomainError(SimisCalcError, ValueError):
    """Operation requested outside its mathematical domain"""


class NotSupport2Error(DomainError):
    """A minimal generator does not have support of size two"""

    def __init__(self, generator: str, support_size: int):
        super().__init__(
            f"not a support-2 ideal: generator {generator} has support of size {support_size}"
        )
        self.generator = generator
        self.support_size = support_size


class CoverBoundError(DomainError):
    """Vertex cover enumeration requested above the configured bound"""


class ParseError(SimisCalcError, ValueError):
    """Syntax error in an ideal document"""

    def __init__(self, message: str, line: int, column: int, source: Optional[str] = None):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}")
        self.line = line
        self.column = column
