#!/usr/bin/env python3
"""
Exception hierarchy for the RTA engine
Library code raises these; only rta.py turns them into exit codes
"""

from typing import Optional, Tuple


class RTAError(Exception):
    """Base class for every engine error"""


class ScalarParseError(RTAError):
    """Scalar literal could not be parsed"""


class ExpressionError(RTAError):
    """Expression text is malformed"""

    def __init__(self, message: str, token: Optional[str] = None,
                 position: Optional[int] = None):
        self.token = token
        self.position = position
        if token is not None:
            message = f"{message} (at '{token}'"
            message += f", column {position + 1})" if position is not None else ")"
        super().__init__(message)


class PresentationError(RTAError):
    """Presentation is inconsistent or the file is malformed"""


class UnknownSymbolError(PresentationError):
    """Symbol not declared in the presentation"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown symbol '{name}'")


class MissingRuleError(PresentationError):
    """Out-of-order pair without a rewrite rule"""

    def __init__(self, pair: Tuple[str, str]):
        self.pair = pair
        super().__init__(f"no rewrite rule for out-of-order pair {pair[0]}*{pair[1]}")


class TerminationError(PresentationError):
    """Rule right-hand side does not lower the disorder measure"""


class ModelMismatchError(RTAError):
    """Weights or root vectors from different models were combined"""


class WeightError(RTAError):
    """Malformed weight literal or undefined weight evaluation"""


class UnsupportedParameterError(RTAError):
    """Unknown family, parameter out of range, or unsupported combination"""


class MissingDataError(RTAError):
    """Optional algebra data (Hopf, anti-involution) is absent"""


class HypothesisError(RTAError):
    """[raising, lowering] bracket survives modulo A*N+ and B-*ker(lambda)"""

    def __init__(self, pair: Tuple[str, str], residue: str):
        self.pair = pair
        self.residue = residue
        super().__init__(
            f"[{pair[0]}, {pair[1]}] leaves {residue} outside A*N+ + B-*ker(lambda)")


class ZeroWeightError(RTAError):
    """Weight list handed to the grading search contains zero"""


class SubgroupError(RTAError):
    """Restriction subgroup does not contain the required grouplikes"""
