"""Contains exceptions and warnings used in the library."""
import warnings
from typing import Optional

from public import public

from ..misc.cfg import getconfig


@public
class PreconditionError(ValueError):
    """An input violated the documented preconditions of an operation."""

    pass


@public
class InternalError(RuntimeError):
    """A step that is guaranteed to succeed for valid inputs did not."""

    pass


@public
class InvalidMatroidError(PreconditionError):
    """A basis family violates the basis exchange axiom."""

    pass


@public
class InvalidMatroidWarning(UserWarning):
    """A basis family violates the basis exchange axiom."""

    pass


def raise_invalid_matroid(msg: str):
    """
    Raise either :py:class:`InvalidMatroidError` or :py:class:`InvalidMatroidWarning` or ignore.

    Depends on the current config value of :py:attr:`MatroidConfig.validate_action`.
    """
    cfg = getconfig()
    if cfg.matroid.validate_action == "error":
        raise InvalidMatroidError(msg)
    elif cfg.matroid.validate_action == "warning":
        warnings.warn(InvalidMatroidWarning(msg))


@public
class NotPavingError(PreconditionError):
    """A paving matroid was required."""

    pass


@public
class NonPavingWarning(UserWarning):
    """A non-paving matroid was accepted."""

    pass


def raise_non_paving(msg: str):
    """
    Raise either :py:class:`NotPavingError` or :py:class:`NonPavingWarning` or ignore.

    Depends on the current config value of :py:attr:`SolverConfig.non_paving_action`.
    """
    cfg = getconfig()
    if cfg.solver.non_paving_action == "error":
        raise NotPavingError(msg)
    elif cfg.solver.non_paving_action == "warning":
        warnings.warn(NonPavingWarning(msg))


@public
class NotABasisError(PreconditionError):
    """A set that should be a basis is not one."""

    pass


@public
class UnequalUnionError(PreconditionError):
    """Two basis tuples do not have the same multiset union."""

    pass


@public
class RelaxationError(PreconditionError):
    """A relaxation was requested at a set that is not a large enough stressed hyperplane."""

    pass


@public
class FormatError(PreconditionError):
    """A text file could not be parsed."""

    line: Optional[int]

    def __init__(self, msg: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            msg = f"line {line}: {msg}"
        super().__init__(msg)


@public
class FiberLimitError(PreconditionError):
    """A fiber is larger than the configured cap."""

    pass


@public
class UnreachableBranchError(InternalError):
    """A case analysis ran out of cases."""

    pass


@public
class CertificateError(InternalError):
    """A produced exchange sequence failed validation."""

    report: object

    def __init__(self, msg: str, report: object = None):
        self.report = report
        super().__init__(msg)


@public
class DepthLimitError(InternalError):
    """The nesting of repairs exceeded :py:attr:`SolverConfig.depth_cap`."""

    pass


@public
class DisconnectedFiberError(InternalError):
    """Two tuples with the same multiset union are not connected by symmetric exchanges."""

    pass
