"""
Provides the runtime configuration of pywhite.

It covers how invalid inputs are handled, the recursion and memoization behavior of the
solver and the limits of the brute-force oracle.
"""
from copy import deepcopy
from contextvars import ContextVar, Token
from typing import Optional

from public import public

_ACTIONS = ("error", "warning", "ignore")


@public
class MatroidConfig:
    """Configuration for the :py:mod:`pywhite.matroid` package."""

    _validate_action: str = "error"

    @property
    def validate_action(self) -> str:
        """
        Return or set the action to take when a loaded matroid violates the basis exchange axiom.

        One of:

         - ``"error"``: Raise :py:class:`pywhite.matroid.error.InvalidMatroidError`.
         - ``"warning"``: Raise :py:class:`pywhite.matroid.error.InvalidMatroidWarning`.
         - ``"ignore"``: Ignore the event and use the basis family as is.
        """
        return self._validate_action

    @validate_action.setter
    def validate_action(self, value: str):
        if value not in _ACTIONS:
            raise ValueError("Action has to be one of 'error', 'warning', 'ignore'.")
        self._validate_action = value


@public
class SolverConfig:
    """Configuration for the :py:mod:`pywhite.white` package."""

    _non_paving_action: str = "error"
    _depth_cap: int = 64
    _memoize: bool = True
    _verify_output: bool = True

    @property
    def non_paving_action(self) -> str:
        """
        Return or set the action to take when the solver is given a non-paving matroid.

        The relaxation lifting is only guaranteed to succeed on paving matroids. On other
        matroids with a stressed hyperplane it may still work, which is what the non-default
        actions are for.
        One of:

         - ``"error"``: Raise :py:class:`pywhite.matroid.error.NotPavingError`.
         - ``"warning"``: Raise :py:class:`pywhite.matroid.error.NonPavingWarning` and proceed.
         - ``"ignore"``: Proceed silently.
        """
        return self._non_paving_action

    @non_paving_action.setter
    def non_paving_action(self, value: str):
        if value not in _ACTIONS:
            raise ValueError("Action has to be one of 'error', 'warning', 'ignore'.")
        self._non_paving_action = value

    @property
    def depth_cap(self) -> int:
        """Return or set the maximal nesting of degree-3 repairs across hyperplane switches."""
        return self._depth_cap

    @depth_cap.setter
    def depth_cap(self, value: int):
        if value <= 0:
            raise ValueError("Depth cap has to be positive.")
        self._depth_cap = value

    @property
    def memoize(self) -> bool:
        """Return or set whether solved sub-instances are memoized within one solve."""
        return self._memoize

    @memoize.setter
    def memoize(self, value: bool):
        self._memoize = bool(value)

    @property
    def verify_output(self) -> bool:
        """Return or set whether every certificate produced by the solver is re-validated."""
        return self._verify_output

    @verify_output.setter
    def verify_output(self, value: bool):
        self._verify_output = bool(value)


@public
class OracleConfig:
    """Configuration for the :py:mod:`pywhite.oracle` package."""

    _fiber_cap: int = 10 ** 7
    _workers: int = 1

    @property
    def fiber_cap(self) -> int:
        """Return or set the maximal number of tuples in a fiber the oracle is willing to build."""
        return self._fiber_cap

    @fiber_cap.setter
    def fiber_cap(self, value: int):
        if value <= 0:
            raise ValueError("Fiber cap has to be positive.")
        self._fiber_cap = value

    @property
    def workers(self) -> int:
        """Return or set the number of worker processes used to verify independent fibers."""
        return self._workers

    @workers.setter
    def workers(self, value: int):
        if value < 1:
            raise ValueError("Need at least one worker.")
        self._workers = value


@public
class Config:
    """All runtime settings, one object per package."""

    matroid: MatroidConfig
    """Configuration for the :py:mod:`pywhite.matroid` package."""
    solver: SolverConfig
    """Configuration for the :py:mod:`pywhite.white` package."""
    oracle: OracleConfig
    """Configuration for the :py:mod:`pywhite.oracle` package."""

    def __init__(self):
        self.matroid = MatroidConfig()
        self.solver = SolverConfig()
        self.oracle = OracleConfig()


_config: ContextVar[Config] = ContextVar("config", default=Config())


@public
def getconfig() -> Config:
    """The config active in the current context."""
    return _config.get()


@public
def setconfig(cfg: Config) -> Token:
    """
    Make ``cfg`` the active config.

    :param cfg: The config.
    :return: A token for :py:func:`resetconfig`.
    """
    return _config.set(cfg)


@public
def resetconfig(token: Token) -> None:
    """Restore the config that was active before the :py:func:`setconfig` call that gave ``token``."""
    _config.reset(token)


@public
class TemporaryConfig:
    """
    A copy of the active config, active inside a ``with`` block:

    .. code-block:: python

        with TemporaryConfig() as cfg:
            cfg.solver.depth_cap = 16
            Solver().solve(matroid, start, end)
    """

    token: Optional[Token]

    def __init__(self):
        self.token = None
        self.config = deepcopy(getconfig())

    def __enter__(self) -> Config:
        self.token = setconfig(self.config)
        return self.config

    def __exit__(self, t, v, tb):
        if self.token is not None:
            resetconfig(self.token)
            self.token = None
