"""
Provides classes for tracing what the solver does.

Each splice the solver performs on an exchange sequence runs inside a :py:class:`SpliceAction` naming the
case that was applied, whole solves run inside a :py:class:`SolveAction`. The active :py:class:`Context`
is told about each action as it starts and finishes.

A :py:class:`DefaultContext` traces actions into a tree as they are executed (a solve action has
as its children the solves of relaxations and minors and the splices it has done).

A :py:class:`ProvenanceContext` keeps one line per splice together with per-case counters.
"""
from abc import abstractmethod, ABC
from collections import OrderedDict, Counter
from copy import deepcopy
from contextlib import contextmanager
from enum import Enum
from typing import List, Optional, Any, Callable, Iterator

from public import public


@public
class SpliceCase(Enum):
    """The rewrites the solver splices into exchange sequences."""

    ReducePartnerHeavy = "reduce-partner-heavy"
    ReducePartnerLight = "reduce-partner-light"
    ReduceDetour = "reduce-detour"
    ReduceBystanderBases = "reduce-bystander-bases"
    ReduceBystanderMixed = "reduce-bystander-mixed"
    ReduceBystanderType0 = "reduce-bystander-type0"
    EliminateMerge = "eliminate-merge"
    EliminatePairStar = "eliminate-pair-star"
    EliminateTripleStar = "eliminate-triple-star"
    EliminateOneSideType0 = "eliminate-one-side-type0"
    EliminateBothSidesType0 = "eliminate-both-sides-type0"
    Lift2Type0Pair = "lift2-type0-pair"
    Lift2Star = "lift2-star"

    @property
    def label(self) -> str:
        """The case of the lifting argument the rewrite carries out."""
        return _CASE_LABELS[self]

    def __str__(self):
        return self.value


_CASE_LABELS = {
    SpliceCase.ReducePartnerHeavy: "separate-I(a)",
    SpliceCase.ReducePartnerLight: "separate-I(b)",
    SpliceCase.ReduceDetour: "separate-II(a)",
    SpliceCase.ReduceBystanderBases: "separate-II(b)",
    SpliceCase.ReduceBystanderMixed: "separate-II(c)",
    SpliceCase.ReduceBystanderType0: "separate-II(d)",
    SpliceCase.EliminateMerge: "eliminate-I-merge",
    SpliceCase.EliminatePairStar: "eliminate-I-star",
    SpliceCase.EliminateTripleStar: "eliminate-II-star",
    SpliceCase.EliminateOneSideType0: "eliminate-II(a)",
    SpliceCase.EliminateBothSidesType0: "eliminate-II(b)",
    SpliceCase.Lift2Type0Pair: "pair-type0-run",
    SpliceCase.Lift2Star: "pair-star",
}


@public
class Action:
    """Something the solver does, announced to the active context on entry and exit."""

    inside: bool

    def __init__(self):
        self.inside = False

    def __enter__(self):
        if current is not None:
            current.enter_action(self)
        self.inside = True
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if current is not None:
            current.exit_action(self)
        self.inside = False


@public
class ResultAction(Action):
    """An action that has to produce a result before it is left without an exception."""

    _result: Any = None
    _has_result: bool = False

    @property
    def result(self) -> Any:
        if not self._has_result:
            raise AttributeError(f"{self!r} has no result")
        return self._result

    def exit(self, result: Any):
        """Record the result of the action, only the first one counts."""
        if not self.inside:
            raise RuntimeError(f"Result of {self!r} set outside of it")
        if not self._has_result:
            self._result, self._has_result = result, True
        return self._result

    def __exit__(self, exc_type, exc_val, exc_tb):
        if exc_type is None and not self._has_result:
            raise RuntimeError(f"{self!r} left without a result")
        super().__exit__(exc_type, exc_val, exc_tb)


@public
class SpliceAction(Action):
    """A rewrite of a window of an exchange sequence."""

    case: SpliceCase
    step: int

    def __init__(self, case: SpliceCase, step: int):
        super().__init__()
        self.case = case
        self.step = step

    def __str__(self):
        return f"apply {self.case.label} at step {self.step} ({self.case})"

    def __repr__(self):
        return f"{self.__class__.__name__}({self.case!s}, step={self.step})"


@public
class SolveAction(ResultAction):
    """A solve of one instance, with the produced exchange sequence as result."""

    matroid: Any
    start: tuple
    end: tuple

    def __init__(self, matroid, start: tuple, end: tuple):
        super().__init__()
        self.matroid = matroid
        self.start = start
        self.end = end

    def __repr__(self):
        return f"{self.__class__.__name__}({self.matroid!s}, degree={len(self.start)})"


@public
class Tree(OrderedDict):
    """Nested actions, each key maps to the tree of actions that ran inside it."""

    def get_by_key(self, path: List) -> Any:
        """
        Descend along ``path``.

        :param path: The keys, outermost first.
        :return: The subtree or value at the end of the path.
        :raises ValueError: If the path runs through a leaf.
        """
        node: Any = self
        for key in path:
            if not isinstance(node, Tree):
                raise ValueError(f"Path {path!r} runs through a leaf.")
            node = node[key]
        return node

    def repr(self, depth: int = 0) -> str:
        """Render the tree one key per line, nesting shown by tabs."""
        lines = []
        for key, value in self.items():
            if isinstance(value, Tree):
                lines.append("\t" * depth + f"{key}\n" + value.repr(depth + 1))
            else:
                lines.append("\t" * depth + f"{key}:{value}\n")
        return "".join(lines)

    def walk(self, callback: Callable[[Any], None]) -> None:
        """Call ``callback`` on every key, depth-first in insertion order."""
        for key, value in self.items():
            callback(key)
            if isinstance(value, Tree):
                value.walk(callback)

    def __repr__(self):
        return self.repr()


@public
class Context(ABC):
    """
    Receives the actions of the solver as they start and finish.

    At most one context is active at a time, see :py:func:`local`.
    """

    @abstractmethod
    def enter_action(self, action: Action) -> None:
        raise NotImplementedError

    @abstractmethod
    def exit_action(self, action: Action) -> None:
        raise NotImplementedError

    def __str__(self):
        return self.__class__.__name__


@public
class DefaultContext(Context):
    """Context that nests every action under the action it ran in."""

    actions: Tree
    current: List[Action]
    """The actions currently running, outermost first."""

    def __init__(self):
        self.actions = Tree()
        self.current = []

    def enter_action(self, action: Action) -> None:
        self.actions.get_by_key(self.current)[action] = Tree()
        self.current.append(action)

    def exit_action(self, action: Action) -> None:
        if not self.current or self.current[-1] is not action:
            raise ValueError(f"{action!r} is not the innermost running action.")
        self.current.pop()

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.actions)} solves, current={self.current!r})"


@public
class ProvenanceContext(Context):
    """Context that records a provenance line per splice and counts the applied cases."""

    lines: List[str]
    counts: Counter

    def __init__(self):
        self.lines = []
        self.counts = Counter()

    def enter_action(self, action: Action) -> None:
        if isinstance(action, SpliceAction):
            self.lines.append(str(action))
            self.counts[action.case] += 1

    def exit_action(self, action: Action) -> None:
        pass

    def log(self) -> str:
        return "".join(line + "\n" for line in self.lines)

    def __repr__(self):
        return f"{self.__class__.__name__}({len(self.lines)} splices)"


current: Optional[Context] = None
"""The active context, ``None`` when nothing is traced."""


@public
@contextmanager
def local(ctx: Optional[Context] = None) -> Iterator[Optional[Context]]:
    """
    Trace into a copy of ``ctx`` for the duration of the block.

    :param ctx: The context to copy, tracing is off inside if ``None``.
    :return: A context manager giving the active copy.
    """
    global current
    previous = current
    current = deepcopy(ctx)
    try:
        yield current
    finally:
        current = previous
