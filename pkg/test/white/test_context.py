import pytest

from pywhite.matroid.elements import from_elements
from pywhite.white.context import (
    local,
    DefaultContext,
    ProvenanceContext,
    Tree,
    SpliceAction,
    SpliceCase,
    SolveAction,
    ResultAction,
)
from pywhite.white.solver import Solver


def test_walk_by_key():
    tree = Tree()
    tree["a"] = Tree()
    tree["a"]["1"] = Tree()
    tree["a"]["2"] = Tree()
    assert "a" in tree
    assert isinstance(tree.get_by_key([]), Tree)
    assert isinstance(tree.get_by_key(["a"]), Tree)
    assert isinstance(tree.get_by_key(["a", "1"]), Tree)


def test_walk():
    tree = Tree()
    tree["a"] = Tree()
    tree["a"]["1"] = Tree()
    tree["b"] = Tree()
    visited = []
    tree.walk(visited.append)
    assert visited == ["a", "1", "b"]
    assert tree.repr() == "a\n\t1\nb\n"


def test_result_action():
    with pytest.raises(RuntimeError):
        with ResultAction():
            pass
    with ResultAction() as action:
        action.exit(3)
    assert action.result == 3
    with pytest.raises(AttributeError):
        _ = ResultAction().result
    with pytest.raises(RuntimeError):
        ResultAction().exit(1)


def test_splice_action():
    action = SpliceAction(SpliceCase.EliminateMerge, 4)
    assert str(action) == "apply eliminate-I-merge at step 4 (eliminate-merge)"
    assert str(SpliceCase.Lift2Star) == "lift2-star"


def test_case_labels():
    labels = [case.label for case in SpliceCase]
    assert len(set(labels)) == len(labels)
    assert SpliceCase.ReduceBystanderMixed.label == "separate-II(c)"
    assert str(SpliceAction(SpliceCase.ReduceBystanderMixed, 7)) == "apply separate-II(c) at step 7 (reduce-bystander-mixed)"
    for case in SpliceCase:
        assert str(SpliceAction(case, 0)).startswith(f"apply {case.label} at step 0")


def test_provenance():
    with local(ProvenanceContext()) as ctx:
        with SpliceAction(SpliceCase.ReduceDetour, 1):
            pass
        with SpliceAction(SpliceCase.ReduceDetour, 3):
            pass
        with SpliceAction(SpliceCase.Lift2Star, 0):
            pass
    assert ctx.log() == (
        "apply separate-II(a) at step 1 (reduce-detour)\n"
        "apply separate-II(a) at step 3 (reduce-detour)\n"
        "apply pair-star at step 0 (lift2-star)\n"
    )
    assert ctx.counts[SpliceCase.ReduceDetour] == 2
    assert ctx.counts[SpliceCase.EliminateMerge] == 0


def test_default_context(m1):
    start = (from_elements([0, 2]), from_elements([1, 3]))
    end = (from_elements([1, 3]), from_elements([0, 2]))
    with local(DefaultContext()) as ctx:
        Solver().solve(m1, start, end)
    assert len(ctx.actions) == 1
    action = next(iter(ctx.actions))
    assert isinstance(action, SolveAction)
    assert action.matroid == m1
    assert action.result.end == end
    children = list(ctx.actions[action])
    assert any(isinstance(child, SolveAction) and child.matroid.is_uniform() for child in children)
    assert ctx.current == []


def test_local_none():
    with local() as ctx:
        assert ctx is None
        with SpliceAction(SpliceCase.ReduceDetour, 0) as action:
            assert action.inside
    assert not action.inside
