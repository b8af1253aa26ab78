from pywhite.matroid.elements import from_elements, iter_elements
from pywhite.matroid.generate import make_uniform
from pywhite.matroid.matroid import Matroid
from pywhite.oracle.binomial import (
    BinomialRelation,
    emit_quadric_binomials,
    binomial_in_kernel,
    format_binomials,
    dump_binomials,
)
from pywhite.white.sequence import multiset_union


def test_u23():
    relations = emit_quadric_binomials(make_uniform(3, 2))
    assert len(relations) == 3
    assert all(relation.trivial for relation in relations)


def test_u24(u24):
    relations = emit_quadric_binomials(u24)
    assert any(not relation.trivial for relation in relations)
    relation = BinomialRelation(from_elements([0, 1]), from_elements([2, 3]), from_elements([0, 2]), from_elements([1, 3]))
    assert relation in relations
    assert str(relation) == "binomial A=0,1 B=2,3 A'=0,2 B'=1,3"


def test_m1(m1):
    relations = emit_quadric_binomials(m1)
    assert relations
    for relation in relations:
        assert multiset_union((relation.a, relation.b)) == multiset_union((relation.a2, relation.b2))
        assert binomial_in_kernel(m1, relation)


def test_kernel(m1, u24):
    relation = BinomialRelation(from_elements([0, 1]), from_elements([2, 3]), from_elements([0, 2]), from_elements([1, 3]))
    assert binomial_in_kernel(u24, relation)
    assert not binomial_in_kernel(m1, relation)
    wrong = BinomialRelation(from_elements([0, 2]), from_elements([1, 3]), from_elements([0, 3]), from_elements([0, 2]))
    assert not binomial_in_kernel(u24, wrong)


def test_fano_automorphism(fano):
    permutation = [0, 3, 4, 1, 2, 5, 6]

    def relabel(basis):
        return from_elements(permutation[e] for e in iter_elements(basis))

    relabeled = Matroid(7, 3, [relabel(basis) for basis in fano.bases])
    assert relabeled == fano
    assert len(emit_quadric_binomials(relabeled)) == len(emit_quadric_binomials(fano))


def test_format(u24, tmp_path):
    relations = emit_quadric_binomials(u24)
    text = format_binomials(relations)
    assert len(text.splitlines()) == len(relations)
    assert all(line.startswith("binomial A=") for line in text.splitlines())
    path = tmp_path / "binomials.txt"
    dump_binomials(relations, path)
    assert path.read_text() == text
