"""Error contracts: domain errors surface as ValueError with usable messages."""

import numpy as np
import pytest

from hallalg import ClassTable, GroundField, Quiver, Rep, hom_dim

from conftest import a2, jordan


def test_rep_shape_validation():
    with pytest.raises(ValueError):
        Rep(a2(), 2, (1, 1), [np.zeros((2, 1), dtype=np.int64)])
    with pytest.raises(ValueError):
        Rep(a2(), 2, (1,), [np.zeros((1, 1), dtype=np.int64)])
    with pytest.raises(ValueError):
        Rep(a2(), 2, (1, -1), [np.zeros((0, 1), dtype=np.int64)])


def test_hom_requires_matching_context():
    m = Rep.simple(a2(), 2, 0)
    n = Rep.simple(jordan(), 2, 0)
    with pytest.raises(ValueError):
        hom_dim(m, n)
    n3 = Rep.simple(a2(), 3, 0)
    with pytest.raises(ValueError):
        hom_dim(m, n3)


def test_classify_rejects_non_nilpotent():
    t = ClassTable(jordan(), GroundField(2), (1,))
    bad = Rep(jordan(), 2, (1,), [np.array([[1]])])
    with pytest.raises(ValueError):
        t.classify(bad)


def test_table_bound_validation():
    with pytest.raises(ValueError):
        ClassTable(a2(), GroundField(2), (2,))
    with pytest.raises(ValueError):
        ClassTable(a2(), GroundField(2), (2, -1))
    t = ClassTable(a2(), GroundField(2), (1, 1))
    with pytest.raises(ValueError):
        t.classes((2, 2))


def test_direct_sum_requires_same_context():
    m = Rep.simple(a2(), 2, 0)
    n = Rep.simple(jordan(), 2, 0)
    with pytest.raises(ValueError):
        m.direct_sum(n)
