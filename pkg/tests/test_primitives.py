import pytest

from hallalg import ClassTable, DoubleHall, GroundField
from hallalg.primitives import (
    decomposable_span,
    extend_datum,
    is_primitive,
    primitive_space,
)

from conftest import a2, jordan, kronecker


def _H(table):
    return DoubleHall(table)


def _proportional(H, x, y):
    """Whether two nonzero elements span the same line."""
    sx = sorted(x.terms.items())
    sy = sorted(y.terms.items())
    if [k for k, _ in sx] != [k for k, _ in sy]:
        return False
    ratio = sx[0][1] / sy[0][1]
    return all(cx == ratio * cy for (_, cx), (_, cy) in zip(sx, sy))


def test_decomposable_span_dims(a2_q2, kronecker_q2, jordan_q2):
    assert decomposable_span(_H(a2_q2), (1, 1)).dim == 2
    assert decomposable_span(_H(kronecker_q2), (1, 1)).dim == 2
    assert decomposable_span(_H(jordan_q2), (2,)).dim == 1


def test_jordan_decomposable_span_content(jordan_q2):
    H = _H(jordan_q2)
    span = decomposable_span(H, (2,))
    # u_1 * u_1 = 3 u_{semisimple} + u_{block} at q = 2.
    semi, block = [c.cid for c in jordan_q2.classes((2,))]
    assert jordan_q2.cls(semi).aut == 6 and jordan_q2.cls(block).aut == 2
    expect = H.u_plus(semi).scaled(3) + H.u_plus(block)
    assert span.dim == 1
    assert _proportional(H, span.basis[0], expect)


def test_primitive_space_dims(a2_q2, kronecker_q2, jordan_q2):
    assert primitive_space(_H(a2_q2), (1, 1)).dim == 0
    assert primitive_space(_H(kronecker_q2), (1, 1)).dim == 2
    assert primitive_space(_H(jordan_q2), (2,)).dim == 1
    assert primitive_space(_H(jordan_q2), (3,)).dim == 1


def test_jordan_primitive_vector(jordan_q2):
    H = _H(jordan_q2)
    semi, block = [c.cid for c in jordan_q2.classes((2,))]
    lsp = primitive_space(H, (2,))
    expect = H.u_plus(semi) - H.u_plus(block)
    assert lsp.dim == 1
    assert _proportional(H, lsp.basis[0], expect)


def test_is_primitive_examples(jordan_q2):
    H = _H(jordan_q2)
    s = jordan_q2.simple_ids()[0]
    assert is_primitive(H, H.u_plus(s))
    semi, block = [c.cid for c in jordan_q2.classes((2,))]
    assert is_primitive(H, H.u_plus(semi) - H.u_plus(block))
    assert not is_primitive(H, H.u_plus(semi))


def test_is_primitive_rejects_inhomogeneous(jordan_q2):
    H = _H(jordan_q2)
    s = jordan_q2.simple_ids()[0]
    semi = jordan_q2.classes((2,))[0].cid
    with pytest.raises(ValueError):
        is_primitive(H, H.u_plus(s) + H.u_plus(semi))
    with pytest.raises(ValueError):
        is_primitive(H, H.u_plus(s), (2,))


def test_degree_domain_errors(jordan_q2):
    H = _H(jordan_q2)
    for bad in ((0,), (1,), (5,)):
        with pytest.raises(ValueError):
            decomposable_span(H, bad)
        with pytest.raises(ValueError):
            primitive_space(H, bad)


def test_rank_nullity_everywhere(kronecker_q2):
    H = _H(kronecker_q2)
    t = kronecker_q2
    for theta in t.degrees():
        if sum(theta) < 2:
            continue
        xi = decomposable_span(H, theta)
        lsp = primitive_space(H, theta)
        assert xi.dim + lsp.dim == t.class_count(theta)
        for x in lsp.basis:
            assert is_primitive(H, x, theta)


def test_extend_datum_jordan():
    t = ClassTable(jordan(), GroundField(2), (3,))
    ext = extend_datum(_H(t), (3,))
    assert ext.new_labels == (((2,), 1), ((3,), 1))
    assert all(
        ext.datum.gram[i][j] == 0
        for i in range(ext.datum.size)
        for j in range(ext.datum.size)
    )


def test_extend_datum_a2(a2_q2):
    ext = extend_datum(_H(a2_q2), (2, 2))
    assert ext.new_labels == ()


def test_extend_datum_kronecker(kronecker_q2):
    ext = extend_datum(_H(kronecker_q2), (1, 1))
    assert ext.new_labels == (((1, 1), 1), ((1, 1), 2))
    for label in ext.new_labels:
        k = ext.datum.labels.index(label)
        assert ext.datum.gram[k][k] == 0
    # every adjoined index is imaginary
    assert set(ext.cartan.real_indices()) <= {0, 1}


def test_projection(kronecker_q2):
    ext = extend_datum(_H(kronecker_q2), (1, 1))
    assert ext.project(0) == (1, 0)
    assert ext.project(((1, 1), 2)) == (1, 1)
    vec = [1, 0, 2, 0]
    assert ext.project_vector(vec) == (3, 2)
