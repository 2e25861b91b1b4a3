"""Primitive complements of decomposable degrees and the enlarged datum.

In each degree theta of the positive algebra the span of products of
strictly smaller degrees is computed by exact row reduction over
Q(sqrt(q)); its orthogonal complement under the diagonal pairing is the
space of new primitive generators, and every nonzero complement
contributes new imaginary indices to the Borcherds datum.  No
orthonormalization is performed: all downstream identities are checked on
arbitrary bases, which keeps every coefficient inside Q(sqrt(q)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gkm import BorcherdsDatum, CartanMatrix, cartan_from_datum, datum_from_table
from .hallhopf import AlgElt, BasisSym, DoubleHall, TensorElt
from .repcat import DimVec, dims_below, dim_sub
from .scalars import Scalar

__all__ = [
    "GradedSubspace",
    "ExtendedDatum",
    "decomposable_span",
    "extend_datum",
    "is_primitive",
    "primitive_space",
]


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of one homogeneous degree, by a linearly independent basis."""

    theta: DimVec
    basis: tuple[AlgElt, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _scalar_rref(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    piv: list[int] = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, len(rows)):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], piv


def _scalar_nullspace(rows: list[list[Scalar]], ncols: int, field) -> list[list[Scalar]]:
    red, piv = _scalar_rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        vec = [field.zero for _ in range(ncols)]
        vec[f] = field.one
        for i, c in enumerate(piv):
            vec[c] = -red[i][f]
        out.append(vec)
    return out


def _coeff_vector(H: DoubleHall, x: AlgElt, order: list) -> list[Scalar]:
    pos = {cid: k for k, cid in enumerate(order)}
    vec = [H.field.zero for _ in order]
    for sym, c in x.terms.items():
        if sym.minus != H.zero_cid or any(sym.torus):
            raise ValueError("expected a pure positive element without torus factors")
        vec[pos[sym.plus]] = vec[pos[sym.plus]] + c
    return vec


def _from_vector(H: DoubleHall, vec: list[Scalar], order: list) -> AlgElt:
    return AlgElt(
        {
            BasisSym(H.zero_cid, H.zero_dim, cid): c
            for cid, c in zip(order, vec)
            if c
        }
    )


def _degree_order(H: DoubleHall, theta: DimVec) -> list:
    return [c.cid for c in H.table.classes(theta)]


def decomposable_span(H: DoubleHall, theta) -> GradedSubspace:
    """Span of all two-factor products of strictly smaller positive degrees.

    Longer products are linear combinations of two-factor ones by
    associativity, so this is the whole degree-theta part of the subalgebra
    generated below theta.
    """
    theta = tuple(theta)
    _check_degree(H, theta)
    order = _degree_order(H, theta)
    rows = []
    for nu in dims_below(theta):
        if sum(nu) == 0 or nu == theta:
            continue
        rest = dim_sub(theta, nu)
        for a in H.table.classes(nu):
            for b in H.table.classes(rest):
                prod = H.mult_plus(H.u_plus(a.cid), H.u_plus(b.cid))
                rows.append(_coeff_vector(H, prod, order))
    red, _ = _scalar_rref(rows)
    return GradedSubspace(theta, tuple(_from_vector(H, r, order) for r in red))


def primitive_space(H: DoubleHall, theta) -> GradedSubspace:
    """Orthogonal complement of the decomposable span under the diagonal
    pairing; its dimension is the class count minus the span's rank."""
    theta = tuple(theta)
    xi = decomposable_span(H, theta)
    order = _degree_order(H, theta)
    auts = [H.table.aut(cid) for cid in order]
    rows = []
    for b in xi.basis:
        vec = _coeff_vector(H, b, order)
        rows.append([c * Fraction(1, a) for c, a in zip(vec, auts)])
    null = _scalar_nullspace(rows, len(order), H.field)
    assert len(null) == len(order) - xi.dim
    return GradedSubspace(theta, tuple(_from_vector(H, v, order) for v in null))


def _check_degree(H: DoubleHall, theta: DimVec):
    if sum(theta) == 0:
        raise ValueError("degree zero has no decomposable span")
    if sum(theta) == 1:
        raise ValueError(f"degree {theta} is a vertex simple")
    if not all(0 <= t <= b for t, b in zip(theta, H.table.bound)):
        raise ValueError(f"degree {theta} outside table bound {H.table.bound}")


def is_primitive(H: DoubleHall, x: AlgElt, theta=None) -> bool:
    """Whether the comultiplication of x is exactly x (x) 1 + K_theta (x) x."""
    if x.is_zero:
        return True
    deg = x.degree()
    if deg is None or (theta is not None and tuple(theta) != deg):
        raise ValueError("input is not homogeneous of the stated degree")
    unit = BasisSym(H.zero_cid, H.zero_dim, H.zero_cid)
    ktheta = BasisSym(H.zero_cid, deg, H.zero_cid)
    expect = TensorElt()
    for sym, c in x.terms.items():
        expect = expect + TensorElt({(sym, unit): c, (ktheta, sym): c})
    return H.comult_plus(x) == expect


@dataclass(frozen=True)
class ExtendedDatum:
    """The enlarged Borcherds datum together with its new generators.

    Labels are vertex numbers for the original indices and (theta, p)
    pairs, ordered by increasing total degree then lexicographic theta,
    for the adjoined ones.
    """

    base: BorcherdsDatum
    datum: BorcherdsDatum
    cartan: CartanMatrix
    new_labels: tuple
    generators: dict
    records: tuple

    def project(self, label) -> DimVec:
        """The degree in ZI of a label of the enlarged index set."""
        if isinstance(label, int):
            n = len(self.base.labels)
            return tuple(1 if k == label else 0 for k in range(n))
        return tuple(label[0])

    def project_vector(self, vec) -> DimVec:
        """Push an integer vector over the enlarged index set down to ZI."""
        n = len(self.base.labels)
        out = [0] * n
        for coeff, label in zip(vec, self.datum.labels):
            if not coeff:
                continue
            img = self.project(label)
            for k in range(n):
                out[k] += coeff * img[k]
        return tuple(out)


def extend_datum(H: DoubleHall, bound=None) -> ExtendedDatum:
    """Adjoin one imaginary index per primitive generator in every degree
    up to the bound, with the pulled-back bilinear form."""
    table = H.table
    bound = table.bound if bound is None else tuple(bound)
    base = datum_from_table(table)
    n = table.quiver.vertices
    new_labels = []
    generators: dict = {}
    records = []
    for theta in dims_below(bound):
        if sum(theta) < 2:
            continue
        lsp = primitive_space(H, theta)
        nclasses = table.class_count(theta)
        records.append((theta, nclasses, nclasses - lsp.dim, lsp))
        for p, gen in enumerate(lsp.basis, start=1):
            label = (theta, p)
            new_labels.append(label)
            generators[label] = gen
    labels = tuple(range(n)) + tuple(new_labels)
    units = [table.quiver.unit_dim(i) for i in range(n)]

    def proj(label):
        return units[label] if isinstance(label, int) else tuple(label[0])

    gram = tuple(
        tuple(table.sym(proj(a), proj(b)) for b in labels) for a in labels
    )
    datum = BorcherdsDatum(labels, gram)
    return ExtendedDatum(
        base=base,
        datum=datum,
        cartan=cartan_from_datum(datum),
        new_labels=tuple(new_labels),
        generators=generators,
        records=tuple(records),
    )
