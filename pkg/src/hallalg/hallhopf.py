"""Graded Hall Hopf algebras on both signs, their pairings, and the reduced
Drinfeld double, truncated to the dimension-vector bound of a class table.

Elements are finite linear combinations of triangular monomials
u_beta^- K_mu u_alpha^+ with exact Q(sqrt(q)) coefficients.  Pure plus
monomials (beta = 0) coincide with the K-first basis K_mu u_alpha^+ of the
positive algebra; pure minus monomials are kept in the u-first order
u_beta^- K_mu, and all structure constants below are stated for these
normal forms.  Any operation whose exact result would need an isomorphism
class outside the table bound raises TruncationError rather than dropping
terms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import NamedTuple

from .repcat import ClassId, ClassTable, DimVec, dim_add, dim_leq, dim_sub, dims_below
from .scalars import Scalar

__all__ = ["BasisSym", "AlgElt", "TensorElt", "DoubleHall", "TruncationError"]


class TruncationError(RuntimeError):
    """The exact result needs classes beyond the table bound."""


class BasisSym(NamedTuple):
    """The triangular basis monomial u_minus^- K_torus u_plus^+."""

    minus: ClassId
    torus: DimVec
    plus: ClassId

    def degree(self) -> DimVec:
        return dim_sub(self.plus[0], self.minus[0])


def _fmt_sym(sym: BasisSym) -> str:
    parts = []
    if sum(sym.minus[0]):
        parts.append(f"u-[{sym.minus[0]}:{sym.minus[1]}]")
    if any(sym.torus):
        parts.append(f"K{sym.torus}")
    if sum(sym.plus[0]):
        parts.append(f"u+[{sym.plus[0]}:{sym.plus[1]}]")
    return "*".join(parts) if parts else "1"


class _Linear:
    """Shared machinery for finitely supported Scalar-valued combinations."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for k, v in terms.items():
                if v:
                    data[k] = v
        self.terms = data

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -v for k, v in self.terms.items()})

    def scaled(self, c):
        if isinstance(c, (int, Fraction)) and c == 0:
            return type(self)()
        if isinstance(c, Scalar) and c.is_zero:
            return type(self)()
        return type(self)({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return type(other) is type(self) and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{self._fmt_key(k)}" for k, v in self.items())

    def _fmt_key(self, k):
        return repr(k)


class AlgElt(_Linear):
    """An element of the double: a finite combination of triangular monomials."""

    def degree(self) -> DimVec | None:
        """The common degree of all monomials, or None if inhomogeneous or zero."""
        degs = {s.degree() for s in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self, theta=None) -> bool:
        if not self.terms:
            return True
        d = self.degree()
        if d is None:
            return False
        return theta is None or tuple(theta) == d

    def _fmt_key(self, k):
        return _fmt_sym(k)


class TensorElt(_Linear):
    """A finite combination of tensors of triangular monomials."""

    def _fmt_key(self, k):
        return " (x) ".join(_fmt_sym(s) for s in k)


class DoubleHall:
    """Hopf operations of the Hall algebras of a class table and their double.

    All operations are pure functions of the table and their inputs; the
    instance only carries caches of structure constants.
    """

    def __init__(self, table: ClassTable):
        self.table = table
        self.field = table.field
        self.zero_cid = table.zero_id()
        self.zero_dim = table.quiver.zero_dim()
        self._u_prod: dict = {}
        self._comult_plus: dict = {}
        self._comult_minus: dict = {}
        self._anti_plus: dict = {}
        self._anti_minus: dict = {}
        self._anti_sym: dict = {}
        self._omega_sym: dict = {}
        self._straight: dict = {}

    # ----- element constructors ------------------------------------------

    def one(self) -> AlgElt:
        return AlgElt({BasisSym(self.zero_cid, self.zero_dim, self.zero_cid): self.field.one})

    def u_plus(self, cid: ClassId) -> AlgElt:
        return AlgElt({BasisSym(self.zero_cid, self.zero_dim, cid): self.field.one})

    def u_minus(self, cid: ClassId) -> AlgElt:
        return AlgElt({BasisSym(cid, self.zero_dim, self.zero_cid): self.field.one})

    def torus(self, mu) -> AlgElt:
        return AlgElt({BasisSym(self.zero_cid, tuple(mu), self.zero_cid): self.field.one})

    def sym_elt(self, sym: BasisSym) -> AlgElt:
        return AlgElt({sym: self.field.one})

    # ----- purity -----------------------------------------------------------

    def is_pure_plus(self, x: AlgElt) -> bool:
        return all(s.minus == self.zero_cid for s in x.terms)

    def is_pure_minus(self, x: AlgElt) -> bool:
        return all(s.plus == self.zero_cid for s in x.terms)

    def _require(self, cond: bool, msg: str):
        if not cond:
            raise ValueError(msg)

    # ----- structure constants -------------------------------------------

    def _u_product_terms(self, a: ClassId, b: ClassId):
        """u_a u_b = v^<a,b> sum_g hall(a, b, g) u_g, as [(g, Scalar)].

        The same constants serve both signs.
        """
        key = (a, b)
        if key not in self._u_prod:
            t = self.table
            d = dim_add(a[0], b[0])
            if not dim_leq(d, t.bound):
                raise TruncationError(
                    f"product of degrees {a[0]} and {b[0]} needs classes of "
                    f"dimension {d} beyond bound {t.bound}"
                )
            pref = self.field.v_pow(t.euler(a[0], b[0]))
            out = []
            for g in t.classes(d):
                n = t.hall(a, b, g.cid)
                if n:
                    out.append((g.cid, pref * n))
            self._u_prod[key] = tuple(out)
        return self._u_prod[key]

    def _comult_plus_terms(self, g: ClassId):
        """Splitting constants of u_g^+: [(quot, sub, Scalar)] with the
        K-reordering twist folded in."""
        if g not in self._comult_plus:
            t = self.table
            out = []
            for nu in dims_below(g[0]):
                dist = t.hall_distribution(g, nu)
                for (quot, sub), n in sorted(dist.items()):
                    c = self.field.v_pow(
                        t.euler(quot[0], sub[0]) - t.sym(sub[0], quot[0])
                    )
                    c = c * Fraction(t.aut(quot) * t.aut(sub), t.aut(g)) * n
                    out.append((quot, sub, c))
            self._comult_plus[g] = tuple(out)
        return self._comult_plus[g]

    def _comult_minus_terms(self, g: ClassId):
        """Splitting constants of u_g^-: [(sub, quot, Scalar)] for the slots
        u_sub^- (x) u_quot^- K_{-dim sub}."""
        if g not in self._comult_minus:
            t = self.table
            out = []
            for nu in dims_below(g[0]):
                dist = t.hall_distribution(g, nu)
                for (quot, sub), n in sorted(dist.items()):
                    c = self.field.v_pow(t.euler(quot[0], sub[0]))
                    c = c * Fraction(t.aut(quot) * t.aut(sub), t.aut(g)) * n
                    out.append((sub, quot, c))
            self._comult_minus[g] = tuple(out)
        return self._comult_minus[g]

    def _class_sequences(self, mu: DimVec):
        """All tuples of nonzero classes whose dimension vectors sum to mu."""
        if sum(mu) == 0:
            return [()]
        out = []
        for nu in dims_below(mu):
            if sum(nu) == 0:
                continue
            rest = dim_sub(mu, nu)
            tails = self._class_sequences(rest)
            for c in self.table.classes(nu):
                for tail in tails:
                    out.append((c.cid,) + tail)
        return out

    def _antipode_terms_plus(self, g: ClassId):
        """Coefficients c_pi with S(u_g^+) = sum_pi c_pi K_{-g} u_pi^+."""
        if g not in self._anti_plus:
            t = self.table
            if sum(g[0]) == 0:
                self._anti_plus[g] = ((self.zero_cid, self.field.one),)
                return self._anti_plus[g]
            acc: dict[ClassId, Scalar] = {}
            targets = t.classes(g[0])
            for seq in self._class_sequences(g[0]):
                n_g = t.hall_multi(g, seq)
                if not n_g:
                    continue
                m = len(seq)
                tw = 0
                for i in range(m):
                    for j in range(i + 1, m):
                        tw += t.euler(seq[i][0], seq[j][0])
                c = self.field.v_pow(2 * tw)
                afac = 1
                for s in seq:
                    afac *= t.aut(s)
                c = c * Fraction(afac, t.aut(g)) * n_g
                if m % 2:
                    c = -c
                for pi in targets:
                    n_pi = t.hall_multi(pi.cid, seq)
                    if n_pi:
                        prev = acc.get(pi.cid)
                        val = c * n_pi
                        acc[pi.cid] = val if prev is None else prev + val
            self._anti_plus[g] = tuple(
                (k, v) for k, v in sorted(acc.items()) if v
            )
        return self._anti_plus[g]

    def _antipode_terms_minus(self, g: ClassId):
        """Coefficients c_pi with S(u_g^-) = sum_pi c_pi u_pi^- K_g."""
        if g not in self._anti_minus:
            t = self.table
            if sum(g[0]) == 0:
                self._anti_minus[g] = ((self.zero_cid, self.field.one),)
                return self._anti_minus[g]
            acc: dict[ClassId, Scalar] = {}
            targets = t.classes(g[0])
            for seq in self._class_sequences(g[0]):
                n_g = t.hall_multi(g, seq)
                if not n_g:
                    continue
                afac = 1
                for s in seq:
                    afac *= t.aut(s)
                c = self.field.scalar(Fraction(afac, t.aut(g))) * n_g
                if len(seq) % 2:
                    c = -c
                rev = tuple(reversed(seq))
                for pi in targets:
                    n_pi = t.hall_multi(pi.cid, rev)
                    if n_pi:
                        prev = acc.get(pi.cid)
                        val = c * n_pi
                        acc[pi.cid] = val if prev is None else prev + val
            self._anti_minus[g] = tuple(
                (k, v) for k, v in sorted(acc.items()) if v
            )
        return self._anti_minus[g]

    # ----- one-sided Hopf operations ---------------------------------------

    def mult_plus(self, x: AlgElt, y: AlgElt) -> AlgElt:
        """Product in the positive algebra, K_mu u_alpha^+ monomials allowed."""
        self._require(self.is_pure_plus(x) and self.is_pure_plus(y), "mult_plus needs pure plus inputs")
        t = self.table
        out: dict[BasisSym, Scalar] = {}
        for sx, cx in x.terms.items():
            for sy, cy in y.terms.items():
                c = cx * cy * self.field.v_pow(-t.sym(sy.torus, sx.plus[0]))
                mu = dim_add(sx.torus, sy.torus)
                for g, cg in self._u_product_terms(sx.plus, sy.plus):
                    _acc(out, BasisSym(self.zero_cid, mu, g), c * cg)
        return AlgElt(out)

    def mult_minus(self, x: AlgElt, y: AlgElt) -> AlgElt:
        """Product in the negative algebra, u_alpha^- K_mu monomials allowed."""
        self._require(self.is_pure_minus(x) and self.is_pure_minus(y), "mult_minus needs pure minus inputs")
        t = self.table
        out: dict[BasisSym, Scalar] = {}
        for sx, cx in x.terms.items():
            for sy, cy in y.terms.items():
                c = cx * cy * self.field.v_pow(-t.sym(sx.torus, sy.minus[0]))
                mu = dim_add(sx.torus, sy.torus)
                for g, cg in self._u_product_terms(sx.minus, sy.minus):
                    _acc(out, BasisSym(g, mu, self.zero_cid), c * cg)
        return AlgElt(out)

    def comult_plus(self, x: AlgElt) -> TensorElt:
        """Comultiplication of the positive algebra."""
        self._require(self.is_pure_plus(x), "comult_plus needs a pure plus input")
        out: dict[tuple, Scalar] = {}
        for s, c in x.terms.items():
            for quot, sub, cc in self._comult_plus_terms(s.plus):
                k = (
                    BasisSym(self.zero_cid, dim_add(s.torus, sub[0]), quot),
                    BasisSym(self.zero_cid, s.torus, sub),
                )
                _acc(out, k, c * cc)
        return TensorElt(out)

    def comult_minus(self, x: AlgElt) -> TensorElt:
        """Comultiplication of the negative algebra."""
        self._require(self.is_pure_minus(x), "comult_minus needs a pure minus input")
        out: dict[tuple, Scalar] = {}
        for s, c in x.terms.items():
            for sub, quot, cc in self._comult_minus_terms(s.minus):
                k = (
                    BasisSym(sub, s.torus, self.zero_cid),
                    BasisSym(quot, dim_sub(s.torus, sub[0]), self.zero_cid),
                )
                _acc(out, k, c * cc)
        return TensorElt(out)

    def _antipode_sym(self, s: BasisSym, plus: bool) -> AlgElt:
        key = (s, plus)
        out = self._anti_sym.get(key)
        if out is None:
            t = self.table
            acc: dict[BasisSym, Scalar] = {}
            if plus:
                gdim = s.plus[0]
                for pi, cc in self._antipode_terms_plus(s.plus):
                    tw = self.field.v_pow(t.sym(s.torus, pi[0]))
                    sym = BasisSym(
                        self.zero_cid,
                        dim_sub(tuple(-d for d in gdim), s.torus),
                        pi,
                    )
                    _acc(acc, sym, cc * tw)
            else:
                gdim = s.minus[0]
                for pi, cc in self._antipode_terms_minus(s.minus):
                    tw = self.field.v_pow(t.sym(s.torus, pi[0]))
                    sym = BasisSym(pi, dim_sub(gdim, s.torus), self.zero_cid)
                    _acc(acc, sym, cc * tw)
            out = AlgElt(acc)
            self._anti_sym[key] = out
        return out

    def antipode_plus(self, x: AlgElt) -> AlgElt:
        """Antipode of the positive algebra (alternating filtration sum)."""
        self._require(self.is_pure_plus(x), "antipode_plus needs a pure plus input")
        out = AlgElt()
        for s, c in x.terms.items():
            out = out + self._antipode_sym(s, True).scaled(c)
        return out

    def antipode_minus(self, x: AlgElt) -> AlgElt:
        """Antipode of the negative algebra."""
        self._require(self.is_pure_minus(x), "antipode_minus needs a pure minus input")
        out = AlgElt()
        for s, c in x.terms.items():
            out = out + self._antipode_sym(s, False).scaled(c)
        return out

    def counit(self, x: AlgElt) -> Scalar:
        out = self.field.zero
        for s, c in x.terms.items():
            if s.plus == self.zero_cid and s.minus == self.zero_cid:
                out = out + c
        return out

    # ----- pairings and the involution -------------------------------------

    def _phi_sym(self, sx: BasisSym, sy: BasisSym) -> Scalar:
        if sx.plus != sy.minus:
            return self.field.zero
        t = self.table
        e = t.sym(sx.torus, sx.plus[0]) - t.sym(sx.torus, sy.torus)
        return self.field.v_pow(e) * Fraction(1, t.aut(sx.plus))

    def phi(self, x: AlgElt, y: AlgElt) -> Scalar:
        """The bilinear pairing of the positive against the negative algebra."""
        self._require(self.is_pure_plus(x), "phi needs a pure plus left argument")
        self._require(self.is_pure_minus(y), "phi needs a pure minus right argument")
        out = self.field.zero
        for sx, cx in x.terms.items():
            for sy, cy in y.terms.items():
                v = self._phi_sym(sx, sy)
                if v:
                    out = out + cx * cy * v
        return out

    def _omega_of_sym(self, s: BasisSym) -> AlgElt:
        out = self._omega_sym.get(s)
        if out is None:
            t = self.table
            if s.plus == self.zero_cid:
                sym = BasisSym(self.zero_cid, tuple(-m for m in s.torus), s.minus)
                out = AlgElt({sym: self.field.v_pow(t.sym(s.torus, s.minus[0]))})
            elif s.minus == self.zero_cid:
                sym = BasisSym(s.plus, tuple(-m for m in s.torus), self.zero_cid)
                out = AlgElt({sym: self.field.v_pow(t.sym(s.torus, s.plus[0]))})
            else:
                left = AlgElt(
                    {
                        BasisSym(
                            self.zero_cid, tuple(-m for m in s.torus), s.minus
                        ): self.field.v_pow(t.sym(s.torus, s.minus[0]))
                    }
                )
                out = self.mult(left, self.u_minus(s.plus))
            self._omega_sym[s] = out
        return out

    def omega(self, x: AlgElt) -> AlgElt:
        """The involution: swaps the signs and inverts the torus."""
        out = AlgElt()
        for s, c in x.terms.items():
            out = out + self._omega_of_sym(s).scaled(c)
        return out

    def psi(self, x: AlgElt, y: AlgElt) -> Scalar:
        """The symmetric pairing on the positive algebra: phi against omega."""
        self._require(self.is_pure_plus(x) and self.is_pure_plus(y), "psi needs pure plus inputs")
        return self.phi(x, self.omega(y))

    # ----- the double -------------------------------------------------------

    def _comult2(self, x: AlgElt, plus: bool) -> dict:
        """(Delta (x) id) o Delta of a one-sided element, as a 3-tensor dict."""
        comult = self.comult_plus if plus else self.comult_minus
        out: dict[tuple, Scalar] = {}
        for (s1, s2), c in comult(x).terms.items():
            inner = comult(self.sym_elt(s1))
            for (a, b), cc in inner.terms.items():
                _acc(out, (a, b, s2), c * cc)
        return out

    def _straighten(self, a: ClassId, d: ClassId):
        """u_a^+ u_d^- rewritten in triangular order, as [(sym, Scalar)]."""
        key = (a, d)
        if key not in self._straight:
            x3 = self._comult2(self.u_plus(a), plus=True)
            y3 = self._comult2(self.u_minus(d), plus=False)
            acc: dict[BasisSym, Scalar] = {}
            for (t1, t2, t3), ct in x3.items():
                for (s1, s2, s3), cs in y3.items():
                    if t1.plus != s1.minus or t3.plus[0] != s3.minus[0]:
                        continue
                    f1 = self._phi_sym(t1, s1)
                    if not f1:
                        continue
                    f3 = self.field.zero
                    for sym, cc in self.antipode_minus(self.sym_elt(s3)).terms.items():
                        v = self._phi_sym(t3, sym)
                        if v:
                            f3 = f3 + cc * v
                    if not f3:
                        continue
                    sym = BasisSym(s2.minus, dim_add(s2.torus, t2.torus), t2.plus)
                    _acc(acc, sym, ct * cs * f1 * f3)
            self._straight[key] = tuple(sorted(acc.items()))
        return self._straight[key]

    def mult(self, x: AlgElt, y: AlgElt) -> AlgElt:
        """Multiplication in the double, output in triangular normal form."""
        t = self.table
        out: dict[BasisSym, Scalar] = {}
        for sx, cx in x.terms.items():
            for sy, cy in y.terms.items():
                if not dim_leq(dim_add(sx.minus[0], sy.minus[0]), t.bound):
                    raise TruncationError(
                        f"product needs negative classes of dimension "
                        f"{dim_add(sx.minus[0], sy.minus[0])} beyond bound {t.bound}"
                    )
                if not dim_leq(dim_add(sx.plus[0], sy.plus[0]), t.bound):
                    raise TruncationError(
                        f"product needs positive classes of dimension "
                        f"{dim_add(sx.plus[0], sy.plus[0])} beyond bound {t.bound}"
                    )
                if sx.plus == self.zero_cid:
                    middle = ((BasisSym(sy.minus, self.zero_dim, self.zero_cid), self.field.one),)
                elif sy.minus == self.zero_cid:
                    middle = ((BasisSym(self.zero_cid, self.zero_dim, sx.plus), self.field.one),)
                else:
                    middle = self._straighten(sx.plus, sy.minus)
                base = cx * cy
                for mid, cm in middle:
                    c = base * cm * self.field.v_pow(
                        -t.sym(sx.torus, mid.minus[0]) - t.sym(sy.torus, mid.plus[0])
                    )
                    mu = dim_add(dim_add(sx.torus, mid.torus), sy.torus)
                    for mneg, cneg in self._u_product_terms(sx.minus, mid.minus):
                        for mpos, cpos in self._u_product_terms(mid.plus, sy.plus):
                            _acc(out, BasisSym(mneg, mu, mpos), c * cneg * cpos)
        return AlgElt(out)

    # ----- tensor helpers ---------------------------------------------------

    def tensor_mult(self, tx: TensorElt, ty: TensorElt, plus: bool) -> TensorElt:
        """Componentwise product of tensors of one-sided elements."""
        mult = self.mult_plus if plus else self.mult_minus
        out: dict[tuple, Scalar] = {}
        for kx, cx in tx.terms.items():
            for ky, cy in ty.terms.items():
                prods = [
                    mult(self.sym_elt(a), self.sym_elt(b)).terms
                    for a, b in zip(kx, ky)
                ]
                c0 = cx * cy
                for combo in itertools.product(*(p.items() for p in prods)):
                    c = c0
                    for _, cv in combo:
                        c = c * cv
                    _acc(out, tuple(s for s, _ in combo), c)
        return TensorElt(out)

    def tensor_swap(self, tx: TensorElt) -> TensorElt:
        return TensorElt({(b, a): c for (a, b), c in tx.terms.items()})

    def tensor_apply(self, tx: TensorElt, funcs) -> TensorElt:
        """Apply per-slot linear maps (AlgElt -> AlgElt) to a tensor."""
        out: dict[tuple, Scalar] = {}
        for key, c in tx.terms.items():
            images = [funcs[i](self.sym_elt(s)).terms for i, s in enumerate(key)]
            for combo in itertools.product(*(im.items() for im in images)):
                cc = c
                for _, cv in combo:
                    cc = cc * cv
                _acc(out, tuple(s for s, _ in combo), cc)
        return TensorElt(out)


def _acc(store: dict, key, val):
    if not val:
        return
    prev = store.get(key)
    if prev is None:
        store[key] = val
    else:
        s = prev + val
        if s:
            store[key] = s
        else:
            del store[key]
