"""Executable identity suites over a class table.

Each suite runs a fixed, deterministically ordered list of checks and
returns a report; failing checks carry a witness with both evaluated
sides.  Degree-bound-infeasible relation instances are reported as skipped
together with the bound they would need.  Torus factors range over the
fixed sample {0} u {e_i} u {-e_i}, recorded in the check names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import gkm, primitives
from .hallhopf import AlgElt, BasisSym, DoubleHall, TensorElt
from .repcat import ClassTable, dim_add, dim_leq, dims_below
from .scalars import is_positive

__all__ = ["CheckResult", "CheckReport", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str | None = None


@dataclass
class CheckReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    def counts(self) -> tuple[int, int, int]:
        p = sum(1 for c in self.checks if c.status == "pass")
        f = sum(1 for c in self.checks if c.status == "fail")
        s = sum(1 for c in self.checks if c.status == "skipped")
        return p, f, s

    def check(self, name: str, lhs, rhs):
        if lhs == rhs:
            self.checks.append(CheckResult(name, "pass"))
        else:
            self.checks.append(
                CheckResult(name, "fail", f"lhs={lhs!r} rhs={rhs!r}")
            )

    def expect(self, name: str, cond: bool, witness: str = ""):
        if cond:
            self.checks.append(CheckResult(name, "pass"))
        else:
            self.checks.append(CheckResult(name, "fail", witness or "condition failed"))

    def skip(self, name: str, reason: str):
        self.checks.append(CheckResult(name, "skipped", reason))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": c.status, "witness": c.witness}
                for c in self.checks
            ],
            "overall": self.overall,
        }


def _torus_samples(table: ClassTable):
    n = table.quiver.vertices
    zero = (0,) * n
    out = [zero]
    for i in range(n):
        out.append(tuple(1 if k == i else 0 for k in range(n)))
        out.append(tuple(-1 if k == i else 0 for k in range(n)))
    return out


def _all_cids(table: ClassTable):
    out = []
    for mu in table.degrees():
        out.extend(c.cid for c in table.classes(mu))
    return out


def _pure_pairs_within_bound(table: ClassTable):
    out = []
    for mu in table.degrees():
        for nu in table.degrees():
            if not dim_leq(dim_add(mu, nu), table.bound):
                continue
            for a in table.classes(mu):
                for b in table.classes(nu):
                    out.append((a.cid, b.cid))
    return out


def _contract_counit(H: DoubleHall, t: TensorElt, slot: int) -> AlgElt:
    out = AlgElt()
    for key, c in t.terms.items():
        eps = H.counit(H.sym_elt(key[slot]))
        if eps:
            out = out + H.sym_elt(key[1 - slot]).scaled(c * eps)
    return out


def _comult2_second(H: DoubleHall, x: AlgElt, plus: bool) -> dict:
    comult = H.comult_plus if plus else H.comult_minus
    out: dict = {}
    for (s1, s2), c in comult(x).terms.items():
        inner = comult(H.sym_elt(s2))
        for (a, b), cc in inner.terms.items():
            k = (s1, a, b)
            prev = out.get(k)
            v = c * cc
            out[k] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


def suite_hopf(table: ClassTable) -> CheckReport:
    """Coassociativity, product compatibility of the comultiplication,
    counit laws, and both antipode axioms, on each sign."""
    rep = CheckReport("hopf")
    H = DoubleHall(table)
    samples = _torus_samples(table)
    cids = _all_cids(table)
    for plus in (True, False):
        tag = "+" if plus else "-"
        comult = H.comult_plus if plus else H.comult_minus
        mult = H.mult_plus if plus else H.mult_minus
        antipode = H.antipode_plus if plus else H.antipode_minus
        make = H.u_plus if plus else H.u_minus
        for mu in samples:
            for cid in cids:
                sym = (
                    BasisSym(table.zero_id(), mu, cid)
                    if plus
                    else BasisSym(cid, mu, table.zero_id())
                )
                x = H.sym_elt(sym)
                name = f"{tag}[{mu}]{cid[0]}:{cid[1]}"
                left = H._comult2(x, plus)
                right = _comult2_second(H, x, plus)
                rep.check(f"coassoc{name}", TensorElt(left), TensorElt(right))
                t = comult(x)
                rep.check(f"counit-left{name}", _contract_counit(H, t, 0), x)
                rep.check(f"counit-right{name}", _contract_counit(H, t, 1), x)
                eps = H.counit(x)
                want = H.one().scaled(eps)
                got = AlgElt()
                for (s1, s2), c in t.terms.items():
                    got = got + mult(antipode(H.sym_elt(s1)), H.sym_elt(s2)).scaled(c)
                rep.check(f"antipode-left{name}", got, want)
                got = AlgElt()
                for (s1, s2), c in t.terms.items():
                    got = got + mult(H.sym_elt(s1), antipode(H.sym_elt(s2))).scaled(c)
                rep.check(f"antipode-right{name}", got, want)
        for a, b in _pure_pairs_within_bound(table):
            x, y = make(a), make(b)
            name = f"green{tag}{a[0]}:{a[1]}*{b[0]}:{b[1]}"
            rep.check(
                name,
                comult(mult(x, y)),
                H.tensor_mult(comult(x), comult(y), plus),
            )
    return rep


def suite_pairing(table: ClassTable) -> CheckReport:
    """The four compatibilities of the pairing with the Hopf structure, the
    diagonal positivity of the symmetrized pairing, and the involution laws."""
    rep = CheckReport("pairing")
    H = DoubleHall(table)
    samples = _torus_samples(table)
    cids = _all_cids(table)
    zero = table.zero_id()

    plus_basis = [BasisSym(zero, mu, c) for mu in samples for c in cids]
    minus_basis = [BasisSym(c, mu, zero) for mu in samples for c in cids]
    # Quadratic pair loops use a reduced torus sample per side.
    pair_samples = samples[:2]
    plus_small = [BasisSym(zero, mu, c) for mu in pair_samples for c in cids]
    minus_small = [BasisSym(c, mu, zero) for mu in pair_samples for c in cids]

    for s in plus_basis:
        x = H.sym_elt(s)
        rep.check(f"phi(a,1)=eps[{_n(s)}]", H.phi(x, H.one()), H.counit(x))
    for s in minus_basis:
        y = H.sym_elt(s)
        rep.check(f"phi(1,b)=eps[{_n(s)}]", H.phi(H.one(), y), H.counit(y))

    # phi(a, b b') = phi(Delta a, b (x) b') on degree-matched triples.
    for b, bp in _pure_pairs_within_bound(table):
        prod_dim = dim_add(b[0], bp[0])
        yb, ybp = H.u_minus(b), H.u_minus(bp)
        prod = H.mult_minus(yb, ybp)
        for mu in (samples[0], samples[1 % len(samples)]):
            for a in table.classes(prod_dim):
                x = AlgElt({BasisSym(zero, mu, a.cid): H.field.one})
                lhs = H.phi(x, prod)
                rhs = H.field.zero
                for (s1, s2), c in H.comult_plus(x).terms.items():
                    rhs = rhs + c * H.phi(H.sym_elt(s1), yb) * H.phi(
                        H.sym_elt(s2), ybp
                    )
                rep.check(f"phi-mult-right[{_n2(a.cid, mu)};{_n2(b)};{_n2(bp)}]", lhs, rhs)
    # phi(a a', b) = phi(a (x) a', Delta^op b).
    for a, ap in _pure_pairs_within_bound(table):
        prod_dim = dim_add(a[0], ap[0])
        xa, xap = H.u_plus(a), H.u_plus(ap)
        prod = H.mult_plus(xa, xap)
        for mu in (samples[0], samples[1 % len(samples)]):
            for b in table.classes(prod_dim):
                y = AlgElt({BasisSym(b.cid, mu, zero): H.field.one})
                lhs = H.phi(prod, y)
                rhs = H.field.zero
                for (s1, s2), c in H.comult_minus(y).terms.items():
                    rhs = rhs + c * H.phi(xa, H.sym_elt(s2)) * H.phi(
                        xap, H.sym_elt(s1)
                    )
                rep.check(f"phi-mult-left[{_n2(b.cid, mu)};{_n2(a)};{_n2(ap)}]", lhs, rhs)
    # phi(S a, S b) = phi(a, b).
    s_plus = {sa: H.antipode_plus(H.sym_elt(sa)) for sa in plus_small}
    s_minus = {sb: H.antipode_minus(H.sym_elt(sb)) for sb in minus_small}
    for sa in plus_small:
        for sb in minus_small:
            x, y = H.sym_elt(sa), H.sym_elt(sb)
            rep.check(
                f"phi-antipode[{_n(sa)};{_n(sb)}]",
                H.phi(s_plus[sa], s_minus[sb]),
                H.phi(x, y),
            )
    # Symmetrized pairing: diagonal with positive entries.
    for mu in table.degrees():
        classes = table.classes(mu)
        for a in classes:
            for b in classes:
                val = H.psi(H.u_plus(a.cid), H.u_plus(b.cid))
                if a.cid == b.cid:
                    rep.check(
                        f"psi-diag[{_n2(a.cid)}]",
                        val,
                        H.field.scalar(Fraction(1, a.aut)),
                    )
                    rep.expect(
                        f"psi-positive[{_n2(a.cid)}]",
                        is_positive(val),
                        f"psi={val}",
                    )
                else:
                    rep.check(f"psi-off[{_n2(a.cid)};{_n2(b.cid)}]", val, H.field.zero)
    # Involution laws.
    for s in plus_basis + minus_basis:
        x = H.sym_elt(s)
        pure_plus = s.minus == zero
        comult = H.comult_plus if pure_plus else H.comult_minus
        other = H.comult_minus if pure_plus else H.comult_plus
        lhs = other(H.omega(x))
        rhs = H.tensor_apply(H.tensor_swap(comult(x)), [H.omega, H.omega])
        rep.check(f"omega-coalgebra[{_n(s)}]", lhs, rhs)
    for sa in plus_small:
        for sb in minus_small:
            x, y = H.sym_elt(sa), H.sym_elt(sb)
            rep.check(
                f"omega-pairing[{_n(sa)};{_n(sb)}]",
                H.phi(x, y),
                H.phi(H.omega(y), H.omega(x)),
            )
    for s in plus_basis + minus_basis:
        x = H.sym_elt(s)
        pure_plus = s.minus == zero
        s1 = H.antipode_minus(H.omega(x)) if pure_plus else H.antipode_plus(H.omega(x))
        s2 = H.omega(s1)
        s3 = H.antipode_plus(s2) if pure_plus else H.antipode_minus(s2)
        rep.check(f"omega-antipode[{_n(s)}]", s3, x)
    return rep


def _n(s: BasisSym) -> str:
    return f"{s.minus[0]}:{s.minus[1]}|{s.torus}|{s.plus[0]}:{s.plus[1]}"


def _n2(cid, mu=None) -> str:
    if mu is None:
        return f"{cid[0]}:{cid[1]}"
    return f"{mu}{cid[0]}:{cid[1]}"


def _generator_constants(table: ClassTable, H: DoubleHall):
    """Images of the Chevalley-type generators inside the double."""
    datum = gkm.datum_from_table(table)
    cartan = gkm.cartan_from_datum(datum)
    simples = table.simple_ids()
    es = {}
    fs = {}
    for i, cid in enumerate(simples):
        eps = int(cartan.eps[i])
        vi = H.field.v_pow(eps)
        if cartan.entries[i][i] == 2:
            const = -vi
        else:
            dim_end = table.hom(cid, cid)
            const = (H.field.v_pow(2 * dim_end) - 1) / (vi.inv() - vi)
        es[i] = H.u_plus(cid)
        fs[i] = H.u_minus(cid).scaled(const)
    return datum, cartan, es, fs


def suite_composition(table: ClassTable) -> CheckReport:
    """Defining relations of the quantized enveloping algebra on the
    generator images inside the double, where degrees fit the bound."""
    rep = CheckReport("composition")
    H = DoubleHall(table)
    datum, cartan, es, fs = _generator_constants(table, H)
    n = table.quiver.vertices
    units = [table.quiver.unit_dim(i) for i in range(n)]
    samples = _torus_samples(table)

    rep.check("K0=1", H.torus((0,) * n), H.one())
    for mu in samples:
        for nu in samples:
            rep.check(
                f"K-additive[{mu};{nu}]",
                H.mult(H.torus(mu), H.torus(nu)),
                H.torus(dim_add(mu, nu)),
            )
    for i in range(n):
        for mu in samples:
            pair = datum.pairing(mu, units[i])
            rep.check(
                f"K-E-commute[{mu};{i}]",
                H.mult(H.torus(mu), es[i]),
                H.mult(es[i], H.torus(mu)).scaled(H.field.v_pow(pair)),
            )
            rep.check(
                f"K-F-commute[{mu};{i}]",
                H.mult(H.torus(mu), fs[i]),
                H.mult(fs[i], H.torus(mu)).scaled(H.field.v_pow(-pair)),
            )
    for i in range(n):
        for j in range(n):
            lhs = H.mult(es[i], fs[j]) - H.mult(fs[j], es[i])
            if i == j:
                eps = int(cartan.eps[i])
                vi = H.field.v_pow(eps)
                den = vi - vi.inv()
                rhs = (H.torus(units[i]) - H.torus(tuple(-u for u in units[i]))).scaled(
                    den.inv()
                )
            else:
                rhs = AlgElt()
            rep.check(f"commutator[{i};{j}]", lhs, rhs)
    for i in cartan.real_indices():
        for j in range(n):
            if i == j:
                continue
            m = 1 - cartan.entries[i][j]
            need = dim_add(tuple(m * u for u in units[i]), units[j])
            if not dim_leq(need, table.bound):
                rep.skip(
                    f"serre-E[{i};{j}]",
                    f"needs classes up to dimension {need}, bound is {table.bound}",
                )
                rep.skip(
                    f"serre-F[{i};{j}]",
                    f"needs classes up to dimension {need}, bound is {table.bound}",
                )
                continue
            eps = int(cartan.eps[i])
            rep.check(
                f"serre-E[{i};{j}]",
                _serre_sum(H, es[i], es[j], m, eps, H.mult_plus),
                AlgElt(),
            )
            rep.check(
                f"serre-F[{i};{j}]",
                _serre_sum(H, fs[i], fs[j], m, eps, H.mult_minus),
                AlgElt(),
            )
    for i in range(n):
        for j in range(n):
            if cartan.entries[i][j] != 0 or j < i:
                continue
            need = dim_add(units[i], units[j])
            if not dim_leq(need, table.bound):
                rep.skip(f"commuting[{i};{j}]", f"needs dimension {need}")
                continue
            rep.check(
                f"commuting-E[{i};{j}]",
                H.mult_plus(es[i], es[j]),
                H.mult_plus(es[j], es[i]),
            )
            rep.check(
                f"commuting-F[{i};{j}]",
                H.mult_minus(fs[i], fs[j]),
                H.mult_minus(fs[j], fs[i]),
            )
    return rep


def _serre_sum(H: DoubleHall, xi: AlgElt, xj: AlgElt, m: int, eps: int, mult) -> AlgElt:
    powers = [H.one()]
    for _ in range(m):
        powers.append(mult(powers[-1], xi))
    out = AlgElt()
    for p in range(m + 1):
        term = mult(mult(powers[p], xj), powers[m - p])
        coef = H.field.q_binom(m, p, eps)
        if p % 2:
            coef = -coef
        out = out + term.scaled(coef)
    return out


def suite_sv(table: ClassTable, bound=None) -> CheckReport:
    """Primitive complements: dimension bookkeeping, primitivity, the
    commutator identity, membership of the supporting degrees, axioms of
    the enlarged form, projection compatibility with reflections, and the
    higher Serre relations against the new generators."""
    rep = CheckReport("sv")
    H = DoubleHall(table)
    bound = table.bound if bound is None else tuple(bound)
    try:
        ext = primitives.extend_datum(H, bound)
    except ValueError as exc:
        rep.expect("extended-datum-axioms", False, str(exc))
        return rep
    rep.expect("extended-datum-axioms", True)
    g = ext.datum.gram
    size = ext.datum.size
    n_base = len(ext.base.labels)
    for i in range(size):
        for j in range(size):
            if i != j:
                rep.expect(
                    f"extended-off-diagonal[{ext.datum.labels[i]};{ext.datum.labels[j]}]",
                    g[i][j] <= 0,
                    f"(i,j)'={g[i][j]} > 0",
                )
            if i == j and i >= n_base:
                rep.expect(
                    f"extended-new-imaginary[{ext.datum.labels[i]}]",
                    g[i][i] <= 0,
                    f"(j,j)'={g[i][i]} > 0",
                )
            if g[i][i] > 0:
                rep.expect(
                    f"extended-integrality[{ext.datum.labels[i]};{ext.datum.labels[j]}]",
                    (2 * g[i][j]) % g[i][i] == 0,
                    f"2(i,j)'/(i,i)' not integral: {2 * g[i][j]}/{g[i][i]}",
                )
    base_cartan = gkm.cartan_from_datum(ext.base)
    freg = gkm.fundamental_region(base_cartan, sum(bound))
    imag_units = {
        i: table.quiver.unit_dim(i) for i in base_cartan.imaginary_indices()
    }
    for theta, nclasses, xi_dim, lsp in ext.records:
        rep.check(
            f"rank-nullity[{theta}]",
            xi_dim + lsp.dim,
            nclasses,
        )
        for p, x in enumerate(lsp.basis, start=1):
            rep.expect(
                f"primitive[{theta};{p}]",
                primitives.is_primitive(H, x, theta),
                f"comultiplication of generator {p} in degree {theta} is not primitive",
            )
        if lsp.dim:
            in_freg = theta in freg
            s = sum(theta)
            in_multiples = s >= 2 and any(
                theta == tuple(s * u for u in unit) for unit in imag_units.values()
            )
            rep.expect(
                f"degree-located[{theta}]",
                in_freg or in_multiples,
                f"{theta} lies outside the fundamental region and the "
                f"imaginary-simple multiples",
            )
        ktheta = H.torus(theta)
        kneg = H.torus(tuple(-t for t in theta))
        for p, x in enumerate(lsp.basis, start=1):
            for pp, xp in enumerate(lsp.basis, start=1):
                y = H.omega(xp)
                lhs = H.mult(x, y) - H.mult(y, x)
                rhs = (ktheta - kneg).scaled(-H.phi(x, y))
                rep.check(f"commutator[{theta};{p};{pp}]", lhs, rhs)
    # Projection intertwines the reflections.
    for i in base_cartan.real_indices():
        for k, label in enumerate(ext.datum.labels):
            reflected = [0] * ext.datum.size
            reflected[k] = 1
            reflected[i] -= ext.cartan.entries[i][k]
            lhs = ext.project_vector(reflected)
            rhs = gkm.reflect(base_cartan, i, ext.project(label))
            rep.check(f"projection-reflection[{i};{label}]", lhs, rhs)
    # Serre relations of real simples against the new generators, and
    # commuting relations among new generators with orthogonal degrees.
    simples = table.simple_ids()
    for i in base_cartan.real_indices():
        ei = table.quiver.unit_dim(i)
        eps = int(base_cartan.eps[i])
        xi = H.u_plus(simples[i])
        yi = H.u_minus(simples[i])
        for label in ext.new_labels:
            theta = tuple(label[0])
            cij = 2 * ext.base.pairing(ei, theta) // ext.base.pairing(ei, ei)
            m = 1 - cij
            need = dim_add(tuple(m * u for u in ei), theta)
            if not dim_leq(need, table.bound):
                rep.skip(f"serre-new[{i};{label}]", f"needs dimension {need}")
                continue
            gen = ext.generators[label]
            rep.check(
                f"serre-new-E[{i};{label}]",
                _serre_sum(H, xi, gen, m, eps, H.mult_plus),
                AlgElt(),
            )
            rep.check(
                f"serre-new-F[{i};{label}]",
                _serre_sum(H, yi, H.omega(gen), m, eps, H.mult_minus),
                AlgElt(),
            )
    for a_idx, la in enumerate(ext.new_labels):
        for lb in ext.new_labels[a_idx + 1 :]:
            ta, tb = tuple(la[0]), tuple(lb[0])
            if ext.base.pairing(ta, tb) != 0:
                continue
            need = dim_add(ta, tb)
            if not dim_leq(need, table.bound):
                rep.skip(f"commuting-new[{la};{lb}]", f"needs dimension {need}")
                continue
            xa, xb = ext.generators[la], ext.generators[lb]
            rep.check(
                f"commuting-new[{la};{lb}]",
                H.mult_plus(xa, xb),
                H.mult_plus(xb, xa),
            )
    return rep


def suite_kac(table: ClassTable, height: int) -> CheckReport:
    """Dimension vectors of indecomposables against the root side, and
    uniqueness of the indecomposable over each real root."""
    rep = CheckReport("kac")
    n = table.quiver.vertices
    for mu in dims_below((height,) * n):
        if 0 < sum(mu) <= height and not dim_leq(mu, table.bound):
            rep.expect(
                "table-covers-height",
                False,
                f"dimension {mu} of height <= {height} is outside bound {table.bound}",
            )
            return rep
    datum = gkm.datum_from_table(table)
    cartan = gkm.cartan_from_datum(datum)
    roots = gkm.positive_roots(cartan, height)
    seeds = []
    for i in cartan.imaginary_indices():
        unit = table.quiver.unit_dim(i)
        for s in range(2, height // max(sum(unit), 1) + 1):
            seeds.append(tuple(s * u for u in unit))
    orbit = gkm.weyl_orbit(cartan, seeds, height)
    root_side = {r.vector for r in roots} | orbit
    indec_side = set()
    for mu in dims_below((height,) * n):
        if 0 < sum(mu) <= height and table.indec_count(mu) > 0:
            indec_side.add(mu)
    rep.check(
        "dimension-vectors-match",
        tuple(sorted(indec_side)),
        tuple(sorted(root_side)),
    )
    for r in sorted(roots):
        if r.imaginary:
            continue
        rep.check(f"real-root-unique[{r.vector}]", table.indec_count(r.vector), 1)
    return rep


def suite_character(table: ClassTable, bound=None) -> CheckReport:
    """Truncated product over indecomposables against per-degree class counts."""
    rep = CheckReport("character")
    bound = table.bound if bound is None else tuple(bound)
    counts = {}
    for mu in dims_below(bound):
        counts[mu] = table.indec_count(mu) if sum(mu) else 0
    poly = {tuple(0 for _ in bound): 1}
    for alpha, mult in sorted(counts.items()):
        if not mult:
            continue
        factor = {}
        k = 0
        vec = tuple(0 for _ in bound)
        while dim_leq(vec, bound):
            factor[vec] = _multiset_count(mult, k)
            k += 1
            vec = tuple(k * a for a in alpha)
        poly = _poly_mul(poly, factor, bound)
    for mu in dims_below(bound):
        rep.check(
            f"coefficient[{mu}]",
            poly.get(mu, 0),
            table.class_count(mu),
        )
    return rep


def _multiset_count(kinds: int, k: int) -> int:
    import math

    return math.comb(kinds + k - 1, k)


def _poly_mul(a: dict, b: dict, bound) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = dim_add(ka, kb)
            if dim_leq(k, bound):
                out[k] = out.get(k, 0) + va * vb
    return out


SUITES = {
    "hopf": suite_hopf,
    "pairing": suite_pairing,
    "composition": suite_composition,
    "sv": suite_sv,
    "kac": suite_kac,
    "character": suite_character,
}


def run_suite(name: str, table: ClassTable, *, height: int | None = None) -> CheckReport:
    if name == "kac":
        if height is None:
            height = min(table.bound)
        return suite_kac(table, height)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](table)
