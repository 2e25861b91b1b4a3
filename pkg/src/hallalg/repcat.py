"""Nilpotent representations of a finite quiver over a prime field.

Isomorphism classes are materialized per dimension vector by closing
candidate representations under the base-change group with a breadth-first
orbit search; the canonical representative of a class is the
lexicographically least representation in its orbit under the fixed
flattening (arrow matrices in arrow-list order, each row-major).
Automorphism counts come from the orbit-stabilizer identity, Hall numbers
from direct subrepresentation enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import modlin
from .scalars import GroundField

__all__ = [
    "LimitExceeded",
    "Quiver",
    "Rep",
    "RepClass",
    "ClassTable",
    "enumerate_classes",
    "euler_form",
    "symmetric_euler_form",
    "hom_dim",
    "ext_dim",
    "end_basis",
    "aut_count",
    "is_indecomposable",
]

DimVec = tuple[int, ...]
ClassId = tuple[DimVec, int]

DEFAULT_MAX_STATES = 10**7
DEFAULT_MAX_CLASSES = 10**6


class LimitExceeded(RuntimeError):
    """An enumeration outgrew its configured resource limit."""


class Quiver:
    """A finite quiver; loops and parallel arrows are allowed.

    Vertices are 0-based; the arrow list order is part of the identity and
    fixes the matrix slot order of representations.
    """

    __slots__ = ("vertices", "arrows")

    def __init__(self, vertices: int, arrows):
        vertices = int(vertices)
        if vertices < 1:
            raise ValueError("quiver needs at least one vertex")
        arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in arrows:
            if not (0 <= s < vertices and 0 <= t < vertices):
                raise ValueError(f"arrow ({s},{t}) out of range for {vertices} vertices")
        self.vertices = vertices
        self.arrows = arrows

    def zero_dim(self) -> DimVec:
        return (0,) * self.vertices

    def unit_dim(self, i: int) -> DimVec:
        return tuple(1 if k == i else 0 for k in range(self.vertices))

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and other.vertices == self.vertices
            and other.arrows == self.arrows
        )

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({self.vertices}, {list(self.arrows)})"


def dim_add(a: DimVec, b: DimVec) -> DimVec:
    return tuple(x + y for x, y in zip(a, b))


def dim_sub(a: DimVec, b: DimVec) -> DimVec:
    return tuple(x - y for x, y in zip(a, b))


def dim_leq(a: DimVec, b: DimVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def dims_below(bound: DimVec):
    """All dimension vectors <= bound componentwise, sorted by (total, lex)."""
    vecs = [tuple(v) for v in itertools.product(*(range(b + 1) for b in bound))]
    vecs.sort(key=lambda v: (sum(v), v))
    return vecs


def euler_form(quiver: Quiver, a: DimVec, b: DimVec) -> int:
    """<a, b> = sum_i a_i b_i - sum_{arrows s->t} a_s b_t."""
    out = sum(x * y for x, y in zip(a, b))
    for s, t in quiver.arrows:
        out -= a[s] * b[t]
    return out


def symmetric_euler_form(quiver: Quiver, a: DimVec, b: DimVec) -> int:
    return euler_form(quiver, a, b) + euler_form(quiver, b, a)


class Rep:
    """A concrete representation: one matrix over F_q per arrow.

    The matrix of an arrow s -> t has shape dim[t] x dim[s] and acts on
    column coordinate vectors.
    """

    __slots__ = ("quiver", "q", "dim", "mats")

    def __init__(self, quiver: Quiver, q: int, dim, mats):
        self.quiver = quiver
        self.q = int(q)
        self.dim = tuple(int(d) for d in dim)
        if len(self.dim) != quiver.vertices or any(d < 0 for d in self.dim):
            raise ValueError(f"bad dimension vector {dim}")
        mats = tuple(np.array(m, dtype=np.int64) % self.q for m in mats)
        if len(mats) != len(quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for (s, t), m in zip(quiver.arrows, mats):
            if m.shape != (self.dim[t], self.dim[s]):
                raise ValueError(
                    f"matrix shape {m.shape} does not match arrow ({s},{t}) "
                    f"for dimensions {self.dim}"
                )
        self.mats = mats

    @classmethod
    def zero(cls, quiver: Quiver, q: int, dim) -> "Rep":
        dim = tuple(dim)
        mats = [np.zeros((dim[t], dim[s]), dtype=np.int64) for s, t in quiver.arrows]
        return cls(quiver, q, dim, mats)

    @classmethod
    def simple(cls, quiver: Quiver, q: int, i: int) -> "Rep":
        return cls.zero(quiver, q, quiver.unit_dim(i))

    def key(self) -> bytes:
        if not self.mats:
            return b""
        flat = np.concatenate([m.reshape(-1) for m in self.mats])
        return flat.astype(np.uint8).tobytes()

    def direct_sum(self, other: "Rep") -> "Rep":
        if other.quiver != self.quiver or other.q != self.q:
            raise ValueError("direct sum requires the same quiver and field")
        dim = dim_add(self.dim, other.dim)
        mats = []
        for k, (s, t) in enumerate(self.quiver.arrows):
            m = np.zeros((dim[t], dim[s]), dtype=np.int64)
            m[: self.dim[t], : self.dim[s]] = self.mats[k]
            m[self.dim[t] :, self.dim[s] :] = other.mats[k]
            mats.append(m)
        return Rep(self.quiver, self.q, dim, mats)

    def is_nilpotent(self) -> bool:
        """Whether the chain of arrow-image subspaces descends to zero.

        The k-th term is spanned at each vertex by images of all paths of
        length k; subspaces are summed exactly, so parallel arrows cannot
        cancel each other.
        """
        p = self.q
        spans = [np.eye(d, dtype=np.int64) for d in self.dim]
        total = sum(self.dim)
        for _ in range(total + 1):
            if all(s.shape[0] == 0 for s in spans):
                return True
            pieces: list[list[np.ndarray]] = [[] for _ in range(self.quiver.vertices)]
            for (s, t), m in zip(self.quiver.arrows, self.mats):
                if spans[s].shape[0] and self.dim[t]:
                    pieces[t].append((spans[s] @ m.T) % p)
            new_spans = []
            for i in range(self.quiver.vertices):
                if pieces[i]:
                    stacked = np.concatenate(pieces[i], axis=0)
                    r, piv = modlin.rref(stacked, p)
                    new_spans.append(r[: len(piv)])
                else:
                    new_spans.append(np.zeros((0, self.dim[i]), dtype=np.int64))
            if all(n.shape[0] == s.shape[0] for n, s in zip(new_spans, spans)):
                return False
            spans = new_spans
        return all(s.shape[0] == 0 for s in spans)

    def __repr__(self):
        return f"Rep(dim={self.dim}, q={self.q})"


def _hom_system(m: Rep, n: Rep) -> np.ndarray:
    """Coefficient matrix of the intertwiner equations N_a f_s = f_t M_a."""
    nv = m.quiver.vertices
    offsets = []
    off = 0
    for i in range(nv):
        offsets.append(off)
        off += n.dim[i] * m.dim[i]
    nvars = off
    rows = []
    for (s, t), ma, na in zip(m.quiver.arrows, m.mats, n.mats):
        for r in range(n.dim[t]):
            for c in range(m.dim[s]):
                row = np.zeros(nvars, dtype=np.int64)
                for k in range(n.dim[s]):
                    row[offsets[s] + k * m.dim[s] + c] += na[r, k]
                for k in range(m.dim[t]):
                    row[offsets[t] + r * m.dim[t] + k] -= ma[k, c]
                rows.append(row % m.q)
    if not rows:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.stack(rows)


def hom_dim(m: Rep, n: Rep) -> int:
    """dim_k Hom(M, N), by solving the intertwiner equations."""
    if m.quiver != n.quiver or m.q != n.q:
        raise ValueError("hom requires the same quiver and field")
    nvars = sum(a * b for a, b in zip(n.dim, m.dim))
    sysmat = _hom_system(m, n)
    return nvars - modlin.rank(sysmat, m.q)


def ext_dim(m: Rep, n: Rep) -> int:
    """dim_k Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>."""
    out = hom_dim(m, n) - euler_form(m.quiver, m.dim, n.dim)
    assert out >= 0, "negative Ext dimension: Euler form inconsistency"
    return out


def end_basis(m: Rep) -> list[tuple[np.ndarray, ...]]:
    """A basis of End(M) as tuples of per-vertex matrices."""
    sysmat = _hom_system(m, m)
    nvars = sum(d * d for d in m.dim)
    if nvars == 0:
        return []
    null = modlin.nullspace(sysmat, m.q) if sysmat.shape[0] else np.eye(nvars, dtype=np.int64)
    basis = []
    for vec in null:
        blocks = []
        off = 0
        for d in m.dim:
            blocks.append(vec[off : off + d * d].reshape(d, d))
            off += d * d
        basis.append(tuple(blocks))
    return basis


def _end_elements(m: Rep, max_states: int):
    basis = end_basis(m)
    h = len(basis)
    if m.q**h > max_states:
        raise LimitExceeded(
            f"End space has {m.q}^{h} elements, above the limit {max_states}"
        )
    p = m.q
    for coeffs in itertools.product(range(p), repeat=h):
        blocks = [np.zeros((d, d), dtype=np.int64) for d in m.dim]
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(len(blocks)):
                    blocks[i] = (blocks[i] + c * b[i]) % p
        yield blocks


def aut_count(m: Rep, max_states: int = DEFAULT_MAX_STATES) -> int:
    """|Aut(M)|, by enumerating End(M) and counting invertible elements."""
    count = 0
    for blocks in _end_elements(m, max_states):
        if all(modlin.is_invertible(b, m.q) for b in blocks):
            count += 1
    return count


def is_indecomposable(m: Rep, max_states: int = DEFAULT_MAX_STATES) -> bool:
    """Whether the only idempotent endomorphisms of M are 0 and the identity."""
    if sum(m.dim) == 0:
        return False
    p = m.q
    for blocks in _end_elements(m, max_states):
        trivial = all(not b.any() for b in blocks) or all(
            np.array_equal(b % p, np.eye(b.shape[0], dtype=np.int64)) for b in blocks
        )
        if trivial:
            continue
        if all(np.array_equal((b @ b) % p, b % p) for b in blocks):
            return False
    return True


@dataclass(frozen=True)
class RepClass:
    """An isomorphism class: canonical representative plus cached invariants."""

    cid: ClassId
    rep: Rep
    aut: int
    orbit_size: int
    indecomposable: bool

    @property
    def dim(self) -> DimVec:
        return self.cid[0]

    def __repr__(self):
        return f"RepClass({self.cid[0]}:{self.cid[1]})"


@dataclass
class _MuData:
    classes: tuple[RepClass, ...]
    state_to_idx: dict


class ClassTable:
    """All isomorphism classes with dimension vector inside a componentwise bound.

    Classes are enumerated lazily per dimension vector and cached together
    with the full orbit membership map, so classifying an arbitrary
    representation inside the bound is a dictionary lookup.  Identical
    inputs give identical class ids and orderings.
    """

    def __init__(
        self,
        quiver: Quiver,
        fld: GroundField,
        bound,
        *,
        max_states: int = DEFAULT_MAX_STATES,
        max_classes: int = DEFAULT_MAX_CLASSES,
    ):
        if fld.q > 251:
            raise ValueError("field sizes above 251 are not supported by the state encoding")
        self.quiver = quiver
        self.field = fld
        self.q = fld.q
        self.bound = tuple(int(b) for b in bound)
        if len(self.bound) != quiver.vertices or any(b < 0 for b in self.bound):
            raise ValueError(f"bad bound {bound}")
        self.max_states = int(max_states)
        self.max_classes = int(max_classes)
        self._mu: dict[DimVec, _MuData] = {}
        self._gens: dict[DimVec, list] = {}
        self._hall_dist: dict = {}
        self._hall_multi: dict = {}
        self._hom: dict = {}
        self._euler: dict = {}
        self._nclasses = 0

    # ----- enumeration ---------------------------------------------------

    def degrees(self) -> list[DimVec]:
        return dims_below(self.bound)

    def classes(self, mu) -> tuple[RepClass, ...]:
        mu = tuple(int(x) for x in mu)
        if not dim_leq(mu, self.bound):
            raise ValueError(f"dimension {mu} outside table bound {self.bound}")
        self._ensure(mu)
        return self._mu[mu].classes

    def zero_id(self) -> ClassId:
        return (self.quiver.zero_dim(), 0)

    def simple_ids(self) -> list[ClassId]:
        out = []
        for i in range(self.quiver.vertices):
            cl = self.classes(self.quiver.unit_dim(i))
            assert len(cl) == 1
            out.append(cl[0].cid)
        return out

    def cls(self, cid: ClassId) -> RepClass:
        return self.classes(cid[0])[cid[1]]

    def aut(self, cid: ClassId) -> int:
        return self.cls(cid).aut

    def class_count(self, mu) -> int:
        return len(self.classes(mu))

    def indec_count(self, mu) -> int:
        return sum(1 for c in self.classes(mu) if c.indecomposable)

    def classify(self, rep: Rep) -> ClassId:
        mu = rep.dim
        self._ensure(mu)
        data = self._mu[mu]
        key = rep.key()
        if key not in data.state_to_idx:
            raise ValueError("representation is not nilpotent or not in the table")
        return (mu, data.state_to_idx[key])

    def euler(self, a, b) -> int:
        key = (tuple(a), tuple(b))
        out = self._euler.get(key)
        if out is None:
            out = euler_form(self.quiver, key[0], key[1])
            self._euler[key] = out
        return out

    def sym(self, a, b) -> int:
        return self.euler(a, b) + self.euler(b, a)

    def _generators(self, mu: DimVec):
        if mu not in self._gens:
            gens = []
            for v, d in enumerate(mu):
                for g, gi in modlin.gl_generators(d, self.q):
                    gens.append((v, g, gi))
            self._gens[mu] = gens
        return self._gens[mu]

    def _shapes(self, mu: DimVec):
        return [(mu[t], mu[s]) for s, t in self.quiver.arrows]

    def _key_rows(self, mats_batch: list[np.ndarray]) -> np.ndarray:
        return np.concatenate(
            [m.reshape(m.shape[0], -1) for m in mats_batch], axis=1
        ).astype(np.uint8)

    def _mats_from_key(self, key: bytes, mu: DimVec) -> list[np.ndarray]:
        flat = np.frombuffer(key, dtype=np.uint8).astype(np.int64)
        mats = []
        off = 0
        for nt, ns in self._shapes(mu):
            mats.append(flat[off : off + nt * ns].reshape(nt, ns))
            off += nt * ns
        return mats

    def _orbit(self, mu: DimVec, seed: list[np.ndarray], visited: dict, idx: int):
        """Close one orbit under the base-change generators; returns (min_key, size)."""
        p = self.q
        arrows = self.quiver.arrows
        if not arrows:
            visited[b""] = idx
            return b"", 1
        gens = self._generators(mu)
        key = self._key_rows([m[None] for m in seed])[0].tobytes()
        visited[key] = idx
        min_key = key
        size = 1
        frontier = [m[None].copy() for m in seed]
        while frontier:
            keep_mats: list[list[np.ndarray]] = []
            for v, g, gi in gens:
                out = []
                for (s, t), m in zip(arrows, frontier):
                    a = m
                    if t == v:
                        a = np.einsum("ij,bjk->bik", g, a) % p
                    if s == v:
                        a = np.einsum("bij,jk->bik", a, gi) % p
                    out.append(a)
                rows = self._key_rows(out)
                keep = []
                for r in range(rows.shape[0]):
                    k = rows[r].tobytes()
                    if k not in visited:
                        visited[k] = idx
                        size += 1
                        if k < min_key:
                            min_key = k
                        keep.append(r)
                if keep:
                    keep_mats.append([a[keep] for a in out])
                if len(visited) > self.max_states:
                    raise LimitExceeded(
                        f"orbit states at dimension {mu} exceed max_states={self.max_states}"
                    )
            if keep_mats:
                frontier = [
                    np.concatenate([km[i] for km in keep_mats], axis=0)
                    for i in range(len(arrows))
                ]
            else:
                frontier = []
        return min_key, size

    def _candidates(self, mu: DimVec):
        """Representations covering every class of dimension mu.

        Every nilpotent representation is an extension of a vertex simple
        (a top composition factor) by a smaller class, so extending each
        class of mu - e_i by a new basis vector at vertex i hits every
        orbit.
        """
        q = self.q
        arrows = self.quiver.arrows
        for i in range(self.quiver.vertices):
            if mu[i] == 0:
                continue
            nu = dim_sub(mu, self.quiver.unit_dim(i))
            for parent in self.classes(nu):
                out_arrows = [k for k, (s, _) in enumerate(arrows) if s == i]
                free = [nu[arrows[k][1]] for k in out_arrows]
                total_free = sum(free)
                for vals in itertools.product(range(q), repeat=total_free):
                    mats = []
                    pos = 0
                    cursor = {}
                    for k, f in zip(out_arrows, free):
                        cursor[k] = vals[pos : pos + f]
                        pos += f
                    for k, (s, t) in enumerate(arrows):
                        base = parent.rep.mats[k]
                        m = np.zeros((mu[t], mu[s]), dtype=np.int64)
                        m[: nu[t], : nu[s]] = base
                        if s == i:
                            col = np.array(cursor[k], dtype=np.int64)
                            m[: nu[t], nu[s]] = col
                        mats.append(m)
                    yield mats

    def _ensure(self, mu: DimVec):
        if mu in self._mu:
            return
        zero = self.quiver.zero_dim()
        if mu == zero:
            rep = Rep.zero(self.quiver, self.q, mu)
            cls = RepClass((mu, 0), rep, 1, 1, False)
            self._mu[mu] = _MuData((cls,), {rep.key(): 0})
            self._nclasses += 1
            return
        visited: dict[bytes, int] = {}
        orbits: list[tuple[bytes, int]] = []
        has_arrows = bool(self.quiver.arrows)
        for mats in self._candidates(mu):
            if has_arrows:
                key = self._key_rows([m[None] for m in mats])[0].tobytes()
            else:
                key = b""
            if key in visited:
                continue
            min_key, size = self._orbit(mu, mats, visited, len(orbits))
            orbits.append((min_key, size))
        order = sorted(range(len(orbits)), key=lambda k: orbits[k][0])
        rank_of = {old: new for new, old in enumerate(order)}
        for k in visited:
            visited[k] = rank_of[visited[k]]
        group_order = 1
        for d in mu:
            group_order *= modlin.gl_order(d, self.q)
        classes = []
        for new, old in enumerate(order):
            min_key, size = orbits[old]
            assert group_order % size == 0
            rep = Rep(self.quiver, self.q, mu, self._mats_from_key(min_key, mu))
            classes.append(
                RepClass((mu, new), rep, group_order // size, size, True)
            )
        self._nclasses += len(classes)
        if self._nclasses > self.max_classes:
            raise LimitExceeded(
                f"class count exceeds max_classes={self.max_classes} at dimension {mu}"
            )
        # Krull-Schmidt: a class is decomposable exactly when it is a direct
        # sum of two smaller classes.
        decomposable = set()
        seen_pairs = set()
        for nu in dims_below(mu):
            if nu == zero or nu == mu:
                continue
            rest = dim_sub(mu, nu)
            if (rest, nu) in seen_pairs:
                continue
            seen_pairs.add((nu, rest))
            for left in self.classes(nu):
                for right in self.classes(rest):
                    key = left.rep.direct_sum(right.rep).key()
                    decomposable.add(visited[key])
        final = tuple(
            RepClass(c.cid, c.rep, c.aut, c.orbit_size, c.cid[1] not in decomposable)
            for c in classes
        )
        self._mu[mu] = _MuData(final, visited)

    # ----- Hall numbers ---------------------------------------------------

    def hall_distribution(self, gamma: ClassId, sub_dim) -> dict:
        """Counts of subrepresentations of M_gamma by (quotient, sub) class.

        Maps (quotient_cid, sub_cid) to the number of subrepresentations of
        the canonical representative of gamma with dimension vector sub_dim
        lying in that pair of classes.
        """
        sub_dim = tuple(sub_dim)
        cache_key = (gamma, sub_dim)
        if cache_key in self._hall_dist:
            return self._hall_dist[cache_key]
        gdim = gamma[0]
        out: dict[tuple[ClassId, ClassId], int] = {}
        if not dim_leq(sub_dim, gdim):
            self._hall_dist[cache_key] = out
            return out
        grep = self.cls(gamma).rep
        p = self.q
        quot_dim = dim_sub(gdim, sub_dim)
        per_vertex = [
            list(modlin.subspace_bases(gdim[i], sub_dim[i], p))
            for i in range(self.quiver.vertices)
        ]
        arrows = self.quiver.arrows
        for choice in itertools.product(*per_vertex):
            bases = [c[0] for c in choice]
            pivots = [c[1] for c in choice]
            closed = True
            sub_mats = []
            for (s, t), m in zip(arrows, grep.mats):
                if sub_dim[s]:
                    img = (bases[s] @ m.T) % p
                else:
                    img = np.zeros((0, gdim[t]), dtype=np.int64)
                coords = np.zeros((sub_dim[t], sub_dim[s]), dtype=np.int64)
                for j in range(img.shape[0]):
                    resid = modlin.reduce_vector(bases[t], pivots[t], img[j], p)
                    if resid.any():
                        closed = False
                        break
                    coords[:, j] = img[j][list(pivots[t])]
                if not closed:
                    break
                sub_mats.append(coords)
            if not closed:
                continue
            quot_mats = []
            comp = [
                [j for j in range(gdim[i]) if j not in pivots[i]]
                for i in range(self.quiver.vertices)
            ]
            for (s, t), m in zip(arrows, grep.mats):
                qm = np.zeros((quot_dim[t], quot_dim[s]), dtype=np.int64)
                for jj, j in enumerate(comp[s]):
                    resid = modlin.reduce_vector(bases[t], pivots[t], m[:, j], p)
                    qm[:, jj] = resid[comp[t]]
                quot_mats.append(qm)
            sub_cid = self.classify(Rep(self.quiver, p, sub_dim, sub_mats))
            quot_cid = self.classify(Rep(self.quiver, p, quot_dim, quot_mats))
            out[(quot_cid, sub_cid)] = out.get((quot_cid, sub_cid), 0) + 1
        self._hall_dist[cache_key] = out
        return out

    def hall(self, quot: ClassId, sub: ClassId, gamma: ClassId) -> int:
        """The Hall number: subobjects of M_gamma isomorphic to M_sub with
        quotient isomorphic to M_quot."""
        if dim_add(quot[0], sub[0]) != gamma[0]:
            return 0
        return self.hall_distribution(gamma, sub[0]).get((quot, sub), 0)

    def hall_multi(self, gamma: ClassId, parts) -> int:
        """Iterated Hall number: filtrations with quotients parts[0], parts[1], ...

        Counts chains M_gamma = X_0 >= X_1 >= ... >= X_m = 0 with
        X_{k-1}/X_k isomorphic to M_{parts[k-1]}.
        """
        parts = tuple(parts)
        key = (gamma, parts)
        if key in self._hall_multi:
            return self._hall_multi[key]
        total = self.quiver.zero_dim()
        for p in parts:
            total = dim_add(total, p[0])
        if total != gamma[0]:
            out = 0
        elif not parts:
            out = 1 if sum(gamma[0]) == 0 else 0
        elif len(parts) == 1:
            out = 1 if parts[0] == gamma else 0
        else:
            first = parts[0]
            rest = parts[1:]
            rest_dim = dim_sub(gamma[0], first[0])
            if any(d < 0 for d in rest_dim):
                out = 0
            else:
                out = 0
                dist = self.hall_distribution(gamma, rest_dim)
                for (quot_cid, sub_cid), g in dist.items():
                    if quot_cid == first:
                        out += g * self.hall_multi(sub_cid, rest)
        self._hall_multi[key] = out
        return out

    def hom(self, a: ClassId, b: ClassId) -> int:
        key = (a, b)
        if key not in self._hom:
            self._hom[key] = hom_dim(self.cls(a).rep, self.cls(b).rep)
        return self._hom[key]

    def __repr__(self):
        return (
            f"ClassTable({self.quiver!r}, q={self.q}, bound={self.bound})"
        )


def enumerate_classes(quiver: Quiver, fld: GroundField, mu, *, max_states: int = DEFAULT_MAX_STATES):
    """All isomorphism classes of nilpotent representations of dimension mu."""
    mu = tuple(int(x) for x in mu)
    table = ClassTable(quiver, fld, mu, max_states=max_states)
    return table.classes(mu)
