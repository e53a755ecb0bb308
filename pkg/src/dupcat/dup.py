"""The module category of the duplicated algebra, in the triple model.

A module over the duplicated algebra is a triple (X, Y, theta) where X and Y
are representations of the base quiver (the restrictions to the two copies
of the path algebra) and theta : nu(Y) -> X records the action of the dual
bimodule, nu being the Nakayama functor of the base category.

Internally every triple is realized as a single representation of the
duplicated quiver: the two copies act through their own arrows and each
connecting arrow x' -> y (one per maximal path p from y to x) acts by the
matrix of theta against the dual-path generator of p.  Morphisms, covers,
syzygies, AR translates and knitting then all run through the generic
engine of :mod:`dupcat.modcat`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .linalg import RMatrix, nullspace_basis, solve_matrix
from .modcat import ARCatalog, ModuleCategory
from .quiver import Quiver, duplicated_quiver, opposite, paths_from, prime
from . import reps
from .hereditary import (
    INJECTIVE,
    PROJECTIVE,
    TauPair,
    injective_rep,
    path_category,
    projective_rep,
    simple_rep,
)
from .reps import Rep, RepMap


_report_cache: dict = {}


def dup_quiver_report(q: Quiver):
    if q not in _report_cache:
        _report_cache[q] = duplicated_quiver(q)
    return _report_cache[q]


@dataclass
class DupModule:
    """Triple (X, Y, theta: nu(Y) -> X) over a base quiver."""

    x_part: Rep
    y_part: Rep
    theta: RepMap

    def __post_init__(self):
        nu = path_category(self.base_quiver).nakayama(self.y_part)
        if self.theta.source.dim_vector() != nu.dim_vector():
            raise ValueError("theta must start at the canonical Nakayama image")
        object.__setattr__(self, "_rep", None)

    @property
    def base_quiver(self) -> Quiver:
        return self.x_part.quiver

    def dim_vectors(self):
        return self.x_part.dim_vector(), self.y_part.dim_vector()

    def total_dim(self) -> int:
        return self.x_part.total_dim() + self.y_part.total_dim()

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def rep(self) -> Rep:
        if self._rep is None:
            object.__setattr__(self, "_rep", triple_to_rep(self))
        return self._rep

    def __repr__(self):
        return f"DupModule(X{self.x_part.dim_vector()}, Y{self.y_part.dim_vector()})"


@dataclass
class DupMap:
    """Morphism of triples: compatible pair of base-quiver morphisms."""

    source: DupModule
    target: DupModule
    f: RepMap  # x_part -> x_part
    g: RepMap  # y_part -> y_part


def _dual_path_matrix(base_cat, y_rep: Rep, mp) -> RMatrix:
    """Matrix of the action of the dual-path generator of ``mp`` on Y.

    Rows are indexed by the chosen basis of Hom(Y, P_y), columns by the
    Y-component at the end of the path; entry (i, j) is the coefficient of
    the path in the image of the j-th basis vector under the i-th hom.
    """
    q = y_rep.quiver
    y, x = mp.start, mp.end
    _, bases, _ = base_cat.nak_data(y_rep)
    path_index = paths_from(q, y)[x].index(mp.arrows)
    rows = []
    for b in bases[y]:
        rows.append(list(b.mats[x].data[path_index]) if b.mats[x].rows else [0] * y_rep.dims[x])
    return RMatrix(rows, len(bases[y]), y_rep.dims[x])


def triple_to_rep(dm: DupModule) -> Rep:
    """Realize a triple as a representation of the duplicated quiver."""
    q = dm.base_quiver
    report = dup_quiver_report(q)
    base_cat = path_category(q)
    dims = {}
    for v in q.vertices:
        dims[v] = dm.x_part.dims[v]
        dims[prime(v)] = dm.y_part.dims[v]
    mats = {}
    for a in q.arrows:
        mats[a.name] = dm.x_part.mats[a.name]
        mats[prime(a.name)] = dm.y_part.mats[a.name]
    for name, _, tgt, mp in report.connecting:
        b = _dual_path_matrix(base_cat, dm.y_part, mp)
        mats[name] = dm.theta.mats[tgt] @ b
    return Rep(report.dup, dims, mats)


def rep_to_triple(rep: Rep, base: Quiver) -> DupModule:
    """Recover the triple from a duplicated-quiver representation.

    theta is the unique solution of the joint linear system given by its
    naturality squares and by matching the connecting-arrow actions.
    """
    report = dup_quiver_report(base)
    assert rep.quiver == report.dup, "representation is not over the duplicated quiver"
    x = Rep(base, {v: rep.dims[v] for v in base.vertices},
            {a.name: rep.mats[a.name] for a in base.arrows})
    y = Rep(base, {v: rep.dims[prime(v)] for v in base.vertices},
            {a.name: rep.mats[prime(a.name)] for a in base.arrows})
    base_cat = path_category(base)
    nu = base_cat.nakayama(y)
    offsets = {}
    total = 0
    for v in base.vertices:
        offsets[v] = total
        total += x.dims[v] * nu.dims[v]
    if total == 0:
        theta = reps.zero_map(nu, x)
        return DupModule(x, y, theta)

    def var(v, i, j):
        return offsets[v] + i * nu.dims[v] + j

    rows, rhs = [], []
    for a in base.arrows:
        yv, xv = a.source, a.target
        na, xa = nu.mats[a.name], x.mats[a.name]
        for i in range(x.dims[xv]):
            for j in range(nu.dims[yv]):
                row = [0] * total
                for k in range(nu.dims[xv]):
                    row[var(xv, i, k)] += na.data[k][j]
                for k in range(x.dims[yv]):
                    row[var(yv, k, j)] -= xa.data[i][k]
                rows.append(row)
                rhs.append(0)
    for name, _, tgt, mp in report.connecting:
        b = _dual_path_matrix(base_cat, y, mp)
        c = rep.mats[name]
        for i in range(x.dims[tgt]):
            for j in range(y.dims[mp.end]):
                row = [0] * total
                for k in range(nu.dims[tgt]):
                    row[var(tgt, i, k)] += b.data[k][j]
                rows.append(row)
                rhs.append(c.data[i][j])
    system = RMatrix(rows, len(rows), total)
    sol = solve_matrix(system, RMatrix.column(rhs))
    assert sol is not None, "no compatible dual-bimodule action: not a module"
    assert not nullspace_basis(system), "dual-bimodule action not unique"
    mats = {}
    for v in base.vertices:
        o = offsets[v]
        mats[v] = RMatrix(
            [
                [sol.data[o + i * nu.dims[v] + j][0] for j in range(nu.dims[v])]
                for i in range(x.dims[v])
            ],
            x.dims[v],
            nu.dims[v],
        )
    return DupModule(x, y, RepMap(nu, x, mats, check=False))


# -- standard modules and the category ---------------------------------------


def embed_A(x: Rep) -> DupModule:
    """The module (X, 0, 0): an A-module seen over the duplicated algebra."""
    q = x.quiver
    y = reps.zero_rep(q)
    nu = path_category(q).nakayama(y)
    return DupModule(x, y, reps.zero_map(nu, x))


def proj_primed(q: Quiver, x: str) -> DupModule:
    """The projective-injective at the primed vertex: (nu P_x, P_x, id)."""
    cat = path_category(q)
    p = cat.proj[x]
    nu = cat.nakayama(p)
    return DupModule(nu, p, reps.identity_map(nu))


def inj_primed(q: Quiver, x: str) -> DupModule:
    """The injective at the primed vertex: (0, I_x, 0)."""
    i = injective_rep(q, x)
    nu = path_category(q).nakayama(i)
    return DupModule(reps.zero_rep(q), i, reps.zero_map(nu, reps.zero_rep(q)))


def simple_primed(q: Quiver, x: str) -> DupModule:
    s = simple_rep(q, x)
    nu = path_category(q).nakayama(s)
    return DupModule(reps.zero_rep(q), s, reps.zero_map(nu, reps.zero_rep(q)))


@dataclass
class StandardDupModules:
    simple: dict
    simple_primed: dict
    projective: dict  # P at unprimed vertices = embedded projectives
    projective_primed: dict  # P at primed vertices, projective-injective
    injective_primed: dict


def standard_dup_modules(q: Quiver) -> StandardDupModules:
    return StandardDupModules(
        {x: embed_A(simple_rep(q, x)) for x in q.vertices},
        {x: simple_primed(q, x) for x in q.vertices},
        {x: embed_A(projective_rep(q, x)) for x in q.vertices},
        {x: proj_primed(q, x) for x in q.vertices},
        {x: inj_primed(q, x) for x in q.vertices},
    )


_dup_cache: dict = {}


def dup_category(q: Quiver) -> ModuleCategory:
    """The module category of the duplicated algebra (cached per quiver)."""
    if q in _dup_cache:
        return _dup_cache[q]
    report = dup_quiver_report(q)
    dq = report.dup
    projectives = {}
    injectives = {}
    simples = {}
    prim = {x: proj_primed(q, x).rep() for x in q.vertices}
    for x in q.vertices:
        pbar = embed_A(projective_rep(q, x)).rep()
        assert pbar.dims[x] == 1
        projectives[x] = (pbar, RMatrix.column([1]))
        ppr = prim[x]
        assert ppr.dims[prime(x)] == 1
        projectives[prime(x)] = (ppr, RMatrix.column([1]))
        # the injective at the unprimed vertex is the projective-injective
        assert ppr.dims[x] == 1
        injectives[x] = (ppr, RMatrix([[1]], 1, 1))
        ipr = inj_primed(q, x).rep()
        assert ipr.dims[prime(x)] == 1
        injectives[prime(x)] = (ipr, RMatrix([[1]], 1, 1))
        simples[x] = embed_A(simple_rep(q, x)).rep()
        simples[prime(x)] = simple_primed(q, x).rep()

    def op_builder():
        opq = opposite(q)
        op = dup_category(opq)
        vmap = {}
        for v in q.vertices:
            vmap[v] = prime(v)
            vmap[prime(v)] = v
        amap = {}
        for a in q.arrows:
            amap[a.name] = prime(a.name)
            amap[prime(a.name)] = a.name
        for _, _, _, mp in report.connecting:
            rev = type(mp)(mp.end, mp.start, tuple(reversed(mp.arrows)))
            amap[mp.name] = rev.name
        return op, vmap, amap

    cat = ModuleCategory(dq, projectives, injectives, simples, op_builder)
    _dup_cache[q] = cat
    return cat


# -- public operations on triples ---------------------------------------------


def hom_basis_dup(m: DupModule, n: DupModule):
    """Basis of the morphism space, as pairs of base-quiver morphisms."""
    q = m.base_quiver
    out = []
    for h in dup_category(q).hom(m.rep(), n.rep()):
        f = RepMap(
            m.x_part, n.x_part, {v: h.mats[v] for v in q.vertices}, check=False
        )
        g = RepMap(
            m.y_part,
            n.y_part,
            {v: h.mats[prime(v)] for v in q.vertices},
            check=False,
        )
        out.append(DupMap(m, n, f, g))
    return out


def hom_dim_dup(m: DupModule, n: DupModule) -> int:
    return len(dup_category(m.base_quiver).hom(m.rep(), n.rep()))


def is_isomorphic_dup(m: DupModule, n: DupModule) -> bool:
    return reps.is_isomorphic(m.rep(), n.rep())


@dataclass
class StructureData:
    top: DupModule
    socle: DupModule
    radical: DupModule


def structure(m: DupModule) -> StructureData:
    q = m.base_quiver
    cat = dup_category(q)
    rad, _ = cat.radical(m.rep())
    top, _ = cat.top(m.rep())
    soc, _ = cat.socle(m.rep())
    return StructureData(
        rep_to_triple(top, q), rep_to_triple(soc, q), rep_to_triple(rad, q)
    )


@dataclass
class CoversEnvelopes:
    cover: DupModule
    cover_map: DupMap
    envelope: DupModule
    envelope_map: DupMap


def _as_dup_map(h: RepMap, m: DupModule, n: DupModule) -> DupMap:
    q = m.base_quiver
    f = RepMap(m.x_part, n.x_part, {v: h.mats[v] for v in q.vertices}, check=False)
    g = RepMap(
        m.y_part, n.y_part, {v: h.mats[prime(v)] for v in q.vertices}, check=False
    )
    return DupMap(m, n, f, g)


def covers_and_envelopes(m: DupModule) -> CoversEnvelopes:
    q = m.base_quiver
    cat = dup_category(q)
    cover = cat.cover(m.rep())
    p0 = rep_to_triple(cover.p0, q)
    _, i0_rep, j = cat.envelope(m.rep())
    i0 = rep_to_triple(i0_rep, q)
    return CoversEnvelopes(
        p0, _as_dup_map(cover.q, p0, m), i0, _as_dup_map(j, m, i0)
    )


@dataclass
class SyzygyPair:
    omega: DupModule
    cosyzygy: DupModule


def syzygy_pair(m: DupModule) -> SyzygyPair:
    q = m.base_quiver
    cat = dup_category(q)
    omega, _ = cat.syzygy(m.rep())
    cosyz, _ = cat.cosyzygy(m.rep())
    return SyzygyPair(rep_to_triple(omega, q), rep_to_triple(cosyz, q))


def tau_dup_pair(m: DupModule) -> TauPair:
    q = m.base_quiver
    cat = dup_category(q)
    t = cat.tau(m.rep())
    ti = cat.tau_inv(m.rep())
    return TauPair(
        PROJECTIVE if t is None else rep_to_triple(t, q),
        INJECTIVE if ti is None else rep_to_triple(ti, q),
    )


def ext1_dup(m: DupModule, n: DupModule) -> int:
    return dup_category(m.base_quiver).ext1_dim(m.rep(), n.rep())


def algebra_dimension(q: Quiver) -> int:
    """k-dimension of the duplicated algebra: three copies of dim A."""
    dim_a = sum(projective_rep(q, x).total_dim() for x in q.vertices)
    return 3 * dim_a


def pd_dup(m: DupModule) -> int:
    q = m.base_quiver
    return dup_category(q).pd(m.rep(), cap=algebra_dimension(q))


# -- the knitted catalog -------------------------------------------------------


@dataclass
class DupCatalog:
    """ind of the duplicated algebra with flags; left-part flags are filled
    by :mod:`dupcat.leftpart` after the catalog is built."""

    base: Quiver
    report: object
    catalog: ARCatalog
    modules: tuple  # DupModule per entry
    proj_injective: tuple
    in_ind_A: tuple
    in_L: Optional[tuple] = None
    in_sigma: Optional[tuple] = None

    @property
    def entries(self):
        return self.catalog.entries

    def find_module(self, m: DupModule) -> Optional[int]:
        return self.catalog.find(m.rep())


def knit_ind_dup(q: Quiver, cap: int = 10000) -> DupCatalog:
    """Knit the AR catalog of the duplicated algebra (cap-guarded)."""
    cat = dup_category(q)
    ar = cat.knit(cap)
    modules = tuple(rep_to_triple(e, q) for e in ar.entries)
    proj_inj = tuple(
        p and i for p, i in zip(ar.projective, ar.injective)
    )
    in_a = tuple(m.y_part.is_zero() for m in modules)
    return DupCatalog(q, dup_quiver_report(q), ar, modules, proj_inj, in_a)


# -- junction diagnostics -------------------------------------------------------


@dataclass
class JunctionPattern:
    zero_count: int
    commuting_count: int
    family_sizes: tuple


def path_action_vanishes(q: Quiver, names, start: str) -> bool:
    """Does the path act by zero on the regular module of the dup algebra?"""
    cat = dup_category(q)
    for z in cat.quiver.vertices:
        if not cat.proj[z].act_path(tuple(names), start).is_zero():
            return False
    return True


def junction_composite_pattern(q: Quiver) -> JunctionPattern:
    """Zero/commutativity pattern of length-two composites through the junction.

    Composites with equal endpoints are grouped; a family is a maximal set of
    pairwise proportional nonzero composites, and composites in families of
    size at least two count as identified ("commuting").
    """
    report = dup_quiver_report(q)
    cat = dup_category(q)
    dq = report.dup
    composites = []  # (endpoints, path names, start)
    for name, src, tgt, _ in report.connecting:
        for a in q.arrows_from[tgt]:
            composites.append(((src, a.target), (name, a.name), src))
        for b in dq.arrows_into[src]:
            composites.append(((b.source, tgt), (b.name, name), b.source))
    vectors = []
    for endpoints, names, start in composites:
        blocks = []
        for z in dq.vertices:
            blocks.extend(cat.proj[z].act_path(names, start).flatten())
        vectors.append((endpoints, tuple(blocks)))
    zero_count = sum(1 for _, v in vectors if all(x == 0 for x in v))
    groups: dict = {}
    for endpoints, v in vectors:
        if all(x == 0 for x in v):
            continue
        groups.setdefault(endpoints, []).append(v)
    family_sizes = []
    commuting = 0
    for endpoints, vecs in groups.items():
        remaining = list(vecs)
        while remaining:
            head = remaining.pop(0)
            family = [head]
            rest = []
            for v in remaining:
                two = RMatrix([list(head), list(v)], 2, len(head))
                from .linalg import rank

                if rank(two) <= 1:
                    family.append(v)
                else:
                    rest.append(v)
            remaining = rest
            if len(family) >= 2:
                family_sizes.append(len(family))
                commuting += len(family)
    family_sizes.sort(reverse=True)
    return JunctionPattern(zero_count, commuting, tuple(family_sizes))
