"""Pointwise finite-dimensional functors on a presented category.

A FunctorModule assigns a vector space dimension to every object and a
matrix to every generator morphism of the category; the action of an
arbitrary morphism is the word product of generator matrices.  The
homological toolkit (kernels, covers, Ext^1, tensor over the category,
Tor_1, duality) is plain exact linear algebra on these matrices.

Conventions: morphisms compose in path order, compose(f: x->y, g: y->z)
is "f then g".  For a contravariant M and f: x->y the matrix M(f) maps
M(y) -> M(x) and M(f.g) = M(f) M(g); for a covariant N, N(f): N(x) ->
N(y) and N(f.g) = N(g) N(f).
"""

from __future__ import annotations

from .errors import DimensionMismatch, PreconditionError
from .matrix import (Matrix, quotient_projection, row_space_basis,
                     sparse_kernel_basis)

CONTRA = "contra"
CO = "co"


class FunctorModule:
    def __init__(self, cat, variance, spaces, actions, name="M", prov=None):
        self.cat = cat
        self.variance = variance
        self.spaces = {v: int(spaces.get(v, 0)) for v in cat.objects}
        self.actions = actions  # gid -> Matrix
        self.name = name
        self.prov = prov

    def dim(self, v):
        return self.spaces.get(v, 0)

    def total_dim(self):
        return sum(self.spaces.values())

    def is_zero(self):
        return self.total_dim() == 0

    def dims(self):
        return dict(self.spaces)

    def __repr__(self):
        return f"<{self.variance} module {self.name}, total dim {self.total_dim()}>"

    # -- actions ------------------------------------------------------

    def gen_matrix(self, gid, src, tgt):
        m = self.actions.get(gid)
        if m is not None:
            return m
        f = self.cat.field
        if self.variance == CONTRA:
            return Matrix.zeros(f, self.dim(src), self.dim(tgt))
        return Matrix.zeros(f, self.dim(tgt), self.dim(src))

    def _word_matrix(self, x, y, word):
        f = self.cat.field
        gens = self.cat_gen_lookup()
        if self.variance == CONTRA:
            m = Matrix.identity(f, self.dim(x))
            cur = x
            for gid in word:
                (s, t) = gens[gid]
                if s != cur:
                    raise PreconditionError("word does not start where expected")
                m = m * self.gen_matrix(gid, s, t)
                cur = t
            if cur != y:
                raise PreconditionError("word endpoint mismatch")
            return m
        m = Matrix.identity(f, self.dim(x))
        cur = x
        for gid in word:
            (s, t) = gens[gid]
            m = self.gen_matrix(gid, s, t) * m
            cur = t
        if cur != y:
            raise PreconditionError("word endpoint mismatch")
        return m

    def cat_gen_lookup(self):
        cache = getattr(self.cat, "_gen_lookup", None)
        if cache is None:
            cache = {gid: (s, t) for (gid, s, t, _) in self.cat.gen_morphisms()}
            self.cat._gen_lookup = cache
        return cache

    def action_of(self, x, y, coords):
        """Matrix of the morphism with the given Hom(x,y) coordinates:
        M(y)->M(x) for contravariant M, M(x)->M(y) for covariant."""
        f = self.cat.field
        if self.variance == CONTRA:
            out = Matrix.zeros(f, self.dim(x), self.dim(y))
        else:
            out = Matrix.zeros(f, self.dim(y), self.dim(x))
        for i, c in enumerate(coords):
            if f.is_zero(c):
                continue
            word = self.cat.gen_word(x, y, i)
            out = out + self._word_matrix(x, y, word).scale(c)
        return out

    def action_of_basis(self, x, y, i):
        return self.action_of(x, y, self.cat.unit_vec(x, y, i))

    # -- functoriality --------------------------------------------------

    def check_functorial(self):
        """Action respects composition on every composable basis pair."""
        cat = self.cat
        for x in cat.objects:
            for y in cat.objects:
                for z in cat.objects:
                    dxy, dyz = cat.dim(x, y), cat.dim(y, z)
                    if dxy == 0 or dyz == 0:
                        continue
                    for i in range(dxy):
                        mf = self.action_of_basis(x, y, i)
                        for j in range(dyz):
                            mg = self.action_of_basis(y, z, j)
                            comp = cat.compose_elem(x, y, z, i, j)
                            mfg = self.action_of(x, z, comp)
                            expect = mf * mg if self.variance == CONTRA else mg * mf
                            if mfg != expect:
                                return False
        return True


class ModuleMap:
    """A natural transformation, stored as one matrix per object."""

    def __init__(self, dom, cod, comps, name="phi"):
        if dom.cat is not cod.cat or dom.variance != cod.variance:
            raise DimensionMismatch("map between incompatible modules")
        self.dom = dom
        self.cod = cod
        self.comps = comps
        self.name = name
        for v in dom.cat.objects:
            m = self.comp(v)
            if m.rows != cod.dim(v) or m.cols != dom.dim(v):
                raise DimensionMismatch(f"component at {v!r} has wrong shape")

    def comp(self, v):
        m = self.comps.get(v)
        if m is None:
            return Matrix.zeros(self.dom.cat.field, self.cod.dim(v),
                                self.dom.dim(v))
        return m

    def is_zero(self):
        return all(self.comp(v).is_zero() for v in self.dom.cat.objects)

    def is_epi(self):
        return all(self.comp(v).rank() == self.cod.dim(v)
                   for v in self.dom.cat.objects)

    def is_mono(self):
        return all(self.comp(v).rank() == self.dom.dim(v)
                   for v in self.dom.cat.objects)

    def then(self, other):
        if other.dom is not self.cod:
            raise DimensionMismatch("maps not composable")
        comps = {v: other.comp(v) * self.comp(v) for v in self.dom.cat.objects}
        return ModuleMap(self.dom, other.cod, comps)

    def plus(self, other):
        comps = {v: self.comp(v) + other.comp(v) for v in self.dom.cat.objects}
        return ModuleMap(self.dom, self.cod, comps)

    def scale(self, c):
        comps = {v: self.comp(v).scale(c) for v in self.dom.cat.objects}
        return ModuleMap(self.dom, self.cod, comps)

    def is_natural(self):
        cat = self.dom.cat
        for (gid, s, t, _) in cat.gen_morphisms():
            if self.dom.variance == CONTRA:
                lhs = self.comp(s) * self.dom.gen_matrix(gid, s, t)
                rhs = self.cod.gen_matrix(gid, s, t) * self.comp(t)
            else:
                lhs = self.comp(t) * self.dom.gen_matrix(gid, s, t)
                rhs = self.cod.gen_matrix(gid, s, t) * self.comp(s)
            if lhs != rhs:
                return False
        return True

    def vectorize(self):
        out = []
        for v in self.dom.cat.objects:
            m = self.comp(v)
            for row in m.data:
                out.extend(row)
        return out


def zero_module(cat, variance=CONTRA, name="0"):
    return FunctorModule(cat, variance, {}, {}, name=name)


def zero_map(dom, cod):
    return ModuleMap(dom, cod, {})


def representable(cat, X):
    """The projective contravariant functor Hom(-, X)."""
    cache = getattr(cat, "_rep_cache", None)
    if cache is None:
        cache = cat._rep_cache = {}
    if X in cache:
        return cache[X]
    spaces = {y: cat.dim(y, X) for y in cat.objects}
    actions = {}
    for (gid, s, t, coords) in cat.gen_morphisms():
        m = Matrix.zeros(cat.field, spaces[s], spaces[t])
        for j in range(spaces[t]):
            col = cat.compose_vv(s, t, X, coords, cat.unit_vec(t, X, j))
            for i, c in enumerate(col):
                m.data[i][j] = c
        actions[gid] = m
    M = FunctorModule(cat, CONTRA, spaces, actions, name=f"C(-,{X})",
                      prov=("rep", X))
    cache[X] = M
    return M


def corepresentable(cat, Y):
    """The projective covariant functor Hom(Y, -)."""
    spaces = {x: cat.dim(Y, x) for x in cat.objects}
    actions = {}
    for (gid, s, t, coords) in cat.gen_morphisms():
        m = Matrix.zeros(cat.field, spaces[t], spaces[s])
        for i in range(spaces[s]):
            col = cat.compose_vv(Y, s, t, cat.unit_vec(Y, s, i), coords)
            for j, c in enumerate(col):
                m.data[j][i] = c
        actions[gid] = m
    return FunctorModule(cat, CO, spaces, actions, name=f"C({Y},-)",
                         prov=("corep", Y))


def simple_module(cat, v, variance=CONTRA):
    if cat.dim(v, v) == 0:
        raise PreconditionError(f"object {v!r} is zero in this category")
    return FunctorModule(cat, variance, {v: 1}, {}, name=f"S({v})")


def dualize(M):
    """Vector-space dual: same dimensions, transposed actions, flipped
    variance."""
    variance = CO if M.variance == CONTRA else CONTRA
    actions = {gid: m.transpose() for gid, m in M.actions.items()}
    return FunctorModule(M.cat, variance, dict(M.spaces), actions,
                         name=f"D({M.name})", prov=("dual", M))


# ---------------------------------------------------------------------------
# Subquotients.
# ---------------------------------------------------------------------------

def saturate_spans(M, spans):
    """Close pointwise spans under the module action."""
    f = M.cat.field
    cur = {v: row_space_basis(f, list(spans.get(v, [])), M.dim(v))
           for v in M.cat.objects}
    gens = M.cat.gen_morphisms()
    changed = True
    while changed:
        changed = False
        for (gid, s, t, _) in gens:
            if M.variance == CONTRA:
                src, dst = t, s
            else:
                src, dst = s, t
            if not cur[src]:
                continue
            mat = M.gen_matrix(gid, s, t)
            extra = [mat.apply(vec) for vec in cur[src]]
            merged = row_space_basis(f, cur[dst] + extra, M.dim(dst))
            if len(merged) != len(cur[dst]):
                cur[dst] = merged
                changed = True
    return cur


def submodule(M, spans, saturate=True, name=None):
    """The submodule spanned pointwise by `spans`; returns (S, inclusion)."""
    f = M.cat.field
    cur = saturate_spans(M, spans) if saturate else {
        v: row_space_basis(f, list(spans.get(v, [])), M.dim(v))
        for v in M.cat.objects}
    basis_cols = {v: Matrix.from_cols(f, [list(r) for r in cur[v]], M.dim(v))
                  for v in M.cat.objects}
    spaces = {v: basis_cols[v].cols for v in M.cat.objects}
    actions = {}
    for (gid, s, t, _) in M.cat.gen_morphisms():
        if M.variance == CONTRA:
            src, dst = t, s
        else:
            src, dst = s, t
        if spaces[src] == 0 or M.dim(dst) == 0:
            if M.variance == CONTRA:
                actions[gid] = Matrix.zeros(f, spaces[s], spaces[t])
            else:
                actions[gid] = Matrix.zeros(f, spaces[t], spaces[s])
            continue
        big = M.gen_matrix(gid, s, t) * basis_cols[src]
        cols = []
        for j in range(big.cols):
            sol = basis_cols[dst].solve(big.col(j))
            if sol is None:
                raise PreconditionError("spans not action-stable")
            cols.append(sol)
        actions[gid] = Matrix.from_cols(f, cols, spaces[dst])
    S = FunctorModule(M.cat, M.variance, spaces, actions,
                      name=name or f"sub({M.name})")
    incl = ModuleMap(S, M, {v: basis_cols[v] for v in M.cat.objects})
    return S, incl


def quotient_module(M, spans, saturate=True, name=None):
    """The quotient of M by the submodule spanned by `spans`;
    returns (Q, projection, embed_matrices)."""
    f = M.cat.field
    cur = saturate_spans(M, spans) if saturate else {
        v: row_space_basis(f, list(spans.get(v, [])), M.dim(v))
        for v in M.cat.objects}
    projs, embeds, spaces = {}, {}, {}
    for v in M.cat.objects:
        proj, free, _ = quotient_projection(f, cur[v], M.dim(v))
        projs[v] = proj
        emb = Matrix.zeros(f, M.dim(v), len(free))
        for k, i in enumerate(free):
            emb.data[i][k] = f.one()
        embeds[v] = emb
        spaces[v] = len(free)
    actions = {}
    for (gid, s, t, _) in M.cat.gen_morphisms():
        if M.variance == CONTRA:
            actions[gid] = projs[s] * (M.gen_matrix(gid, s, t) * embeds[t])
        else:
            actions[gid] = projs[t] * (M.gen_matrix(gid, s, t) * embeds[s])
    Q = FunctorModule(M.cat, M.variance, spaces, actions,
                      name=name or f"{M.name}/sub")
    proj_map = ModuleMap(M, Q, projs)
    return Q, proj_map, embeds


def kernel(phi, name=None):
    spans = {}
    f = phi.dom.cat.field
    for v in phi.dom.cat.objects:
        k = phi.comp(v).kernel_basis()
        spans[v] = [k.col(j) for j in range(k.cols)]
    return submodule(phi.dom, spans, saturate=False,
                     name=name or f"ker({phi.name})")


def image(phi, name=None):
    spans = {}
    for v in phi.dom.cat.objects:
        im = phi.comp(v).image_basis()
        spans[v] = [im.col(j) for j in range(im.cols)]
    return submodule(phi.cod, spans, saturate=False,
                     name=name or f"im({phi.name})")


def cokernel(phi, name=None):
    spans = {}
    for v in phi.dom.cat.objects:
        im = phi.comp(v).image_basis()
        spans[v] = [im.col(j) for j in range(im.cols)]
    Q, proj, _ = quotient_module(phi.cod, spans, saturate=False,
                                 name=name or f"coker({phi.name})")
    return Q, proj


def direct_sum(mods, name=None):
    if not mods:
        raise PreconditionError("empty direct sum needs an explicit category")
    cat = mods[0].cat
    variance = mods[0].variance
    f = cat.field
    spaces = {v: sum(m.dim(v) for m in mods) for v in cat.objects}
    offsets = []
    run = {v: 0 for v in cat.objects}
    for m in mods:
        offsets.append(dict(run))
        for v in cat.objects:
            run[v] += m.dim(v)
    actions = {}
    for (gid, s, t, _) in cat.gen_morphisms():
        if variance == CONTRA:
            rows, cols = spaces[s], spaces[t]
        else:
            rows, cols = spaces[t], spaces[s]
        big = Matrix.zeros(f, rows, cols)
        for m, off in zip(mods, offsets):
            blk = m.gen_matrix(gid, s, t)
            if variance == CONTRA:
                r0, c0 = off[s], off[t]
            else:
                r0, c0 = off[t], off[s]
            for i in range(blk.rows):
                for j in range(blk.cols):
                    big.data[r0 + i][c0 + j] = blk.data[i][j]
        actions[gid] = big
    D = FunctorModule(cat, variance, spaces, actions,
                      name=name or "(+)".join(m.name for m in mods))
    injs, projs = [], []
    for m, off in zip(mods, offsets):
        inj, proj = {}, {}
        for v in cat.objects:
            mi = Matrix.zeros(f, spaces[v], m.dim(v))
            mp = Matrix.zeros(f, m.dim(v), spaces[v])
            for i in range(m.dim(v)):
                mi.data[off[v] + i][i] = f.one()
                mp.data[i][off[v] + i] = f.one()
            inj[v], proj[v] = mi, mp
        injs.append(ModuleMap(m, D, inj))
        projs.append(ModuleMap(D, m, proj))
    return D, injs, projs


def descend_map(map_from_total, proj_map, embeds):
    """Factor a map D -> M through a quotient projection D -> Q."""
    Q = proj_map.cod
    comps = {}
    for v in Q.cat.objects:
        comps[v] = map_from_total.comp(v) * embeds[v]
    out = ModuleMap(Q, map_from_total.cod, comps)
    return out


# ---------------------------------------------------------------------------
# Radical, top, projective covers.
# ---------------------------------------------------------------------------

def radical_spans_of(M):
    """Pointwise spans of rad . M (images of all radical generator actions)."""
    if M.variance != CONTRA:
        raise PreconditionError("radical/top implemented for contravariant modules")
    f = M.cat.field
    spans = {v: [] for v in M.cat.objects}
    for (gid, s, t, _) in M.cat.gen_morphisms():
        mat = M.gen_matrix(gid, s, t)
        im = mat.image_basis()
        spans[s].extend(im.col(j) for j in range(im.cols))
    return {v: row_space_basis(f, spans[v], M.dim(v)) for v in M.cat.objects}


def top_generators(M):
    """Representative elements of M/rad.M: list of (vertex, column vector)."""
    f = M.cat.field
    rad = radical_spans_of(M)
    gens = []
    for v in M.cat.objects:
        _, free, _ = complement_free(f, rad[v], M.dim(v))
        for i in free:
            e = [f.zero()] * M.dim(v)
            e[i] = f.one()
            gens.append((v, e))
    return gens


def complement_free(field, span_rows, width):
    proj, free, piv = quotient_projection(field, span_rows, width)
    return proj, free, piv


class Presentation:
    """P1 -d-> P0 -cover-> M -> 0 with im(d) = ker(cover)."""

    def __init__(self, p1, p0, d, cover, omega, omega_incl,
                 p0_vertices, p1_vertices, p0_projs=None):
        self.p1 = p1
        self.p0 = p0
        self.d = d
        self.cover = cover
        self.omega = omega
        self.omega_incl = omega_incl
        self.p0_vertices = p0_vertices
        self.p1_vertices = p1_vertices
        self.p0_projs = p0_projs or []


def projective_cover_map(M):
    """Minimal projective cover P0 -> M; returns (cover, vertices, projs)."""
    cat = M.cat
    gens = top_generators(M)
    verts = [v for (v, _) in gens]
    if not gens:
        P0 = zero_module(cat, CONTRA, name="P0")
        return ModuleMap(P0, M, {}), [], []
    reps = [representable(cat, v) for v in verts]
    P0, _, projs = direct_sum(reps, name=f"P({M.name})")
    comps = {}
    f = cat.field
    for y in cat.objects:
        m = Matrix.zeros(f, M.dim(y), P0.dim(y))
        col0 = 0
        for (v, e) in gens:
            d = cat.dim(y, v)
            for j in range(d):
                act = M.action_of(y, v, cat.unit_vec(y, v, j))
                col = act.apply(e)
                for i, c in enumerate(col):
                    m.data[i][col0 + j] = c
            col0 += d
        comps[y] = m
    cover = ModuleMap(P0, M, comps, name=f"cover({M.name})")
    if not cover.is_epi():
        raise PreconditionError("projective cover failed to be epi")
    return cover, verts, projs


def projective_cover(M):
    """Minimal two-step presentation by representables."""
    cover, verts0, projs = projective_cover_map(M)
    omega, incl = kernel(cover, name=f"syzygy({M.name})")
    cover1, verts1, _ = projective_cover_map(omega)
    d = cover1.then(incl)
    return Presentation(cover1.dom, cover.dom, d, cover, omega, incl,
                        verts0, verts1, p0_projs=projs)


# ---------------------------------------------------------------------------
# Hom spaces.
# ---------------------------------------------------------------------------

def _maps_from_rep(X, N, elements):
    """Module maps C(-,X) -> N (or a quotient of C(-,X)) from elements of
    N(X); elements given as column vectors."""
    cat = N.cat
    f = cat.field
    out = []
    act_cache = {}
    for e in elements:
        comps = {}
        for y in cat.objects:
            d = cat.dim(y, X)
            m = Matrix.zeros(f, N.dim(y), d)
            for j in range(d):
                key = (y, j)
                act = act_cache.get(key)
                if act is None:
                    act = N.action_of(y, X, cat.unit_vec(y, X, j))
                    act_cache[key] = act
                col = act.apply(e)
                for i, c in enumerate(col):
                    m.data[i][j] = c
            comps[y] = m
        out.append(comps)
    return out


def hom_space(M, N):
    """A basis of the space of natural transformations M -> N."""
    cat = M.cat
    f = cat.field
    if N.cat is not cat or N.variance != M.variance:
        raise DimensionMismatch("hom between incompatible modules")
    if M.prov and M.prov[0] == "rep" and M.variance == CONTRA:
        X = M.prov[1]
        basis = []
        for i in range(N.dim(X)):
            e = [f.zero()] * N.dim(X)
            e[i] = f.one()
            basis.append(e)
        return [ModuleMap(M, N, comps)
                for comps in _maps_from_rep(X, N, basis)]
    if M.prov and M.prov[0] == "rep_quot" and M.variance == CONTRA:
        # maps out of C(-,X)/S correspond to elements of N(X) killed by
        # the action of every element of S
        X, embeds, ann = M.prov[1], M.prov[2], M.prov[3]
        rows = []
        for y, vecs in ann.items():
            for vec in vecs:
                act = N.action_of(y, X, vec)       # N(X) -> N(y)
                rows.extend(act.data)
        if rows and N.dim(X) > 0:
            ker = Matrix.from_rows(f, rows).kernel_basis()
            elements = [ker.col(j) for j in range(ker.cols)]
        else:
            elements = [[f.one() if k == i else f.zero()
                         for k in range(N.dim(X))] for i in range(N.dim(X))]
        maps = []
        for comps_rep in _maps_from_rep(X, N, elements):
            comps = {y: comps_rep[y] * embeds[y] for y in cat.objects}
            maps.append(ModuleMap(M, N, comps))
        return maps
    return _hom_space_generic(M, N)


def _hom_space_generic(M, N):
    cat = M.cat
    f = cat.field
    objs = cat.objects
    offs = {}
    total = 0
    for v in objs:
        offs[v] = total
        total += M.dim(v) * N.dim(v)
    if total == 0:
        return []

    def var_idx(v, i, j):
        # unknown (i, j) entry of the component matrix at v: N(v) x M(v)
        return offs[v] + i * M.dim(v) + j

    rows = []
    for (gid, s, t, _) in cat.gen_morphisms():
        a_m = M.gen_matrix(gid, s, t)
        a_n = N.gen_matrix(gid, s, t)
        if M.variance == CONTRA:
            # phi_s . M(g) = N(g) . phi_t : equation in (N(s) x M(t))
            for i in range(N.dim(s)):
                for j in range(M.dim(t)):
                    row = {}
                    for k in range(M.dim(s)):
                        c = a_m.data[k][j]
                        if not f.is_zero(c):
                            idx = var_idx(s, i, k)
                            row[idx] = f.add(row.get(idx, f.zero()), c)
                    for k in range(N.dim(t)):
                        c = a_n.data[i][k]
                        if not f.is_zero(c):
                            idx = var_idx(t, k, j)
                            row[idx] = f.sub(row.get(idx, f.zero()), c)
                    if row:
                        rows.append(row)
        else:
            # phi_t . M(g) = N(g) . phi_s : equation in (N(t) x M(s))
            for i in range(N.dim(t)):
                for j in range(M.dim(s)):
                    row = {}
                    for k in range(M.dim(t)):
                        c = a_m.data[k][j]
                        if not f.is_zero(c):
                            idx = var_idx(t, i, k)
                            row[idx] = f.add(row.get(idx, f.zero()), c)
                    for k in range(N.dim(s)):
                        c = a_n.data[i][k]
                        if not f.is_zero(c):
                            idx = var_idx(s, k, j)
                            row[idx] = f.sub(row.get(idx, f.zero()), c)
                    if row:
                        rows.append(row)
    basis = sparse_kernel_basis(f, rows, total)
    out = []
    for vec in basis:
        comps = {}
        for v in objs:
            m = Matrix.zeros(f, N.dim(v), M.dim(v))
            for i in range(N.dim(v)):
                for j in range(M.dim(v)):
                    m.data[i][j] = vec[var_idx(v, i, j)]
            comps[v] = m
        out.append(ModuleMap(M, N, comps))
    return out


def hom_dim(M, N):
    return len(hom_space(M, N))


# ---------------------------------------------------------------------------
# Ext via syzygies.
# ---------------------------------------------------------------------------

class ExtSpace:
    """Ext^1(M, N) presented by cocycles: maps syzygy(M) -> N modulo
    restrictions of maps P0 -> N."""

    def __init__(self, dim, cocycles, presentation):
        self.dim = dim
        self.cocycles = cocycles
        self.presentation = presentation


def _hom_from_projective_sum(pres, N):
    """Basis of Hom(P0, N) for the direct sum P0 of representables."""
    maps = []
    for vertex, proj in zip(pres.p0_vertices, pres.p0_projs):
        R = proj.cod
        for phi in hom_space(R, N):
            maps.append(proj.then(phi))
    return maps


def ext1(M, N, presentation=None):
    pres = presentation or projective_cover(M)
    omega, incl = pres.omega, pres.omega_incl
    if omega.is_zero():
        return ExtSpace(0, [], pres)
    hom_om = hom_space(omega, N)
    if not hom_om:
        return ExtSpace(0, [], pres)
    hom_p0 = _hom_from_projective_sum(pres, N)
    f = M.cat.field
    vec_len = len(hom_om[0].vectorize())
    basis_rows = [phi.vectorize() for phi in hom_om]
    restr_rows = [incl.then(phi).vectorize() for phi in hom_p0]
    width = vec_len
    # coordinates of restrictions in the hom_om basis
    basis_mat = Matrix.from_cols(f, [list(r) for r in basis_rows], width)
    img = []
    for r in restr_rows:
        sol = basis_mat.solve(list(r))
        if sol is None:
            raise PreconditionError("restriction not in hom basis span")
        img.append(sol)
    img_basis = row_space_basis(f, img, len(hom_om))
    dim = len(hom_om) - len(img_basis)
    # cocycle representatives: hom_om basis vectors independent from img
    cocycles = []
    cur = [list(r) for r in img_basis]
    for k, phi in enumerate(hom_om):
        unit = [f.zero()] * len(hom_om)
        unit[k] = f.one()
        merged = row_space_basis(f, cur + [unit], len(hom_om))
        if len(merged) > len(cur):
            cur = merged
            cocycles.append(phi)
        if len(cocycles) == dim:
            break
    return ExtSpace(dim, cocycles, pres)


def ext_dim(M, N, presentation=None):
    return ext1(M, N, presentation).dim


def ext_higher(M, N, t):
    """Ext^t via iterated syzygies (dimension shifting)."""
    if t < 1:
        raise PreconditionError("degree must be >= 1")
    cur = M
    for _ in range(t - 1):
        pres = projective_cover(cur)
        cur = pres.omega
        if cur.is_zero():
            return 0
    return ext1(cur, N).dim


# ---------------------------------------------------------------------------
# Tensor product over the category, and Tor_1.
# ---------------------------------------------------------------------------

class TensorSpace:
    """M (x)_C N as an explicit quotient of the direct sum of pointwise
    tensor products; keeps the projection for functoriality."""

    def __init__(self, cat, Mco, Ncontra):
        if Mco.variance != CO or Ncontra.variance != CONTRA:
            raise PreconditionError("tensor takes a covariant and a contravariant module")
        self.cat = cat
        self.M = Mco
        self.N = Ncontra
        f = cat.field
        self.offs = {}
        total = 0
        for v in cat.objects:
            self.offs[v] = total
            total += Mco.dim(v) * Ncontra.dim(v)
        self.total = total
        rows = []
        for (gid, s, t, _) in cat.gen_morphisms():
            a_m = Mco.gen_matrix(gid, s, t)   # M(s) -> M(t)
            a_n = Ncontra.gen_matrix(gid, s, t)  # N(t) -> N(s)
            for a in range(Mco.dim(s)):
                for b in range(Ncontra.dim(t)):
                    row = [f.zero()] * total
                    for i in range(Mco.dim(t)):
                        c = a_m.data[i][a]
                        if not f.is_zero(c):
                            row[self.offs[t] + i * Ncontra.dim(t) + b] = c
                    for j in range(Ncontra.dim(s)):
                        c = a_n.data[j][b]
                        if not f.is_zero(c):
                            idx = self.offs[s] + a * Ncontra.dim(s) + j
                            row[idx] = f.sub(row[idx], c)
                    rows.append(row)
        self.proj, self.free, _ = quotient_projection(f, rows, total)
        self.dim = len(self.free)

    def elem_index(self, v, i, j):
        return self.offs[v] + i * self.N.dim(v) + j


def tensor_over_C(Mco, Ncontra):
    return TensorSpace(Mco.cat, Mco, Ncontra)


def tensor_dim(Mco, Ncontra):
    return TensorSpace(Mco.cat, Mco, Ncontra).dim


def tensor_induced(T1, T2, phi):
    """Matrix of id_M (x) phi : M (x) N1 -> M (x) N2 for phi: N1 -> N2."""
    cat = T1.cat
    f = cat.field
    big = Matrix.zeros(f, T2.total, T1.total)
    M = T1.M
    for v in cat.objects:
        pm = phi.comp(v)
        for i in range(M.dim(v)):
            for j in range(T1.N.dim(v)):
                src = T1.elem_index(v, i, j)
                for k in range(T2.N.dim(v)):
                    c = pm.data[k][j]
                    if not f.is_zero(c):
                        big.data[T2.elem_index(v, i, k)][src] = c
    emb1 = Matrix.zeros(f, T1.total, T1.dim)
    for k, idx in enumerate(T1.free):
        emb1.data[idx][k] = f.one()
    return T2.proj * (big * emb1)


def tor1(F, G, presentation=None):
    """dim Tor_1(F, G) for contravariant F and covariant G, computed from
    the first syzygy of F: the kernel of G (x) syzygy -> G (x) cover."""
    if F.variance != CONTRA or G.variance != CO:
        raise PreconditionError("tor1 takes (contravariant, covariant)")
    pres = presentation or projective_cover(F)
    omega, incl = pres.omega, pres.omega_incl
    if omega.is_zero():
        return 0
    t_om = TensorSpace(F.cat, G, omega)
    t_p0 = TensorSpace(F.cat, G, pres.p0)
    induced = tensor_induced(t_om, t_p0, incl)
    return t_om.dim - induced.rank()


# ---------------------------------------------------------------------------
# Short exact sequences and extensions.
# ---------------------------------------------------------------------------

def is_exact_sequence(incl, proj):
    """0 -> A -> B -> C -> 0 exactness, checked pointwise and exactly."""
    A, B, C = incl.dom, incl.cod, proj.cod
    if proj.dom is not B:
        raise DimensionMismatch("maps do not share the middle module")
    if not incl.then(proj).is_zero():
        return False
    if not incl.is_mono() or not proj.is_epi():
        return False
    for v in B.cat.objects:
        if A.dim(v) + C.dim(v) != B.dim(v):
            return False
        if incl.comp(v).rank() != proj.comp(v).kernel_basis().cols:
            return False
    return True


def extension_from_cocycle(M, N, cocycle, pres):
    """The extension 0 -> N -> E -> M -> 0 classified by a cocycle
    syzygy(M) -> N; returns (E, incl_N, proj_M)."""
    cat = M.cat
    P0 = pres.p0
    D, injs, projs = direct_sum([N, P0])
    inj_N, inj_P = injs
    spans = {}
    omega, om_incl = pres.omega, pres.omega_incl
    for v in cat.objects:
        vecs = []
        for j in range(omega.dim(v)):
            e = [cat.field.zero()] * omega.dim(v)
            e[j] = cat.field.one()
            w_n = cocycle.comp(v).apply(e)
            w_p = om_incl.comp(v).apply(e)
            vec = inj_N.comp(v).apply(w_n)
            vec_p = inj_P.comp(v).apply(w_p)
            vecs.append([cat.field.sub(a, b) for a, b in zip(vec, vec_p)])
        spans[v] = vecs
    E, proj_map, embeds = quotient_module(D, spans, saturate=False,
                                          name=f"ext({M.name},{N.name})")
    incl_E = inj_N.then(proj_map)
    # E -> M descends from (n, p) |-> cover(p), which kills the relations
    big = projs[1].then(pres.cover)
    proj_E = descend_map(big, proj_map, embeds)
    return E, incl_E, proj_E


def random_extension(rng, M, N, pres=None):
    """A random extension of M by N (their direct sum when Ext vanishes)."""
    pres = pres or projective_cover(M)
    ext = ext1(M, N, pres)
    if ext.dim == 0:
        D, injs, projs = direct_sum([N, M])
        return D, injs[0], projs[1]
    f = M.cat.field
    co = ext.cocycles[0]
    acc = co.scale(f.of_int(rng.randint(1, 5)))
    for other in ext.cocycles[1:]:
        acc = acc.plus(other.scale(f.of_int(rng.randint(-3, 3))))
    return extension_from_cocycle(M, N, acc, pres)


# ---------------------------------------------------------------------------
# Traces and ideal modules.
# ---------------------------------------------------------------------------

def trace(family, M):
    """Smallest submodule of M containing every image of a map from the
    family; returns (submodule, inclusion)."""
    cat = M.cat
    f = cat.field
    spans = {v: [] for v in cat.objects}
    for T in family:
        if T.prov and T.prov[0] == "rep" and M.variance == CONTRA:
            E = T.prov[1]
            for y in cat.objects:
                d = cat.dim(y, E)
                if d == 0 or M.dim(y) == 0 or M.dim(E) == 0:
                    continue
                for j in range(d):
                    act = M.action_of(y, E, cat.unit_vec(y, E, j))
                    im = act.image_basis()
                    spans[y].extend(im.col(k) for k in range(im.cols))
        else:
            for phi in hom_space(T, M):
                for y in cat.objects:
                    im = phi.comp(y).image_basis()
                    spans[y].extend(im.col(k) for k in range(im.cols))
    spans = {v: row_space_basis(f, spans[v], M.dim(v)) for v in cat.objects}
    return submodule(M, spans, saturate=False, name=f"tr({M.name})")


def ideal_module(cat, B, X, ideal=None):
    """I_B(-, X) as a submodule of the representable at X."""
    from .meshcat import ideal_table
    R = representable(cat, X)
    table = ideal or ideal_table(cat, B)
    spans = {y: list(table.spans[(y, X)]) for y in cat.objects}
    S, incl = trace_like_sub(R, spans)
    S.prov = ("ideal", frozenset(B), X)
    return S, incl


def trace_like_sub(M, spans):
    return submodule(M, spans, saturate=False)
