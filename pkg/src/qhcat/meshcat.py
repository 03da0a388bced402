"""Finite K-linear categories presented by quivers and relations.

build_mesh_category computes, for every pair of window vertices, a basis
of the Hom space of the mesh category (path category modulo the mesh
ideal) together with composition.  The computation runs on the halo
quiver, grade by grade in path length: the degree-l component of a Hom
space is spanned by (basis element of degree l-1) * (arrow), modulo one
relation vector for every mesh vertex and every degree l-2 basis element
mapping into its translate.  Mesh relations are quadratic, so this
left-normal-form recursion is complete.

Basis elements carry normal-form path words; for window pairs the words
stay inside the window (the elimination order prefers window-internal
composites), which is what lets functor actions be evaluated from
per-arrow matrices alone.
"""

from __future__ import annotations

from .errors import PreconditionError, WindowTooSmall
from .matrix import (Matrix, quotient_projection, row_space_basis,
                     spans_equal)


class PresentedCategory:
    """Interface shared by mesh, path, quotient, sub- and tensor categories.

    Morphisms are passed around as coordinate vectors in the stored Hom
    bases; composition is written in path order, compose(f: x->y, g: y->z)
    = "f then g": x->z.
    """

    field = None
    objects = ()

    def __init__(self):
        self._compose_cache = {}

    # -- mandatory interface ------------------------------------------------

    def dim(self, x, y):
        raise NotImplementedError

    def id_coords(self, x):
        raise NotImplementedError

    def compose_elem(self, x, y, z, i, j):
        raise NotImplementedError

    def gen_morphisms(self):
        """Generators (gid, src, tgt, coords): every Hom space is spanned by
        identities and products of these."""
        raise NotImplementedError

    def gen_word(self, x, y, i):
        """Word in generator gids whose product is basis element i of (x,y)."""
        raise NotImplementedError

    def hom_label(self, x, y, i):
        w = self.gen_word(x, y, i)
        return "*".join(str(g) for g in w) if w else f"id_{x}"

    # -- generic helpers ------------------------------------------------

    def compose_vv(self, x, y, z, vxy, vyz):
        f = self.field
        out = [f.zero()] * self.dim(x, z)
        for i, a in enumerate(vxy):
            if f.is_zero(a):
                continue
            for j, b in enumerate(vyz):
                if f.is_zero(b):
                    continue
                comp = self.compose_elem(x, y, z, i, j)
                c = f.mul(a, b)
                for k, s in enumerate(comp):
                    if not f.is_zero(s):
                        out[k] = f.add(out[k], f.mul(c, s))
        return out

    def radical_spans(self, x, y):
        """Basis vectors of rad(x, y): all of Hom for distinct objects,
        zero inside End (scalar or zero endomorphism rings only)."""
        f = self.field
        if x == y:
            return []
        d = self.dim(x, y)
        one = f.one()
        return [[one if k == i else f.zero() for k in range(d)]
                for i in range(d)]

    def check_scalar_ends(self):
        for x in self.objects:
            if self.dim(x, x) > 1:
                raise PreconditionError(
                    f"End({x!r}) has dimension > 1; not supported")
        for i, x in enumerate(self.objects):
            for y in self.objects[i + 1:]:
                if self.dim(x, y) > 0 and self.dim(y, x) > 0:
                    raise PreconditionError(
                        f"directed cycle between {x!r} and {y!r}")

    def unit_vec(self, x, y, i):
        f = self.field
        v = [f.zero()] * self.dim(x, y)
        v[i] = f.one()
        return v

    def total_dim(self):
        return sum(self.dim(x, y) for x in self.objects for y in self.objects)


# ---------------------------------------------------------------------------
# Mesh categories built on a window inside a halo quiver.
# ---------------------------------------------------------------------------

class _SourceTables:
    __slots__ = ("words", "in_window", "rmat", "arrow_index")

    def __init__(self):
        self.words = {}        # target -> list of arrow-id tuples
        self.in_window = {}    # target -> list of bool
        self.rmat = {}         # (w, aid) -> Matrix  coords(x,w) -> coords(x,u)
        self.arrow_index = {}  # aid with source == x -> basis index


def _build_source(quiver, field, x, window_set):
    """Graded Hom-space bases of all morphisms out of x, in the halo."""
    basis_words = {x: [()]}
    basis_inwin = {x: [x in window_set]}
    by_len = {(x, 0): [0]}
    rmul = {}  # (w, aid) -> {bi: [(bj, coeff)]}

    arrow_rank = {a.aid: r for r, a in enumerate(quiver.arrow_order())}
    length = 0
    while True:
        frontier = [(w, idxs) for (w, l), idxs in by_len.items() if l == length]
        if not frontier:
            break
        # candidates per target at degree length+1
        cand = {}
        for (w, idxs) in frontier:
            for a in quiver.out_arrows[w]:
                cand.setdefault(a.target, []).extend(
                    (w, bi, a.aid) for bi in idxs)
        for y, cands in cand.items():
            def elim_key(c):
                (w, bi, aid) = c
                word_in = (basis_inwin[w][bi]
                           and w in window_set and y in window_set)
                return (word_in, (-arrow_rank[aid], -bi))
            cands.sort(key=elim_key)
            # relation rows from the mesh ending at y
            rel_rows = []
            if y in quiver.mesh_complete:
                t = quiver.tau[y]
                for bi2 in by_len.get((t, length - 1), []):
                    row = {}
                    for a in quiver.in_arrows[y]:
                        sa = quiver.sigma[a.aid]
                        mids = rmul.get((t, sa), {}).get(bi2)
                        if not mids:
                            continue
                        src_mid = quiver.arrows_by_id[sa].target
                        for (bj, coeff) in mids:
                            key = (src_mid, bj, a.aid)
                            row[key] = field.add(row.get(key, field.zero()),
                                                 coeff)
                    if row:
                        rel_rows.append(row)
            col_of = {c: k for k, c in enumerate(cands)}
            if rel_rows:
                mat = Matrix(field, len(rel_rows), len(cands))
                for r, row in enumerate(rel_rows):
                    for key, coeff in row.items():
                        if key in col_of:
                            mat.data[r][col_of[key]] = coeff
                R, pivots = mat.rref()
            else:
                R, pivots = None, []
            pivset = set(pivots)
            kept = [k for k in range(len(cands)) if k not in pivset]
            kept.sort(key=lambda k: (arrow_rank[cands[k][2]], cands[k][1]))
            base = len(basis_words.get(y, []))
            newidx = {}
            words = basis_words.setdefault(y, [])
            inwin = basis_inwin.setdefault(y, [])
            for pos, k in enumerate(kept):
                (w, bi, aid) = cands[k]
                newidx[k] = base + pos
                words.append(basis_words[w][bi] + (aid,))
                inwin.append(basis_inwin[w][bi] and w in window_set
                             and y in window_set)
            by_len[(y, length + 1)] = list(range(base, base + len(kept)))
            # expansions of every candidate in the kept basis
            expansions = {}
            for k in kept:
                expansions[k] = [(newidx[k], field.one())]
            if R is not None:
                for r, pc in enumerate(pivots):
                    exp = []
                    for k in range(len(cands)):
                        if k in pivset or field.is_zero(R.data[r][k]):
                            continue
                        exp.append((newidx[k], field.neg(R.data[r][k])))
                    expansions[pc] = exp
            for k, c in enumerate(cands):
                (w, bi, aid) = c
                rmul.setdefault((w, aid), {})[bi] = expansions[k]
        length += 1

    tab = _SourceTables()
    for y, words in basis_words.items():
        if y in window_set:
            tab.words[y] = words
            tab.in_window[y] = basis_inwin[y]
    for (w, aid), colmap in rmul.items():
        a = quiver.arrows_by_id[aid]
        u = a.target
        if w not in window_set or u not in window_set:
            continue
        if w not in tab.words or u not in tab.words:
            continue
        m = Matrix(field, len(tab.words[u]), len(tab.words[w]))
        for bi, entries in colmap.items():
            for (bj, coeff) in entries:
                m.data[bj][bi] = coeff
        tab.rmat[(w, aid)] = m
    for a in quiver.out_arrows.get(x, []):
        if a.target in tab.words:
            for i, word in enumerate(tab.words[a.target]):
                if word == (a.aid,):
                    tab.arrow_index[a.aid] = i
    return tab


class MeshCategory(PresentedCategory):
    """The full subcategory of an ambient mesh category on window vertices."""

    def __init__(self, quiver, window, field):
        super().__init__()
        self.quiver = quiver
        self.window = window
        self.field = field
        self.objects = window.ordered(quiver)
        self.obj_index = {v: k for k, v in enumerate(self.objects)}
        wset = set(self.objects)
        self.tables = {x: _build_source(quiver, field, x, wset)
                       for x in self.objects}
        self._window_arrows = [a for a in quiver.arrow_order()
                               if a.source in wset and a.target in wset]
        bad = []
        for x in self.objects:
            tab = self.tables[x]
            for y, flags in tab.in_window.items():
                for i, ok in enumerate(flags):
                    if not ok:
                        bad.append((x, y, i))
        if bad:
            raise WindowTooSmall(
                f"{len(bad)} Hom basis elements have no window-internal "
                f"path word, e.g. {bad[0]}; enlarge the window")
        self.check_scalar_ends()

    def dim(self, x, y):
        words = self.tables[x].words.get(y)
        return len(words) if words else 0

    def id_coords(self, x):
        return self.unit_vec(x, x, 0)

    def word(self, x, y, i):
        return self.tables[x].words[y][i]

    gen_word = word

    def apply_word(self, x, w, vec, word):
        """Right-extend coordinates at (x, w) along a path word from w."""
        tab = self.tables[x]
        cur = w
        v = list(vec)
        for pos, aid in enumerate(word):
            a = self.quiver.arrows_by_id[aid]
            m = tab.rmat.get((cur, aid))
            if m is None:
                # zero intermediate space: the composite vanishes
                end = cur
                for rest in word[pos:]:
                    end = self.quiver.arrows_by_id[rest].target
                return [self.field.zero()] * self.dim(x, end), end
            v = m.apply(v)
            cur = a.target
        return v, cur

    def compose_elem(self, x, y, z, i, j):
        key = (x, y, z, i, j)
        hit = self._compose_cache.get(key)
        if hit is not None:
            return hit
        word = self.tables[y].words[z][j]
        v, end = self.apply_word(x, y, self.unit_vec(x, y, i), word)
        assert end == z
        self._compose_cache[key] = v
        return v

    def gen_morphisms(self):
        out = []
        for a in self._window_arrows:
            idx = self.tables[a.source].arrow_index.get(a.aid)
            if idx is None:
                continue
            out.append((a.aid, a.source, a.target,
                        self.unit_vec(a.source, a.target, idx)))
        return out


def build_mesh_category(quiver, window, field):
    if not window.ambient_exact:
        raise WindowTooSmall(
            "window is not certified ambient-exact; regenerate it with a "
            "builtin family generator or supply the full quiver as window")
    return MeshCategory(quiver, window, field)


# ---------------------------------------------------------------------------
# Path categories of explicit finite acyclic quivers modulo explicit
# relations (each relation a K-combination of parallel paths).
# ---------------------------------------------------------------------------

class PathCategory(PresentedCategory):
    def __init__(self, vertices, arrows, relations, field, coords=None,
                 name="path-category"):
        super().__init__()
        self.field = field
        self.name = name
        self.vertices = tuple(vertices)
        self.arrows = [tuple(a) for a in arrows]  # (src, tgt, aid)
        self.coords = dict(coords or {})
        self._arr_by_id = {aid: (s, t) for (s, t, aid) in self.arrows}
        self._out = {v: [] for v in self.vertices}
        for (s, t, aid) in self.arrows:
            self._out[v_check(s, self.vertices)].append((t, aid))
        order = {v: k for k, v in enumerate(self.vertices)}
        for v in self.vertices:
            self._out[v].sort(key=lambda ta: (order[ta[0]], str(ta[1])))
        self._paths = {}  # (x,y) -> list of aid tuples
        self._enumerate_paths()
        self._proj = {}
        self._basis_paths = {}
        self._install_relations(relations or [])
        self.objects = self.vertices
        self.obj_index = order
        self.check_scalar_ends()

    def _enumerate_paths(self):
        for x in self.vertices:
            found = {x: [()]}
            stack = [(x, ())]
            guard = 0
            while stack:
                v, word = stack.pop()
                guard += 1
                if guard > 2_000_000:
                    raise PreconditionError("path explosion or cycle")
                for (t, aid) in self._out[v]:
                    w = word + (aid,)
                    if len(w) > len(self.arrows):
                        raise PreconditionError("quiver has a directed cycle")
                    found.setdefault(t, []).append(w)
                    stack.append((t, w))
            for y, plist in found.items():
                self._paths[(x, y)] = sorted(plist)

    def _path_endpoint(self, x, word):
        v = x
        for aid in word:
            (s, t) = self._arr_by_id[aid]
            if s != v:
                raise PreconditionError(f"broken path word {word}")
            v = t
        return v

    def _install_relations(self, relations):
        f = self.field
        ideal = {}  # (x,y) -> list of vectors over path index
        for rel in relations:
            combos = [(tuple(p), c) for (p, c) in rel]
            src = None
            for (p, c) in combos:
                if not p:
                    raise PreconditionError("relations must have length >= 1")
            # locate endpoints from the first path
            p0 = combos[0][0]
            for x in self.vertices:
                try:
                    y = self._path_endpoint(x, p0)
                except PreconditionError:
                    continue
                if p0 in self._paths.get((x, y), []):
                    src = (x, y)
                    break
            if src is None:
                raise PreconditionError(f"relation path {p0} not in quiver")
            (rx, ry) = src
            # close the two-sided ideal: p * rel * q over all flanks
            for u in self.vertices:
                for p in self._paths.get((u, rx), []):
                    for v in self.vertices:
                        for q in self._paths.get((ry, v), []):
                            plist = self._paths[(u, v)]
                            index = {pp: k for k, pp in enumerate(plist)}
                            vec = [f.zero()] * len(plist)
                            for (mid, c) in combos:
                                k = index[p + mid + q]
                                vec[k] = f.add(vec[k], f.of_int(c))
                            ideal.setdefault((u, v), []).append(vec)
        for x in self.vertices:
            for y in self.vertices:
                plist = self._paths.get((x, y), [])
                spans = ideal.get((x, y), [])
                proj, free, _ = quotient_projection(self.field, spans, len(plist))
                self._proj[(x, y)] = proj
                self._basis_paths[(x, y)] = [plist[k] for k in free]

    def dim(self, x, y):
        return len(self._basis_paths.get((x, y), []))

    def id_coords(self, x):
        v = [self.field.zero()] * self.dim(x, x)
        for i, p in enumerate(self._basis_paths[(x, x)]):
            if p == ():
                v[i] = self.field.one()
        return v

    def word(self, x, y, i):
        return self._basis_paths[(x, y)][i]

    gen_word = word

    def compose_elem(self, x, y, z, i, j):
        key = (x, y, z, i, j)
        hit = self._compose_cache.get(key)
        if hit is not None:
            return hit
        p = self._basis_paths[(x, y)][i] + self._basis_paths[(y, z)][j]
        plist = self._paths[(x, z)]
        f = self.field
        vec = [f.zero()] * len(plist)
        vec[plist.index(p)] = f.one()
        out = self._proj[(x, z)].apply(vec)
        self._compose_cache[key] = out
        return out

    def gen_morphisms(self):
        out = []
        for (s, t, aid) in self.arrows:
            basis = self._basis_paths[(s, t)]
            if (aid,) in basis:
                i = basis.index((aid,))
                out.append((aid, s, t, self.unit_vec(s, t, i)))
            else:
                # the arrow class is a combination of basis paths
                plist = self._paths[(s, t)]
                f = self.field
                vec = [f.zero()] * len(plist)
                vec[plist.index((aid,))] = f.one()
                out.append((aid, s, t, self._proj[(s, t)].apply(vec)))
        return out


def v_check(v, vertices):
    if v not in vertices:
        raise PreconditionError(f"arrow endpoint {v!r} not a vertex")
    return v


def linear_quiver_category(n, field, name=None):
    """Path category of the linear quiver 1 -> 2 -> ... -> n."""
    vertices = list(range(1, n + 1))
    arrows = [(i, i + 1, f"a{i}") for i in range(1, n)]
    coords = {i: (i, 0) for i in vertices}
    return PathCategory(vertices, arrows, [], field, coords,
                        name=name or f"A{n}-path")


# ---------------------------------------------------------------------------
# Ideals, their products, and quotient categories.
# ---------------------------------------------------------------------------

class IdealTable:
    """A two-sided ideal as a reduced span inside every Hom space."""

    def __init__(self, cat, spans, generator_objects=None, name="ideal"):
        self.cat = cat
        self.name = name
        self.generator_objects = (frozenset(generator_objects)
                                  if generator_objects is not None else None)
        self.spans = {}
        for x in cat.objects:
            for y in cat.objects:
                vecs = spans.get((x, y), [])
                self.spans[(x, y)] = row_space_basis(cat.field, list(vecs),
                                                     cat.dim(x, y))

    def dim(self, x, y):
        return len(self.spans[(x, y)])

    def dims(self):
        return {(x, y): self.dim(x, y) for x in self.cat.objects
                for y in self.cat.objects if self.dim(x, y)}

    def equals(self, other):
        return all(
            spans_equal(self.cat.field, self.spans[(x, y)],
                        other.spans[(x, y)], self.cat.dim(x, y))
            for x in self.cat.objects for y in self.cat.objects)

    def contains(self, other):
        f = self.cat.field
        for x in self.cat.objects:
            for y in self.cat.objects:
                width = self.cat.dim(x, y)
                mine = self.spans[(x, y)]
                both = row_space_basis(
                    f, list(mine) + list(other.spans[(x, y)]), width)
                if len(both) != len(mine):
                    return False
        return True

    def is_zero(self):
        return all(not v for v in self.spans.values())

    def closed_under_composition(self):
        """Closure under pre/post composition by every basis morphism."""
        f = self.cat.field
        for (x, y), vecs in self.spans.items():
            for v in vecs:
                for z in self.cat.objects:
                    for j in range(self.cat.dim(y, z)):
                        w = self.cat.compose_vv(x, y, z, v,
                                                self.cat.unit_vec(y, z, j))
                        both = row_space_basis(
                            f, list(self.spans[(x, z)]) + [w],
                            self.cat.dim(x, z))
                        if len(both) != len(self.spans[(x, z)]):
                            return False
                    for j in range(self.cat.dim(z, x)):
                        w = self.cat.compose_vv(z, x, y,
                                                self.cat.unit_vec(z, x, j), v)
                        both = row_space_basis(
                            f, list(self.spans[(z, y)]) + [w],
                            self.cat.dim(z, y))
                        if len(both) != len(self.spans[(z, y)]):
                            return False
        return True


def ideal_table(cat, objects, name=None):
    """The ideal of morphisms factoring through the given objects:
    spans of all composites x -> b -> y with b in the set."""
    objs = [b for b in cat.objects if b in set(objects)]
    spans = {}
    for x in cat.objects:
        for y in cat.objects:
            vecs = []
            for b in objs:
                d1, d2 = cat.dim(x, b), cat.dim(b, y)
                if d1 == 0 or d2 == 0:
                    continue
                for i in range(d1):
                    for j in range(d2):
                        vecs.append(cat.compose_elem(x, b, y, i, j))
            if vecs:
                spans[(x, y)] = vecs
    return IdealTable(cat, spans, generator_objects=objects,
                      name=name or f"I_B({len(objs)} objects)")


def radical_table(cat):
    spans = {}
    for x in cat.objects:
        for y in cat.objects:
            spans[(x, y)] = cat.radical_spans(x, y)
    return IdealTable(cat, spans, name="rad")


def zero_ideal(cat):
    return IdealTable(cat, {}, name="0")


def full_ideal(cat):
    spans = {}
    for x in cat.objects:
        for y in cat.objects:
            d = cat.dim(x, y)
            spans[(x, y)] = [cat.unit_vec(x, y, i) for i in range(d)]
    return IdealTable(cat, spans, name="Hom")


def ideal_product(i1, i2):
    """Spans of all composites g*h with g in i1, h in i2 (path order)."""
    cat = i1.cat
    spans = {}
    for x in cat.objects:
        for y in cat.objects:
            vecs = []
            for w in cat.objects:
                a, b = i1.spans[(x, w)], i2.spans[(w, y)]
                for v1 in a:
                    for v2 in b:
                        vecs.append(cat.compose_vv(x, w, y, v1, v2))
            if vecs:
                spans[(x, y)] = vecs
    return IdealTable(cat, spans, name=f"{i1.name}*{i2.name}")


def ideal_sum(i1, i2, name=None):
    cat = i1.cat
    spans = {(x, y): list(i1.spans[(x, y)]) + list(i2.spans[(x, y)])
             for x in cat.objects for y in cat.objects}
    return IdealTable(cat, spans, name=name or f"{i1.name}+{i2.name}")


class QuotientCategory(PresentedCategory):
    """C/I with Hom(x,y) = Hom_C(x,y)/I(x,y) and induced composition."""

    def __init__(self, parent, ideal):
        super().__init__()
        self.parent = parent
        self.ideal = ideal
        self.field = parent.field
        self.objects = parent.objects
        self.obj_index = dict(getattr(parent, "obj_index", {}) or
                              {v: k for k, v in enumerate(parent.objects)})
        self._proj = {}
        self._reps = {}
        for x in parent.objects:
            for y in parent.objects:
                d = parent.dim(x, y)
                proj, free, _ = quotient_projection(
                    self.field, ideal.spans[(x, y)], d)
                self._proj[(x, y)] = proj
                self._reps[(x, y)] = free

    def dim(self, x, y):
        return len(self._reps[(x, y)])

    def project(self, x, y, vec):
        return self._proj[(x, y)].apply(vec)

    def embed(self, x, y, vec):
        f = self.field
        out = [f.zero()] * self.parent.dim(x, y)
        for k, i in enumerate(self._reps[(x, y)]):
            out[i] = vec[k]
        return out

    def id_coords(self, x):
        return self.project(x, x, self.parent.id_coords(x))

    def compose_elem(self, x, y, z, i, j):
        key = (x, y, z, i, j)
        hit = self._compose_cache.get(key)
        if hit is not None:
            return hit
        pi = self._reps[(x, y)][i]
        pj = self._reps[(y, z)][j]
        v = self.parent.compose_elem(x, y, z, pi, pj)
        out = self.project(x, z, v)
        self._compose_cache[key] = out
        return out

    def gen_morphisms(self):
        out = []
        for (gid, s, t, coords) in self.parent.gen_morphisms():
            out.append((gid, s, t, self.project(s, t, coords)))
        return out

    def gen_word(self, x, y, i):
        return self.parent.gen_word(x, y, self._reps[(x, y)][i])

    def project_ideal(self, other):
        """Image of a parent ideal in this quotient, as an IdealTable."""
        spans = {}
        for (x, y), vecs in other.spans.items():
            spans[(x, y)] = [self.project(x, y, v) for v in vecs]
        return IdealTable(self, spans,
                          generator_objects=other.generator_objects,
                          name=f"({other.name} mod {self.ideal.name})")


def quotient_category(cat, ideal):
    return QuotientCategory(cat, ideal)


class SubCategory(PresentedCategory):
    """Full subcategory on a subset of objects.

    Morphisms between subcategory objects may only factor through outside
    vertices, so the generator set is taken to be every basis morphism.
    """

    def __init__(self, parent, objects):
        super().__init__()
        self.parent = parent
        self.field = parent.field
        order = {v: k for k, v in enumerate(parent.objects)}
        self.objects = tuple(sorted(objects, key=lambda v: order[v]))
        self.obj_index = {v: k for k, v in enumerate(self.objects)}

    def dim(self, x, y):
        return self.parent.dim(x, y)

    def id_coords(self, x):
        return self.parent.id_coords(x)

    def compose_elem(self, x, y, z, i, j):
        return self.parent.compose_elem(x, y, z, i, j)

    def gen_morphisms(self):
        out = []
        for x in self.objects:
            for y in self.objects:
                if x == y:
                    continue
                for i in range(self.dim(x, y)):
                    out.append((("b", x, y, i), x, y, self.unit_vec(x, y, i)))
        return out

    def gen_word(self, x, y, i):
        if x == y:
            return ()
        return (("b", x, y, i),)


def subcategory(cat, objects):
    return SubCategory(cat, objects)
