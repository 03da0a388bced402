"""Translation quivers, finite windows, and the builtin lattice families.

Each generator builds a finite truncation of an infinite translation
quiver together with a Window selecting the vertices the user asked
for.  The quiver itself is larger: it carries a "halo" sized so that
every path of the infinite quiver between two window vertices stays
inside the generated quiver.  Hom spaces computed on the halo therefore
agree with the ambient infinite mesh category on all window pairs
(recorded as Window.ambient_exact).

Vertices carry drawn coordinates (x2, y2) in half-unit steps, matching
the usual planar pictures of these lattices: every arrow moves one
half-unit to the right, diagonally or horizontally.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import PreconditionError, WindowTooSmall
from .filtration import Filtration


@dataclass(frozen=True)
class Arrow:
    source: object
    target: object
    aid: object


class TranslationQuiver:
    """A finite quiver with a partial translation tau and semitranslation sigma.

    ``mesh_complete`` lists the non-projective vertices whose full mesh
    (tau-image, all middle terms, the vertex itself) lies inside this
    finite quiver; only those meshes may be imposed as relations.
    """

    def __init__(self, vertices, arrows, tau=None, sigma=None,
                 coords=None, name="quiver", mesh_complete=None):
        self.vertices = tuple(vertices)
        self.vertex_set = set(self.vertices)
        self.arrows = tuple(Arrow(*a) if not isinstance(a, Arrow) else a
                            for a in arrows)
        self.tau = dict(tau or {})
        self.sigma = dict(sigma or {})
        self.coords = dict(coords or {})
        self.name = name
        self.arrows_by_id = {a.aid: a for a in self.arrows}
        self.out_arrows = {v: [] for v in self.vertices}
        self.in_arrows = {v: [] for v in self.vertices}
        for a in self.arrows:
            self.out_arrows[a.source].append(a)
            self.in_arrows[a.target].append(a)
        key = self.sort_key
        for v in self.vertices:
            self.out_arrows[v].sort(key=lambda a: (key(a.target), str(a.aid)))
            self.in_arrows[v].sort(key=lambda a: (key(a.source), str(a.aid)))
        if mesh_complete is None:
            mesh_complete = self._derive_mesh_complete()
        self.mesh_complete = set(mesh_complete)
        self.validate()

    # projective = no tau image declared
    @property
    def projective_vertices(self):
        return {v for v in self.vertices if v not in self.tau}

    def sort_key(self, v):
        c = self.coords.get(v)
        if c is not None:
            return (c[0], -c[1], repr(v))
        return (0, 0, repr(v))

    def arrow_order(self):
        """Deterministic global ordering of arrows."""
        return sorted(self.arrows,
                      key=lambda a: (self.sort_key(a.source),
                                     self.sort_key(a.target), str(a.aid)))

    def _derive_mesh_complete(self):
        done = set()
        for v in self.vertices:
            t = self.tau.get(v)
            if t is None or t not in self.vertex_set:
                continue
            ok = True
            for a in self.in_arrows[v]:
                s = self.sigma.get(a.aid)
                if s is None or s not in self.arrows_by_id:
                    ok = False
                    break
            if ok:
                done.add(v)
        return done

    def validate(self):
        tau_images = list(self.tau.values())
        if len(set(tau_images)) != len(tau_images):
            raise PreconditionError("tau is not injective")
        for aid, said in self.sigma.items():
            a = self.arrows_by_id[aid]
            sa = self.arrows_by_id[said]
            t = self.tau.get(a.target)
            if t is None:
                raise PreconditionError(f"sigma defined on arrow {aid} into a projective vertex")
            if sa.source != t or sa.target != a.source:
                raise PreconditionError(
                    f"sigma({aid}) must run tau({a.target}) -> {a.source}")

    def mesh_at(self, x):
        """Incoming arrows at x, their sigma-images, and tau(x)."""
        if x not in self.tau:
            raise PreconditionError(f"vertex {x!r} is projective: no mesh")
        if x not in self.mesh_complete:
            raise WindowTooSmall(f"mesh at {x!r} needs vertices outside the window")
        incoming = list(self.in_arrows[x])
        sigmas = [self.arrows_by_id[self.sigma[a.aid]] for a in incoming]
        return incoming, sigmas, self.tau[x]

    def to_dot(self, window=None):
        lines = ["digraph quiver {", "  rankdir=LR;"]
        inside = window.vertex_subset if window is not None else self.vertex_set
        for v in sorted(inside, key=self.sort_key):
            label = self.coords.get(v)
            pos = f' pos="{label[0]},{label[1]}!"' if label else ""
            lines.append(f'  "{v}" [label="{v}"{pos}];')
        for a in self.arrow_order():
            if a.source in inside and a.target in inside:
                lines.append(f'  "{a.source}" -> "{a.target}";')
        lines.append("}")
        return "\n".join(lines)


@dataclass
class Window:
    """A finite set of vertices on which all module computations happen."""

    vertex_subset: frozenset
    tau_closed: bool = False
    path_convex: bool = False
    ambient_exact: bool = False
    name: str = "window"
    meta: dict = dc_field(default_factory=dict)

    def ordered(self, quiver):
        return tuple(sorted(self.vertex_subset, key=quiver.sort_key))


def check_path_convex(quiver, window):
    """Literal convexity: no path between window vertices leaves the window.

    Checked inside the generated (halo) quiver by looking for an outside
    vertex that is reachable from the window and reaches back into it.
    """
    inside = window.vertex_subset
    reach_from = set()
    stack = [a.target for v in inside for a in quiver.out_arrows[v]
             if a.target not in inside]
    while stack:
        z = stack.pop()
        if z in reach_from:
            continue
        reach_from.add(z)
        for a in quiver.out_arrows[z]:
            if a.target not in inside:
                stack.append(a.target)
    for z in reach_from:
        for a in quiver.out_arrows[z]:
            if a.target in inside:
                return False
    return True


def check_tau_closed(quiver, window):
    inside = window.vertex_subset
    return all(quiver.tau[v] in inside for v in inside
               if v in quiver.tau and quiver.tau[v] in quiver.vertex_set)


# ---------------------------------------------------------------------------
# ZA-infinity: rows i >= 1, columns j in Z, arrows (i,j)->(i+1,j) and
# (i,j)->(i-1,j+1), tau_(i,j) = (i,j-1).  Drawn x = j + i/2 (half-units).
# ---------------------------------------------------------------------------

def _za_arrows(verts):
    vset = set(verts)
    arrows, tau, sigma = [], {}, {}
    for (i, j) in verts:
        if (i + 1, j) in vset:
            arrows.append(((i, j), (i + 1, j), ("d", i, j)))
        if i > 1 and (i - 1, j + 1) in vset:
            arrows.append(((i, j), (i - 1, j + 1), ("u", i, j)))
    for (i, j) in verts:
        if (i, j - 1) in vset:
            tau[(i, j)] = (i, j - 1)
    arrow_ids = {a[2] for a in arrows}
    # sigma of an arrow a: s->t is the arrow tau(t)->s
    for (src, tgt, aid) in arrows:
        (i, j) = tgt
        ti, tj = i, j - 1
        if (ti, tj) not in vset:
            continue
        (si, sj) = src
        if si == ti + 1 and sj == tj:          # incoming went up
            s_aid = ("d", ti, tj)
        elif si == ti - 1 and sj == tj + 1:    # incoming went down
            s_aid = ("u", ti, tj)
        else:
            continue
        if s_aid in arrow_ids:
            sigma[aid] = s_aid
    return arrows, tau, sigma


def gen_ZA_inf(rows, cols, jlo=None):
    """Window of the half-plane lattice: rows 1..rows, cols columns per row.

    Returns (quiver, window); the quiver extends below the window by a
    halo deep enough that all ambient paths between window vertices stay
    inside it.
    """
    if rows < 1 or cols < 2:
        raise WindowTooSmall("need at least 1 row and 2 columns for a mesh")
    if jlo is None:
        jlo = -(cols // 2)
    window_verts = {(i, j) for i in range(1, rows + 1)
                    for j in range(jlo, jlo + cols)}
    # x2 = 2j + i ranges over the window; halo keeps the same x2 interval
    x2min = min(2 * j + i for (i, j) in window_verts)
    x2max = max(2 * j + i for (i, j) in window_verts)
    halo_rows = rows + (x2max - x2min) // 2 + 2
    verts = []
    for i in range(1, halo_rows + 1):
        for j in range(jlo - rows, jlo + cols + rows):
            x2 = 2 * j + i
            if x2min <= x2 <= x2max:
                verts.append((i, j))
    arrows, tau, sigma = _za_arrows(verts)
    coords = {(i, j): (2 * j + i, -i) for (i, j) in verts}
    q = TranslationQuiver(verts, arrows, tau, sigma, coords, name="za-inf")
    w = Window(frozenset(window_verts), name=f"za-inf {rows}x{cols}",
               meta={"family": "za-inf", "rows": rows, "cols": cols, "jlo": jlo})
    w.tau_closed = check_tau_closed(q, w)
    w.path_convex = check_path_convex(q, w)
    w.ambient_exact = True
    return q, w


# ---------------------------------------------------------------------------
# ZA-infinity-infinity: the full planar lattice, vertices (x2, y2) with
# x2 + y2 even, arrows to (x2+1, y2+1) and (x2+1, y2-1), tau = x2 - 2.
# A rows x cols window is the drawn rectangle of alternating row sizes.
# ---------------------------------------------------------------------------

def gen_ZA_inf_inf(rows, cols):
    if rows < 1 or cols < 2:
        raise WindowTooSmall("need at least 1 row and 2 columns for a mesh")
    x2lo, x2hi = 2, 2 * cols
    y2lo, y2hi = 0, rows - 1
    window_verts = {(x2, y2) for x2 in range(x2lo, x2hi + 1)
                    for y2 in range(y2lo, y2hi + 1) if (x2 + y2) % 2 == 0}
    halo = (x2hi - x2lo) + 2
    verts = [(x2, y2) for x2 in range(x2lo, x2hi + 1)
             for y2 in range(y2lo - halo, y2hi + halo + 1)
             if (x2 + y2) % 2 == 0]
    vset = set(verts)
    arrows, tau, sigma = [], {}, {}
    for (x2, y2) in verts:
        for dy in (1, -1):
            t = (x2 + 1, y2 + dy)
            if t in vset:
                arrows.append(((x2, y2), t, ("ne" if dy == 1 else "se", x2, y2)))
    for v in verts:
        if (v[0] - 2, v[1]) in vset:
            tau[v] = (v[0] - 2, v[1])
    arrow_ids = {a[2] for a in arrows}
    for (src, tgt, aid) in arrows:
        t = tau.get(tgt)
        if t is None:
            continue
        kind = "se" if src[1] > tgt[1] else "ne"
        s_aid = ("ne" if kind == "se" else "se", t[0], t[1])
        if s_aid in arrow_ids:
            sigma[aid] = s_aid
    coords = {v: v for v in verts}
    q = TranslationQuiver(verts, arrows, tau, sigma, coords, name="za-inf-inf")
    w = Window(frozenset(window_verts), name=f"za-inf-inf {rows}x{cols}",
               meta={"family": "za-inf-inf", "rows": rows, "cols": cols})
    w.tau_closed = check_tau_closed(q, w)
    w.path_convex = check_path_convex(q, w)
    w.ambient_exact = True
    return q, w


# ---------------------------------------------------------------------------
# ZD-infinity: two prong orbits over a joined tail.  Vertices (o, n) with
# o = 1, 2 the prongs, o >= 3 the tail; tau(o, n) = (o, n-1).
# Drawn x2: prongs 2n, tail 2n + (o - 2).
# ---------------------------------------------------------------------------

def _zd_x2(o, n):
    return 2 * n if o in (1, 2) else 2 * n + (o - 2)


def _zd_y2(o, top):
    if o == 1:
        return top
    if o == 2:
        return top - 1
    return top - 1 - (o - 3)


def gen_ZD_inf(depth, cols):
    """Window with tail orbits 3..depth and cols prong columns."""
    if depth < 3 or cols < 2:
        raise WindowTooSmall("need tail depth >= 3 and >= 2 columns")
    x2lo, x2hi = 0, 2 * cols - 2
    halo_depth = depth + (x2hi - x2lo) + 2

    def in_range(o, n):
        return x2lo <= _zd_x2(o, n) <= x2hi

    verts = []
    for o in range(1, halo_depth + 1):
        for n in range(-halo_depth, cols + halo_depth):
            if in_range(o, n):
                verts.append((o, n))
    vset = set(verts)
    window_verts = {(o, n) for (o, n) in verts if o <= depth}
    arrows, tau, sigma = [], {}, {}

    def add(src, tgt):
        if src in vset and tgt in vset:
            arrows.append((src, tgt, (src, tgt)))

    for (o, n) in verts:
        if o in (1, 2):
            add((o, n), (3, n))
        elif o == 3:
            add((3, n), (1, n + 1))
            add((3, n), (2, n + 1))
            add((3, n), (4, n))
        else:
            add((o, n), (o + 1, n))
            add((o, n), (o - 1, n + 1))
    for (o, n) in verts:
        if (o, n - 1) in vset:
            tau[(o, n)] = (o, n - 1)
    arrow_ids = {a[2] for a in arrows}
    for (src, tgt, aid) in arrows:
        t = tau.get(tgt)
        if t is None:
            continue
        s_aid = (t, src)
        if s_aid in arrow_ids:
            sigma[aid] = s_aid
    top = halo_depth + 1
    coords = {(o, n): (_zd_x2(o, n), _zd_y2(o, top)) for (o, n) in verts}
    q = TranslationQuiver(verts, arrows, tau, sigma, coords, name="zd-inf")
    w = Window(frozenset(window_verts), name=f"zd-inf depth {depth} x {cols}",
               meta={"family": "zd-inf", "depth": depth, "cols": cols})
    w.tau_closed = check_tau_closed(q, w)
    w.path_convex = check_path_convex(q, w)
    w.ambient_exact = True
    return q, w


# ---------------------------------------------------------------------------
# N x extended-Dynkin families.  The diagram is bipartitely oriented
# (sources A, sinks B); slice k >= 1 carries the A vertices for odd k and
# the B vertices for even k, with arrows (u,k)->(w,k+1) for every edge
# {u,w} and tau(v,k) = (v,k-2).
# ---------------------------------------------------------------------------

def extended_dynkin_edges(kind, m):
    kind = kind.lower().replace("~", "").replace("tilde", "")
    if kind in ("a", "am"):
        if m < 2 or m % 2 == 0:
            raise PreconditionError(
                "A~_m needs odd m >= 3 for a bipartite orientation")
        n = m + 1
        return n, [(i, i % n + 1) for i in range(1, n + 1)]
    if kind in ("d", "dm"):
        if m < 4:
            raise PreconditionError("D~_m needs m >= 4")
        edges = [(1, 3), (2, 3)]
        edges += [(i, i + 1) for i in range(3, m - 1)]
        edges += [(m - 1, m), (m - 1, m + 1)]
        return m + 1, edges
    if kind in ("e6",):
        return 7, [(3, 4), (4, 5), (5, 6), (6, 7), (5, 2), (2, 1)]
    if kind in ("e7",):
        return 8, [(i, i + 1) for i in range(1, 7)] + [(4, 8)]
    if kind in ("e8",):
        return 9, [(i, i + 1) for i in range(1, 8)] + [(6, 9)]
    raise PreconditionError(f"unknown extended Dynkin type {kind!r}")


def bipartition(n, edges):
    color = {1: 0}
    stack = [1]
    adj = {v: [] for v in range(1, n + 1)}
    for (u, w) in edges:
        adj[u].append(w)
        adj[w].append(u)
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
            elif color[u] == color[v]:
                raise PreconditionError("diagram is not bipartite")
    # sinks B = the class containing the join vertex 3 when present,
    # otherwise the class of the smallest vertex of color 1
    a = sorted(v for v in color if color[v] == color[1])
    b = sorted(v for v in color if color[v] != color[1])
    return a, b


def gen_N_extended_dynkin(kind, m, depth):
    """First `depth` slices of the N x extended-Dynkin translation quiver.

    Sources of the bipartite orientation sit in odd slices, sinks in
    even slices, matching the alternating layer labels of these
    families.
    """
    if depth < 2:
        raise WindowTooSmall("need at least 2 slices to contain one mesh")
    n, edges = extended_dynkin_edges(kind, m)
    aa, bb = bipartition(n, edges)
    # orient all edges from class A (containing vertex 1) into class B
    sources, sinks = set(aa), set(bb)
    verts = []
    for k in range(1, depth + 1):
        cls = sources if k % 2 == 1 else sinks
        verts.extend((v, k) for v in sorted(cls))
    vset = set(verts)
    arrows, tau, sigma = [], {}, {}
    for (v, k) in verts:
        for (u, w) in edges:
            for (s, t) in ((u, w), (w, u)):
                if s == v and (t, k + 1) in vset:
                    arrows.append(((v, k), (t, k + 1), ((v, k), (t, k + 1))))
    for (v, k) in verts:
        if (v, k - 2) in vset:
            tau[(v, k)] = (v, k - 2)
    arrow_ids = {a[2] for a in arrows}
    for (src, tgt, aid) in arrows:
        t = tau.get(tgt)
        if t is None:
            continue
        s_aid = (t, src)
        if s_aid in arrow_ids:
            sigma[aid] = s_aid
    coords = {(v, k): (k, -v) for (v, k) in verts}
    q = TranslationQuiver(verts, arrows, tau, sigma, coords,
                          name=f"n-{kind}-{m}")
    q.meta = {"sources": sorted(sources), "sinks": sorted(sinks)}
    w = Window(frozenset(vset), name=f"n-{kind}{m} depth {depth}",
               meta={"family": "n-ext-dynkin", "kind": kind, "m": m,
                     "depth": depth})
    w.tau_closed = check_tau_closed(q, w)
    w.path_convex = check_path_convex(q, w)
    w.ambient_exact = True
    return q, w


# ---------------------------------------------------------------------------
# Example filtrations with the figure labelings.
# ---------------------------------------------------------------------------

def _ring_positions(h):
    """Clockwise square-ring offsets of Chebyshev radius h (half-units),
    starting at the top-left corner; lattice parity keeps every other cell."""
    if h == 0:
        return [(0, 0)]
    cells = []
    for dx in range(-h, h + 1, 2):
        cells.append((dx, h))
    for dy in range(h - 2, -h - 1, -2):
        cells.append((h, dy))
    for dx in range(h - 2, -h - 1, -2):
        cells.append((dx, -h))
    for dy in range(-h + 2, h - 1, 2):
        cells.append((-h, dy))
    return cells


def filtration_za_inf_inf(quiver, window, layers):
    """Diamond layers about the window center, labeled E^i_j clockwise."""
    verts = window.ordered(quiver)
    xs = sorted({v[0] for v in verts})
    ys = sorted({v[1] for v in verts})
    cy = ys[len(ys) // 2]
    cands = sorted(x for x in xs if (x + cy) % 2 == 0)
    cx = cands[(len(cands) - 1) // 2]
    center = (cx, cy)
    if center not in window.vertex_subset:
        raise WindowTooSmall("window center missing")
    layer_sets, labels = [], {}
    for i in range(1, layers + 1):
        ring = []
        for idx, (dx, dy) in enumerate(_ring_positions(i - 1), start=1):
            v = (cx + dx, cy + dy)
            if v in window.vertex_subset:
                ring.append(v)
                labels[v] = (i, idx)
        if not ring:
            raise WindowTooSmall(f"layer {i} has no vertices in the window")
        layer_sets.append(ring)
    return Filtration(layer_sets, labels=labels,
                      name=f"diamond about {center}")


def filtration_za_rows(quiver, window, layers):
    """Layer i = the i-th row of a ZA-infinity window."""
    rows = sorted({v[0] for v in window.vertex_subset})
    if layers > len(rows):
        raise WindowTooSmall(f"window has {len(rows)} rows, need {layers}")
    layer_sets, labels = [], {}
    for i in range(1, layers + 1):
        row = sorted(v for v in window.vertex_subset if v[0] == i)
        for v in row:
            labels[v] = (i, v[1])
        layer_sets.append(row)
    return Filtration(layer_sets, labels=labels, name="rows")


def filtration_za_diamond(quiver, window, layers, center=None):
    """Diamond layers on ZA-infinity, clipped at the top row.

    Layer sizes run 1, then 2i for even i and 2i-1 for odd i; labels are
    assigned counterclockwise from the top-left existing ring cell.
    """
    if center is None:
        rows = sorted({v[0] for v in window.vertex_subset})
        if len(rows) < 2:
            raise WindowTooSmall("need at least 2 rows")
        i_c = 2
        js = sorted(v[1] for v in window.vertex_subset if v[0] == i_c)
        j_c = js[(len(js) - 1) // 2]
        center = (i_c, j_c)
    (i_c, j_c) = center
    if center not in window.vertex_subset:
        raise WindowTooSmall("requested center outside the window")
    x_c, y_c = 2 * j_c + i_c, -i_c
    layer_sets, labels = [], {}
    for i in range(1, layers + 1):
        ring = []
        cells = _ring_positions(i - 1)
        # counterclockwise from top-left: reverse the clockwise walk,
        # rotating so the walk starts at the top-left existing cell
        cw = [(x_c + dx, y_c + dy) for (dx, dy) in cells]
        existing = [(x2, y2) for (x2, y2) in cw if (-y2) >= 1]
        ccw = [existing[0]] + list(reversed(existing[1:]))
        for idx, (x2, y2) in enumerate(ccw, start=1):
            i_v = -y2
            j_v = (x2 - i_v) // 2
            v = (i_v, j_v)
            if v in window.vertex_subset:
                ring.append(v)
                labels[v] = (i, idx)
        if not ring:
            raise WindowTooSmall(f"layer {i} empty on the window")
        layer_sets.append(ring)
    return Filtration(layer_sets, labels=labels,
                      name=f"diamond about {center}")


def filtration_za_column(quiver, window, layers, col=1):
    """Single-column layers {(i, col)}; the chain along one vertical line."""
    layer_sets, labels = [], {}
    for i in range(1, layers + 1):
        v = (i, col)
        if v not in window.vertex_subset:
            raise WindowTooSmall(f"column vertex {v} outside the window")
        labels[v] = (i, 1)
        layer_sets.append([v])
    return Filtration(layer_sets, labels=labels, name=f"column j={col}",
                      exhaustive_hint=False)


def _zd_layer(quiver, window, center):
    (o_c, n_c) = center
    x_c = _zd_x2(o_c, n_c)

    def layer_of(v):
        (o, n) = v
        d2 = abs(_zd_x2(o, n) - x_c)     # horizontal distance in half-units
        depth_term = 1 if o in (1, 2) else o - 2
        return max(depth_term, d2 + 1)

    return layer_of


def filtration_zd(quiver, window, layers):
    """Ring layers about a join-orbit vertex, per the lattice labeling:
    layer(v) = max(taildepth(v) - 2, horizontal distance + 1)."""
    joins = sorted(v for v in window.vertex_subset if v[0] == 3)
    if not joins:
        raise WindowTooSmall("no join-orbit vertices in the window")
    center = joins[(len(joins) - 1) // 2]
    layer_of = _zd_layer(quiver, window, center)
    members = {}
    for v in window.vertex_subset:
        members.setdefault(layer_of(v), []).append(v)
    layer_sets, labels = [], {}
    x_c = _zd_x2(*center)
    for i in range(1, layers + 1):
        ring = members.get(i)
        if not ring:
            raise WindowTooSmall(f"layer {i} empty on the window")
        # boundary walk: left column top->bottom, bottom row left->right,
        # right column bottom->top
        def walk_key(v):
            x2, y2 = quiver.coords[v]
            if x2 < x_c:
                return (0, x2 - x_c, -y2)
            if x2 == x_c:
                return (1, 0, -y2)
            return (2, 0, y2)
        ring = sorted(ring, key=walk_key)
        for idx, v in enumerate(ring, start=1):
            labels[v] = (i, idx)
        layer_sets.append(ring)
    return Filtration(layer_sets, labels=labels,
                      name=f"rings about {center}")


def filtration_slices(quiver, window, layers):
    """Layer k = slice k of an N x extended-Dynkin window."""
    ks = sorted({v[1] for v in window.vertex_subset})
    if layers > len(ks):
        raise WindowTooSmall(f"window has {len(ks)} slices, need {layers}")
    layer_sets, labels = [], {}
    for k in range(1, layers + 1):
        sl = sorted(v for v in window.vertex_subset if v[1] == k)
        for v in sl:
            labels[v] = (k, v[0])
        layer_sets.append(sl)
    return Filtration(layer_sets, labels=labels, name="slices")


FAMILY_FILTRATIONS = {
    ("za-inf", "rows"): filtration_za_rows,
    ("za-inf", "diamond"): filtration_za_diamond,
    ("za-inf", "column"): filtration_za_column,
    ("za-inf-inf", "diamond"): filtration_za_inf_inf,
    ("zd-inf", "rings"): filtration_zd,
    ("n-ext-dynkin", "slices"): filtration_slices,
}


def example_filtration(quiver, window, name, layers):
    """One of the builtin filtrations, by family and filtration name."""
    fam = window.meta.get("family")
    fn = FAMILY_FILTRATIONS.get((fam, name))
    if fn is None:
        raise PreconditionError(f"no filtration {name!r} for family {fam!r}")
    return fn(quiver, window, layers)
