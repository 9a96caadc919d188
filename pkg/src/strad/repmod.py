"""Matrix representations of bound quivers and morphisms between them.

Arrow matrices have shape ``(dim at target, dim at source)`` and act on column
vectors; morphisms are families of vertex matrices ``phi[x]`` of shape
``(dim of target rep at x, dim of source rep at x)``.  Everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from . import linalg as la
from .quiver import Presentation, Path
from .strings import StringWord, canonical, letter_end, letter_start, same_module, walk_vertices


class InvalidWindow(ValueError):
    """A candidate graph map fails the intertwining check."""


class NotIndecomposable(ValueError):
    pass


def _fmt(x) -> str:
    return str(x)


def _dump_matrix(m: np.ndarray) -> str:
    return "[" + ", ".join("[" + ", ".join(_fmt(x) for x in row) + "]" for row in m) + "]"


@dataclass(eq=False)
class Representation:
    pres: Presentation
    dims: dict[str, int]
    maps: dict[str, np.ndarray]
    label: str = ""
    string: StringWord | None = None
    # for string modules: (vertex, index within that vertex) of each z_i
    positions: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        q = self.pres.quiver
        for v in q.vertices:
            self.dims.setdefault(v, 0)
        for a in q.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = self.maps.get(a.name)
            if m is None:
                self.maps[a.name] = la.zeros(self.field, *shape)
            elif m.shape != shape:
                raise ValueError(f"arrow {a.name}: matrix shape {m.shape}, expected {shape}")
        for r in self.pres.relations:
            if not la.is_zero(self.evaluate(r)):
                raise ValueError(f"relation {' '.join(reversed(r))} does not vanish on {self.label or 'representation'}")

    @property
    def field(self):
        return self.pres.field

    @property
    def vertices(self):
        return self.pres.quiver.vertices

    @cached_property
    def dim(self) -> int:
        return sum(self.dims.values())

    def dimension_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.vertices)

    def evaluate(self, path) -> np.ndarray:
        """Matrix of a path (traversal order), composing right-to-left."""
        arrows = path.arrows if isinstance(path, Path) else tuple(path)
        q = self.pres.quiver
        m = la.identity(self.field, self.dims[q.arrow(arrows[0]).source])
        for a in arrows:
            m = la.matmul(self.field, self.maps[a], m)
        return m

    def identity(self) -> RepMorphism:
        return RepMorphism(self, self, {v: la.identity(self.field, self.dims[v]) for v in self.vertices})

    def zero_to(self, other: Representation) -> RepMorphism:
        return RepMorphism(self, other, {v: la.zeros(self.field, other.dims[v], self.dims[v]) for v in self.vertices})

    def dump(self) -> str:
        lines = [f"# {self.label}" if self.label else "# representation"]
        lines.append("dims " + " ".join(f"{v}:{self.dims[v]}" for v in self.vertices))
        for a in self.pres.quiver.arrows:
            lines.append(f"{a.name} {a.source}->{a.target} {_dump_matrix(self.maps[a.name])}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Representation({self.label or self.dimension_vector()})"


@dataclass(eq=False)
class RepMorphism:
    source: Representation
    target: Representation
    mats: dict[str, np.ndarray]

    def __post_init__(self):
        for v in self.source.vertices:
            shape = (self.target.dims[v], self.source.dims[v])
            if v not in self.mats:
                self.mats[v] = la.zeros(self.field, *shape)
            elif self.mats[v].shape != shape:
                raise ValueError(f"vertex {v}: block shape {self.mats[v].shape}, expected {shape}")

    @property
    def field(self):
        return self.source.field

    def is_intertwiner(self) -> bool:
        f = self.field
        for a in self.source.pres.quiver.arrows:
            lhs = la.matmul(f, self.mats[a.target], self.source.maps[a.name])
            rhs = la.matmul(f, self.target.maps[a.name], self.mats[a.source])
            if not all(x == y for x, y in zip(lhs.flat, rhs.flat)):
                return False
        return True

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.mats.values())

    def rank(self) -> int:
        return sum(la.rank(m) for m in self.mats.values())

    def is_invertible(self) -> bool:
        return all(
            self.source.dims[v] == self.target.dims[v] and la.rank(m) == self.source.dims[v]
            for v, m in self.mats.items()
        )

    def vector(self) -> np.ndarray:
        parts = [self.mats[v].reshape(-1) for v in self.source.vertices]
        return np.concatenate(parts) if parts else np.array([], dtype=object)

    def __matmul__(self, other: RepMorphism) -> RepMorphism:
        return compose(self, other)

    def __add__(self, other: RepMorphism) -> RepMorphism:
        return add(self, other)

    def __sub__(self, other: RepMorphism) -> RepMorphism:
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c):
        return scale(c, self)

    def __eq__(self, other):
        if not isinstance(other, RepMorphism):
            return NotImplemented
        if self.source is not other.source or self.target is not other.target:
            return False
        return all(
            all(x == y for x, y in zip(self.mats[v].flat, other.mats[v].flat)) for v in self.source.vertices
        )

    __hash__ = None

    def dump(self) -> str:
        return "\n".join(f"{v}: {_dump_matrix(self.mats[v])}" for v in self.source.vertices)

    def __repr__(self):
        return f"RepMorphism({self.source.label or '?'} -> {self.target.label or '?'})"


def morphism_from_vector(source: Representation, target: Representation, vec) -> RepMorphism:
    mats, i = {}, 0
    for v in source.vertices:
        r, c = target.dims[v], source.dims[v]
        mats[v] = np.array(vec[i:i + r * c], dtype=object).reshape(r, c)
        i += r * c
    return RepMorphism(source, target, mats)


def compose(g: RepMorphism, f: RepMorphism) -> RepMorphism:
    """``g`` after ``f``."""
    if f.target is not g.source:
        if f.target.dims != g.source.dims:
            raise ValueError("morphisms are not composable")
    fld = f.field
    return RepMorphism(f.source, g.target, {v: la.matmul(fld, g.mats[v], f.mats[v]) for v in f.source.vertices})


def compose_all(*maps: RepMorphism) -> RepMorphism:
    """Right-to-left composite: ``compose_all(h, g, f) = h g f``."""
    return reduce(compose, maps)


def add(f: RepMorphism, g: RepMorphism) -> RepMorphism:
    if f.source.dims != g.source.dims or f.target.dims != g.target.dims:
        raise ValueError("morphisms live in different Hom spaces")
    return RepMorphism(f.source, f.target, {v: f.mats[v] + g.mats[v] for v in f.source.vertices})


def scale(c, f: RepMorphism) -> RepMorphism:
    c = f.field(c)
    return RepMorphism(f.source, f.target, {v: c * f.mats[v] for v in f.source.vertices})


# -- constructions -----------------------------------------------------------

def string_module(pres: Presentation, s: StringWord, label: str | None = None) -> Representation:
    """M(s) with basis z_0..z_n along the walk, z_0 at the walk's source."""
    fld = pres.field
    walk = walk_vertices(pres, s)
    dims: dict[str, int] = {}
    positions = []
    for v in walk:
        positions.append((v, dims.get(v, 0)))
        dims[v] = dims.get(v, 0) + 1
    for v in pres.vertices:
        dims.setdefault(v, 0)
    maps = {}
    for a in pres.arrows:
        maps[a.name] = la.zeros(fld, dims[a.target], dims[a.source])
    for i, c in enumerate(s.letters, 1):
        src, dst = (i, i - 1) if c.inverse else (i - 1, i)
        (vs, js), (vd, jd) = positions[src], positions[dst]
        maps[c.arrow][jd, js] = fld.one
    return Representation(pres, dims, maps, label or f"M({s.render()})", s, tuple(positions))


def _path_rep(pres: Presentation, basis: dict[str, list], act, label) -> Representation:
    fld = pres.field
    dims = {v: len(basis.get(v, [])) for v in pres.vertices}
    index = {v: {p: i for i, p in enumerate(basis.get(v, []))} for v in pres.vertices}
    maps = {}
    for a in pres.arrows:
        m = la.zeros(fld, dims[a.target], dims[a.source])
        for j, p in enumerate(basis.get(a.source, [])):
            img = act(a, p)
            if img is not None:
                m[index[a.target][img], j] = fld.one
        maps[a.name] = m
    return Representation(pres, dims, maps, label)


def projective(pres: Presentation, i: str) -> Representation:
    """P(i): nonzero paths starting at i, arrows acting by post-composition."""
    paths = [p for p in pres.nonzero_paths if pres.path_source(p) == i]
    basis: dict[str, list] = {}
    for p in paths:
        basis.setdefault(pres.path_target(p), []).append(p.arrows)
    nonzero = {p.arrows for p in paths}

    def act(a, p):
        q = p + (a.name,)
        return q if q in nonzero else None

    return _path_rep(pres, basis, act, f"P({i})")


def injective(pres: Presentation, i: str) -> Representation:
    """I(i): nonzero paths ending at i, indexed by their source vertex; an
    arrow a strips a leading a."""
    paths = [p for p in pres.nonzero_paths if pres.path_target(p) == i]
    basis: dict[str, list] = {}
    for p in paths:
        basis.setdefault(pres.path_source(p), []).append(p.arrows)

    def act(a, p):
        if p and p[0] == a.name:
            return p[1:]
        return None

    return _path_rep(pres, basis, act, f"I({i})")


def simple(pres: Presentation, i: str) -> Representation:
    return Representation(pres, {i: 1}, {}, f"S({i})")


@dataclass(eq=False)
class DirectSum:
    rep: Representation
    summands: list[Representation]
    inclusions: list[RepMorphism]
    projections: list[RepMorphism]


def direct_sum(summands: list[Representation], label: str | None = None) -> DirectSum:
    pres = summands[0].pres
    fld = pres.field
    dims = {v: sum(s.dims[v] for s in summands) for v in pres.vertices}
    maps = {}
    for a in pres.arrows:
        m = la.zeros(fld, dims[a.target], dims[a.source])
        r = c = 0
        for s in summands:
            blk = s.maps[a.name]
            m[r:r + blk.shape[0], c:c + blk.shape[1]] = blk
            r += blk.shape[0]
            c += blk.shape[1]
        maps[a.name] = m
    rep = Representation(pres, dims, maps, label or " + ".join(s.label for s in summands))
    incs, projs = [], []
    offset = {v: 0 for v in pres.vertices}
    for s in summands:
        inc, proj = {}, {}
        for v in pres.vertices:
            e = la.zeros(fld, dims[v], s.dims[v])
            for k in range(s.dims[v]):
                e[offset[v] + k, k] = fld.one
            inc[v] = e
            proj[v] = e.T.copy()
            offset[v] += s.dims[v]
        incs.append(RepMorphism(s, rep, inc))
        projs.append(RepMorphism(rep, s, proj))
    return DirectSum(rep, list(summands), incs, projs)


def column_map(maps: list[RepMorphism], target: DirectSum) -> RepMorphism:
    """X -> (+) Y_i assembled from components X -> Y_i."""
    return reduce(add, [compose(inc, f) for inc, f in zip(target.inclusions, maps)])


def row_map(maps: list[RepMorphism], source: DirectSum) -> RepMorphism:
    """(+) Y_i -> Z assembled from components Y_i -> Z."""
    return reduce(add, [compose(f, p) for p, f in zip(source.projections, maps)])


# -- Hom spaces --------------------------------------------------------------

class HomSpace:
    """Hom(X, Y) with an exact basis.

    The basis comes from the kernel of the intertwining system in reduced
    form, so each basis morphism has a 1 at its own free position and 0 at the
    other free positions; coordinates of any morphism are read off directly.
    """

    def __init__(self, source: Representation, target: Representation):
        self.source, self.target = source, target
        fld = source.field
        offs, n = {}, 0
        for v in source.vertices:
            offs[v] = n
            n += target.dims[v] * source.dims[v]
        self.ambient = n
        rows = []
        for a in source.pres.quiver.arrows:
            s, e = a.source, a.target
            M, N = source.maps[a.name], target.maps[a.name]
            ys, ye, xs = target.dims[s], target.dims[e], source.dims[s]
            xe = source.dims[e]
            for i in range(ye):
                for j in range(xs):
                    row = {}
                    # (phi_e M)[i, j] = sum_k phi_e[i, k] M[k, j]
                    for k in range(xe):
                        if M[k, j] != 0:
                            idx = offs[e] + i * xe + k
                            row[idx] = row.get(idx, 0) + M[k, j]
                    # (N phi_s)[i, j] = sum_l N[i, l] phi_s[l, j]
                    for l in range(ys):
                        if N[i, l] != 0:
                            idx = offs[s] + l * xs + j
                            row[idx] = row.get(idx, 0) - N[i, l]
                    if any(c != 0 for c in row.values()):
                        rows.append(row)
        if rows:
            sys = la.zeros(fld, len(rows), n)
            for r, row in enumerate(rows):
                for c, val in row.items():
                    sys[r, c] = fld(val)
            red, pivots = la.rref(sys)
        else:
            pivots = []
            red = la.zeros(fld, 0, n)
        pivset = set(pivots)
        self.free = [c for c in range(n) if c not in pivset]
        vecs = []
        for f in self.free:
            vec = np.array([fld.zero] * n, dtype=object)
            vec[f] = fld.one
            for i, p in enumerate(pivots):
                vec[p] = -red[i, f]
            vecs.append(vec)
        self.vectors = vecs
        self.basis = [morphism_from_vector(source, target, v) for v in vecs]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f: RepMorphism) -> np.ndarray:
        vec = f.vector()
        return np.array([vec[i] for i in self.free], dtype=object)

    def from_coords(self, c) -> RepMorphism:
        fld = self.source.field
        vec = np.array([fld.zero] * self.ambient, dtype=object)
        for ci, v in zip(c, self.vectors):
            if ci != 0:
                vec = vec + ci * v
        return morphism_from_vector(self.source, self.target, vec)

    def contains(self, f: RepMorphism) -> bool:
        return f.is_intertwiner()


def hom_space(X: Representation, Y: Representation) -> HomSpace:
    if X.pres != Y.pres:
        raise ValueError("representations over different presentations")
    return HomSpace(X, Y)


def hom_basis(X: Representation, Y: Representation) -> list[RepMorphism]:
    return hom_space(X, Y).basis


# -- graph maps --------------------------------------------------------------

@dataclass(frozen=True)
class Window:
    start: int
    orientation: int  # +1: same direction as the ambient walk, -1: reversed


def _window_indices(D: StringWord, win: Window) -> list[int]:
    n = len(D)
    if win.orientation == 1:
        return [win.start + j for j in range(n + 1)]
    return [win.start + n - j for j in range(n + 1)]


def _window_matches(pres, D: StringWord, C: StringWord, win: Window) -> bool:
    n = len(D)
    if win.start < 0 or win.start + n > len(C):
        return False
    if D.is_trivial:
        return walk_vertices(pres, C)[win.start] == D.vertex
    seg = C.letters[win.start:win.start + n]
    if win.orientation == 1:
        return seg == D.letters
    return seg == tuple(c.inv() for c in reversed(D.letters))


def graph_map(X: Representation, Y: Representation, win: Window, kind: str) -> RepMorphism:
    """Canonical map between string modules matched along a window.

    ``kind="include"``: M(D) = X -> Y = M(C), basis of D onto the window.
    ``kind="project"``: M(C) = X -> Y = M(D), window onto D, the rest to 0.
    """
    if kind not in ("include", "project"):
        raise ValueError("kind must be 'include' or 'project'")
    small, big = (X, Y) if kind == "include" else (Y, X)
    if small.string is None or big.string is None:
        raise ValueError("graph maps need string modules")
    pres = X.pres
    if not _window_matches(pres, small.string, big.string, win):
        raise InvalidWindow(f"{small.string} does not sit in {big.string} at {win}")
    fld = pres.field
    mats = {v: la.zeros(fld, Y.dims[v], X.dims[v]) for v in pres.vertices}
    for j, i in enumerate(_window_indices(small.string, win)):
        (vs, js), (vb, jb) = small.positions[j], big.positions[i]
        if kind == "include":
            mats[vs][jb, js] = fld.one
        else:
            mats[vs][js, jb] = fld.one
    f = RepMorphism(X, Y, mats)
    if not f.is_intertwiner():
        raise InvalidWindow(f"{kind} {small.string} at {win} in {big.string} is not a module map")
    return f


def find_graph_maps(X: Representation, Y: Representation, kind: str) -> list[tuple[Window, RepMorphism]]:
    small, big = (X, Y) if kind == "include" else (Y, X)
    out = []
    orients = (1,) if small.string.is_trivial else (1, -1)
    for start in range(len(big.string) - len(small.string) + 1):
        for o in orients:
            win = Window(start, o)
            if not _window_matches(X.pres, small.string, big.string, win):
                continue
            try:
                out.append((win, graph_map(X, Y, win, kind)))
            except InvalidWindow:
                pass
    return out


# -- kernels, images, cokernels ----------------------------------------------

def _columns(vectors, rows, fld):
    m = la.zeros(fld, rows, len(vectors))
    for j, v in enumerate(vectors):
        m[:, j] = v
    return m


def _coords_in(basis_cols: np.ndarray, vec, fld):
    x = la.solve(fld, basis_cols, np.array(vec, dtype=object))
    if x is None:
        raise ValueError("vector not in the subspace")
    return x


def _induced(pres, dims, bases, maps, fld):
    """Arrow matrices of the subrepresentation spanned by the column bases."""
    out = {}
    for a in pres.arrows:
        Bs, Be = bases[a.source], bases[a.target]
        m = la.zeros(fld, dims[a.target], dims[a.source])
        if dims[a.source] and dims[a.target]:
            img = la.matmul(fld, maps[a.name], Bs)
            for j in range(dims[a.source]):
                m[:, j] = _coords_in(Be, img[:, j], fld)
        elif dims[a.source]:
            img = la.matmul(fld, maps[a.name], Bs)
            if not la.is_zero(img):
                raise ValueError("subspace is not a subrepresentation")
        out[a.name] = m
    return out


def kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    X, fld = f.source, f.field
    bases, dims = {}, {}
    for v in X.vertices:
        vecs = la.nullspace(fld, f.mats[v]) if X.dims[v] else []
        bases[v] = _columns(vecs, X.dims[v], fld)
        dims[v] = len(vecs)
    K = Representation(X.pres, dims, _induced(X.pres, dims, bases, X.maps, fld), f"ker")
    return K, RepMorphism(K, X, bases)


def image(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    Y, fld = f.target, f.field
    bases, dims = {}, {}
    for v in Y.vertices:
        m = f.mats[v]
        if m.size:
            red, piv = la.rref(m.T.copy())
            vecs = [red[i] for i in range(len(piv))]
        else:
            vecs = []
        bases[v] = _columns(vecs, Y.dims[v], fld)
        dims[v] = len(vecs)
    Im = Representation(Y.pres, dims, _induced(Y.pres, dims, bases, Y.maps, fld), "im")
    return Im, RepMorphism(Im, Y, bases)


def cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    Y, fld = f.target, f.field
    quot, sect, dims = {}, {}, {}
    for v in Y.vertices:
        n = Y.dims[v]
        m = f.mats[v]
        if m.size:
            red, piv = la.rref(m.T.copy())
        else:
            red, piv = la.zeros(fld, 0, n), []
        comp = [c for c in range(n) if c not in set(piv)]
        q = la.zeros(fld, len(comp), n)
        for col in range(n):
            e = np.array([fld.zero] * n, dtype=object)
            e[col] = fld.one
            r = la.reduce_against(e, red, piv)
            for k, c in enumerate(comp):
                q[k, col] = r[c]
        s = la.zeros(fld, n, len(comp))
        for k, c in enumerate(comp):
            s[c, k] = fld.one
        quot[v], sect[v], dims[v] = q, s, len(comp)
    maps = {}
    for a in Y.pres.arrows:
        maps[a.name] = la.matmul(fld, la.matmul(fld, quot[a.target], Y.maps[a.name]), sect[a.source])
    Q = Representation(Y.pres, dims, maps, "coker")
    return Q, RepMorphism(Y, Q, quot)


def is_exact_at(f: RepMorphism, g: RepMorphism) -> bool:
    """im f == ker g, vertex by vertex."""
    if not compose(g, f).is_zero():
        return False
    mid = f.target
    return all(la.rank(f.mats[v]) == mid.dims[v] - la.rank(g.mats[v]) for v in mid.vertices)


def is_exact(maps: list[RepMorphism], short: bool = False) -> bool:
    """Exactness of X0 -> X1 -> ... at inner terms; ``short=True`` also asks
    for the first map to be mono and the last to be epi."""
    if any(not is_exact_at(f, g) for f, g in zip(maps, maps[1:])):
        return False
    if short:
        first, last = maps[0], maps[-1]
        if first.rank() != first.source.dim or last.rank() != last.target.dim:
            return False
    return True


# -- endomorphism rings ------------------------------------------------------

def _trace(f: RepMorphism):
    fld = f.field
    t = fld.zero
    for m in f.mats.values():
        for i in range(m.shape[0]):
            t = t + m[i, i]
    return t


def _scalar_part(f: RepMorphism):
    """lambda with f - lambda*id nilpotent, assuming End is local."""
    fld = f.field
    X = f.source
    total = fld(X.dim)
    if total != 0:
        return _trace(f) / total
    for v in X.vertices:
        d = fld(X.dims[v])
        if d != 0:
            m = f.mats[v]
            return sum((m[i, i] for i in range(m.shape[0])), fld.zero) / d
    raise NotImplementedError("every vertex dimension vanishes in the field")


def radical_of_endomorphisms(X: Representation, H: HomSpace | None = None):
    """Basis (as coordinate rows) of rad End(X), or ``None`` if End(X) is not
    local.  Certification: the candidate has codimension one, is closed under
    composition and some power of it vanishes."""
    H = H or hom_space(X, X)
    if H.dim == 0:
        return None
    fld = X.field
    ident = X.identity()
    cands = [g - scale(_scalar_part(g), ident) for g in H.basis]
    rows = [H.coords(c) for c in cands]
    J, piv = la.row_basis(fld, rows, H.dim)
    if len(piv) != H.dim - 1:
        return None
    Jm = [H.from_coords(r) for r in J]
    power = Jm
    for _ in range(X.dim + 1):
        if all(p.is_zero() for p in power):
            break
        prods = [compose(a, b) for a in Jm for b in power]
        for p in prods:
            if not la.in_span(H.coords(p), J, piv):
                return None
        r, pv = la.row_basis(fld, [H.coords(p) for p in prods], H.dim)
        power = [H.from_coords(x) for x in r]
    else:
        return None
    if not all(p.is_zero() for p in power):
        return None
    return J, piv


def is_indecomposable(X: Representation) -> bool:
    if X.dim == 0:
        return False
    return radical_of_endomorphisms(X) is not None


def is_isomorphic(X: Representation, Y: Representation) -> bool:
    """Isomorphism test; exact for indecomposable ``X``."""
    if X.dims != Y.dims:
        return False
    if X.string is not None and Y.string is not None:
        return same_module(X.pres, X.string, Y.string)
    return find_isomorphism(X, Y) is not None


def find_isomorphism(X: Representation, Y: Representation) -> RepMorphism | None:
    if X.dims != Y.dims:
        return None
    hxy, hyx = hom_basis(X, Y), hom_basis(Y, X)
    for h in hxy:
        if h.is_invertible():
            return h
        for k in hyx:
            if compose(k, h).is_invertible():
                return h
    return None


def is_injective_module(X: Representation) -> bool:
    """Whether an indecomposable X is isomorphic to some I(v)."""
    for v in X.pres.vertices:
        inj = injective(X.pres, v)
        if inj.dims == X.dims and find_isomorphism(X, inj) is not None:
            return True
    return False


def is_projective_module(X: Representation) -> bool:
    for v in X.pres.vertices:
        proj = projective(X.pres, v)
        if proj.dims == X.dims and find_isomorphism(X, proj) is not None:
            return True
    return False
