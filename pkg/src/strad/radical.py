"""Radical filtration of Hom spaces between indecomposables.

For a representation-finite string algebra the indecomposables are the string
modules, so :class:`IndecomposableIndex` lists them from the string
enumeration.  :class:`RadicalTable` then computes ``rad^t(X, Y)`` for every
ordered pair and every ``t`` until the filtration reaches zero, storing each
level as an RREF basis in the coordinates of ``Hom(X, Y)``.

Levels 1 and 2 are computed from the definition (all factorisations through
all indecomposables).  From level 2 on the table uses

    rad^t(X, Y) = sum over arrows X -> W of rad^{t-1}(W, Y) . irr(X, W),

which holds because the irreducible maps out of X assemble into a left almost
split map; :meth:`RadicalTable.definitional_level` recomputes any level from
the definition for cross-checking.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import linalg as la
from .quiver import Presentation
from .repmod import (
    HomSpace,
    NotIndecomposable,
    RepMorphism,
    Representation,
    compose,
    find_isomorphism,
    hom_space,
    radical_of_endomorphisms,
    string_module,
)
from .strings import StringWord, canonical, enumerate_strings, parse_string

log = logging.getLogger(__name__)


class ZeroMorphism(ValueError):
    """Depth is infinite: the morphism is zero."""


@dataclass(eq=False)
class HomSubspace:
    source: Representation
    target: Representation
    basis: list[RepMorphism]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim


class IndecomposableIndex:
    """All indecomposables of a representation-finite string algebra, one
    string module per canonical string."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.strings: list[StringWord] = enumerate_strings(pres)
        self.modules: list[Representation] = [string_module(pres, s) for s in self.strings]
        self._by_string = {s: i for i, s in enumerate(self.strings)}
        self._by_id = {id(m): i for i, m in enumerate(self.modules)}

    def __len__(self):
        return len(self.modules)

    def __getitem__(self, i: int) -> Representation:
        return self.modules[i]

    def __iter__(self):
        return iter(self.modules)

    def index_of(self, key) -> int:
        """Position of a string (word or literal) or of an index module."""
        if isinstance(key, int):
            return key
        if isinstance(key, str):
            key = parse_string(self.pres, key)
        if isinstance(key, StringWord):
            return self._by_string[canonical(self.pres, key)]
        if isinstance(key, Representation):
            if id(key) in self._by_id:
                return self._by_id[id(key)]
            if key.string is not None:
                return self._by_string[canonical(self.pres, key.string)]
            i, _ = self.locate(key)
            return i
        raise TypeError(f"cannot look up {key!r}")

    def module(self, key) -> Representation:
        return self.modules[self.index_of(key)]

    def locate(self, X: Representation) -> tuple[int, RepMorphism]:
        """Index position of a module isomorphic to X, with an isomorphism X -> it."""
        for i, M in enumerate(self.modules):
            if M.dims == X.dims:
                iso = find_isomorphism(X, M)
                if iso is not None:
                    return i, iso
        raise NotIndecomposable(f"{X.label or X} is not isomorphic to any indecomposable in the index")


class RadicalTable:
    def __init__(self, index: IndecomposableIndex | Presentation):
        if isinstance(index, Presentation):
            index = IndecomposableIndex(index)
        self.index = index
        self.pres = index.pres
        self.field = self.pres.field
        n = len(index)
        self._hom = [[hom_space(index[i], index[j]) for j in range(n)] for i in range(n)]
        self._levels: list[dict] = []
        self._build()

    # -- construction --------------------------------------------------------

    def hom(self, i, j) -> HomSpace:
        return self._hom[self.index.index_of(i)][self.index.index_of(j)]

    def _full(self, i, j):
        d = self._hom[i][j].dim
        return la.identity(self.field, d), list(range(d))

    def _span(self, i, j, morphisms):
        H = self._hom[i][j]
        return la.row_basis(self.field, [H.coords(f) for f in morphisms], H.dim)

    def _build(self):
        n = len(self.index)
        lvl0 = {(i, j): self._full(i, j) for i in range(n) for j in range(n) if self._hom[i][j].dim}
        lvl1 = {}
        for (i, j), sub in lvl0.items():
            if i != j:
                lvl1[(i, j)] = sub
                continue
            rad = radical_of_endomorphisms(self.index[i], self._hom[i][i])
            if rad is None:
                raise NotIndecomposable(f"{self.index[i].label} has a non-local endomorphism ring")
            if rad[1]:
                lvl1[(i, i)] = rad
        self._levels = [lvl0, lvl1]
        self._levels.append(self.definitional_level(2))
        self._irr = {}
        for (i, j), (R1, p1) in lvl1.items():
            R2, p2 = self._levels[2].get((i, j), (la.zeros(self.field, 0, R1.shape[1]), []))
            reps = []
            basis, piv = R2, list(p2)
            for row in R1:
                if not la.in_span(row, basis, piv):
                    reps.append(row)
                    basis, piv = la.row_basis(self.field, list(basis) + [row], R1.shape[1])
            if reps:
                self._irr[(i, j)] = [self._hom[i][j].from_coords(r) for r in reps]
        # precomposition with irreducibles: coords in Hom(w, j) -> coords in Hom(i, j)
        self._pre = {}
        for (i, w), maps in self._irr.items():
            for s in maps:
                for j in range(n):
                    Hwj = self._hom[w][j]
                    if not Hwj.dim or not self._hom[i][j].dim:
                        continue
                    cols = [self._hom[i][j].coords(compose(h, s)) for h in Hwj.basis]
                    mat = np.empty((self._hom[i][j].dim, Hwj.dim), dtype=object)
                    for c, v in enumerate(cols):
                        mat[:, c] = v
                    self._pre.setdefault((i, j), []).append((w, mat))
        while self._levels[-1]:
            self._levels.append(self._next_level(self._levels[-1]))
        log.debug("radical table for %s: %d indecomposables, rad^%d = 0",
                  self.pres.quiver.name, n, self.nilpotency_index)

    def _next_level(self, prev: dict) -> dict:
        out = {}
        for (i, j), pres_list in self._pre.items():
            rows = []
            for w, mat in pres_list:
                sub = prev.get((w, j))
                if sub is None:
                    continue
                for r in sub[0]:
                    rows.append(mat.dot(r))
            if rows:
                R, piv = la.row_basis(self.field, rows, self._hom[i][j].dim)
                if piv:
                    out[(i, j)] = (R, piv)
        return out

    def definitional_level(self, t: int) -> dict:
        """rad^t for all pairs straight from rad^t = rad^{t-1} . rad."""
        if t <= 1:
            return dict(self._levels[t])
        prev = self._levels[t - 1] if t - 1 < len(self._levels) else self.definitional_level(t - 1)
        rad = self._levels[1]
        n = len(self.index)
        out = {}
        for i in range(n):
            for j in range(n):
                if not self._hom[i][j].dim:
                    continue
                prods = []
                for k in range(n):
                    a, b = prev.get((i, k)), rad.get((k, j))
                    if a is None or b is None:
                        continue
                    fs = [self._hom[i][k].from_coords(r) for r in a[0]]
                    gs = [self._hom[k][j].from_coords(r) for r in b[0]]
                    prods += [compose(g, f) for g in gs for f in fs]
                if prods:
                    R, piv = self._span(i, j, prods)
                    if piv:
                        out[(i, j)] = (R, piv)
        return out

    # -- queries -------------------------------------------------------------

    @property
    def nilpotency_index(self) -> int:
        """Smallest T with rad^T = 0 on all pairs."""
        return next(t for t, lvl in enumerate(self._levels) if not lvl)

    def level(self, t: int) -> dict:
        if t >= len(self._levels):
            return {}
        return self._levels[t]

    def level_dim(self, t: int, i, j) -> int:
        i, j = self.index.index_of(i), self.index.index_of(j)
        sub = self.level(t).get((i, j))
        return 0 if sub is None else len(sub[1])

    def rad_power(self, t: int, X, Y) -> HomSubspace:
        i, j = self.index.index_of(X), self.index.index_of(Y)
        H = self._hom[i][j]
        sub = self.level(t).get((i, j))
        basis = [] if sub is None else [H.from_coords(r) for r in sub[0]]
        return HomSubspace(self.index[i], self.index[j], basis, H.dim)

    def rad(self, X, Y) -> HomSubspace:
        return self.rad_power(1, X, Y)

    def irreducibles(self, X, Y) -> list[RepMorphism]:
        """Representatives of a basis of rad(X, Y) / rad^2(X, Y)."""
        i, j = self.index.index_of(X), self.index.index_of(Y)
        return list(self._irr.get((i, j), []))

    def arrow_multiplicity(self, X, Y) -> int:
        return self.level_dim(1, X, Y) - self.level_dim(2, X, Y)

    def arrows(self) -> dict[tuple[int, int], int]:
        return {k: len(v) for k, v in self._irr.items()}

    def _resolve(self, f: RepMorphism) -> tuple[int, int, np.ndarray]:
        """Coordinates of f in Hom(X_i, X_j), transporting along isomorphisms
        when f's endpoints are not the index's own module objects."""
        idx = self.index
        src, tgt = f.source, f.target
        if id(src) in idx._by_id and id(tgt) in idx._by_id:
            i, j = idx._by_id[id(src)], idx._by_id[id(tgt)]
        else:
            i, phi = idx.locate(src)
            j, psi = idx.locate(tgt)
            f = compose(psi, compose(f, inverse_iso(phi)))
            f = RepMorphism(idx[i], idx[j], f.mats)
        return i, j, self._hom[i][j].coords(f)

    def contains(self, t: int, f: RepMorphism) -> bool:
        i, j, c = self._resolve(f)
        sub = self.level(t).get((i, j))
        if sub is None:
            return all(x == 0 for x in c)
        return la.in_span(c, *sub)

    def depth(self, f: RepMorphism) -> int:
        """Largest t with f in rad^t."""
        i, j, c = self._resolve(f)
        if all(x == 0 for x in c):
            raise ZeroMorphism("the zero morphism lies in every power of the radical")
        t = 0
        while True:
            sub = self.level(t + 1).get((i, j))
            if sub is None or not la.in_span(c, *sub):
                return t
            t += 1

    def is_irreducible(self, f: RepMorphism) -> bool:
        return self.depth(f) == 1

    @cached_property
    def ar_quiver(self):
        from .artheory import ar_quiver
        return ar_quiver(self)


def inverse_iso(f: RepMorphism) -> RepMorphism:
    fld = f.field
    mats = {}
    for v, m in f.mats.items():
        n = m.shape[0]
        if m.shape != (n, n):
            raise ValueError("not an isomorphism")
        if n == 0:
            mats[v] = m.copy()
            continue
        aug = np.empty((n, 2 * n), dtype=object)
        aug[:, :n] = m
        aug[:, n:] = la.identity(fld, n)
        red, piv = la.rref(aug)
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise ValueError("not an isomorphism")
        mats[v] = red[:, n:].copy()
    return RepMorphism(f.target, f.source, mats)
