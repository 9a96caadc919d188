"""String combinatorics for string algebras.

Words are stored in traversal order: ``letters[0]`` is walked first.  The
usual right-to-left notation ``C = c_n ... c_1`` therefore corresponds to
``letters == (c_1, ..., c_n)``, so the *start* of a string is the front of the
tuple and "C beta" means prepending ``beta``.

Trivial strings carry a ``side`` (+1 or -1).  Both sides describe the same
simple module, but they differ in which arrows may be attached at the start
and at the end; this is the sign bookkeeping of Butler and Ringel and is what
makes hooks and cohooks of trivial strings well defined.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from .quiver import Presentation, vertex_key


class InfiniteType(ValueError):
    """Strings of unbounded length exist (a band or an unbounded path)."""


class HookUndefined(ValueError):
    """A hook or cohook operation is blocked by a peak or deep."""


@dataclass(frozen=True, order=True)
class Letter:
    arrow: str
    inverse: bool = False

    def inv(self) -> Letter:
        return Letter(self.arrow, not self.inverse)

    def render(self) -> str:
        return ("~" if self.inverse else "") + self.arrow

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class StringWord:
    letters: tuple[Letter, ...] = ()
    vertex: str | None = None
    side: int = field(default=1, compare=False)

    def __post_init__(self):
        if not self.letters and self.vertex is None:
            raise ValueError("trivial string needs an anchor vertex")
        if self.letters and self.vertex is not None:
            object.__setattr__(self, "vertex", None)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def render(self) -> str:
        if self.is_trivial:
            return f"e({self.vertex})"
        return " ".join(c.render() for c in reversed(self.letters))

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"StringWord({self.render()!r})"


def trivial(vertex: str, side: int = 1) -> StringWord:
    return StringWord((), str(vertex), side)


def word(letters) -> StringWord:
    return StringWord(tuple(letters))


# -- letters over a presentation ---------------------------------------------

def letter_start(pres: Presentation, c: Letter) -> str:
    a = pres.quiver.arrow(c.arrow)
    return a.target if c.inverse else a.source


def letter_end(pres: Presentation, c: Letter) -> str:
    a = pres.quiver.arrow(c.arrow)
    return a.source if c.inverse else a.target


def start_vertex(pres: Presentation, s: StringWord) -> str:
    return s.vertex if s.is_trivial else letter_start(pres, s.letters[0])


def end_vertex(pres: Presentation, s: StringWord) -> str:
    return s.vertex if s.is_trivial else letter_end(pres, s.letters[-1])


def walk_vertices(pres: Presentation, s: StringWord) -> list[str]:
    """The vertices visited by the walk, source first (length ``len(s) + 1``)."""
    if s.is_trivial:
        return [s.vertex]
    return [letter_start(pres, s.letters[0])] + [letter_end(pres, c) for c in s.letters]


def all_letters(pres: Presentation) -> list[Letter]:
    out = []
    for a in pres.arrows:
        out += [Letter(a.name, False), Letter(a.name, True)]
    return out


def letter_key(pres: Presentation, c: Letter):
    return (pres.quiver.arrow_order[c.arrow], int(c.inverse))


# -- the string predicate ----------------------------------------------------

def _runs(letters):
    """Maximal runs of equal direction, as paths in traversal order."""
    run, direction = [], None
    for c in letters:
        if c.inverse != direction and run:
            yield tuple(reversed(run)) if direction else tuple(run)
            run = []
        direction = c.inverse
        run.append(c.arrow)
    if run:
        yield tuple(reversed(run)) if direction else tuple(run)


def string_violation(pres: Presentation, letters) -> str | None:
    """Why ``letters`` is not a string over ``pres``, or ``None`` if it is."""
    letters = tuple(letters)
    q = pres.quiver
    for c in letters:
        if c.arrow not in q.arrow_map:
            return f"unknown arrow {c.arrow!r}"
    for i, (c, d) in enumerate(zip(letters, letters[1:])):
        if letter_end(pres, c) != letter_start(pres, d):
            return f"not composable at position {i + 1}: {d.render()} after {c.render()}"
        if d == c.inv():
            return f"not reduced at position {i + 1}: {d.render()} cancels {c.render()}"
    for run in _runs(letters):
        if pres.is_zero_path(run):
            rel = next(r for r in pres.relations if _has(run, r))
            return "contains the relation " + " ".join(reversed(rel))
    return None


def _has(big, small):
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


def is_string(pres: Presentation, s) -> bool:
    if isinstance(s, StringWord):
        if s.is_trivial:
            return s.vertex in pres.quiver.vertices
        s = s.letters
    return string_violation(pres, s) is None


# -- sign functions ----------------------------------------------------------

@lru_cache(maxsize=None)
def sign_functions(pres: Presentation) -> tuple[dict, dict]:
    """Functions sigma, eps: arrows -> {+1, -1} with the Butler-Ringel
    compatibility conditions (two arrows with a common start get opposite
    sigma, common end opposite eps, and sigma(b) = -eps(a) whenever the path
    a-then-b is not a relation)."""
    g = nx.Graph()
    q = pres.quiver
    for a in q.arrows:
        g.add_node(("s", a.name))
        g.add_node(("e", a.name))
    for v in q.vertices:
        out, inc = q.arrows_from(v), q.arrows_to(v)
        for i in range(len(out)):
            for j in range(i + 1, len(out)):
                g.add_edge(("s", out[i].name), ("s", out[j].name))
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                g.add_edge(("e", inc[i].name), ("e", inc[j].name))
    rels = pres.relation_set
    for a in q.arrows:
        for b in q.arrows_from(a.target):
            if (a.name, b.name) not in rels:
                g.add_edge(("s", b.name), ("e", a.name))
    colour: dict = {}
    for start in sorted(g.nodes, key=lambda n: (q.arrow_order[n[1]], n[0] == "e")):
        if start in colour:
            continue
        colour[start] = 1
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u), key=lambda n: (q.arrow_order[n[1]], n[0])):
                if w not in colour:
                    colour[w] = -colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    raise ValueError("no compatible sign functions: not a string algebra")
    sigma = {a.name: colour[("s", a.name)] for a in q.arrows}
    eps = {a.name: colour[("e", a.name)] for a in q.arrows}
    return sigma, eps


def _sigma(pres, c: Letter) -> int:
    sigma, eps = sign_functions(pres)
    return eps[c.arrow] if c.inverse else sigma[c.arrow]


def _eps(pres, c: Letter) -> int:
    sigma, eps = sign_functions(pres)
    return sigma[c.arrow] if c.inverse else eps[c.arrow]


# -- basic operations --------------------------------------------------------

def inverse(s: StringWord) -> StringWord:
    if s.is_trivial:
        return StringWord((), s.vertex, -s.side)
    return StringWord(tuple(c.inv() for c in reversed(s.letters)))


def prepend(pres: Presentation, s: StringWord, c: Letter) -> StringWord | None:
    """``s c`` in right-to-left notation (``c`` walked first), or ``None``."""
    if s.is_trivial:
        if letter_end(pres, c) != s.vertex or _eps(pres, c) != s.side:
            return None
        return StringWord((c,))
    new = (c,) + s.letters
    window = new[: pres.max_relation_length + 1]
    return StringWord(new) if string_violation(pres, window) is None else None


def append(pres: Presentation, s: StringWord, c: Letter) -> StringWord | None:
    r = prepend(pres, inverse(s), c.inv())
    return None if r is None else inverse(r)


def _prependable(pres, s: StringWord, inverse_letter: bool) -> list[Letter]:
    v = start_vertex(pres, s)
    out = []
    for c in all_letters(pres):
        if c.inverse == inverse_letter and letter_end(pres, c) == v and prepend(pres, s, c) is not None:
            out.append(c)
    return out


@dataclass(frozen=True)
class BoundaryClass:
    starts_in_peak: bool
    starts_in_deep: bool
    ends_in_peak: bool
    ends_in_deep: bool


def starts_in_peak(pres, s) -> bool:
    return not _prependable(pres, s, False)


def starts_in_deep(pres, s) -> bool:
    return not _prependable(pres, s, True)


def ends_in_peak(pres, s) -> bool:
    return starts_in_peak(pres, inverse(s))


def ends_in_deep(pres, s) -> bool:
    return starts_in_deep(pres, inverse(s))


def boundary_class(pres: Presentation, s: StringWord) -> BoundaryClass:
    return BoundaryClass(
        starts_in_peak(pres, s), starts_in_deep(pres, s), ends_in_peak(pres, s), ends_in_deep(pres, s)
    )


def _unique(options, what):
    if len(options) > 1:
        raise ValueError(f"{what} is not unique ({', '.join(map(str, options))}): not a string algebra?")
    return options[0]


def _extend_max(pres, s: StringWord, inverse_letters: bool) -> StringWord:
    while True:
        opts = _prependable(pres, s, inverse_letters)
        if not opts:
            return s
        s = prepend(pres, s, _unique(opts, "maximal extension"))


def add_hook_start(pres: Presentation, s: StringWord) -> StringWord:
    """Prepend the arrow allowed at the start, then as many inverse letters as possible."""
    opts = _prependable(pres, s, False)
    if not opts:
        raise HookUndefined(f"{s} starts in a peak")
    return _extend_max(pres, prepend(pres, s, _unique(opts, "hook arrow")), True)


def add_cohook_start(pres: Presentation, s: StringWord) -> StringWord:
    """Prepend the inverse letter allowed at the start, then as many arrows as possible."""
    opts = _prependable(pres, s, True)
    if not opts:
        raise HookUndefined(f"{s} starts in a deep")
    return _extend_max(pres, prepend(pres, s, _unique(opts, "cohook letter")), False)


def add_hook_end(pres, s):
    return inverse(add_hook_start(pres, inverse(s)))


def add_cohook_end(pres, s):
    return inverse(add_cohook_start(pres, inverse(s)))


def _delete_at_start(pres, s: StringWord, add, first_kind_inverse: bool) -> StringWord:
    # add(D) = (run of the other direction) + (one letter of first_kind) + D
    for i, c in enumerate(s.letters):
        if c.inverse == first_kind_inverse:
            rest = s.letters[i + 1:]
            if rest:
                d = StringWord(rest)
            else:
                v = letter_end(pres, c)
                d = next(
                    (trivial(v, t) for t in (1, -1) if prepend(pres, trivial(v, t), c) is not None),
                    None,
                )
                if d is None:
                    break
            try:
                if add(pres, d) == s:
                    return d
            except HookUndefined:
                pass
            break
    raise HookUndefined(f"{s} is not obtained by adding a {add.__name__[4:]}")


def delete_cohook_start(pres, s: StringWord) -> StringWord:
    """The string D with ``add_cohook_start(D) == s``."""
    return _delete_at_start(pres, s, add_cohook_start, True)


def delete_hook_start(pres, s: StringWord) -> StringWord:
    """The string D with ``add_hook_start(D) == s``."""
    return _delete_at_start(pres, s, add_hook_start, False)


def delete_cohook_end(pres, s):
    return inverse(delete_cohook_start(pres, inverse(s)))


def delete_hook_end(pres, s):
    return inverse(delete_hook_start(pres, inverse(s)))


# -- canonical forms and literals --------------------------------------------

def sort_key(pres: Presentation, s: StringWord):
    """Order used to choose canonical representatives (right-to-left rendering)."""
    if s.is_trivial:
        return (0, vertex_key(s.vertex))
    return (1, tuple(letter_key(pres, c) for c in reversed(s.letters)))


def canonical(pres: Presentation, s: StringWord) -> StringWord:
    if s.is_trivial:
        return trivial(s.vertex, 1)
    t = inverse(s)
    return s if sort_key(pres, s) <= sort_key(pres, t) else t


def same_module(pres, s: StringWord, t: StringWord) -> bool:
    return canonical(pres, s) == canonical(pres, t)


_TRIVIAL = re.compile(r"^e\((\S+)\)$")


def parse_string(pres: Presentation, text: str) -> StringWord:
    """Parse ``beta1 ~alpha ~beta1`` (right-to-left, ``~`` marks inverses) or ``e(v)``."""
    text = text.strip()
    m = _TRIVIAL.match(text)
    if m:
        v = m.group(1)
        if v not in pres.quiver.vertices:
            raise ValueError(f"unknown vertex {v!r}")
        return trivial(v)
    toks = text.split()
    if not toks:
        raise ValueError("empty string literal")
    letters = []
    for t in reversed(toks):
        inv = t.startswith("~")
        name = t[1:] if inv else t
        if name not in pres.quiver.arrow_map:
            raise ValueError(f"unknown arrow {name!r}")
        letters.append(Letter(name, inv))
    why = string_violation(pres, letters)
    if why:
        raise ValueError(f"{text!r} is not a string: {why}")
    return StringWord(tuple(letters))


# -- enumeration and bands ---------------------------------------------------

def _state_graph(pres: Presentation) -> nx.DiGraph:
    k = max(1, pres.max_relation_length - 1)
    g = nx.DiGraph()
    frontier = [(c,) for c in all_letters(pres)]
    seen = set(frontier)
    g.add_nodes_from(frontier)
    while frontier:
        nxt = []
        for st in frontier:
            v = letter_end(pres, st[-1])
            for c in all_letters(pres):
                if letter_start(pres, c) != v:
                    continue
                w = st + (c,)
                if string_violation(pres, w) is not None:
                    continue
                new = w[-k:]
                g.add_edge(st, new, letter=c)
                if new not in seen:
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return g


def _primitive(letters: tuple) -> tuple:
    n = len(letters)
    for p in range(1, n + 1):
        if n % p == 0 and letters[:p] * (n // p) == letters:
            return letters[:p]
    return letters


def _canonical_cycle(pres, letters: tuple) -> tuple:
    cands = []
    for w in (letters, tuple(c.inv() for c in reversed(letters))):
        for i in range(len(w)):
            cands.append(w[i:] + w[:i])
    return min(cands, key=lambda w: tuple(letter_key(pres, c) for c in reversed(w)))


def find_bands(pres: Presentation) -> list[StringWord]:
    """All bands, up to rotation and inversion, each given by one cyclic word."""
    g = _state_graph(pres)
    found = set()
    for cyc in nx.simple_cycles(g):
        nodes = cyc + [cyc[0]]
        w = tuple(g.edges[u, v]["letter"] for u, v in zip(nodes, nodes[1:]))
        w = _primitive(w)
        if all(c.inverse for c in w) or not any(c.inverse for c in w):
            continue
        reps = -(-(len(w) + pres.max_relation_length) // len(w)) + 1
        if string_violation(pres, w * reps) is not None:
            continue
        found.add(_canonical_cycle(pres, w))
    return [StringWord(w) for w in sorted(found, key=lambda w: (len(w), [letter_key(pres, c) for c in reversed(w)]))]


def is_finite_type(pres: Presentation) -> bool:
    return nx.is_directed_acyclic_graph(_state_graph(pres))


def enumerate_strings(pres: Presentation) -> list[StringWord]:
    """One canonical string per string module, trivial strings first."""
    if not is_finite_type(pres):
        bands = find_bands(pres)
        what = f"band {bands[0]}" if bands else "an unbounded nonzero path"
        raise InfiniteType(f"{pres.quiver.name} has strings of unbounded length ({what})")
    out = {trivial(v) for v in pres.vertices}
    frontier = [StringWord((c,)) for c in all_letters(pres) if not c.inverse]
    frontier += [inverse(s) for s in frontier]
    while frontier:
        nxt = []
        for s in frontier:
            out.add(canonical(pres, s))
            v = end_vertex(pres, s)
            for c in all_letters(pres):
                if letter_start(pres, c) == v:
                    t = append(pres, s, c)
                    if t is not None:
                        nxt.append(t)
        frontier = nxt
    return sorted(out, key=lambda s: (len(s), sort_key(pres, s)))


# -- Auslander-Reiten combinatorics -----------------------------------------

def _or_none(fn, *args):
    try:
        return fn(*args)
    except HookUndefined:
        return None


def _start_mod(pres, s):
    if starts_in_peak(pres, s):
        return _or_none(delete_cohook_start, pres, s)
    return add_hook_start(pres, s)


def _end_mod(pres, s):
    r = _start_mod(pres, inverse(s))
    return None if r is None else inverse(r)


def _start_comod(pres, s):
    if starts_in_deep(pres, s):
        return _or_none(delete_hook_start, pres, s)
    return add_cohook_start(pres, s)


def _end_comod(pres, s):
    r = _start_comod(pres, inverse(s))
    return None if r is None else inverse(r)


@dataclass(frozen=True)
class MeshShape:
    """Strings of an almost split sequence as predicted by the string rules."""

    left: StringWord
    middle: tuple[StringWord, ...]
    right: StringWord


def combinatorial_injective(pres, s) -> bool:
    return (
        starts_in_peak(pres, s) and ends_in_peak(pres, s)
        and (_start_mod(pres, s) is None or _end_mod(pres, s) is None)
    )


def combinatorial_projective(pres, s) -> bool:
    return (
        starts_in_deep(pres, s) and ends_in_deep(pres, s)
        and (_start_comod(pres, s) is None or _end_comod(pres, s) is None)
    )


def mesh_from(pres: Presentation, s: StringWord) -> MeshShape | None:
    """The sequence starting at M(s) by the hook/cohook rules; ``None`` if M(s)
    is injective by the same rules."""
    if combinatorial_injective(pres, s):
        return None
    a, b = _start_mod(pres, s), _end_mod(pres, s)
    right = _end_mod(pres, a) if a is not None else _start_mod(pres, b)
    if right is None:
        return None
    return MeshShape(s, tuple(x for x in (a, b) if x is not None), right)


def mesh_to(pres: Presentation, s: StringWord) -> MeshShape | None:
    """The sequence ending at M(s) by the dual rules; ``None`` if projective."""
    if combinatorial_projective(pres, s):
        return None
    a, b = _start_comod(pres, s), _end_comod(pres, s)
    left = _end_comod(pres, a) if a is not None else _start_comod(pres, b)
    if left is None:
        return None
    return MeshShape(left, tuple(x for x in (a, b) if x is not None), s)


def tau_inverse_string(pres, s) -> StringWord | None:
    m = mesh_from(pres, s)
    return None if m is None else canonical(pres, m.right)


def tau_string(pres, s) -> StringWord | None:
    m = mesh_to(pres, s)
    return None if m is None else canonical(pres, m.left)
