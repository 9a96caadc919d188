"""Quivers, monomial relations and the textual presentation format.

Paths are stored in traversal order (first-traversed arrow first).  Anything
shown to a user is rendered right-to-left, so the stored path
``("beta1", "beta2")`` prints as ``beta2 beta1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .fields import QQ, parse_field


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InfiniteDimensional(ValueError):
    """The bound path algebra has nonzero paths of unbounded length."""


def vertex_key(v: str):
    return (0, int(v), "") if v.isdigit() else (1, 0, v)


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    name: str = "Q"

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex identifiers")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        verts = set(self.vertices)
        for a in self.arrows:
            if a.source not in verts or a.target not in verts:
                raise ValueError(f"arrow {a.name} uses an undeclared vertex")

    @cached_property
    def arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def arrow_order(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self.arrow_map[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]


@dataclass(frozen=True)
class Path:
    """A path in traversal order, or the trivial path at ``vertex``."""

    arrows: tuple[str, ...] = ()
    vertex: str | None = None

    def __post_init__(self):
        if not self.arrows and self.vertex is None:
            raise ValueError("a trivial path needs an anchor vertex")

    def __len__(self):
        return len(self.arrows)

    def render(self) -> str:
        if not self.arrows:
            return f"e({self.vertex})"
        return " ".join(reversed(self.arrows))

    def __str__(self):
        return self.render()


def check_path(quiver: Quiver, arrows) -> Path:
    arrows = tuple(arrows)
    for a in arrows:
        quiver.arrow(a)
    for a, b in zip(arrows, arrows[1:]):
        if quiver.arrow(a).target != quiver.arrow(b).source:
            raise ValueError(f"path {' '.join(reversed(arrows))} is not composable at {a} -> {b}")
    return Path(arrows)


def _contains(big: tuple, small: tuple) -> bool:
    k = len(small)
    return any(big[i:i + k] == small for i in range(len(big) - k + 1))


def normalize_relations(relations) -> tuple[tuple[str, ...], ...]:
    """Drop duplicates and relations already implied by a shorter one."""
    uniq = []
    for r in relations:
        r = tuple(r)
        if r not in uniq:
            uniq.append(r)
    return tuple(r for r in uniq if not any(o != r and _contains(r, o) for o in uniq))


@dataclass(frozen=True)
class Presentation:
    """The bound path algebra kQ/I with I generated by the given paths."""

    quiver: Quiver
    relations: tuple[tuple[str, ...], ...] = ()
    field: object = field(default=QQ)

    def __post_init__(self):
        rels = []
        for r in self.relations:
            if len(r) < 2:
                raise ValueError(f"relation {' '.join(reversed(r))} has length < 2")
            rels.append(check_path(self.quiver, r).arrows)
        object.__setattr__(self, "relations", normalize_relations(rels))

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    @cached_property
    def relation_set(self) -> frozenset:
        return frozenset(self.relations)

    @cached_property
    def max_relation_length(self) -> int:
        return max((len(r) for r in self.relations), default=2)

    def is_zero_path(self, arrows) -> bool:
        arrows = tuple(arrows)
        return any(_contains(arrows, r) for r in self.relations)

    def with_field(self, field) -> Presentation:
        return Presentation(self.quiver, self.relations, field)

    @cached_property
    def nonzero_paths(self) -> tuple[Path, ...]:
        """All paths not in the ideal, trivial paths included."""
        out = [Path((), v) for v in self.vertices]
        frontier = [(a.name,) for a in self.arrows if not self.is_zero_path((a.name,))]
        # longer than the number of (R-1)-windows plus R means a window repeats
        bound = len(self.arrows) ** (self.max_relation_length - 1) + self.max_relation_length
        while frontier:
            out.extend(Path(p) for p in frontier)
            nxt = []
            for p in frontier:
                if len(p) > bound:
                    raise InfiniteDimensional("nonzero paths of unbounded length")
                last = self.quiver.arrow(p[-1]).target
                for a in self.quiver.arrows_from(last):
                    q = p + (a.name,)
                    if not self.is_zero_path(q[-self.max_relation_length:]):
                        nxt.append(q)
            frontier = nxt
        return tuple(out)

    def path_source(self, path: Path) -> str:
        return path.vertex if not path.arrows else self.quiver.arrow(path.arrows[0]).source

    def path_target(self, path: Path) -> str:
        return path.vertex if not path.arrows else self.quiver.arrow(path.arrows[-1]).target


# -- text format -------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z0-9_']+$")


def _tokens(line: str):
    for m in re.finditer(r"\S+", line):
        yield m.group(0), m.start() + 1


def parse_presentation(text: str) -> Presentation:
    """Parse the line-oriented presentation format.

    Relations list arrows in traversal order: ``relation gamma1 beta1`` is the
    path beta1*gamma1 in right-to-left notation.
    """
    name = "Q"
    vertices: list[str] = []
    arrows: list[Arrow] = []
    relations: list[tuple[tuple[str, ...], int]] = []
    fld = QQ
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        kw, kcol = toks[0]
        args = toks[1:]
        if kw == "quiver":
            if len(args) != 1:
                raise ParseError("expected 'quiver <name>'", lineno, kcol)
            name = args[0][0]
        elif kw == "vertex":
            if not args:
                raise ParseError("expected at least one vertex id", lineno, kcol + len(kw))
            for v, col in args:
                if not _IDENT.match(v):
                    raise ParseError(f"bad vertex id {v!r}", lineno, col)
                if v in vertices:
                    raise ParseError(f"duplicate vertex {v!r}", lineno, col)
                vertices.append(v)
        elif kw == "arrow":
            m = re.match(r"\s*arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)\s*$", line)
            if not m:
                raise ParseError("expected 'arrow <name> : <src> -> <tgt>'", lineno, kcol)
            aname, src, tgt = m.groups()
            if not _IDENT.match(aname):
                raise ParseError(f"bad arrow name {aname!r}", lineno, m.start(1) + 1)
            if any(a.name == aname for a in arrows):
                raise ParseError(f"duplicate arrow {aname!r}", lineno, m.start(1) + 1)
            for v, g in ((src, 2), (tgt, 3)):
                if v not in vertices:
                    raise ParseError(f"unknown vertex {v!r}", lineno, m.start(g) + 1)
            arrows.append(Arrow(aname, src, tgt))
        elif kw == "relation":
            if len(args) < 2:
                raise ParseError("a relation needs at least two arrows", lineno, kcol)
            path = []
            known = {a.name: a for a in arrows}
            for tok, col in args:
                if tok in ("+", "-") or not _IDENT.match(tok) or tok[0].isdigit():
                    raise ParseError(
                        f"only monomial relations are supported (got {tok!r})", lineno, col
                    )
                if tok not in known:
                    raise ParseError(f"unknown arrow {tok!r}", lineno, col)
                if path and known[path[-1]].target != known[tok].source:
                    raise ParseError(
                        f"relation is not composable: {tok} cannot follow {path[-1]}", lineno, col
                    )
                path.append(tok)
            relations.append((tuple(path), lineno))
        elif kw == "field":
            if len(args) != 1:
                raise ParseError("expected 'field q|fp:<prime>'", lineno, kcol)
            try:
                fld = parse_field(args[0][0])
            except ValueError as exc:
                raise ParseError(str(exc), lineno, args[0][1]) from None
        else:
            raise ParseError(f"unknown statement {kw!r}", lineno, kcol)
    if not vertices:
        raise ParseError("no vertices declared", 1, 1)
    return Presentation(Quiver(tuple(vertices), tuple(arrows), name), tuple(r for r, _ in relations), fld)


def render_presentation(pres: Presentation) -> str:
    q = pres.quiver
    lines = [f"quiver {q.name}", "vertex " + " ".join(q.vertices)]
    lines += [f"arrow {a.name} : {a.source} -> {a.target}" for a in q.arrows]
    lines += ["relation " + " ".join(r) for r in pres.relations]
    if pres.field != QQ:
        lines.append(f"field {pres.field.name}")
    return "\n".join(lines) + "\n"


# -- string algebra axioms ---------------------------------------------------

@dataclass
class Violation:
    condition: int
    witness: str


@dataclass
class StringAlgebraCheck:
    ok: bool
    violations: list[Violation]

    def __bool__(self):
        return self.ok


def is_string_algebra(pres: Presentation) -> StringAlgebraCheck:
    q = pres.quiver
    bad: list[Violation] = []
    for v in q.vertices:
        out, inc = q.arrows_from(v), q.arrows_to(v)
        if len(out) > 2:
            bad.append(Violation(1, f"{len(out)} arrows start at {v}: {', '.join(a.name for a in out)}"))
        if len(inc) > 2:
            bad.append(Violation(1, f"{len(inc)} arrows end at {v}: {', '.join(a.name for a in inc)}"))
    rels = pres.relation_set
    for a in q.arrows:
        after = [b.name for b in q.arrows_from(a.target) if (a.name, b.name) not in rels]
        if len(after) > 1:
            bad.append(Violation(2, f"{' and '.join(b + ' ' + a.name for b in after)} are all nonzero"))
        before = [c.name for c in q.arrows_to(a.source) if (c.name, a.name) not in rels]
        if len(before) > 1:
            bad.append(Violation(2, f"{' and '.join(a.name + ' ' + c for c in before)} are all nonzero"))
    # condition 3 (monomial ideal) holds by construction of Presentation
    return StringAlgebraCheck(not bad, bad)


def build_a_nm(n: int, m: int, field=QQ) -> Presentation:
    """The algebra A(n, m): a loop alpha at 1, a beta-tail 1 -> ... -> n and a
    gamma-tail n+m -> ... -> n+1 -> 1."""
    if n < 2 or m < 0:
        raise ValueError(f"A(n,m) needs n >= 2 and m >= 0, got ({n}, {m})")
    vertices = tuple(str(i) for i in range(1, n + m + 1))
    arrows = [Arrow("alpha", "1", "1")]
    arrows += [Arrow(f"beta{i}", str(i), str(i + 1)) for i in range(1, n)]
    if m >= 1:
        arrows.append(Arrow("gamma1", str(n + 1), "1"))
    arrows += [Arrow(f"gamma{j}", str(n + j), str(n + j - 1)) for j in range(2, m + 1)]
    relations = [("alpha", "alpha")]
    if m >= 1:
        relations.append(("gamma1", "beta1"))
    if n >= 3:
        relations.append(("beta1", "beta2"))
    return Presentation(Quiver(vertices, tuple(arrows), f"A({n},{m})"), tuple(relations), field)
