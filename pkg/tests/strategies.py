"""Random small string algebras for property tests."""

from functools import lru_cache

from hypothesis import assume
from hypothesis import strategies as st

from strad.quiver import (
    Arrow,
    InfiniteDimensional,
    Presentation,
    Quiver,
    is_string_algebra,
    parse_presentation,
    render_presentation,
)
from strad.radical import RadicalTable
from strad.strings import find_bands


@st.composite
def string_algebras(draw, max_vertices=4, max_arrows=6):
    nv = draw(st.integers(1, max_vertices))
    verts = [str(i) for i in range(1, nv + 1)]
    pairs = draw(st.lists(st.tuples(st.sampled_from(verts), st.sampled_from(verts)), min_size=2, max_size=max_arrows))
    arrows = []
    outdeg = dict.fromkeys(verts, 0)
    indeg = dict.fromkeys(verts, 0)
    for s, t in pairs:
        if outdeg[s] < 2 and indeg[t] < 2:
            arrows.append(Arrow(f"a{len(arrows)}", s, t))
            outdeg[s] += 1
            indeg[t] += 1
    rels = []
    for a in arrows:
        for b in arrows:
            if a.target == b.source and draw(st.booleans()):
                rels.append((a.name, b.name))
    rel_set = set(rels)
    # enforce at most one nonzero continuation on each side of every arrow
    for a in arrows:
        after = [b for b in arrows if b.source == a.target and (a.name, b.name) not in rel_set]
        for b in after[1:]:
            rel_set.add((a.name, b.name))
        before = [c for c in arrows if c.target == a.source and (c.name, a.name) not in rel_set]
        for c in before[1:]:
            rel_set.add((c.name, a.name))
    pres = Presentation(Quiver(tuple(verts), tuple(arrows), "R"), tuple(sorted(rel_set)))
    assume(is_string_algebra(pres))
    try:
        pres.nonzero_paths
    except InfiniteDimensional:
        assume(False)
    assume(not find_bands(pres))
    return render_presentation(pres)


@lru_cache(maxsize=256)
def table_of(text: str) -> RadicalTable:
    return RadicalTable(parse_presentation(text))
