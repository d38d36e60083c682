"""Isomorphism-class enumeration for small graphs.

Classes are produced by vertex augmentation: every representative of
order n-1 is extended by one new vertex with every possible neighborhood,
and the children are deduplicated by an exact canonical form.  Class
counts are checked against the known census (1, 2, 4, 11, 34, 156, 1044,
12346 for n = 1..8) every time a level is built, so a canonicalization
bug cannot pass silently.

The canonical form is the minimum adjacency bit-string, column by column,
over vertex orderings compatible with the stable color refinement
(degree, then sorted neighbor colors, iterated to a fixed point).  The
search prunes on bit-string prefixes and explores one representative per
interchangeable-twin class; refinement classes are canonically ordered,
so the restriction keeps the form exact while making unions of cliques
and other symmetric graphs cheap instead of factorial.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graphs import Graph

KNOWN_CLASS_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
BUILTIN_ORDER_CAP = 8

_LEVELS: dict[int, list[tuple[int, ...]]] = {0: [()]}


def _wl_colors(n: int, rows: tuple[int, ...]) -> list[int]:
    """Stable, label-independent vertex colors (iterated refinement)."""
    colors = [rows[v].bit_count() for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            neigh = []
            m = rows[v]
            while m:
                neigh.append(colors[(m & -m).bit_length() - 1])
                m &= m - 1
            neigh.sort()
            sigs.append((colors[v], tuple(neigh)))
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [rank[sigs[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _twin_ids(n: int, rows: tuple[int, ...]) -> list[int]:
    """Group vertices whose transposition is an automorphism.

    u and v are interchangeable iff their rows agree outside {u, v};
    the relation is transitive, so a first-representative sweep groups
    correctly.
    """
    ids = list(range(n))
    for u in range(n):
        if ids[u] != u:
            continue
        for v in range(u + 1, n):
            if ids[v] != v:
                continue
            drop = ~((1 << u) | (1 << v))
            if rows[u] & drop == rows[v] & drop:
                ids[v] = u
    return ids


def _canonical_cols(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical column bit-string; entry d holds the d bits of column d."""
    if n <= 1:
        return (0,) * n
    colors = _wl_colors(n, rows)
    order = sorted(range(n), key=lambda v: colors[v])
    if len(set(colors)) == n:
        # discrete refinement: the ordering is forced
        cols = [0] * n
        for d in range(1, n):
            rv = rows[order[d]]
            c = 0
            for i in range(d):
                c = (c << 1) | ((rv >> order[i]) & 1)
            cols[d] = c
        return tuple(cols)
    pos_color = [colors[v] for v in order]
    twin = _twin_ids(n, rows)
    best: list[int] | None = None
    perm = [0] * n
    used = [False] * n
    cols = [0] * n

    def dfs(d: int) -> None:
        nonlocal best
        if d == n:
            if best is None or cols < best:
                best = cols[:]
            return
        want = pos_color[d]
        seen = set()
        cands = []
        for v in range(n):
            if used[v] or colors[v] != want:
                continue
            if twin[v] in seen:
                continue
            seen.add(twin[v])
            rv = rows[v]
            c = 0
            for i in range(d):
                c = (c << 1) | ((rv >> perm[i]) & 1)
            cands.append((c, v))
        cands.sort()
        for c, v in cands:
            cols[d] = c
            if best is not None:
                worse = False
                for i in range(d + 1):
                    if cols[i] != best[i]:
                        worse = cols[i] > best[i]
                        break
                if worse:
                    break  # candidates are sorted; the rest only grow
            perm[d] = v
            used[v] = True
            dfs(d + 1)
            used[v] = False
        cols[d] = 0

    dfs(0)
    return tuple(best)


def _graph_from_cols(n: int, cols: tuple[int, ...]) -> Graph:
    rows = [0] * n
    for d in range(1, n):
        c = cols[d]
        for i in range(d):
            if (c >> (d - 1 - i)) & 1:
                rows[d] |= 1 << i
                rows[i] |= 1 << d
    return Graph(n, tuple(rows))


def canonical_key(g: Graph) -> tuple:
    """Hashable isomorphism invariant: equal keys iff isomorphic graphs."""
    return (g.n, _canonical_cols(g.n, g.rows))


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g (deterministic certificate)."""
    return _graph_from_cols(g.n, _canonical_cols(g.n, g.rows))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and canonical_key(g1) == canonical_key(g2)


def _extend_level(parents: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    """All order-n canonical forms reachable by adding one vertex."""
    out: set[tuple[int, ...]] = set()
    new_bit = 1 << (n - 1)
    for prows in parents:
        for mask in range(1 << (n - 1)):
            rows = [0] * n
            m = mask
            for v in range(n - 1):
                rows[v] = prows[v]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                rows[v] |= new_bit
            rows[n - 1] = mask
            out.add(_canonical_cols(n, tuple(rows)))
    return out


def _build_level(n: int, jobs: int = 1) -> None:
    if n in _LEVELS:
        return
    if n - 1 not in _LEVELS:
        _build_level(n - 1, jobs)
    parents = _LEVELS[n - 1]
    if jobs > 1 and len(parents) >= 4 * jobs:
        from multiprocessing import Pool

        chunks = [parents[i::jobs] for i in range(jobs)]
        with Pool(jobs) as pool:
            partial = pool.starmap(_extend_level, [(c, n) for c in chunks])
        keys = set().union(*partial)
    else:
        keys = _extend_level(parents, n)
    reps = [_graph_from_cols(n, cols).rows for cols in sorted(keys)]
    if n in KNOWN_CLASS_COUNTS and len(reps) != KNOWN_CLASS_COUNTS[n]:
        raise RuntimeError(
            f"enumeration produced {len(reps)} classes of order {n}, "
            f"expected {KNOWN_CLASS_COUNTS[n]}"
        )
    _LEVELS[n] = reps


def isomorphism_classes(n: int, jobs: int = 1) -> list[Graph]:
    """One representative per isomorphism class of order n (n <= 8)."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > BUILTIN_ORDER_CAP:
        raise ValueError(
            f"built-in enumeration stops at n = {BUILTIN_ORDER_CAP}; "
            "supply a graph6 file for larger orders"
        )
    _build_level(n, jobs=max(1, jobs))
    return [Graph(n, rows) for rows in _LEVELS[n]]


def enumerate_graphs(n: int, jobs: int = 1, source: Iterable[Graph] | None = None) -> Iterator[Graph]:
    """Stream of isomorphism-class representatives of order n.

    ``source`` (typically ``read_graph6_file``) overrides the built-in
    path; each supplied graph is checked for the right order, and class
    uniqueness of the file is trusted as documented.
    """
    if source is not None:
        for i, g in enumerate(source):
            if g.n != n:
                raise ValueError(f"graph {i} in source has order {g.n}, expected {n}")
            yield g
        return
    yield from isomorphism_classes(n, jobs=jobs)
