"""Finite quivers, paths, simple cycles, and cycle contraction.

Vertex and arrow ids are ints or strings.  All orderings in this module are
deterministic: ids compare by (type rank, value) with ints before strings,
paths by (length, arrow index sequence), cycles by (length, canonical
rotation).  A simple cycle is stored in the rotation that starts at its
smallest vertex; enumeration returns one representative per rotation class.

Paths compose left-to-right in application order: `arrows[0]` is applied
first, so consecutive arrows satisfy src(arrows[i+1]) == tgt(arrows[i]).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import InvalidCycle, InvalidInput, InvalidPath

VertexId = int | str
ArrowId = int | str


def id_key(value: VertexId) -> tuple:
    """Total order on ids: all ints first, then strings."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InvalidInput(f"ids must be ints or strings, got {value!r}")
    if isinstance(value, int):
        return (0, value, "")
    return (1, 0, value)


@dataclass(frozen=True)
class Arrow:
    id: ArrowId
    src: VertexId
    tgt: VertexId


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[VertexId, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidInput("duplicate vertex ids")
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise InvalidInput("duplicate arrow ids")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.src not in vset or a.tgt not in vset:
                raise InvalidInput(f"arrow {a.id!r} has endpoint outside the quiver")

    def arrow(self, arrow_id: ArrowId) -> Arrow:
        found = _arrow_map(self).get(arrow_id)
        if found is None:
            raise InvalidInput(f"no arrow with id {arrow_id!r}")
        return found

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in self.arrows],
        }

    @staticmethod
    def from_json(data: dict) -> "Quiver":
        try:
            vertices = tuple(data["vertices"])
            arrows = tuple(
                Arrow(a["id"], a["src"], a["tgt"]) for a in data["arrows"]
            )
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"malformed quiver JSON: {exc}") from exc
        return Quiver(vertices, arrows)


@lru_cache(maxsize=512)
def _arrow_map(q: Quiver) -> dict[ArrowId, Arrow]:
    return {a.id: a for a in q.arrows}


@lru_cache(maxsize=512)
def _arrow_index(q: Quiver) -> dict[ArrowId, int]:
    return {a.id: i for i, a in enumerate(q.arrows)}


@lru_cache(maxsize=512)
def _out_arrows(q: Quiver) -> dict[VertexId, tuple[Arrow, ...]]:
    out: dict[VertexId, list[Arrow]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        out[a.src].append(a)
    return {v: tuple(arrs) for v, arrs in out.items()}


@lru_cache(maxsize=512)
def _in_arrows(q: Quiver) -> dict[VertexId, tuple[Arrow, ...]]:
    inc: dict[VertexId, list[Arrow]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        inc[a.tgt].append(a)
    return {v: tuple(arrs) for v, arrs in inc.items()}


def arrows_into(q: Quiver, v: VertexId) -> tuple[Arrow, ...]:
    """Arrows with target v, in deterministic (id) order."""
    if v not in set(q.vertices):
        raise InvalidInput(f"no vertex {v!r}")
    return tuple(sorted(_in_arrows(q)[v], key=lambda a: id_key(a.id)))


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence with an explicit base vertex.

    The base vertex is the source; it disambiguates the trivial path.
    """

    base: VertexId
    arrows: tuple[ArrowId, ...] = ()

    @staticmethod
    def trivial(v: VertexId) -> "Path":
        return Path(v, ())

    def is_trivial(self) -> bool:
        return not self.arrows

    def __len__(self) -> int:
        return len(self.arrows)


def validate_path(q: Quiver, p: Path) -> None:
    if p.base not in set(q.vertices):
        raise InvalidPath(f"base vertex {p.base!r} not in quiver")
    here = p.base
    for aid in p.arrows:
        a = _arrow_map(q).get(aid)
        if a is None:
            raise InvalidPath(f"no arrow {aid!r}")
        if a.src != here:
            raise InvalidPath(f"arrow {aid!r} does not compose at {here!r}")
        here = a.tgt


def path_source(q: Quiver, p: Path) -> VertexId:
    return p.base


def path_target(q: Quiver, p: Path) -> VertexId:
    if not p.arrows:
        return p.base
    return q.arrow(p.arrows[-1]).tgt


def path_vertices(q: Quiver, p: Path) -> tuple[VertexId, ...]:
    """The visited vertex sequence, length len(p) + 1."""
    seq = [p.base]
    for aid in p.arrows:
        seq.append(q.arrow(aid).tgt)
    return tuple(seq)


def path_key(q: Quiver, p: Path) -> tuple:
    idx = _arrow_index(q)
    return (len(p.arrows), tuple(idx[a] for a in p.arrows), id_key(p.base))


def compose(q: Quiver, first: Path, then: Path) -> Path:
    """first, then `then`; requires target(first) == source(then)."""
    if path_target(q, first) != then.base:
        raise InvalidPath("paths do not compose")
    return Path(first.base, first.arrows + then.arrows)


@dataclass(frozen=True)
class SimpleCycle:
    """A simple cycle in canonical rotation (starts at its smallest vertex)."""

    arrows: tuple[ArrowId, ...]

    def __len__(self) -> int:
        return len(self.arrows)


def make_simple_cycle(q: Quiver, arrow_ids: Iterable[ArrowId]) -> SimpleCycle:
    """Validate an arrow sequence as a simple cycle and canonicalize it."""
    ids = tuple(arrow_ids)
    if not ids:
        raise InvalidCycle("a cycle has at least one arrow")
    try:
        arrs = [q.arrow(a) for a in ids]
    except InvalidInput as exc:
        raise InvalidCycle(str(exc)) from exc
    for prev, nxt in zip(arrs, arrs[1:]):
        if prev.tgt != nxt.src:
            raise InvalidCycle("arrows do not compose")
    if arrs[-1].tgt != arrs[0].src:
        raise InvalidCycle("arrow sequence does not close up")
    sources = [a.src for a in arrs]
    if len(set(sources)) != len(sources):
        raise InvalidCycle("cycle revisits a vertex, so it is not simple")
    start = min(range(len(arrs)), key=lambda i: id_key(sources[i]))
    return SimpleCycle(ids[start:] + ids[:start])


def cycle_vertices(q: Quiver, c: SimpleCycle) -> tuple[VertexId, ...]:
    return tuple(q.arrow(a).src for a in c.arrows)


def cycle_base(q: Quiver, c: SimpleCycle) -> VertexId:
    return q.arrow(c.arrows[0]).src


def rotate_cycle_to(q: Quiver, c: SimpleCycle, v: VertexId) -> Path:
    """The cycle as a path based at one of its vertices."""
    verts = cycle_vertices(q, c)
    if v not in verts:
        raise InvalidCycle(f"vertex {v!r} is not on the cycle")
    i = verts.index(v)
    return Path(v, c.arrows[i:] + c.arrows[:i])


@lru_cache(maxsize=512)
def enumerate_simple_cycles(q: Quiver) -> tuple[SimpleCycle, ...]:
    """All simple cycles, one per rotation class, canonically ordered.

    Each cycle is found from its smallest vertex by a DFS that only visits
    vertices larger than the start, which yields exactly one rotation per
    class without a separate dedup pass.
    """
    order = {v: i for i, v in enumerate(sorted(q.vertices, key=id_key))}
    out_map = _out_arrows(q)
    found: list[SimpleCycle] = []

    def walk(start: VertexId, here: VertexId, trail: list[ArrowId],
             seen: set[VertexId]) -> None:
        for a in out_map[here]:
            if a.tgt == start:
                found.append(SimpleCycle(tuple(trail + [a.id])))
            elif order[a.tgt] > order[start] and a.tgt not in seen:
                seen.add(a.tgt)
                trail.append(a.id)
                walk(start, a.tgt, trail, seen)
                trail.pop()
                seen.remove(a.tgt)

    for start in sorted(q.vertices, key=id_key):
        walk(start, start, [], {start})

    idx = _arrow_index(q)
    found.sort(key=lambda c: (len(c.arrows), tuple(idx[a] for a in c.arrows)))
    return tuple(found)


def has_transverse_cycles(q: Quiver) -> bool:
    """True iff every two distinct simple cycles share at most one vertex."""
    cycles = enumerate_simple_cycles(q)
    vsets = [set(cycle_vertices(q, c)) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if len(vsets[i] & vsets[j]) > 1:
                return False
    return True


@lru_cache(maxsize=512)
def acyclic_paths(q: Quiver) -> tuple[Path, ...]:
    """All paths visiting no vertex twice, including the trivial ones.

    Ordered by (length, arrow index sequence, base vertex).
    """
    out_map = _out_arrows(q)
    found: list[Path] = [Path.trivial(v) for v in q.vertices]

    def walk(base: VertexId, here: VertexId, trail: list[ArrowId],
             seen: set[VertexId]) -> None:
        for a in out_map[here]:
            if a.tgt in seen:
                continue
            trail.append(a.id)
            found.append(Path(base, tuple(trail)))
            seen.add(a.tgt)
            walk(base, a.tgt, trail, seen)
            seen.remove(a.tgt)
            trail.pop()

    for v in q.vertices:
        walk(v, v, [], {v})
    found.sort(key=lambda p: path_key(q, p))
    return tuple(found)


def first_cycle_segment(vertex_seq: tuple[VertexId, ...]) -> tuple[int, int] | None:
    """Earliest (i, j) with vertex_seq[i] == vertex_seq[j], i < j.

    Minimality of j makes the enclosed segment a simple cycle: no vertex
    repeats strictly before position j.
    """
    seen: dict[VertexId, int] = {}
    for j, v in enumerate(vertex_seq):
        if v in seen:
            return (seen[v], j)
        seen[v] = j
    return None


def contract_cycle(q: Quiver, c: SimpleCycle) -> tuple[Quiver, dict[VertexId, VertexId]]:
    """Collapse a simple cycle to its smallest vertex.

    The cycle's arrows disappear; every other arrow survives with endpoints
    mapped through the collapse.  Returns the new quiver and the vertex map.
    """
    make_simple_cycle(q, c.arrows)
    cverts = cycle_vertices(q, c)
    survivor = min(cverts, key=id_key)
    vmap = {v: (survivor if v in set(cverts) else v) for v in q.vertices}
    removed = set(c.arrows)
    new_vertices = tuple(v for v in q.vertices if v == survivor or v not in set(cverts))
    new_arrows = tuple(
        Arrow(a.id, vmap[a.src], vmap[a.tgt])
        for a in q.arrows
        if a.id not in removed
    )
    return Quiver(new_vertices, new_arrows), vmap
