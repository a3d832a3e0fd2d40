"""Connected cubic planar bipartite graphs and their face-incidence codes.

A graph is given with an explicit face list: each face is the cyclic
vertex sequence bounding it, read off a plane drawing.  Validation
(3-regular, bipartite, connected, every edge on exactly two faces,
Euler count) certifies the face data; no planarity testing is done on
abstract graphs.

Deleting two differently-coloured faces from the face-vertex incidence
matrix of such a graph leaves a generator matrix of a self-dual code of
length |V|, and the row space does not depend on the face pair chosen.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .gf2 import BinaryCode, BinaryMatrix


class GraphError(ValueError):
    """Raised on malformed graph data or failed validation."""


@dataclass
class PlanarBicubicGraph:
    """Vertices 1..n, undirected edges, and faces as cyclic vertex lists."""

    n: int
    edges: set[frozenset[int]]
    faces: list[tuple[int, ...]]
    name: str = ""

    @classmethod
    def build(cls, n: int, edge_pairs, face_cycles, name: str = "") -> PlanarBicubicGraph:
        edges = set()
        for a, b in edge_pairs:
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise GraphError(f"bad edge ({a},{b}) for n={n}")
            edges.add(frozenset((a, b)))
        faces = [tuple(f) for f in face_cycles]
        return cls(n=n, edges=edges, faces=faces, name=name)

    def face_edges(self, face: tuple[int, ...]) -> list[frozenset[int]]:
        return [
            frozenset((face[i], face[(i + 1) % len(face)]))
            for i in range(len(face))
        ]

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass
class ValidationReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [f"{name}: {detail}" for name, ok, detail in self.checks if not ok]


def validate(g: PlanarBicubicGraph) -> ValidationReport:
    """Check the defining conditions; the face list certifies planarity."""
    rep = ValidationReport()

    degs = [g.degree(v) for v in range(1, g.n + 1)]
    bad = [v + 1 for v, d in enumerate(degs) if d != 3]
    rep.add("cubic", not bad, f"vertices with degree != 3: {bad}" if bad else "")

    color = {1: 0}
    queue = deque([1])
    adj: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    bipartite = True
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in color:
                color[w] = 1 - color[v]
                queue.append(w)
            elif color[w] == color[v]:
                bipartite = False
    rep.add("bipartite", bipartite, "" if bipartite else "odd cycle found")
    rep.add(
        "connected",
        len(color) == g.n,
        "" if len(color) == g.n else f"reached {len(color)} of {g.n} vertices",
    )

    counts: dict[frozenset[int], int] = {e: 0 for e in g.edges}
    phantom = []
    for face in g.faces:
        for e in g.face_edges(face):
            if e in counts:
                counts[e] += 1
            else:
                phantom.append(tuple(sorted(e)))
    wrong = [tuple(sorted(e)) for e, c in counts.items() if c != 2]
    rep.add(
        "edges-on-two-faces",
        not wrong and not phantom,
        f"edges not on exactly two faces: {wrong}; face edges not in graph: {phantom}"
        if wrong or phantom
        else "",
    )

    euler = g.n - len(g.edges) + len(g.faces)
    rep.add("euler", euler == 2, f"V-E+F = {euler}" if euler != 2 else "")
    return rep


def face_adjacency(g: PlanarBicubicGraph) -> list[set[int]]:
    """Faces sharing at least one edge are adjacent."""
    edge_faces: dict[frozenset[int], list[int]] = {}
    for fi, face in enumerate(g.faces):
        for e in g.face_edges(face):
            edge_faces.setdefault(e, []).append(fi)
    adj: list[set[int]] = [set() for _ in g.faces]
    for faces in edge_faces.values():
        for a in faces:
            for b in faces:
                if a != b:
                    adj[a].add(b)
    return adj


def three_face_coloring(g: PlanarBicubicGraph) -> dict[int, int]:
    """First proper 3-coloring of the faces, in listed face order.

    Faces are tried in order with colors 0, 1, 2, backtracking on
    conflicts, so the result is deterministic for fixed input data.
    """
    adj = face_adjacency(g)
    colors: dict[int, int] = {}

    def assign(fi: int) -> bool:
        if fi == len(g.faces):
            return True
        for c in (0, 1, 2):
            if all(colors.get(nb) != c for nb in adj[fi]):
                colors[fi] = c
                if assign(fi + 1):
                    return True
                del colors[fi]
        return False

    if not assign(0):
        raise GraphError("no proper 3-face coloring exists; input is not as claimed")
    return colors


def incidence_matrix(g: PlanarBicubicGraph) -> BinaryMatrix:
    """Face-vertex incidence: entry (f, v) = 1 iff v lies on face f."""
    rows = []
    for face in g.faces:
        bits = 0
        for v in face:
            bits |= 1 << (v - 1)
        rows.append(bits)
    return BinaryMatrix(rows, g.n)


def graph_to_selfdual_code(
    g: PlanarBicubicGraph,
    f1: int | None = None,
    f2: int | None = None,
) -> BinaryCode:
    """Drop two differently-coloured face rows from the incidence matrix.

    Face indices are 0-based positions in the face list; by default the
    lexicographically first differently-coloured pair is used.  The
    resulting code is checked to be self-dual of dimension n/2, which
    any valid input graph must produce.
    """
    rep = validate(g)
    if not rep.ok:
        raise GraphError("invalid graph: " + "; ".join(rep.failures()))
    coloring = three_face_coloring(g)
    if f1 is None or f2 is None:
        f1, f2 = next(
            (i, j)
            for i in range(len(g.faces))
            for j in range(i + 1, len(g.faces))
            if coloring[i] != coloring[j]
        )
    if not (0 <= f1 < len(g.faces) and 0 <= f2 < len(g.faces)) or f1 == f2:
        raise GraphError(f"bad face pair ({f1}, {f2})")
    if coloring[f1] == coloring[f2]:
        raise GraphError(
            f"faces {f1} and {f2} share color {coloring[f1]}; a differently-colored pair is required"
        )
    inc = incidence_matrix(g)
    rows = [r for i, r in enumerate(inc.rows) if i not in (f1, f2)]
    code = BinaryCode(BinaryMatrix(rows, g.n))
    if code.k != g.n // 2 or not code.is_self_dual():
        raise GraphError(
            f"face-deleted incidence matrix of {g.name or 'graph'} is not self-dual"
        )
    return code


def builtin_graph(name: str) -> PlanarBicubicGraph:
    """Curated graphs: the cube and two 16-vertex double-ring graphs."""
    key = name.lower()
    if key == "cube":
        edges = [
            (1, 2), (2, 3), (3, 4), (1, 4),
            (5, 6), (6, 7), (7, 8), (5, 8),
            (1, 5), (2, 6), (3, 7), (4, 8),
        ]
        faces = [
            (1, 2, 3, 4),
            (2, 6, 7, 3),
            (3, 7, 8, 4),
            (1, 4, 8, 5),
            (1, 2, 6, 5),
            (5, 6, 7, 8),
        ]
        return PlanarBicubicGraph.build(8, edges, faces, name="cube")
    if key == "g1":
        outer = [(i, i % 8 + 1) for i in range(1, 9)]
        inner = [(i, 9 + (i - 8) % 8) for i in range(9, 17)]
        spokes = [(i, i + 8) for i in range(1, 9)]
        faces = [tuple(range(1, 9)), tuple(range(9, 17))]
        for i in range(1, 9):
            j = i % 8 + 1
            faces.append((i, j, j + 8, i + 8))
        return PlanarBicubicGraph.build(16, outer + inner + spokes, faces, name="G1")
    if key == "g2":
        edges = [
            (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 8), (6, 1), (7, 8),
            (7, 9), (7, 6), (1, 9), (9, 10), (2, 10), (10, 11), (11, 12),
            (12, 13), (13, 3), (13, 14), (4, 14), (11, 16), (15, 16),
            (12, 15), (14, 15), (8, 16),
        ]
        faces = [
            (1, 2, 10, 9),
            (1, 2, 3, 4, 5, 6),
            (7, 6, 1, 9),
            (7, 8, 5, 6),
            (8, 16, 15, 14, 4, 5),
            (2, 3, 13, 12, 11, 10),
            (13, 14, 15, 12),
            (11, 12, 15, 16),
            (3, 4, 14, 13),
            (9, 10, 11, 16, 8, 7),
        ]
        return PlanarBicubicGraph.build(16, edges, faces, name="G2")
    raise GraphError(f"unknown builtin graph: {name!r} (have cube, G1, G2)")


BUILTIN_NAMES = ("cube", "G1", "G2")


def parse_graph_text(text: str, name: str = "") -> PlanarBicubicGraph:
    """Graph file format: 'vertices N', 'edge a b', 'face v1 ... vk', '#' comments."""
    n = None
    edges: list[tuple[int, int]] = []
    faces: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            if fields[0] == "vertices" and len(fields) == 2:
                n = int(fields[1])
            elif fields[0] == "edge" and len(fields) == 3:
                edges.append((int(fields[1]), int(fields[2])))
            elif fields[0] == "face" and len(fields) >= 4:
                faces.append(tuple(int(x) for x in fields[1:]))
            else:
                raise ValueError
        except ValueError:
            raise GraphError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise GraphError("missing 'vertices N' line")
    return PlanarBicubicGraph.build(n, edges, faces, name=name)


def format_graph_text(g: PlanarBicubicGraph) -> str:
    lines = [f"vertices {g.n}"]
    for e in sorted(tuple(sorted(e)) for e in g.edges):
        lines.append(f"edge {e[0]} {e[1]}")
    for face in g.faces:
        lines.append("face " + " ".join(str(v) for v in face))
    return "\n".join(lines) + "\n"
