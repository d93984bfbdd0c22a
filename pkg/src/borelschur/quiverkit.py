"""
Quivers with relations: restriction, convexity, separated quivers, ADE
recognition, hereditary type, regular coverings with quotients and relation
lifting, and the arrow/relation presentation of the two-row algebras.

Paths are stored in traversal order (the arrow leaving the start vertex
first).  Pretty-printing reverses to composition order, so the path that
first follows kind ``a1`` and then ``a0`` from vertex 6 prints as
``(a0*a1)@6``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .schur import CheckFailed, validate_char


class RepType(enum.IntEnum):
    """Representation type, ordered FINITE < TAME < WILD."""

    FINITE = 0
    TAME = 1
    WILD = 2

    def __str__(self) -> str:
        return self.name.lower()


class Arrow(NamedTuple):
    src: object
    dst: object
    label: object
    kind: str = ""


def fmt_vertex(v) -> str:
    if isinstance(v, tuple):
        if all(isinstance(e, int) and 0 <= e <= 9 for e in v):
            return "".join(str(e) for e in v)
        return ",".join(str(e) for e in v)
    return str(v)


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        labels = [a.label for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate arrow labels")
        for a in self.arrows:
            if a.src not in vset or a.dst not in vset:
                raise ValueError(f"arrow {a.label} has endpoint outside the quiver")

    # -- basic access -------------------------------------------------------

    def arrow(self, label) -> Arrow:
        for a in self.arrows:
            if a.label == label:
                return a
        raise KeyError(label)

    def out_arrows(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.src == v]

    def in_arrows(self, v) -> list[Arrow]:
        return [a for a in self.arrows if a.dst == v]

    def equals(self, other: "Quiver") -> bool:
        """Equality as labeled directed multigraphs (order-insensitive)."""
        return set(self.vertices) == set(other.vertices) and set(self.arrows) == set(
            other.arrows
        )

    def is_subquiver_of(self, other: "Quiver") -> bool:
        return set(self.vertices) <= set(other.vertices) and set(self.arrows) <= set(
            other.arrows
        )

    def induced(self, vertex_subset) -> "Quiver":
        """Full subquiver on the given vertices."""
        vs = [v for v in self.vertices if v in set(vertex_subset)]
        arrows = tuple(a for a in self.arrows if a.src in set(vs) and a.dst in set(vs))
        return Quiver(tuple(vs), arrows)

    def subquiver(self, vertex_subset, arrow_labels) -> "Quiver":
        """Subquiver with an explicit (possibly non-full) arrow set."""
        wanted = set(arrow_labels)
        arrows = tuple(a for a in self.arrows if a.label in wanted)
        if len(arrows) != len(wanted):
            raise ValueError("unknown arrow labels in subquiver")
        return Quiver(tuple(vertex_subset), arrows)

    def relabel(self, vertex_map: Callable | dict, arrow_map: Callable | dict | None = None) -> "Quiver":
        vm = vertex_map if callable(vertex_map) else vertex_map.__getitem__
        if arrow_map is None:
            am = lambda x: x
        else:
            am = arrow_map if callable(arrow_map) else arrow_map.__getitem__
        return Quiver(
            tuple(vm(v) for v in self.vertices),
            tuple(Arrow(vm(a.src), vm(a.dst), am(a.label), a.kind) for a in self.arrows),
        )

    # -- paths ----------------------------------------------------------

    def path_endpoints(self, path: tuple) -> tuple:
        """(source, target) of a composable label sequence in traversal order."""
        arrows = [self.arrow(lab) for lab in path]
        for a, b in zip(arrows, arrows[1:]):
            if a.dst != b.src:
                raise ValueError(f"path breaks between {a.label} and {b.label}")
        return arrows[0].src, arrows[-1].dst

    def typed_path(self, start, kinds) -> tuple:
        """
        Follow the unique arrow of each requested kind from `start`; valid in
        quivers where every vertex has at most one outgoing arrow per kind.
        """
        here = start
        labels = []
        for kind in kinds:
            hits = [a for a in self.out_arrows(here) if a.kind == kind]
            if len(hits) != 1:
                raise ValueError(f"no unique {kind}-arrow out of {here}")
            labels.append(hits[0].label)
            here = hits[0].dst
        return tuple(labels)

    def has_oriented_cycle(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.dst] += 1
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.out_arrows(v):
                indeg[a.dst] -= 1
                if indeg[a.dst] == 0:
                    queue.append(a.dst)
        return seen != len(self.vertices)

    def path_count(self) -> int:
        """Number of paths, trivial ones included; needs an acyclic quiver."""
        if self.has_oriented_cycle():
            raise ValueError("path count is infinite on an oriented cycle")
        memo: dict = {}

        def paths_from(v):
            if v not in memo:
                memo[v] = 1 + sum(paths_from(a.dst) for a in self.out_arrows(v))
            return memo[v]

        return sum(paths_from(v) for v in self.vertices)

    # -- underlying graph -----------------------------------------------

    def underlying_edges(self) -> list[tuple]:
        return [(a.src, a.dst) for a in self.arrows]

    def connected_components(self) -> list[tuple[tuple, list]]:
        """Components of the underlying multigraph as (vertices, edges)."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.underlying_edges():
            parent[find(u)] = find(v)
        comps: dict = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        out = []
        for root in sorted(comps, key=lambda x: self.vertices.index(comps[x][0])):
            verts = tuple(comps[root])
            edges = [e for e in self.underlying_edges() if find(e[0]) == root]
            out.append((verts, edges))
        return out

    # -- export -----------------------------------------------------------

    def to_json(self) -> dict:
        def enc(x):
            return list(x) if isinstance(x, tuple) else x

        return {
            "vertices": [enc(v) for v in self.vertices],
            "arrows": [
                {"src": enc(a.src), "dst": enc(a.dst), "label": str(a.label), "type": a.kind}
                for a in self.arrows
            ],
        }

    def to_dot(self, relations=()) -> str:
        styles = {"a0": "solid", "a1": "dashed", "a2": "dotted", "a3": "bold"}
        lines = ["digraph quiver {"]
        for rel in relations:
            lines.append(f"  // relation: {format_relation(self, rel)}")
        for v in self.vertices:
            lines.append(f'  "{fmt_vertex(v)}";')
        for a in self.arrows:
            style = styles.get(a.kind, "solid")
            lines.append(
                f'  "{fmt_vertex(a.src)}" -> "{fmt_vertex(a.dst)}"'
                f' [label="{a.label}", style={style}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# relations


@dataclass(frozen=True)
class Relation:
    """Formal combination of parallel paths; terms are (coeff, label path)."""

    terms: tuple[tuple[int, tuple], ...]

    def canonical(self) -> "Relation":
        terms = tuple(sorted(((c, tuple(p)) for c, p in self.terms if c), key=lambda t: t[1]))
        if terms and terms[0][0] < 0:
            terms = tuple((-c, p) for c, p in terms)
        return Relation(terms)


def make_relation(q: Quiver, terms) -> Relation:
    rel = Relation(tuple((c, tuple(p)) for c, p in terms))
    ends = {q.path_endpoints(p) for _, p in rel.terms}
    if len(ends) > 1:
        raise ValueError(f"relation terms are not parallel: {sorted(ends, key=str)}")
    return rel


def relation_source(q: Quiver, rel: Relation):
    return q.path_endpoints(rel.terms[0][1])[0]


def relation_sets_equal(left, right) -> bool:
    return {r.canonical() for r in left} == {r.canonical() for r in right}


def format_relation(q: Quiver, rel: Relation) -> str:
    bits = []
    for coeff, path in rel.terms:
        kinds = [q.arrow(lab).kind or str(lab) for lab in reversed(path)]
        body = "*".join(kinds)
        start = fmt_vertex(q.path_endpoints(path)[0])
        term = f"({body})@{start}"
        if coeff == 1:
            bits.append(("+ " if bits else "") + term)
        elif coeff == -1:
            bits.append("- " + term if bits else "-" + term)
        else:
            bits.append(("+ " if bits else "") + f"{coeff}{term}")
    return " ".join(bits)


def restrict_relations(sub: Quiver, relations) -> list[Relation]:
    """
    Restriction of each relation to a subquiver: keep the terms whose paths
    lie entirely inside, drop relations with no surviving terms.
    """
    allowed = {a.label for a in sub.arrows}
    out = []
    for rel in relations:
        kept = tuple(
            (c, p) for c, p in rel.terms if all(lab in allowed for lab in p)
        )
        if kept:
            out.append(Relation(kept))
    return out


def is_convex(sub: Quiver, q: Quiver) -> tuple[bool, tuple | None]:
    """
    Convexity of a subquiver: every path of q between vertices of sub stays
    inside sub.  Returns (flag, witness path of arrow labels) — the witness
    leaves and re-enters, or is a missing arrow between sub vertices.
    """
    if not sub.is_subquiver_of(q):
        raise ValueError("not a subquiver")
    inside = set(sub.vertices)
    sub_labels = {a.label for a in sub.arrows}
    for a in q.arrows:
        if a.src in inside and a.dst in inside and a.label not in sub_labels:
            return False, (a.label,)
    # vertices strictly outside that are both reachable from `inside` and
    # able to reach `inside` witness a path leaving and returning
    def reach(starts, forward=True):
        found = {}
        stack = [(v, ()) for v in starts]
        while stack:
            v, trail = stack.pop()
            arrows = q.out_arrows(v) if forward else q.in_arrows(v)
            for a in arrows:
                w = a.dst if forward else a.src
                if w not in found and w not in inside:
                    found[w] = trail + (a.label,)
                    stack.append((w, trail + (a.label,)))
        return found

    down = reach(inside, forward=True)
    up = reach(inside, forward=False)
    for v in q.vertices:
        if v in down and v in up:
            witness = down[v] + tuple(reversed(up[v]))
            return False, witness
    return True, None


# ---------------------------------------------------------------------------
# separated quivers and ADE recognition


def separated(q: Quiver) -> Quiver:
    """Bipartite doubling: every arrow v -> w becomes v' -> w''."""
    prim = {v: fmt_vertex(v) + "'" for v in q.vertices}
    sec = {v: fmt_vertex(v) + "''" for v in q.vertices}
    vertices = tuple(prim[v] for v in q.vertices) + tuple(sec[v] for v in q.vertices)
    arrows = tuple(Arrow(prim[a.src], sec[a.dst], a.label, a.kind) for a in q.arrows)
    return Quiver(vertices, arrows)


@dataclass(frozen=True)
class ADEType:
    kind: str  # "dynkin" | "extended" | "neither"
    family: str | None = None
    rank: int | None = None

    def __str__(self) -> str:
        if self.kind == "neither":
            return "neither"
        tilde = "~" if self.kind == "extended" else ""
        return f"{tilde}{self.family}{self.rank}"


NEITHER = ADEType("neither")


def classify_ade(vertices, edges) -> ADEType:
    """
    Exact ADE recognition for a connected undirected multigraph given as a
    vertex list plus (u, v) edge pairs.  A doubled edge on two vertices is
    the extended A1; loops and higher multiplicities are never ADE.
    """
    vertices = list(vertices)
    n = len(vertices)
    mult: dict = {}
    for u, v in edges:
        if u == v:
            return NEITHER
        key = frozenset((u, v))
        mult[key] = mult.get(key, 0) + 1
    # connectivity guard
    if n > 1:
        seen = {vertices[0]}
        stack = [vertices[0]]
        adj: dict = {v: [] for v in vertices}
        for key in mult:
            u, v = tuple(key)
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise ValueError("classify_ade expects a connected graph")
    if any(m >= 3 for m in mult.values()):
        return NEITHER
    if any(m == 2 for m in mult.values()):
        if n == 2 and len(mult) == 1:
            return ADEType("extended", "A", 1)
        return NEITHER
    e = len(mult)
    deg = {v: 0 for v in vertices}
    for key in mult:
        for v in key:
            deg[v] += 1
    if e == n:  # exactly one cycle
        if all(d == 2 for d in deg.values()):
            return ADEType("extended", "A", n - 1)
        return NEITHER
    if e != n - 1:
        return NEITHER
    # tree cases
    if n == 1:
        return ADEType("dynkin", "A", 1)
    adj = {v: [] for v in vertices}
    for key in mult:
        u, v = tuple(key)
        adj[u].append(v)
        adj[v].append(u)
    degrees = sorted(deg.values(), reverse=True)
    if degrees[0] == 2 or degrees[0] == 1:
        return ADEType("dynkin", "A", n)
    if degrees[0] >= 4:
        if degrees[0] == 4 and n == 5 and degrees[1] == 1:
            return ADEType("extended", "D", 4)
        return NEITHER
    branch = [v for v in vertices if deg[v] == 3]
    if len(branch) == 1:
        center = branch[0]
        arms = sorted(_arm_length(adj, center, w) for w in adj[center])
        if arms[0] == 1 and arms[1] == 1:
            return ADEType("dynkin", "D", n)
        if arms == [1, 2, 2]:
            return ADEType("dynkin", "E", 6)
        if arms == [1, 2, 3]:
            return ADEType("dynkin", "E", 7)
        if arms == [1, 2, 4]:
            return ADEType("dynkin", "E", 8)
        if arms == [2, 2, 2]:
            return ADEType("extended", "E", 6)
        if arms == [1, 3, 3]:
            return ADEType("extended", "E", 7)
        if arms == [1, 2, 5]:
            return ADEType("extended", "E", 8)
        return NEITHER
    if len(branch) == 2:
        leaves = [v for v in vertices if deg[v] == 1]
        if len(leaves) == 4 and all(
            sum(1 for w in adj[b] if deg[w] == 1) == 2 for b in branch
        ):
            return ADEType("extended", "D", n - 1)
        return NEITHER
    return NEITHER


def _arm_length(adj, center, first):
    length = 1
    prev, here = center, first
    while True:
        nxt = [w for w in adj[here] if w != prev]
        if len(nxt) != 1:
            return length  # leaf (0 continuations) or another branch point
        prev, here = here, nxt[0]
        length += 1


def hereditary_type(q: Quiver) -> RepType:
    """
    Representation type of a relation-free acyclic quiver, via Gabriel's
    theorem componentwise on the underlying graph: wild if any component is
    not ADE, else tame if any is extended Dynkin, else finite.
    """
    if q.has_oriented_cycle():
        raise ValueError("hereditary type needs an acyclic quiver")
    worst = RepType.FINITE
    for verts, edges in q.connected_components():
        ade = classify_ade(verts, edges)
        if ade.kind == "neither":
            return RepType.WILD
        if ade.kind == "extended":
            worst = max(worst, RepType.TAME)
    return worst


# ---------------------------------------------------------------------------
# group actions, quotients, lifting


@dataclass
class ActionElement:
    name: str
    vertex_map: dict
    arrow_map: dict  # arrow label -> arrow label

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.vertex_map.items())


@dataclass
class GroupActionOnQuiver:
    quiver: Quiver
    elements: tuple[ActionElement, ...]

    def __post_init__(self):
        for el in self.elements:
            for a in self.quiver.arrows:
                image = self.quiver.arrow(el.arrow_map[a.label])
                if image.src != el.vertex_map[a.src] or image.dst != el.vertex_map[a.dst]:
                    raise ValueError(f"{el.name} does not respect incidence at {a.label}")
                if image.kind != a.kind:
                    raise ValueError(f"{el.name} does not preserve the type of {a.label}")

    def is_free(self) -> bool:
        for el in self.elements:
            if el.is_identity():
                continue
            if any(el.vertex_map[v] == v for v in self.quiver.vertices):
                return False
            if any(el.arrow_map[a.label] == a.label for a in self.quiver.arrows):
                return False
        return True

    def vertex_orbit(self, v) -> frozenset:
        return frozenset(el.vertex_map[v] for el in self.elements)

    def arrow_orbit(self, label) -> frozenset:
        return frozenset(el.arrow_map[label] for el in self.elements)


def action_from_vertex_maps(q: Quiver, vertex_maps: dict[str, dict]) -> GroupActionOnQuiver:
    """
    Build an action from vertex maps alone; arrow images are resolved by the
    mapped (src, dst, kind) triple, which must pin down a unique arrow.
    """
    by_triple: dict = {}
    for a in q.arrows:
        key = (a.src, a.dst, a.kind)
        if key in by_triple:
            raise ValueError("parallel arrows of equal type; give arrow maps explicitly")
        by_triple[key] = a.label
    elements = []
    for name, vmap in vertex_maps.items():
        amap = {}
        for a in q.arrows:
            amap[a.label] = by_triple[(vmap[a.src], vmap[a.dst], a.kind)]
        elements.append(ActionElement(name, dict(vmap), amap))
    return GroupActionOnQuiver(q, tuple(elements))


@dataclass
class QuotientResult:
    quiver: Quiver
    vertex_proj: dict
    arrow_proj: dict


def quotient_by_group(
    q: Quiver,
    action: GroupActionOnQuiver,
    vertex_label: Callable | None = None,
    arrow_label: Callable | None = None,
) -> QuotientResult:
    """
    Orbit quiver of a free action, together with the projection maps.  Orbit
    labels default to the minimum of the orbit (by string order); pass
    labelers to control them.
    """
    if not action.is_free():
        raise ValueError("quotient needs a free action")
    vlab = vertex_label or (lambda orbit: min(orbit, key=str))
    alab = arrow_label or (lambda orbit: min(orbit, key=str))
    vertex_proj = {}
    qvertices = []
    for v in q.vertices:
        lab = vlab(action.vertex_orbit(v))
        vertex_proj[v] = lab
        if lab not in qvertices:
            qvertices.append(lab)
    arrow_proj = {}
    qarrows = []
    seen = set()
    for a in q.arrows:
        orbit = action.arrow_orbit(a.label)
        lab = alab(orbit)
        arrow_proj[a.label] = lab
        if lab not in seen:
            seen.add(lab)
            kinds = {q.arrow(x).kind for x in orbit}
            if len(kinds) != 1:
                raise ValueError(f"orbit of {a.label} mixes arrow types")
            qarrows.append(Arrow(vertex_proj[a.src], vertex_proj[a.dst], lab, a.kind))
    return QuotientResult(Quiver(tuple(qvertices), tuple(qarrows)), vertex_proj, arrow_proj)


def lift_relations(q: Quiver, quotient: QuotientResult, relations) -> list[Relation]:
    """
    Lift each relation of the quotient along the covering: one lifted
    relation per preimage of its source vertex, by unique successive arrow
    lifts.  Failure to lift signals that the input is not a covering.
    """
    lift_arrow: dict = {}
    for a in q.arrows:
        key = (a.src, quotient.arrow_proj[a.label])
        if key in lift_arrow:
            raise CheckFailed("not a covering: ambiguous arrow lift", key)
        lift_arrow[key] = a

    out = []
    for rel in relations:
        src = quotient.quiver.path_endpoints(rel.terms[0][1])[0]
        for v in [w for w in q.vertices if quotient.vertex_proj[w] == src]:
            terms = []
            for coeff, path in rel.terms:
                here = v
                lifted = []
                for lab in path:
                    a = lift_arrow.get((here, lab))
                    if a is None:
                        raise CheckFailed("not a covering: missing arrow lift", (here, lab))
                    lifted.append(a.label)
                    here = a.dst
                terms.append((coeff, tuple(lifted)))
            out.append(Relation(tuple(terms)))
    return out


def stabilizer_of_subquiver(action: GroupActionOnQuiver, sub: Quiver) -> tuple[str, ...]:
    """Names of the group elements fixing the subquiver setwise."""
    vset = set(sub.vertices)
    aset = {a.label for a in sub.arrows}
    names = []
    for el in action.elements:
        if {el.vertex_map[v] for v in vset} == vset and {
            el.arrow_map[x] for x in aset
        } == aset:
            names.append(el.name)
    return tuple(names)


# ---------------------------------------------------------------------------
# the two-row presentation


@dataclass
class QuiverWithRelations:
    quiver: Quiver
    relations: tuple[Relation, ...]


def borel2_presentation(r: int, char: int = 0) -> QuiverWithRelations:
    """
    Quiver and relations of the two-row algebra of degree r: vertices are
    0..r (the second weight entry), arrows of kind ``a{d}`` drop a vertex by
    p^d, and the relations are the commutators (a_s a_t - a_t a_s) at v for
    v >= p^s + p^t together with the vanishing p-th powers (a_s^p) at v for
    v >= p^(s+1).  In characteristic 0 the quiver is the linear A_{r+1} with
    no relations.
    """
    if r < 0:
        raise ValueError("need r >= 0")
    p = validate_char(char)
    vertices = tuple(range(r, -1, -1))
    arrows = []
    steps = [1] if p == 0 else [p**d for d in range(20) if p**d <= r] if r else []
    for d, step in enumerate(steps):
        for v in range(r, step - 1, -1):
            arrows.append(Arrow(v, v - step, f"a{d}:{v}", f"a{d}"))
    q = Quiver(vertices, tuple(arrows))
    relations = []
    if p:
        for d, step in enumerate(steps):
            bound = step * p
            for v in range(r, bound - 1, -1):
                path = q.typed_path(v, [f"a{d}"] * p)
                relations.append(make_relation(q, [(1, path)]))
        for s, t in itertools.combinations(range(len(steps)), 2):
            bound = steps[s] + steps[t]
            for v in range(r, bound - 1, -1):
                first_t = q.typed_path(v, [f"a{t}", f"a{s}"])
                first_s = q.typed_path(v, [f"a{s}", f"a{t}"])
                relations.append(make_relation(q, [(1, first_t), (-1, first_s)]))
    return QuiverWithRelations(q, tuple(relations))


# ---------------------------------------------------------------------------
# bundled covering data for the degree-6 wild cases

_COVER_ALPHA = {
    5: [("6'", "5'"), ("5'", "4'"), ("4'", "3''"), ("3''", "2''"), ("2''", "1''"),
        ("1''", "0''"), ("6''", "5''"), ("5''", "4''"), ("4''", "3'"), ("3'", "2'"),
        ("2'", "1'"), ("1'", "0'")],
    3: [("6'", "5'"), ("5'", "4'"), ("4'", "3'"), ("3'", "2''"), ("2''", "1''"),
        ("1''", "0''"), ("6''", "5''"), ("5''", "4''"), ("4''", "3''"), ("3''", "2'"),
        ("2'", "1'"), ("1'", "0'")],
}
_COVER_BETA = {
    5: [("6'", "1'"), ("5'", "0'"), ("6''", "1''"), ("5''", "0''")],
    3: [("6'", "3''"), ("5'", "2'"), ("4'", "1'"), ("3'", "0'"),
        ("6''", "3'"), ("5''", "2''"), ("4''", "1''"), ("3''", "0''")],
}
_WITNESS = {
    5: ["a0:4'", "a0:3''", "a0:2''", "a0:1''", "a0:6''", "a0:5''", "a0:4''",
        "a1:6''", "a1:5''"],
    3: ["a0:6'", "a0:5'", "a0:3'", "a0:2''", "a0:4''", "a0:3''",
        "a1:6'", "a1:5'", "a1:4''", "a1:3'"],
}
_RINGEL = {5: "XVIII", 3: "XXIX", "large": "XXVIII"}


@dataclass
class CoveringDataset:
    """A bundled double cover of the degree-6 quiver with its swap action."""

    char: int
    base: QuiverWithRelations
    covering: Quiver
    action: GroupActionOnQuiver
    witness: Quiver
    ringel_entry: str

    def quotient(self) -> QuotientResult:
        return quotient_by_group(
            self.covering,
            self.action,
            vertex_label=lambda orbit: int(min(orbit).rstrip("'")),
            arrow_label=lambda orbit: _strip_primes_arrow(min(orbit)),
        )


def _strip_primes_arrow(label: str) -> str:
    kind, src = label.split(":")
    return f"{kind}:{int(src.rstrip(chr(39)))}"


def wild_covering(char: int) -> CoveringDataset:
    """
    The transcribed double cover used in the wildness proof for degree 6 in
    characteristic 3 or 5, with the prime-swapping free involution and the
    minimal wild witness subquiver (Ringel's list entry recorded for
    citation, not re-verified).
    """
    if char not in (3, 5):
        raise ValueError("bundled coverings exist for characteristics 3 and 5")
    vertices = tuple(f"{v}'" for v in range(7)) + tuple(f"{v}''" for v in range(7))
    arrows = [Arrow(s, d, f"a0:{s}", "a0") for s, d in _COVER_ALPHA[char]]
    arrows += [Arrow(s, d, f"a1:{s}", "a1") for s, d in _COVER_BETA[char]]
    covering = Quiver(vertices, tuple(arrows))

    def swap(v: str) -> str:
        return v[:-2] + "'" if v.endswith("''") else v + "'"

    action = action_from_vertex_maps(
        covering,
        {"id": {v: v for v in vertices}, "swap": {v: swap(v) for v in vertices}},
    )
    witness_labels = _WITNESS[char]
    witness_vertices = []
    for lab in witness_labels:
        a = covering.arrow(lab)
        for v in (a.src, a.dst):
            if v not in witness_vertices:
                witness_vertices.append(v)
    witness = covering.subquiver(tuple(witness_vertices), witness_labels)
    return CoveringDataset(
        char=char,
        base=borel2_presentation(6, char),
        covering=covering,
        action=action,
        witness=witness,
        ringel_entry=_RINGEL[char],
    )


def wild_subquiver_large_char(char: int) -> tuple[Quiver, str]:
    """
    For characteristic p >= 7, the nine-vertex subquiver of the degree-(p+1)
    quiver on 0..4 and p-2..p+1 that carries exactly one commutativity
    relation after restriction.  The arrow set is the drawn one: the two
    interior chains plus both long arrows; for p = 7 the intervals touch and
    the connecting arrow 5 -> 4 is deliberately left out.
    """
    p = validate_char(char)
    if p < 7:
        raise ValueError("the two-interval witness needs characteristic >= 7")
    q = borel2_presentation(p + 1, p).quiver
    keep = sorted(set(range(5)) | set(range(p - 2, p + 2)))
    labels = [f"a0:{v}" for v in (4, 3, 2, 1, p + 1, p, p - 1)]
    labels += [f"a1:{p + 1}", f"a1:{p}"]
    return q.subquiver(tuple(keep), labels), _RINGEL["large"]
