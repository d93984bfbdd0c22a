"""
Radical filtration, Ext-quiver extraction, grading-induced degeneration, and
special-biserial recognition for structure-constant algebras whose basis is
adapted to the radical (the non-idempotent basis elements span a nilpotent
ideal; this is asserted at construction time and fails loudly otherwise).

Linear algebra is exact: rationals in characteristic 0, arithmetic mod p
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .quiverkit import Arrow, Quiver
from .schur import CheckFailed, PairOrbit, StructureAlgebra, reduce_coeff
from .symcomb import dominance_leq

Vector = dict[int, object]  # basis index -> scalar


def _inv(x, char: int):
    return pow(x, -1, char) if char else Fraction(1) / x


def _scale(v: Vector, c, char: int) -> Vector:
    if char:
        return {k: (x * c) % char for k, x in v.items()}
    return {k: x * c for k, x in v.items()}


def _axpy(target: Vector, c, v: Vector, char: int) -> Vector:
    out = dict(target)
    for k, x in v.items():
        val = out.get(k, 0) + c * x
        val = val % char if char else val
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return out


class Span:
    """Row-reduced span of sparse vectors with deterministic pivots."""

    def __init__(self, char: int):
        self.char = char
        self.pivots: dict[int, Vector] = {}

    def reduce(self, v: Vector) -> Vector:
        # pivot rows carry no other pivot keys, so one sweep suffices
        v = dict(v)
        for key in sorted(self.pivots):
            coeff = v.get(key)
            if coeff:
                v = _axpy(v, -coeff, self.pivots[key], self.char)
        return v

    def add(self, v: Vector) -> bool:
        """Insert the vector; True when it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        pivot = min(v)
        v = _scale(v, _inv(v[pivot], self.char), self.char)
        for key, row in self.pivots.items():
            if pivot in row:
                self.pivots[key] = _axpy(row, -row[pivot], v, self.char)
        self.pivots[pivot] = v
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def vectors(self) -> list[Vector]:
        return [self.pivots[k] for k in sorted(self.pivots)]


@dataclass
class RadicalFiltration:
    """Descending chain rad^0 >= rad^1 >= ... >= 0 of an adapted-basis algebra."""

    algebra: StructureAlgebra
    layers: list[list[Vector]]  # layers[k] spans rad^(k+1)

    @property
    def nilpotency_index(self) -> int:
        """Least k with rad^k = 0."""
        return len(self.layers) + 1

    def layer_dim(self, k: int) -> int:
        if k == 0:
            return self.algebra.dim
        if k - 1 < len(self.layers):
            return len(self.layers[k - 1])
        return 0

    def layer_labels(self, k: int) -> frozenset:
        """
        The layer as a set of basis labels; available exactly when the span
        is a coordinate subspace, which holds for every algebra in scope.
        """
        if k == 0:
            return frozenset(self.algebra.basis)
        if k - 1 >= len(self.layers):
            return frozenset()
        labels = set()
        for v in self.layers[k - 1]:
            if len(v) != 1:
                raise CheckFailed(
                    "radical layer is not spanned by basis labels",
                    {self.algebra.basis[i]: c for i, c in v.items()},
                )
            labels.add(self.algebra.basis[next(iter(v))])
        return frozenset(labels)


def radical_layers(algebra: StructureAlgebra) -> RadicalFiltration:
    """
    Radical powers of an algebra with adapted basis.  Validates that the
    idempotents are orthogonal and sum to the identity, that the span of the
    non-idempotent basis elements is an ideal, and that it is nilpotent.
    """
    algebra.check_identity()
    char = algebra.char
    idem = set(algebra.idempotents)
    for (h, l), terms in algebra.table.items():
        if h in idem and l in idem:
            continue
        for k, c in terms:
            if k in idem and reduce_coeff(c, char):
                raise CheckFailed(
                    "non-idempotent basis elements do not span an ideal",
                    (algebra.basis[h], algebra.basis[l]),
                )
    rad_indices = [b for b in range(algebra.dim) if b not in idem]
    current = Span(char)
    for b in rad_indices:
        current.add({b: 1})
    layers = [current.vectors()] if current.rank else []
    while layers:
        nxt = Span(char)
        for b in rad_indices:
            for v in layers[-1]:
                prod = algebra.combo_product({b: 1}, v)
                if prod:
                    nxt.add(prod)
        if nxt.rank == 0:
            break
        if len(layers) > algebra.dim:
            raise CheckFailed("radical chain does not reach zero (basis not adapted)")
        layers.append(nxt.vectors())
    return RadicalFiltration(algebra, layers)


def _vertex_label(algebra: StructureAlgebra, idem_idx: int):
    label = algebra.basis[idem_idx]
    return label.col_weight if isinstance(label, PairOrbit) else label


def _vertex_sort_key(v):
    if isinstance(v, tuple):
        prefix = []
        total = 0
        for part in v:
            total += part
            prefix.append(-total)
        return (0, tuple(prefix))
    return (1, str(v))


def _arrow_kind(src, dst, char: int) -> str:
    if not (isinstance(src, tuple) and isinstance(dst, tuple)):
        return ""
    diff = [b - a for a, b in zip(src, dst)]
    nonzero = [t for t, d in enumerate(diff) if d]
    if len(nonzero) == 2 and nonzero[1] == nonzero[0] + 1:
        step = diff[nonzero[0]]
        if step > 0 and diff[nonzero[1]] == -step:
            if char == 0:
                return "a0" if step == 1 else ""
            d = 0
            power = 1
            while power < step:
                power *= char
                d += 1
            if power == step:
                return f"a{d}"
    return ""


def ext_quiver(algebra: StructureAlgebra, filtration: RadicalFiltration | None = None) -> Quiver:
    """
    Gabriel quiver of a basic algebra with adapted basis: vertices are the
    idempotents (labeled by weight for xi-bases), arrows from e to f a basis
    of f (rad/rad^2) e.  Arrow representatives are the lexicographically
    first basis labels spanning the quotient, so one-dimensional blocks get
    their unique xi label.
    """
    filt = filtration or radical_layers(algebra)
    vertex_of = {e: _vertex_label(algebra, e) for e in algebra.idempotents}
    vertices = tuple(sorted(vertex_of.values(), key=_vertex_sort_key))
    rad2 = filt.layers[1] if len(filt.layers) > 1 else []
    rad2_by_block: dict = {}
    for v in rad2:
        blocks = {algebra.blocks[i] for i in v}
        if len(blocks) != 1:
            raise CheckFailed("radical-square vector crosses blocks", v)
        rad2_by_block.setdefault(next(iter(blocks)), []).append(v)
    idem = set(algebra.idempotents)
    by_block: dict = {}
    for b in range(algebra.dim):
        if b not in idem:
            by_block.setdefault(algebra.blocks[b], []).append(b)
    arrows = []
    for block in sorted(by_block, key=lambda bl: (algebra.basis[bl[0]], algebra.basis[bl[1]])):
        e_row, e_col = block
        span = Span(algebra.char)
        for v in rad2_by_block.get(block, []):
            span.add(v)
        for b in sorted(by_block[block], key=lambda i: algebra.basis[i]):
            if span.add({b: 1}):
                src = vertex_of[e_col]
                dst = vertex_of[e_row]
                arrows.append(
                    Arrow(src, dst, algebra.basis[b], _arrow_kind(src, dst, algebra.char))
                )
    return Quiver(vertices, tuple(arrows))


# ---------------------------------------------------------------------------
# degeneration


def check_admissible(algebra: StructureAlgebra, grading: dict) -> None:
    """
    A grading is admissible when it vanishes on idempotents and
    deg(k) - deg(h) - deg(l) >= 0 for every nonzero structure constant.
    """
    deg = lambda b: grading.get(algebra.basis[b], 0)
    for label, d in grading.items():
        if d < 0:
            raise ValueError(f"negative degree at {label}")
    for e in algebra.idempotents:
        if deg(e):
            raise ValueError(f"grading must vanish on idempotent {algebra.basis[e]}")
    for (h, l), terms in algebra.table.items():
        for k, c in terms:
            if reduce_coeff(c, algebra.char) and deg(k) - deg(h) - deg(l) < 0:
                raise ValueError(
                    "inadmissible grading at "
                    f"({algebra.basis[h]}, {algebra.basis[l]}) -> {algebra.basis[k]}"
                )


def degenerate(algebra: StructureAlgebra, grading: dict) -> StructureAlgebra:
    """
    Degeneration along an admissible grading: rescaling the basis by
    t^deg(b) multiplies the (h,l,k) structure constant by
    t^(deg k - deg h - deg l); letting t -> 0 keeps exactly the terms of
    degree difference zero.  Associativity and the identity survive the
    limit because they hold for every t != 0.
    """
    check_admissible(algebra, grading)
    deg = lambda b: grading.get(algebra.basis[b], 0)
    table = {}
    for (h, l), terms in algebra.table.items():
        kept = tuple(
            (k, c)
            for k, c in terms
            if reduce_coeff(c, algebra.char) and deg(k) - deg(h) - deg(l) == 0
        )
        if kept:
            table[(h, l)] = kept
    return StructureAlgebra(
        basis=algebra.basis,
        idempotents=algebra.idempotents,
        char=algebra.char,
        table=table,
        blocks=algebra.blocks,
        n=algebra.n,
        r=algebra.r,
    )


def preset_s32() -> dict[PairOrbit, int]:
    """
    The built-in grading on the xi-basis of the (3,2) two-parameter algebra
    that degenerates it to a special biserial algebra: degree 1 on the six
    elements through the middle weight, degree 2 on the four longest, zero
    elsewhere.
    """
    def po(i, j):
        return PairOrbit(tuple(int(c) for c in i), tuple(int(c) for c in j), 3)

    grading = {}
    for i, j in [("11", "22"), ("22", "33"), ("11", "13"), ("12", "13"),
                 ("13", "23"), ("13", "33")]:
        grading[po(i, j)] = 1
    for i, j in [("11", "33"), ("11", "23"), ("12", "23"), ("12", "33")]:
        grading[po(i, j)] = 2
    return grading


# ---------------------------------------------------------------------------
# special biserial recognition


def is_special_biserial(
    algebra: StructureAlgebra, quiver: Quiver | None = None
) -> tuple[bool, object]:
    """
    Wald-Waschbuesch conditions, with vanishing read off the multiplication
    table of the chosen arrow representatives: at most two arrows in and out
    of every vertex, and for every arrow at most one two-step continuation
    and at most one two-step predecessor survives.
    Returns (flag, witness); the witness names the violating vertex/arrow.
    """
    q = quiver if quiver is not None else ext_quiver(algebra)
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2:
            return False, ("vertex out-degree", v)
        if len(q.in_arrows(v)) > 2:
            return False, ("vertex in-degree", v)
    for a in q.arrows:
        continues = [
            b.label for b in q.out_arrows(a.dst) if algebra.product(b.label, a.label)
        ]
        if len(continues) > 1:
            return False, ("arrow continuations", a.label, continues)
        precedes = [
            b.label for b in q.in_arrows(a.src) if algebra.product(a.label, b.label)
        ]
        if len(precedes) > 1:
            return False, ("arrow predecessors", a.label, precedes)
    return True, None
