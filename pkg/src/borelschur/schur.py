"""
Schur and Borel-Schur algebras as explicit structure-constant algebras.

Basis elements are PairOrbit labels xi_{i,j}; the product of two basis
elements is computed from the classical double-coset formula

    xi_{i,j} xi_{j,h} = sum_sigma [Stab(i.sigma, h) : Stab(i.sigma, j, h)] xi_{i.sigma, h}

with sigma running over a transversal of the double cosets
Stab(i,j) sigma Stab(j,h) inside Stab(j), and xi_{i,j} xi_{k,h} = 0 whenever
j and k have different weights.  All structure constants are subgroup
indices, hence integers: one integer table serves every characteristic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import symcomb
from .symcomb import PairOrbit, canonical_pair, diagonal_orbit, weight


class CheckFailed(Exception):
    """A machine-checked verification failed; carries the offending payload."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


@dataclass(frozen=True)
class ScaleCap:
    """Desk-scale guard for table construction."""

    max_r: int = 8
    max_dim: int = 20000

    def check(self, r: int, dim: int) -> None:
        if r > self.max_r or dim > self.max_dim:
            raise ValueError(
                f"scale cap exceeded (r={r} > {self.max_r} or dim={dim} > {self.max_dim}); "
                "raise the cap explicitly to proceed"
            )


DEFAULT_CAP = ScaleCap()


def reduce_coeff(c: int, char: int) -> int:
    return c % char if char else c


def validate_char(p: int) -> int:
    if p == 0:
        return 0
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


# ---------------------------------------------------------------------------
# basis enumeration

def borel_basis(n: int, r: int) -> list[PairOrbit]:
    """
    One PairOrbit per orbit of pairs with i <= j: multisets of column pairs
    (a, b), a <= b.  Sorted, hence deterministic.
    """
    cols = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]
    return _basis_from_columns(cols, n, r)


def full_basis(n: int, r: int) -> list[PairOrbit]:
    """Basis of the full Schur algebra: all column pairs allowed."""
    cols = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    return _basis_from_columns(cols, n, r)


def _basis_from_columns(cols, n, r):
    out = []
    for combo in itertools.combinations_with_replacement(sorted(cols), r):
        out.append(PairOrbit(tuple(c[0] for c in combo), tuple(c[1] for c in combo), n))
    return sorted(out)


# ---------------------------------------------------------------------------
# the multiplication formula

_triple_cache: dict = {}


def _multiply_aligned(i, j, h, n):
    """Integer product for an aligned triple (i, j, h); cached per orbit."""
    key = (n, tuple(sorted(zip(i, j, h))))
    cached = _triple_cache.get(key)
    if cached is not None:
        return cached
    sig_j = symcomb.stabilizer(j)
    sig_ij = symcomb.stabilizer_pair(i, j)
    sig_jh = symcomb.stabilizer_pair(j, h)
    terms: dict[PairOrbit, int] = {}
    for sigma in symcomb.double_coset_transversal(sig_ij, sig_j, sig_jh):
        isig = symcomb.apply_perm(i, sigma)
        coeff = symcomb.subgroup_index(
            symcomb.stabilizer_pair(isig, h), symcomb.stabilizer_triple(isig, j, h)
        )
        label = canonical_pair(isig, h, n)
        terms[label] = terms.get(label, 0) + coeff
    result = tuple(sorted(terms.items()))
    _triple_cache[key] = result
    return result


def multiply(x: PairOrbit, y: PairOrbit, char: int = 0) -> dict[PairOrbit, int]:
    """
    Product of two basis elements as a sparse combination, coefficients
    reduced mod char (char 0: exact integers).  Zero when the inner weights
    do not match.
    """
    if x.n != y.n or x.r != y.r:
        raise ValueError("labels from different algebras")
    validate_char(char)
    if x.col_weight != y.row_weight:
        return {}
    sigma = symcomb.align_to(x.j, y.i)
    h = symcomb.apply_perm(y.j, sigma)
    out = {}
    for label, coeff in _multiply_aligned(x.i, x.j, h, x.n):
        c = reduce_coeff(coeff, char)
        if c:
            out[label] = c
    return out


# ---------------------------------------------------------------------------
# structure-constant algebras


@dataclass
class StructureAlgebra:
    """
    Finite-dimensional algebra with a distinguished basis, an orthogonal
    idempotent decomposition of 1, and an integer structure-constant table
    interpreted modulo `char`.

    `table` maps index pairs (h, l) to tuples of (k, integer coefficient) and
    stores only the nonzero products.  `blocks[b] = (e, f)` gives the unique
    idempotent indices with ``basis[e] * basis[b] * basis[f] = basis[b]``.
    Treat instances as frozen values.
    """

    basis: tuple
    idempotents: tuple[int, ...]
    char: int
    table: dict
    blocks: tuple[tuple[int, int], ...]
    n: int | None = None
    r: int | None = None
    index: dict = field(repr=False, default=None)

    def __post_init__(self):
        if self.index is None:
            self.index = {label: k for k, label in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def idempotent_labels(self) -> list:
        return [self.basis[e] for e in self.idempotents]

    def is_idempotent_index(self, k: int) -> bool:
        return k in set(self.idempotents)

    def product_indices(self, h: int, l: int) -> dict[int, int]:
        """Reduced product of two basis elements, as index -> coefficient."""
        out = {}
        for k, c in self.table.get((h, l), ()):
            c = reduce_coeff(c, self.char)
            if c:
                out[k] = c
        return out

    def product(self, x, y) -> dict:
        """Reduced product of two basis labels, as label -> coefficient."""
        combo = self.product_indices(self.index[x], self.index[y])
        return {self.basis[k]: c for k, c in combo.items()}

    def combo_product(self, a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for h, ch in a.items():
            for l, cl in b.items():
                scale = ch * cl
                for k, c in self.table.get((h, l), ()):
                    out[k] = out.get(k, 0) + scale * c
        return {k: v for k, v in ((k, reduce_coeff(v, self.char)) for k, v in out.items()) if v}

    # -- verification -------------------------------------------------------

    def compatible(self, h: int, l: int) -> bool:
        return self.blocks[h][1] == self.blocks[l][0]

    def check_identity(self) -> None:
        idem = set(self.idempotents)
        for e in self.idempotents:
            for f in self.idempotents:
                prod = self.product_indices(e, f)
                want = {e: 1} if e == f else {}
                if prod != want:
                    raise CheckFailed("idempotents are not orthogonal", (e, f, prod))
        for b in range(self.dim):
            e, f = self.blocks[b]
            if e not in idem or f not in idem:
                raise CheckFailed("block references a non-idempotent", b)
            if self.product_indices(e, b) != {b: 1} or self.product_indices(b, f) != {b: 1}:
                raise CheckFailed("identity does not act as expected", self.basis[b])

    def check_associativity(self) -> int:
        """
        Exhaustive (ab)c == a(bc) over weight-compatible basis triples; the
        incompatible triples vanish on both sides by the block bookkeeping.
        Returns the number of triples checked.
        """
        by_row: dict[int, list[int]] = {}
        by_col: dict[int, list[int]] = {}
        for b in range(self.dim):
            e, f = self.blocks[b]
            by_row.setdefault(e, []).append(b)
            by_col.setdefault(f, []).append(b)
        checked = 0
        for b in range(self.dim):
            e, f = self.blocks[b]
            for a in by_col.get(e, ()):  # a*b nonzero-compatible
                ab = self.product_indices(a, b)
                for c in by_row.get(f, ()):
                    bc = self.product_indices(b, c)
                    left = self.combo_product(ab, {c: 1})
                    right = self.combo_product({a: 1}, bc)
                    if left != right:
                        raise CheckFailed(
                            "associativity fails",
                            (self.basis[a], self.basis[b], self.basis[c], left, right),
                        )
                    checked += 1
        return checked

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        def enc(label):
            if isinstance(label, PairOrbit):
                return {"i": list(label.i), "j": list(label.j)}
            return {"name": str(label)}

        table = {}
        for (h, l) in sorted(self.table):
            terms = [[k, c] for k, c in self.table[(h, l)]]
            table[f"{h},{l}"] = terms
        return {
            "n": self.n,
            "r": self.r,
            "char": self.char,
            "basis": [enc(b) for b in self.basis],
            "idempotents": list(self.idempotents),
            "table": table,
        }


# integer tables are characteristic-independent; share them across calls
_table_store: dict = {}


def _integer_table(n: int, r: int, borel_only: bool):
    key = (n, r, borel_only)
    hit = _table_store.get(key)
    if hit is not None:
        return hit
    basis = tuple(borel_basis(n, r) if borel_only else full_basis(n, r))
    index = {label: k for k, label in enumerate(basis)}
    by_row: dict = {}
    for k, label in enumerate(basis):
        by_row.setdefault(label.row_weight, []).append(k)
    table = {}
    for h, x in enumerate(basis):
        for l in by_row.get(x.col_weight, ()):
            y = basis[l]
            combo = multiply(x, y, 0)
            if combo:
                table[(h, l)] = tuple(sorted((index[lab], c) for lab, c in combo.items()))
    _table_store[key] = (basis, index, table)
    return basis, index, table


def build_algebra(
    n: int,
    r: int,
    char: int = 0,
    borel_only: bool = True,
    cap: ScaleCap = DEFAULT_CAP,
) -> StructureAlgebra:
    """
    The Borel-Schur algebra S^+(n,r) (or the full Schur algebra S(n,r)) with
    its complete multiplication table.  Structure constants are stored as
    exact integers and interpreted modulo `char`.
    """
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    validate_char(char)
    dim = len(borel_basis(n, r)) if borel_only else n ** (2 * r)
    cap.check(r, dim)
    basis, index, table = _integer_table(n, r, borel_only)
    idem = tuple(k for k, label in enumerate(basis) if label.is_diagonal)
    blocks = []
    idem_of_weight = {basis[k].col_weight: k for k in idem}
    for label in basis:
        blocks.append((idem_of_weight[label.row_weight], idem_of_weight[label.col_weight]))
    return StructureAlgebra(
        basis=basis,
        idempotents=idem,
        char=char,
        table=table,
        blocks=tuple(blocks),
        n=n,
        r=r,
        index=dict(index),
    )


@dataclass
class EmbeddingCertificate:
    """
    A verified algebra embedding given by a basis-label map.  Verification is
    exhaustive over weight-compatible basis pairs and at the level of integer
    structure constants, so it holds in every characteristic at once.
    """

    source: StructureAlgebra
    target: StructureAlgebra
    label_map: dict
    image_idempotents: tuple
    pairs_checked: int

    def image_algebra(self) -> StructureAlgebra:
        return truncate(self.target, self.image_idempotents)


def _verify_embedding(source, target, label_map) -> int:
    image = set(label_map.values())
    if len(image) != len(label_map) or len(label_map) != source.dim:
        raise CheckFailed("label map is not a bijection onto its image")
    checked = 0
    for x in source.basis:
        for y in source.basis:
            if x.col_weight != y.row_weight:
                if label_map[x].col_weight == label_map[y].row_weight:
                    raise CheckFailed("weight compatibility not preserved", (x, y))
                continue
            lhs = {label_map[k]: c for k, c in multiply(x, y, 0).items()}
            rhs = multiply(label_map[x], label_map[y], 0)
            if lhs != rhs:
                raise CheckFailed(
                    "embedding is not multiplicative", (x, y, lhs, rhs)
                )
            checked += 1
    return checked


def embed_degree(n: int, s: int, char: int = 0, cap: ScaleCap = DEFAULT_CAP) -> EmbeddingCertificate:
    """
    The degree embedding S^+(n,s) -> S^+(n,s+1), xi_{i,j} -> xi_{(1,i),(1,j)},
    verified to be multiplicative with image e S^+(n,s+1) e for e the sum of
    the idempotents xi_lam with lam_1 >= 1.
    """
    source = build_algebra(n, s, char, cap=cap)
    target = build_algebra(n, s + 1, char, cap=cap)
    label_map = {
        x: canonical_pair((1,) + x.i, (1,) + x.j, n) for x in source.basis
    }
    image_idem = tuple(
        lab for lab in target.idempotent_labels() if lab.col_weight[0] >= 1
    )
    expected_image = {
        lab
        for lab in target.basis
        if lab.row_weight[0] >= 1 and lab.col_weight[0] >= 1
    }
    if set(label_map.values()) != expected_image:
        raise CheckFailed(
            "image does not equal the corner algebra",
            set(label_map.values()) ^ expected_image,
        )
    checked = _verify_embedding(source, target, label_map)
    return EmbeddingCertificate(source, target, label_map, image_idem, checked)


def truncate_columns(
    n: int, m: int, r: int, char: int = 0, cap: ScaleCap = DEFAULT_CAP
) -> EmbeddingCertificate:
    """
    The column embedding S^+(m,r) -> S^+(n,r) (m <= n), sending xi_{i,j} to
    itself in the larger index set; verified isomorphism onto e S^+(n,r) e
    for e the sum of the xi_lam with lam_{m+1} = ... = lam_n = 0.
    """
    if m > n:
        raise ValueError("need m <= n")
    source = build_algebra(m, r, char, cap=cap)
    target = build_algebra(n, r, char, cap=cap)
    label_map = {x: canonical_pair(x.i, x.j, n) for x in source.basis}
    image_idem = tuple(
        lab
        for lab in target.idempotent_labels()
        if all(part == 0 for part in lab.col_weight[m:])
    )
    expected_image = {
        lab
        for lab in target.basis
        if max(lab.j, default=1) <= m and max(lab.i, default=1) <= m
    }
    if set(label_map.values()) != expected_image:
        raise CheckFailed("image does not equal the corner algebra")
    checked = _verify_embedding(source, target, label_map)
    return EmbeddingCertificate(source, target, label_map, image_idem, checked)


@dataclass
class OnePointDecomposition:
    """
    S^+(2,r) as a one-point extension: for e = xi_{(0,r)} and ebar = 1 - e,
    the corner e S ebar vanishes, ebar S ebar is isomorphic to S^+(2,r-1)
    (verified through the degree embedding), and M = ebar S e carries the
    left action recorded in `action`.
    """

    algebra: StructureAlgebra
    extension_vertex: PairOrbit
    corner: StructureAlgebra
    corner_iso: EmbeddingCertificate
    module_basis: tuple
    action: dict


def one_point_decompose(r: int, char: int = 0, cap: ScaleCap = DEFAULT_CAP) -> OnePointDecomposition:
    """Split S^+(2,r) along the idempotent at the bottom weight (0,r)."""
    if r < 1:
        raise ValueError("need r >= 1")
    s = build_algebra(2, r, char, cap=cap)
    bottom = (0, r)
    e_label = diagonal_orbit(bottom)
    rest = [lab for lab in s.idempotent_labels() if lab != e_label]
    wrong = [
        lab
        for lab in s.basis
        if lab.row_weight == bottom and lab.col_weight != bottom
    ]
    if wrong:
        raise CheckFailed("e S ebar is nonzero", wrong)
    corner = truncate(s, rest)
    corner_iso = embed_degree(2, r - 1, char, cap=cap)
    image = corner_iso.image_algebra()
    if set(image.basis) != set(corner.basis):
        raise CheckFailed("corner does not match S^+(2,r-1) image")
    module_basis = tuple(
        sorted(
            lab
            for lab in s.basis
            if lab.col_weight == bottom and lab.row_weight != bottom
        )
    )
    action = {}
    for a in corner.basis:
        for mlab in module_basis:
            prod = s.product(a, mlab)
            if prod:
                action[(a, mlab)] = prod
    return OnePointDecomposition(s, e_label, corner, corner_iso, module_basis, action)


def truncate(algebra: StructureAlgebra, idem_labels) -> StructureAlgebra:
    """
    Idempotent truncation e A e for e the sum of the given diagonal
    idempotents.  The basis consists of the elements whose block lies in the
    chosen set; the table restricts because products stay inside the corner.
    """
    chosen = []
    idem_set = set()
    for label in idem_labels:
        k = algebra.index.get(label)
        if k is None or k not in set(algebra.idempotents):
            raise ValueError(f"{label} is not an idempotent of the algebra")
        idem_set.add(k)
    if not idem_set:
        raise ValueError("truncation by an empty idempotent set")
    keep = [
        b
        for b in range(algebra.dim)
        if algebra.blocks[b][0] in idem_set and algebra.blocks[b][1] in idem_set
    ]
    old_to_new = {b: k for k, b in enumerate(keep)}
    basis = tuple(algebra.basis[b] for b in keep)
    table = {}
    for (h, l), terms in algebra.table.items():
        if h in old_to_new and l in old_to_new:
            table[(old_to_new[h], old_to_new[l])] = tuple(
                (old_to_new[k], c) for k, c in terms
            )
    blocks = tuple(
        (old_to_new[algebra.blocks[b][0]], old_to_new[algebra.blocks[b][1]]) for b in keep
    )
    return StructureAlgebra(
        basis=basis,
        idempotents=tuple(old_to_new[e] for e in sorted(idem_set)),
        char=algebra.char,
        table=table,
        blocks=blocks,
        n=algebra.n,
        r=algebra.r,
    )
