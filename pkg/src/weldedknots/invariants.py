"""
Move-invariant fingerprints of codes: Fox coloring counts over Z/p and
counts of homomorphisms of the arc presentation into small finite groups.

Arcs break at under passages only; over passages run through.  A code
with n >= 1 crossings has exactly n arcs, the empty code has one.  At a
crossing the outgoing arc is determined by the incoming and the over arc:

    colorings:      out = 2*over - in      (mod p)
    homomorphisms:  out = over * in * over^-1     for sign +
                    out = over^-1 * in * over     for sign -

Both counts are constant along every implemented move, which is what
makes them usable as oracles for the rewriting engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .convert import _preceding_under
from .model import (
    UNDER,
    DomainError,
    GaussCode,
    require_valid_code,
)


@dataclass(frozen=True)
class CrossingArcs:
    crossing: int
    over_arc: int
    in_arc: int
    out_arc: int
    sign: int


@dataclass(frozen=True)
class ArcStructure:
    arc_count: int
    crossings: tuple[CrossingArcs, ...]


def arcs(code: GaussCode) -> ArcStructure:
    """Arc decomposition of a code; the trivial diagram has one arc."""
    require_valid_code(code)
    n = code.n
    if n == 0:
        return ArcStructure(1, ())
    under_positions = [i for i, p in enumerate(code.passages) if p.role == UNDER]
    arc_at = {u: j for j, u in enumerate(under_positions)}  # arc j starts after under j
    prev = _preceding_under(code)
    over_arc: dict[int, int] = {}
    for i, p in enumerate(code.passages):
        if p.role != UNDER:
            over_arc[p.crossing] = arc_at[prev[i]]
    table = []
    for j, u in enumerate(under_positions):
        p = code.passages[u]
        table.append(
            CrossingArcs(
                crossing=p.crossing,
                over_arc=over_arc[p.crossing],
                in_arc=(j - 1) % n,
                out_arc=j,
                sign=p.sign,
            )
        )
    return ArcStructure(n, tuple(table))


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    return all(p % d for d in range(3, int(p**0.5) + 1, 2))


def _relation_matrix(structure: ArcStructure) -> list[list[int]]:
    rows = []
    for c in structure.crossings:
        row = [0] * structure.arc_count
        row[c.out_arc] += 1
        row[c.in_arc] += 1
        row[c.over_arc] -= 2
        rows.append(row)
    return rows


def _rank_mod_p(rows: list[list[int]], m: int, p: int) -> int:
    """Gaussian elimination over Z/p."""
    mat = [[v % p for v in row] for row in rows]
    rank = 0
    for col in range(m):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def coloring_count(code: GaussCode, p: int) -> int:
    """Number of Fox p-colorings of the arcs, computed from the nullspace
    dimension of the relation matrix: count = p**d."""
    if not _is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    structure = arcs(code)
    if not structure.crossings:
        return p
    rank = _rank_mod_p(_relation_matrix(structure), structure.arc_count, p)
    return p ** (structure.arc_count - rank)


def coloring_count_bruteforce(code: GaussCode, p: int, cap: int = 2_000_000) -> int:
    """Independent check path: enumerate every arc assignment and test the
    crossing relations directly."""
    if not _is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    structure = arcs(code)
    m = structure.arc_count
    if p**m > cap:
        raise DomainError(f"brute force over {p}^{m} assignments exceeds cap")
    if not structure.crossings:
        return p
    matrix = np.array(_relation_matrix(structure), dtype=np.int64)
    assignments = np.indices((p,) * m).reshape(m, -1)
    residues = (matrix @ assignments) % p
    return int(np.count_nonzero((residues == 0).all(axis=0)))


# ---------------------------------------------------------------------------
# finite groups given by multiplication tables

@dataclass(frozen=True)
class Group:
    name: str
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def identity(self) -> int:
        return self._identity

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def conjugate(self, g: int, a: int) -> int:
        """g * a * g^-1."""
        return self.mul(self.mul(g, a), self.inv(g))

    def conjugacy_class(self, a: int) -> tuple[int, ...]:
        return tuple(sorted({self.conjugate(g, a) for g in range(self.order)}))

    def __post_init__(self):
        k = len(self.table)
        if any(len(row) != k for row in self.table):
            raise DomainError("multiplication table must be square")
        if any(v < 0 or v >= k for row in self.table for v in row):
            raise DomainError("table entries must index elements")
        identity = None
        for e in range(k):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(k)):
                identity = e
                break
        if identity is None:
            raise DomainError("table has no identity element")
        inverses = [None] * k
        for a in range(k):
            for b in range(k):
                if self.table[a][b] == identity == self.table[b][a]:
                    inverses[a] = b
                    break
            if inverses[a] is None:
                raise DomainError(f"element {a} has no inverse")
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise DomainError("table is not associative")
        object.__setattr__(self, "_identity", identity)
        object.__setattr__(self, "_inverses", tuple(inverses))


def _perm_group(name: str, perms: list[tuple[int, ...]]) -> Group:
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[tuple(a[b[x]] for x in range(len(a)))] for b in perms) for a in perms
    )
    return Group(name, table)


def symmetric_group_3() -> Group:
    perms = sorted(itertools.permutations(range(3)))
    return _perm_group("S3", perms)


def dihedral_group(m: int) -> Group:
    """Dihedral group of order 2m, 1 <= m <= 6."""
    if m < 1 or m > 6:
        raise DomainError("dihedral groups are built in up to order 12")
    if m == 1:
        return Group("D1", ((0, 1), (1, 0)))
    if m == 2:
        return Group("D2", tuple(tuple(a ^ b for b in range(4)) for a in range(4)))
    rotations = [tuple((x + i) % m for x in range(m)) for i in range(m)]
    reflections = [tuple((i - x) % m for x in range(m)) for i in range(m)]
    return _perm_group(f"D{m}", rotations + reflections)


_BUILTIN = {"S3": symmetric_group_3, **{f"D{m}": (lambda m=m: dihedral_group(m)) for m in range(1, 7)}}


def builtin_group(name: str) -> Group:
    try:
        return _BUILTIN[name.upper()]()
    except KeyError:
        raise DomainError(f"unknown group {name!r}; built-ins: {', '.join(sorted(_BUILTIN))}") from None


# ---------------------------------------------------------------------------
# homomorphism counting

def hom_count(code: GaussCode, group: Group) -> int:
    """Number of arc assignments into the group satisfying the conjugation
    relation at every crossing.

    Backtracks over the value of the first arc; assigning an arc propagates
    through every relation it takes part in, with an undo trail instead of
    state copies.  Branch values range over the first arc's conjugacy
    class, since the relations make every arc conjugate to it.
    """
    structure = arcs(code)
    m = structure.arc_count
    k = group.order
    if not structure.crossings:
        return k

    relations = [(c.in_arc, c.over_arc, c.out_arc, c.sign) for c in structure.crossings]
    touching: list[list[int]] = [[] for _ in range(m)]
    for ridx, (in_a, over_a, out_a, _) in enumerate(relations):
        for a in {in_a, over_a, out_a}:
            touching[a].append(ridx)

    inv = [group.inv(g) for g in range(k)]
    conj = [[group.conjugate(g, a) for a in range(k)] for g in range(k)]

    values: list[int | None] = [None] * m

    def try_assign(arc: int, val: int, trail: list[int]) -> bool:
        stack = [(arc, val)]
        while stack:
            a, v = stack.pop()
            current = values[a]
            if current is not None:
                if current != v:
                    return False
                continue
            values[a] = v
            trail.append(a)
            for ridx in touching[a]:
                in_a, over_a, out_a, sign = relations[ridx]
                g = values[over_a]
                if g is None:
                    continue
                h = g if sign > 0 else inv[g]
                vin = values[in_a]
                if vin is not None:
                    stack.append((out_a, conj[h][vin]))
                else:
                    vout = values[out_a]
                    if vout is not None:
                        stack.append((in_a, conj[inv[h]][vout]))
        return True

    def pick_branch_arc() -> int | None:
        # prefer the arc whose assignment fires the most relations now;
        # ties and the no-information case fall back to the lowest index
        best, best_score = None, -1
        for a in range(m):
            if values[a] is not None:
                continue
            score = 0
            for ridx in touching[a]:
                in_a, over_a, out_a, _ = relations[ridx]
                assigned = (values[in_a] is not None) + (values[over_a] is not None) + (values[out_a] is not None)
                if assigned == 2:
                    score += 1
            if score > best_score:
                best, best_score = a, score
        return best

    def count(domain: tuple[int, ...]) -> int:
        free = pick_branch_arc()
        if free is None:
            return 1
        total = 0
        for val in domain:
            trail: list[int] = []
            if try_assign(free, val, trail):
                total += count(domain)
            for a in trail:
                values[a] = None
        return total

    total = 0
    for g0 in range(k):
        trail: list[int] = []
        if try_assign(0, g0, trail):
            total += count(group.conjugacy_class(g0))
        for a in trail:
            values[a] = None
    return total


# ---------------------------------------------------------------------------
# fingerprints

@dataclass(frozen=True)
class InvariantFingerprint:
    coloring_counts: tuple[tuple[int, int], ...]  # (prime, count), sorted
    hom_counts: tuple[tuple[str, int], ...]       # (group name, count), sorted

    def as_dict(self) -> dict:
        return {
            "coloring_counts": {str(p): c for p, c in self.coloring_counts},
            "hom_counts": {name: c for name, c in self.hom_counts},
        }


def fingerprint(obj, primes=(3, 5), groups=()) -> InvariantFingerprint:
    """Deterministic invariant tuple; equal fingerprints are necessary for
    move-equivalence.  Accepts a code or a welded Gauss diagram."""
    from .convert import wgd_to_gauss
    from .model import WeldedGaussDiagram

    code = wgd_to_gauss(obj) if isinstance(obj, WeldedGaussDiagram) else obj
    colorings = tuple(sorted((p, coloring_count(code, p)) for p in primes))
    homs = tuple(sorted((g.name, hom_count(code, g)) for g in groups))
    return InvariantFingerprint(colorings, homs)
