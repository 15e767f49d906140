"""Matroids given by their circuits.

Labels are 0-based internally.  Everything here is brute force over the
subsets of the ground set, which is fine up to roughly a dozen elements.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .ncalg import GroundOrder


class MatroidError(ValueError):
    pass


class LoopError(MatroidError):
    pass


class ParallelError(MatroidError):
    pass


class PreconditionError(ValueError):
    pass


class Violation(NamedTuple):
    axiom: str
    sets: tuple
    message: str


@dataclass(frozen=True)
class Matroid:
    n: int
    circuits: tuple

    def __init__(self, n: int, circuits: Iterable[Iterable[int]]):
        cs = {frozenset(c) for c in circuits}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "circuits", tuple(sorted(cs, key=lambda c: (len(c), sorted(c)))))

    @property
    def ground(self) -> frozenset:
        return frozenset(range(self.n))

    def is_dependent(self, J: Iterable[int]) -> bool:
        J = frozenset(J)
        return any(c <= J for c in self.circuits)

    def is_independent(self, J: Iterable[int]) -> bool:
        return not self.is_dependent(J)

    @cached_property
    def rank(self) -> int:
        """Size of the largest independent set."""
        best = 0
        for k in range(self.n + 1):
            if any(self.is_independent(J) for J in combinations(range(self.n), k)):
                best = k
            else:
                break
        return best

    def relabel(self, perm: Sequence[int]) -> "Matroid":
        """Image of the matroid under ``x -> perm[x]``."""
        return Matroid(self.n, ([perm[x] for x in c] for c in self.circuits))


def is_dependent(m: Matroid, J: Iterable[int]) -> bool:
    return m.is_dependent(J)


def validate_circuits(m: Matroid) -> list:
    """Violations of the circuit axioms C1-C3 (empty when valid)."""
    out = []
    for c in m.circuits:
        bad = [x for x in c if not (isinstance(x, int) and 0 <= x < m.n)]
        if bad:
            out.append(Violation("range", (c,), f"labels {sorted(bad)} outside ground set"))
    for c in m.circuits:
        if len(c) <= 2:
            out.append(Violation("C1", (c,), "circuit of size <= 2 (loop or parallel pair)"))
    for a, b in combinations(m.circuits, 2):
        if a < b or b < a:
            small, big = (a, b) if a < b else (b, a)
            out.append(Violation("C2", (small, big), "circuit properly contains another"))
    for a, b in combinations(m.circuits, 2):
        for x in sorted(a & b):
            rest = (a | b) - {x}
            if not any(c <= rest for c in m.circuits):
                out.append(Violation("C3", (a, b, frozenset({x})), "elimination fails"))
    return out


# realisation from a matrix

@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple

    def __init__(self, rows: Iterable[Iterable]):
        object.__setattr__(self, "rows", tuple(tuple(Fraction(x) for x in r) for r in rows))
        if len({len(r) for r in self.rows}) > 1:
            raise MatroidError("ragged matrix")

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    nr, nc = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, nr):
            for j in range(col + 1, nc):
                m[i][j] = (p * m[i][j] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


def _integer_columns(mat: RationalMatrix) -> list:
    cols = []
    for j in range(mat.shape[1]):
        col = mat.column(j)
        d = lcm(*(x.denominator for x in col)) if col else 1
        cols.append(tuple(int(x * d) for x in col))
    return cols


def circuits_from_matrix(mat: RationalMatrix) -> Matroid:
    """Matroid of linear dependencies among the columns of ``mat``."""
    cols = _integer_columns(mat)
    n = len(cols)

    def rank_of(J):
        return integer_rank([[cols[j][i] for j in J] for i in range(mat.shape[0])])

    for j in range(n):
        if not any(cols[j]):
            raise LoopError(f"column {j + 1} is zero (loop)")
    for a, b in combinations(range(n), 2):
        if rank_of((a, b)) < 2:
            raise ParallelError(f"columns {a + 1} and {b + 1} are parallel")
    found = []
    for k in range(3, n + 1):
        for J in combinations(range(n), k):
            fs = frozenset(J)
            if any(c <= fs for c in found):
                continue
            if rank_of(J) < k:
                found.append(fs)
    return Matroid(n, found)


# standard families

def uniform(r: int, n: int) -> Matroid:
    return Matroid(n, combinations(range(n), r + 1))


def boolean(n: int) -> Matroid:
    return Matroid(n, [])


def graphic(edges: Sequence[tuple]) -> Matroid:
    """Cycle matroid; edges are pairs of vertex ids, element i is ``edges[i]``."""
    verts = sorted({v for e in edges for v in e})
    idx = {v: i for i, v in enumerate(verts)}
    rows = [[0] * len(edges) for _ in verts[1:]]
    for j, (u, v) in enumerate(edges):
        if idx[u]:
            rows[idx[u] - 1][j] += 1
        if idx[v]:
            rows[idx[v] - 1][j] -= 1
    return circuits_from_matrix(RationalMatrix(rows))


# broken circuits

def broken_circuits(m: Matroid, order: GroundOrder) -> set:
    return {c - {order.least(c)} for c in m.circuits}


def nbc_sets(m: Matroid, order: GroundOrder) -> list:
    bcs = broken_circuits(m, order)
    out = []
    for k in range(m.n + 1):
        for J in combinations(range(m.n), k):
            fs = frozenset(J)
            if not any(b <= fs for b in bcs):
                out.append(fs)
    return out


def nbc_counts(m: Matroid, order: GroundOrder) -> tuple:
    """``c_i`` = number of i-subsets containing no broken circuit, i = 0..rank."""
    counts = [0] * (m.rank + 1)
    for J in nbc_sets(m, order):
        counts[len(J)] += 1
    return tuple(counts)


# supersolvability

@dataclass(frozen=True)
class SupersolvablePartition:
    blocks: tuple  # tuple of frozensets, earliest block first

    def is_valid_for(self, m: Matroid) -> bool:
        seen: set = set()
        for b in self.blocks:
            if seen & b:
                return False
            seen |= b
        if seen != set(range(m.n)):
            return False
        triangles = {c for c in m.circuits if len(c) == 3}
        for h, b in enumerate(self.blocks):
            earlier = set().union(*self.blocks[:h])
            for x, y in combinations(b, 2):
                if not any(frozenset({x, y, z}) in triangles for z in earlier):
                    return False
        return True


def find_supersolvable_partition(m: Matroid):
    """Ordered partition into ``rank`` blocks with the triangle property, or None.

    Blocks are peeled from the top: a block B on the remaining set R is
    admissible when every pair in B closes a 3-circuit with an element of
    R \\ B.  Larger blocks are tried first, with memoised backtracking.
    """
    triangles = {c for c in m.circuits if len(c) == 3}

    def closes(x, y, pool):
        return any(frozenset({x, y, z}) in triangles for z in pool)

    @lru_cache(maxsize=None)
    def search(rest: frozenset, k: int):
        if k == 0:
            return () if not rest else None
        if k == 1:
            return (rest,) if len(rest) == 1 else None
        elems = sorted(rest)
        # upper bound: the remaining k-1 blocks need at least k-1 elements
        for size in range(len(elems) - (k - 1), 0, -1):
            for B in combinations(elems, size):
                pool = rest.difference(B)
                if all(closes(x, y, pool) for x, y in combinations(B, 2)):
                    sub = search(pool, k - 1)
                    if sub is not None:
                        return sub + (frozenset(B),)
        return None

    if m.n == 0:
        return SupersolvablePartition(())
    blocks = search(frozenset(range(m.n)), m.rank)
    return None if blocks is None else SupersolvablePartition(blocks)


def order_from_partition(p: SupersolvablePartition) -> GroundOrder:
    seq = [x for b in p.blocks for x in sorted(b)]
    return GroundOrder.from_sequence(seq)


def dependent_union_check(m: Matroid, J: Iterable[int], K: Iterable[int]) -> bool:
    """Is ``(J | K) - {l}`` dependent for every ``l`` in ``J | K``?"""
    J, K = frozenset(J), frozenset(K)
    if not (m.is_dependent(J) and m.is_dependent(K)):
        raise PreconditionError("J and K must both be dependent")
    if m.is_dependent(J & K):
        raise PreconditionError("J & K must be independent")
    U = J | K
    return all(m.is_dependent(U - {l}) for l in U)


# JSON files

def matroid_from_dict(data: dict) -> Matroid:
    if not isinstance(data, dict):
        raise MatroidError("matroid file must hold a JSON object")
    if "matrix" in data and "circuits" in data:
        raise MatroidError("give either 'circuits' or 'matrix', not both")
    if "matrix" in data:
        try:
            mat = RationalMatrix(data["matrix"])
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise MatroidError(f"bad matrix entry: {exc}") from exc
        if "n" in data and data["n"] != mat.shape[1]:
            raise MatroidError("'n' disagrees with the number of matrix columns")
        return circuits_from_matrix(mat)
    if "circuits" not in data or "n" not in data:
        raise MatroidError("need 'n' and 'circuits' (or 'matrix')")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise MatroidError("'n' must be a nonnegative integer")
    circuits = []
    for c in data["circuits"]:
        if not all(isinstance(x, int) for x in c):
            raise MatroidError(f"non-integer label in circuit {c}")
        circuits.append([x - 1 for x in c])
    return Matroid(n, circuits)


def matroid_to_dict(m: Matroid) -> dict:
    return {"n": m.n, "circuits": [sorted(x + 1 for x in c) for c in m.circuits]}


def load_matroid(path) -> Matroid:
    with open(path) as fh:
        return matroid_from_dict(json.load(fh))
