"""Generators of the deformed Orlik-Solomon ideal and their Groebner basis.

For a ground order ``<`` the ideal is generated by

* ``t_s^2 - q``                              (squares),
* ``t_r t_s + t_s t_r - 2q`` for ``s < r``   (commutators),
* ``d_J`` for each Groebner circuit ``J``    (circuit generators),

where ``d_J`` / ``d+_J`` are the signed sums over the odd / even subsets
``I`` of ``J`` of ``(-1)^ell_J(I) (-q)^{floor(#I/2)} t_{J-I}``.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .matroid import Matroid
from .ncalg import GroundOrder, Poly, evaluate_q, print_poly


class InconsistencyError(RuntimeError):
    """An internal cross-check disagreed; points at a bug, not bad input."""


def ell(J: Sequence[int], I: Iterable[int]) -> int:
    """Sum over nu of (alpha_nu - nu), alpha_nu the position in J of the nu-th element of I.

    ``J`` is given in increasing order; ``I`` is read in the order of ``J``.
    """
    pos = {x: i for i, x in enumerate(J, 1)}
    I = set(I)
    if not I <= pos.keys():
        raise ValueError(f"{sorted(I)} is not a subset of {list(J)}")
    alphas = sorted(pos[x] for x in I)
    return sum(a - nu for nu, a in enumerate(alphas, 1))


def _boundary(J: Iterable[int], order: GroundOrder, parity: int) -> Poly:
    Js = order.sort(J)
    k = len(Js)
    coeffs = {}
    for mask in range(1 << k):
        size = bin(mask).count("1")
        if size % 2 != parity:
            continue
        # ell_J(I) as an inversion count: chosen positions minus their rank
        l, nu = 0, 0
        word = []
        for i, x in enumerate(Js):
            if mask >> i & 1:
                l += i - nu
                nu += 1
            else:
                word.append(x)
        half = size // 2
        sign = -1 if (l + half) % 2 else 1
        coeffs[(2 * half, tuple(word))] = sign
    return Poly._raw(order, coeffs)


def del_minus(J: Iterable[int], order: GroundOrder) -> Poly:
    """``d_J``: sum over odd I of (-1)^ell (-q)^((#I-1)/2) t_{J-I}; zero for empty J."""
    return _boundary(J, order, 1)


def del_plus(J: Iterable[int], order: GroundOrder) -> Poly:
    """``d+_J``: the even-subset companion; ``d+_{} = 1``."""
    return _boundary(J, order, 0)


def is_convex(K: Iterable[int], J: Iterable[int], order: GroundOrder) -> bool:
    """K is a subset of J containing every element of J that lies between two elements of K."""
    K = set(K)
    Js = order.sort(J)
    if not K <= set(Js):
        return False
    idx = [i for i, x in enumerate(Js) if x in K]
    return not idx or idx[-1] - idx[0] + 1 == len(idx)


def dependent_sets(m: Matroid, order: GroundOrder) -> list:
    """All dependent subsets, deglex-increasing."""
    out = []
    for k in range(3, m.n + 1):
        for J in combinations(range(m.n), k):
            if m.is_dependent(J):
                out.append(frozenset(J))
    out.sort(key=order.subset_key)
    return out


def grobner_circuits(m: Matroid, order: GroundOrder) -> list:
    """Dependent J admitted unless an earlier admitted K has K-{k1} convex in J-{j1}."""
    admitted: list = []
    broken: list = []
    for J in dependent_sets(m, order):
        tail = J - {order.least(J)}
        if not any(is_convex(b, tail, order) for b in broken):
            admitted.append(J)
            broken.append(J - {order.least(J)})
    return admitted


@dataclass(frozen=True)
class Generator:
    name: str
    family: str  # "square" | "comm" | "circuit" | "extra"
    poly: Poly
    lm: tuple
    rest: tuple  # ((t0exp, word, coeff), ...) of poly minus its leading term
    subset: tuple = ()  # sorted J for circuit generators (0-based)


def _fmt_set(J: Iterable[int]) -> str:
    return "{" + ",".join(str(x + 1) for x in J) + "}"


def make_generator(name: str, family: str, poly: Poly, subset: tuple = ()) -> Generator:
    lt = poly.leading()
    if lt.coeff != 1 or lt.t0exp != 0:
        raise InconsistencyError(f"{name}: leading term {lt} is not a monic word")
    rest = tuple((e, w, c) for (e, w), c in poly._c.items() if (e, w) != lt.key)
    return Generator(name, family, poly, lt.word, rest, subset)


class GeneratorSet:
    """Generators plus an index of their leading words for subword search."""

    def __init__(self, order: GroundOrder, gens: Sequence[Generator]):
        self.order = order
        self.gens = tuple(gens)
        self.by_lm: dict = {}
        for i, g in enumerate(self.gens):
            if g.poly.order != order:
                raise InconsistencyError(f"{g.name} built over a different order")
            self.by_lm.setdefault(g.lm, []).append(i)
        self.lm_index = {w: idx[0] for w, idx in self.by_lm.items()}
        self.lengths = tuple(sorted({len(w) for w in self.lm_index}))

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i: int) -> Generator:
        return self.gens[i]

    def family(self, name: str) -> list:
        return [g for g in self.gens if g.family == name]

    def find(self, word: tuple):
        """Leftmost position holding some leading word; ties go to the earliest generator."""
        index = self.lm_index
        n = len(word)
        for i in range(n):
            best = None
            for L in self.lengths:
                if i + L > n:
                    break
                gi = index.get(word[i:i + L])
                if gi is not None and (best is None or gi < best):
                    best = gi
            if best is not None:
                return best, i
        return None

    def specialize(self, qvalue: int) -> "GeneratorSet":
        gens = [make_generator(g.name, g.family, evaluate_q(g.poly, qvalue), g.subset) for g in self.gens]
        return GeneratorSet(self.order, gens)


def square_gen(s: int, order: GroundOrder) -> Generator:
    p = Poly.monomial(order, (s, s)) - Poly.q(order)
    return make_generator(f"sq{s + 1}", "square", p)


def comm_gen(r: int, s: int, order: GroundOrder) -> Generator:
    """``t_r t_s + t_s t_r - 2q`` for ``s < r``; leading word ``(r, s)``."""
    p = Poly.monomial(order, (r, s)) + Poly.monomial(order, (s, r)) - 2 * Poly.q(order)
    return make_generator(f"c{r + 1},{s + 1}", "comm", p)


def circuit_gen(J: Iterable[int], order: GroundOrder) -> Generator:
    Js = order.sort(J)
    return make_generator("d" + _fmt_set(Js), "circuit", del_minus(Js, order), Js)


def build_generators(order: GroundOrder, gcircuits: Iterable[Iterable[int]]) -> GeneratorSet:
    seq = order.sequence
    gens = [square_gen(s, order) for s in seq]
    for i, s in enumerate(seq):
        for r in seq[i + 1:]:
            gens.append(comm_gen(r, s, order))
    for J in sorted((frozenset(J) for J in gcircuits), key=order.subset_key):
        gens.append(circuit_gen(J, order))
    for g in gens:
        if g.family == "circuit":
            expect = g.subset[1:]
        elif g.family == "square":
            expect = g.lm[:1] * 2
        else:
            expect = g.lm
            if not order.rank_of[expect[0]] > order.rank_of[expect[1]]:
                raise InconsistencyError(f"{g.name}: leading word {g.lm} not a descent")
        if g.lm != expect:
            raise InconsistencyError(f"{g.name}: leading word {g.lm}, expected {expect}")
    return GeneratorSet(order, gens)


@dataclass
class GroebnerData:
    matroid: Matroid
    order: GroundOrder
    gcircuits: list
    gens: GeneratorSet = field(repr=False)


def groebner_data(m: Matroid, order: GroundOrder | None = None, truncate: int | None = None) -> GroebnerData:
    """Groebner circuits and generators of ``m`` under ``order``.

    ``truncate`` keeps only the first ``truncate`` Groebner circuits; it exists
    for negative tests and yields a generating set that is *not* a Groebner basis.
    """
    order = order or GroundOrder.natural(m.n)
    if order.size != m.n:
        raise ValueError(f"order has size {order.size}, matroid has {m.n} elements")
    gc = grobner_circuits(m, order)
    if truncate is not None:
        gc = gc[:truncate]
    return GroebnerData(m, order, gc, build_generators(order, gc))


def _gens(x) -> GeneratorSet:
    return x.gens if isinstance(x, GroebnerData) else x


# reduction

def reduce(f: Poly, gens) -> Poly:
    """Normal form of ``f``: greatest reducible term first, leftmost match."""
    gens = _gens(gens)
    order = gens.order
    if f.order != order:
        raise ValueError("polynomial and generators use different ground orders")
    hk = order.heap_key
    coeffs = dict(f._c)
    heap = [(hk(k), k) for k in coeffs]
    heapq.heapify(heap)
    out = {}
    find = gens.find
    G = gens.gens
    while heap:
        k = heapq.heappop(heap)[1]
        c = coeffs.pop(k)
        if not c:
            continue
        e, w = k
        hit = find(w)
        if hit is None:
            out[k] = c
            continue
        g = G[hit[0]]
        u, v = w[:hit[1]], w[hit[1] + len(g.lm):]
        for ge, gw, gc in g.rest:
            nk = (e + ge, u + gw + v)
            old = coeffs.get(nk)
            if old is None:
                coeffs[nk] = -c * gc
                heapq.heappush(heap, (hk(nk), nk))
            else:
                coeffs[nk] = old - c * gc
    return Poly._raw(order, out)


# obstructions and S-polynomials

@dataclass(frozen=True)
class Obstruction:
    """``left * suf - pre * right`` (overlap) or ``left - pre * right * suf`` (containment).

    In both cases the leading words satisfy the matching condition
    ``lm(left) * a == b * lm(right) * c`` for the implied monomials.
    """

    left: int
    right: int
    kind: str  # "overlap" | "containment"
    pre: tuple
    suf: tuple

    def words(self, gens: GeneratorSet) -> tuple:
        f, g = gens.gens[self.left].lm, gens.gens[self.right].lm
        if self.kind == "overlap":
            return f + self.suf, self.pre + g
        return f, self.pre + g + self.suf


def obstructions(gens) -> list:
    gens = _gens(gens)
    G = gens.gens
    by_prefix: dict = {}
    for j, g in enumerate(G):
        for k in range(1, len(g.lm)):
            by_prefix.setdefault(g.lm[:k], []).append(j)
    out = []
    for i, f in enumerate(G):
        a = f.lm
        for k in range(1, len(a)):
            for j in by_prefix.get(a[-k:], ()):
                b = G[j].lm
                out.append(Obstruction(i, j, "overlap", a[:-k], b[k:]))
        for L in range(1, len(a) + 1):
            for p in range(len(a) - L + 1):
                for j in gens.by_lm.get(a[p:p + L], ()):
                    if L == len(a) and j <= i:
                        continue
                    out.append(Obstruction(i, j, "containment", a[:p], a[p + L:]))
    return out


def s_polynomial(o: Obstruction, gens) -> Poly:
    gens = _gens(gens)
    order = gens.order
    f, g = gens.gens[o.left].poly, gens.gens[o.right].poly
    pre, suf = Poly.monomial(order, o.pre), Poly.monomial(order, o.suf)
    if o.kind == "overlap":
        return f * suf - pre * g
    return f - pre * g * suf


@dataclass
class Failure:
    pair: tuple
    kind: str
    normal_form: Poly

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "kind": self.kind, "normal_form": print_poly(self.normal_form)}


@dataclass
class VerifyReport:
    passed: bool
    n_obstructions: int
    failures: list

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "n_obstructions": self.n_obstructions,
            "failures": [f.to_dict() for f in self.failures],
        }


def _check_chunk(args):
    gens, obs = args
    bad = []
    for o in obs:
        nf = reduce(s_polynomial(o, gens), gens)
        if nf:
            bad.append((o, nf))
    return bad


def buchberger_verify(gd, jobs: int = 1) -> VerifyReport:
    """Reduce every S-polynomial; a Groebner basis leaves no nonzero remainder."""
    gens = _gens(gd)
    obs = obstructions(gens)
    if jobs > 1 and len(obs) > 1:
        chunks = [obs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as ex:
            bad = [b for part in ex.map(_check_chunk, [(gens, c) for c in chunks]) for b in part]
        pos = {o: i for i, o in enumerate(obs)}
        bad.sort(key=lambda b: pos[b[0]])
    else:
        bad = _check_chunk((gens, obs))
    G = gens.gens
    failures = [Failure((G[o.left].name, G[o.right].name), o.kind, nf) for o, nf in bad]
    return VerifyReport(not failures, len(obs), failures)


def dependent_reduction_failures(gd: GroebnerData, gens: GeneratorSet | None = None) -> list:
    """Dependent sets J whose ``d_J`` does not reduce to zero."""
    gens = gens or gd.gens
    order = gd.order
    return [J for J in dependent_sets(gd.matroid, order) if reduce(del_minus(J, order), gens)]


def dependent_reduction_check(gd: GroebnerData) -> bool:
    return not dependent_reduction_failures(gd)


def standard_words(gens, max_length: int) -> list:
    """Words avoiding every leading word as a subword, by depth-first extension."""
    gens = _gens(gens)
    letters = gens.order.sequence
    lms = gens.lm_index
    lengths = gens.lengths
    out = [()]
    stack = [()]
    while stack:
        w = stack.pop()
        if len(w) >= max_length:
            continue
        for x in letters:
            nw = w + (x,)
            if any(L <= len(nw) and nw[-L:] in lms for L in lengths):
                continue
            out.append(nw)
            stack.append(nw)
    out.sort(key=lambda w: gens.order.sort_key((0, w)))
    return out


def standard_monomials(gd, max_degree: int) -> list:
    """Keys ``(e, word)`` with ``e + len(word) <= max_degree`` irreducible modulo the basis.

    ``t0`` is central and occurs in no leading word, so every power of it is
    allowed; at e = 0 the words are exactly the ``t_J`` with J free of broken circuits.
    """
    gens = _gens(gd)
    words = standard_words(gens, max_degree)
    keys = [(e, w) for w in words for e in range(max_degree - len(w) + 1)]
    keys.sort(key=gens.order.sort_key)
    return keys


def order_independence_check(m: Matroid, order_a: GroundOrder, order_b: GroundOrder) -> bool:
    """Do the bases built under the two orders generate the same ideal?"""
    ga, gb = groebner_data(m, order_a).gens, groebner_data(m, order_b).gens
    for src, dst in ((gb, ga), (ga, gb)):
        for g in src:
            if reduce(g.poly.reorder(dst.order), dst):
                return False
    return True
