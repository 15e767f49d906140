"""Hilbert series, the q = 0 specialisation, and the quadratic-basis test."""

from __future__ import annotations

from dataclasses import dataclass

from .matroid import (
    Matroid,
    SupersolvablePartition,
    find_supersolvable_partition,
    nbc_counts,
    order_from_partition,
)
from .ncalg import GroundOrder, Poly
from .osgb import (
    GroebnerData,
    InconsistencyError,
    buchberger_verify,
    groebner_data,
    standard_monomials,
    standard_words,
)


def format_numerator(c) -> str:
    parts = []
    for i, ci in enumerate(c):
        if not ci:
            continue
        if i == 0:
            body = str(ci)
        else:
            z = "z" if i == 1 else f"z^{i}"
            body = z if ci == 1 else f"{ci}{z}"
        parts.append(body)
    return "+".join(parts) if parts else "0"


@dataclass
class HilbertSummary:
    c: tuple
    numerator: str
    dims: dict

    @property
    def rank(self) -> int:
        return len(self.c) - 1

    def to_dict(self) -> dict:
        return {"c": list(self.c), "numerator": self.numerator, "dims": {str(d): v for d, v in self.dims.items()}}


def hilbert(gd: GroebnerData, max_degree: int = 6) -> HilbertSummary:
    """Graded dimensions of the homogenised quotient.

    The NBC counts give the numerator; the dimensions are the partial sums of
    it and are checked against a direct count of standard monomials.
    """
    c = nbc_counts(gd.matroid, gd.order)
    dims = {d: sum(c[: min(d, len(c) - 1) + 1]) for d in range(max_degree + 1)}
    direct = {d: 0 for d in range(max_degree + 1)}
    for e, w in standard_monomials(gd, max_degree):
        direct[e + len(w)] += 1
    if direct != dims:
        raise InconsistencyError(f"standard monomial count {direct} != partial sums {dims}")
    return HilbertSummary(c, format_numerator(c), dims)


def os_circuit_relation(J, order: GroundOrder) -> Poly:
    """Classical relation: sum over nu of (-1)^(nu-1) t_{J - j_nu}."""
    Js = order.sort(J)
    p = Poly.zero(order)
    for nu in range(len(Js)):
        sign = -1 if nu % 2 else 1
        p = p + Poly.monomial(order, Js[:nu] + Js[nu + 1:], coeff=sign)
    return p


def os_specialization_check(gd: GroebnerData) -> bool:
    """At q = 0 the generators stay a Groebner basis with the same standard words."""
    spec = gd.gens.specialize(0)
    for g in spec.family("circuit"):
        if g.poly != os_circuit_relation(g.subset, gd.order):
            return False
    if not buchberger_verify(spec).passed:
        return False
    n = gd.matroid.n
    return standard_words(spec, n) == standard_words(gd.gens, n)


@dataclass
class KoszulReport:
    partition: SupersolvablePartition | None
    order_used: GroundOrder
    max_gcircuit_size: int
    quadratic: bool

    def to_dict(self) -> dict:
        blocks = None
        if self.partition is not None:
            blocks = [sorted(x + 1 for x in b) for b in self.partition.blocks]
        return {
            "supersolvable_partition": blocks,
            "order": [x + 1 for x in self.order_used.sequence],
            "max_gcircuit_size": self.max_gcircuit_size,
            "quadratic": self.quadratic,
        }


def koszul_check(m: Matroid) -> KoszulReport:
    """Whether a supersolvable order makes every Groebner circuit a triangle.

    This certifies a quadratic Groebner basis only; Koszulness follows from
    it but is not checked independently.
    """
    part = find_supersolvable_partition(m)
    order = order_from_partition(part) if part is not None else GroundOrder.natural(m.n)
    gd = groebner_data(m, order)
    size = max((len(J) for J in gd.gcircuits), default=0)
    return KoszulReport(part, order, size, size <= 3)
