"""Exact arithmetic in the free algebra Z[t0]<t_s : s in S>.

The central variable ``t0`` has degree one and the deformation parameter is
stored as ``q = t0**2``.  A monomial is keyed by ``(t0exp, word)`` where
``word`` is a tuple of 0-based ground labels.  Monomials are compared by
degree first, then by the padded sequence ``t0 ... t0 w_1 ... w_k`` read
left to right, with ``t0`` below every ground label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Word = tuple  # tuple[int, ...]
Key = tuple  # (t0exp, Word)


class InvalidInputError(ValueError):
    """A label or exponent does not fit the ambient ground order."""


class OrderMismatchError(ValueError):
    pass


class EmptyPolynomialError(ValueError):
    pass


class NonSpecializableError(ValueError):
    """An odd power of t0 cannot be written as a power of q."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class GroundOrder:
    """Total order on the labels ``0..n-1``.

    ``rank_of[label]`` is the position of ``label``; position 0 is least.
    """

    rank_of: tuple

    def __post_init__(self):
        if sorted(self.rank_of) != list(range(len(self.rank_of))):
            raise InvalidInputError(f"rank_of is not a permutation: {self.rank_of}")

    @classmethod
    def natural(cls, n: int) -> "GroundOrder":
        return cls(tuple(range(n)))

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "GroundOrder":
        """Order in which ``seq[0] < seq[1] < ...``."""
        rank = [None] * len(seq)
        for pos, label in enumerate(seq):
            if not 0 <= label < len(seq) or rank[label] is not None:
                raise InvalidInputError(f"not a permutation of 0..{len(seq) - 1}: {list(seq)}")
            rank[label] = pos
        return cls(tuple(rank))

    @property
    def size(self) -> int:
        return len(self.rank_of)

    @property
    def sequence(self) -> tuple:
        seq = [0] * self.size
        for label, pos in enumerate(self.rank_of):
            seq[pos] = label
        return tuple(seq)

    def reversed(self) -> "GroundOrder":
        return GroundOrder.from_sequence(self.sequence[::-1])

    def sort(self, labels: Iterable[int]) -> tuple:
        return tuple(sorted(labels, key=self.rank_of.__getitem__))

    def least(self, labels: Iterable[int]) -> int:
        return min(labels, key=self.rank_of.__getitem__)

    def check_word(self, word: Sequence[int]) -> None:
        n = self.size
        for x in word:
            if not (isinstance(x, int) and 0 <= x < n):
                raise InvalidInputError(f"label {x!r} out of range for ground set of size {n}")

    def sort_key(self, key: Key) -> tuple:
        """Ascending sort key realising the deglex order on ``(t0exp, word)``."""
        e, w = key
        rank = self.rank_of
        return (e + len(w), -e, tuple(rank[x] for x in w))

    def heap_key(self, key: Key) -> tuple:
        """Key whose ascending order is the *descending* deglex order."""
        e, w = key
        rank = self.rank_of
        return (-e - len(w), e, tuple(-rank[x] for x in w))

    def subset_key(self, labels: Iterable[int]) -> tuple:
        """Deglex key on subsets: size first, then the sorted position tuple."""
        pos = sorted(self.rank_of[x] for x in labels)
        return (len(pos), tuple(pos))


def deglex_compare(a: Key, b: Key, order: GroundOrder) -> int:
    """Return -1, 0 or 1 as ``a`` is deglex-less, equal or greater than ``b``."""
    for e, w in (a, b):
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError(f"bad t0 exponent {e!r}")
        order.check_word(w)
    ka, kb = order.sort_key((a[0], tuple(a[1]))), order.sort_key((b[0], tuple(b[1])))
    return (ka > kb) - (ka < kb)


class Term(NamedTuple):
    coeff: int
    t0exp: int
    word: tuple

    @property
    def degree(self) -> int:
        return self.t0exp + len(self.word)

    @property
    def key(self) -> Key:
        return (self.t0exp, self.word)


class Poly:
    """Immutable element of Z[t0]<t_s> over a fixed :class:`GroundOrder`."""

    __slots__ = ("order", "_c", "_sorted")

    def __init__(self, order: GroundOrder, coeffs: Mapping[Key, int] | None = None):
        self.order = order
        self._c = {}
        self._sorted = None
        if coeffs:
            for (e, w), c in coeffs.items():
                if c:
                    w = tuple(w)
                    order.check_word(w)
                    if e < 0:
                        raise InvalidInputError(f"negative t0 exponent {e}")
                    self._c[(e, w)] = c

    @classmethod
    def _raw(cls, order: GroundOrder, coeffs: dict) -> "Poly":
        # coeffs already normalised: tuple words, no zero entries
        p = cls.__new__(cls)
        p.order = order
        p._c = coeffs
        p._sorted = None
        return p

    # constructors
    @classmethod
    def zero(cls, order: GroundOrder) -> "Poly":
        return cls._raw(order, {})

    @classmethod
    def const(cls, order: GroundOrder, c: int) -> "Poly":
        return cls._raw(order, {(0, ()): c} if c else {})

    @classmethod
    def monomial(cls, order: GroundOrder, word: Sequence[int] = (), t0exp: int = 0, coeff: int = 1) -> "Poly":
        return cls(order, {(t0exp, tuple(word)): coeff})

    @classmethod
    def var(cls, order: GroundOrder, s: int) -> "Poly":
        return cls.monomial(order, (s,))

    @classmethod
    def q(cls, order: GroundOrder) -> "Poly":
        return cls._raw(order, {(2, ()): 1})

    # inspection
    def coeffs(self) -> dict:
        return dict(self._c)

    def coeff(self, word: Sequence[int], t0exp: int = 0) -> int:
        return self._c.get((t0exp, tuple(word)), 0)

    def terms(self) -> tuple:
        """Terms in strictly decreasing deglex order."""
        if self._sorted is None:
            keys = sorted(self._c, key=self.order.sort_key, reverse=True)
            self._sorted = tuple(Term(self._c[k], k[0], k[1]) for k in keys)
        return self._sorted

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def leading(self) -> Term:
        if not self._c:
            raise EmptyPolynomialError("zero polynomial has no leading term")
        k = max(self._c, key=self.order.sort_key)
        return Term(self._c[k], k[0], k[1])

    def degree(self) -> int:
        return max((e + len(w) for e, w in self._c), default=-1)

    def t0_exponents(self) -> set:
        return {e for e, _ in self._c}

    # arithmetic
    def _check(self, other: "Poly") -> None:
        if self.order != other.order:
            raise OrderMismatchError("polynomials live over different ground orders")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.const(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return Poly._raw(self.order, c)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.order, {k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.order)
            return Poly._raw(self.order, {k: v * other for k, v in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        c: dict = {}
        for (e1, w1), v1 in self._c.items():
            for (e2, w2), v2 in other._c.items():
                k = (e1 + e2, w1 + w2)
                c[k] = c.get(k, 0) + v1 * v2
        return Poly._raw(self.order, {k: v for k, v in c.items() if v})

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(self.order, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({(0, ()): other} if other else {})
        if not isinstance(other, Poly):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.order, frozenset(self._c.items())))

    def __repr__(self) -> str:
        return f"Poly({print_poly(self)})"

    def __str__(self) -> str:
        return print_poly(self)

    def reorder(self, order: GroundOrder) -> "Poly":
        """The same element of A, compared under another ground order."""
        if order.size != self.order.size:
            raise OrderMismatchError("ground sets differ in size")
        return Poly._raw(order, dict(self._c))


# specialisation

@dataclass(frozen=True)
class QEvaluation:
    qvalue: int


def evaluate_q(f: Poly, ev: QEvaluation | int) -> Poly:
    """Substitute ``q = qvalue``, i.e. ``t0**(2k) -> qvalue**k``."""
    qv = ev.qvalue if isinstance(ev, QEvaluation) else ev
    c: dict = {}
    for (e, w), v in f._c.items():
        if e % 2:
            raise NonSpecializableError(f"odd power t0^{e} in term of {print_poly(f)}")
        k = (0, w)
        c[k] = c.get(k, 0) + v * qv ** (e // 2)
    return Poly._raw(f.order, {k: v for k, v in c.items() if v})


# text I/O

def _factor_strings(e: int, w: tuple) -> list:
    out = []
    half, odd = divmod(e, 2)
    if half == 1:
        out.append("q")
    elif half > 1:
        out.append(f"q^{half}")
    if odd:
        out.append("t0")
    out.extend(f"t{x + 1}" for x in w)
    return out


def print_poly(f: Poly) -> str:
    """Canonical text: decreasing deglex, ``q`` for ``t0^2``, 1-based ``t`` labels."""
    pieces = []
    for c, e, w in f.terms():
        factors = _factor_strings(e, w)
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) if pieces else "0"


_TOKEN = re.compile(r"(\d+)|t(\d+)|(q)|([\^*+\-])")


def _tokenize(text: str) -> list:
    toks = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), i))
        elif m.group(2) is not None:
            toks.append(("t", int(m.group(2)), i))
        elif m.group(3):
            toks.append(("q", None, i))
        else:
            toks.append((m.group(4), None, i))
        i = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, order: GroundOrder):
        self.toks = _tokenize(text)
        self.i = 0
        self.order = order

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[0]}", tok[2])
        self.i += 1
        return tok

    def exponent(self) -> int:
        if self.peek()[0] == "^":
            self.take()
            return self.take("int")[1]
        return 1

    def factor(self):
        kind, val, pos = self.take()
        if kind == "int":
            return val, 0, ()
        if kind == "q":
            return 1, 2 * self.exponent(), ()
        if kind == "t":
            k = self.exponent()
            if val == 0:
                return 1, k, ()
            if val > self.order.size:
                raise ParseError(f"unknown variable t{val}", pos)
            return 1, 0, (val - 1,) * k
        raise ParseError(f"expected a factor, found {kind}", pos)

    def term(self):
        c, e, w = self.factor()
        while self.peek()[0] == "*":
            self.take()
            c2, e2, w2 = self.factor()
            c, e, w = c * c2, e + e2, w + w2
        return c, e, w

    def expr(self) -> Poly:
        acc: dict = {}
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            c, e, w = self.term()
            acc[(e, w)] = acc.get((e, w), 0) + sign * c
            kind = self.peek()[0]
            if kind == "end":
                break
            if kind not in ("+", "-"):
                raise ParseError(f"expected '+' or '-', found {kind}", self.peek()[2])
            sign = -1 if self.take()[0] == "-" else 1
        return Poly._raw(self.order, {k: v for k, v in acc.items() if v})


def parse_poly(text: str, order: GroundOrder) -> Poly:
    """Parse text such as ``"t1*t2 - q^2*t3 + 2"``; ``t0`` is the central variable."""
    return _Parser(text, order).expr()
