"""Sparse multivariate polynomials over Q and monomial orders."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _expr


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent vectors.

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``. A block order
    compares the first ``split`` variables by grevlex and breaks ties with
    grevlex on the remaining ones, which is what elimination needs.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def key(self, exps):
        if self.kind == "lex":
            return exps
        if self.kind == "grevlex":
            return (sum(exps),) + tuple(-e for e in reversed(exps))
        head, tail = exps[: self.split], exps[self.split:]
        return ((sum(head),) + tuple(-e for e in reversed(head))
                + (sum(tail),) + tuple(-e for e in reversed(tail)))

    def __str__(self):
        return f"block({self.split})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block(split: int) -> MonomialOrder:
    return MonomialOrder("block", split)


@dataclass(frozen=True)
class Ring:
    """Q[names]; variables are ordered as listed (first is largest)."""

    names: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self):
        return len(self.names)

    def zero(self):
        return Polynomial(self, {})

    def const(self, c):
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name):
        i = self.names.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exps: Fraction(1)})

    @property
    def gens(self):
        return tuple(self.var(n) for n in self.names)

    def parse(self, text):
        return _expr.evaluate(text, {n: self.var(n) for n in self.names}, self.const)

    def __call__(self, terms):
        return Polynomial(self, terms)


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError(f"monomial {exps} does not match ring {ring.names}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring, p.terms, p._hash = ring, terms, None
        return p

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(map(operator.add, m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, Polynomial):
            if not c.is_constant() or c.is_zero():
                raise ValueError("only division by a nonzero constant is supported")
            c = c.terms[(0,) * self.ring.nvars]
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        c = Fraction(c)
        if not c:
            raise ZeroDivisionError("polynomial division by zero")
        return Polynomial._raw(self.ring, {m: v / c for m, v in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(self.ring.names[i] for i in sorted(used))

    def leading_monomial(self, order: MonomialOrder = GREVLEX):
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX):
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            return self
        return self / self.leading_coefficient(order)

    def evaluate(self, values: Sequence):
        """Evaluate at a point given in ring-variable order (any numeric type)."""
        total = 0
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def rename(self, ring: Ring, mapping: Sequence[int]):
        """Move into ``ring``; variable i of self becomes variable mapping[i]."""
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    new[mapping[i]] += e
            out[tuple(new)] = c
        return Polynomial._raw(ring, out)

    def to_string(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[m]
            factors = []
            for name, e in zip(self.ring.names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((c < 0, body))
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, ring={list(self.ring.names)})"


@dataclass(frozen=True)
class Ideal:
    """Ideal generated by finitely many polynomials in one ring."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators) or (self.ring.zero(),)
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("all generators must live in the ideal's ring")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_strings(cls, names, texts):
        ring = Ring(tuple(names))
        return cls(ring, tuple(ring.parse(t) for t in texts))

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">"
