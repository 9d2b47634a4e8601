"""Exact arithmetic in simple number fields Q(a).

A field is fixed by a monic, irreducible minimal polynomial over Q. Its
elements are stored as coefficient vectors in the power basis
``1, a, ..., a^(n-1)``, least-degree-first and always fully reduced, so
structural equality is mathematical equality.

    >>> F = nf_create([-2, 0, 1])          # Q(sqrt 2)
    >>> r = F.gen
    >>> r * r
    AlgebraicNumber('2', x^2 - 2)
    >>> (1 + r).inv()
    AlgebraicNumber('-1 + a', x^2 - 2)

Rationals are the degree-one case ``minpoly = x`` (see :data:`QQ`).
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _expr
from .errors import (
    DegreeCapExceeded,
    DivisionByZero,
    FieldError,
    FieldMismatch,
    NotMonic,
    ParseError,
    Reducible,
)

MAX_DEGREE = 8


# ---------------------------------------------------------------------------
# dense univariate helpers over Q (coefficient lists, least-degree-first)
# ---------------------------------------------------------------------------

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _psub(p, q):
    n = max(len(p), len(q))
    p = list(p) + [0] * (n - len(p))
    q = list(q) + [0] * (n - len(q))
    return _trim(Fraction(a) - b for a, b in zip(p, q))


def _pdivmod(p, q):
    p = [Fraction(c) for c in _trim(p)]
    q = _trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = Fraction(q[-1])
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = p[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _trim(p)
    return _trim(quot), p


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_str(p, var="x"):
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = Fraction(p[k])
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# irreducibility over Q
# ---------------------------------------------------------------------------

def _primitive_integer(p):
    den = math.lcm(*(Fraction(c).denominator for c in p))
    ints = [int(Fraction(c) * den) for c in p]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root(ints):
    """Return a rational root of the integer polynomial, or None."""
    if ints[0] == 0:
        return Fraction(0)
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if _peval(ints, cand) == 0:
                    return cand
    return None


def _lagrange_basis(xs):
    basis = []
    for i, xi in enumerate(xs):
        poly = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                poly = _pmul(poly, [Fraction(-xj), Fraction(1)])
                denom *= xi - xj
        basis.append([c / denom for c in poly])
    return basis


def _kronecker_factor(ints, k):
    """Search for an integer factor of degree ``k`` by Kronecker's method."""
    values = []
    for x in range(-3 * k - 6, 3 * k + 7):
        v = _peval(ints, x)
        if v != 0:
            values.append((abs(v), abs(x), x, v))
    values.sort()
    nodes = values[: k + 1]
    basis = _lagrange_basis([x for _, _, x, _ in nodes])
    # one extra node filters candidates cheaply: g(x) must divide f(x)
    _, _, x_chk, v_chk = values[k + 1]
    chk = [_peval(b, x_chk) for b in basis]
    choices = []
    for idx, (_, _, _, v) in enumerate(nodes):
        ds = _divisors(v)
        choices.append(ds if idx == 0 else ds + [-d for d in ds])
    for ys in itertools.product(*choices):
        at_chk = sum(y * c for y, c in zip(ys, chk))
        if at_chk == 0 or at_chk.denominator != 1 or v_chk % int(at_chk):
            continue
        g = [Fraction(0)] * (k + 1)
        for y, b in zip(ys, basis):
            for i, c in enumerate(b):
                g[i] += y * c
        if g[-1] == 0 or any(c.denominator != 1 for c in g):
            continue
        _, rem = _pdivmod(ints, g)
        if not rem:
            return g
    return None


def find_factor(poly: Sequence) -> list[Fraction] | None:
    """Return a nontrivial monic factor of ``poly`` over Q, or None if irreducible.

    Linear factors come from the rational root test; factors of degree
    2..deg//2 from Kronecker's interpolation search, which is complete
    because any reducible polynomial has a factor of at most half its
    degree.
    """
    p = _trim(Fraction(c) for c in poly)
    n = len(p) - 1
    if n <= 1:
        return None
    ints = _primitive_integer(p)
    root = _rational_root(ints)
    if root is not None:
        return [-root, Fraction(1)]
    for k in range(2, n // 2 + 1):
        g = _kronecker_factor(ints, k)
        if g is not None:
            lead = g[-1]
            return [c / lead for c in g]
    return None


@functools.lru_cache(maxsize=256)
def _checked_factor(minpoly):
    return find_factor(minpoly)


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NumberField:
    """The field Q[x]/(minpoly), with generator printed as ``generator_name``."""

    minpoly: tuple
    generator_name: str = "a"

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in _trim(self.minpoly))
        object.__setattr__(self, "minpoly", coeffs)
        if len(coeffs) < 2:
            raise NotMonic(f"minimal polynomial must have degree >= 1, got {list(self.minpoly)}")
        if coeffs[-1] != 1:
            raise NotMonic(f"minimal polynomial {_poly_str(coeffs)} is not monic")
        if not self.generator_name.isidentifier():
            raise ValueError(f"bad generator name {self.generator_name!r}")
        factor = _checked_factor(coeffs)
        if factor is not None:
            raise Reducible(
                f"{_poly_str(coeffs)} is reducible over Q (factor {_poly_str(factor)})",
                tuple(factor),
            )

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @functools.cached_property
    def _powers(self):
        # coefficient vectors of a^n .. a^(2n-2), used to reduce products
        n = self.degree
        tail = [-c for c in self.minpoly[:-1]]
        rows = [tail]
        for _ in range(n - 2):
            prev = rows[-1]
            shifted = [Fraction(0)] + prev[:-1]
            top = prev[-1]
            rows.append([s + top * t for s, t in zip(shifted, tail)])
        return rows

    def element(self, coeffs: Iterable) -> AlgebraicNumber:
        """Build an element from power-basis coefficients, reducing if too long."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            _, coeffs = _pdivmod(coeffs, self.minpoly)
        coeffs = list(coeffs) + [Fraction(0)] * (self.degree - len(coeffs))
        return AlgebraicNumber(self, tuple(coeffs))

    def __call__(self, value) -> AlgebraicNumber:
        if isinstance(value, AlgebraicNumber):
            return self.coerce(value)
        if isinstance(value, str):
            return self.parse(value)
        return self.element([Fraction(value)])

    def coerce(self, x: AlgebraicNumber) -> AlgebraicNumber:
        if x.field == self:
            return x
        if x.field.is_rational:
            return self.element([x.coeffs[0]])
        raise FieldMismatch(f"element of {x.field} cannot be read in {self}")

    @property
    def zero(self) -> AlgebraicNumber:
        return self.element([])

    @property
    def one(self) -> AlgebraicNumber:
        return self.element([1])

    @property
    def gen(self) -> AlgebraicNumber:
        return self.element([0, 1])

    def parse(self, text: str, where=None) -> AlgebraicNumber:
        """Parse strings like ``"3/2 + 2*a"`` written in the generator."""
        try:
            return _expr.evaluate(text, {self.generator_name: self.gen}, lambda c: self.element([c]), where=where)
        except _expr.UnknownSymbol as exc:
            raise FieldError(
                f"symbol {exc.name!r} in {text!r} is not the generator {self.generator_name!r}",
                where=where,
            ) from None
        except DivisionByZero as exc:
            raise ParseError(f"{text!r}: {exc}", where=where) from None

    def minpoly_str(self, var="x") -> str:
        return _poly_str(self.minpoly, var)

    def __str__(self):
        if self.is_rational:
            return "QQ"
        return f"Q({self.generator_name}) with {self.minpoly_str(self.generator_name)} = 0"


def nf_create(minpoly: Sequence, generator_name: str = "a", max_degree: int = MAX_DEGREE) -> NumberField:
    """Validate ``minpoly`` (least-degree-first) and return its number field.

    Raises NotMonic, Reducible (carrying a witness factor) or
    DegreeCapExceeded.
    """
    coeffs = _trim(Fraction(c) for c in minpoly)
    if len(coeffs) - 1 > max_degree:
        raise DegreeCapExceeded(f"degree {len(coeffs) - 1} exceeds the cap {max_degree}")
    return NumberField(tuple(coeffs), generator_name)


QQ = NumberField((Fraction(0), Fraction(1)))


def _common_field(a, b):
    if a.field == b.field:
        return a.field
    if b.field.is_rational:
        return a.field
    if a.field.is_rational:
        return b.field
    raise FieldMismatch(f"operands live in different fields: {a.field} and {b.field}")


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    field: NumberField
    coeffs: tuple

    def _lift(self, other):
        if isinstance(other, AlgebraicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = _common_field(self, other)
        a, b = F.coerce(self), F.coerce(other)
        return AlgebraicNumber(F, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = _common_field(self, other)
        a, b = F.coerce(self).coeffs, F.coerce(other).coeffs
        n = F.degree
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k, c in enumerate(prod[n:]):
            if c:
                for i, t in enumerate(F._powers[k]):
                    out[i] += c * t
        return AlgebraicNumber(F, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> AlgebraicNumber:
        """Multiplicative inverse via the extended Euclidean algorithm mod minpoly."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        F = self.field
        r0, r1 = list(F.minpoly), _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r1 is a nonzero constant because minpoly is irreducible
        c = r1[0]
        return F.element([x / c for x in s1])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        if self.field == other.field:
            return self.coeffs == other.coeffs
        if self.is_rational() and other.is_rational():
            return self.coeffs[0] == other.coeffs[0]
        return False

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def evaluate_at(self, root):
        """Image under the complex embedding sending the generator to ``root``."""
        return sum(complex(c) * root ** k for k, c in enumerate(self.coeffs))

    def __str__(self):
        return _element_str(self.coeffs, self.field.generator_name)

    def __repr__(self):
        return f"AlgebraicNumber({str(self)!r}, {self.field.minpoly_str()})"


def _element_str(coeffs, name):
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (name if k == 1 else f"{name}^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldAutomorphism:
    """Field automorphism fixed by the image of the generator."""

    field: NumberField
    image_of_generator: AlgebraicNumber

    def __post_init__(self):
        img = self.field.coerce(self.image_of_generator)
        object.__setattr__(self, "image_of_generator", img)
        value = self.field.zero
        for c in reversed(self.field.minpoly):
            value = value * img + c
        if not value.is_zero():
            raise ValueError(f"{img} is not a root of {self.field.minpoly_str()}")

    def __call__(self, a: AlgebraicNumber) -> AlgebraicNumber:
        return apply_automorphism(self, a)

    def compose(self, other: FieldAutomorphism) -> FieldAutomorphism:
        """Return ``self o other``."""
        return FieldAutomorphism(self.field, self(other.image_of_generator))

    @property
    def is_identity(self) -> bool:
        return self.image_of_generator == self.field.gen

    def __str__(self):
        if self.field.is_rational:
            return "identity"
        g = self.field.generator_name
        return f"{g} -> {self.image_of_generator}"


def apply_automorphism(sigma: FieldAutomorphism, a: AlgebraicNumber) -> AlgebraicNumber:
    if a.field != sigma.field:
        if a.field.is_rational:
            return sigma.field.coerce(a)
        raise FieldMismatch(f"automorphism of {sigma.field} applied to element of {a.field}")
    acc = sigma.field.zero
    for c in reversed(a.coeffs):
        acc = acc * sigma.image_of_generator + c
    return acc


def _candidate_images(F, dps=60):
    """Yield power-basis coefficient guesses for roots of minpoly inside F.

    A root ``b = g(a)`` of the minimal polynomial inside F permutes the
    complex roots: ``g(r_k) = r_pi(k)``. We backtrack over the images of
    the roots (real roots stay real, conjugate pairs stay paired) until
    the real linear system for g's coefficients is determined, read off
    the rest of the permutation, and round g to rationals. Callers must
    verify every guess exactly.
    """
    import mpmath
    import numpy as np

    mp = mpmath.MPContext()
    mp.dps = dps
    n = F.degree
    roots = list(mp.polyroots([mp.mpf(c.numerator) / c.denominator for c in reversed(F.minpoly)],
                              maxsteps=400, extraprec=4 * dps))
    tol = mp.mpf(10) ** (-(dps // 2))
    is_real = [abs(mp.im(r)) < tol for r in roots]
    conj_of = {}
    for k, r in enumerate(roots):
        if is_real[k]:
            conj_of[k] = k
        else:
            conj_of[k] = min(range(n), key=lambda j: abs(roots[j] - mp.conj(r)))
    order = [k for k in range(n) if not is_real[k] and mp.im(roots[k]) > 0]
    order += [k for k in range(n) if is_real[k]]

    def rows_for(k, t):
        powers = [roots[k] ** i for i in range(n)]
        out = [([mp.re(p) for p in powers], mp.re(roots[t]))]
        if not is_real[k]:
            out.append(([mp.im(p) for p in powers], mp.im(roots[t])))
        return out

    seen = set()

    def solve(assigned):
        rows = []
        for k, t in assigned.items():
            rows.extend(rows_for(k, t))
        A = np.array([[float(v) for v in r] for r, _ in rows])
        if np.linalg.matrix_rank(A, tol=1e-9) < n:
            return None
        # pick n independent rows greedily, then solve in high precision
        chosen = []
        for i in range(len(rows)):
            trial = chosen + [i]
            if np.linalg.matrix_rank(A[trial], tol=1e-9) == len(trial):
                chosen = trial
            if len(chosen) == n:
                break
        c = mp.lu_solve(mp.matrix([rows[i][0] for i in chosen]), mp.matrix([rows[i][1] for i in chosen]))
        return [c[i] for i in range(n)]

    def finish(c):
        images = []
        for k in range(n):
            val = mp.polyval(list(reversed(c)), roots[k])
            j = min(range(n), key=lambda t: abs(roots[t] - val))
            if abs(roots[j] - val) > tol * 10 ** 6:
                return None
            images.append(j)
        if len(set(images)) != n:
            return None
        return tuple(Fraction(mp.nstr(ci, dps // 2)).limit_denominator(10 ** 15) for ci in c)

    def backtrack(assigned, used):
        c = solve(assigned) if assigned else None
        if c is not None:
            guess = finish(c)
            if guess is not None and guess not in seen:
                seen.add(guess)
                yield guess
            return
        pending = [k for k in order if k not in assigned]
        if not pending:
            return
        k = pending[0]
        for t in range(n):
            if t in used or is_real[t] != is_real[k]:
                continue
            nxt = dict(assigned)
            nxt[k] = t
            nxt[conj_of[k]] = conj_of[t]
            if len(set(nxt.values())) != len(nxt):
                continue
            yield from backtrack(nxt, used | {t, conj_of[t]})

    yield from backtrack({}, frozenset())


def automorphisms(F: NumberField) -> list[FieldAutomorphism]:
    """All automorphisms of F, identity first.

    Candidates come from a numeric search (see ``_candidate_images``) and
    are kept only after an exact check that they are roots of the minimal
    polynomial; the list is then closed under composition.
    """
    ident = FieldAutomorphism(F, F.gen)
    if F.is_rational:
        return [ident]
    found = {ident.image_of_generator.coeffs: ident}
    for guess in _candidate_images(F):
        try:
            sigma = FieldAutomorphism(F, F.element(guess))
        except ValueError:
            continue
        found.setdefault(sigma.image_of_generator.coeffs, sigma)
    changed = True
    while changed:
        changed = False
        for s, t in list(itertools.product(found.values(), repeat=2)):
            st = s.compose(t)
            if st.image_of_generator.coeffs not in found:
                found[st.image_of_generator.coeffs] = st
                changed = True
    rest = sorted((k for k in found if k != ident.image_of_generator.coeffs))
    return [ident] + [found[k] for k in rest]
