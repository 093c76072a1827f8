"""
Sparse multivariate Laurent polynomials with integer coefficients.

Monomials are stored as exponent tuples with trailing zeros trimmed, so a
polynomial over y1..yk embeds into y1..yn (n > k) without rewriting any key.
The ambient width travels with each polynomial and is widened on demand.

Term order is degree-lexicographic with y1 > y2 > ... > yn.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple


class PolyError(Exception):
    pass


class NonDivisibleCoefficient(PolyError):
    pass


class ZeroPolynomial(PolyError):
    pass


class ParseError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def trim(exps: Iterable[int]) -> tuple:
    exps = tuple(exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


def pad(exps: tuple, width: int) -> tuple:
    return exps + (0,) * (width - len(exps))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    la, lb = len(a), len(b)
    if la == lb:
        m = tuple(x + y for x, y in zip(a, b))
        return trim(m) if m and m[-1] == 0 else m
    if la < lb:
        a, b, la, lb = b, a, lb, la
    head = tuple(x + y for x, y in zip(a, b))
    return head + a[lb:]


@dataclass(frozen=True)
class Monomial:
    """y^exponents. `exponents` is kept trimmed; `ambient_vars` records the width."""

    exponents: tuple
    ambient_vars: int = 0

    def __post_init__(self):
        exps = trim(self.exponents)
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "ambient_vars", max(self.ambient_vars, len(exps)))

    @classmethod
    def one(cls, ambient_vars: int = 0) -> "Monomial":
        return cls((), ambient_vars)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def padded(self, width: int | None = None) -> tuple:
        return pad(self.exponents, self.ambient_vars if width is None else width)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(_mono_mul(self.exponents, other.exponents),
                        max(self.ambient_vars, other.ambient_vars))

    def __eq__(self, other):
        # ambient width is bookkeeping, not identity
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial({format_monomial(self.exponents) or '1'})"


class BiDegree(NamedTuple):
    d_odd: int
    d_even: int

    def __add__(self, other):
        return BiDegree(self.d_odd + other.d_odd, self.d_even + other.d_even)


class TermOrder:
    """Degree-lexicographic order, y1 > y2 > ... ."""

    name = "deglex"

    @staticmethod
    def key(exps: tuple, width: int):
        return (sum(exps), pad(exps, width))

    def compare(self, a, b) -> int:
        a = a.exponents if isinstance(a, Monomial) else trim(a)
        b = b.exponents if isinstance(b, Monomial) else trim(b)
        width = max(len(a), len(b))
        ka, kb = self.key(a, width), self.key(b, width)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return "TermOrder(deglex)"


DEGLEX = TermOrder()


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial over the integers.

    Equality compares term maps only; two polynomials that differ solely in
    ambient width are equal.
    """

    __slots__ = ("_terms", "_nvars", "_hash")

    def __init__(self, terms: Mapping | None = None, nvars: int = 0):
        clean = {}
        width = nvars
        if terms:
            for m, c in terms.items():
                if isinstance(m, Monomial):
                    m = m.exponents
                else:
                    m = trim(m)
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
                width = max(width, len(m))
        self._terms = clean
        self._nvars = width
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "LaurentPoly":
        # terms must already be trimmed and zero-free
        p = cls.__new__(cls)
        p._terms = terms
        p._nvars = nvars
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int, nvars: int = 0) -> "LaurentPoly":
        return cls._raw({(): c} if c else {}, nvars)

    @classmethod
    def monomial(cls, exps, coeff: int = 1, nvars: int = 0) -> "LaurentPoly":
        if isinstance(exps, Monomial):
            nvars = max(nvars, exps.ambient_vars)
            exps = exps.exponents
        return cls({tuple(exps): coeff}, nvars)

    @classmethod
    def var(cls, j: int, nvars: int = 0) -> "LaurentPoly":
        """The variable y_j (1-based)."""
        if j < 1:
            raise ValueError(f"variable index must be >= 1, got {j}")
        return cls._raw({(0,) * (j - 1) + (1,): 1}, max(nvars, j))

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return self._nvars

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        """Yield (coefficient, exponent tuple) in descending term order."""
        for m in self.sorted_monomials():
            yield self._terms[m], m

    def sorted_monomials(self) -> list:
        width = self._nvars
        return sorted(self._terms, key=lambda m: DEGLEX.key(m, width), reverse=True)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()}, self._nvars)

    def _combine(self, other, sign: int) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LaurentPoly._raw(out, max(self._nvars, other._nvars))

    def __add__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (LaurentPoly, int)):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({}, self._nvars)
            return LaurentPoly._raw({m: c * other for m, c in self._terms.items()}, self._nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return linear_combination([(1, self, other)])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.constant(1, self._nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_term(self, coeff: int, mono) -> "LaurentPoly":
        return poly_div_term(self, coeff, mono)

    def variables(self) -> set:
        """1-based indices of variables that occur with nonzero exponent."""
        used = set()
        for m in self._terms:
            used.update(j + 1 for j, e in enumerate(m) if e)
        return used

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def linear_combination(pairs: Iterable[tuple[int, LaurentPoly, LaurentPoly]]) -> LaurentPoly:
    """
    Sum of c * p * q over (c, p, q) triples, accumulated in a single dict.

    Inside the product loop each exponent vector is packed into one integer
    with a fixed-width field per variable, offset by `shift` so that negative
    exponents stay inside their field; a monomial product is then one
    integer addition.
    """
    pairs = [(c, p, q) for c, p, q in pairs]
    width = max((max(p.nvars, q.nvars) for _, p, q in pairs), default=0)
    live = [(c, p._terms, q._terms) for c, p, q in pairs if c and p and q]
    if not live:
        return LaurentPoly._raw({}, width)
    vars_used = max(len(m) for _, a, b in live for t in (a, b) for m in t)
    shift = 1 + max(abs(e) for _, a, b in live for t in (a, b) for m in t for e in m) \
        if vars_used else 1
    bits = (4 * shift).bit_length() + 1
    offsets = [bits * j for j in range(vars_used)]
    packed = {}

    def pack(terms):
        key = id(terms)
        if key not in packed:
            packed[key] = [
                (sum((e + shift) << off for e, off in zip(pad(m, vars_used), offsets)), c)
                for m, c in terms.items()
            ]
        return packed[key]

    acc = defaultdict(int)
    for c, a, b in live:
        if len(a) < len(b):
            a, b = b, a
        pa = pack(a)
        for kb, cb in pack(b):
            cb *= c
            for ka, ca in pa:
                acc[ka + kb] += ca * cb
    mask = (1 << bits) - 1
    base = 2 * shift
    out = {}
    for k, v in acc.items():
        if v:
            out[trim(((k >> off) & mask) - base for off in offsets)] = v
    return LaurentPoly._raw(out, width)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_div_term(p: LaurentPoly, coeff: int, mono) -> LaurentPoly:
    """Exact division of `p` by the term coeff * y^mono."""
    if coeff == 0:
        raise ZeroDivisionError("division by a zero term")
    width = p.nvars
    if isinstance(mono, Monomial):
        width = max(width, mono.ambient_vars)
        mono = mono.exponents
    else:
        mono = trim(mono)
    inv = tuple(-e for e in mono)
    out = {}
    for m, c in p.terms.items():
        q, r = divmod(c, coeff)
        if r:
            raise NonDivisibleCoefficient(
                f"coefficient {c} of {format_monomial(m) or '1'} is not divisible by {coeff}")
        out[_mono_mul(m, inv)] = q
    return LaurentPoly._raw(out, max(width, len(mono)))


def leading_term(p: LaurentPoly, order: TermOrder = DEGLEX) -> tuple[int, Monomial]:
    if not p:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    width = p.nvars
    m = max(p.terms, key=lambda e: order.key(e, width))
    return p.terms[m], Monomial(m, width)


def monomial_bidegree(exps: tuple) -> BiDegree:
    # y1, y3, ... sit at even 0-based positions
    return BiDegree(sum(exps[0::2]), sum(exps[1::2]))


def bidegree(p: LaurentPoly) -> BiDegree | None:
    """Common bidegree of all terms, or None if `p` is not bihomogeneous.

    The zero polynomial has no terms and is reported as (0, 0).
    """
    degs = {monomial_bidegree(m) for m in p.terms}
    if len(degs) > 1:
        return None
    return degs.pop() if degs else BiDegree(0, 0)


def is_polynomial(p: LaurentPoly) -> bool:
    return all(e >= 0 for m in p.terms for e in m)


# -- text format -----------------------------------------------------------

def format_monomial(exps: tuple) -> str:
    parts = []
    for j, e in enumerate(exps):
        if e == 0:
            continue
        parts.append(f"y{j + 1}" if e == 1 else f"y{j + 1}^{e}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    if not p:
        return "0"
    out = []
    for k, (c, m) in enumerate(p):
        mono = format_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>y(?P<idx>\d+))|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        start = m.end() - len(m.group().lstrip())
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("idx")), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text form (also accepts any term order and spacing)."""
    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take(kind):
        nonlocal k
        tok = tokens[k]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        k += 1
        return tok

    acc = defaultdict(int)
    width = 0
    sign = 1
    if peek()[0] in "+-":
        sign = -1 if take(peek()[0])[0] == "-" else 1
    while True:
        coeff = 1
        exps: dict[int, int] = {}
        tok = peek()
        if tok[0] == "int":
            coeff = take("int")[1]
            if peek()[0] == "*":
                take("*")
                tok = peek()
                if tok[0] != "var":
                    raise ParseError("expected variable after '*'", tok[2])
            else:
                tok = None
        elif tok[0] != "var":
            raise ParseError("expected term", tok[2])
        while tok is not None:
            idx = take("var")[1]
            if idx < 1:
                raise ParseError("variable index must be >= 1", tok[2])
            e = 1
            if peek()[0] == "^":
                take("^")
                esign = 1
                if peek()[0] in "+-":
                    esign = -1 if take(peek()[0])[0] == "-" else 1
                e = esign * take("int")[1]
            exps[idx] = exps.get(idx, 0) + e
            width = max(width, idx)
            if peek()[0] == "*":
                take("*")
                tok = peek()
                if tok[0] != "var":
                    raise ParseError("expected variable after '*'", tok[2])
            else:
                tok = None
        mono = trim(exps.get(j + 1, 0) for j in range(max(exps, default=0)))
        acc[mono] += sign * coeff
        nxt = peek()
        if nxt[0] == "end":
            break
        if nxt[0] not in "+-":
            raise ParseError(f"unexpected {nxt[0]!r}", nxt[2])
        sign = -1 if take(nxt[0])[0] == "-" else 1
    return LaurentPoly(dict(acc), width)
