"""Sparse multivariate polynomials over the integers.

Variables are tagged tuples (kind, i, j, k): the main variable ``x``, the
coefficient families ``a``/``b``/``c`` indexed by a box (i=column, j=row)
and a depth k, the motive symbol ``L``, and box-indexed series variables
``q``.  Polynomials are dicts from monomials (sorted tuples of
(variable, exponent) pairs) to integer coefficients.

The text format uses ``+ - * ^`` with explicit multiplication, e.g.
``x^3 - a_1_0_1*x^2 + 2``, and round-trips through ``parse_poly``.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import DomainError

_KIND_RANK = {"x": 0, "a": 1, "b": 2, "c": 3, "L": 4, "q": 5}


class VarId(NamedTuple):
    kind: str
    i: int = 0
    j: int = 0
    k: int = 0

    def sort_key(self) -> tuple:
        return (_KIND_RANK[self.kind], self.j, self.i, self.k)

    def __str__(self) -> str:
        if self.kind in ("x", "L"):
            return self.kind
        if self.kind == "q":
            return f"q_{self.i}_{self.j}"
        return f"{self.kind}_{self.i}_{self.j}_{self.k}"


X = VarId("x")
L = VarId("L")


def var_a(i: int, j: int, k: int) -> VarId:
    return VarId("a", i, j, k)


def var_b(i: int, j: int, k: int) -> VarId:
    return VarId("b", i, j, k)


def var_c(i: int, j: int, k: int) -> VarId:
    return VarId("c", i, j, k)


def var_q(i: int, j: int) -> VarId:
    return VarId("q", i, j)


def parse_var_name(name: str) -> VarId:
    if name == "x":
        return X
    if name == "L":
        return L
    parts = name.split("_")
    kind = parts[0]
    try:
        if kind == "q" and len(parts) == 3:
            return VarId("q", int(parts[1]), int(parts[2]))
        if kind in ("a", "b", "c") and len(parts) == 4:
            return VarId(kind, int(parts[1]), int(parts[2]), int(parts[3]))
    except ValueError:
        pass
    raise DomainError("parse-error", f"unknown variable name {name!r}", name)


# a monomial is a tuple of (VarId, exponent) pairs, sorted, exponents >= 1
Monomial = tuple


def _sorted_monomial(pairs: Iterable) -> Monomial:
    return tuple(sorted(((v, e) for v, e in pairs if e != 0), key=lambda p: p[0].sort_key()))


class SparsePoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        cleaned: dict = {}
        for mono, coeff in (terms or {}).items():
            c = int(coeff)
            if c != coeff:
                raise DomainError("parse-error", "coefficients must be integers", coeff)
            key = _sorted_monomial(mono)
            cleaned[key] = cleaned.get(key, 0) + c
        self.terms = {m: c for m, c in cleaned.items() if c}

    @classmethod
    def constant(cls, c: int) -> "SparsePoly":
        return cls({(): c} if c else {})

    @classmethod
    def variable(cls, v: VarId) -> "SparsePoly":
        return cls({((v, 1),): 1})

    @classmethod
    def x_power(cls, k: int) -> "SparsePoly":
        return cls({((X, k),): 1}) if k else cls.constant(1)

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> list[VarId]:
        seen = {v for mono in self.terms for v, _ in mono}
        return sorted(seen, key=lambda v: v.sort_key())

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> "SparsePoly":
        other = _coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return _raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "SparsePoly":
        other = _coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparsePoly":
        if e < 0:
            raise DomainError("parse-error", "negative polynomial power", e)
        result = SparsePoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SparsePoly.constant(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- x as the main variable ------------------------------------------------

    def degree_in_x(self) -> int:
        """Largest power of x, or -1 for the zero polynomial."""
        deg = -1
        for mono in self.terms:
            d = 0
            for v, e in mono:
                if v == X:
                    d = e
            deg = max(deg, d)
        return deg

    def x_coefficients(self) -> list["SparsePoly"]:
        """Coefficients of x^0, x^1, ... as polynomials in the other variables."""
        deg = self.degree_in_x()
        coeffs = [dict() for _ in range(deg + 1)] if deg >= 0 else []
        for mono, c in self.terms.items():
            d = 0
            rest = []
            for v, e in mono:
                if v == X:
                    d = e
                else:
                    rest.append((v, e))
            coeffs[d][tuple(rest)] = coeffs[d].get(tuple(rest), 0) + c
        return [_raw(d) for d in coeffs]

    def coefficient_of_x(self, k: int) -> "SparsePoly":
        coeffs = self.x_coefficients()
        return coeffs[k] if 0 <= k < len(coeffs) else SparsePoly.constant(0)

    # -- degrees, linear parts, substitution -----------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self.terms)

    def weighted_degree(self, grading) -> int | None:
        """Max over monomials of the grading-weighted degree; None if zero."""
        g = grading if callable(grading) else (lambda v: grading[v])
        best = None
        for mono in self.terms:
            w = sum(e * g(v) for v, e in mono)
            best = w if best is None else max(best, w)
        return best

    def is_homogeneous(self, grading) -> bool:
        g = grading if callable(grading) else (lambda v: grading[v])
        degrees = {sum(e * g(v) for v, e in mono) for mono in self.terms}
        return len(degrees) <= 1

    def linear_part(self) -> dict:
        """Coefficients of the degree-one monomials, as a VarId -> int dict."""
        out = {}
        for mono, c in self.terms.items():
            if len(mono) == 1 and mono[0][1] == 1:
                out[mono[0][0]] = c
        return out

    def substitute(self, assignments: dict) -> "SparsePoly":
        """Replace variables by polynomials (unlisted variables stay)."""
        result = SparsePoly.constant(0)
        for mono, c in self.terms.items():
            term = SparsePoly.constant(c)
            for v, e in mono:
                if v in assignments:
                    term = term * (_coerce(assignments[v]) ** e)
                else:
                    term = term * _raw({((v, e),): 1})
            result = result + term
        return result

    # -- printing and parsing ----------------------------------------------------

    def _sort_terms(self) -> list:
        """Descending graded lex: total degree first, then the exponent vector
        over the canonically ordered variables (x most significant)."""
        all_vars = self.variables()
        pos = {v: p for p, v in enumerate(all_vars)}

        def key(item):
            mono, _ = item
            vec = [0] * len(all_vars)
            for v, e in mono:
                vec[pos[v]] = e
            return (sum(vec), vec)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self._sort_terms():
            factors = [str(v) if e == 1 else f"{v}^{e}" for v, e in mono]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    __repr__ = __str__


def _raw(terms: dict) -> SparsePoly:
    p = SparsePoly.__new__(SparsePoly)
    p.terms = terms
    return p


def _coerce(value) -> SparsePoly:
    if isinstance(value, SparsePoly):
        return value
    if isinstance(value, int):
        return SparsePoly.constant(value)
    raise DomainError("parse-error", f"cannot use {value!r} as a polynomial", value)


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    exps: dict = {}
    for v, e in m1:
        exps[v] = exps.get(v, 0) + e
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return _sorted_monomial(exps.items())


def divmod_in_x(f: SparsePoly, g: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """Quotient and remainder of f by g, viewing both as polynomials in x.

    The divisor must be monic in x (leading x-coefficient equal to 1), which
    keeps everything over the integers.
    """
    dg = g.degree_in_x()
    if dg < 0 or g.coefficient_of_x(dg) != SparsePoly.constant(1):
        raise DomainError("non-monic-divisor", "division requires a divisor monic in x", str(g))
    q = SparsePoly.constant(0)
    r = f
    while r.degree_in_x() >= dg:
        dr = r.degree_in_x()
        lead = r.coefficient_of_x(dr)
        shift = lead * SparsePoly.x_power(dr - dg)
        q = q + shift
        r = r - shift * g
        assert r.degree_in_x() < dr, "division must strictly reduce the x-degree"
    return q, r


# -- parser ------------------------------------------------------------------


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "+-*^()":
            tokens.append(ch)
            pos += 1
        elif ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(int(text[start:pos]))
        elif ch.isalpha():
            start = pos
            while pos < len(text) and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(parse_var_name(text[start:pos]))
        else:
            raise DomainError("parse-error", f"unexpected character {ch!r} in polynomial", text)
    return tokens


def parse_poly(text: str) -> SparsePoly:
    """Parse the ``+ - * ^`` text format back into a polynomial."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_atom() -> SparsePoly:
        tok = peek()
        if tok == "(":
            take()
            inner = parse_expr()
            if peek() != ")":
                raise DomainError("parse-error", "missing ')' in polynomial", text)
            take()
            return inner
        if isinstance(tok, int):
            return SparsePoly.constant(take())
        if isinstance(tok, VarId):
            return SparsePoly.variable(take())
        raise DomainError("parse-error", f"unexpected token {tok!r} in polynomial", text)

    def parse_factor() -> SparsePoly:
        base = parse_atom()
        if peek() == "^":
            take()
            exp = peek()
            if not isinstance(exp, int):
                raise DomainError("parse-error", "exponent must be a number", text)
            take()
            return base**exp
        return base

    def parse_term() -> SparsePoly:
        result = parse_factor()
        while peek() == "*":
            take()
            result = result * parse_factor()
        return result

    def parse_expr() -> SparsePoly:
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        result = sign * parse_term()
        while peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
            result = result + sign * parse_term()
        return result

    if not tokens:
        raise DomainError("parse-error", "empty polynomial text", text)
    result = parse_expr()
    if pos != len(tokens):
        raise DomainError("parse-error", f"trailing tokens in polynomial {text!r}", text)
    return result
