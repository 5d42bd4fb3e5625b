"""Point counts over prime fields for nested tuples of monic polynomials.

The independent oracle for the motivic series: a point of the nested
scheme over F_p is a tuple of monic polynomials, one per box, with the
prescribed degrees and with each polynomial divisible by its left and
up neighbours.  Counting the tuples directly ties the divisibility
model to the series: the count equals the motivic coefficient at L = p
box monomial by box monomial on shapes whose diagonals are all
distinct, and diagonal total by diagonal total in general.
"""

from __future__ import annotations

import os
from itertools import product

from .diagram import Box
from .errors import CapExceeded, DomainError
from .poly import L, SparsePoly
from .rpp import RPP

DEFAULT_BUDGET = 10**7
DEFAULT_MAX_P = 7
BUDGET_ENV_VAR = "RPPHILB_MAX_BUDGET"


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def configured_budget() -> int:
    """Enumeration budget: RPPHILB_MAX_BUDGET if set, else the default."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(
            "parse-error", f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}", raw
        )
    if value <= 0:
        raise DomainError(
            "parse-error", f"{BUDGET_ENV_VAR} must be positive, got {value}", value
        )
    return value


class PrimeField:
    """Arithmetic modulo a small prime.

    Monic polynomials are tuples of residues for the coefficients of
    x^0 .. x^(d-1); the leading coefficient 1 is implicit, so the empty
    tuple is the constant polynomial 1.
    """

    __slots__ = ("p",)

    def __init__(self, p: int, max_p: int = DEFAULT_MAX_P):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise DomainError("nonprime-modulus", f"modulus {p!r} is not prime", p)
        if p > max_p:
            raise CapExceeded(
                "cap-exceeded", f"modulus {p} exceeds the field-size cap {max_p}", p
            )
        self.p = p

    def monic_polynomials(self, degree: int):
        """All monic polynomials of the given degree, odometer order."""
        return product(range(self.p), repeat=degree)

    def divides(self, a: tuple, b: tuple) -> bool:
        """Whether monic a divides monic b."""
        da, db = len(a), len(b)
        if da == 0:
            return True
        if db < da:
            return False
        p = self.p
        rem = list(b) + [1]
        for top in range(db, da - 1, -1):
            f = rem[top]
            if f:
                rem[top] = 0
                for i, c in enumerate(a):
                    rem[top - da + i] = (rem[top - da + i] - f * c) % p
        return not any(rem[:da])


def count_points(
    n: RPP, p: int, budget: int | None = None, max_p: int = DEFAULT_MAX_P
) -> int:
    """Number of nested tuples of monic polynomials over F_p shaped by n.

    One monic polynomial of degree n(box) per box, with the left and up
    neighbours dividing it.  The raw search space has p^|n| tuples; the
    call refuses to start when that exceeds the budget.
    """
    field = PrimeField(p, max_p)
    if budget is None:
        budget = configured_budget()
    cost = p**n.size
    if cost > budget:
        raise CapExceeded(
            "budget-exceeded",
            f"{p}^{n.size} = {cost} candidate tuples exceed the budget {budget}",
            n.to_text(),
        )

    boxes = n.diagram.boxes
    index = {box: k for k, box in enumerate(boxes)}
    degrees = [n.value(box) for box in boxes]
    predecessors = [
        [index[nb] for nb in (Box(box.i - 1, box.j), Box(box.i, box.j - 1)) if nb in index]
        for box in boxes
    ]
    assigned: list = [None] * len(boxes)

    def dfs(k: int) -> int:
        if k == len(boxes):
            return 1
        total = 0
        for candidate in field.monic_polynomials(degrees[k]):
            if all(field.divides(assigned[q], candidate) for q in predecessors[k]):
                assigned[k] = candidate
                total += dfs(k + 1)
        assigned[k] = None
        return total

    return dfs(0)


def evaluate_motive(coefficient: SparsePoly, p: int) -> int:
    """Evaluate a series coefficient, a polynomial in L alone, at L = p."""
    extra = [v for v in coefficient.variables() if v != L]
    if extra:
        raise DomainError(
            "parse-error",
            f"coefficient is not univariate in L (also uses {extra[0]})",
            str(coefficient),
        )
    value = coefficient.substitute({L: SparsePoly.constant(p)})
    return _as_int(value)


def _as_int(poly: SparsePoly) -> int:
    if poly.is_zero():
        return 0
    ((mono, c),) = poly.terms.items()
    assert mono == (), "evaluation left unresolved variables"
    return c
