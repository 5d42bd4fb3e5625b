"""Irreducible-component classification for the double nested scheme of an RPP.

Components correspond to factorisations of the RPP into indicators; every
component has dimension equal to the weight.  A component is smooth exactly
when the indicators in its factorisation's support are linearly independent
(injective differential); it is a bijection on points exactly when the
kernel of the support matrix contains no nonzero integer vector bounded
coordinatewise by the multiplicities.  Smoothness implies bijectivity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .diagram import YoungDiagram
from .errors import CapExceeded
from .linalg import integer_normalize, kernel_basis, rref, solve_from_rref
from .rpp import RPP, Factorization, all_factorizations, indicators

#: default cap on the lattice-point search in bijective_on_points
MAX_WITNESS_SEARCH = 10**6


def component_dimension(n: RPP) -> int:
    """Common dimension of all components: the weight of the RPP."""
    return n.weight()


def dimension_recursive(n: RPP) -> int:
    """Weight computed by socle-peeling induction instead of the derivative.

    Single-socle diagrams are rectangles, where the answer is the corner
    label.  Otherwise, with the socle boxes ordered by column, either the
    leftmost socle box sits in column i1 > 0 and the first i1 columns can
    be dropped, or it sits in column 0 and the column-0 boxes below the
    next socle row can be removed at the cost of the label difference.
    """
    lam = n.diagram
    soc = sorted(lam.socle())
    if len(soc) == 1:
        return n.value(soc[0])
    i1, j1 = soc[0]
    if i1 > 0:
        sub = YoungDiagram(lam.cols[i1:])
        vals = [n.value((b.i + i1, b.j)) for b in sub.boxes]
        return dimension_recursive(RPP(sub, vals))
    i2, j2 = soc[1]
    sub = YoungDiagram((j2 + 1,) + lam.cols[1:])
    vals = [n.value(b) for b in sub.boxes]
    return n.value((0, j1)) - n.value((0, j2)) + dimension_recursive(RPP(sub, vals))


def _support_matrix(T: Factorization) -> list[list[Fraction]]:
    """Box-by-support matrix whose columns are the support indicators."""
    support = T.support
    size = support[0].diagram.size
    return [[Fraction(ind.values[row]) for ind in support] for row in range(size)]


def _check_relation(T: Factorization, coeffs: dict) -> None:
    size = T.support[0].diagram.size
    for row in range(size):
        assert sum(c * ind.values[row] for ind, c in coeffs.items()) == 0, (
            "relation witness does not reconstruct to zero"
        )


def differential_injective(T: Factorization) -> tuple[bool, dict | None]:
    """Whether the support indicators are linearly independent.

    On failure returns a primitive integer relation as a dict
    {indicator: coefficient} with Σ coeff·indicator = 0.
    """
    if not T.support:
        return True, None
    basis = kernel_basis(_support_matrix(T))
    if not basis:
        return True, None
    witness = integer_normalize(basis[0])
    coeffs = {ind: c for ind, c in zip(T.support, witness) if c}
    _check_relation(T, coeffs)
    return False, coeffs


def bijective_on_points(
    T: Factorization, max_search: int = MAX_WITNESS_SEARCH
) -> tuple[bool, dict | None]:
    """Whether no integer relation fits inside the multiplicity box.

    Searches for a nonzero integer kernel vector m with |m_ν| ≤ n_ν for
    every support indicator ν (n_ν the multiplicity).  The search assigns
    every free column of the reduced support matrix a value in its box and
    solves for the pivot columns, which visits each rational kernel vector
    at most once, so it is exhaustive within the box.  Among the witnesses
    found, the one with the smallest coefficient sum (then lexicographically
    smallest) is returned.
    """
    support = T.support
    if not support:
        return True, None
    mults = [T.multiplicity(ind) for ind in support]
    reduced, pivots = rref(_support_matrix(T))
    pivot_set = set(pivots)
    free = [c for c in range(len(support)) if c not in pivot_set]
    if not free:
        return True, None

    combos = 1
    for f in free:
        combos *= 2 * mults[f] + 1
    if combos > max_search:
        raise CapExceeded(
            "search-too-large",
            f"witness box has {combos} lattice points, cap is {max_search}",
            None,
        )

    best: tuple | None = None
    for values in itertools.product(*(range(-mults[f], mults[f] + 1) for f in free)):
        if all(v == 0 for v in values):
            continue
        vec = solve_from_rref(
            reduced, pivots, {f: Fraction(v) for f, v in zip(free, values)}, len(support)
        )
        if any(v.denominator != 1 for v in vec):
            continue
        ints = [int(v) for v in vec]
        if any(abs(m) > bound for m, bound in zip(ints, mults)):
            continue
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-w for w in ints]
                break
        score = (sum(abs(m) for m in ints), tuple(ints))
        if best is None or score < best:
            best = score
    if best is None:
        return True, None
    coeffs = {ind: c for ind, c in zip(support, best[1]) if c}
    _check_relation(T, coeffs)
    return False, coeffs


@dataclass(frozen=True)
class ComponentReport:
    factorization: Factorization
    dimension: int
    smooth: bool
    bijective_on_points: bool
    differential_injective: bool
    relation_witness: tuple | None  # full integer vector over indicators(λ)
    normalization: tuple  # ((indicator, multiplicity), ...)

    def to_json_obj(self) -> dict:
        return {
            "factorization": {ind.to_text(): m for ind, m in self.factorization.terms.items()},
            "dimension": self.dimension,
            "smooth": self.smooth,
            "bijective_on_points": self.bijective_on_points,
            "differential_injective": self.differential_injective,
            "relation_witness": list(self.relation_witness) if self.relation_witness else None,
            "normalization": [
                {"indicator": ind.to_text(), "multiplicity": m} for ind, m in self.normalization
            ],
        }


def _lift_witness(diagram: YoungDiagram, coeffs: dict | None) -> tuple | None:
    if coeffs is None:
        return None
    return tuple(coeffs.get(ind, 0) for ind in indicators(diagram))


def classify(
    n: RPP,
    max_weight: int | None = None,
    max_indicators: int | None = None,
    max_search: int = MAX_WITNESS_SEARCH,
) -> list[ComponentReport]:
    """One report per factorisation, in enumeration order."""
    dim = component_dimension(n)
    reports = []
    for T in all_factorizations(n, max_weight=max_weight, max_indicators=max_indicators):
        inj, diff_witness = differential_injective(T)
        bij, box_witness = bijective_on_points(T, max_search=max_search)
        if not bij:
            witness = box_witness
        elif not inj:
            witness = diff_witness
        else:
            witness = None
        reports.append(
            ComponentReport(
                factorization=T,
                dimension=dim,
                smooth=inj,
                bijective_on_points=bij,
                differential_injective=inj,
                relation_witness=_lift_witness(n.diagram, witness),
                normalization=tuple(T.terms.items()),
            )
        )
    return reports
