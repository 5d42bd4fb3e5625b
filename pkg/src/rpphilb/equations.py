"""Local defining equations of the double nested scheme over the affine line.

Two presentations of the same ideal.  Type I tracks one universal monic
polynomial per box and imposes divisibility towards the left and upper
neighbours; its generators are the x-coefficients of division remainders.
Type II tracks monic difference factors along rows (L) and columns (U) and
imposes, per box, that the two ways around the commuting square agree; its
generators are the x-coefficients of L_{i,j}·U_{i-1,j} − U_{i,j}·L_{i,j-1}.

Both ideals are homogeneous for the grading deg a/b/c(i,j,k) = k, which
allows a deterministic reduction onto the tangent space at the origin:
variables that occur linearly with unit coefficient and nowhere else in
some generator are eliminated by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Box
from .errors import DomainError
from .linalg import rank
from .poly import SparsePoly, VarId, divmod_in_x, var_a, var_b, var_c
from .rpp import RPP


@dataclass
class AmbientSummary:
    dim_ambient: int
    rank_bundle: int
    expected_dim: int

    def to_json_obj(self) -> dict:
        return {
            "dim_ambient": self.dim_ambient,
            "rank_bundle": self.rank_bundle,
            "expected_dim": self.expected_dim,
        }


def ambient_and_bundle(n: RPP) -> AmbientSummary:
    """Dimension of the ambient chart, rank of the condition bundle, difference.

    The ambient dimension counts the origin label plus all horizontal and
    vertical label differences; the bundle rank counts, over boxes with both
    neighbours, the diagonal difference.  Their difference is the weight.
    """
    dim = n.value((0, 0))
    rk = 0
    for box in n.diagram.boxes:
        if box.i >= 1:
            dim += n.value(box) - n.value((box.i - 1, box.j))
        if box.j >= 1:
            dim += n.value(box) - n.value((box.i, box.j - 1))
        if box.i >= 1 and box.j >= 1:
            rk += n.value(box) - n.value((box.i - 1, box.j - 1))
    summary = AmbientSummary(dim, rk, dim - rk)
    assert summary.expected_dim == n.weight(), "ambient minus bundle must equal the weight"
    return summary


@dataclass
class IdealPresentation:
    ambient_vars: tuple
    generators: tuple
    grading: dict
    groups: tuple = ()
    condition_count: int | None = None

    def __post_init__(self):
        allowed = set(self.ambient_vars)
        for g in self.generators:
            stray = [v for v in g.variables() if v not in allowed]
            assert not stray, f"generator uses variables outside the ambient ring: {stray}"
        assert all(d > 0 for d in self.grading.values()), "grading must be strictly positive"

    @property
    def n_vars(self) -> int:
        return len(self.ambient_vars)

    @property
    def n_generators(self) -> int:
        return len(self.generators)

    def group_sizes(self) -> list[int]:
        return [g["size"] for g in self.groups]

    def generator_degrees(self) -> list[int]:
        """Weighted degrees of the nonzero generators, sorted."""
        return sorted(
            g.weighted_degree(self.grading) for g in self.generators if not g.is_zero()
        )

    def to_json_obj(self) -> dict:
        return {
            "ambient_vars": [str(v) for v in self.ambient_vars],
            "grading": {str(v): d for v, d in self.grading.items()},
            "generators": [str(g) for g in self.generators],
            "groups": [
                {
                    "box": list(g["box"]),
                    "divisor_box": list(g["divisor_box"]) if g.get("divisor_box") else None,
                    "size": g["size"],
                }
                for g in self.groups
            ],
            "n_vars": self.n_vars,
            "n_generators": self.n_generators,
            "condition_count": self.condition_count,
        }


def universal_monic(n: RPP, box) -> SparsePoly:
    """x^d + a(i,j,1)·x^(d-1) + … + a(i,j,d) with d the label at the box."""
    i, j = box
    d = n.value(box)
    p = SparsePoly.x_power(d)
    for k in range(1, d + 1):
        p = p + SparsePoly.variable(var_a(i, j, k)) * SparsePoly.x_power(d - k)
    return p


def _remainder_coefficients(dividend: SparsePoly, divisor: SparsePoly, d: int) -> list[SparsePoly]:
    """The d remainder coefficients, highest x-power first."""
    _, r = divmod_in_x(dividend, divisor)
    coeffs = r.x_coefficients()
    coeffs += [SparsePoly.constant(0)] * (d - len(coeffs))
    return [coeffs[deg] for deg in range(d - 1, -1, -1)]


def type_i_ideal(n: RPP) -> IdealPresentation:
    """Divisibility presentation: one monic polynomial per box, remainders vanish.

    Variables a(i,j,k) for 1 ≤ k ≤ label(i,j).  Per box in row-major order,
    the remainder against the left neighbour is imposed before the one
    against the upper neighbour; degree-0 divisors impose nothing.
    """
    lam = n.diagram
    ambient = tuple(
        var_a(b.i, b.j, k) for b in lam.boxes for k in range(1, n.value(b) + 1)
    )
    polys = {b: universal_monic(n, b) for b in lam.boxes}
    generators: list[SparsePoly] = []
    groups: list[dict] = []
    conditions = 0
    for box in lam.boxes:
        conditions += (
            n.value((box.i - 1, box.j))
            + n.value((box.i, box.j - 1))
            - n.value((box.i - 1, box.j - 1))
        )
        for divisor_box in (Box(box.i - 1, box.j), Box(box.i, box.j - 1)):
            if divisor_box.i < 0 or divisor_box.j < 0:
                continue
            d = n.value(divisor_box)
            if d == 0:
                continue
            generators.extend(_remainder_coefficients(polys[box], polys[divisor_box], d))
            groups.append({"box": tuple(box), "divisor_box": tuple(divisor_box), "size": d})
    return IdealPresentation(
        ambient_vars=ambient,
        generators=tuple(generators),
        grading={v: v.k for v in ambient},
        groups=tuple(groups),
        condition_count=conditions,
    )


def _difference_factor(n: RPP, box, kind: str) -> SparsePoly:
    """L (kind 'b', row difference) or U (kind 'c', column difference) at a box."""
    i, j = box
    if i < 0 or j < 0:
        return SparsePoly.constant(1)
    if kind == "b":
        d = n.value(box) - n.value((i - 1, j))
        mk = var_b
    else:
        d = n.value(box) - n.value((i, j - 1))
        mk = var_c
    p = SparsePoly.x_power(d)
    for k in range(1, d + 1):
        p = p + SparsePoly.variable(mk(i, j, k)) * SparsePoly.x_power(d - k)
    return p


def type_ii_ideal(n: RPP, minimal_border: bool = False) -> IdealPresentation:
    """Commuting-square presentation via row/column difference factors.

    Variables b(i,j,k) up to the row difference and c(i,j,k) up to the
    column difference of each box.  Per box, the two products around the
    square agree up to the common monic leading term, leaving
    label(i,j) − label(i−1,j−1) coefficient conditions.

    ``minimal_border`` drops the redundant border variables (b on column 0
    above the origin, c on row 0) together with the border equations; the
    remaining chart has exactly the ambient/bundle dimensions of
    ambient_and_bundle.
    """
    lam = n.diagram

    def keep_b(box) -> bool:
        return not (minimal_border and box.i == 0 and box.j >= 1)

    def keep_c(box) -> bool:
        return not (minimal_border and box.j == 0)

    b_vars = [
        var_b(b.i, b.j, k)
        for b in lam.boxes
        if keep_b(b)
        for k in range(1, n.value(b) - n.value((b.i - 1, b.j)) + 1)
    ]
    c_vars = [
        var_c(b.i, b.j, k)
        for b in lam.boxes
        if keep_c(b)
        for k in range(1, n.value(b) - n.value((b.i, b.j - 1)) + 1)
    ]
    ambient = tuple(sorted(b_vars + c_vars, key=lambda v: v.sort_key()))

    generators: list[SparsePoly] = []
    groups: list[dict] = []
    for box in lam.boxes:
        if minimal_border and (box.i == 0 or box.j == 0):
            continue
        D = n.value(box) - n.value((box.i - 1, box.j - 1))
        if D == 0:
            continue
        eq = _difference_factor(n, box, "b") * _difference_factor(
            n, (box.i - 1, box.j), "c"
        ) - _difference_factor(n, box, "c") * _difference_factor(n, (box.i, box.j - 1), "b")
        assert eq.degree_in_x() < D, "monic leading terms must cancel"
        coeffs = eq.x_coefficients()
        coeffs += [SparsePoly.constant(0)] * (D - len(coeffs))
        generators.extend(coeffs[deg] for deg in range(D - 1, -1, -1))
        groups.append({"box": tuple(box), "size": D})
    return IdealPresentation(
        ambient_vars=ambient,
        generators=tuple(generators),
        grading={v: v.k for v in ambient},
        groups=tuple(groups),
        condition_count=len(generators),
    )


def check_grading(I: IdealPresentation) -> bool:
    """True when every generator is homogeneous for the stored grading."""
    return all(g.is_homogeneous(I.grading) for g in I.generators)


def _occurs_outside_linear(g: SparsePoly, v: VarId) -> bool:
    linear_mono = ((v, 1),)
    for mono in g.terms:
        if mono == linear_mono:
            continue
        if any(w == v for w, _ in mono):
            return True
    return False


def tangent_embedding(I: IdealPresentation) -> tuple[int, IdealPresentation]:
    """Embedding dimension at the origin and the reduced presentation.

    The tangent dimension is #variables minus the rank of the generators'
    linear parts.  The reduction repeatedly eliminates the variable of
    smallest weighted degree (ties by canonical variable order) that occurs
    in some generator linearly with coefficient ±1 and in no other term of
    that generator; the generator is solved for it and the solution is
    substituted everywhere.  Raises when generators with surviving linear
    parts stall before that rank is exhausted.
    """
    assert check_grading(I), "tangent reduction requires a homogeneous presentation"
    var_order = list(I.ambient_vars)
    var_pos = {v: p for p, v in enumerate(var_order)}
    lin_matrix = []
    for g in I.generators:
        lp = g.linear_part()
        lin_matrix.append([lp.get(v, 0) for v in var_order])
    lin_rank = rank(lin_matrix) if lin_matrix else 0
    tangent_dim = len(var_order) - lin_rank

    gens = [g for g in I.generators if not g.is_zero()]
    remaining = list(var_order)
    while True:
        best = None
        for gi, g in enumerate(gens):
            for v, coeff in g.linear_part().items():
                if coeff in (1, -1) and not _occurs_outside_linear(g, v):
                    key = (I.grading[v], v.sort_key(), gi)
                    if best is None or key < best[0]:
                        best = (key, v, coeff, gi)
        if best is None:
            break
        _, v, s, gi = best
        g = gens[gi]
        replacement = -s * (g - s * SparsePoly.variable(v))
        gens = [h.substitute({v: replacement}) for idx, h in enumerate(gens) if idx != gi]
        gens = [h for h in gens if not h.is_zero()]
        remaining.remove(v)

    # a generator repeated verbatim adds nothing to the ideal
    seen = set()
    deduped = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            deduped.append(g)
    gens = deduped

    for g in gens:
        if g.linear_part():
            raise DomainError(
                "no-eliminable-variable",
                "reduction stalled while linear parts remain",
                str(g),
            )
    assert len(remaining) == tangent_dim, "eliminations must account for the full linear rank"
    reduced = IdealPresentation(
        ambient_vars=tuple(remaining),
        generators=tuple(gens),
        grading={v: I.grading[v] for v in remaining},
        groups=(),
        condition_count=None,
    )
    assert check_grading(reduced), "substitution must preserve homogeneity"
    return tangent_dim, reduced
