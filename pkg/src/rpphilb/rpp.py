"""Reverse plane partitions and their factorisation monoid.

An RPP is a nonnegative integer filling of a Young diagram that is
nondecreasing rightward and downward.  Under pointwise addition these form
a cancellative commutative monoid whose irreducible elements are exactly
the indicator fillings of nonempty edge-connected upper sets; every
factorisation of a fixed RPP into indicators has the same length, its
weight.  This module implements the arithmetic, the discrete mixed second
difference (derivative) and weight, indicator enumeration, and the
standard / complete / exhaustive factorisation constructions.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .diagram import Box, UpperSet, YoungDiagram, connected_parts, enumerate_upper_sets
from .errors import CapExceeded, DomainError

#: caps for the exhaustive factorisation search
MAX_FACTORIZATION_WEIGHT = 12
MAX_FACTORIZATION_INDICATORS = 64


class Filling:
    """Integer labels on the boxes of a diagram, row-major."""

    __slots__ = ("diagram", "values")

    def __init__(self, diagram: YoungDiagram, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if len(vals) != diagram.size:
            raise DomainError(
                "parse-error",
                f"expected {diagram.size} values for diagram {list(diagram.cols)}, got {len(vals)}",
                list(vals),
            )
        self.diagram = diagram
        self.values = vals

    @property
    def size(self) -> int:
        """Total of all labels."""
        return sum(self.values)

    def value(self, box) -> int:
        """Label at a box; 0 outside the diagram (zero extension)."""
        if box not in self.diagram:
            return 0
        return self.values[self.diagram.box_index(Box(*box))]

    __getitem__ = value

    def rows(self) -> list[list[int]]:
        out: list[list[int]] = []
        for box, v in zip(self.diagram.boxes, self.values):
            if box.j == len(out):
                out.append([])
            out[box.j].append(v)
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Filling)
            and self.diagram == other.diagram
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.diagram.cols, self.values))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.diagram.cols)}, {list(self.values)})"

    def to_text(self) -> str:
        return " / ".join(" ".join(str(v) for v in row) for row in self.rows())


class RPP(Filling):
    """Nonnegative filling, nondecreasing rightward and downward."""

    __slots__ = ()

    def __init__(self, diagram: YoungDiagram, values: Iterable[int]):
        super().__init__(diagram, values)
        for box, v in zip(diagram.boxes, self.values):
            if v < 0:
                raise DomainError("negative-label", f"negative label {v} at {tuple(box)}", list(self.values))
            left = self.value((box.i - 1, box.j))
            up = self.value((box.i, box.j - 1))
            if (box.i > 0 and v < left) or (box.j > 0 and v < up):
                raise DomainError(
                    "not-monotone",
                    f"label {v} at {tuple(box)} is smaller than a left/up neighbour",
                    list(self.values),
                )

    # -- monoid arithmetic ---------------------------------------------------

    def __add__(self, other: "RPP") -> "RPP":
        if not isinstance(other, RPP) or other.diagram != self.diagram:
            raise DomainError("diagram-mismatch", "can only add fillings of the same diagram", None)
        return RPP(self.diagram, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, k: int) -> "RPP":
        if k < 0:
            raise DomainError("negative-scale", "scaling factor must be nonnegative", k)
        return RPP(self.diagram, tuple(k * v for v in self.values))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    # -- derivative and weight -------------------------------------------------

    def derivative(self) -> Filling:
        """Mixed second difference, with the filling extended by zero off the diagram."""
        vals = []
        for box in self.diagram.boxes:
            i, j = box
            vals.append(
                self.value((i, j))
                - self.value((i - 1, j))
                - self.value((i, j - 1))
                + self.value((i - 1, j - 1))
            )
        return Filling(self.diagram, vals)

    def weight(self) -> int:
        """Total of the derivative; equals socle sum minus subsocle sum."""
        w = sum(self.derivative().values)
        soc = sum(self.value(b) for b in self.diagram.socle())
        sub = sum(self.value(b) for b in self.diagram.subsocle())
        assert w == soc - sub, f"weight formulas disagree: {w} vs {soc - sub}"
        return w

    # -- serialisation ----------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "RPP":
        rows = [list(r) for r in rows]
        if not rows or any(not r for r in rows):
            raise DomainError("parse-error", "rows must be nonempty", rows)
        widths = [len(r) for r in rows]
        if any(widths[k] < widths[k + 1] for k in range(len(widths) - 1)):
            raise DomainError("parse-error", "row lengths must be nonincreasing", rows)
        cols = [sum(1 for w in widths if w > i) for i in range(widths[0])]
        diagram = YoungDiagram(cols)
        values = [rows[b.j][b.i] for b in diagram.boxes]
        return cls(diagram, values)

    @classmethod
    def from_text(cls, text: str) -> "RPP":
        rows = []
        for chunk in text.split("/"):
            parts = chunk.split()
            if not parts:
                raise DomainError("parse-error", f"empty row in RPP text {text!r}", text)
            try:
                rows.append([int(p) for p in parts])
            except ValueError:
                raise DomainError("parse-error", f"bad label in RPP text {text!r}", text) from None
        if not rows:
            raise DomainError("parse-error", "empty RPP text", text)
        return cls.from_rows(rows)

    def to_json_obj(self) -> dict:
        return {"cols": list(self.diagram.cols), "rows": self.rows()}

    @classmethod
    def from_json_obj(cls, obj) -> "RPP":
        if not isinstance(obj, dict) or "rows" not in obj:
            raise DomainError("parse-error", 'RPP JSON needs a "rows" list of lists', obj)
        rpp = cls.from_rows(obj["rows"])
        if "cols" in obj and tuple(obj["cols"]) != rpp.diagram.cols:
            raise DomainError("parse-error", 'RPP JSON "cols" disagree with "rows"', obj)
        return rpp


def zero_rpp(diagram: YoungDiagram) -> RPP:
    return RPP(diagram, (0,) * diagram.size)


class Indicator(RPP):
    """0/1 filling of a nonempty edge-connected upper set — an irreducible RPP."""

    __slots__ = ("upper_set",)

    def __init__(self, upper_set: UpperSet):
        if not upper_set.members:
            raise DomainError("empty-upper-set", "indicator needs a nonempty upper set", None)
        if not upper_set.is_connected():
            raise DomainError("disconnected-upper-set", "indicator needs a connected upper set", None)
        super().__init__(upper_set.diagram, upper_set.member_vector())
        self.upper_set = upper_set


def indicators(diagram: YoungDiagram, max_boxes: int | None = None) -> list[Indicator]:
    """All indicator fillings, descending-lex on the row-major 0/1 vector."""
    uppers = enumerate_upper_sets(
        diagram, connected_only=True, nonempty_only=True, max_boxes=max_boxes
    )
    return [Indicator(u) for u in uppers]


def is_indicator(n: RPP) -> bool:
    """Irreducibility test: weight one (equivalently, membership in indicators())."""
    return n.weight() == 1


class Factorization:
    """Multiset of indicators with positive multiplicities."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        cleaned = {}
        diagram = None
        for ind, mult in terms.items():
            if mult == 0:
                continue
            if mult < 0:
                raise DomainError("negative-multiplicity", "multiplicities must be positive", mult)
            if diagram is None:
                diagram = ind.diagram
            elif ind.diagram != diagram:
                raise DomainError("diagram-mismatch", "all indicators must share one diagram", None)
            cleaned[ind] = int(mult)
        # canonical support order: descending lex on the indicator vectors
        self.terms = dict(sorted(cleaned.items(), key=lambda kv: kv[0].values, reverse=True))

    @property
    def support(self) -> tuple:
        return tuple(self.terms.keys())

    @property
    def length(self) -> int:
        return sum(self.terms.values())

    def multiplicity(self, ind) -> int:
        return self.terms.get(ind, 0)

    def total(self) -> RPP:
        """The RPP this factorisation decomposes: sum of multiplicity * indicator."""
        inds = list(self.terms.items())
        if not inds:
            raise DomainError("empty-factorization", "cannot total an empty factorisation", None)
        diagram = inds[0][0].diagram
        vals = [0] * diagram.size
        for ind, mult in inds:
            for pos, v in enumerate(ind.values):
                vals[pos] += mult * v
        return RPP(diagram, vals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Factorization):
            return NotImplemented
        mine = {(ind.diagram.cols, ind.values): m for ind, m in self.terms.items()}
        theirs = {(ind.diagram.cols, ind.values): m for ind, m in other.terms.items()}
        return mine == theirs

    def __hash__(self) -> int:
        return hash(frozenset((ind.values, m) for ind, m in self.terms.items()))

    def __repr__(self) -> str:
        parts = [f"{m}*[{ind.to_text()}]" for ind, m in self.terms.items()]
        return " + ".join(parts) if parts else "0"


def _indicator_of_members(diagram: YoungDiagram, members) -> Indicator:
    return Indicator(UpperSet(diagram, members))


def standard_factorization(n: RPP) -> Factorization:
    """Level-set factorisation: always exists for a nonzero RPP.

    For each distinct positive value k (ascending), the boxes with label >= k
    form an upper set; its connected parts enter with coefficient equal to
    the gap from the previous level.
    """
    if n.is_zero():
        raise DomainError("zero-input", "the zero filling has no standard factorisation", n.to_text())
    levels = sorted({v for v in n.values if v > 0})
    terms: dict = {}
    prev = 0
    for k in levels:
        members = [b for b, v in zip(n.diagram.boxes, n.values) if v >= k]
        for part in connected_parts(UpperSet(n.diagram, members)):
            ind = Indicator(part)
            terms[ind] = terms.get(ind, 0) + (k - prev)
        prev = k
    fact = Factorization(terms)
    assert fact.total() == n
    return fact


def complete_factorization(n: RPP) -> Factorization | None:
    """Factorisation by principal upper sets; exists iff the derivative is >= 0.

    When it exists it is unique, and each indicator in its support has a
    unique minimal box.
    """
    from .diagram import principal_upper_set

    deriv = n.derivative()
    if any(v < 0 for v in deriv.values):
        return None
    terms: dict = {}
    for box, dv in zip(n.diagram.boxes, deriv.values):
        if dv > 0:
            terms[Indicator(principal_upper_set(n.diagram, box))] = dv
    fact = Factorization(terms)
    assert fact.total() == n
    return fact


def _subtract_if_rpp(n_vals: tuple[int, ...], ind_vals: tuple[int, ...], diagram: YoungDiagram):
    """n - indicator as a value tuple, or None when the result is not an RPP."""
    out = []
    for a, b in zip(n_vals, ind_vals):
        d = a - b
        if d < 0:
            return None
        out.append(d)
    for box in diagram.boxes:
        pos = diagram.box_index(box)
        if box.i > 0 and out[pos] < out[diagram.box_index(Box(box.i - 1, box.j))]:
            return None
        if box.j > 0 and out[pos] < out[diagram.box_index(Box(box.i, box.j - 1))]:
            return None
    return tuple(out)


def all_factorizations(
    n: RPP,
    max_weight: int | None = None,
    max_indicators: int | None = None,
) -> list[Factorization]:
    """Exhaustive duplicate-free enumeration of the factorisations of ``n``.

    Depth-first subtraction over the canonical indicator list, with the
    indicator position nondecreasing along each branch (so each multiset is
    visited exactly once) and pruning whenever the remainder stops being an
    RPP — partial sums of any factorisation are RPPs, so the pruning is safe.
    """
    w_cap = MAX_FACTORIZATION_WEIGHT if max_weight is None else max_weight
    i_cap = MAX_FACTORIZATION_INDICATORS if max_indicators is None else max_indicators
    w = n.weight()
    if w > w_cap:
        raise CapExceeded("search-too-large", f"weight {w} exceeds the cap {w_cap}", n.to_text())
    inds = indicators(n.diagram)
    if len(inds) > i_cap:
        raise CapExceeded(
            "search-too-large", f"{len(inds)} indicators exceed the cap {i_cap}", n.to_text()
        )
    if n.is_zero():
        return [Factorization({})]

    results: list[Factorization] = []
    path: list[Indicator] = []

    def search(vals: tuple[int, ...], start: int) -> None:
        if all(v == 0 for v in vals):
            terms: dict = {}
            for ind in path:
                terms[ind] = terms.get(ind, 0) + 1
            results.append(Factorization(terms))
            return
        for pos in range(start, len(inds)):
            rest = _subtract_if_rpp(vals, inds[pos].values, n.diagram)
            if rest is None:
                continue
            path.append(inds[pos])
            search(rest, pos)
            path.pop()

    search(n.values, 0)
    for fact in results:
        assert fact.length == w, "factorisation length must equal the weight"
        assert fact.total() == n
    return results


def enumerate_rpps(diagram: YoungDiagram, max_size: int) -> list[RPP]:
    """All RPPs on the diagram with label total <= max_size, duplicate-free.

    Sorted by (total, row-major value vector) for deterministic output.
    """
    if max_size < 0:
        raise DomainError("negative-size", "max_size must be nonnegative", max_size)
    boxes = diagram.boxes
    index = {b: pos for pos, b in enumerate(boxes)}
    out: list[RPP] = []
    vals: list[int] = [0] * len(boxes)

    def rec(pos: int, used: int) -> None:
        if pos == len(boxes):
            out.append(RPP(diagram, tuple(vals)))
            return
        box = boxes[pos]
        lower = 0
        if box.i > 0:
            lower = max(lower, vals[index[Box(box.i - 1, box.j)]])
        if box.j > 0:
            lower = max(lower, vals[index[Box(box.i, box.j - 1)]])
        for v in range(lower, max_size - used + 1):
            vals[pos] = v
            rec(pos + 1, used + v)
        vals[pos] = 0

    rec(0, 0)
    out.sort(key=lambda r: (r.size, r.values))
    return out


def iter_rpps_of_size(diagram: YoungDiagram, total: int) -> Iterator[RPP]:
    """RPPs with label total exactly ``total`` (convenience filter)."""
    for r in enumerate_rpps(diagram, total):
        if r.size == total:
            yield r
