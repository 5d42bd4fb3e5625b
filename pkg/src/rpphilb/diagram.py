"""Young diagrams as finite posets.

A diagram is stored as its nonincreasing column heights; box (i, j) has
column index i growing rightward and row index j growing downward, so the
box set is {(i, j) : j < cols[i]} and it is downward closed for the
componentwise order.  On top of that this module provides hooks (the boxes
weakly below or weakly to the right), the socle (maximal boxes), the
subsocle (boxes whose right and down neighbours are present but whose
diagonal neighbour is not), and upper sets with their edge-connected parts.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import CapExceeded, DomainError

#: default guard against combinatorial blowup in upper-set enumeration
MAX_DIAGRAM_BOXES = 30


class Box(NamedTuple):
    i: int  # column, increasing rightward
    j: int  # row, increasing downward


def partial_order_leq(a: Box, b: Box) -> bool:
    """Componentwise order: a <= b iff a sits weakly up-left of b."""
    return a[0] <= b[0] and a[1] <= b[1]


def boxes_adjacent(a: Box, b: Box) -> bool:
    """Edge adjacency: the two boxes share a side."""
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


class YoungDiagram:
    """Partition as nonincreasing positive column heights."""

    __slots__ = ("cols", "boxes", "_index")

    def __init__(self, col_heights: Iterable[int]):
        try:
            cols = tuple(int(h) for h in col_heights)
        except (TypeError, ValueError):
            raise DomainError("parse-error", "column heights must be integers", col_heights) from None
        if not cols:
            raise DomainError("empty-diagram", "need at least one column", col_heights)
        if any(h <= 0 for h in cols):
            raise DomainError("nonpositive-column", "column heights must be positive", list(cols))
        if any(cols[k] < cols[k + 1] for k in range(len(cols) - 1)):
            raise DomainError(
                "columns-not-nonincreasing", "column heights must be nonincreasing", list(cols)
            )
        self.cols = cols
        # canonical row-major box order: j ascending, then i ascending
        self.boxes = tuple(
            Box(i, j) for j in range(cols[0]) for i in range(len(cols)) if j < cols[i]
        )
        self._index = {b: pos for pos, b in enumerate(self.boxes)}

    # -- basic geometry ----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    def height(self, i: int) -> int:
        """Number of boxes in column i (0 outside the diagram)."""
        return self.cols[i] if 0 <= i < len(self.cols) else 0

    def row_length(self, j: int) -> int:
        """Number of boxes in row j."""
        return sum(1 for h in self.cols if h > j)

    def __contains__(self, box) -> bool:
        i, j = box
        return 0 <= i < len(self.cols) and 0 <= j < self.cols[i]

    def box_index(self, box: Box) -> int:
        """Position of a box in the canonical row-major order."""
        try:
            return self._index[Box(*box)]
        except KeyError:
            raise DomainError("box-not-in-diagram", f"box {tuple(box)} outside diagram", list(self.cols)) from None

    def __eq__(self, other) -> bool:
        return isinstance(other, YoungDiagram) and self.cols == other.cols

    def __hash__(self) -> int:
        return hash(self.cols)

    def __repr__(self) -> str:
        return f"YoungDiagram({list(self.cols)})"

    # -- distinguished box sets ---------------------------------------------

    def socle(self) -> frozenset[Box]:
        """Maximal boxes: no neighbour to the right nor below."""
        return frozenset(
            b for b in self.boxes if (b.i + 1, b.j) not in self and (b.i, b.j + 1) not in self
        )

    def subsocle(self) -> frozenset[Box]:
        """Boxes with right and down neighbours present but the diagonal one missing."""
        return frozenset(
            b
            for b in self.boxes
            if (b.i + 1, b.j) in self and (b.i, b.j + 1) in self and (b.i + 1, b.j + 1) not in self
        )

    def hook(self, box: Box) -> frozenset[Box]:
        """Boxes of the diagram weakly below or weakly to the right of ``box``."""
        i, j = box
        if box not in self:
            raise DomainError("box-not-in-diagram", f"box {tuple(box)} outside diagram", list(self.cols))
        arm = {Box(l, j) for l in range(i, len(self.cols)) if (l, j) in self}
        leg = {Box(i, k) for k in range(j, self.cols[i])}
        return frozenset(arm | leg)

    def hook_length(self, box: Box) -> int:
        return len(self.hook(box))

    # -- subdiagrams and serialisation ---------------------------------------

    def subdiagram_heights(self) -> Iterator[tuple[int, ...]]:
        """All nonincreasing height vectors fitting inside this diagram.

        Zero heights are allowed (complement semantics: the missing boxes form
        an upper set).  The full vector and the zero vector are both included.
        """

        cols = self.cols

        def rec(k: int, bound: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if k == len(cols):
                yield prefix
                return
            for h in range(min(bound, cols[k]), -1, -1):
                yield from rec(k + 1, h, prefix + (h,))

        yield from rec(0, cols[0], ())

    def to_text(self) -> str:
        return ",".join(str(h) for h in self.cols)

    @classmethod
    def from_text(cls, text: str) -> "YoungDiagram":
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise DomainError("parse-error", "empty diagram text", text)
        try:
            heights = [int(p) for p in parts]
        except ValueError:
            raise DomainError("parse-error", f"bad column height in {text!r}", text) from None
        return cls(heights)

    def to_json_obj(self) -> dict:
        return {"cols": list(self.cols)}

    @classmethod
    def from_json_obj(cls, obj) -> "YoungDiagram":
        if not isinstance(obj, dict) or "cols" not in obj:
            raise DomainError("parse-error", 'diagram JSON needs a "cols" list', obj)
        return cls(obj["cols"])


class UpperSet:
    """Upward-closed subset of a diagram; complement of a subdiagram."""

    __slots__ = ("diagram", "members")

    def __init__(self, diagram: YoungDiagram, members: Iterable[Box]):
        self.diagram = diagram
        self.members = frozenset(Box(*b) for b in members)
        for b in self.members:
            if b not in diagram:
                raise DomainError("box-not-in-diagram", f"box {tuple(b)} outside diagram", list(diagram.cols))
            for nb in (Box(b.i + 1, b.j), Box(b.i, b.j + 1)):
                if nb in diagram and nb not in self.members:
                    raise DomainError(
                        "not-upward-closed", f"box {tuple(nb)} missing above {tuple(b)}", sorted(self.members)
                    )

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, box) -> bool:
        return Box(*box) in self.members

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UpperSet)
            and self.diagram == other.diagram
            and self.members == other.members
        )

    def __hash__(self) -> int:
        return hash((self.diagram.cols, self.members))

    def member_vector(self) -> tuple[int, ...]:
        """0/1 vector over the diagram's row-major box order."""
        return tuple(1 if b in self.members else 0 for b in self.diagram.boxes)

    def minimal_boxes(self) -> frozenset[Box]:
        return frozenset(
            b
            for b in self.members
            if not any(m != b and partial_order_leq(m, b) for m in self.members)
        )

    def is_connected(self) -> bool:
        return len(connected_parts(self)) <= 1

    def __repr__(self) -> str:
        return f"UpperSet({list(self.diagram.cols)}, {sorted(self.members)})"


def connected_parts(upper: UpperSet) -> list[UpperSet]:
    """Edge-connected components of an upper set, each again an upper set.

    Sorted by the canonical descending-lex order on member vectors so the
    output is deterministic.
    """
    remaining = set(upper.members)
    parts = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            b = frontier.pop()
            for nb in (
                Box(b.i + 1, b.j),
                Box(b.i - 1, b.j),
                Box(b.i, b.j + 1),
                Box(b.i, b.j - 1),
            ):
                if nb in remaining:
                    remaining.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        parts.append(UpperSet(upper.diagram, comp))
    parts.sort(key=lambda u: u.member_vector(), reverse=True)
    return parts


def enumerate_upper_sets(
    diagram: YoungDiagram,
    connected_only: bool = False,
    nonempty_only: bool = False,
    max_boxes: int | None = None,
) -> list[UpperSet]:
    """All upward-closed subsets of the diagram, canonically ordered.

    Upper sets are generated as complements of subdiagrams, so upward
    closure holds by construction; the optional flags filter out the empty
    set and the edge-disconnected ones.  Output is sorted descending-lex on
    the row-major 0/1 member vector.
    """
    cap = MAX_DIAGRAM_BOXES if max_boxes is None else max_boxes
    if diagram.size > cap:
        raise CapExceeded(
            "diagram-too-large",
            f"diagram has {diagram.size} boxes, cap is {cap}",
            list(diagram.cols),
        )
    out = []
    for heights in diagram.subdiagram_heights():
        members = [b for b in diagram.boxes if b.j >= heights[b.i]]
        if nonempty_only and not members:
            continue
        upper = UpperSet(diagram, members)
        if connected_only and members and not upper.is_connected():
            continue
        out.append(upper)
    out.sort(key=lambda u: u.member_vector(), reverse=True)
    return out


def principal_upper_set(diagram: YoungDiagram, box: Box) -> UpperSet:
    """Boxes of the diagram weakly right-and-below ``box`` — has a unique minimum."""
    if box not in diagram:
        raise DomainError("box-not-in-diagram", f"box {tuple(box)} outside diagram", list(diagram.cols))
    return UpperSet(diagram, (b for b in diagram.boxes if partial_order_leq(box, b)))
