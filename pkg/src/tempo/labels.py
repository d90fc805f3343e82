"""Labels, the relations between them, and per-vertex representative sets.

A label stands for a class of (s, v)-paths that share a starting time,
arrival time and cost. Labels at one vertex with equal starting time and
cost are *equivalent* and live in one :class:`EquivClass`. The class
representative has the earliest arrival among its members, and only
representatives sit in a vertex's :class:`RepSet`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from tempo.graph import TemporalEdge, Vertex, format_cost


@dataclass(slots=True)
class Label:
    id: int
    start: int
    arrival: int
    cost: Fraction
    pred: int | None
    vertex: Vertex
    prev_time: int | None  # availability time of the edge that created the label
    edge_id: int | None
    class_id: int | None = None

    @property
    def duration(self) -> int:
        return self.arrival - self.start

    def triple(self) -> tuple[int, int, Fraction]:
        return (self.start, self.arrival, self.cost)


@dataclass(slots=True)
class EquivClass:
    id: int
    rep: int
    members: list[int] = field(default_factory=list)
    alive: bool = True


class InsertOutcome(enum.Enum):
    NEW_REPRESENTATIVE = "new"
    MERGED = "merged"
    DISCARDED = "discarded"


def _same_vertex(l1: Label, l2: Label) -> None:
    if l1.vertex != l2.vertex:
        raise ValueError(f"labels live at different vertices: {l1.vertex!r} vs {l2.vertex!r}")


def equivalent(l1: Label, l2: Label) -> bool:
    _same_vertex(l1, l2)
    return l1.cost == l2.cost and l1.start == l2.start


def predominates(l1: Label, l2: Label) -> bool:
    """Later-or-equal start, earlier-or-equal arrival, cheaper-or-equal cost, not equivalent.

    Non-equivalence already makes start or cost strict, so no further
    strictness test is needed.
    """
    if equivalent(l1, l2):
        return False
    return l1.start >= l2.start and l1.arrival <= l2.arrival and l1.cost <= l2.cost


def dominates(l1: Label, l2: Label) -> bool:
    """Pareto domination on (duration, cost)."""
    _same_vertex(l1, l2)
    d1, d2 = l1.duration, l2.duration
    return d1 <= d2 and l1.cost <= l2.cost and (d1 < d2 or l1.cost < l2.cost)


class LabelArena:
    """Owns every label and class created during one enumeration.

    Labels are never freed, so predecessor ids stay valid for backtracking.
    """

    def __init__(self):
        self.labels: list[Label] = []
        self.classes: list[EquivClass] = []

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, label_id: int) -> Label:
        return self.labels[label_id]

    def new_label(self, start, arrival, cost, pred, vertex, prev_time, edge_id) -> Label:
        label = Label(len(self.labels), start, arrival, cost, pred, vertex, prev_time, edge_id)
        self.labels.append(label)
        return label

    def initial(self, source: Vertex) -> Label:
        return self.new_label(0, 0, Fraction(0), None, source, None, None)

    def push(self, label: Label, edge: TemporalEdge, restart_at_source: bool = False) -> Label:
        """Extend ``label`` over ``edge``.

        With ``restart_at_source`` the new label starts a fresh path at the
        edge's availability time; otherwise start time carries over and cost
        accumulates.
        """
        if label.vertex != edge.src:
            raise ValueError(f"edge {edge.id} leaves {edge.src!r}, label sits at {label.vertex!r}")
        if label.arrival > edge.t:
            raise ValueError(
                f"label arrives at {label.arrival}, after edge {edge.id} departs at {edge.t}"
            )
        if restart_at_source:
            start, cost = edge.t, edge.cost
        else:
            start, cost = label.start, label.cost + edge.cost
        return self.new_label(start, edge.arrival, cost, label.id, edge.dst, edge.t, edge.id)

    def new_class(self, label: Label) -> EquivClass:
        cls = EquivClass(len(self.classes), label.id, [label.id])
        self.classes.append(cls)
        label.class_id = cls.id
        return cls

    def class_of(self, label: Label) -> EquivClass:
        return self.classes[label.class_id]


class RepSet:
    """Representatives of the live equivalence classes at one vertex."""

    def __init__(self, vertex: Vertex, arena: LabelArena):
        self.vertex = vertex
        self.arena = arena
        self.ids: list[int] = []

    def __iter__(self):
        return (self.arena.labels[i] for i in self.ids)

    def __len__(self) -> int:
        return len(self.ids)

    def __bool__(self) -> bool:
        return bool(self.ids)

    def triples(self) -> list[tuple[int, int, Fraction]]:
        return [lab.triple() for lab in self]

    def dump(self) -> str:
        """One line per representative: ``v: (b,a,c) [members...]``."""
        arena = self.arena
        lines = []
        for lab in self:
            members = ", ".join(_fmt(arena.labels[i]) for i in arena.class_of(lab).members)
            lines.append(f"{self.vertex}: {_fmt(lab)} [{members}]")
        return "\n".join(lines)


def _fmt(label: Label) -> str:
    return f"({label.start},{label.arrival},{format_cost(label.cost)})"


def insert_with_pruning(reps: RepSet, new: Label) -> InsertOutcome:
    """Insert ``new`` into ``reps``, pruning by predomination.

    Representatives predominated by ``new`` are removed together with their
    class. If an equivalent representative exists, ``new`` joins its class
    and takes over as representative when it arrives strictly earlier; the
    scan then continues, because the earlier arrival may now predominate
    later representatives. If a representative predominates ``new``, it is
    discarded. Otherwise ``new`` opens a fresh singleton class.
    """
    if new.vertex != reps.vertex:
        raise ValueError(f"label at {new.vertex!r} inserted into R[{reps.vertex!r}]")
    arena = reps.arena
    labels = arena.labels
    ids = reps.ids
    kept: list[int] = []
    outcome = None
    for pos, rid in enumerate(ids):
        other = labels[rid]
        if predominates(new, other):
            arena.class_of(other).alive = False
            continue
        if outcome is not None:
            # new already replaced an earlier representative; only prune
            kept.append(rid)
            continue
        if equivalent(other, new):
            cls = arena.class_of(other)
            cls.members.append(new.id)
            new.class_id = cls.id
            if new.arrival < other.arrival:
                cls.rep = new.id
                kept.append(new.id)
                outcome = InsertOutcome.MERGED
                continue
            kept.append(rid)
            kept.extend(ids[pos + 1 :])
            reps.ids = kept
            return InsertOutcome.MERGED
        if predominates(other, new):
            kept.extend(ids[pos:])
            reps.ids = kept
            return InsertOutcome.DISCARDED
        kept.append(rid)
    if outcome is None:
        arena.new_class(new)
        kept.append(new.id)
        outcome = InsertOutcome.NEW_REPRESENTATIVE
    reps.ids = kept
    return outcome
