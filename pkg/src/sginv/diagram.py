"""Combinatorial spatial-graph diagrams.

A diagram is a set of oriented *segments* (atomic strand pieces) wired into
rigid vertices and signed crossings, plus a count of free loops (circles that
touch nothing).  Every segment id occurs exactly once as a tail attachment
(vertex "out" slot, crossing over_out/under_out) and exactly once as a head
attachment (vertex "in" slot, crossing over_in/under_in).

No planar embedding is stored.  The planar cyclic order of the four ends of
a crossing is derived from its slots and sign: counterclockwise
(over_in, under_out, over_out, under_in) for sign +1 and
(over_in, under_in, over_out, under_out) for sign -1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


class DiagramError(ValueError):
    """Malformed diagram input (syntax, duplicate ids, dangling segments)."""


@dataclass(frozen=True)
class Crossing:
    over_in: int
    over_out: int
    under_in: int
    under_out: int
    sign: int

    def slots(self):
        return {"over_in": self.over_in, "over_out": self.over_out,
                "under_in": self.under_in, "under_out": self.under_out}

    def ccw_slots(self):
        """Slot names in counterclockwise planar order, starting at over_in."""
        if self.sign == 1:
            return ("over_in", "under_out", "over_out", "under_in")
        return ("over_in", "under_in", "over_out", "under_out")


@dataclass(frozen=True)
class VertexNode:
    id: int
    incident: tuple  # ((segment, "in"|"out"), ...) counterclockwise


@dataclass(frozen=True)
class Diagram:
    vertices: tuple = ()
    crossings: tuple = ()
    free_loops: int = 0

    def segment_ids(self):
        segs = set()
        for v in self.vertices:
            segs.update(s for s, _ in v.incident)
        for c in self.crossings:
            segs.update(c.slots().values())
        return segs

    def is_empty(self):
        return not self.vertices and not self.crossings and self.free_loops == 0


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(d: Diagram):
    """Return a list of human-readable violations; empty means valid."""
    issues = []
    seen_vids = set()
    for v in d.vertices:
        if v.id in seen_vids:
            issues.append(f"duplicate-vertex v{v.id}")
        seen_vids.add(v.id)
        if len(v.incident) < 1:
            issues.append(f"empty-vertex v{v.id}")
        for s, direction in v.incident:
            if direction not in ("in", "out"):
                issues.append(f"bad-direction v{v.id} s{s}")
    for c in d.crossings:
        if c.sign not in (1, -1):
            issues.append(f"bad-sign crossing {c}")

    heads, tails = {}, {}
    def attach(table, seg, where, kind):
        if seg in table:
            issues.append(f"double-{kind} s{seg} ({table[seg]} and {where})")
        table[seg] = where

    for v in d.vertices:
        for i, (s, direction) in enumerate(v.incident):
            if direction == "in":
                attach(heads, s, f"v{v.id}[{i}]", "head")
            else:
                attach(tails, s, f"v{v.id}[{i}]", "tail")
    for i, c in enumerate(d.crossings):
        attach(heads, c.over_in, f"x{i}.over_in", "head")
        attach(heads, c.under_in, f"x{i}.under_in", "head")
        attach(tails, c.over_out, f"x{i}.over_out", "tail")
        attach(tails, c.under_out, f"x{i}.under_out", "tail")

    for s in sorted(set(heads) | set(tails)):
        if s < 0:
            issues.append(f"negative-segment s{s}")
        if s not in heads:
            issues.append(f"dangling-segment s{s} (no head attachment)")
        if s not in tails:
            issues.append(f"dangling-segment s{s} (no tail attachment)")
    if d.free_loops < 0:
        issues.append("negative-free-loops")
    return issues


def require_valid(d: Diagram):
    issues = validate(d)
    if issues:
        raise DiagramError("; ".join(issues))
    return d


# ---------------------------------------------------------------------------
# Parsing and serialization (canonical JSON)
# ---------------------------------------------------------------------------

def _seg_id(raw, where):
    if isinstance(raw, int) and not isinstance(raw, bool):
        if raw < 0:
            raise DiagramError(f"{where}: negative segment id {raw}")
        return raw
    if isinstance(raw, str) and raw.startswith("s") and raw[1:].isdigit():
        return int(raw[1:])
    raise DiagramError(f"{where}: bad segment id {raw!r}")


def parse_document(text: str, check: bool = True):
    """Parse a diagram file; returns (Diagram, weights-or-None).

    Weights come back as a dict keyed by derived edge id ("e1", ...).
    Raises DiagramError on syntax errors, and (when check is set) on
    duplicates or dangling segments; check=False defers wiring validation
    to the caller, for violation reporting.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"syntax error at line {exc.lineno} col {exc.colno}: "
                           f"{exc.msg}") from None
    if not isinstance(doc, dict):
        raise DiagramError("top level must be a JSON object")
    known = {"vertices", "crossings", "free_loops", "weights"}
    for key in doc:
        if key not in known:
            raise DiagramError(f"unknown key {key!r}")

    vertices = []
    for entry in doc.get("vertices", []):
        if "id" not in entry or "incident" not in entry:
            raise DiagramError("vertex needs 'id' and 'incident'")
        incident = []
        for pair in entry["incident"]:
            seg, direction = pair
            if direction not in ("in", "out"):
                raise DiagramError(f"vertex {entry['id']}: direction {direction!r}")
            incident.append((_seg_id(seg, f"vertex {entry['id']}"), direction))
        vertices.append(VertexNode(int(entry["id"]), tuple(incident)))

    crossings = []
    for i, entry in enumerate(doc.get("crossings", [])):
        try:
            crossings.append(Crossing(
                over_in=_seg_id(entry["over_in"], f"crossing {i}"),
                over_out=_seg_id(entry["over_out"], f"crossing {i}"),
                under_in=_seg_id(entry["under_in"], f"crossing {i}"),
                under_out=_seg_id(entry["under_out"], f"crossing {i}"),
                sign=int(entry["sign"])))
        except KeyError as exc:
            raise DiagramError(f"crossing {i}: missing {exc.args[0]}") from None

    d = Diagram(tuple(vertices), tuple(crossings), int(doc.get("free_loops", 0)))
    if check:
        require_valid(d)
    weights = doc.get("weights")
    if weights is not None:
        weights = {str(k): int(w) for k, w in weights.items()}
    return d, weights


def parse_diagram(text: str) -> Diagram:
    return parse_document(text)[0]


def serialize(d: Diagram, weights=None) -> str:
    """Canonical rendering: sorted keys, vertices by id, crossings by slots."""
    doc = {
        "crossings": [
            {"over_in": f"s{c.over_in}", "over_out": f"s{c.over_out}",
             "sign": c.sign,
             "under_in": f"s{c.under_in}", "under_out": f"s{c.under_out}"}
            for c in sorted(d.crossings,
                            key=lambda c: (c.over_in, c.over_out,
                                           c.under_in, c.under_out))],
        "free_loops": d.free_loops,
        "vertices": [
            {"id": v.id, "incident": [[f"s{s}", direction]
                                      for s, direction in v.incident]}
            for v in sorted(d.vertices, key=lambda v: v.id)],
    }
    if weights is not None:
        doc["weights"] = {k: weights[k] for k in sorted(weights)}
    return json.dumps(doc, sort_keys=True, indent=1)


def canonicalize(d: Diagram) -> Diagram:
    """The diagram with vertices and crossings in canonical array order."""
    return parse_diagram(serialize(d))


# ---------------------------------------------------------------------------
# Arc and edge partitions
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


@dataclass(frozen=True)
class Partition:
    """Segments grouped into classes, numbered by least contained segment."""
    classes: tuple          # tuple of sorted segment tuples, sorted by min seg
    vertex_incidences: tuple  # per class: tuple of (vertex id, direction) uses
    is_closed: tuple        # per class: no vertex incidence at all

    def index_of(self, seg):
        for i, cls in enumerate(self.classes):
            if seg in cls:
                return i
        raise KeyError(seg)

    def __len__(self):
        return len(self.classes)


def _partition(d: Diagram, merge_under: bool) -> Partition:
    segs = d.segment_ids()
    uf = _UnionFind(segs)
    for c in d.crossings:
        uf.union(c.over_in, c.over_out)
        if merge_under:
            uf.union(c.under_in, c.under_out)
    groups = {}
    for s in segs:
        groups.setdefault(uf.find(s), []).append(s)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=min)
    incidences = []
    for cls in classes:
        inc = []
        for v in d.vertices:
            for s, direction in v.incident:
                if s in cls:
                    inc.append((v.id, direction))
        incidences.append(tuple(inc))
    closed = tuple(not inc for inc in incidences)
    return Partition(tuple(classes), tuple(incidences), closed)


def derive_arcs(d: Diagram) -> Partition:
    """Wirtinger arcs: segments merged across over-strand continuations."""
    return _partition(d, merge_under=False)


def derive_edges(d: Diagram) -> Partition:
    """Graph edges: segments merged across both over and under continuations.

    Closed classes with no vertex incidence are knot components; free loops
    contribute extra (segment-free) closed components not listed here.
    """
    return _partition(d, merge_under=True)


def edge_ids(edges: Partition):
    """Edge labels 'e1', 'e2', ... in least-contained-segment order."""
    return [f"e{i + 1}" for i in range(len(edges))]


def seg_to_edge_id(edges: Partition):
    out = {}
    for i, cls in enumerate(edges.classes):
        for s in cls:
            out[s] = f"e{i + 1}"
    return out


# ---------------------------------------------------------------------------
# Mutable rewiring engine
# ---------------------------------------------------------------------------

class Wiring:
    """Mutable attachment structure behind crossing resolution, Reidemeister
    move insertion and constituent extraction.

    Segment ends are addressed as (segment id, "head"|"tail").  Heads attach
    at vertex "in" slots and crossing *_in slots; tails at "out" slots.  Ends
    not attached anywhere are dangling; they only exist transiently while a
    sequence of operations is in flight.

    `carried` tracks, per segment, the vertex ids absorbed into it by joins
    (used for Hamiltonian-cycle bookkeeping in constituent extraction).
    """

    def __init__(self, d: Diagram):
        self.vertices = {v.id: list(v.incident) for v in d.vertices}
        self.crossings = {}
        for i, c in enumerate(d.crossings):
            self.crossings[i] = {"over_in": c.over_in, "over_out": c.over_out,
                                 "under_in": c.under_in, "under_out": c.under_out,
                                 "sign": c.sign}
        self.free_loops = d.free_loops
        self.carried = {}
        self.loop_carried = [set() for _ in range(d.free_loops)]
        segs = d.segment_ids()
        self.segments = set(segs)
        self._next_seg = max(segs, default=-1) + 1
        self._next_crossing = len(d.crossings)
        self._next_vertex = max(self.vertices, default=-1) + 1

    # -- allocation --------------------------------------------------------

    def new_segment(self):
        s = self._next_seg
        self._next_seg += 1
        self.segments.add(s)
        return s

    def new_crossing(self, over_in, over_out, under_in, under_out, sign):
        cid = self._next_crossing
        self._next_crossing += 1
        self.crossings[cid] = {"over_in": over_in, "over_out": over_out,
                               "under_in": under_in, "under_out": under_out,
                               "sign": sign}
        return cid

    def new_vertex(self, incident):
        vid = self._next_vertex
        self._next_vertex += 1
        self.vertices[vid] = list(incident)
        return vid

    # -- attachment lookup -------------------------------------------------

    def find_end(self, seg, kind):
        """Locate the attachment of a segment end, or None if dangling.

        Returns ("v", vid, slot index) or ("c", cid, slot name).
        """
        want = "in" if kind == "head" else "out"
        for vid, slots in self.vertices.items():
            for i, (s, direction) in enumerate(slots):
                if s == seg and direction == want:
                    return ("v", vid, i)
        names = ("over_in", "under_in") if kind == "head" else ("over_out", "under_out")
        for cid, c in self.crossings.items():
            for name in names:
                if c[name] == seg:
                    return ("c", cid, name)
        return None

    def _replace_end(self, attach, new_seg):
        if attach is None:
            return
        kind, owner, slot = attach
        if kind == "v":
            s, direction = self.vertices[owner][slot]
            self.vertices[owner][slot] = (new_seg, direction)
        else:
            self.crossings[owner][slot] = new_seg

    # -- strand reversal ---------------------------------------------------

    def reverse_strand(self, seg):
        """Reverse the orientation of the maximal strand through `seg`.

        The strand extends through crossings (over_in<->over_out and
        under_in<->under_out continuations) and stops at vertices or
        dangling ends.  Vertex direction flags flip, traversed crossings
        swap their in/out slots on the traversed level, and each traversed
        level flips the crossing sign once (a strand crossing itself flips
        the sign twice, leaving it unchanged -- as it should).

        Returns the set of reversed segment ids.
        """
        chain = [seg]
        traversals = []  # (crossing id, "over"|"under")

        def step_forward(s):
            at = self.find_end(s, "head")
            if at is None or at[0] == "v":
                return None
            _, cid, slot = at
            level = "over" if slot == "over_in" else "under"
            traversals.append((cid, level))
            return self.crossings[cid][level + "_out"]

        def step_backward(s):
            at = self.find_end(s, "tail")
            if at is None or at[0] == "v":
                return None
            _, cid, slot = at
            level = "over" if slot == "over_out" else "under"
            traversals.append((cid, level))
            return self.crossings[cid][level + "_in"]

        cur = step_forward(seg)
        closed = False
        while cur is not None and cur != seg:
            chain.append(cur)
            cur = step_forward(cur)
        if cur == seg:
            closed = True
        if not closed:
            cur = step_backward(seg)
            while cur is not None:
                chain.append(cur)
                cur = step_backward(cur)

        reversed_set = set(chain)

        # flip vertex direction flags at strand endpoints (and nowhere else:
        # interior attachments of strand segments are all crossing slots)
        for s in reversed_set:
            for slots in self.vertices.values():
                for i, (s2, direction) in enumerate(slots):
                    if s2 == s:
                        slots[i] = (s2, "out" if direction == "in" else "in")

        seen_levels = set()
        for cid, level in traversals:
            key = (cid, level)
            if key in seen_levels:
                continue  # each traversed level is swapped exactly once
            seen_levels.add(key)
            c = self.crossings[cid]
            c[level + "_in"], c[level + "_out"] = c[level + "_out"], c[level + "_in"]
            c["sign"] = -c["sign"]
        return reversed_set

    # -- joining dangling ends ---------------------------------------------

    def join(self, end1, end2, carry=()):
        """Join two dangling ends into a continuous strand.

        Ends of the same kind first get one strand reversed.  Returns a
        replacement map {old segment id: new id or None}, None meaning the
        segment closed into a free loop; callers holding pending end
        references must apply it (and flip kinds for reversed segments).
        """
        s1, k1 = end1
        s2, k2 = end2
        if s1 == s2:
            # the segment's two ends meet: a free loop
            self.free_loops += 1
            self.loop_carried.append(self.carried.pop(s1, set()) | set(carry))
            self.segments.discard(s1)
            return {s1: None}
        if k1 == k2:
            flipped = self.reverse_strand(s2)
            if k2 == "head":
                k2 = "tail"
            else:
                k2 = "head"
            if s1 in flipped:  # cannot happen for a consistently oriented strand
                raise AssertionError("reversal touched both ends")
        if k1 == "tail":
            (s1, k1), (s2, k2) = (s2, k2), (s1, k1)
        # now s1 dangles at its head, s2 at its tail: s1 flows into s2
        n = self.new_segment()
        self._replace_end(self.find_end(s1, "tail"), n)
        self._replace_end(self.find_end(s2, "head"), n)
        self.carried[n] = (self.carried.pop(s1, set())
                           | self.carried.pop(s2, set()) | set(carry))
        self.segments.discard(s1)
        self.segments.discard(s2)
        return {s1: n, s2: n}

    def cut_crossing(self, idx):
        """Remove a crossing, returning its four now-dangling ends keyed by
        slot name: {"over_in": (seg, "head"), ...}."""
        c = self.crossings.pop(idx)
        return {"over_in": (c["over_in"], "head"),
                "over_out": (c["over_out"], "tail"),
                "under_in": (c["under_in"], "head"),
                "under_out": (c["under_out"], "tail"),
                "sign": c["sign"]}

    def splice_out_level(self, cid, level):
        """Remove a crossing, reconnecting its `level` strand through and
        leaving the other strand's ends dangling.  Returns (replacement map,
        list of the other strand's dangling ends)."""
        ends = self.cut_crossing(cid)
        other = "under" if level == "over" else "over"
        rep = self.join(ends[level + "_in"], ends[level + "_out"])
        dangles = [ends[other + "_in"], ends[other + "_out"]]
        dangles = [(rep.get(s, s), k) for s, k in dangles]
        return rep, dangles

    # -- strand queries ----------------------------------------------------

    def strand_segments(self, seg):
        """All segments on the maximal strand through `seg` (through crossing
        continuations; stops at vertices and dangling ends)."""
        chain = {seg}
        cur = seg
        while True:
            at = self.find_end(cur, "head")
            if at is None or at[0] == "v":
                break
            level = "over" if at[2] == "over_in" else "under"
            cur = self.crossings[at[1]][level + "_out"]
            if cur in chain:
                return chain  # closed strand
            chain.add(cur)
        cur = seg
        while True:
            at = self.find_end(cur, "tail")
            if at is None or at[0] == "v":
                break
            level = "over" if at[2] == "over_out" else "under"
            cur = self.crossings[at[1]][level + "_in"]
            if cur in chain:
                return chain
            chain.add(cur)
        return chain

    def dangling_segments(self):
        return {s for s in self.segments
                if self.find_end(s, "head") is None
                or self.find_end(s, "tail") is None}

    # -- extraction --------------------------------------------------------

    def to_diagram(self) -> Diagram:
        vertices = tuple(VertexNode(vid, tuple(slots))
                         for vid, slots in sorted(self.vertices.items()))
        crossings = tuple(Crossing(c["over_in"], c["over_out"],
                                   c["under_in"], c["under_out"], c["sign"])
                          for _, c in sorted(self.crossings.items()))
        return Diagram(vertices, crossings, self.free_loops)


# ---------------------------------------------------------------------------
# Crossing resolution
# ---------------------------------------------------------------------------

def _smoothing_pairs(sign, oriented):
    """Slot-name pairs joined by a planar smoothing.

    The orientation-coherent smoothing always joins over_in->under_out and
    under_in->over_out.  The other adjacent pairing in the planar cyclic
    order reverses one strand.
    """
    if oriented:
        return (("over_in", "under_out"), ("under_in", "over_out"))
    if sign == 1:
        return (("under_out", "over_out"), ("under_in", "over_in"))
    return (("over_in", "under_in"), ("over_out", "under_out"))


def resolve_crossing(d: Diagram, idx: int, mode: str) -> Diagram:
    """Replace crossing `idx` by one of its three resolutions.

    mode "V" installs a rigid 4-valent vertex in the crossing's planar
    cyclic order.  Modes "A" and "B" are the two planar smoothings; the
    assignment is calibrated so that a chirality-(+1) kink contributes an
    exact A^2 factor to the Yamada polynomial, which puts the A-smoothing
    on the orientation-coherent pairing exactly when sign = +1.
    """
    if not 0 <= idx < len(d.crossings):
        raise IndexError(f"crossing index {idx} out of range")
    if mode not in ("A", "B", "V"):
        raise ValueError(f"unknown resolution mode {mode!r}")
    w = Wiring(d)
    c = d.crossings[idx]
    if mode == "V":
        dirs = {"over_in": "in", "under_in": "in",
                "over_out": "out", "under_out": "out"}
        incident = [(w.crossings[idx][name], dirs[name]) for name in c.ccw_slots()]
        del w.crossings[idx]
        w.new_vertex(incident)
        return w.to_diagram()

    ends = w.cut_crossing(idx)
    sign = ends.pop("sign")
    oriented = (mode == "A") == (sign == 1)
    pairs = _smoothing_pairs(sign, oriented)
    pending = dict(ends)
    first, second = pairs
    rep = w.join(pending[first[0]], pending[first[1]])
    a, b = pending[second[0]], pending[second[1]]
    a = _remap_end(w, a, rep)
    b = _remap_end(w, b, rep)
    if a[0] is not None and b[0] is not None:
        w.join(a, b)
    elif a[0] is not None or b[0] is not None:
        raise AssertionError("half-consumed smoothing pair")
    return w.to_diagram()


def _remap_end(w: Wiring, end, rep):
    """Apply a join's replacement map to a pending end reference, fixing the
    head/tail kind against the current wiring (a prior reversal may have
    flipped it)."""
    s, k = end
    if s in rep:
        s = rep[s]
        if s is None:
            return (None, k)
    if w.find_end(s, k) is not None:
        k = "tail" if k == "head" else "head"
        assert w.find_end(s, k) is None, "end is not dangling"
    return (s, k)
