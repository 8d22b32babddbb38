"""Planar diagrams of knots and links, moves between them, braid closures.

A diagram is a list of crossings plus a count of crossing-free circles.
Each crossing is a 4-tuple of arc labels read counterclockwise starting at
the incoming under-strand: slot 0 is the under-strand entering, slot 2 the
under-strand leaving, and slots 1 and 3 carry the over-strand. Every arc
label names an edge of the underlying 4-valent graph, so it occurs exactly
twice among all slots.

Orientations are recovered by constraint propagation. Under-slots are
forced (slot 0 points in, slot 2 points out); the two endpoints of an arc
point opposite ways, as do the two over-slots of a crossing. A component
that never passes under anything is genuinely free to orient either way;
it gets a deterministic choice so that signs and writhe are well defined
for every parseable diagram.

Sign convention: the crossing is positive when the over-strand enters at
slot 3 and leaves at slot 1, negative the other way around. The one
crossing diagram X[1,1,2,2] is the positive curl and X[1,2,2,1] the
negative one.

The text form is the same shape the parser accepts: crossings as
"X[a,b,c,d]" and circles as "O", joined by semicolons.
"""

from __future__ import annotations

import re

__all__ = [
    "PlanarDiagram",
    "parse_pd",
    "braid_pd",
    "r1_add",
    "r1_remove",
    "r2_add",
    "r2_remove",
    "r3",
]

_ITEM = re.compile(r"\s*(O|X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\])\s*$")


class PlanarDiagram:
    """Immutable link diagram: crossing tuples plus crossing-free circles."""

    __slots__ = ("crossings", "free_loops", "_orient")

    def __init__(self, crossings, free_loops=0):
        self.crossings = tuple(tuple(c) for c in crossings)
        self.free_loops = free_loops
        if free_loops < 0:
            raise ValueError("negative circle count")
        counts = {}
        for ci, cr in enumerate(self.crossings):
            if len(cr) != 4:
                raise ValueError("crossing %d is not a 4-tuple" % ci)
            for a in cr:
                if not isinstance(a, int) or a < 1:
                    raise ValueError("arc labels must be positive integers")
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise ValueError("arc labels must occur exactly twice, got %s" % bad)
        object.__setattr__(self, "_orient", None)

    def __setattr__(self, name, value):
        if name in ("crossings", "free_loops") and hasattr(self, "free_loops"):
            raise AttributeError("PlanarDiagram is immutable")
        object.__setattr__(self, name, value)

    # -- basic queries ----------------------------------------------------

    @property
    def n_crossings(self):
        return len(self.crossings)

    def arcs(self):
        seen = set()
        for cr in self.crossings:
            seen.update(cr)
        return tuple(sorted(seen))

    def endpoints(self):
        """Map arc label -> list of (crossing index, slot), in scan order."""
        out = {}
        for ci, cr in enumerate(self.crossings):
            for slot, a in enumerate(cr):
                out.setdefault(a, []).append((ci, slot))
        return out

    def genus(self):
        """Total genus of the surface the crossing rotations embed in.

        Darts are (crossing, slot); the arc pairing followed by the
        next-slot rotation traces the faces, and Euler counts per connected
        component give the genus. Zero exactly when the code is planar;
        combinatorial rewrites on arbitrary arcs can leave the plane.
        """
        alpha = {}
        for pair in self.endpoints().values():
            d1, d2 = pair
            alpha[d1] = d2
            alpha[d2] = d1

        parent = {}

        def find(a):
            parent.setdefault(a, a)
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for (c1, _), (c2, _) in zip(alpha, alpha.values()):
            parent[find(c1)] = find(c2)

        verts = {}
        edges = {}
        for arc, ((c1, _), _) in self.endpoints().items():
            edges[find(c1)] = edges.get(find(c1), 0) + 1
        for ci in range(len(self.crossings)):
            verts[find(ci)] = verts.get(find(ci), 0) + 1

        faces = {}
        seen = set()
        for start in alpha:
            if start in seen:
                continue
            comp = find(start[0])
            faces[comp] = faces.get(comp, 0) + 1
            d = start
            while d not in seen:
                seen.add(d)
                ci, slot = alpha[d]
                d = (ci, (slot + 1) % 4)

        total = 0
        for comp, V in verts.items():
            chi = V - edges.get(comp, 0) + faces.get(comp, 0)
            total += (2 - chi) // 2
        return total

    def __eq__(self, other):
        if not isinstance(other, PlanarDiagram):
            return NotImplemented
        return (
            self.crossings == other.crossings and self.free_loops == other.free_loops
        )

    def __hash__(self):
        return hash((self.crossings, self.free_loops))

    def __repr__(self):
        return "PlanarDiagram(%r)" % self.render()

    def render(self):
        items = ["X[%d,%d,%d,%d]" % cr for cr in self.crossings]
        items.extend(["O"] * self.free_loops)
        return "; ".join(items) if items else ""

    # -- orientation and signs --------------------------------------------

    def orientations(self):
        """Map (crossing, slot) -> "in" or "out" for every slot.

        Deterministic: components with no under-pass get their lowest arc
        label directed out of its lowest (crossing, slot) endpoint.
        """
        if self._orient is not None:
            return self._orient
        ends = self.endpoints()
        state = {}
        queue = []

        def assign(end, value):
            cur = state.get(end)
            if cur is None:
                state[end] = value
                queue.append(end)
            elif cur != value:
                raise ValueError("inconsistent strand orientation at %s" % (end,))

        for ci in range(len(self.crossings)):
            assign((ci, 0), "in")
            assign((ci, 2), "out")

        def flood():
            while queue:
                ci, slot = queue.pop()
                value = state[(ci, slot)]
                flipped = "out" if value == "in" else "in"
                e1, e2 = ends[self.crossings[ci][slot]]
                other = e2 if (ci, slot) == e1 else e1
                assign(other, flipped)
                if slot in (1, 3):
                    assign((ci, slot ^ 2), flipped)

        flood()
        # fully-over components never touch an under slot; orient each by its
        # lowest arc label leaving its lowest endpoint
        while True:
            free = [a for a, es in ends.items() if es[0] not in state]
            if not free:
                break
            a = min(free)
            assign(min(ends[a]), "out")
            flood()
        object.__setattr__(self, "_orient", state)
        return state

    def crossing_signs(self):
        state = self.orientations()
        return tuple(
            1 if state[(ci, 3)] == "in" else -1 for ci in range(len(self.crossings))
        )

    @property
    def n_plus(self):
        return sum(1 for s in self.crossing_signs() if s > 0)

    @property
    def n_minus(self):
        return sum(1 for s in self.crossing_signs() if s < 0)

    @property
    def writhe(self):
        return sum(self.crossing_signs())

    def n_components(self):
        """Number of link components (strand circles)."""
        parent = {a: a for a in self.arcs()}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b, c, d in self.crossings:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        return len({find(a) for a in parent}) + self.free_loops

    # -- derived diagrams --------------------------------------------------

    def mirror(self):
        """Swap every over-strand for the under-strand (reflected diagram)."""
        signs = self.crossing_signs()
        out = []
        for cr, s in zip(self.crossings, signs):
            a, b, c, d = cr
            # the old over-strand becomes the under-strand; rotate the tuple
            # so slot 0 is its incoming arc
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return PlanarDiagram(out, self.free_loops)

    def disjoint_union(self, other):
        shift = max(self.arcs(), default=0)
        moved = [tuple(a + shift for a in cr) for cr in other.crossings]
        return PlanarDiagram(
            self.crossings + tuple(moved), self.free_loops + other.free_loops
        )

    def normalized(self):
        """Relabel arcs by first appearance in crossing scan order."""
        relabel = {}
        for cr in self.crossings:
            for a in cr:
                if a not in relabel:
                    relabel[a] = len(relabel) + 1
        return PlanarDiagram(
            [tuple(relabel[a] for a in cr) for cr in self.crossings], self.free_loops
        )

    def _bfs_form(self, start):
        # breadth-first over crossings from `start`, arcs labeled in
        # discovery order, neighbors explored in slot order
        ends = self.endpoints()
        labels = {}
        order = []
        seen = set()
        pending = [start] + [ci for ci in range(len(self.crossings)) if ci != start]
        queue = []
        while len(seen) < len(self.crossings):
            if not queue:
                queue.append(next(ci for ci in pending if ci not in seen))
            ci = queue.pop(0)
            if ci in seen:
                continue
            seen.add(ci)
            order.append(ci)
            for slot, arc in enumerate(self.crossings[ci]):
                if arc not in labels:
                    labels[arc] = len(labels) + 1
                e1, e2 = ends[arc]
                other = e2 if (ci, slot) == e1 else e1
                if other[0] not in seen:
                    queue.append(other[0])
        return tuple(
            tuple(labels[a] for a in self.crossings[ci]) for ci in order
        )

    def canonical(self):
        """Canonical relabeling: the lexicographically least breadth-first
        form over all starting crossings. Equal diagrams-up-to-relabeling
        (and crossing reordering) get equal canonical forms."""
        if not self.crossings:
            return self
        best = min(self._bfs_form(s) for s in range(len(self.crossings)))
        return PlanarDiagram(best, self.free_loops)


def parse_pd(text):
    """Parse "X[1,1,2,2]; O" style text into a PlanarDiagram."""
    if not text.strip():
        raise ValueError("empty diagram text")
    crossings = []
    free_loops = 0
    for item in text.split(";"):
        m = _ITEM.match(item)
        if not m:
            raise ValueError("cannot parse item %r" % item.strip())
        if m.group(1) == "O":
            free_loops += 1
        else:
            crossings.append(tuple(int(m.group(k)) for k in range(2, 6)))
    return PlanarDiagram(crossings, free_loops).canonical()


def braid_pd(word, strands=None):
    """Close a braid word into a planar diagram.

    word is a sequence of nonzero integers: +i means strand i crosses over
    strand i+1, -i the reverse. Strand positions are 1-based; the closure
    joins each strand's top back to its bottom.
    """
    if strands is None:
        strands = max((abs(w) for w in word), default=0) + 1
    if strands < 1 or any(w == 0 or abs(w) >= strands for w in word):
        raise ValueError("braid letters must satisfy 0 < |letter| < strands")
    fresh = strands
    initial = list(range(1, strands + 1))
    cur = list(initial)
    crossings = []
    for w in word:
        i = abs(w) - 1
        p, q = fresh + 1, fresh + 2
        fresh += 2
        if w > 0:
            # strand at position i goes over: (under-in, over-out, under-out, over-in)
            crossings.append((cur[i + 1], q, p, cur[i]))
        else:
            crossings.append((cur[i], cur[i + 1], q, p))
        cur[i], cur[i + 1] = p, q

    parent = list(range(fresh + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in zip(initial, cur):
        parent[find(a)] = find(b)

    used = sorted({find(a) for cr in crossings for a in cr})
    relabel = {root: k + 1 for k, root in enumerate(used)}
    closed = [tuple(relabel[find(a)] for a in cr) for cr in crossings]
    touched = {abs(w) - 1 for w in word} | {abs(w) for w in word}
    free = strands - len(set(range(strands)) & touched)
    return PlanarDiagram(closed, free)


def _splice_out(diagram, remove):
    """Delete the crossings in `remove`, reconnecting the strands through.

    Each removed crossing contributes two strand segments (under: slots 0-2,
    over: slots 1-3). Arcs joined through segments merge into single arcs;
    strands closed entirely inside the removed set become circles.
    """
    remove = set(remove)
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for ci in remove:
        a, b, c, d = diagram.crossings[ci]
        union(a, c)
        union(b, d)

    survivors = {}
    for ci, cr in enumerate(diagram.crossings):
        if ci in remove:
            continue
        for a in cr:
            survivors.setdefault(find(a), set()).add(a)

    removed_arcs = {a for ci in remove for a in diagram.crossings[ci]}
    circles = len(
        {find(a) for a in removed_arcs if find(a) not in survivors}
    )

    def newlabel(a):
        root = find(a) if a in parent else a
        if root in survivors:
            return min(survivors[root])
        return a

    out = [
        tuple(newlabel(a) for a in cr)
        for ci, cr in enumerate(diagram.crossings)
        if ci not in remove
    ]
    return PlanarDiagram(out, diagram.free_loops + circles)


def _head_endpoint(diagram, arc):
    """The (crossing, slot) where `arc` arrives. Splitting an arc relabels
    exactly this endpoint, leaving the tail piece with the old label."""
    state = diagram.orientations()
    (e1, e2) = diagram.endpoints()[arc]
    return e1 if state[e1] == "in" else e2


def r1_add(diagram, arc=None, positive=True):
    """Insert a curl on `arc`, or on a crossing-free circle when arc is None.
    Writhe changes by +1 or -1."""
    fresh = max(diagram.arcs(), default=0)
    rows = [list(cr) for cr in diagram.crossings]
    loops = diagram.free_loops
    if arc is None:
        if not loops:
            raise ValueError("no crossing-free circle to curl")
        loops -= 1
        arc, m, loop = fresh + 1, fresh + 1, fresh + 2
    else:
        m, loop = fresh + 1, fresh + 2
        ci, slot = _head_endpoint(diagram, arc)
        rows[ci][slot] = m
    if positive:
        rows.append((arc, m, loop, loop))
    else:
        rows.append((arc, loop, loop, m))
    return PlanarDiagram(rows, loops)


def r1_remove(diagram, crossing):
    """Delete the curl at `crossing` (its loop arc occupies adjacent slots)."""
    cr = diagram.crossings[crossing]
    if not any(cr[i] == cr[(i + 1) % 4] for i in range(4)):
        raise ValueError("crossing %d is not a curl" % crossing)
    return _splice_out(diagram, [crossing])


def r2_add(diagram, over_arc, under_arc):
    """Slide `over_arc` across `under_arc`, adding a positive and a negative
    crossing. The two arcs must be distinct."""
    if over_arc == under_arc:
        raise ValueError("cannot slide an arc over itself")
    fresh = max(diagram.arcs(), default=0)
    xm, x2, ym, y2 = fresh + 1, fresh + 2, fresh + 3, fresh + 4
    rows = [list(cr) for cr in diagram.crossings]
    ci, slot = _head_endpoint(diagram, over_arc)
    rows[ci][slot] = x2
    ci, slot = _head_endpoint(diagram, under_arc)
    rows[ci][slot] = y2
    rows.append((under_arc, xm, ym, over_arc))
    rows.append((ym, xm, y2, x2))
    return PlanarDiagram(rows, diagram.free_loops)


def r2_remove(diagram, c1, c2):
    """Cancel the bigon formed by crossings c1 and c2.

    The crossings must share exactly two arcs: one running over at both and
    one running under at both."""
    if c1 == c2:
        raise ValueError("need two distinct crossings")
    cr1, cr2 = diagram.crossings[c1], diagram.crossings[c2]
    signs = diagram.crossing_signs()
    shared = set(cr1) & set(cr2)
    # one strand passes under both crossings, the other over both, and the
    # crossings cancel; same-sign pairs are clasps, not bigons
    under_ok = any(
        a in (cr1[0], cr1[2]) and a in (cr2[0], cr2[2]) for a in shared
    )
    over_ok = any(
        a in (cr1[1], cr1[3]) and a in (cr2[1], cr2[3]) for a in shared
    )
    if not (under_ok and over_ok and signs[c1] + signs[c2] == 0):
        raise ValueError("crossings %d and %d do not bound a bigon" % (c1, c2))
    return _splice_out(diagram, [c1, c2])


# The two sides of the triangle move, written as the crossing patterns a
# braid word produces. Lowercase names are matched against actual arcs;
# n1, n2, n3 must be internal to the triple. Positive pattern first.
_R3_POS_LHS = (("a2", "n2", "n1", "a1"), ("a3", "n4", "n3", "n2"), ("n3", "n6", "n5", "n1"))
_R3_POS_RHS = (("a3", "m2", "m1", "a2"), ("m1", "m4", "m3", "a1"), ("m2", "m6", "m5", "m4"))
_R3_NEG_LHS = (("a1", "a2", "n2", "n1"), ("n2", "a3", "n4", "n3"), ("n1", "n3", "n6", "n5"))
_R3_NEG_RHS = (("a2", "a3", "m2", "m1"), ("a1", "m1", "m4", "m3"), ("m4", "m2", "m6", "m5"))


def _match_template(crossings, template):
    binding = {}
    for cr, pat in zip(crossings, template):
        for arc, name in zip(cr, pat):
            if binding.setdefault(name, arc) != arc:
                return None
    return binding


def r3(diagram, c1, c2, c3):
    """Triangle move: rewrite three crossings of the same sign arranged as
    one strand sliding across a crossing of the other two.

    The triple (c1, c2, c3) must match one of the homogeneous patterns (all
    positive or all negative); arcs n1, n2, n3 internal to the triple are
    replaced by fresh ones on the other side."""
    idx = (c1, c2, c3)
    if len(set(idx)) != 3:
        raise ValueError("need three distinct crossings")
    triple = [diagram.crossings[i] for i in idx]
    for lhs, rhs in (
        (_R3_POS_LHS, _R3_POS_RHS),
        (_R3_NEG_LHS, _R3_NEG_RHS),
        # the move is symmetric: accept a right-hand pattern and rewrite back
        (_R3_POS_RHS, _R3_POS_LHS),
        (_R3_NEG_RHS, _R3_NEG_LHS),
    ):
        binding = _match_template(triple, lhs)
        if binding is None:
            continue
        internal = [n for n in ("n1", "n2", "n3", "m1", "m2", "m4") if n in binding]
        outside = [
            a
            for ci, cr in enumerate(diagram.crossings)
            if ci not in idx
            for a in cr
        ]
        if any(binding[n] in outside for n in internal):
            continue
        fresh = max(diagram.arcs(), default=0)
        for k, name in enumerate(("m1", "m2", "m4", "n1", "n2", "n3")):
            if name not in binding:
                binding[name] = fresh + k + 1
        # boundary arcs keep their labels across the rewrite
        if "m3" not in binding:
            binding["m3"], binding["m5"], binding["m6"] = (
                binding["n5"],
                binding["n6"],
                binding["n4"],
            )
        else:
            binding["n5"], binding["n6"], binding["n4"] = (
                binding["m3"],
                binding["m5"],
                binding["m6"],
            )
        rows = list(diagram.crossings)
        for pos, pat in zip(idx, rhs):
            rows[pos] = tuple(binding[name] for name in pat)
        return PlanarDiagram(rows, diagram.free_loops)
    raise ValueError("crossings %s do not form a triangle move site" % (idx,))


def unknot_pd():
    return PlanarDiagram((), 1)
