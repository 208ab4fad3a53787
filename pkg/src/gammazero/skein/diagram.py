"""Oriented link diagrams in planar-diagram (PD) notation.

A crossing ``X i j k l`` lists its four edge labels counterclockwise starting
from the incoming under-edge ``i``; the under-strand runs ``i -> k``. The
over-strand runs ``l -> j`` for a positive crossing and ``j -> l`` for a
negative one. Components that never cross anything are kept as a count of
free loops.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Iterable, Sequence


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    pd: tuple[int, int, int, int]
    sign: int

    @property
    def under_in(self) -> int:
        return self.pd[0]

    @property
    def under_out(self) -> int:
        return self.pd[2]

    @property
    def over_in(self) -> int:
        return self.pd[3] if self.sign > 0 else self.pd[1]

    @property
    def over_out(self) -> int:
        return self.pd[1] if self.sign > 0 else self.pd[3]

    def switched(self) -> "Crossing":
        i, j, k, l = self.pd
        if self.sign > 0:
            return Crossing((l, i, j, k), -1)
        return Crossing((j, k, l, i), 1)

    def relabel(self, f) -> "Crossing":
        return Crossing(tuple(f(x) for x in self.pd), self.sign)  # type: ignore[arg-type]


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        seen_in: dict[int, int] = {}
        seen_out: dict[int, int] = {}
        for idx, c in enumerate(self.crossings):
            if c.sign not in (1, -1):
                raise PDError(f"crossing {idx} has sign {c.sign}")
            for lab, book in ((c.under_in, seen_in), (c.over_in, seen_in), (c.under_out, seen_out), (c.over_out, seen_out)):
                if lab in book:
                    raise PDError(f"edge {lab} enters or leaves twice")
                book[lab] = idx
        if set(seen_in) != set(seen_out):
            dangling = sorted(set(seen_in) ^ set(seen_out))
            raise PDError(f"dangling edge labels {dangling}")
        if self.free_loops < 0:
            raise PDError("negative number of free loops")

    # -- structure -----------------------------------------------------------------
    @cached_property
    def successor(self) -> dict[int, int]:
        """Edge -> next edge along the orientation."""
        nxt = {}
        for c in self.crossings:
            nxt[c.under_in] = c.under_out
            nxt[c.over_in] = c.over_out
        return nxt

    @cached_property
    def head(self) -> dict[int, tuple[int, bool]]:
        """Edge -> (crossing index it runs into, whether it arrives on the over-strand)."""
        out = {}
        for idx, c in enumerate(self.crossings):
            out[c.under_in] = (idx, False)
            out[c.over_in] = (idx, True)
        return out

    @cached_property
    def edge_components(self) -> tuple[tuple[int, ...], ...]:
        """Edge cycles, each starting at its least label; ordered by that label."""
        nxt = self.successor
        seen: set[int] = set()
        comps = []
        for e in sorted(nxt):
            if e in seen:
                continue
            cyc = []
            x = e
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = nxt[x]
            comps.append(tuple(cyc))
        return tuple(comps)

    @cached_property
    def component_of_edge(self) -> dict[int, int]:
        return {e: i for i, comp in enumerate(self.edge_components) for e in comp}

    @property
    def components(self) -> int:
        return len(self.edge_components) + self.free_loops

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def strand_components(self, idx: int) -> tuple[int, int]:
        """(component of the under-strand, component of the over-strand) at crossing ``idx``."""
        c = self.crossings[idx]
        comp = self.component_of_edge
        return comp[c.under_in], comp[c.over_in]

    def is_self_crossing(self, idx: int) -> bool:
        u, o = self.strand_components(idx)
        return u == o

    def delta(self, idx: int) -> int:
        """``(r_+ - r_0 + 1) / 2``: 0 at a self-crossing, 1 at a mixed crossing."""
        return 0 if self.is_self_crossing(idx) else 1

    def first_nondescending(self) -> int | None:
        """First crossing met from below when walking the components in order.

        Components are walked in order of their least edge label, each from that
        label. ``None`` means the diagram is descending (hence an unlink).
        """
        head = self.head
        visited: set[int] = set()
        for comp in self.edge_components:
            for e in comp:
                idx, over = head[e]
                if idx in visited:
                    continue
                visited.add(idx)
                if not over:
                    return idx
        return None

    # -- moves ----------------------------------------------------------------------------
    def switch(self, idx: int) -> "LinkDiagram":
        cs = list(self.crossings)
        cs[idx] = cs[idx].switched()
        return LinkDiagram(tuple(cs), self.free_loops)

    def smooth(self, idx: int) -> "LinkDiagram":
        """Oriented smoothing: under-in continues as over-out, over-in as under-out."""
        c = self.crossings[idx]
        rest = self.crossings[:idx] + self.crossings[idx + 1:]
        return _merge(rest, [(c.under_in, c.over_out), (c.over_in, c.under_out)], self.free_loops)

    def delete_component(self, comp: int) -> "LinkDiagram":
        """Remove one edge component; crossings it takes part in are undone."""
        cmap = self.component_of_edge
        keep = []
        merges = []
        for c in self.crossings:
            cu, co = cmap[c.under_in], cmap[c.over_in]
            if cu == comp and co == comp:
                continue
            if cu == comp:
                merges.append((c.over_in, c.over_out))
            elif co == comp:
                merges.append((c.under_in, c.under_out))
            else:
                keep.append(c)
        return _merge(tuple(keep), merges, self.free_loops)

    def component_diagram(self, comp: int) -> "LinkDiagram":
        """The knot diagram of one edge component; other components are erased."""
        cmap = self.component_of_edge
        keep = []
        merges = []
        for c in self.crossings:
            cu, co = cmap[c.under_in], cmap[c.over_in]
            if cu == comp and co == comp:
                keep.append(c)
            elif cu == comp:
                merges.append((c.under_in, c.under_out))
            elif co == comp:
                merges.append((c.over_in, c.over_out))
        return _merge(tuple(keep), merges, 0)

    def linking_sum(self) -> int:
        """Sum over component pairs of linking numbers (half the mixed-crossing sign sum)."""
        tot = sum(c.sign for i, c in enumerate(self.crossings) if not self.is_self_crossing(i))
        if tot % 2:
            raise PDError("odd mixed-crossing sign sum")
        return tot // 2

    def mirror(self) -> "LinkDiagram":
        return LinkDiagram(tuple(c.switched() for c in self.crossings), self.free_loops, self.name)

    # -- normal forms ---------------------------------------------------------------
    def relabeled(self) -> "LinkDiagram":
        """Relabel edges 1, 2, ... along components; preserves walk order and basepoints."""
        new = {}
        n = 1
        for comp in self.edge_components:
            for e in comp:
                new[e] = n
                n += 1
        cs = tuple(sorted((c.relabel(new.__getitem__) for c in self.crossings), key=lambda c: c.pd))
        return LinkDiagram(cs, self.free_loops, self.name)

    def key(self) -> tuple:
        d = self.relabeled()
        return (tuple((c.pd, c.sign) for c in d.crossings), d.free_loops)

    def simplify(self) -> "LinkDiagram":
        """Remove kinks (R1) and removable bigons (R2) until none are left."""
        d = self
        while True:
            e = d._remove_kink()
            if e is None:
                e = d._remove_bigon()
            if e is None:
                return d
            d = e

    def _remove_kink(self) -> "LinkDiagram | None":
        for idx, c in enumerate(self.crossings):
            ins = {c.under_in, c.over_in}
            outs = {c.under_out, c.over_out}
            loop = ins & outs
            if not loop:
                continue
            rest = self.crossings[:idx] + self.crossings[idx + 1:]
            if len(loop) == 2:
                # figure-eight curve: a lone unknot
                if c.under_in == c.under_out or c.over_in == c.over_out:
                    return LinkDiagram(rest, self.free_loops + 2)
                return LinkDiagram(rest, self.free_loops + 1)
            (e,) = loop
            a = (ins - {e}).pop()
            b = (outs - {e}).pop()
            return _merge(rest, [(a, b)], self.free_loops)
        return None

    def _remove_bigon(self) -> "LinkDiagram | None":
        head = self.head
        for i1, c1 in enumerate(self.crossings):
            e = c1.over_out
            i2, over = head[e]
            if i2 == i1 or not over:
                continue
            c2 = self.crossings[i2]
            if c1.sign == c2.sign:
                continue
            if head[c1.under_out][0] == i2 and not head[c1.under_out][1]:
                und = (c1.under_in, c2.under_out)
            elif head[c2.under_out][0] == i1 and not head[c2.under_out][1]:
                und = (c2.under_in, c1.under_out)
            else:
                continue
            rest = tuple(c for k, c in enumerate(self.crossings) if k not in (i1, i2))
            return _merge(rest, [(c1.over_in, c2.over_out), und], self.free_loops)
        return None

    # -- io ------------------------------------------------------------------------------------
    def to_pd_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# name: {self.name}")
        lines.append("# convention: X i j k l, i = incoming under-edge, counterclockwise")
        lines.append("# sign: over-strand runs l->j (positive) or j->l (negative)")
        for c in self.crossings:
            lines.append("X " + " ".join(map(str, c.pd)) + (" +" if c.sign > 0 else " -"))
        lines += ["O"] * self.free_loops
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return f"LinkDiagram({len(self.crossings)} crossings, {self.components} components)"


def _label_order_sign(pd: Sequence[int]) -> int | None:
    """Sign suggested by consecutive over-strand labels, if they are consecutive."""
    _, j, _, l = pd
    if j == l + 1:
        return 1
    if l == j + 1:
        return -1
    return None


def _merge(crossings: Sequence[Crossing], pairs: Iterable[tuple[int, int]], free_loops: int) -> LinkDiagram:
    """Identify edge labels pairwise ``(incoming end, outgoing end)``.

    A pair whose labels already denote the same edge closes up a loop with no
    crossings left on it; that loop becomes a free loop.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    loops = free_loops
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            lo, hi = min(ra, rb), max(ra, rb)
            parent[hi] = lo
    cs = tuple(c.relabel(find) for c in crossings)
    return LinkDiagram(cs, loops)


# -- parsing ----------------------------------------------------------------------------------


def _orient(raw: list[tuple[int, int, int, int]], explicit: list[int | None]) -> list[int]:
    """Infer each crossing's sign from edge continuity (under-strands are oriented)."""
    n = len(raw)
    occ: dict[int, list[tuple[int, int]]] = {}
    for idx, pd in enumerate(raw):
        for slot, lab in enumerate(pd):
            occ.setdefault(lab, []).append((idx, slot))
    for lab, where in occ.items():
        if len(where) != 2:
            raise PDError(f"edge label {lab} occurs {len(where)} times (expected 2)")
    # direction of each slot: +1 outgoing, -1 incoming, 0 unknown
    dirs = [[-1, 0, 1, 0] for _ in range(n)]
    sign: list[int | None] = list(explicit)
    for idx, s in enumerate(sign):
        if s is not None:
            dirs[idx][1], dirs[idx][3] = (1, -1) if s > 0 else (-1, 1)

    def settle() -> bool:
        changed = True
        while changed:
            changed = False
            for lab, ((c1, s1), (c2, s2)) in occ.items():
                d1, d2 = dirs[c1][s1], dirs[c2][s2]
                if d1 and d2:
                    if d1 == d2:
                        raise PDError(f"inconsistent orientation along edge {lab}")
                    continue
                if d1 or d2:
                    val = -(d1 or d2)
                    c, s = (c2, s2) if d1 else (c1, s1)
                    dirs[c][s] = val
                    other = 4 - s if s in (1, 3) else None
                    if other is not None and dirs[c][other] == 0:
                        dirs[c][other] = -val
                    changed = True
        return all(dirs[c][1] for c in range(n))

    while not settle():
        # a component made only of over-strands: pick the label-order direction
        idx = next(c for c in range(n) if dirs[c][1] == 0)
        guess = _label_order_sign(raw[idx]) or 1
        dirs[idx][1], dirs[idx][3] = (1, -1) if guess > 0 else (-1, 1)
    return [1 if dirs[c][1] == 1 else -1 for c in range(n)]


def parse_pd(text: str, name: str = "") -> LinkDiagram:
    """Parse ``X a b c d`` lines (optionally ``PD[X[...], ...]``); ``O`` adds a free loop.

    A crossing line may end in ``+`` or ``-`` to fix its sign explicitly. An
    empty code is the unknot.
    """
    raw: list[tuple[int, int, int, int]] = []
    explicit: list[int | None] = []
    loops = 0
    body = []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("#"):
            if s[1:].strip().startswith("name:") and not name:
                name = s.split(":", 1)[1].strip()
            continue
        body.append(s)
    joined = " ".join(body).strip()
    if joined.startswith("PD") or joined.startswith("[["):
        import re

        for m in re.finditer(r"(?:X)?\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]", joined):
            raw.append(tuple(int(g) for g in m.groups()))  # type: ignore[arg-type]
            explicit.append(None)
    else:
        for s in body:
            if not s:
                continue
            parts = s.replace(",", " ").split()
            if parts[0] == "O" and len(parts) == 1:
                loops += 1
                continue
            if parts[0] != "X" or len(parts) not in (5, 6):
                raise PDError(f"cannot parse PD line {s!r}")
            try:
                raw.append(tuple(int(x) for x in parts[1:5]))  # type: ignore[arg-type]
            except ValueError as exc:
                raise PDError(f"non-integer label in {s!r}") from exc
            explicit.append(None if len(parts) == 5 else (1 if parts[5] == "+" else -1))
    if not raw and loops == 0:
        return LinkDiagram((), 1, name)
    signs = _orient(raw, explicit)
    return LinkDiagram(tuple(Crossing(pd, s) for pd, s in zip(raw, signs)), loops, name)


def load_pd(path: str | Path) -> LinkDiagram:
    return parse_pd(Path(path).read_text())


# -- constructions -----------------------------------------------------------------------------


class _Labels:
    def __init__(self, start: int = 1):
        self.n = start

    def __call__(self) -> int:
        self.n += 1
        return self.n - 1


def _braid_crossing(left_in: int, right_in: int, left_out: int, right_out: int, positive: bool) -> Crossing:
    """A braid crossing, strands running upwards.

    Positive: the left strand goes over to the right. ``*_in`` are the bottom
    labels by position, ``*_out`` the top labels by position.
    """
    if positive:
        # under: bottom-right -> top-left; over: bottom-left -> top-right
        return Crossing((right_in, right_out, left_out, left_in), 1)
    # under: bottom-left -> top-right; over: bottom-right -> top-left
    return Crossing((left_in, right_in, right_out, left_out), -1)


def _braid_body(word: Sequence[int], bottom: list[int], fresh: _Labels) -> tuple[list[Crossing], list[int]]:
    cur = list(bottom)
    out = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < len(cur) - 1:
            raise PDError(f"generator {g} out of range for {len(cur)} strands")
        lo, ro = fresh(), fresh()
        out.append(_braid_crossing(cur[i], cur[i + 1], lo, ro, g > 0))
        cur[i], cur[i + 1] = lo, ro
    return out, cur


def braid_closure(word: Sequence[int], strands: int | None = None, name: str = "") -> LinkDiagram:
    """Closure of a braid word (``k`` for sigma_k, ``-k`` for its inverse)."""
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    fresh = _Labels()
    bottom = [fresh() for _ in range(strands)]
    crossings, top = _braid_body(word, bottom, fresh)
    d = _merge(crossings, list(zip(top, bottom)), 0)
    return LinkDiagram(d.crossings, d.free_loops, name)


def torus_braid(p: int, q: int) -> list[int]:
    """``(sigma_1 ... sigma_{p-1})^q`` (inverse generators for negative q)."""
    base = list(range(1, p))
    if q >= 0:
        return base * q
    return [-g for g in reversed(base)] * (-q)


def cable(d: LinkDiagram, p: int, q: int) -> LinkDiagram:
    """(p, q)-cable of a knot diagram, measured against the 0-framing.

    Blackboard p-parallel (each crossing becomes p*p crossings), then the braid
    ``(sigma_1 ... sigma_{p-1})^(q - p*w)`` with ``w`` the writhe is spliced
    into one edge.
    """
    if p < 1:
        raise PDError("p must be positive")
    if gcd(p, q) != 1:
        raise PDError(f"p={p} and q={q} are not coprime")
    if d.components != 1:
        raise PDError("cabling needs a knot diagram (one component)")
    return blackboard_parallel(d, p, q - p * d.writhe)


def blackboard_parallel(d: LinkDiagram, p: int, twists: int = 0) -> LinkDiagram:
    """p parallel copies of a knot diagram with ``(sigma_1 ... sigma_{p-1})^twists`` spliced in."""
    if p < 1:
        raise PDError("p must be positive")
    if d.components != 1:
        raise PDError("parallels need a knot diagram (one component)")
    if not d.crossings:
        return braid_closure(torus_braid(p, twists), p, name=f"{p}-parallel of unknot")
    twist = twists
    fresh = _Labels()
    # copies of each edge; copy t lies t steps to the right of the core
    out_lab: dict[int, list[int]] = {}
    in_lab: dict[int, list[int]] = {}
    for comp in d.edge_components:
        for e in comp:
            labs = [fresh() for _ in range(p)]
            out_lab[e] = labs
            in_lab[e] = labs
    splice = d.edge_components[0][0]
    if twist:
        in_lab[splice] = [fresh() for _ in range(p)]
    crossings: list[Crossing] = []
    for c in d.crossings:
        ui, uo = in_lab[c.under_in], out_lab[c.under_out]
        oi, oo = in_lab[c.over_in], out_lab[c.over_out]
        # under copies run north with copy u at x = u; over copies run east
        # (positive, copy v at y = -v) or west (negative, copy v at y = +v)
        if c.sign > 0:
            under_meets = list(range(p - 1, -1, -1))
            over_meets = list(range(p))
        else:
            under_meets = list(range(p))
            over_meets = list(range(p - 1, -1, -1))
        useg = {u: [ui[u]] + [fresh() for _ in range(p - 1)] + [uo[u]] for u in range(p)}
        oseg = {v: [oi[v]] + [fresh() for _ in range(p - 1)] + [oo[v]] for v in range(p)}
        for u in range(p):
            for v in range(p):
                a = under_meets.index(v)
                b = over_meets.index(u)
                before, after = oseg[v][b], oseg[v][b + 1]
                if c.sign > 0:
                    crossings.append(Crossing((useg[u][a], after, useg[u][a + 1], before), 1))
                else:
                    crossings.append(Crossing((useg[u][a], before, useg[u][a + 1], after), -1))
    if twist:
        body, top = _braid_body(torus_braid(p, twist), list(out_lab[splice]), fresh)
        crossings.extend(body)
        return _merge(crossings, list(zip(top, in_lab[splice])), 0)
    return LinkDiagram(tuple(crossings), 0)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    shift = max((max(c.pd) for c in d1.crossings), default=0)
    cs = d1.crossings + tuple(c.relabel(lambda x: x + shift) for c in d2.crossings)
    return LinkDiagram(cs, d1.free_loops + d2.free_loops)


def unlink(r: int) -> LinkDiagram:
    return LinkDiagram((), r, f"unlink{r}")


def unknot() -> LinkDiagram:
    return LinkDiagram((), 1, "unknot")


def add_kink(d: LinkDiagram, edge: int, sign: int) -> LinkDiagram:
    """Insert a Reidemeister-I curl of the given sign into ``edge``."""
    if edge not in d.successor:
        raise PDError(f"no edge {edge}")
    top = max(max(c.pd) for c in d.crossings)
    f, g = top + 1, top + 2
    idx, _ = d.head[edge]
    old = d.crossings[idx]
    moved = Crossing(tuple(g if x == edge and pos in _in_slots(old) else x for pos, x in enumerate(old.pd)), old.sign)  # type: ignore[arg-type]
    curl = Crossing((edge, g, f, f), 1) if sign > 0 else Crossing((edge, f, f, g), -1)
    cs = list(d.crossings)
    cs[idx] = moved
    return LinkDiagram(tuple(cs) + (curl,), d.free_loops, d.name)


def _in_slots(c: Crossing) -> tuple[int, int]:
    return (0, 3) if c.sign > 0 else (0, 1)


def kinked_unknot(sign: int) -> LinkDiagram:
    """One-crossing diagram of the unknot with writhe ``sign``."""
    if sign > 0:
        return LinkDiagram((Crossing((1, 1, 2, 2), 1),), 0, "unknot+")
    return LinkDiagram((Crossing((1, 2, 2, 1), -1),), 0, "unknot-")
