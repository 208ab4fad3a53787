"""Pure-Python kernels. Same contracts as the compiled ``_fast`` module."""

from __future__ import annotations

from typing import Sequence


def boundary_components_all(pairing: Sequence[int]) -> int:
    m = len(pairing)
    if m == 0:
        return 1
    seen = [False] * m
    cycles = 0
    for start in range(m):
        if seen[start]:
            continue
        cycles += 1
        k = start
        while not seen[k]:
            seen[k] = True
            k = pairing[(k + 1) % m]
    return cycles


def sl_state_sum(pairing: Sequence[int]) -> dict[int, int]:
    """Map N-exponent -> coefficient of sum over bands subsets A of (-1)^(n-|A|) N^(s(A)-(n-|A|))."""
    m = len(pairing)
    n = m // 2
    if n == 0:
        return {1: 1}
    chord_of = [0] * m
    c = 0
    for x in range(m):
        if pairing[x] > x:
            chord_of[x] = c
            chord_of[pairing[x]] = c
            c += 1
    succ_plain = [(k + 1) % m for k in range(m)]
    succ_jump = [pairing[(k + 1) % m] for k in range(m)]
    nxt_chord = [chord_of[(k + 1) % m] for k in range(m)]
    out: dict[int, int] = {}
    for mask in range(1 << n):
        seen = [False] * m
        s = 0
        for start in range(m):
            if seen[start]:
                continue
            s += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = succ_jump[k] if (mask >> nxt_chord[k]) & 1 else succ_plain[k]
        neg = n - bin(mask).count("1")
        e = s - neg
        out[e] = out.get(e, 0) + (-1 if neg & 1 else 1)
    return {e: v for e, v in out.items() if v}


def count_lifts(pairing: Sequence[int], p: int, order: Sequence[int]) -> int:
    """Leg p-colorings whose lift to the p-fold cover has no crossing chords.

    ``order`` lists the chords (as their smaller leg) in backtracking order.
    Lifted leg ``x`` with colour ``c`` sits at ``c * len(pairing) + x``.
    """
    m = len(pairing)
    n = len(order)
    if n == 0:
        return 1
    lo = [0] * n
    hi = [0] * n

    def go(i: int) -> int:
        if i == n:
            return 1
        x = order[i]
        y = pairing[x]
        total = 0
        for cx in range(p):
            ax = cx * m + x
            for cy in range(p):
                ay = cy * m + y
                a, b = (ax, ay) if ax < ay else (ay, ax)
                ok = True
                for j in range(i):
                    c, d = lo[j], hi[j]
                    if (a < c < b) != (a < d < b):
                        ok = False
                        break
                if ok:
                    lo[i], hi[i] = a, b
                    total += go(i + 1)
        return total

    return go(0)
