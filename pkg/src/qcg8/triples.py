"""Row-triple analysis: GCD indicators and 6-cycle certification.

Three rows ``[a0, a1, a2]`` of a mirror sequence define the sub-matrix
``[a0, a1, a2]^T [0, ..., L-1]``.  Three operations preserve its cycle
structure modulo P:

* ``S``  -- subtract the first entry,
* ``R``  -- replace ``[0, b, c]`` by ``[0, c - b, c]``,
* ``/d`` -- divide every entry by ``d`` (``d`` coprime with P).

A normalized triple ``[0, b, c]`` has GCD indicator ``c / gcd(b, c)``; the
sub-matrix is free of 4- and 6-cycles for every ``P >= c (L-1) + 1`` when the
indicator is at least ``L`` (label ``P1``).  If some ``b' >= L`` divides both
``b`` and ``P`` while being coprime with ``c``, there are no 6-cycles at that
particular P (label ``P2``).  Anything else is settled by enumeration, which
is also run for every triple as ground truth.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .errors import DegenerateTriple, EquivalenceError
from .girth import find_cycle


@dataclass(frozen=True)
class Triple:
    a0: int
    a1: int
    a2: int

    def __post_init__(self):
        if min(self) < 0:
            raise DegenerateTriple(f"triple entries must be non-negative: {list(self)}")
        if not self.a0 < self.a1 < self.a2:
            raise DegenerateTriple(f"triple must be strictly increasing: {list(self)}")

    def __iter__(self):
        return iter((self.a0, self.a1, self.a2))

    def __str__(self):
        return "[{},{},{}]".format(*self)


def _triple(t):
    return t if isinstance(t, Triple) else Triple(*(int(x) for x in t))


def gcd_indicator(t):
    """``c / gcd(b, c)`` of the S-normalized form ``[0, b, c]``."""
    a0, a1, a2 = _triple(t)
    b, c = a1 - a0, a2 - a0
    return c // gcd(b, c)


def _parse_op(op):
    if op in ("S", "R"):
        return op, None
    if isinstance(op, str) and op.startswith("/"):
        try:
            return "/", int(op[1:])
        except ValueError:
            pass
    raise EquivalenceError(f"unknown equivalence operation {op!r}")


def normalize_triple(t, ops, P=None):
    """Apply equivalence operations in order.

    ``ops`` is a sequence of ``"S"``, ``"R"`` and ``"/d"`` strings, e.g.
    ``["S", "R", "/2"]``.  ``R`` needs a leading zero; ``/d`` needs ``d`` to
    divide every entry and, when ``P`` is given, ``gcd(d, P) == 1``.
    """
    a = list(_triple(t))
    for op in ops:
        kind, d = _parse_op(op)
        if kind == "S":
            a = [x - a[0] for x in a]
        elif kind == "R":
            if a[0] != 0:
                raise EquivalenceError(f"'R' needs a triple starting at 0, got {a}")
            a = [0, a[2] - a[1], a[2]]
        else:
            if d is None or d < 1 or any(x % d for x in a):
                raise EquivalenceError(f"'/{d}' does not divide every entry of {a}")
            if P is not None and gcd(d, P) != 1:
                raise EquivalenceError(f"'/{d}' needs d coprime with P={P}")
            a = [x // d for x in a]
    return Triple(*a)


def reduce_triple(t):
    """Canonical reduced form: S, then R when it shrinks the middle entry.

    Returns ``(form, ops)``.
    """
    t = _triple(t)
    ops = []
    if t.a0 != 0:
        ops.append("S")
    b, c = t.a1 - t.a0, t.a2 - t.a0
    if c - b < b:
        ops.append("R")
        b = c - b
    return Triple(0, b, c), tuple(ops)


def _coprime_part(n, P):
    """Largest divisor of ``n`` coprime with ``P``."""
    g = gcd(n, P)
    while g > 1:
        n //= g
        g = gcd(n, P)
    return n


def _divisors_at_least(n, lo):
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    divs = set(small) | {n // d for d in small}
    return sorted(d for d in divs if d >= lo)


def p1_form(t, L, P):
    """Form and ops that make property P1 apply at ``(L, P)``, or None."""
    form, ops = reduce_triple(t)
    _, b, c = form
    if c // gcd(b, c) < L:
        return None
    d = _coprime_part(gcd(b, c), P)
    if d > 1:
        form, ops = Triple(0, b // d, c // d), ops + (f"/{d}",)
    if P >= form.a2 * (L - 1) + 1:
        return form, ops
    return None


def p2_form(t, L, P):
    """``(form, ops, b')`` for which property P2 applies at ``(L, P)``, or None."""
    t = _triple(t)
    s_ops = ("S",) if t.a0 else ()
    b, c = t.a1 - t.a0, t.a2 - t.a0
    for ops, first in ((s_ops, b), (s_ops + ("R",), c - b)):
        for bp in _divisors_at_least(first, L):
            if P % bp == 0 and gcd(c, bp) == 1:
                return Triple(0, first, c), ops, bp
    return None


@dataclass(frozen=True)
class TripleAnalysis:
    index: int
    rows: tuple
    triple: Triple
    normalized: Triple
    indicator: int
    verdict: str  # "P1", "P2", "equivalent-to(#k)" or "enumerated"
    applied_ops: tuple
    reason_form: Triple
    reason_ops: tuple
    cycle_free: bool
    circulant_size: int
    b_prime: int | None = None

    @property
    def reference(self):
        if self.verdict.startswith("equivalent-to(#"):
            return int(self.verdict[len("equivalent-to(#"):-1])
        return None


def _enumerated_cycle_free(t, L, P):
    E = np.outer(np.array(list(t), dtype=np.int64), np.arange(L, dtype=np.int64))
    return find_cycle(E, P, 2) is None and find_cycle(E, P, 3) is None


def certify_triple(t, L, P, index=0, rows=()):
    """Classify why a row-triple has no 4- or 6-cycles at circulant size P."""
    t = _triple(t)
    normalized, ops = reduce_triple(t)
    indicator = normalized.a2 // gcd(normalized.a1, normalized.a2)
    free = _enumerated_cycle_free(t, L, P)
    common = dict(
        index=index, rows=tuple(rows), triple=t, normalized=normalized,
        indicator=indicator, applied_ops=ops, cycle_free=free, circulant_size=P,
    )
    p1 = p1_form(t, L, P)
    if p1 is not None:
        return TripleAnalysis(verdict="P1", reason_form=p1[0], reason_ops=p1[1], **common)
    p2 = p2_form(t, L, P)
    if p2 is not None:
        return TripleAnalysis(
            verdict="P2", reason_form=p2[0], reason_ops=p2[1], b_prime=p2[2], **common
        )
    return TripleAnalysis(verdict="enumerated", reason_form=normalized, reason_ops=ops, **common)


def check_gcd_constraint(ms):
    """``(passed, min_indicator, worst_triple)`` over all row-triples."""
    worst = None
    for t in itertools.combinations(ms.entries, 3):
        ind = gcd_indicator(t)
        if worst is None or ind < worst[0]:
            worst = (ind, Triple(*t))
    return worst[0] >= ms.L, worst[0], worst[1]


def table_report(ms, P=None):
    """One analysis per row-triple, numbered in lexicographic row order.

    Without ``P`` the family's CCS bound ``m_{J-1}(L-1) + 1`` is used.  A
    triple whose reduced form repeats an earlier one is labelled
    ``equivalent-to(#k)``.
    """
    if P is None:
        P = ms.entries[-1] * (ms.L - 1) + 1
    seen = {}
    report = []
    for index, rows in enumerate(itertools.combinations(range(ms.J), 3), start=1):
        t = Triple(*(ms.entries[r] for r in rows))
        a = certify_triple(t, ms.L, P, index=index, rows=rows)
        if a.normalized in seen:
            a = TripleAnalysis(
                index=a.index, rows=a.rows, triple=a.triple, normalized=a.normalized,
                indicator=a.indicator, verdict=f"equivalent-to(#{seen[a.normalized]})",
                applied_ops=a.applied_ops, reason_form=a.normalized,
                reason_ops=a.applied_ops, cycle_free=a.cycle_free, circulant_size=P,
            )
        else:
            seen[a.normalized] = index
        report.append(a)
    return report


def _ops_label(ops):
    return "".join(ops) if ops else "-"


def report_to_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["#", "triple", "reduced form", "GCD indicator", "equivalent form",
                "operations", "reason", "cycle free"])
    for a in report:
        reduced = "-" if a.normalized == a.triple else str(a.normalized)
        equiv = "-" if a.reason_form == a.triple else str(a.reason_form)
        w.writerow([a.index, str(a.triple), reduced, a.indicator, equiv,
                    _ops_label(a.reason_ops), a.verdict, "yes" if a.cycle_free else "no"])
    return buf.getvalue()
