"""Circulant-size landmarks and scans for the mirror-sequence constructions."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .constructions import (
    build_sequence,
    closed_form,
    exponent_matrix,
    family_for,
    FAMILIES,
    select_construction,
)
from .errors import EmptyRange, InvalidCirculantSize, RowWeightTooSmall
from .girth import girth_upper8


@dataclass(frozen=True)
class SmallSizeRule:
    text: str
    coeffs: tuple  # (a, b, c) -> a L^2 + b L + c
    family: str
    shift: int  # 1: build at L + 1 and keep the first L columns

    def value(self, L):
        a, b, c = self.coeffs
        return a * L * L + b * L + c


# residue of L mod 10 -> rule
SMALL_SIZE_RULES = {
    7: {
        1: SmallSizeRule("L(3L+4)", (3, 4, 0), "J7-135", 0),
        3: SmallSizeRule("L(3L+4)", (3, 4, 0), "J7-135", 0),
        5: SmallSizeRule("L(3L+6)", (3, 6, 0), "J7-135", 0),
        7: SmallSizeRule("L(3L+8)", (3, 8, 0), "J7-7", 0),
        9: SmallSizeRule("L(3L+10)", (3, 10, 0), "J7-9", 0),
        4: SmallSizeRule("3L^2+10L+15", (3, 10, 15), "J7-024", 0),
        0: SmallSizeRule("(L+1)(3L+7)", (3, 10, 7), "J7-135", 1),
        2: SmallSizeRule("(L+1)(3L+7)", (3, 10, 7), "J7-135", 1),
        6: SmallSizeRule("(L+1)(3L+11)", (3, 14, 11), "J7-7", 1),
        8: SmallSizeRule("(L+1)(3L+13)", (3, 16, 13), "J7-9", 1),
    },
    8: {
        1: SmallSizeRule("L(3L+8)", (3, 8, 0), "J8-135", 0),
        3: SmallSizeRule("L(3L+8)", (3, 8, 0), "J8-135", 0),
        5: SmallSizeRule("L(3L+10)", (3, 10, 0), "J8-135", 0),
        7: SmallSizeRule("L(3L+16)", (3, 16, 0), "J8-7", 0),
        9: SmallSizeRule("3L^2+16L+12", (3, 16, 12), "J8-9", 0),
        0: SmallSizeRule("(L+1)(3L+11)", (3, 14, 11), "J8-135", 1),
        2: SmallSizeRule("(L+1)(3L+11)", (3, 14, 11), "J8-135", 1),
        4: SmallSizeRule("(L+1)(3L+13)", (3, 16, 13), "J8-135", 1),
        6: SmallSizeRule("(L+1)(3L+19)", (3, 22, 19), "J8-7", 1),
        8: SmallSizeRule("3L^2+22L+31", (3, 22, 31), "J8-9", 1),
    },
}


def _validate(J, L):
    family_for(J, L)  # raises on unsupported J or L <= J


def search_floor(J, L):
    """Smallest P that can host a girth-8 (J, L)-regular QC code: (J-1)(L-1)+1."""
    _validate(J, L)
    return (J - 1) * (L - 1) + 1


def ccs_class_bound(ms):
    return ms.entries[-1] * (ms.L - 1) + 1


def global_lower_bound(J, L):
    """Every P at or above this value admits a girth-8 code from one matrix."""
    if L <= J:
        raise RowWeightTooSmall(f"row weight L={L} must exceed column weight J={J}")
    _validate(J, L)
    if J == 7:
        return 4 * (L - 1) * (L + 5) + 1
    return 4 * (L - 1) * (L + 7) + 1


def min_p_upper_bound(J, L):
    _validate(J, L)
    if J == 7:
        return (L + 1) * (3 * L + 13)
    return (3 * L + 4) * (L + 6) + 7


@dataclass(frozen=True)
class SmallSize:
    P: int
    rule: SmallSizeRule
    J: int
    L: int

    @property
    def recipe(self):
        if self.rule.shift:
            return f"{self.rule.family} at L={self.L + 1}, first {self.L} columns"
        return f"{self.rule.family} at L={self.L}"

    def exponent_matrix(self):
        ms = build_sequence(self.rule.family, self.L + self.rule.shift)
        E = exponent_matrix(ms)
        return E.truncated(self.L) if self.rule.shift else E


def special_small_p(J, L):
    """Closed-form circulant size below the CCS bound, with its construction."""
    _validate(J, L)
    rule = SMALL_SIZE_RULES[J][L % 10]
    return SmallSize(rule.value(L), rule, J, L)


@dataclass(frozen=True)
class BoundSet:
    J: int
    L: int
    family: str
    search_floor: int
    special_p: int
    special_p_formula: str
    special_p_recipe: str
    ccs_class_bound: int
    global_lower_bound: int
    min_p_upper_bound: int

    def to_dict(self):
        return asdict(self)


def bound_set(J, L):
    ms = select_construction(J, L)
    small = special_small_p(J, L)
    return BoundSet(
        J=J, L=L, family=ms.family,
        search_floor=search_floor(J, L),
        special_p=small.P,
        special_p_formula=small.rule.text,
        special_p_recipe=small.recipe,
        ccs_class_bound=ccs_class_bound(ms),
        global_lower_bound=global_lower_bound(J, L),
        min_p_upper_bound=min_p_upper_bound(J, L),
    )


@dataclass(frozen=True)
class ScanResult:
    J: int
    L: int
    family: str
    start: int
    stop: int
    girths: tuple  # girth per P in [start, stop]

    @property
    def feasible(self):
        return [p for p, g in zip(range(self.start, self.stop + 1), self.girths) if g == 8]

    def to_csv(self, feasible_only=False):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["P", "girth"])
        for p, g in zip(range(self.start, self.stop + 1), self.girths):
            if feasible_only and g != 8:
                continue
            w.writerow([p, g if g != 10 else "at-least-10"])
        return buf.getvalue()


def _girths(E, Ps, jobs):
    def one(P):
        return girth_upper8(E, P).girth

    if jobs <= 1:
        return [one(P) for P in Ps]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(one, Ps))


def scan_feasible(J, L, start, stop, jobs=1):
    """Girth of the selected construction at every P in ``[start, stop]``."""
    ms = select_construction(J, L)
    if start < 2:
        raise InvalidCirculantSize(f"scan must start at P >= 2, got {start}")
    if start > stop:
        raise EmptyRange(f"empty circulant-size range [{start}, {stop}]")
    E = exponent_matrix(ms)
    girths = _girths(E, range(start, stop + 1), jobs)
    return ScanResult(J, L, ms.family, start, stop, tuple(girths))


def search_min_p(J, L):
    """Smallest P in [search floor, upper bound] where the construction has girth 8."""
    E = exponent_matrix(select_construction(J, L))
    for P in range(search_floor(J, L), min_p_upper_bound(J, L) + 1):
        if girth_upper8(E, P).girth == 8:
            return P
    # unreachable while the closed-form small size verifies
    raise AssertionError(f"no girth-8 circulant size found for (J, L) = ({J}, {L})")


def all_class_bounds(J, L):
    """CCS bound of every family of column weight J evaluated at L."""
    out = {}
    for fam in FAMILIES:
        if fam.startswith(f"J{J}-"):
            a, b = closed_form(fam)[-1]
            out[fam] = (a * L + b) * (L - 1) + 1
    return out


def gnuplot_figure_data(scans, bounds):
    """Two gnuplot data blocks: feasible points, then bound curves per L."""
    lines = ["# block 0: L P (feasible circulant sizes below the CCS bound)"]
    for s in scans:
        lines.extend(f"{s.L} {p}" for p in s.feasible)
    lines += ["", "", "# block 1: L ccs_class_bound special_p global_lower_bound"]
    for b in bounds:
        lines.append(f"{b.L} {b.ccs_class_bound} {b.special_p} {b.global_lower_bound}")
    return "\n".join(lines) + "\n"
