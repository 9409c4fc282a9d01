"""Girth (up to 8) of a QC Tanner graph straight from its exponent matrix.

A closed walk through blocks ``(j_0,l_0) -> (j_0,l_1) -> (j_1,l_1) -> ...``
lifts to a cycle of length ``2k`` exactly when the alternating sum

    sum_i E[j_i][l_i] - E[j_i][l_{i+1}]      (indices mod k)

vanishes modulo the circulant size, with adjacent rows and adjacent columns
distinct.  Searches run in lexicographic order of the sequence
``(j_0, l_0), (j_1, l_1), ...`` so witnesses are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .constructions import ExponentMatrix
from .errors import InvalidCirculantSize, InvalidCycleLength

AT_LEAST_10 = 10

_SEARCH = {2: _kernels.first_cycle2, 3: _kernels.first_cycle3, 4: _kernels.first_cycle4}


@dataclass(frozen=True)
class GirthReport:
    girth: int  # 4, 6, 8, or AT_LEAST_10
    witness: tuple | None = None
    circulant_size: int | None = None

    @property
    def label(self):
        return "at-least-10" if self.girth == AT_LEAST_10 else str(self.girth)

    def to_dict(self):
        return {
            "girth": self.girth if self.girth != AT_LEAST_10 else "at-least-10",
            "circulant_size": self.circulant_size,
            "witness": [list(p) for p in self.witness] if self.witness else None,
        }


def _as_array(E):
    return E.values if isinstance(E, ExponentMatrix) else np.asarray(E, dtype=np.int64)


def _check_p(P):
    if isinstance(P, bool) or not isinstance(P, (int, np.integer)) or P < 2:
        raise InvalidCirculantSize(f"circulant size must be an integer >= 2, got {P!r}")
    return int(P)


def reduced(E, P):
    """``E mod P`` as a contiguous int64 array."""
    return np.ascontiguousarray(_as_array(E) % _check_p(P), dtype=np.int64)


def find_cycle(E, P, k):
    """Lexicographically first ``2k``-cycle witness, or None.

    Parameters
    ----------
    E : ExponentMatrix or array_like
    P : int
        Circulant size, at least 2.
    k : int
        Half the cycle length: 2, 3 or 4.
    """
    if k not in _SEARCH:
        raise InvalidCycleLength(f"k must be 2, 3 or 4, got {k!r}")
    Er = reduced(E, P)
    out = np.zeros(2 * k, dtype=np.int64)
    if not _SEARCH[k](Er, np.int64(P), out):
        return None
    return tuple((int(out[2 * i]), int(out[2 * i + 1])) for i in range(k))


def cycle_sum(E, witness):
    """Unreduced alternating sum along a witness."""
    arr = _as_array(E)
    k = len(witness)
    total = 0
    for i, (j, l) in enumerate(witness):
        l_next = witness[(i + 1) % k][1]
        total += int(arr[j, l]) - int(arr[j, l_next])
    return total


def is_valid_witness(E, P, witness):
    k = len(witness)
    rows = [j for j, _ in witness]
    cols = [l for _, l in witness]
    for i in range(k):
        if rows[i] == rows[(i + 1) % k] or cols[i] == cols[(i + 1) % k]:
            return False
    if k == 3 and (len(set(rows)) != 3 or len(set(cols)) != 3):
        return False
    return cycle_sum(E, witness) % P == 0


def girth_upper8(E, P):
    """Girth of the lifted Tanner graph, capped at 10."""
    P = _check_p(P)
    for k in (2, 3, 4):
        w = find_cycle(E, P, k)
        if w is not None:
            return GirthReport(2 * k, w, P)
    return GirthReport(AT_LEAST_10, None, P)


def has_girth8(E, P):
    return girth_upper8(E, P).girth == 8


def is_free_of_short_cycles(E, P):
    """No 4-cycles and no 6-cycles, i.e. girth at least 8."""
    return find_cycle(E, P, 2) is None and find_cycle(E, P, 3) is None
