"""Mirror-sequence constructions for girth-8 QC-LDPC exponent matrices.

Column weights 7 and 8 are supported.  For each column weight there are six
families, selected by the residue of the row weight ``L`` modulo 10.  Every
family is a closed form ``m_j = a_j * L + b_j``; the exponent matrix is the
outer product ``E[j][l] = m_j * l`` kept unreduced so that a single matrix
serves every circulant size.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    ChainMismatch,
    IntegerOverflow,
    QCG8Error,
    RowWeightTooSmall,
    UnsupportedColumnWeight,
)

INT64_MAX = np.iinfo(np.int64).max

# (a, b) pairs: entry = a * L + b
_FORMS = {
    "J7-135": ((0, 0), (0, 4), (1, 0), (1, 8), (3, 4), (3, 12), (4, 8)),
    "J7-024": ((0, 0), (0, 4), (1, 1), (1, 9), (3, 7), (3, 15), (4, 12)),
    "J7-9": ((0, 0), (0, 4), (1, 2), (1, 10), (3, 10), (3, 18), (4, 16)),
    "J7-8": ((0, 0), (0, 4), (1, 3), (1, 11), (3, 13), (3, 21), (4, 20)),
    "J7-7": ((0, 0), (0, 8), (1, 0), (1, 16), (3, 8), (3, 24), (4, 16)),
    "J7-6": ((0, 0), (0, 8), (1, 1), (1, 17), (3, 11), (3, 27), (4, 20)),
    "J8-135": ((0, 0), (0, 4), (1, 0), (1, 8), (3, 4), (3, 12), (4, 8), (4, 12)),
    "J8-024": ((0, 0), (0, 4), (1, 1), (1, 9), (3, 7), (3, 15), (4, 12), (4, 16)),
    "J8-9": ((0, 0), (0, 4), (1, 2), (1, 10), (3, 10), (3, 18), (4, 16), (4, 20)),
    "J8-8": ((0, 0), (0, 4), (1, 3), (1, 11), (3, 13), (3, 21), (4, 20), (4, 24)),
    "J8-7": ((0, 0), (0, 8), (1, 0), (1, 16), (3, 8), (3, 24), (4, 16), (4, 24)),
    "J8-6": ((0, 0), (0, 8), (1, 1), (1, 17), (3, 11), (3, 27), (4, 20), (4, 28)),
}

FAMILIES = tuple(_FORMS)
BASIC_SUFFIXES = ("135", "7")
MIRROR_FAMILIES = ("J7-135", "J7-7")

_RESIDUE_SUFFIX = {
    1: "135", 3: "135", 5: "135",
    0: "024", 2: "024", 4: "024",
    9: "9", 8: "8", 7: "7", 6: "6",
}

# child suffix -> parent suffix; child at L equals parent at L + 1
_PARENT = {"024": "135", "9": "024", "8": "9", "6": "7"}

SUPPORTED_COLUMN_WEIGHTS = (7, 8)


@dataclass(frozen=True)
class ConstructionId:
    column_weight: int
    family: str
    kind: str  # "basic" | "derived"

    @classmethod
    def from_family(cls, family):
        if family not in _FORMS:
            raise QCG8Error(f"unknown construction family {family!r}")
        j = int(family[1])
        suffix = family.split("-", 1)[1]
        kind = "basic" if suffix in BASIC_SUFFIXES else "derived"
        return cls(j, family, kind)

    @property
    def suffix(self):
        return self.family.split("-", 1)[1]

    @property
    def label(self):
        """Short label such as ``BC(J7-135)`` or ``DC(J8-6)``."""
        return ("BC" if self.kind == "basic" else "DC") + f"({self.family})"


@dataclass(frozen=True)
class MirrorSequence:
    id: ConstructionId
    L: int
    entries: tuple

    @property
    def J(self):
        return len(self.entries)

    @property
    def family(self):
        return self.id.family

    @property
    def max_entry(self):
        return self.entries[-1]

    def mirror_sums(self):
        """Pair sums ``m_i + m_{J-i}`` for ``i = 1 .. floor(J/2)``."""
        m = self.entries
        return tuple(m[i] + m[self.J - i] for i in range(1, self.J // 2 + 1))


@dataclass(frozen=True, eq=False)
class ExponentMatrix:
    """Unreduced exponent matrix; ``values`` is a read-only int64 array."""

    values: np.ndarray
    family: str | None = None
    L: int | None = None
    entries: tuple | None = None

    def __post_init__(self):
        arr = np.array(self.values, dtype=np.int64, copy=True)
        if arr.ndim != 2 or arr.size == 0:
            raise QCG8Error("exponent matrix must be a non-empty 2-D array")
        if (arr < 0).any():
            raise QCG8Error("exponent matrix entries must be non-negative")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def shape(self):
        return self.values.shape

    @property
    def J(self):
        return self.values.shape[0]

    @property
    def num_columns(self):
        return self.values.shape[1]

    def __eq__(self, other):
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def truncated(self, num_columns):
        """Keep only the first ``num_columns`` columns."""
        if not 1 <= num_columns <= self.num_columns:
            raise QCG8Error(f"cannot truncate {self.num_columns} columns to {num_columns}")
        entries = self.entries
        return ExponentMatrix(self.values[:, :num_columns], self.family, num_columns, entries)

    def rows(self, indices):
        return ExponentMatrix(self.values[list(indices), :])

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.values.tolist())
        return buf.getvalue()

    def to_json(self):
        header = {
            "J": int(self.J),
            "L": int(self.num_columns),
            "family": self.family,
            "entries": list(self.entries) if self.entries is not None else None,
        }
        return json.dumps({**header, "matrix": self.values.tolist()})

    @classmethod
    def from_csv(cls, text):
        rows = []
        for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append([int(cell) for cell in row])
            except ValueError as exc:
                raise QCG8Error(f"exponent CSV line {lineno}: {exc}") from None
        if not rows or len({len(r) for r in rows}) != 1:
            raise QCG8Error("exponent CSV must hold a non-empty rectangular matrix")
        return cls(np.array(rows, dtype=np.int64))

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        entries = doc.get("entries")
        return cls(
            np.array(doc["matrix"], dtype=np.int64),
            doc.get("family"),
            doc.get("L"),
            tuple(entries) if entries is not None else None,
        )


def _check_column_weight(J):
    if J not in SUPPORTED_COLUMN_WEIGHTS:
        raise UnsupportedColumnWeight(
            f"unsupported column weight J={J}; supported: {SUPPORTED_COLUMN_WEIGHTS}"
        )


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise QCG8Error(f"{name} must be an integer, got {value!r}")
    return int(value)


def family_for(J, L):
    """Family name selected by column weight and ``mod(L, 10)``."""
    J = _check_int("column weight", J)
    L = _check_int("row weight", L)
    _check_column_weight(J)
    if L <= J:
        raise RowWeightTooSmall(f"row weight L={L} must exceed column weight J={J}")
    return f"J{J}-{_RESIDUE_SUFFIX[L % 10]}"


def build_sequence(family, L):
    """Instantiate a family's closed form at ``L`` without the residue check."""
    cid = ConstructionId.from_family(family)
    L = _check_int("row weight", L)
    if L < 1:
        raise RowWeightTooSmall(f"row weight L={L} must be positive")
    entries = tuple(a * L + b for a, b in _FORMS[family])
    if any(x >= y for x, y in zip(entries, entries[1:])):
        raise QCG8Error(f"{family} at L={L} is not strictly increasing: {list(entries)}")
    # 8-term cycle sums of unreduced entries must stay in int64
    if 8 * entries[-1] * max(L - 1, 1) > INT64_MAX:
        raise IntegerOverflow(f"L={L} exceeds the 64-bit safe range for {family}")
    return MirrorSequence(cid, L, entries)


def select_construction(J, L):
    """Return the mirror sequence prescribed for ``(J, L)``.

    Raises
    ------
    UnsupportedColumnWeight
        If ``J`` is not 7 or 8.
    RowWeightTooSmall
        If ``L <= J``.
    """
    return build_sequence(family_for(J, L), L)


def exponent_matrix(ms):
    """``E = M^T [0, 1, ..., L-1]`` with no modular reduction."""
    m = np.array(ms.entries, dtype=np.int64)
    if ms.entries[-1] * (ms.L - 1) > INT64_MAX:
        raise IntegerOverflow(f"exponent matrix for L={ms.L} overflows int64")
    cols = np.arange(ms.L, dtype=np.int64)
    return ExponentMatrix(np.outer(m, cols), ms.family, ms.L, ms.entries)


def closed_form(family):
    """Coefficient pairs ``(a, b)`` with ``m_j = a * L + b``."""
    ConstructionId.from_family(family)
    return _FORMS[family]


def parent_family(family):
    """Family whose instance at ``L + 1`` truncates to ``family`` at ``L``, or None."""
    cid = ConstructionId.from_family(family)
    parent = _PARENT.get(cid.suffix)
    return None if parent is None else f"J{cid.column_weight}-{parent}"


def truncation_consistency(parent, derived):
    """Check that ``derived`` (at L) equals ``parent`` evaluated at L + 1.

    Raises ChainMismatch unless ``parent`` is the immediate parent family of
    ``derived`` in the chains 135 -> 024 -> 9 -> 8 and 7 -> 6.
    """
    if parent_family(derived.family) != parent.family:
        raise ChainMismatch(f"{parent.family} is not the parent of {derived.family}")
    return parent.L == derived.L + 1 and parent.entries == derived.entries
