"""Binary parity-check matrices: circulant lifting, BFS girth, alist I/O.

Shift convention: block ``(j, l)`` with shift ``s = E[j][l] mod P`` has a one
at local position ``(r, c)`` iff ``c = r + s (mod P)``.  Check node
``j * P + r`` and variable node ``l * P + c`` are the global indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .constructions import ExponentMatrix
from .errors import (
    AlistParseError,
    InvalidCirculantSize,
    QCG8Error,
    WeightInconsistency,
)

BFS_CAPS = (4, 6, 8, 10)


@dataclass(frozen=True, eq=False)
class ParityCheckMatrix:
    """Sparse binary matrix stored as sorted row-index lists per column.

    ``exponents`` and ``circulant_size`` are set when the matrix came from a
    circulant lifting; they take no part in equality.
    """

    num_rows: int
    col_rows: tuple  # tuple of int64 arrays, one per column
    exponents: ExponentMatrix | None = field(default=None)
    circulant_size: int | None = field(default=None)

    @property
    def num_cols(self):
        return len(self.col_rows)

    @property
    def shape(self):
        return (self.num_rows, self.num_cols)

    def __eq__(self, other):
        if not isinstance(other, ParityCheckMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and all(np.array_equal(a, b) for a, b in zip(self.col_rows, other.col_rows)))

    def column_weights(self):
        return np.array([len(r) for r in self.col_rows], dtype=np.int64)

    def row_cols(self):
        rows = [[] for _ in range(self.num_rows)]
        for c, rs in enumerate(self.col_rows):
            for r in rs:
                rows[r].append(c)
        return [np.array(r, dtype=np.int64) for r in rows]

    def row_weights(self):
        w = np.zeros(self.num_rows, dtype=np.int64)
        for rs in self.col_rows:
            np.add.at(w, rs, 1)
        return w

    def csr(self):
        """``(col_ptr, col_adj, row_ptr, row_adj)`` flat adjacency arrays."""
        col_ptr = np.zeros(self.num_cols + 1, dtype=np.int64)
        col_ptr[1:] = np.cumsum(self.column_weights())
        col_adj = (np.concatenate(self.col_rows).astype(np.int64)
                   if self.num_cols else np.zeros(0, np.int64))
        rows = self.row_cols()
        row_ptr = np.zeros(self.num_rows + 1, dtype=np.int64)
        row_ptr[1:] = np.cumsum([len(r) for r in rows])
        row_adj = np.concatenate(rows).astype(np.int64) if rows else np.zeros(0, np.int64)
        return col_ptr, col_adj, row_ptr, row_adj

    def syndrome(self, bits):
        bits = np.asarray(bits, dtype=np.int64)
        s = np.zeros(self.num_rows, dtype=np.int64)
        for c in np.flatnonzero(bits):
            s[self.col_rows[c]] ^= 1
        return s

    def to_dense(self):
        H = np.zeros(self.shape, dtype=np.uint8)
        for c, rs in enumerate(self.col_rows):
            H[rs, c] = 1
        return H


def expand(E, P):
    """Lift an exponent matrix to its ``(J P) x (L P)`` parity-check matrix."""
    if isinstance(P, bool) or not isinstance(P, (int, np.integer)) or P < 2:
        raise InvalidCirculantSize(f"circulant size must be an integer >= 2, got {P!r}")
    P = int(P)
    if not isinstance(E, ExponentMatrix):
        E = ExponentMatrix(np.asarray(E, dtype=np.int64))
    shifts = E.values % P
    J, L = shifts.shape
    local = np.arange(P, dtype=np.int64)
    cols = []
    for l in range(L):
        # rows hit by local column c of block l: j * P + (c - s) mod P
        block = (local[:, None] - shifts[None, :, l]) % P + np.arange(J) * P
        cols.extend(np.ascontiguousarray(block[c]) for c in range(P))
    return ParityCheckMatrix(J * P, tuple(cols), E, P)


def graph_girth_bfs(H, cap=10):
    """Tanner-graph girth by breadth-first search, truncated at ``cap``."""
    if cap not in BFS_CAPS:
        raise QCG8Error(f"cap must be one of {BFS_CAPS}, got {cap!r}")
    col_ptr, col_adj, row_ptr, row_adj = H.csr()
    return int(_kernels.bfs_girth(col_ptr, col_adj, row_ptr, row_adj, H.num_cols, cap))


def export_alist(H):
    col_w = H.column_weights()
    rows = H.row_cols()
    row_w = np.array([len(r) for r in rows], dtype=np.int64)
    max_c = int(col_w.max()) if len(col_w) else 0
    max_r = int(row_w.max()) if len(row_w) else 0

    def padded(idx, width):
        vals = [str(int(i) + 1) for i in idx] + ["0"] * (width - len(idx))
        return " ".join(vals)

    lines = [f"{H.num_cols} {H.num_rows}", f"{max_c} {max_r}",
             " ".join(map(str, col_w)), " ".join(map(str, row_w))]
    lines += [padded(rs, max_c) for rs in H.col_rows]
    lines += [padded(cs, max_r) for cs in rows]
    return "\n".join(lines) + "\n"


def _ints(line, lineno, count=None, what="values"):
    out = []
    for col, tok in enumerate(line.split(), start=1):
        try:
            out.append(int(tok))
        except ValueError:
            raise AlistParseError(f"expected integer in {what}, got {tok!r}", lineno, col) from None
    if count is not None and len(out) != count:
        raise AlistParseError(f"expected {count} {what}, got {len(out)}", lineno)
    return out


def import_alist(text):
    """Parse alist text; neighbour lists must agree with the stated weights."""
    lines = [ln for ln in text.splitlines()]
    # keep original numbering while skipping blank lines
    numbered = [(i + 1, ln) for i, ln in enumerate(lines) if ln.strip()]
    sections = ["header", "max weights", "column weights", "row weights"]
    if len(numbered) < 4:
        missing = sections[len(numbered)]
        raise AlistParseError(f"truncated file: missing {missing} section")
    (l0, h0), (l1, h1), (l2, h2), (l3, h3) = numbered[:4]
    n, m = _ints(h0, l0, 2, "header fields (n m)")
    max_c, max_r = _ints(h1, l1, 2, "max weights")
    col_w = _ints(h2, l2, n, "column weights")
    row_w = _ints(h3, l3, m, "row weights")
    if max(col_w, default=0) != max_c or max(row_w, default=0) != max_r:
        raise WeightInconsistency("max weights do not match the per-node weights")
    body = numbered[4:]
    if len(body) < n:
        raise AlistParseError(
            f"truncated file: column neighbour section has {len(body)} of {n} lines")
    if len(body) < n + m:
        raise AlistParseError(
            f"truncated file: row neighbour section has {len(body) - n} of {m} lines")
    col_rows = []
    for c, (lineno, ln) in enumerate(body[:n]):
        vals = _ints(ln, lineno, what="column neighbours")
        nz = [v for v in vals if v != 0]
        if len(nz) != col_w[c] or any(v < 1 or v > m for v in nz):
            raise WeightInconsistency(f"line {lineno}: column {c + 1} neighbours {nz} "
                                      f"disagree with weight {col_w[c]} or range 1..{m}")
        col_rows.append(np.array(sorted(v - 1 for v in nz), dtype=np.int64))
    H = ParityCheckMatrix(m, tuple(col_rows))
    rows = H.row_cols()
    for r, (lineno, ln) in enumerate(body[n:n + m]):
        nz = sorted(v - 1 for v in _ints(ln, lineno, what="row neighbours") if v != 0)
        if len(nz) != row_w[r] or nz != rows[r].tolist():
            raise WeightInconsistency(f"line {lineno}: row {r + 1} neighbours disagree "
                                      f"with the column section")
    return H


def recover_exponents(H, P, family=None):
    """Inverse of :func:`expand` for a matrix that is a single-weight circulant lifting."""
    m, n = H.shape
    if m % P or n % P:
        raise QCG8Error(f"matrix {m}x{n} is not tiled by {P}x{P} circulants")
    J, L = m // P, n // P
    E = np.zeros((J, L), dtype=np.int64)
    for l in range(L):
        first = H.col_rows[l * P]
        if len(first) != J or not np.array_equal(first // P, np.arange(J)):
            raise QCG8Error(f"column block {l} is not one circulant per row block")
        E[:, l] = (-(first % P)) % P
    rebuilt = expand(ExponentMatrix(E, family, L), P)
    if rebuilt != H:
        raise QCG8Error("matrix is not a circulant lifting")
    return rebuilt
