"""Dense matrices over GF(q) with exact elimination.

Everything is deterministic: Gaussian elimination always takes the first
nonzero pivot, and subset enumeration is lexicographic, so ranks, null-space
bases, and MDS failure witnesses are reproducible bit for bit.  Matrices are
immutable; elimination works on private copies.

Zero-row matrices are legal (they act as identities under vertical stacking)
so that constructions with no global parity rows fit the same interfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf import FieldSpec


class FqMatrix:
    """Immutable dense matrix over one FieldSpec, entries as canonical codes."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        self.field = field
        data = tuple(tuple(field.check_code(x) for x in row) for row in rows)
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("rows have unequal lengths")
            inferred = widths.pop()
            if ncols is not None and ncols != inferred:
                raise ValueError(f"ncols={ncols} disagrees with row length {inferred}")
            ncols = inferred
        elif ncols is None:
            raise ValueError("a zero-row matrix needs an explicit ncols")
        if ncols < 1:
            raise ValueError("matrices must have at least one column")
        self.nrows = len(data)
        self.ncols = ncols
        self.rows = data

    # -- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)])

    # -- basic views ---------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> FqMatrix:
        return FqMatrix(
            self.field,
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def submatrix(self, row_idx=None, col_idx=None) -> FqMatrix:
        """Select rows/columns by index sequences, preserving the given order."""
        ri = range(self.nrows) if row_idx is None else list(row_idx)
        ci = range(self.ncols) if col_idx is None else list(col_idx)
        for i in ri:
            if not 0 <= i < self.nrows:
                raise ValueError(f"row index {i} out of range")
        for j in ci:
            if not 0 <= j < self.ncols:
                raise ValueError(f"column index {j} out of range")
        return FqMatrix(self.field, [[self.rows[i][j] for j in ci] for i in ri], ncols=len(ci))

    def __eq__(self, other):
        return (
            isinstance(other, FqMatrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        return f"FqMatrix({self.field!r}, {self.nrows}x{self.ncols})"

    def pretty(self) -> str:
        widths = [max((len(str(r[j])) for r in self.rows), default=1) for j in range(self.ncols)]
        return "\n".join(
            " ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in self.rows
        )

    # -- products -------------------------------------------------------------

    def _same_field(self, other_field):
        if other_field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other_field!r}")

    def __matmul__(self, other: FqMatrix) -> FqMatrix:
        self._same_field(other.field)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self!r} by {other!r}")
        f = self.field
        ot = other.transpose().rows
        out = [[_dot(f, row, col) for col in ot] for row in self.rows]
        return FqMatrix(f, out, ncols=other.ncols)

    def mul_vec(self, v) -> tuple:
        """M . v for a length-ncols vector of codes; returns length nrows."""
        v = [self.field.check_code(x) for x in v]
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        return tuple(_dot(self.field, row, v) for row in self.rows)

    def vec_mul(self, v) -> tuple:
        """v . M for a length-nrows vector of codes; returns length ncols."""
        v = [self.field.check_code(x) for x in v]
        if len(v) != self.nrows:
            raise ValueError(f"vector length {len(v)} != {self.nrows} rows")
        f = self.field
        acc = [0] * self.ncols
        for c, row in zip(v, self.rows):
            if c:
                acc = [f.add(a, f.mul(c, x)) for a, x in zip(acc, row)]
        return tuple(acc)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.rows)

    # -- elimination ----------------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple)."""
        f = self.field
        m = [list(r) for r in self.rows]
        pivots = []
        prow = 0
        for col in range(self.ncols):
            if prow == self.nrows:
                break
            pr = next((i for i in range(prow, self.nrows) if m[i][col]), None)
            if pr is None:
                continue
            m[prow], m[pr] = m[pr], m[prow]
            pinv = f.inv(m[prow][col])
            if pinv != 1:
                m[prow] = [f.mul(pinv, x) for x in m[prow]]
            for i in range(self.nrows):
                c = m[i][col]
                if i != prow and c:
                    prowv = m[prow]
                    m[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[i], prowv)]
            pivots.append(col)
            prow += 1
        return FqMatrix(f, m, ncols=self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def null_space_basis(self) -> FqMatrix:
        """Basis of {x : M x^T = 0} as rows; ncols - rank of them, each with a
        1 on its own free column (so the basis is systematic on the free set)."""
        f = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(red.rows[i][fc])
            basis.append(v)
        out = FqMatrix(f, basis, ncols=self.ncols)
        assert all(all(x == 0 for x in self.mul_vec(row)) for row in out.rows)
        return out

    def solve(self, b) -> LinearSolution:
        """Solve M x = b exactly.

        Distinguishes a unique solution, an inconsistent system, and an
        underdetermined one (for which a particular solution and the nullity
        are reported).
        """
        b = [self.field.check_code(x) for x in b]
        if len(b) != self.nrows:
            raise ValueError(f"rhs length {len(b)} != {self.nrows} rows")
        aug = FqMatrix(
            self.field,
            [list(row) + [bv] for row, bv in zip(self.rows, b)],
            ncols=self.ncols + 1,
        )
        red, pivots = aug.rref()
        if pivots and pivots[-1] == self.ncols:
            return LinearSolution("inconsistent", None, 0)
        x = [0] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = red.rows[i][self.ncols]
        nullity = self.ncols - len(pivots)
        status = "unique" if nullity == 0 else "underdetermined"
        return LinearSolution(status, tuple(x), nullity)

    # -- column independence and the MDS property -----------------------------

    def columns_independent(self, idx) -> bool:
        """True iff the selected columns have rank len(idx)."""
        idx = list(idx)
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate column indices in {idx}")
        for j in idx:
            if not 0 <= j < self.ncols:
                raise ValueError(f"column index {j} out of range")
        if not idx:
            return True
        return self.submatrix(col_idx=idx).rank() == len(idx)

    def has_mds_property(self):
        """Exhaustively test whether every nrows-sized column subset is
        independent.

        Returns (True, None) or (False, witness) where the witness is the
        lexicographically first failing subset.
        """
        if self.nrows > self.ncols:
            raise ValueError(f"MDS property needs nrows <= ncols, got {self!r}")
        for subset in combinations(range(self.ncols), self.nrows):
            if not self.columns_independent(subset):
                return False, subset
        return True, None

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_fragment(),
            "rows": self.nrows,
            "cols": self.ncols,
            "data": [list(r) for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> FqMatrix:
        for key in ("field", "rows", "cols", "data"):
            if not isinstance(d, dict) or key not in d:
                raise ValueError(f"malformed matrix object: missing {key!r}")
        field = FieldSpec.from_fragment(d["field"])
        nrows, ncols, data = d["rows"], d["cols"], d["data"]
        if not isinstance(data, list) or len(data) != nrows:
            raise ValueError(f"matrix data has {len(data)} rows, header says {nrows}")
        for row in data:
            if not isinstance(row, list) or len(row) != ncols:
                raise ValueError("matrix data row length disagrees with header")
        return cls(field, data, ncols=ncols)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact linear solve."""

    status: str  # "unique" | "inconsistent" | "underdetermined"
    solution: tuple | None
    nullity: int


def _dot(f: FieldSpec, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = f.add(acc, f.mul(x, y))
    return acc


def vstack(mats) -> FqMatrix:
    """Stack matrices vertically; zero-row matrices are identities here."""
    mats = list(mats)
    if not mats:
        raise ValueError("nothing to stack")
    field, ncols = mats[0].field, mats[0].ncols
    rows = []
    for m in mats:
        if m.field != field or m.ncols != ncols:
            raise ValueError("vstack needs one field and one width")
        rows.extend(m.rows)
    return FqMatrix(field, rows, ncols=ncols)


def hstack(mats) -> FqMatrix:
    mats = list(mats)
    if not mats:
        raise ValueError("nothing to stack")
    field, nrows = mats[0].field, mats[0].nrows
    if any(m.field != field or m.nrows != nrows for m in mats):
        raise ValueError("hstack needs one field and one height")
    rows = [sum((list(m.rows[i]) for m in mats), []) for i in range(nrows)]
    return FqMatrix(field, rows, ncols=sum(m.ncols for m in mats))


def vandermonde(field: FieldSpec, nrows: int, points) -> FqMatrix:
    """Rows are powers 0..nrows-1 of the given distinct evaluation points."""
    pts = [field.check_code(x) for x in points]
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    if nrows < 1:
        raise ValueError("need at least one row")
    rows = [[1] * len(pts)]
    for _ in range(1, nrows):
        rows.append([field.mul(a, x) for a, x in zip(rows[-1], pts)])
    return FqMatrix(field, rows, ncols=len(pts))
