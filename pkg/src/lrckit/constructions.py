"""Parity-check constructions for locally repairable codes.

A design is a block parity-check matrix

    H = [ U_1          ]
        [      ...     ]
        [          U_m ]
        [ V_1  ...  V_m ]

with m disjoint column blocks of width r + delta - 1 (the repair groups),
delta - 1 local parity rows per block, and d - delta global parity rows.
Whenever every U_i and every stacked [U_i; V_i] has the MDS property, the
resulting code is an optimal (r, delta)-LRC with parameters
[n = m(r + delta - 1), k = rm - (d - delta), d].

Besides the fully general builder this module provides small MDS generator
families over one field (g1..g4, block length q+1 or q+2) and three explicit
design families built from them:

    H1: delta = 3, d = 3, parameters [(r+2)m, rm,   3], any prime power q >= r+1
    H2: delta = 4, d = 4, parameters [(r+3)m, rm,   4], q a power of 2
    H3: delta = 3, d = 4, parameters [(r+2)m, rm-1, 4], q a power of 2

For each family the block length may reach q+1 (H1, H3) or q+2 (H2) at
r = q - 1, one column more than a plain Vandermonde block allows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MdsPropertyError
from .fqmatrix import FqMatrix, vstack
from .gf import FieldSpec

KINDS = ("general", "H1", "H2", "H3")


# ---------------------------------------------------------------------------
# column-weight polynomials for the g1 family


def check_f_conditions(field: FieldSpec, coeffs):
    """Check the two admissibility conditions for a weight polynomial f:

    1) f(x) != 0 for every nonzero x, and
    2) y*f(x) - x*f(y) != 0 for every pair of distinct nonzero x, y.

    Returns (True, None) or (False, witness) with the first violating x or
    (x, y) in canonical code order.
    """
    coeffs = tuple(field.check_code(int(c)) for c in coeffs)
    if not coeffs:
        raise ValueError("empty coefficient list")
    if field.q < 3:
        raise ValueError("conditions need q >= 3")
    ev = {x: _horner(field, coeffs, x) for x in range(1, field.q)}
    for x in range(1, field.q):
        if ev[x] == 0:
            return False, x
    for x in range(1, field.q):
        for y in range(x + 1, field.q):
            lhs = field.sub(field.mul(y, ev[x]), field.mul(x, ev[y]))
            if lhs == 0:
                return False, (x, y)
    return True, None


def _horner(field, coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


@dataclass(frozen=True)
class FPolynomial:
    """A polynomial over GF(q), coefficients constant term first, that
    satisfies both admissibility conditions (checked on construction)."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        ok, witness = check_f_conditions(self.field, self.coeffs)
        if not ok:
            raise ValueError(
                f"polynomial {list(self.coeffs)} violates the admissibility "
                f"conditions over {self.field!r}, witness {witness}"
            )

    def __call__(self, x: int) -> int:
        return _horner(self.field, self.coeffs, self.field.check_code(x))

    @property
    def degree(self) -> int:
        deg = 0
        for i, c in enumerate(self.coeffs):
            if c:
                deg = i
        return deg


def _as_fpoly(field, f) -> FPolynomial:
    if isinstance(f, FPolynomial):
        if f.field != field:
            raise ValueError("polynomial lives in a different field")
        return f
    return FPolynomial(field, tuple(f))


# ---------------------------------------------------------------------------
# MDS generator families with block length beyond q


def _require_mds(mat: FqMatrix, block=None, which="matrix"):
    ok, witness = mat.has_mds_property()
    if not ok:
        raise MdsPropertyError(witness, block=block, which=which)


def build_g1(field: FieldSpec, f=(1,), *, verify=True) -> FqMatrix:
    """2 x (q+1) MDS-property matrix: row one carries f at the powers of a
    primitive element, row two the powers themselves, plus an appended 2x2
    identity.  Parity check of a [q+1, q-1, 3] MDS code."""
    if field.q <= 2:
        raise ValueError("g1 needs q > 2")
    fpoly = _as_fpoly(field, f)
    alpha = field.primitive_element().code
    powers = _alpha_powers(field, alpha, field.q - 1)
    rows = [
        [fpoly(a) for a in powers] + [1, 0],
        list(powers) + [0, 1],
    ]
    g1 = FqMatrix(field, rows)
    if verify:
        _require_mds(g1, which="g1")
    return g1


def build_g2(field: FieldSpec, *, verify=True) -> FqMatrix:
    """3 x (q+2) MDS-property matrix over GF(2^t), q > 3: columns
    (1, x, x^2) at the powers of a primitive element plus a 3x3 identity.
    Parity check of a [q+2, q-1, 4] MDS code."""
    _require_even_char(field, "g2")
    alpha = field.primitive_element().code
    powers = _alpha_powers(field, alpha, field.q - 1)
    rows = [
        [1] * (field.q - 1) + [1, 0, 0],
        list(powers) + [0, 1, 0],
        [field.mul(a, a) for a in powers] + [0, 0, 1],
    ]
    g2 = FqMatrix(field, rows)
    if verify:
        _require_mds(g2, which="g2")
    return g2


def build_g3_g4(field: FieldSpec, *, verify=True):
    """g3 = g2 without its last column (3 x (q+1)); g4 = the first two rows
    of g3 (2 x (q+1)).  Both keep the MDS property."""
    g2 = build_g2(field, verify=False)
    g3 = g2.submatrix(col_idx=range(g2.ncols - 1))
    g4 = g3.submatrix(row_idx=(0, 1))
    if verify:
        _require_mds(g3, which="g3")
        _require_mds(g4, which="g4")
    return g3, g4


def _alpha_powers(field, alpha, count):
    """alpha^1 .. alpha^count, in that order."""
    out = []
    acc = 1
    for _ in range(count):
        acc = field.mul(acc, alpha)
        out.append(acc)
    return out


def _require_even_char(field, name):
    if field.p != 2 or field.q <= 3:
        raise ValueError(f"{name} needs q > 3 and q a power of 2, got {field!r}")


# ---------------------------------------------------------------------------
# designs


@dataclass(frozen=True)
class LrcDesign:
    """A parity-check matrix plus its repair-group structure.

    Structural invariants (shape, block partition, parameter ranges) are
    enforced here; the MDS preconditions are the builders' business.
    """

    h: FqMatrix
    m: int
    r: int
    delta: int
    d: int
    blocks: tuple[tuple[int, int], ...]
    kind: str

    def __post_init__(self):
        m, r, delta, d = self.m, self.r, self.delta, self.d
        if self.kind not in KINDS:
            raise ValueError(f"unknown design kind {self.kind!r}")
        if m < 1:
            raise ValueError("need at least one block")
        if delta < 2:
            raise ValueError(f"delta must be >= 2, got {delta}")
        if not delta <= d <= 2 * delta:
            raise ValueError(f"need delta <= d <= 2*delta, got delta={delta}, d={d}")
        if r <= d - delta:
            raise ValueError(f"need r > d - delta, got r={r}, d-delta={d - delta}")
        width = r + delta - 1
        if self.h.nrows != m * (delta - 1) + (d - delta):
            raise ValueError(
                f"H has {self.h.nrows} rows, structure demands {m * (delta - 1) + d - delta}"
            )
        if self.h.ncols != m * width:
            raise ValueError(f"H has {self.h.ncols} columns, structure demands {m * width}")
        expected = tuple((g * width, width) for g in range(m))
        if tuple(tuple(b) for b in self.blocks) != expected:
            raise ValueError(f"blocks {self.blocks} do not partition the columns into {expected}")
        object.__setattr__(self, "blocks", expected)

    # -- derived quantities ---------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.h.field

    @property
    def n(self) -> int:
        return self.h.ncols

    @property
    def claimed_k(self) -> int:
        return self.r * self.m - (self.d - self.delta)

    @property
    def width(self) -> int:
        return self.r + self.delta - 1

    def group_cols(self, g: int) -> range:
        start, width = self.blocks[g]
        return range(start, start + width)

    def group_rows(self, g: int) -> range:
        return range(g * (self.delta - 1), (g + 1) * (self.delta - 1))

    @property
    def global_rows(self) -> range:
        return range(self.m * (self.delta - 1), self.h.nrows)

    def group_of(self, coordinate: int) -> int:
        if not 0 <= coordinate < self.n:
            raise ValueError(f"coordinate {coordinate} out of range")
        return coordinate // self.width

    # -- serialization -----------------------------------------------------------

    def to_dict(self) -> dict:
        out = self.h.to_dict()
        out.update(
            {
                "m": self.m,
                "r": self.r,
                "delta": self.delta,
                "claimed_d": self.d,
                "blocks": [list(b) for b in self.blocks],
                "kind": self.kind,
            }
        )
        return out

    @classmethod
    def from_dict(cls, dct: dict) -> LrcDesign:
        for key in ("m", "r", "delta", "claimed_d", "blocks", "kind"):
            if not isinstance(dct, dict) or key not in dct:
                raise ValueError(f"malformed design object: missing {key!r}")
        h = FqMatrix.from_dict(dct)
        return cls(
            h=h,
            m=dct["m"],
            r=dct["r"],
            delta=dct["delta"],
            d=dct["claimed_d"],
            blocks=tuple(tuple(b) for b in dct["blocks"]),
            kind=dct["kind"],
        )


def _assemble(field, u_blocks, v_blocks) -> FqMatrix:
    """Lay U blocks on the diagonal and append the V rows underneath."""
    m = len(u_blocks)
    width = u_blocks[0].ncols
    u_rows_each = u_blocks[0].nrows
    n = m * width
    rows = []
    for g, u in enumerate(u_blocks):
        left = g * width
        for row in u.rows:
            rows.append([0] * left + list(row) + [0] * (n - left - width))
    for i in range(v_blocks[0].nrows):
        rows.append(sum((list(v.rows[i]) for v in v_blocks), []))
    return FqMatrix(field, rows, ncols=n)


def build_general(u_blocks, v_blocks, r: int, delta: int, d: int) -> LrcDesign:
    """Assemble a design from per-group local blocks U_i and global blocks V_i.

    Every U_i must be (delta-1) x (r+delta-1) and every V_i
    (d-delta) x (r+delta-1); v_blocks may be None when d = delta.  The MDS
    preconditions (each U_i, each stacked [U_i; V_i]) are always re-verified
    here, since the claimed parameters depend on them; failures carry the
    offending block and column subset.
    """
    u_blocks = list(u_blocks)
    if not u_blocks:
        raise ValueError("need at least one U block")
    m = len(u_blocks)
    field = u_blocks[0].field
    if not delta <= d <= 2 * delta:
        raise ValueError(f"need delta <= d <= 2*delta, got delta={delta}, d={d}")
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    if r <= d - delta:
        raise ValueError(f"need r > d - delta, got r={r}, d-delta={d - delta}")
    width = r + delta - 1
    if v_blocks is None:
        v_blocks = [FqMatrix(field, [], ncols=width) for _ in range(m)]
    else:
        v_blocks = list(v_blocks)
    if len(v_blocks) != m:
        raise ValueError(f"{m} U blocks but {len(v_blocks)} V blocks")
    for g, (u, v) in enumerate(zip(u_blocks, v_blocks)):
        if u.field != field or v.field != field:
            raise ValueError("all blocks must share one field")
        if u.nrows != delta - 1 or u.ncols != width:
            raise ValueError(
                f"U block {g} is {u.nrows}x{u.ncols}, expected {delta - 1}x{width}"
            )
        if v.nrows != d - delta or v.ncols != width:
            raise ValueError(
                f"V block {g} is {v.nrows}x{v.ncols}, expected {d - delta}x{width}"
            )
        _require_mds(u, block=g, which="U")
        if v.nrows:
            _require_mds(vstack([u, v]), block=g, which="stacked [U; V]")
    h = _assemble(field, u_blocks, v_blocks)
    return LrcDesign(
        h=h,
        m=m,
        r=r,
        delta=delta,
        d=d,
        blocks=tuple((g * width, width) for g in range(m)),
        kind="general",
    )


def _u1_block(field, r, fpoly) -> FqMatrix:
    alpha = field.primitive_element().code
    powers = _alpha_powers(field, alpha, r)
    return FqMatrix(
        field,
        [
            [fpoly(a) for a in powers] + [1, 0],
            list(powers) + [0, 1],
        ],
    )


def build_h1(field: FieldSpec, r: int, m: int, f=(1,), *, verify=True) -> LrcDesign:
    """m identical diagonal blocks of the g1 family truncated to r power
    columns; an optimal (r, delta=3)-LRC with parameters [(r+2)m, rm, 3].

    verify=False skips the MDS re-check of the block (it holds by
    construction whenever f is admissible)."""
    _check_rm(r, m)
    if field.q < r + 1:
        raise ValueError(f"h1 requires q >= r+1, got q={field.q}, r={r}")
    u1 = _u1_block(field, r, _as_fpoly(field, f))
    if verify:
        _require_mds(u1, block=0, which="U")
    h = _assemble(field, [u1] * m, [FqMatrix(field, [], ncols=r + 2)] * m)
    return LrcDesign(
        h=h,
        m=m,
        r=r,
        delta=3,
        d=3,
        blocks=tuple((g * (r + 2), r + 2) for g in range(m)),
        kind="H1",
    )


def _u2_block(field, r) -> FqMatrix:
    alpha = field.primitive_element().code
    powers = _alpha_powers(field, alpha, r)
    return FqMatrix(
        field,
        [
            [1] * r + [1, 0, 0],
            list(powers) + [0, 1, 0],
            [field.mul(a, a) for a in powers] + [0, 0, 1],
        ],
    )


def build_h2(field: FieldSpec, r: int, m: int, *, verify=True) -> LrcDesign:
    """m identical diagonal blocks of the g2 family truncated to r power
    columns; an optimal (r, delta=4)-LRC with parameters [(r+3)m, rm, 4]."""
    _check_rm(r, m)
    _require_even_char(field, "h2")
    if field.q < r + 1:
        raise ValueError(f"h2 requires q >= max(4, r+1), got q={field.q}, r={r}")
    u2 = _u2_block(field, r)
    if verify:
        _require_mds(u2, block=0, which="U")
    h = _assemble(field, [u2] * m, [FqMatrix(field, [], ncols=r + 3)] * m)
    return LrcDesign(
        h=h,
        m=m,
        r=r,
        delta=4,
        d=4,
        blocks=tuple((g * (r + 3), r + 3) for g in range(m)),
        kind="H2",
    )


def _u3_v3_blocks(field, r):
    alpha = field.primitive_element().code
    powers = _alpha_powers(field, alpha, r)
    u3 = FqMatrix(
        field,
        [
            [1] * r + [1, 0],
            list(powers) + [0, 1],
        ],
    )
    v3 = FqMatrix(field, [[field.mul(a, a) for a in powers] + [0, 0]])
    return u3, v3


def build_h3(field: FieldSpec, r: int, m: int, *, verify=True) -> LrcDesign:
    """m diagonal blocks from the first two g3 rows plus one global row from
    its third; an optimal (r, delta=3)-LRC with parameters [(r+2)m, rm-1, 4]."""
    _check_rm(r, m)
    _require_even_char(field, "h3")
    if field.q < r + 1:
        raise ValueError(f"h3 requires q >= max(4, r+1), got q={field.q}, r={r}")
    u3, v3 = _u3_v3_blocks(field, r)
    if verify:
        _require_mds(u3, block=0, which="U")
        _require_mds(vstack([u3, v3]), block=0, which="stacked [U; V]")
    h = _assemble(field, [u3] * m, [v3] * m)
    return LrcDesign(
        h=h,
        m=m,
        r=r,
        delta=3,
        d=4,
        blocks=tuple((g * (r + 2), r + 2) for g in range(m)),
        kind="H3",
    )


def _check_rm(r, m):
    if not isinstance(r, int) or r <= 1:
        raise ValueError(f"locality r must be an integer > 1, got {r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"block count m must be >= 1, got {m}")
