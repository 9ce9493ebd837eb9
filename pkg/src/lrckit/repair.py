"""Encoding and erasure repair for block LRC designs.

Erasures are missing symbols at known coordinates (None entries in a word).
A group holding at most delta - 1 erasures is repaired locally from its own
parity rows, reading only the group's surviving symbols; anything beyond
that goes through one global solve against the full parity-check matrix,
which succeeds for every pattern of at most d - 1 erasures and reports the
solution-space dimension (nullity) for patterns it cannot pin down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .constructions import LrcDesign
from .errors import LocalRepairError
from .fqmatrix import FqMatrix


@dataclass(frozen=True)
class ErasurePattern:
    """A set of erased coordinates, validated against the code length."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(self.indices))
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate erased coordinates in {self.indices}")
        for i in idx:
            if not 0 <= i < self.n:
                raise ValueError(f"erased coordinate {i} out of range [0, {self.n})")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_word(cls, word) -> ErasurePattern:
        return cls(len(word), tuple(i for i, x in enumerate(word) if x is None))

    def apply(self, word) -> list:
        out = list(word)
        for i in self.indices:
            out[i] = None
        return out


@dataclass(frozen=True)
class RepairResult:
    """Outcome of a repair: the full word on success, plus accounting."""

    ok: bool
    word: tuple | None
    modes: dict  # erased coordinate -> "local" | "global"
    groups_touched: tuple[int, ...]
    symbols_read: int
    nullity: int = 0


@lru_cache(maxsize=64)
def generator_matrix(design: LrcDesign) -> FqMatrix:
    """Systematic generator: the null-space basis of H row-reduced so an
    identity sits on the first maximal independent column set."""
    basis = design.h.null_space_basis()
    reduced, pivots = basis.rref()
    assert len(pivots) == basis.nrows, "null-space basis rows must be independent"
    return reduced


def information_set(design: LrcDesign) -> tuple[int, ...]:
    """Coordinates where encode() places the message symbols verbatim."""
    return generator_matrix(design).rref()[1]


def encode(design: LrcDesign, message) -> tuple:
    """Encode k message symbols into an n-symbol codeword (H c^T = 0)."""
    field = design.field
    msg = [field.check_code(x) for x in message]
    gen = generator_matrix(design)
    if len(msg) != gen.nrows:
        raise ValueError(f"message length {len(msg)} != dimension {gen.nrows}")
    return gen.vec_mul(msg)


def _validate_word(design: LrcDesign, word):
    word = list(word)
    if len(word) != design.n:
        raise ValueError(f"word length {len(word)} != n = {design.n}")
    for x in word:
        if x is not None:
            design.field.check_code(x)
    return word


def repair_local(design: LrcDesign, word, group: int) -> dict:
    """Recover the erased symbols inside one group from that group alone.

    Solves the group's local parity rows restricted to its columns; only the
    group's surviving symbols are read (erasures elsewhere are irrelevant).
    Returns {coordinate: symbol} for the recovered erasures.  Raises
    LocalRepairError when the group holds more than delta - 1 erasures.
    """
    word = _validate_word(design, word)
    if not 0 <= group < design.m:
        raise ValueError(f"group {group} out of range")
    field = design.field
    cols = list(design.group_cols(group))
    erased = [j for j in cols if word[j] is None]
    if not erased:
        return {}
    if len(erased) > design.delta - 1:
        raise LocalRepairError(
            f"group {group} has {len(erased)} erasures, local repair handles at "
            f"most delta-1 = {design.delta - 1}; escalate to global repair"
        )
    u = design.h.submatrix(row_idx=design.group_rows(group), col_idx=cols)
    local = {j: i for i, j in enumerate(cols)}
    rhs = [0] * u.nrows
    for j in cols:
        if word[j] is not None and word[j]:
            col = u.col(local[j])
            rhs = [field.add(a, field.mul(word[j], c)) for a, c in zip(rhs, col)]
    a = u.submatrix(col_idx=[local[j] for j in erased])
    sol = a.solve([field.neg(x) for x in rhs])
    if sol.status == "inconsistent":
        raise ValueError(f"group {group} survivors are not consistent with any codeword")
    if sol.status != "unique":
        raise LocalRepairError(
            f"group {group} local system is underdetermined (nullity {sol.nullity}); "
            "the block lacks the MDS property"
        )
    return dict(zip(erased, sol.solution))


def repair_global(design: LrcDesign, word) -> RepairResult:
    """Recover erasures with one solve against the full parity-check matrix.

    Any pattern of at most d - 1 erasures is recovered; larger patterns are
    attempted best effort and reported unrecoverable with their nullity when
    the solution is not unique.  A surviving-symbol assignment inconsistent
    with every codeword raises ValueError.
    """
    word = _validate_word(design, word)
    field = design.field
    h = design.h
    erased = [j for j, x in enumerate(word) if x is None]
    all_groups = tuple(range(design.m))
    if not erased:
        syndrome = h.mul_vec(word)
        if any(syndrome):
            raise ValueError("word has a nonzero syndrome; not a codeword")
        return RepairResult(True, tuple(word), {}, all_groups, design.n)
    rhs = [0] * h.nrows
    for j, x in enumerate(word):
        if x is not None and x:
            col = h.col(j)
            rhs = [field.add(a, field.mul(x, c)) for a, c in zip(rhs, col)]
    a = h.submatrix(col_idx=erased)
    sol = a.solve([field.neg(x) for x in rhs])
    read = design.n - len(erased)
    if sol.status == "inconsistent":
        raise ValueError("surviving symbols are not consistent with any codeword")
    modes = {j: "global" for j in erased}
    if sol.status == "underdetermined":
        return RepairResult(False, None, modes, all_groups, read, nullity=sol.nullity)
    out = list(word)
    for j, value in zip(erased, sol.solution):
        out[j] = value
    return RepairResult(True, tuple(out), modes, all_groups, read)


def repair_auto(design: LrcDesign, word) -> RepairResult:
    """Local-first dispatch: repair every group holding at most delta - 1
    erasures from its own symbols, then hand any remaining erasures to one
    global solve.  Symbol-read accounting follows the strategy actually
    taken."""
    word = _validate_word(design, word)
    modes: dict = {}
    touched: list[int] = []
    read = 0
    for g in range(design.m):
        cols = design.group_cols(g)
        erased = [j for j in cols if word[j] is None]
        if not erased or len(erased) > design.delta - 1:
            continue
        symbols = repair_local(design, word, g)
        for j, value in symbols.items():
            word[j] = value
            modes[j] = "local"
        touched.append(g)
        read += len(cols) - len(erased)
    remaining = [j for j, x in enumerate(word) if x is None]
    if remaining:
        result = repair_global(design, word)
        modes.update(result.modes)
        return RepairResult(
            result.ok,
            result.word,
            modes,
            tuple(range(design.m)),
            read + result.symbols_read,
            nullity=result.nullity,
        )
    return RepairResult(True, tuple(word), modes, tuple(touched), read)


@dataclass(frozen=True)
class SweepOutcome:
    """Tally of an exhaustive erasure sweep."""

    per_size: tuple[tuple[int, int, int], ...]  # (size, recovered, total)
    failures: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(t for _, _, t in self.per_size)

    @property
    def recovered(self) -> int:
        return sum(rec for _, rec, _ in self.per_size)


def sweep(design: LrcDesign, message, max_erasures: int) -> SweepOutcome:
    """Erase every coordinate subset of size 1..max_erasures from the encoded
    message and repair with repair_auto; counts exact recoveries per size."""
    if max_erasures < 1:
        raise ValueError("max_erasures must be >= 1")
    codeword = encode(design, message)
    per_size = []
    failures = []
    for size in range(1, max_erasures + 1):
        recovered = 0
        total = 0
        for pattern in combinations(range(design.n), size):
            total += 1
            erased = ErasurePattern(design.n, pattern).apply(codeword)
            result = repair_auto(design, erased)
            if result.ok and result.word == codeword:
                recovered += 1
            else:
                failures.append(pattern)
        per_size.append((size, recovered, total))
    return SweepOutcome(tuple(per_size), tuple(failures))
