"""Exact arithmetic in GF(q) for q prime or a prime power.

Elements are handled as canonical integer codes in [0, q).  For a prime field
the code is the residue itself.  For GF(p^e) with e > 1 the base-p digits of
the code are the coordinates of the element in the polynomial basis, with the
constant term as the least significant digit, so 2 always encodes the class
of x modulo the field's modulus polynomial.  Because the modulus travels with
the field description, codes are portable: serialized matrices can be read
back bit-exactly by any process.

Polynomials over GF(p) appear here as coefficient lists, constant term first.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

# Full q x q operation tables are cached below this order (pure speedup;
# results are computed from the same schoolbook arithmetic either way).
_TABLE_LIMIT = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return out


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, m, p):
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return a[:dm]


def _is_irreducible(m, p) -> bool:
    """Trial division of the monic polynomial m by every monic polynomial of
    degree 1 .. deg(m)//2."""
    e = len(m) - 1
    if e < 1 or m[-1] != 1:
        return False
    if e == 1:
        return True
    for deg in range(1, e // 2 + 1):
        for t in range(p**deg):
            div = _digits(t, p, deg) + [1]
            if not any(_poly_rem(m, div, p)):
                return False
    return True


def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e, ordering candidates by the
    base-p value of their non-leading coefficients."""
    for t in range(p**e):
        cand = _digits(t, p, e) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


class FieldSpec:
    """GF(p^e) together with arithmetic on canonical element codes.

    Immutable after construction; all operations are pure functions, so one
    instance may be shared freely across threads.
    """

    def __init__(self, p: int, e: int = 1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        self.p = p
        self.e = e
        self.q = p**e
        if e == 1:
            if modulus is not None:
                raise ValueError("prime field takes no modulus polynomial")
            self.modulus = None
        else:
            if modulus is None:
                self.modulus = _default_modulus(p, e)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != e + 1 or mod[-1] != 1:
                    raise ValueError(
                        f"modulus must be monic of degree {e} "
                        f"(constant term first), got {list(modulus)}"
                    )
                if not _is_irreducible(list(mod), p):
                    raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
                self.modulus = mod
        self._tables = None
        self._primitive_code = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"

    # -- code <-> polynomial coordinates ------------------------------------

    def check_code(self, a: int) -> int:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not a canonical element code of {self!r}")
        return a

    def _decode(self, a):
        return _digits(a, self.p, self.e)

    def _encode(self, digits):
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    # -- arithmetic on codes -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        p = self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x - y) % p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        prod = _poly_mul(self._decode(a), self._decode(b), self.p)
        return self._encode(_poly_rem(prod, list(self.modulus), self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self!r}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow_(self, a: int, n: int) -> int:
        """a**n on codes; negative n inverts first (a != 0), and 0**0 = 1."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    # -- element views --------------------------------------------------------

    def elem(self, code: int) -> FieldElement:
        return FieldElement(self, self.check_code(code))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self):
        """All field elements in canonical code order."""
        return [FieldElement(self, c) for c in range(self.q)]

    # -- multiplicative structure ---------------------------------------------

    def element_order(self, a: int) -> int:
        """Smallest t >= 1 with a**t = 1; divides q - 1."""
        self.check_code(a)
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        t, acc = 1, a
        while acc != 1:
            acc = self.mul(acc, a)
            t += 1
        return t

    def primitive_element(self) -> FieldElement:
        """Generator of the multiplicative group: the smallest code whose
        order is exactly q - 1."""
        if self._primitive_code is None:
            if self.q == 2:
                warnings.warn(
                    "GF(2) is degenerate: its multiplicative group is trivial,"
                    " returning 1",
                    stacklevel=2,
                )
                self._primitive_code = 1
            else:
                target = self.q - 1
                for code in range(1, self.q):
                    if self.element_order(code) == target:
                        self._primitive_code = code
                        break
        return FieldElement(self, self._primitive_code)

    # -- cached operation tables -------------------------------------------

    def tables(self):
        """(add, sub, mul) as q x q nested lists, or None for large fields.

        A pure optimization for inner loops; entries are produced by the same
        arithmetic as the public methods, so results are bit-identical.
        """
        if self.q > _TABLE_LIMIT:
            return None
        if self._tables is None:
            rng = range(self.q)
            add = [[self.add(a, b) for b in rng] for a in rng]
            sub = [[self.sub(a, b) for b in rng] for a in rng]
            mul = [[self.mul(a, b) for b in rng] for a in rng]
            self._tables = (add, sub, mul)
        return self._tables

    # -- serialization fragment ----------------------------------------------

    def to_fragment(self) -> dict:
        """JSON fragment embedded in matrix files; modulus constant term first,
        omitted for prime fields."""
        frag = {"p": self.p, "e": self.e}
        if self.e > 1:
            frag["modulus"] = list(self.modulus)
        return frag

    @classmethod
    def from_fragment(cls, frag: dict) -> FieldSpec:
        if not isinstance(frag, dict) or "p" not in frag or "e" not in frag:
            raise ValueError(f"malformed field fragment: {frag!r}")
        p, e = frag["p"], frag["e"]
        modulus = frag.get("modulus")
        if e == 1 and modulus is not None:
            raise ValueError("field fragment for a prime field must omit the modulus")
        if e > 1 and modulus is None:
            raise ValueError("field fragment for an extension field must carry the modulus")
        extra = set(frag) - {"p", "e", "modulus"}
        if extra:
            raise ValueError(f"unknown keys in field fragment: {sorted(extra)}")
        return cls(p, e, modulus)


@dataclass(frozen=True)
class FieldElement:
    """A single element: an owning field plus its canonical code.

    Arithmetic operators require both operands to live in the same field.
    """

    field: FieldSpec
    code: int

    def __post_init__(self):
        self.field.check_code(self.code)

    def _peer(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine {self!r} with {other!r}")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")
        return other.code

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._peer(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._peer(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._peer(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._peer(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow_(self.code, n))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.code))

    def order(self) -> int:
        return self.field.element_order(self.code)

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"{self.field!r}:{self.code}"


def field_make(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Build a field description; the default modulus for e > 1 is the
    smallest monic irreducible of degree e, chosen deterministically."""
    return FieldSpec(p, e, modulus)
