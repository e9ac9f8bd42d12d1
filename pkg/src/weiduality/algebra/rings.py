"""Finite fields GF(p^e) and chain rings Z/p^s.

Field elements are integers in ``[0, q)``: the base-``p`` digits of the
integer are the coefficients of a polynomial in ``x`` (lowest digit first)
reduced modulo a fixed irreducible polynomial.  So in GF(4) with modulus
``x^2 + x + 1`` the element ``2`` is ``x`` (often written omega) and ``3``
is ``x + 1 = omega^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from ..errors import InputError

FIELD = "field"
CHAIN = "chain-ring"

# monic, lowest coefficient first
IRREDUCIBLE = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (5, 1): (0, 1),
    (7, 1): (0, 1),
    (11, 1): (0, 1),
    (13, 1): (0, 1),
}

MAX_FIELD_ORDER = 16
MAX_CHAIN_ORDER = 256


def is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    """Remainder of a by monic-or-not b over GF(p)."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        c = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _poly_trim(a)
    return a


def is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(_poly_trim(modulus)) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """A finite field ``GF(p^e)`` or the chain ring ``Z/p^s``."""

    kind: str
    p: int
    e: int = 1
    s: int = 1
    modulus: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in (FIELD, CHAIN):
            raise InputError(f"unknown ring kind {self.kind!r}")
        if not is_prime(self.p):
            raise InputError(f"p={self.p} is not prime")
        if self.kind == FIELD:
            if self.e < 1 or self.p**self.e > MAX_FIELD_ORDER:
                raise InputError(f"GF({self.p}^{self.e}) outside supported range q <= 16")
            if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
                raise InputError("modulus must be monic of degree e")
            if not is_irreducible(self.modulus, self.p):
                raise InputError(f"modulus {self.modulus} is reducible over GF({self.p})")
        else:
            if self.s < 1 or self.p**self.s > MAX_CHAIN_ORDER:
                raise InputError(f"Z/{self.p}^{self.s} outside supported range")

    # --- constructors -------------------------------------------------
    @classmethod
    def gf(cls, q):
        for (p, e), mod in IRREDUCIBLE.items():
            if p**e == q:
                return cls(FIELD, p, e=e, modulus=mod)
        raise InputError(f"no built-in field of order {q}")

    @classmethod
    def zmod(cls, p, s):
        return cls(CHAIN, p, s=s)

    # --- basic facts ---------------------------------------------------
    @property
    def is_field(self):
        return self.kind == FIELD

    @property
    def order(self):
        return self.p ** (self.e if self.is_field else self.s)

    @property
    def char_subfield(self):
        """Elements of the prime subfield (constant polynomials)."""
        return range(self.p)

    @cached_property
    def tables(self):
        return _tables(self)

    def add(self, a, b):
        return self.tables.add[a][b]

    def sub(self, a, b):
        t = self.tables
        return t.add[a][t.neg[b]]

    def mul(self, a, b):
        return self.tables.mul[a][b]

    def neg(self, a):
        return self.tables.neg[a]

    def inv(self, a):
        inv = self.tables.inv[a]
        if inv is None:
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return inv

    def is_unit(self, a):
        return self.tables.inv[a] is not None

    def frobenius(self, a):
        """``a -> a^p``; the identity on prime fields and chain rings."""
        return self.power(a, self.p)

    def power(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def trace(self, a):
        """Absolute trace GF(p^e) -> GF(p)."""
        if not self.is_field:
            raise InputError("trace is defined for fields only")
        t, x = 0, a
        for _ in range(self.e):
            t = self.add(t, x)
            x = self.frobenius(x)
        return t

    def valuation(self, a):
        """p-adic valuation in Z/p^s (``s`` for zero)."""
        if self.is_field:
            return 0 if a else 1
        a %= self.order
        if a == 0:
            return self.s
        v = 0
        while a % self.p == 0:
            a //= self.p
            v += 1
        return v

    def to_json(self):
        if self.is_field:
            return {"kind": FIELD, "p": self.p, "e": self.e}
        return {"kind": CHAIN, "p": self.p, "s": self.s}

    @classmethod
    def from_json(cls, obj):
        try:
            kind = obj["kind"]
            p = int(obj["p"])
            if kind == FIELD:
                e = int(obj.get("e", 1))
                mod = obj.get("modulus")
                if mod is None:
                    if (p, e) not in IRREDUCIBLE:
                        raise InputError(f"no built-in modulus for GF({p}^{e})")
                    mod = IRREDUCIBLE[(p, e)]
                return cls(FIELD, p, e=e, modulus=tuple(int(c) for c in mod))
            if kind == CHAIN:
                return cls(CHAIN, p, s=int(obj["s"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"bad ring description {obj!r}: {exc}") from exc
        raise InputError(f"unknown ring kind {obj.get('kind')!r}")

    def __str__(self):
        if self.is_field:
            return f"GF({self.order})"
        return f"Z/{self.order}"


@dataclass(frozen=True)
class _Tables:
    add: tuple
    mul: tuple
    neg: tuple
    inv: tuple


def _digits(a, p, n):
    out = []
    for _ in range(n):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds, p):
    a = 0
    for d in reversed(ds):
        a = a * p + d
    return a


@lru_cache(maxsize=None)
def _tables(ring: RingSpec) -> _Tables:
    q = ring.order
    p = ring.p
    if ring.is_field and ring.e > 1:
        e = ring.e
        add = tuple(
            tuple(_undigits([(x + y) % p for x, y in zip(_digits(a, p, e), _digits(b, p, e))], p) for b in range(q))
            for a in range(q)
        )

        def polymul(a, b):
            da, db = _digits(a, p, e), _digits(b, p, e)
            prod = [0] * (2 * e - 1)
            for i, x in enumerate(da):
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
            rem = _poly_mod(prod, ring.modulus, p)
            return _undigits(rem + [0] * (e - len(rem)), p)

        mul = tuple(tuple(polymul(a, b) for b in range(q)) for a in range(q))
    else:
        add = tuple(tuple((a + b) % q for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % q for b in range(q)) for a in range(q))
    neg = tuple(next(b for b in range(q) if add[a][b] == 0) for a in range(q))
    inv = tuple(next((b for b in range(q) if mul[a][b] == 1), None) for a in range(q))
    return _Tables(add, mul, neg, inv)


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den
