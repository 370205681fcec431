"""Arithmetic in GF(q) and tower extensions GF(q^e).

Fields are built as explicit towers (an extension keeps its base field as
a live object) because the constructions downstream iterate over the base
field inside the extension. Elements are stored as raw values: a plain
int for a prime field, a tuple of base raw values for an extension. The
public :class:`FieldElement` wrapper adds operators on top.

Modulus polynomials are found by deterministic enumeration in counting
order (constant coefficient least significant), so a given (p, k, e)
always yields the same field.
"""

from __future__ import annotations

from typing import Iterator

from .errors import NotPrimitive, SearchExhausted
from .numtheory import Factorization, PrimePower, factorize

Raw = int | tuple  # int in a prime field, tuple of base raws in an extension


class FieldCtx:
    """Shared interface of PrimeField and ExtensionField.

    Attributes:
        base: underlying field, or None for a prime field.
        degree: extension degree over base (1 for a prime field).
        order: number of elements q^e.
        char: characteristic p.
        mult_order: order of the multiplicative group, order - 1.
        mult_order_factors: factorization of mult_order.
        modulus_poly: monic irreducible modulus as a tuple of base raws
            (little-endian, length degree + 1), or None for a prime field.
    """

    base: "FieldCtx | None"
    degree: int
    order: int
    char: int
    mult_order: int
    mult_order_factors: Factorization
    modulus_poly: tuple | None
    zero_raw: Raw
    one_raw: Raw

    # raw-value arithmetic -------------------------------------------------

    def radd(self, a: Raw, b: Raw) -> Raw:
        raise NotImplementedError

    def rsub(self, a: Raw, b: Raw) -> Raw:
        raise NotImplementedError

    def rneg(self, a: Raw) -> Raw:
        raise NotImplementedError

    def rmul(self, a: Raw, b: Raw) -> Raw:
        raise NotImplementedError

    def rinv(self, a: Raw) -> Raw:
        raise NotImplementedError

    def rpow(self, a: Raw, e: int) -> Raw:
        if e < 0:
            return self.rpow(self.rinv(a), -e)
        out = self.one_raw
        acc = a
        while e:
            if e & 1:
                out = self.rmul(out, acc)
            acc = self.rmul(acc, acc)
            e >>= 1
        return out

    # encoding and iteration ----------------------------------------------

    def enc(self, a: Raw) -> int:
        raise NotImplementedError

    def dec(self, i: int) -> Raw:
        raise NotImplementedError

    def iter_raws(self) -> Iterator[Raw]:
        for i in range(self.order):
            yield self.dec(i)

    # element wrapper -------------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Wrap an int index, a raw value, or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.dec(value % self.order))
        return FieldElement(self, self._coerce_raw(value))

    def _coerce_raw(self, value) -> Raw:
        raise NotImplementedError

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.zero_raw)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.one_raw)

    def elements(self) -> Iterator["FieldElement"]:
        for raw in self.iter_raws():
            yield FieldElement(self, raw)

    def element_order_raw(self, a: Raw) -> int:
        if a == self.zero_raw:
            raise ZeroDivisionError("zero element has no multiplicative order")
        order = self.mult_order
        for prime, mult in self.mult_order_factors.pairs:
            for _ in range(mult):
                if order % prime == 0 and self.rpow(a, order // prime) == self.one_raw:
                    order //= prime
                else:
                    break
        return order


class PrimeField(FieldCtx):
    def __init__(self, p: int):
        from .numtheory import is_prime

        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.base = None
        self.degree = 1
        self.order = p
        self.char = p
        self.mult_order = p - 1
        self.mult_order_factors = factorize(p - 1)
        self.modulus_poly = None
        self.zero_raw = 0
        self.one_raw = 1 % p

    def radd(self, a, b):
        return (a + b) % self.char

    def rsub(self, a, b):
        return (a - b) % self.char

    def rneg(self, a):
        return -a % self.char

    def rmul(self, a, b):
        return a * b % self.char

    def rinv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.char - 2, self.char)

    def enc(self, a):
        return a

    def dec(self, i):
        return i

    def _coerce_raw(self, value):
        if isinstance(value, (tuple, list)):
            if len(value) != 1:
                raise ValueError("prime field elements have a single coefficient")
            value = value[0]
        return int(value) % self.char

    def __repr__(self):
        return f"GF({self.char})"


class ExtensionField(FieldCtx):
    def __init__(self, base: FieldCtx, modulus: tuple, *, _validated: bool = False):
        degree = len(modulus) - 1
        if degree < 1 or modulus[-1] != base.one_raw:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _validated and not is_irreducible(base, modulus):
            raise ValueError("modulus polynomial is reducible")
        self.base = base
        self.degree = degree
        self.order = base.order**degree
        self.char = base.char
        self.mult_order = self.order - 1
        self.mult_order_factors = factorize(self.mult_order)
        self.modulus_poly = tuple(modulus)
        self.zero_raw = (base.zero_raw,) * degree
        one = [base.zero_raw] * degree
        one[0] = base.one_raw
        self.one_raw = tuple(one)
        # x^(degree + j) mod modulus for j = 0..degree-2, to fold products.
        self._xpow = self._reduction_rows()

    def _reduction_rows(self) -> list[tuple]:
        base, d = self.base, self.degree
        rows = []
        # x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
        row = tuple(base.rneg(c) for c in self.modulus_poly[:d])
        rows.append(row)
        for _ in range(d - 2):
            shifted = (base.zero_raw,) + row[: d - 1]
            top = row[d - 1]
            row = tuple(
                base.radd(s, base.rmul(top, r)) for s, r in zip(shifted, rows[0])
            )
            rows.append(row)
        return rows

    @property
    def generator_raw(self) -> Raw:
        coeffs = [self.base.zero_raw] * self.degree
        if self.degree == 1:
            return self.one_raw  # degenerate, unused in practice
        coeffs[1] = self.base.one_raw
        return tuple(coeffs)

    @property
    def generator(self) -> "FieldElement":
        """The residue class of the generator symbol x."""
        return FieldElement(self, self.generator_raw)

    def embed(self, base_raw) -> Raw:
        coeffs = [self.base.zero_raw] * self.degree
        coeffs[0] = base_raw
        return tuple(coeffs)

    def radd(self, a, b):
        rb = self.base.radd
        return tuple(rb(x, y) for x, y in zip(a, b))

    def rsub(self, a, b):
        rb = self.base.rsub
        return tuple(rb(x, y) for x, y in zip(a, b))

    def rneg(self, a):
        rn = self.base.rneg
        return tuple(rn(x) for x in a)

    def rmul(self, a, b):
        base, d = self.base, self.degree
        prod = [base.zero_raw] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == base.zero_raw:
                continue
            for j, bj in enumerate(b):
                prod[i + j] = base.radd(prod[i + j], base.rmul(ai, bj))
        for j in range(2 * d - 2, d - 1, -1):
            top = prod[j]
            if top == base.zero_raw:
                continue
            row = self._xpow[j - d]
            for i in range(d):
                prod[i] = base.radd(prod[i], base.rmul(top, row[i]))
        return tuple(prod[:d])

    def rinv(self, a):
        if a == self.zero_raw:
            raise ZeroDivisionError("inverse of zero")
        return self.rpow(a, self.mult_order - 1)

    def enc(self, a):
        out = 0
        for c in reversed(a):
            out = out * self.base.order + self.base.enc(c)
        return out

    def dec(self, i):
        coeffs = []
        for _ in range(self.degree):
            i, digit = divmod(i, self.base.order)
            coeffs.append(self.base.dec(digit))
        return tuple(coeffs)

    def _coerce_raw(self, value):
        seq = list(value)
        if len(seq) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients")
        out = []
        for c in seq:
            if isinstance(c, FieldElement):
                if c.ctx is not self.base:
                    raise ValueError("coefficient from a different field")
                out.append(c.raw)
            elif isinstance(c, tuple) and not isinstance(self.base, PrimeField):
                out.append(c)
            else:
                out.append(self.base._coerce_raw(c))
        return tuple(out)

    def __repr__(self):
        return f"GF({self.base.order}^{self.degree})"


class FieldElement:
    """Value-like wrapper: a raw value plus the field it lives in."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx: FieldCtx, raw: Raw):
        self.ctx = ctx
        self.raw = raw

    @property
    def coeffs(self) -> tuple:
        """Coefficient vector over the base field (length ctx.degree)."""
        if isinstance(self.ctx, PrimeField):
            return (self.raw,)
        return self.raw

    def _other_raw(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("operands from different fields")
            return other.raw
        if isinstance(other, int):
            # the canonical image n * 1 of an integer in the field
            return self.ctx.dec(other % self.ctx.char)
        raise TypeError(f"cannot combine FieldElement with {type(other)!r}")

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.radd(self.raw, self._other_raw(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.rsub(self.raw, self._other_raw(other)))

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.rsub(self._other_raw(other), self.raw))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.rneg(self.raw))

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.rmul(self.raw, self._other_raw(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(
            self.ctx, self.ctx.rmul(self.raw, self.ctx.rinv(self._other_raw(other)))
        )

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.rpow(self.raw, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.rinv(self.raw))

    def is_zero(self) -> bool:
        return self.raw == self.ctx.zero_raw

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx is other.ctx and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self._other_raw(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return f"{self.ctx!r}[{self.ctx.enc(self.raw)}]"


# ---------------------------------------------------------------------------
# polynomial helpers over an arbitrary FieldCtx (little-endian raw tuples)


def _ptrim(ctx: FieldCtx, f: tuple) -> tuple:
    n = len(f)
    while n > 0 and f[n - 1] == ctx.zero_raw:
        n -= 1
    return tuple(f[:n])


def _pmul(ctx: FieldCtx, f: tuple, g: tuple) -> tuple:
    if not f or not g:
        return ()
    out = [ctx.zero_raw] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == ctx.zero_raw:
            continue
        for j, b in enumerate(g):
            out[i + j] = ctx.radd(out[i + j], ctx.rmul(a, b))
    return _ptrim(ctx, tuple(out))


def _pmod(ctx: FieldCtx, f: tuple, g: tuple) -> tuple:
    g = _ptrim(ctx, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    lead_inv = ctx.rinv(g[-1])
    r = list(_ptrim(ctx, f))
    while len(r) - 1 >= dg and r:
        factor = ctx.rmul(r[-1], lead_inv)
        shift = len(r) - 1 - dg
        for i in range(dg + 1):
            r[shift + i] = ctx.rsub(r[shift + i], ctx.rmul(factor, g[i]))
        r.pop()
        while r and r[-1] == ctx.zero_raw:
            r.pop()
    return tuple(r)


def _pgcd(ctx: FieldCtx, f: tuple, g: tuple) -> tuple:
    a, b = _ptrim(ctx, f), _ptrim(ctx, g)
    while b:
        a, b = b, _pmod(ctx, a, b)
    if a:
        inv = ctx.rinv(a[-1])
        a = tuple(ctx.rmul(c, inv) for c in a)
    return a


def _ppowmod(ctx: FieldCtx, f: tuple, e: int, mod: tuple) -> tuple:
    result = (ctx.one_raw,)
    acc = _pmod(ctx, f, mod)
    while e:
        if e & 1:
            result = _pmod(ctx, _pmul(ctx, result, acc), mod)
        acc = _pmod(ctx, _pmul(ctx, acc, acc), mod)
        e >>= 1
    return result


def _peval(ctx: FieldCtx, f: tuple, at: Raw) -> Raw:
    acc = ctx.zero_raw
    for c in reversed(f):
        acc = ctx.radd(ctx.rmul(acc, at), c)
    return acc


def is_irreducible(base: FieldCtx, f: tuple) -> bool:
    """Irreducibility of a monic polynomial over the given field."""
    f = _ptrim(base, f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == base.zero_raw:
        return False
    if d <= 3:
        # A quadratic or cubic is reducible iff it has a root.
        return all(_peval(base, f, a) != base.zero_raw for a in base.iter_raws())
    x = (base.zero_raw, base.one_raw)
    q = base.order
    if _ppowmod(base, x, q**d, f) != _ptrim(base, x):
        return False
    for r in factorize(d).primes:
        power = _ppowmod(base, x, q ** (d // r), f)
        diff = _psub_poly(base, power, x)
        if len(_pgcd(base, diff, f)) > 1:
            return False
    return True


def _psub_poly(ctx: FieldCtx, f: tuple, g: tuple) -> tuple:
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else ctx.zero_raw
        b = g[i] if i < len(g) else ctx.zero_raw
        out.append(ctx.rsub(a, b))
    return _ptrim(ctx, tuple(out))


# ---------------------------------------------------------------------------
# field construction


def _find_modulus(base: FieldCtx, degree: int, primitive: bool) -> tuple:
    """First monic irreducible (optionally x-primitive) polynomial in counting order."""
    big_order = base.order**degree
    prime_parts = factorize(big_order - 1).primes if primitive else ()
    for idx in range(big_order):
        coeffs = []
        i = idx
        for _ in range(degree):
            i, digit = divmod(i, base.order)
            coeffs.append(base.dec(digit))
        f = (*coeffs, base.one_raw)
        if not is_irreducible(base, f):
            continue
        if not primitive:
            return f
        ext = ExtensionField(base, f, _validated=True)
        x = ext.generator_raw
        if all(ext.rpow(x, ext.mult_order // r) != ext.one_raw for r in prime_parts):
            return f
    raise SearchExhausted(
        f"no {'primitive' if primitive else 'irreducible'} polynomial of degree "
        f"{degree} over {base!r}"
    )


def build_field(pp: PrimePower, degree: int, *, primitive_generator: bool = True) -> FieldCtx:
    """Build GF(pp.q ** degree) as a tower over GF(pp.q).

    With primitive_generator (the default) the top-level modulus is chosen
    so the class of the generator symbol x has full multiplicative order.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if pp.k == 1:
        base: FieldCtx = PrimeField(pp.p)
    else:
        prime = PrimeField(pp.p)
        base = ExtensionField(
            prime,
            _find_modulus(prime, pp.k, primitive_generator),
            _validated=True,
        )
    if degree == 1:
        return base
    return ExtensionField(
        base, _find_modulus(base, degree, primitive_generator), _validated=True
    )


def element_order(a: FieldElement) -> int:
    """Exact multiplicative order of a nonzero element."""
    return a.ctx.element_order_raw(a.raw)


class DlogTable:
    """Total discrete-log map on the nonzero elements of a field.

    Indexable by FieldElement or by raw value; dlog(theta**i) == i for
    0 <= i < mult_order.
    """

    def __init__(self, ctx: FieldCtx, table: dict):
        self.ctx = ctx
        self._table = table

    def __getitem__(self, key) -> int:
        if isinstance(key, FieldElement):
            key = key.raw
        return self._table[key]

    def __contains__(self, key) -> bool:
        if isinstance(key, FieldElement):
            key = key.raw
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)


def dlog_table(ctx: FieldCtx, theta: FieldElement) -> DlogTable:
    """Build the full discrete-log table for a primitive theta."""
    if theta.ctx is not ctx:
        raise ValueError("theta belongs to a different field")
    table: dict = {}
    acc = ctx.one_raw
    for i in range(ctx.mult_order):
        if acc in table:
            raise NotPrimitive(f"element has order {i}, expected {ctx.mult_order}")
        table[acc] = i
        acc = ctx.rmul(acc, theta.raw)
    if acc != ctx.one_raw or len(table) != ctx.mult_order:
        raise NotPrimitive("element does not generate the multiplicative group")
    return DlogTable(ctx, table)
