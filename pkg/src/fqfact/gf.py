"""Exact arithmetic in finite fields F_q = F_{p^k}.

A field is described by a FieldCtx holding the characteristic p, the
extension degree k and a monic irreducible modulus of degree k over F_p.
Elements are identified with their integer encoding: the element with
power-basis digits (c_0, ..., c_{k-1}) -- coefficients of 1, g, ...,
g^{k-1} for the modulus root g -- encodes as sum c_i * p**i.  Encodings
run over [0, q) and give the canonical enumeration order.

All arithmetic is defined on encodings; FqElem is a thin operator
wrapper.  Performance-sensitive callers fetch the closure pack from
``FieldCtx.ops`` once and stay in plain ints.
"""

from __future__ import annotations

import operator

MAX_FIELD_SIZE = 1 << 20  # fields beyond this are out of contract
_TABLE_LIMIT = 1 << 16    # discrete-log tables built for q up to this
_ADD_TABLE_LIMIT = 512    # full q*q addition table for small extensions


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ----------------------------------------------------------------------
# Minimal F_p[T] helpers used only for modulus selection/validation.
# Polynomials are lists of ints in [0, p), ascending degree, trimmed.

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    r = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
         for i in range(n)]
    return _fp_trim(r)


def _fp_rem(a, b, p):
    a = list(a)
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lb = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lb % p
        off = len(a) - 1 - db
        for i in range(db):
            a[off + i] = (a[off + i] - c * b[i]) % p
        a.pop()
        _fp_trim(a)
    return a


def _fp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _fp_rem(a, b, p)
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    r[i + j] = (r[i + j] + ai * bj) % p
    return _fp_rem(r, m, p) if len(r) >= len(m) else _fp_trim(r)


def _fp_powmod(base, e, m, p):
    r = [1]
    b = list(base)
    while e:
        if e & 1:
            r = _fp_mulmod(r, b, m, p)
        b = _fp_mulmod(b, b, m, p)
        e >>= 1
    return r


def _fp_is_irreducible(m, p) -> bool:
    """Rabin irreducibility test for monic m over F_p."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    powers = {}
    t = x
    for j in range(1, k + 1):
        t = _fp_powmod(t, p, m, p)
        powers[j] = t
    if _fp_sub(powers[k], x, p):
        return False
    for r in _prime_factors(k):
        if len(_fp_gcd(_fp_sub(powers[k // r], x, p), m, p)) != 1:
            return False
    return True


def _int_digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        n, d = divmod(n, p)
        out.append(d)
    return out


def _canonical_modulus(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k over F_p with the least encoding."""
    for n in range(p ** k):
        m = _int_digits(n, p, k) + [1]
        if _fp_is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class _Ops:
    """Closure pack for raw encoding arithmetic in one field."""

    __slots__ = ("p", "k", "q", "add", "sub", "neg", "mul", "inv", "pow", "frob")

    def __init__(self, p, k, q, add, sub, neg, mul, inv):
        self.p = p
        self.k = k
        self.q = q
        self.add = add
        self.sub = sub
        self.neg = neg
        self.mul = mul
        self.inv = inv

        def powf(a, e):
            if e < 0:
                a = inv(a)
                e = -e
            r = 1
            while e:
                if e & 1:
                    r = mul(r, a)
                a = mul(a, a)
                e >>= 1
            return r

        def frob(a, j=1):
            for _ in range(j):
                a = powf(a, p)
            return a

        self.pow = powf
        self.frob = frob


class FieldCtx:
    """Immutable description of F_{p^k} with a fixed defining modulus."""

    __slots__ = ("p", "k", "q", "modulus", "_ops", "_embed_cache",
                 "_section_cache", "_ext_cache")

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        q = p ** k
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {p}^{k} exceeds contract limit 2^20")
        if modulus is None:
            modulus = _canonical_modulus(p, k)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {k}")
            if any(not (0 <= c < p) for c in modulus):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if not _fp_is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = modulus
        self._ops = None
        self._embed_cache = {}
        self._section_cache = {}
        self._ext_cache = {}

    # -- identity ------------------------------------------------------

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def spec_string(self) -> str:
        return f"{self.p}^{self.k}" if self.k > 1 else str(self.p)

    # -- element construction ------------------------------------------

    def elem(self, x) -> "FqElem":
        if isinstance(x, FqElem):
            if x.ctx != self:
                raise ValueError(f"element of {x.ctx} used in {self}")
            return x
        n = int(x)
        if not (0 <= n < self.q):
            raise ValueError(f"encoding {n} out of range for {self}")
        return FqElem(self, n)

    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def gen(self) -> "FqElem":
        """The modulus root g (the element T mod modulus); only for k > 1."""
        if self.k == 1:
            raise ValueError("prime field has no extension generator")
        return FqElem(self, self.p)

    def elements(self):
        """All field elements in increasing encoding order."""
        for n in range(self.q):
            yield FqElem(self, n)

    def digits(self, n: int) -> tuple[int, ...]:
        return tuple(_int_digits(n, self.p, self.k))

    def encode(self, digits) -> int:
        n = 0
        for d in reversed(list(digits)):
            n = n * self.p + d
        return n

    # -- raw arithmetic --------------------------------------------------

    @property
    def ops(self) -> _Ops:
        if self._ops is None:
            self._ops = self._build_ops()
        return self._ops

    def _build_ops(self) -> _Ops:
        p, k, q = self.p, self.k, self.q
        fld = repr(self)

        if k == 1:
            def add(a, b):
                return (a + b) % p

            def sub(a, b):
                return (a - b) % p

            def neg(a):
                return (-a) % p

            def mul(a, b):
                return a * b % p

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError(f"inversion of zero in {fld}")
                return pow(a, p - 2, p)

            return _Ops(p, k, q, add, sub, neg, mul, inv)

        # extension field: raw digitwise multiply, used to bootstrap tables
        mod = self.modulus
        if p == 2:
            mmask = 0
            for i, c in enumerate(mod):
                if c:
                    mmask |= 1 << i

            def rawmul(a, b):
                r = 0
                while b:
                    if b & 1:
                        r ^= a
                    a <<= 1
                    b >>= 1
                i = r.bit_length() - 1
                while i >= k:
                    if (r >> i) & 1:
                        r ^= mmask << (i - k)
                    i -= 1
                return r

            add = operator.xor
            sub = operator.xor

            def neg(a):
                return a
        else:
            def rawmul(a, b):
                da = _int_digits(a, p, k)
                db = _int_digits(b, p, k)
                r = [0] * (2 * k - 1)
                for i, ai in enumerate(da):
                    if ai:
                        for j, bj in enumerate(db):
                            if bj:
                                r[i + j] = (r[i + j] + ai * bj) % p
                for i in range(2 * k - 2, k - 1, -1):
                    c = r[i]
                    if c:
                        r[i] = 0
                        off = i - k
                        for t in range(k):
                            if mod[t]:
                                r[off + t] = (r[off + t] - c * mod[t]) % p
                return self.encode(r[:k])

            def _digit_add(a, b):
                n, mult = 0, 1
                for _ in range(k):
                    n += ((a + b) % p) * mult
                    a //= p
                    b //= p
                    mult *= p
                return n

            def _digit_neg(a):
                n, mult = 0, 1
                for _ in range(k):
                    n += ((-a) % p) * mult
                    a //= p
                    mult *= p
                return n

            if q <= _ADD_TABLE_LIMIT:
                atab = [_digit_add(a, b) for a in range(q) for b in range(q)]
                ntab = [_digit_neg(a) for a in range(q)]

                def add(a, b):
                    return atab[a * q + b]

                def neg(a):
                    return ntab[a]

                def sub(a, b):
                    return atab[a * q + ntab[b]]
            else:
                add = _digit_add
                neg = _digit_neg

                def sub(a, b):
                    return _digit_add(a, _digit_neg(b))

        if q <= _TABLE_LIMIT:
            # discrete log tables against a multiplicative generator
            fac = _prime_factors(q - 1)

            def rawpow(a, e):
                r = 1
                while e:
                    if e & 1:
                        r = rawmul(r, a)
                    a = rawmul(a, a)
                    e >>= 1
                return r

            for gcand in range(2, q):
                if all(rawpow(gcand, (q - 1) // r) != 1 for r in fac):
                    break
            exp = [0] * (2 * (q - 1))
            log = [0] * q
            x = 1
            for i in range(q - 1):
                exp[i] = x
                exp[i + q - 1] = x
                log[x] = i
                x = rawmul(x, gcand)

            def mul(a, b):
                if a and b:
                    return exp[log[a] + log[b]]
                return 0

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError(f"inversion of zero in {fld}")
                return exp[q - 1 - log[a]]
        else:
            mul = rawmul

            def inv(a):
                if a == 0:
                    raise ZeroDivisionError(f"inversion of zero in {fld}")
                r, e = 1, q - 2
                while e:
                    if e & 1:
                        r = rawmul(r, a)
                    a = rawmul(a, a)
                    e >>= 1
                return r

        return _Ops(p, k, q, add, sub, neg, mul, inv)


class FqElem:
    """A field element, identified by its integer encoding."""

    __slots__ = ("ctx", "n")

    def __init__(self, ctx: FieldCtx, n: int):
        self.ctx = ctx
        self.n = n

    @property
    def digits(self) -> tuple[int, ...]:
        return self.ctx.digits(self.n)

    def is_zero(self) -> bool:
        return self.n == 0

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise ValueError(f"mixing elements of {self.ctx} and {other.ctx}")
            return other.n
        if isinstance(other, int):
            if not (0 <= other < self.ctx.q):
                raise ValueError(f"encoding {other} out of range for {self.ctx}")
            return other
        return None

    def __add__(self, other):
        m = self._coerce(other)
        if m is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.ops.add(self.n, m))

    __radd__ = __add__

    def __sub__(self, other):
        m = self._coerce(other)
        if m is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.ops.sub(self.n, m))

    def __rsub__(self, other):
        m = self._coerce(other)
        if m is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.ops.sub(m, self.n))

    def __mul__(self, other):
        m = self._coerce(other)
        if m is None:
            return NotImplemented
        return FqElem(self.ctx, self.ctx.ops.mul(self.n, m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        m = self._coerce(other)
        if m is None:
            return NotImplemented
        o = self.ctx.ops
        return FqElem(self.ctx, o.mul(self.n, o.inv(m)))

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.ops.neg(self.n))

    def __pow__(self, e: int):
        return FqElem(self.ctx, self.ctx.ops.pow(self.n, e))

    def inverse(self) -> "FqElem":
        return FqElem(self.ctx, self.ctx.ops.inv(self.n))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx == other.ctx and self.n == other.n
        if isinstance(other, int):
            return self.n == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.n))

    def __int__(self):
        return self.n

    def __str__(self):
        if self.ctx.k == 1:
            return str(self.n)
        terms = []
        for i, d in enumerate(self.digits):
            if d == 0:
                continue
            if i == 0:
                terms.append(str(d))
            elif i == 1:
                terms.append("g" if d == 1 else f"{d}*g")
            else:
                terms.append(f"g^{i}" if d == 1 else f"{d}*g^{i}")
        return "+".join(reversed(terms)) if terms else "0"

    def __repr__(self):
        return f"FqElem({self.n}, {self.ctx!r})"


# ----------------------------------------------------------------------
# Module-level operations

def mk_field(p: int, k: int = 1, modulus=None) -> FieldCtx:
    """Build F_{p^k}; with no modulus given, picks the canonical one."""
    return FieldCtx(p, k, modulus)


def enumerate_field(ctx: FieldCtx):
    """Yield all q elements in increasing encoding order."""
    return ctx.elements()


def frobenius(a: FqElem, base_power: int = 1) -> FqElem:
    """a^(p^j) for j = base_power."""
    if base_power < 0:
        raise ValueError("base_power must be >= 0")
    return FqElem(a.ctx, a.ctx.ops.frob(a.n, base_power))


def extension_field(ctx: FieldCtx, m: int) -> FieldCtx:
    """The canonical-modulus field F_{p^(k*m)}, cached per ctx."""
    if m < 1:
        raise ValueError("extension multiplier must be >= 1")
    if m == 1:
        return ctx
    got = ctx._ext_cache.get(m)
    if got is None:
        got = FieldCtx(ctx.p, ctx.k * m)
        ctx._ext_cache[m] = got
    return got


def _embedding_powers(src: FieldCtx, dst: FieldCtx) -> tuple[int, ...]:
    key = (dst.p, dst.k, dst.modulus)
    got = src._embed_cache.get(key)
    if got is not None:
        return got
    from . import unipoly  # deferred: unipoly imports gf

    mpoly = unipoly.UniPoly(dst, list(src.modulus))
    roots = sorted(r.n for r in unipoly.roots_in_field(mpoly))
    if len(roots) != src.k:
        raise AssertionError("source modulus does not split in target")
    rho = roots[0]
    o = dst.ops
    powers = [1]
    for _ in range(src.k - 1):
        powers.append(o.mul(powers[-1], rho))
    got = tuple(powers)
    src._embed_cache[key] = got
    return got


def embed(a: FqElem, target: FieldCtx) -> FqElem:
    """Embed a into an overfield, mapping g to the first root of the modulus."""
    src = a.ctx
    if src == target:
        return a
    if src.p != target.p or target.k % src.k != 0:
        raise ValueError(f"no embedding of {src} into {target}")
    if src.k == 1:
        return FqElem(target, a.n)  # prime subfield: scalars keep encodings
    powers = _embedding_powers(src, target)
    o = target.ops
    acc = 0
    for d, pw in zip(a.digits, powers):
        if d:
            acc = o.add(acc, pw if d == 1 else o.mul(d, pw))
    return FqElem(target, acc)


def embedding_section(src: FieldCtx, dst: FieldCtx) -> dict[int, int]:
    """Encoding map inverting embed(src -> dst), for coefficient descent."""
    key = (dst.p, dst.k, dst.modulus)
    got = src._section_cache.get(key)
    if got is None:
        got = {embed(FqElem(src, n), dst).n: n for n in range(src.q)}
        src._section_cache[key] = got
    return got
