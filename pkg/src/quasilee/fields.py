"""Exact arithmetic in small finite fields and their character sums.

The ground field F_q with q = p**k (p an odd prime) is materialized as a
pair of discrete-log tables, so every element is just an integer index in
[0, q): the element with coefficient vector (a_0, ..., a_{k-1}) over F_p,
written in the power basis of a fixed monic irreducible modulus, has index
sum(a_i * p**i).  Index 0 is zero and indices below p form the prime
subfield.  The modulus is the lexicographically smallest monic irreducible
of degree k (coefficient tuples compared constant-term first), so contexts
are reproducible across runs.

On top of the ground field sit:

* ``QuadExt`` -- the quadratic extension F_q[sqrt(delta)] for the
  canonical (smallest-index) nonsquare delta.  Elements are pairs
  (x, y) = x + sqrt(delta)*y packed into the single index x + q*y.
* quadratic Gauss sums, checked on the fly against their classical
  closed form, and Kloosterman sums with the Hasse-Weil bound;
* quadratic-residue predicates for -1, 3 and -3 modulo a prime,
  evaluated both by congruence rule and by direct character computation.

All arithmetic is exact.  Floating point enters only when a character sum
is folded through cos/sin, and each sum keeps its exact integer exponent
counts next to the float value, so the rounding error is bounded by the
number of distinct exponents rather than the number of terms.
"""

import functools
import math
from dataclasses import dataclass
from itertools import product

import numpy as np

# Ambient size cap q**2 <= 2**26; construction refuses anything larger.
DEFAULT_AMBIENT_CAP = 1 << 26

SUM_TOL = 1e-9


class SizeCapError(ValueError):
    """Requested field exceeds the configured desk-scale cap."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; ample for desk-scale parameters."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, constant term first)

def _poly_mul_mod(a, b, modulus, p):
    k = len(modulus) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for d in range(len(res) - 1, k - 1, -1):
        c = res[d]
        if c:
            res[d] = 0
            for i in range(k):
                res[d - k + i] = (res[d - k + i] - c * modulus[i]) % p
    res = res[:k]
    return res + [0] * (k - len(res))

def _poly_divides(d, f, p):
    f = list(f)
    deg_d = len(d) - 1
    while True:
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < deg_d or not f:
            break
        c = f[-1]
        shift = len(f) - 1 - deg_d
        for i, di in enumerate(d):
            f[shift + i] = (f[shift + i] - c * di) % p
    return not any(f)

def _poly_eval(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc

def _smallest_irreducible(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)  # placeholder x - 0; arithmetic is plain mod p
    for coeffs in product(range(p), repeat=k):
        if coeffs[0] == 0:
            continue  # divisible by x
        f = list(coeffs) + [1]
        if any(_poly_eval(f, x, p) == 0 for x in range(p)):
            continue
        reducible = False
        for d in range(2, k // 2 + 1):
            for dc in product(range(p), repeat=d):
                if _poly_divides(list(dc) + [1], f, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")  # impossible


def _prime_factors(n):
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


# ---------------------------------------------------------------------------

class FieldCtx:
    """Immutable context for F_{p**k} with index-encoded elements.

    Safe to share across workers: all tables are built once in the
    constructor and every operation is a pure function of its inputs.
    """

    def __init__(self, p: int, k: int = 1, cap: int = DEFAULT_AMBIENT_CAP):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if p == 2:
            raise ValueError("p must be an odd prime")
        if k < 1:
            raise ValueError(f"extension degree k = {k} must be >= 1")
        q = p ** k
        if q * q > cap:
            raise SizeCapError(f"q^2 = {q * q} exceeds cap {cap}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k)
        self._build_tables()

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            raw_mul = lambda a, b: (a * b) % p
        else:
            mod = list(self.modulus)
            def raw_mul(a, b):
                return self._from_coeffs_list(
                    _poly_mul_mod(self.coeffs(a), self.coeffs(b), mod, p))

        def raw_pow(a, e):
            r = 1
            while e:
                if e & 1:
                    r = raw_mul(r, a)
                a = raw_mul(a, a)
                e >>= 1
            return r

        factors = _prime_factors(q - 1)
        gen = next(g for g in range(2, q)
                   if all(raw_pow(g, (q - 1) // r) != 1 for r in factors))
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, e in enumerate(exp):
            log[e] = i
        self.generator = gen
        self._exp = np.array(exp, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)

        if k == 1:
            self.trace_table = np.arange(q, dtype=np.int64)
            self._digits = None
        else:
            self._digits = np.zeros((q, k), dtype=np.int64)
            rem = np.arange(q)
            for i in range(k):
                self._digits[:, i] = rem % p
                rem //= p
            tr = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                t = 0
                for i in range(k):
                    t = self.add(t, self.pow(a, p ** i))
                assert t < p, "trace escaped the prime subfield"
                tr[a] = t
            self.trace_table = tr

    # -- scalar operations --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self._from_coeffs_list(
            [(x + y) % self.p for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self._from_coeffs_list([-x % self.p for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self._exp[-self._log[a] % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def trace(self, a: int) -> int:
        """Absolute trace to F_p: sum of the k Frobenius conjugates."""
        return int(self.trace_table[a])

    def quad_character(self, a: int) -> int:
        """0 for zero, +1 for nonzero squares, -1 for nonsquares."""
        if a == 0:
            return 0
        return 1 if self._log[a] % 2 == 0 else -1

    def sqrt(self, a: int) -> int:
        """One square root of a square element (the other is its negative)."""
        if a == 0:
            return 0
        l = int(self._log[a])
        if l % 2:
            raise ValueError(f"element {a} is not a square")
        return int(self._exp[l // 2])

    @functools.cached_property
    def nonsquare(self) -> int:
        """The canonical nonsquare: smallest index with character -1."""
        return next(a for a in range(1, self.q) if self.quad_character(a) == -1)

    def embed(self, c: int) -> int:
        """Embed an integer into the prime subfield (index c mod p)."""
        return c % self.p

    def coeffs(self, a: int) -> list:
        """Coefficient vector (a_0, ..., a_{k-1}) of the element with index a."""
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return self._from_coeffs_list(coeffs)

    def _from_coeffs_list(self, coeffs) -> int:
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c
        return a

    def elements(self) -> range:
        return range(self.q)

    # -- vectorized counterparts (numpy index arrays) -----------------------

    def add_array(self, a, b):
        """Index addition, elementwise; a, b arrays or scalars (broadcast)."""
        if self.k == 1:
            return (a + b) % self.p
        dig = (self._digits[a] + self._digits[b]) % self.p
        return dig @ (self.p ** np.arange(self.k))

    def mul_array(self, arr, c: int):
        """Multiply an index array by the fixed element c."""
        arr = np.asarray(arr)
        if c == 0:
            return np.zeros_like(arr)
        out = np.zeros_like(arr)
        nz = arr != 0
        out[nz] = self._exp[(self._log[arr[nz]] + self._log[c]) % (self.q - 1)]
        return out

    # -----------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FieldCtx(p={self.p}, k={self.k})"


def make_field(p: int, k: int = 1, cap: int = DEFAULT_AMBIENT_CAP) -> FieldCtx:
    """Construct F_{p**k} with the canonical modulus; see FieldCtx."""
    return FieldCtx(p, k, cap)


_ARITH_OPS = ("add", "sub", "mul", "inv", "neg", "pow")

def field_arith(ctx: FieldCtx, op: str, a: int, b: int = None) -> int:
    """Dispatch one field operation by name on index-encoded elements."""
    if op not in _ARITH_OPS:
        raise ValueError(f"unknown op {op!r}")
    if op in ("inv", "neg"):
        return getattr(ctx, op)(a)
    if b is None:
        raise ValueError(f"op {op!r} needs a second operand")
    return getattr(ctx, op)(a, b)


# ---------------------------------------------------------------------------
# the additive group F_q x F_q, shared by both generator-set families

def pair_index(ctx: FieldCtx, x: int, y: int) -> int:
    return x + ctx.q * y

def pair_split(ctx: FieldCtx, z: int) -> tuple:
    return z % ctx.q, z // ctx.q

def pair_add(ctx: FieldCtx, z1: int, z2: int) -> int:
    x1, y1 = pair_split(ctx, z1)
    x2, y2 = pair_split(ctx, z2)
    return pair_index(ctx, ctx.add(x1, x2), ctx.add(y1, y2))

def pair_neg(ctx: FieldCtx, z: int) -> int:
    x, y = pair_split(ctx, z)
    return pair_index(ctx, ctx.neg(x), ctx.neg(y))

def pair_scale(ctx: FieldCtx, z: int, c: int) -> int:
    """Scale by a prime-subfield scalar c in [0, p)."""
    x, y = pair_split(ctx, z)
    e = ctx.embed(c)
    return pair_index(ctx, ctx.mul(x, e), ctx.mul(y, e))


class QuadExt:
    """F_{q^2} = F_q[sqrt(delta)] over a base context, delta the canonical
    nonsquare.  Element (x, y) means x + sqrt(delta)*y, index x + q*y."""

    def __init__(self, base: FieldCtx):
        self.base = base
        self.delta = base.nonsquare
        self.size = base.q ** 2

    @property
    def q(self) -> int:
        return self.base.q

    def encode(self, x: int, y: int) -> int:
        return x + self.base.q * y

    def decode(self, z: int) -> tuple:
        return z % self.base.q, z // self.base.q

    def add(self, z1: int, z2: int) -> int:
        return pair_add(self.base, z1, z2)

    def neg(self, z: int) -> int:
        return pair_neg(self.base, z)

    def sub(self, z1: int, z2: int) -> int:
        return self.add(z1, self.neg(z2))

    def mul(self, z1: int, z2: int) -> int:
        b = self.base
        x1, y1 = self.decode(z1)
        x2, y2 = self.decode(z2)
        x = b.add(b.mul(x1, x2), b.mul(self.delta, b.mul(y1, y2)))
        y = b.add(b.mul(x1, y2), b.mul(y1, x2))
        return self.encode(x, y)

    def conj(self, z: int) -> int:
        x, y = self.decode(z)
        return self.encode(x, self.base.neg(y))

    def norm(self, z: int) -> int:
        """x**2 - delta*y**2, the multiplicative norm down to F_q."""
        b = self.base
        x, y = self.decode(z)
        return b.sub(b.mul(x, x), b.mul(self.delta, b.mul(y, y)))

    def inv(self, z: int) -> int:
        if z == 0:
            raise ZeroDivisionError("inverse of zero")
        b = self.base
        n_inv = b.inv(self.norm(z))
        x, y = self.decode(z)
        return self.encode(b.mul(x, n_inv), b.mul(b.neg(y), n_inv))

    def rel_trace(self, z: int) -> int:
        """Trace down to F_q: z + conj(z) = 2x."""
        x, _ = self.decode(z)
        return self.base.add(x, x)

    def abs_trace(self, z: int) -> int:
        """Trace all the way to F_p (composition through F_q)."""
        return self.base.trace(self.rel_trace(z))

    def elements(self) -> range:
        return range(self.size)

    def to_json_dict(self) -> dict:
        d = self.base.to_json_dict()
        d["delta"] = self.delta
        return d

    def __repr__(self):
        return f"QuadExt(q={self.base.q}, delta={self.delta})"


# ---------------------------------------------------------------------------
# character sums

@functools.lru_cache(maxsize=None)
def unity_cos_sin(p: int):
    """cos/sin of the p-th roots of unity, index j -> exp(2*pi*i*j/p)."""
    ang = 2.0 * np.pi * np.arange(p) / p
    return np.cos(ang), np.sin(ang)


@dataclass(frozen=True)
class CharacterSumValue:
    """A root-of-unity sum kept with its exact exponent counts.

    counts[j] is the number of summation terms whose exponent is j mod p;
    re + i*im is sum(counts[j] * exp(2*pi*i*j/p)) up to float rounding.
    """
    p: int
    counts: tuple
    re: float
    im: float

    @classmethod
    def from_counts(cls, p: int, counts) -> "CharacterSumValue":
        counts = tuple(int(c) for c in counts)
        cos, sin = unity_cos_sin(p)
        vec = np.array(counts, dtype=np.float64)
        return cls(p, counts, float(vec @ cos), float(vec @ sin))

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def term_count(self) -> int:
        return sum(self.counts)


def kloosterman(ctx: FieldCtx, a: int, b: int) -> float:
    """K(a, b) = sum over x != 0 of zeta_p**trace(a*x + b/x); real-valued.

    Requires b nonzero.  The Hasse-Weil bound |K| <= 2*sqrt(q) is asserted
    on the computed value.
    """
    if b == 0:
        raise ValueError("kloosterman requires a nonzero second argument")
    counts = [0] * ctx.p
    for x in range(1, ctx.q):
        e = ctx.trace(ctx.add(ctx.mul(a, x), ctx.mul(b, ctx.inv(x))))
        counts[e] += 1
    v = CharacterSumValue.from_counts(ctx.p, counts)
    assert abs(v.im) <= SUM_TOL, f"Kloosterman sum not real: im={v.im}"
    assert abs(v.re) <= 2.0 * math.sqrt(ctx.q) + SUM_TOL, \
        f"Hasse-Weil bound violated: |{v.re}| > 2*sqrt({ctx.q})"
    return v.re


def gauss_quadratic_sum(ctx: FieldCtx, c: int, a: int) -> CharacterSumValue:
    """sum over x in F_q of zeta_p**trace(c*x**2 + a*x), c nonzero.

    The result is checked against the classical closed form
    (-1)**(k-1) * eta(c) * sqrt(p*)**k * zeta_p**trace(-a**2/(4c))
    with p* = (-1)**((p-1)/2) * p, to 1e-9 per component.
    """
    if c == 0:
        raise ValueError("quadratic coefficient must be nonzero")
    counts = [0] * ctx.p
    for x in range(ctx.q):
        e = ctx.trace(ctx.add(ctx.mul(c, ctx.mul(x, x)), ctx.mul(a, x)))
        counts[e] += 1
    v = CharacterSumValue.from_counts(ctx.p, counts)

    p, k = ctx.p, ctx.k
    sqrt_pstar = math.sqrt(p) * (1 if p % 4 == 1 else 1j)
    shift = ctx.trace(ctx.neg(ctx.mul(ctx.mul(a, a), ctx.inv(ctx.mul(ctx.embed(4), c)))))
    closed = ((-1) ** (k - 1) * ctx.quad_character(c) * sqrt_pstar ** k
              * complex(math.cos(2 * math.pi * shift / p),
                        math.sin(2 * math.pi * shift / p)))
    assert abs(v.re - closed.real) <= SUM_TOL and abs(v.im - closed.imag) <= SUM_TOL, \
        f"Gauss sum disagrees with closed form: {v.value} vs {closed}"
    return v


# ---------------------------------------------------------------------------
# quadratic reciprocity at small arguments

@dataclass(frozen=True)
class ResidueClassReport:
    p: int
    p_mod_12: int
    minus1_square: bool
    three_square: bool
    minus3_square: bool


def residue_class_mod12(p: int) -> ResidueClassReport:
    """Is -1 / 3 / -3 a square mod p?  Congruence rule cross-checked
    against direct character evaluation; p must be a prime > 3."""
    if not is_prime(p) or p <= 3:
        raise ValueError(f"p = {p} must be a prime greater than 3")
    euler = lambda a: pow(a % p, (p - 1) // 2, p) == 1
    by_rule = {
        "minus1": p % 4 == 1,
        "three": p % 12 in (1, 11),
        "minus3": p % 12 in (1, 7),
    }
    by_char = {
        "minus1": euler(-1),
        "three": euler(3),
        "minus3": euler(-3),
    }
    assert by_rule == by_char, f"reciprocity rule disagrees with characters at p={p}"
    return ResidueClassReport(p, p % 12, by_rule["minus1"], by_rule["three"],
                              by_rule["minus3"])


def minus3_character(ctx: FieldCtx) -> int:
    """Quadratic character of -3 in F_q (0 exactly when p == 3)."""
    return ctx.quad_character(ctx.neg(ctx.embed(3)))
