"""Finite fields F_{p^n} with n = h*r, realised as a single extension of F_p.

Elements are stored by their canonical code: the little-endian coefficient
vector (c_0, ..., c_{n-1}) packed base p, ``code = sum c_i p^i``.  For a prime
field the code is just the residue.  Arithmetic on codes goes through
exp/log/Zech tables built once per field, and every scalar operation has a
numpy counterpart (``vadd``, ``vmul`` ...) used by the linear algebra.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .exceptions import FieldError

MAX_ORDER = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# -- polynomials over F_p as little-endian int lists (used for the modulus) --

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i] * inv_lead % p
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    return _trim(f[:dg] if len(f) > dg else f)


def _pmulmod(f: Sequence[int], g: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    prod = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                prod[i + j] = (prod[i + j] + a * b) % p
    return _pmod(prod, mod, p)


def _ppowmod(f: list[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(f, mod, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        base = _pmulmod(base, base, mod, p)
        e >>= 1
    return result


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` (little-endian) over F_p."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p**n, f, p) != _pmod(x, f, p):
        return False
    for ell in prime_factors(n):
        h = _ppowmod(x, p ** (n // ell), f, p)
        h = h + [0] * (2 - len(h)) if len(h) < 2 else h
        diff = _trim([(c - (1 if i == 1 else 0)) % p for i, c in enumerate(h)])
        if len(_pgcd(f, diff, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``n`` whose packed lower coefficients are least."""
    if n == 1:
        return (0, 1)
    for code in range(p**n):
        low = [(code // p**i) % p for i in range(n)]
        f = low + [1]
        if low[0] != 0 and is_irreducible_mod_p(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # unreachable


class GaloisField:
    """The field F_{p^(h*r)}; ``h`` fixes the base field F_q, q = p^h.

    Parameters
    ----------
    p : int
        Prime characteristic.
    h, r : int
        Base-field degree and extension degree; the field has ``p**(h*r)``
        elements and contains F_q, q = p**h, as a subfield.
    modulus : sequence of int, optional
        Monic irreducible polynomial (little-endian) of degree ``h*r``.  The
        lexicographically least one is used when omitted.
    """

    def __init__(self, p: int, h: int = 1, r: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic {p!r} is not prime")
        if h < 1 or r < 1:
            raise FieldError("h and r must be positive")
        n = h * r
        if p**n > MAX_ORDER:
            raise FieldError(f"field order {p}^{n} exceeds the supported bound 2^20")
        if modulus is None:
            modulus = smallest_irreducible(p, n)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            while len(modulus) > 1 and modulus[-1] == 0:
                modulus = modulus[:-1]
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {n}")
            if not is_irreducible_mod_p(modulus, p):
                raise FieldError("modulus is reducible over F_p")
        self.p = p
        self.h = h
        self.r = r
        self.degree = n
        self.modulus = tuple(modulus)
        self.order = p**n
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        return self.from_coeff_list(
            _pmulmod(self.coeffs(a), self.coeffs(b), self.modulus, self.p)
        )

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def _build_tables(self) -> None:
        Q, p = self.order, self.p
        if self.degree == 1:
            # any nonzero residue generating F_p^*
            g = next(
                a for a in range(1, p)
                if all(pow(a, (p - 1) // ell, p) != 1 for ell in prime_factors(p - 1))
            ) if p > 2 else 1
            step = lambda a: a * g % p  # noqa: E731
        else:
            g = next(
                cand for cand in range(2, Q)
                if all(self._pow_slow(cand, (Q - 1) // ell) != 1 for ell in prime_factors(Q - 1))
            )
            step = lambda a: self._mul_slow(a, g)  # noqa: E731
        exp = [0] * (2 * (Q - 1))
        log = [0] * Q
        a = 1
        for i in range(Q - 1):
            exp[i] = a
            log[a] = i
            a = step(a)
        exp[Q - 1:] = exp[: Q - 1]
        self.generator = g
        self._exp = exp
        self._log = log
        self._exp_np = np.array(exp, dtype=np.int64)
        self._log_np = np.array(log, dtype=np.int64)
        if self.degree > 1 and p != 2:
            zech = [-1] * (Q - 1)
            for i in range(Q - 1):
                c = exp[i]
                c0 = c % p
                one_plus = c - c0 + (c0 + 1) % p
                zech[i] = log[one_plus] if one_plus else -1
            self._zech = zech
            self._zech_np = np.array(zech, dtype=np.int64)
            self._half = (Q - 1) // 2

    # -- identity ----------------------------------------------------------

    @property
    def q(self) -> int:
        """Order of the base field F_q, q = p^h."""
        return self.p**self.h

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    def _key(self):
        return (self.p, self.degree, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GaloisField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}, modulus={list(self.modulus)})"

    def spec(self) -> dict:
        """Config record ``{p, h, r, modulus}`` this field can be rebuilt from."""
        return {"p": self.p, "h": self.h, "r": self.r, "modulus": list(self.modulus)}

    # -- encoding ----------------------------------------------------------

    def coeffs(self, code: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.degree):
            out.append(code % p)
            code //= p
        return out

    def from_coeff_list(self, coeffs: Sequence[int]) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = _pmod(coeffs, self.modulus, self.p)
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def __call__(self, value) -> "FieldElement":
        """Coerce ``value`` to an element.

        Non-negative ints are canonical codes, negative ints are integer
        multiples of 1, sequences are coefficient vectors.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if v < 0:
                return FieldElement(self, v % self.p)
            if v >= self.order:
                raise FieldError(f"code {v} out of range for a field of order {self.order}")
            return FieldElement(self, v)
        if isinstance(value, (list, tuple, np.ndarray)):
            return FieldElement(self, self.from_coeff_list(list(value)))
        raise FieldError(f"cannot coerce {value!r} into {self!r}")

    element = __call__

    def from_int(self, n: int) -> "FieldElement":
        """The element n * 1."""
        return FieldElement(self, n % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.order)]

    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, self.generator)

    # -- scalar arithmetic on codes ----------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.degree == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % (self.order - 1)]
        return 0 if z < 0 else self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.degree == 1:
            return (-a) % self.p
        if self.p == 2 or a == 0:
            return a
        return self._exp[self._log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.degree == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inverse of zero")
        if self.degree == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; ``e`` must be non-negative."""
        if e < 0:
            raise FieldError("negative exponent; use inv()")
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def log(self, a: int) -> int:
        if a == 0:
            raise FieldError("logarithm of zero")
        return self._log[a]

    # -- vectorised arithmetic on code arrays -------------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.degree == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        la = self._log_np[a]
        z = self._zech_np[(self._log_np[b] - la) % (self.order - 1)]
        out = np.where(z < 0, 0, self._exp_np[la + np.maximum(z, 0)])
        out = np.where(a == 0, b, out)
        return np.where(b == 0, a, out)

    def vneg(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.degree == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return np.where(a == 0, 0, self._exp_np[self._log_np[a] + self._half])

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.degree == 1:
            return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.p
        return self.vadd(a, self.vneg(b))

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.degree == 1:
            return a * b % self.p
        out = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("inverse of zero")
        return self._exp_np[(self.order - 1 - self._log_np[a]) % (self.order - 1)]

    def vpow(self, a: np.ndarray, e: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = self._exp_np[(self._log_np[a] * e) % (self.order - 1)]
        return np.where(a == 0, 0, out)

    # -- structure ---------------------------------------------------------

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        return self.pow(a, self.p**k)

    def in_subfield(self, a: int, k: int) -> bool:
        if k < 1 or self.degree % k:
            raise FieldError(f"{k} does not divide the extension degree {self.degree}")
        return self.frobenius(a, k) == a

    def trace(self, a: int, k: int) -> int:
        """Trace to the subfield of degree ``k``: sum of the conjugates a^(p^(k i))."""
        if k < 1 or self.degree % k:
            raise FieldError(f"{k} does not divide the extension degree {self.degree}")
        total, conj = 0, a
        for _ in range(self.degree // k):
            total = self.add(total, conj)
            conj = self.frobenius(conj, k)
        return total

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        for d in divisors(self.order - 1):
            if self.pow(a, d) == 1:
                return d
        raise AssertionError("Lagrange violated")  # pragma: no cover

    def roots_of_unity(self, n: int) -> list[int]:
        """Codes of all a with a^n = 1, ascending."""
        if n < 1:
            raise FieldError("n must be positive")
        codes = np.arange(1, self.order, dtype=np.int64)
        hits = codes[self.vpow(codes, n) == 1]
        return [int(c) for c in hits]

    def nth_roots(self, value: int, n: int) -> list[int]:
        """All x with x^n = value, ascending."""
        return [c for c in range(self.order) if self.pow(c, n) == value]

    # -- univariate polynomials over this field (lists of codes) -------------

    def poly_eval(self, coeffs: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_trim(self, f: Iterable[int]) -> list[int]:
        f = list(f)
        while f and f[-1] == 0:
            f.pop()
        return f

    def poly_deriv(self, f: Sequence[int]) -> list[int]:
        return self.poly_trim(self.mul(c, i % self.p) for i, c in enumerate(f) if i > 0)

    def poly_divmod(self, f: Sequence[int], g: Sequence[int]) -> tuple[list[int], list[int]]:
        g = self.poly_trim(g)
        if not g:
            raise FieldError("polynomial division by zero")
        f = list(f)
        dg = len(g) - 1
        inv_lead = self.inv(g[-1])
        quot = [0] * max(len(f) - dg, 1)
        for i in range(len(f) - 1, dg - 1, -1):
            c = self.mul(f[i], inv_lead)
            if c:
                quot[i - dg] = c
                for j in range(dg + 1):
                    f[i - dg + j] = self.sub(f[i - dg + j], self.mul(c, g[j]))
        return self.poly_trim(quot), self.poly_trim(f[:dg])

    def poly_gcd(self, f: Sequence[int], g: Sequence[int]) -> list[int]:
        """Monic gcd."""
        f, g = self.poly_trim(f), self.poly_trim(g)
        while g:
            f, g = g, self.poly_divmod(f, g)[1]
        if not f:
            return []
        lead = self.inv(f[-1])
        return [self.mul(c, lead) for c in f]


def make_field(p: int, h: int = 1, r: int = 1, modulus: Sequence[int] | None = None) -> GaloisField:
    return GaloisField(p, h, r, modulus)


def field_from_spec(spec: dict) -> GaloisField:
    """Build a field from a config record ``{p, h, r, modulus?}``."""
    try:
        p = int(spec["p"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FieldError(f"bad field spec {spec!r}") from exc
    return GaloisField(p, int(spec.get("h", 1)), int(spec.get("r", 1)), spec.get("modulus"))


def field_of_order(Q: int) -> GaloisField:
    """The default field with ``Q`` elements (prime power)."""
    for p in prime_factors(Q)[:1]:
        n = round(math.log(Q, p))
        if p**n == Q:
            return GaloisField(p, n, 1)
    raise FieldError(f"{Q} is not a prime power")


class FieldElement:
    """An element of a :class:`GaloisField`, compared by canonical code."""

    __slots__ = ("field", "code")

    def __init__(self, field: GaloisField, code: int):
        self.field = field
        self.code = int(code)

    @property
    def coeffs(self) -> list[int]:
        return self.field.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.sub(b, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(self.code, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.div(b, self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def order(self) -> int:
        return self.field.element_order(self.code)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and self.field == other.field
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.code))

    def __lt__(self, other: "FieldElement"):
        return self.code < other.code

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return str(self.code) if self.field.is_prime_field else f"<{self.coeffs}>"


# spec-named helpers ---------------------------------------------------------

def element_order(a: FieldElement) -> int:
    return a.order()


def roots_of_unity(field: GaloisField, n: int) -> list[FieldElement]:
    return [FieldElement(field, c) for c in field.roots_of_unity(n)]


def subfield_membership(a: FieldElement, k: int) -> bool:
    return a.field.in_subfield(a.code, k)


def trace(a: FieldElement, k: int) -> FieldElement:
    return FieldElement(a.field, a.field.trace(a.code, k))
