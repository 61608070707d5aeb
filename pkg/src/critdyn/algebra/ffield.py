"""Prime fields F_p and small extension fields F_{p^k}.

An element of F_{p^k} is stored as an integer code whose base-p digits are the
coefficients (constant term first) of a polynomial of degree < k, reduced
modulo the field's monic irreducible modulus.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_from(start: int):
    n = max(start, 2)
    while True:
        if is_prime(n):
            yield n
        n += 1


# --- polynomial helpers over F_p on plain int lists (constant term first) ---

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pmod(a, m, p):
    a = [x % p for x in a]
    _trim(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        t = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for j, y in enumerate(m):
            a[shift + j] = (a[shift + j] - t * y) % p
        _trim(a)
    return a


def _pgcd(a, b, p):
    a, b = _trim([x % p for x in a]), _trim([x % p for x in b])
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        e >>= 1
        if e:
            base = _pmod(_pmul(base, base, p), m, p)
    return result


def is_irreducible_mod_p(f, p) -> bool:
    """Monic ``f`` (constant term first) of degree k is irreducible iff
    gcd(f, x^(p^i) - x) = 1 for 1 <= i < k."""
    k = len(f) - 1
    if k <= 1:
        return k == 1
    x = [0, 1]
    xp = x
    for _ in range(1, k):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, _trim(diff), p)
        if len(g) > 1:
            return False
    return True


class GF:
    """Finite field F_q with q = p^k, k >= 1."""

    _MUL_TABLE_LIMIT = 400

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = first_irreducible(p, k)
        modulus = tuple(int(x) % p for x in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not is_irreducible_mod_p(list(modulus), p):
            raise ValueError("modulus is reducible")
        self.modulus = modulus
        self._mul_table = None
        self._squares = None

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    # code <-> coefficient vectors -----------------------------------------
    def digits(self, code: int):
        p = self.p
        out = []
        for _ in range(self.k):
            code, r = divmod(code, p)
            out.append(r)
        return out

    def encode(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)[: self.k]):
            code = code * self.p + (c % self.p)
        return code

    # raw arithmetic on codes ----------------------------------------------
    def add_c(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.encode([(x + y) % self.p for x, y in zip(da, db)])

    def neg_c(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        return self.encode([(-x) % self.p for x in self.digits(a)])

    def sub_c(self, a: int, b: int) -> int:
        return self.add_c(a, self.neg_c(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        prod = _pmul(self.digits(a), self.digits(b), self.p)
        return self.encode(_pmod(prod, list(self.modulus), self.p) if prod else [])

    def mul_c(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self.q <= self._MUL_TABLE_LIMIT:
            if self._mul_table is None:
                q = self.q
                self._mul_table = [[self._mul_raw(x, y) for y in range(q)] for x in range(q)]
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def pow_c(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv_c(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul_c(result, a)
            e >>= 1
            if e:
                a = self.mul_c(a, a)
        return result

    def inv_c(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, -1, self.p)
        return self.pow_c(a, self.q - 2)

    def square_codes(self) -> frozenset:
        if self._squares is None:
            self._squares = frozenset(self.mul_c(x, x) for x in range(self.q))
        return self._squares

    # element-level API ----------------------------------------------------
    def __call__(self, x) -> "FFElem":
        if isinstance(x, FFElem):
            if x.field != self:
                raise ValueError("element of a different field")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            num = FFElem(self, self.encode([x.numerator % self.p]))
            return num * FFElem(self, self.inv_c(self.encode([x.denominator % self.p])))
        if isinstance(x, int):
            return FFElem(self, self.encode([x % self.p]))
        if isinstance(x, (list, tuple)):
            return FFElem(self, self.encode([int(c) for c in x]))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def elements(self):
        return [FFElem(self, c) for c in range(self.q)]

    def zero(self):
        return FFElem(self, 0)

    def one(self):
        return FFElem(self, 1)

    def gen(self):
        """The class of x (a primitive element only by accident)."""
        return FFElem(self, self.encode([0, 1]) if self.k > 1 else 1)


class FFElem:
    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        self.field = field
        self.code = code

    def _co(self, other):
        if isinstance(other, FFElem):
            return other.code
        return self.field(other).code

    def __add__(self, o):
        return FFElem(self.field, self.field.add_c(self.code, self._co(o)))

    __radd__ = __add__

    def __sub__(self, o):
        return FFElem(self.field, self.field.sub_c(self.code, self._co(o)))

    def __rsub__(self, o):
        return FFElem(self.field, self.field.sub_c(self._co(o), self.code))

    def __neg__(self):
        return FFElem(self.field, self.field.neg_c(self.code))

    def __mul__(self, o):
        return FFElem(self.field, self.field.mul_c(self.code, self._co(o)))

    __rmul__ = __mul__

    def __truediv__(self, o):
        return FFElem(self.field, self.field.mul_c(self.code, self.field.inv_c(self._co(o))))

    def __rtruediv__(self, o):
        return FFElem(self.field, self.field.mul_c(self._co(o), self.field.inv_c(self.code)))

    def __pow__(self, e: int):
        return FFElem(self.field, self.field.pow_c(self.code, e))

    def __eq__(self, o):
        if isinstance(o, FFElem):
            return self.field == o.field and self.code == o.code
        try:
            return self.code == self.field(o).code
        except (TypeError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __bool__(self):
        return self.code != 0

    def is_square(self) -> bool:
        return self.code in self.field.square_codes()

    def sqrt(self):
        for y in range(self.field.q):
            if self.field.mul_c(y, y) == self.code:
                return FFElem(self.field, y)
        return None

    def frobenius(self):
        return self ** self.field.p

    def coeffs(self):
        return self.field.digits(self.code)

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.code}"
        return "(" + "+".join(f"{c}*x^{i}" for i, c in enumerate(self.coeffs()) if c) + ")" if self.code else "0"

    __str__ = __repr__


@lru_cache(maxsize=None)
def first_irreducible(p: int, k: int):
    """Lexicographically first monic irreducible of degree k over F_p.

    Candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the tuple
    (c_{k-1}, ..., c_0).
    """
    for tail in product(range(p), repeat=k):
        f = list(reversed(tail)) + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise ArithmeticError(f"no irreducible polynomial of degree {k} over F_{p}")


@lru_cache(maxsize=None)
def build_extension_field(p: int, k: int) -> GF:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= 3:
        raise ValueError("extension degree must lie in 1..3")
    return GF(p, k)


def reduce_mod_p(x, field: GF):
    """Map an integer or rational into ``field``; raises ZeroDivisionError on p | denominator."""
    return field(Fraction(x) if not isinstance(x, int) else x)
