"""Arithmetic in small finite fields F_q with q = p^k <= 128.

Field elements are plain integers in [0, q): the base-p digits of the
integer are the coefficients (lowest degree first) of the residue
polynomial modulo a fixed monic irreducible.  This makes element order
canonical, which the rest of the package leans on (canonical non-squares,
deterministic label enumeration, reproducible CLI output).

The modulus is the lexicographically least monic irreducible of degree k
over F_p, comparing coefficient tuples lowest degree first.  It is found
by exhaustive search at construction time.  For example F_4 uses
t^2 + t + 1 and F_9 uses t^2 + 1.
"""

import numpy as np

MAX_Q = 128


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def two_adic(m):
    """Largest power of two dividing m (m >= 1)."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("two_adic needs a positive integer, got %r" % (m,))
    return m & -m


# ---------------------------------------------------------------------------
# prime-field polynomial helpers used only for the modulus search

def _fp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_rem(num, den, p):
    """Remainder of num / den over F_p; coefficient lists, lowest degree first."""
    num = list(num)
    dd = len(den) - 1
    inv = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dd and any(num):
        _fp_trim(num)
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        c = (num[-1] * inv) % p
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        _fp_trim(num)
    return num


def _fp_irreducible(f, p, cache):
    """f monic over F_p, degree >= 1; trial division by lower-degree irreducibles."""
    deg = len(f) - 1
    for e in range(1, deg // 2 + 1):
        for g in _fp_irreducibles(e, p, cache):
            r = _fp_rem(f, g, p)
            if not any(r):
                return False
    return True


def _fp_irreducibles(deg, p, cache):
    if deg not in cache:
        found = []
        for idx in range(p ** deg):
            lower, i = [], idx
            for _ in range(deg):
                i, r = divmod(i, p)
                lower.append(r)
            # idx counts with the low coefficient varying fastest; rebuild in
            # lex order (c0 most significant) below instead.
            found.append(tuple(lower) + (1,))
        found = [f for f in found if _fp_irreducible(f, p, cache)]
        cache[deg] = found
    return cache[deg]


def _find_modulus(p, k):
    """Lexicographically least monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)
    cache = {}
    best = None
    for f in _fp_irreducibles(k, p, cache):
        key = f[:-1]  # (c0, ..., c_{k-1}); compare c0 first
        if best is None or key < best[:-1]:
            best = f
    return best


# ---------------------------------------------------------------------------

class Field:
    """F_q, q = p^k, with table-backed arithmetic on integer indices."""

    def __init__(self, p, k=1):
        if not is_prime(p):
            raise ValueError("characteristic must be prime, got %r" % (p,))
        if not isinstance(k, int) or k < 1:
            raise ValueError("extension degree must be a positive integer")
        q = p ** k
        if q > MAX_Q:
            raise ValueError("q = %d exceeds the supported bound %d" % (q, MAX_Q))
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _find_modulus(p, k)

        add = np.zeros((q, q), dtype=np.int16)
        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                s = self._encode([(x + y) % p for x, y in zip(da, db)])
                add[a, b] = add[b, a] = s
                m = self._encode(self._mulmod(da, db))
                mul[a, b] = mul[b, a] = m
        self.add_table = add
        self.mul_table = mul

        neg = np.zeros(q, dtype=np.int16)
        for a in range(q):
            neg[a] = self._encode([(-x) % p for x in self._digits(a)])
        self.neg_table = neg

        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            # |F_q^*| = q - 1, so a^(q-2) is the inverse
            acc, base, e = 1, a, q - 2
            while e:
                if e & 1:
                    acc = int(mul[acc, base])
                base = int(mul[base, base])
                e >>= 1
            inv[a] = acc
        self.inv_table = inv

        self.zero = 0
        self.one = 1
        self.minus_one = int(neg[1])
        self.squares = frozenset(int(mul[a, a]) for a in range(q))

    # -- index <-> digit helpers ------------------------------------------
    def _digits(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _encode(self, digits):
        a = 0
        for d in reversed(digits[: self.k]):
            a = a * self.p + d
        return a

    def _mulmod(self, da, db):
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        mod = self.modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.k):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * mod[j]) % self.p
        return prod[: self.k]

    # -- arithmetic --------------------------------------------------------
    def add(self, a, b):
        return int(self.add_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in %r" % (self,))
        return int(self.inv_table[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        acc, base = 1, a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    # -- element sets ------------------------------------------------------
    @property
    def elements(self):
        return range(self.q)

    @property
    def units(self):
        return range(1, self.q)

    def is_square(self, x):
        return x in self.squares

    def __repr__(self):
        return "F_%d" % self.q


_FIELD_CACHE = {}


def make_field(p, k=1):
    """Construct (and cache) F_{p^k}; identical calls return the same object."""
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, k)
    return _FIELD_CACHE[key]


def prime_power(q):
    """Decompose q as (p, k) with p prime and q = p^k, or raise ValueError."""
    if not isinstance(q, int) or q < 2:
        raise ValueError("q must be an integer >= 2, got %r" % (q,))
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        return q, 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError("%d is not a prime power" % (q,))
    return p, k


def field_for_order(q):
    """The cached field with exactly q elements."""
    p, k = prime_power(q)
    return make_field(p, k)


def is_square(field, x):
    """Whether x is a square in the field; zero counts as a square."""
    return field.is_square(x)


def canonical_nonsquare(field):
    """Least non-square element; an error for q even (everything is a square)."""
    if field.q % 2 == 0:
        raise ValueError("every element of %r is a square" % (field,))
    for x in field.units:
        if not field.is_square(x):
            return x
    raise AssertionError("unreachable: odd field with no non-square")


def constrained_nonsquare(field, n):
    """Least non-square z with z^(n/2) = -1, for n even and q odd.

    Raises if no such z exists, which signals that the caller is outside
    the regime where the two-adic parts of n and q-1 agree.
    """
    if field.q % 2 == 0:
        raise ValueError("non-squares require odd q")
    if n % 2 != 0:
        raise ValueError("n must be even, got %r" % (n,))
    for x in field.units:
        if not field.is_square(x) and field.pow(x, n // 2) == field.minus_one:
            return x
    raise ValueError("no non-square z with z^%d = -1 in %r" % (n // 2, field))


def has_nth_root_of_minus_one(field, n):
    """Whether x^n = -1 is solvable in F_q (q odd)."""
    if field.q % 2 == 0:
        raise ValueError("-1 has no meaningful n-th root condition for even q")
    if not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    return two_adic(n) < two_adic(field.q - 1)
