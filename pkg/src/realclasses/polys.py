"""Polynomials over a small finite field.

A polynomial is a tuple of field element indices, lowest degree first,
with no trailing zeros; () is the zero polynomial.  All operations take
the field as first argument.

The module knows about the two polynomial families driving the counting
work:

* T_d, the self-reciprocal polynomials of degree d with constant term 1
  (coefficient rule a_{d-j} = a_d * a_j, forcing a_d = +-1);
* S_d(z), the z-twisted analogue for a non-square z (coefficient rule
  a_{d-j} = s * a_j * z^{j - d/2} with overall scalar s = +-1 after
  normalising; empty for odd d).

Both are enumerated directly from their closed coefficient templates
rather than by filtering all polynomials.
"""

import itertools
from collections import namedtuple

from .fields import canonical_nonsquare  # noqa: F401  (re-export convenience)


def normalize(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f):
    return len(f) - 1


ONE = (1,)


def poly_eval(field, f, x):
    acc = 0
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_add(field, f, g):
    n = max(len(f), len(g))
    f = f + (0,) * (n - len(f))
    g = g + (0,) * (n - len(g))
    return normalize(field.add(a, b) for a, b in zip(f, g))


def poly_neg(field, f):
    return tuple(field.neg(c) for c in f)


def poly_sub(field, f, g):
    return poly_add(field, f, poly_neg(field, g))


def poly_scale(field, c, f):
    if c == 0:
        return ()
    return tuple(field.mul(c, a) for a in f)


def poly_mul(field, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return normalize(out)


def poly_pow(field, f, e):
    acc = ONE
    for _ in range(e):
        acc = poly_mul(field, acc, f)
    return acc


def poly_divmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f)
    dg = degree(g)
    inv_lead = field.inv(g[-1])
    quot = [0] * max(len(f) - dg, 1)
    while len(normalize(rem)) - 1 >= dg:
        rem = list(normalize(rem))
        shift = len(rem) - 1 - dg
        c = field.mul(rem[-1], inv_lead)
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(c, b))
    return normalize(quot), normalize(rem)


def is_monic(f):
    return bool(f) and f[-1] == 1


def monicize(field, f):
    if not f:
        raise ValueError("cannot monicize the zero polynomial")
    return poly_scale(field, field.inv(f[-1]), f)


def tilde(field, f):
    """Monic polynomial whose roots are the inverses of the roots of f.

    Requires f monic with nonzero constant term.
    """
    if not is_monic(f):
        raise ValueError("tilde requires a monic polynomial, got %r" % (f,))
    if f[0] == 0:
        raise ValueError("tilde requires a nonzero constant term")
    return monicize(field, f[::-1])


def breve(field, f, zeta):
    """Monic polynomial whose roots are zeta/alpha for each root alpha of f.

    Requires f monic with nonzero constant term; it is the scalar-twisted
    companion of tilde and agrees with it when zeta = 1.
    """
    if not is_monic(f):
        raise ValueError("breve requires a monic polynomial, got %r" % (f,))
    if f[0] == 0:
        raise ValueError("breve requires a nonzero constant term")
    d = degree(f)
    twisted = [field.mul(c, field.pow(zeta, i)) for i, c in enumerate(f)]
    return monicize(field, tuple(reversed(twisted)))


def is_self_reciprocal(field, f):
    """Whether f (constant term 1) is a scalar multiple of its own reversal."""
    if not f or f[0] != 1:
        raise ValueError("self-reciprocal test requires constant term 1")
    d = degree(f)
    lead = f[-1]
    return all(f[d - j] == field.mul(lead, f[j]) for j in range(d + 1))


def is_zeta_self_reciprocal(field, f, zeta):
    """Whether f (constant term 1, q odd) is a scalar multiple of t^d f(zeta/t)."""
    if field.q % 2 == 0:
        raise ValueError("zeta-self-reciprocal polynomials require odd q")
    if field.is_square(zeta):
        raise ValueError("zeta must be a non-square")
    if not f or f[0] != 1:
        raise ValueError("zeta-self-reciprocal test requires constant term 1")
    d = degree(f)
    if d % 2 == 1:
        return False
    # coefficients of t^d f(zeta/t), lowest degree first
    b = [field.mul(f[d - j], field.pow(zeta, d - j)) for j in range(d + 1)]
    s = b[0]
    return all(b[j] == field.mul(s, f[j]) for j in range(d + 1))


def count_nqd(q, d):
    """|T_d| over F_q: self-reciprocal degree-d polynomials with f(0) = 1."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    if d % 2 == 1:
        return 2 * q ** ((d - 1) // 2) if q % 2 else q ** ((d - 1) // 2)
    return (q + 1) * q ** (d // 2 - 1) if q % 2 else q ** (d // 2)


def sigma(d):
    """1 for even d, 0 for odd d: |S_d| = n_{q,d} * sigma(d)."""
    return 1 if d % 2 == 0 else 0


def enumerate_T(field, d):
    """All self-reciprocal degree-d polynomials with constant term 1, sorted."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return [ONE]
    out = set()
    half = d // 2
    for eps in (1, field.minus_one):
        for free in itertools.product(field.elements, repeat=half):
            c = [0] * (d + 1)
            c[0] = 1
            for j in range(1, half + 1):
                c[j] = free[j - 1]
            # middle coefficient must be eps-symmetric with itself
            if d % 2 == 0 and c[half] != field.mul(eps, c[half]):
                continue
            for j in range((d + 1) // 2):
                c[d - j] = field.mul(eps, c[j])
            f = tuple(c)
            if f[-1] != 0:
                out.add(f)
    return sorted(out)


def enumerate_S(field, d, zeta):
    """All zeta-self-reciprocal degree-d polynomials with constant term 1, sorted."""
    if field.q % 2 == 0:
        raise ValueError("zeta-self-reciprocal polynomials require odd q")
    if field.is_square(zeta):
        raise ValueError("zeta must be a non-square")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d % 2 == 1:
        return []
    if d == 0:
        return [ONE]
    out = set()
    half = d // 2
    for eps in (1, field.minus_one):
        s = field.mul(eps, field.pow(zeta, half))
        for free in itertools.product(field.elements, repeat=half):
            c = [0] * (d + 1)
            c[0] = 1
            for j in range(1, half + 1):
                c[j] = free[j - 1]
            ok = True
            for j in range(0, half + 1):
                v = field.mul(s, field.mul(c[j], field.pow(zeta, j - d)))
                if d - j <= half and c[d - j] != v:
                    ok = False
                    break
                c[d - j] = v
            if ok and c[-1] != 0:
                out.add(tuple(c))
    return sorted(out)


def eta_act(field, f, eta):
    """f(t) -> f(eta t):  multiplies the t^k coefficient by eta^k."""
    if eta == 0:
        raise ValueError("eta must be a unit")
    return tuple(field.mul(c, field.pow(eta, k)) for k, c in enumerate(f))


def orbit_T(field, f):
    """Self-reciprocal members of {f(eta t) : eta in F_q^*} (f itself in T_d)."""
    if not is_self_reciprocal(field, f):
        raise ValueError("orbit_T expects a self-reciprocal polynomial")
    out = set()
    for eta in field.units:
        g = eta_act(field, f, eta)
        if is_self_reciprocal(field, g):
            out.add(g)
    return out


def orbit_S(field, f, zeta):
    """zeta-self-reciprocal members of the eta-translate orbit of f."""
    if not is_zeta_self_reciprocal(field, f, zeta):
        raise ValueError("orbit_S expects a zeta-self-reciprocal polynomial")
    out = set()
    for eta in field.units:
        g = eta_act(field, f, eta)
        if is_zeta_self_reciprocal(field, g, zeta):
            out.add(g)
    return out


# ---------------------------------------------------------------------------
# irreducibility and factorization

_IRR_CACHE = {}


def irreducibles(field, d):
    """All monic irreducible polynomials of degree d, sorted."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    key = (field.p, field.k, d)
    if key not in _IRR_CACHE:
        if d == 1:
            found = [(c, 1) for c in field.elements]
        else:
            found = []
            lower = [irreducibles(field, e) for e in range(1, d // 2 + 1)]
            for tail in itertools.product(field.elements, repeat=d):
                f = tail + (1,)
                if all(poly_divmod(field, f, g)[1] for gs in lower for g in gs):
                    found.append(f)
        _IRR_CACHE[key] = sorted(found)
    return _IRR_CACHE[key]


def is_irreducible(field, f):
    if not f or degree(f) < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    f = monicize(field, f)
    d = degree(f)
    for e in range(1, d // 2 + 1):
        for g in irreducibles(field, e):
            if not poly_divmod(field, f, g)[1]:
                return False
    return True


Factorization = namedtuple("Factorization", ["unit", "factors"])


def factorize(field, f):
    """f = unit * prod(p^e) with monic irreducible p, sorted by (degree, coeffs)."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    unit = f[-1]
    work = monicize(field, f)
    factors = []
    e = 1
    while 2 * e <= degree(work):
        for g in irreducibles(field, e):
            mult = 0
            while True:
                quot, rem = poly_divmod(field, work, g)
                if rem:
                    break
                work, mult = quot, mult + 1
            if mult:
                factors.append((g, mult))
            if degree(work) < 2 * e:
                break
        e += 1
    if degree(work) >= 1:
        factors.append((work, 1))
    factors.sort(key=lambda pe: (degree(pe[0]), pe[0]))
    return Factorization(unit, tuple(factors))


def poly_str(field, f):
    """Human-readable form, high degree first, coefficients as indices."""
    if not f:
        return "0"
    parts = []
    for k in range(degree(f), -1, -1):
        c = f[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            tk = "t" if k == 1 else "t^%d" % k
            parts.append(tk if c == 1 else "%d%s" % (c, tk))
    return "+".join(parts) if parts else "0"
