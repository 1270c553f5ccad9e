"""Conjugacy class labels for GL_n(q) in Macdonald coordinates.

A class of GL_n(q) is labelled by a tuple of polynomials
(u_1, ..., u_m), each with constant term 1, where deg u_i = n_i and
sum(i * n_i) = n.  The label is tied to the class through
det(1 - t g) = prod u_i(t)^i, so the roots of the u_i are the inverses
of the eigenvalues of g.  The degree sequence (n_1, ..., n_m) is the
*type* of the class, a partition of n written in exponent form.

Reality criteria on labels:

* the class is real iff every u_i is self-reciprocal;
* the class is conjugate to zeta^{-1} g^{-1} iff every u_i is
  zeta-self-reciprocal (note the inverse: u-space swaps zeta and its
  inverse because u-roots are inverse eigenvalues).

Scaling g by a unit eta translates the label coefficientwise
(u_i(t) -> u_i(eta t)); orbits of that action are the classes of
PGL_n(q).
"""

import itertools
import math
from functools import lru_cache

from . import polys
from .errors import BudgetExceeded
from .fields import two_adic


@lru_cache(maxsize=None)
def partitions_of(n, bound=12):
    """Partitions of n as exponent tuples (n_1, ..., n_m), trailing entry > 0.

    The exponent tuple (n_1, n_2, ...) encodes 1^{n_1} 2^{n_2} ...;
    the entry n_i counts how many parts equal i.
    """
    if n < 0 or n > bound:
        raise ValueError("partitions supported for 0 <= n <= %d" % bound)

    def gen(remaining, max_part):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest

    out = set()
    for parts in gen(n, n):
        m = max(parts) if parts else 0
        nu = [0] * m
        for p in parts:
            nu[p - 1] += 1
        out.add(tuple(nu))
    return sorted(out)


def nu_parts(nu):
    """The parts view of an exponent tuple: i repeated n_i times, ascending."""
    return [i for i, ni in enumerate(nu, 1) for _ in range(ni)]


def nu_size(nu):
    return sum(i * ni for i, ni in enumerate(nu, 1))


def h_nu(nu, q):
    """gcd of q-1 and the parts of nu: the GL->SL class splitting factor."""
    g = q - 1
    for i, ni in enumerate(nu, 1):
        if ni:
            g = math.gcd(g, i)
    return g


def exponent_two_adic(nu):
    """Two-adic part of gcd{n_i : n_i > 0}; 1 when some exponent is odd.

    This gcd runs over the exponents n_i, unlike h_nu which gcds the
    parts i against q-1.
    """
    g = 0
    for ni in nu:
        if ni:
            g = math.gcd(g, ni)
    if g == 0:
        raise ValueError("empty partition has no exponents")
    return two_adic(g)


def has_odd_part(nu):
    """Whether some odd i has n_i > 0."""
    return any(ni for i, ni in enumerate(nu, 1) if i % 2 == 1 and ni)


# ---------------------------------------------------------------------------
# labels

def make_label(field, polys_seq):
    """Validate and canonicalize a label: trim trailing degree-0 entries."""
    label = []
    for u in polys_seq:
        u = tuple(u)
        if not u or u[0] != 1 or u[-1] == 0:
            raise ValueError("label entries need constant term 1, got %r" % (u,))
        label.append(u)
    while label and label[-1] == polys.ONE:
        label.pop()
    return tuple(label)


def label_type(label):
    """The partition of n in exponent form: degrees of the u_i."""
    return tuple(polys.degree(u) for u in label)


def label_n(label):
    return sum(i * polys.degree(u) for i, u in enumerate(label, 1))


def label_det(field, label):
    """Determinant of any group element with this label: (-1)^n prod a_i^i."""
    n = label_n(label)
    acc = field.one
    for i, u in enumerate(label, 1):
        acc = field.mul(acc, field.pow(u[-1], i))
    if n % 2 == 1:
        acc = field.neg(acc)
    return acc


def is_real_label(field, label):
    return all(polys.is_self_reciprocal(field, u) for u in label)


def is_zeta_real_label(field, label, zeta):
    return all(polys.is_zeta_self_reciprocal(field, u, zeta) for u in label)


def eta_translate(field, label, eta):
    return tuple(polys.eta_act(field, u, eta) for u in label)


def label_to_json(label):
    return {"nu": [len(u) - 1 for u in label], "polys": [list(u) for u in label]}


def label_from_json(field, data):
    label = make_label(field, tuple(tuple(c) for c in data["polys"]))
    if list(label_type(label)) != list(data["nu"])[: len(label)]:
        raise ValueError("nu does not match polynomial degrees")
    return label


# ---------------------------------------------------------------------------
# enumeration

def const1_polys(field, d):
    """All degree-d polynomials with constant term 1 (leading term nonzero)."""
    if d == 0:
        yield polys.ONE
        return
    for mid in itertools.product(field.elements, repeat=d - 1):
        for lead in field.units:
            yield (1,) + mid + (lead,)


def count_all_labels(field, n):
    """Number of labels of weight n = number of conjugacy classes of GL_n(q)."""
    q = field.q
    total = 0
    for nu in partitions_of(n):
        prod = 1
        for ni in nu:
            if ni:
                prod *= (q - 1) * q ** (ni - 1)
        total += prod
    return total


def _poly_pools(field, nu, filt, zeta):
    pools = []
    for ni in nu:
        if ni == 0:
            pools.append([polys.ONE])
        elif filt is None:
            pools.append(list(const1_polys(field, ni)))
        elif filt == "real":
            pools.append(polys.enumerate_T(field, ni))
        elif filt == "zeta_real":
            pools.append(polys.enumerate_S(field, ni, zeta))
        else:
            raise ValueError("unknown filter %r" % (filt,))
    return pools


def enumerate_labels(field, n, filt=None, zeta=None, budget=10 ** 7):
    """Yield all labels of weight n, optionally only real / zeta_real ones.

    Deterministic order: partitions in partitions_of order, polynomials in
    sorted order within each slot.  Raises BudgetExceeded (before yielding
    anything) if the total count passes the budget.
    """
    from .fields import canonical_nonsquare

    if filt == "zeta_real" and zeta is None:
        zeta = canonical_nonsquare(field)
    q = field.q
    total = 0
    for nu in partitions_of(n):
        prod = 1
        for ni in nu:
            if not ni:
                continue
            if filt is None:
                prod *= (q - 1) * q ** (ni - 1)
            elif filt == "real":
                prod *= polys.count_nqd(q, ni)
            elif filt == "zeta_real":
                prod *= polys.count_nqd(q, ni) * polys.sigma(ni)
        total += prod
    if total > budget:
        raise BudgetExceeded("%d labels exceed the budget of %d" % (total, budget))

    def gen():
        for nu in partitions_of(n):
            pools = _poly_pools(field, nu, filt, zeta)
            for combo in itertools.product(*pools):
                yield make_label(field, combo)

    return gen()


def equivalence_classes(field, labels):
    """Orbits of the eta-translation action restricted to the given label set.

    Returns a list of orbits, each a sorted tuple of labels; the first entry
    of each orbit (lexicographically least) is its canonical representative.
    Orbits are listed in order of their representatives.
    """
    pool = set(labels)
    seen = set()
    orbits = []
    for lab in sorted(pool):
        if lab in seen:
            continue
        orbit = set()
        for eta in field.units:
            g = eta_translate(field, lab, eta)
            if g in pool:
                orbit.add(g)
        orbits.append(tuple(sorted(orbit)))
        seen |= orbit
    return orbits


# ---------------------------------------------------------------------------
# per-label reality criteria in the linear and projective special groups

def sl_real(label, n, q):
    """Whether a real det-1 label stays real after restriction to SL_n(q).

    Restriction only bites when n = 2 mod 4 and q = 3 mod 4: there the
    class of g is real in SL_n(q) iff some odd i has n_i > 0.
    """
    if n % 4 != 2 or q % 4 != 3:
        return True
    return has_odd_part(label_type(label))


def sl_strongly_real(field, label):
    """Whether a real-in-SL det-1 label is strongly real in SL_n(q).

    Away from n = 2 mod 4 with q odd, strong reality agrees with reality.
    In that regime the criterion is that some u_i with i odd has 1 or -1
    as a root.
    """
    n = label_n(label)
    q = field.q
    if q % 2 == 0 or n % 4 != 2:
        return sl_real(label, n, q)
    one, minus_one = field.one, field.minus_one
    for i, u in enumerate(label, 1):
        if i % 2 == 1 and polys.degree(u) > 0:
            if polys.poly_eval(field, u, one) == 0:
                return True
            if polys.poly_eval(field, u, minus_one) == 0:
                return True
    return False


def _factors_all_even_and_fixed_deg_div4(field, u, fixed_under):
    """Helper for the PSL criterion: every irreducible factor of u has even
    degree, and every factor fixed by the given involution has degree
    divisible by 4."""
    for p, _ in polys.factorize(field, u).factors:
        d = polys.degree(p)
        if d % 2 == 1:
            return False
        if fixed_under(p) and d % 4 != 0:
            return False
    return True


def psl_strongly_real(field, label, zeta):
    """Strong reality in PSL_n(q) for n = 2 mod 4, q = 3 mod 4.

    The label must be real or zeta-real (as a label; both readings are
    tried and either suffices).  A reading fails to produce a strongly
    real class exactly when every u_i with i odd and n_i > 0 has all
    factors of even degree with the self-paired factors of degree
    divisible by 4.
    """
    readings = []
    if is_real_label(field, label):
        readings.append(lambda p: p == polys.tilde(field, p))
    if field.q % 2 == 1 and is_zeta_real_label(field, label, zeta):
        readings.append(lambda p: p == polys.breve(field, p, zeta))
    if not readings:
        raise ValueError("label is neither real nor zeta-real")
    odd_slots = [u for i, u in enumerate(label, 1) if i % 2 == 1 and polys.degree(u) > 0]
    if not odd_slots:
        # no odd part: the class is not real in PSL at all in this regime
        return False
    for fixed in readings:
        if not all(_factors_all_even_and_fixed_deg_div4(field, u, fixed) for u in odd_slots):
            return True
    return False
