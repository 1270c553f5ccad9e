"""Brute-force oracle: enumerate a matrix group, classify its conjugacy
classes, and decide reality questions by direct search.

Everything here is independent of the counting formulas so the two sides
can be compared.  Groups are enumerated as coded matrices (base-q digit
strings, row-major), classified by breadth-first closure under conjugation
by a generating set, and every class is certified through the
orbit-stabilizer equation |class| * |centralizer| = |order|.

Quotients by a central subgroup Y reuse the base classification: the
classes of G/Y are the Y-orbits of classes of G, reality asks whether the
inverse class lands in the orbit, and strong reality searches the coset
square roots {h : h^2 in Y}.
"""

import itertools
import os
import random
from collections import deque

import numpy as np

from . import counts, labels, polys
from .errors import BudgetExceeded
from .fields import canonical_nonsquare, field_for_order

DEFAULT_CAP = 10 ** 6
_ADDRESS_LIMIT = 3 * 10 ** 8
_CHUNK = 1 << 20

_BASE_CACHE = {}


def resolve_cap(cap=None):
    """Explicit cap, else the REALCLASS_CAP environment override, else default."""
    if cap is not None:
        return int(cap)
    env = os.environ.get("REALCLASS_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


def group_order(family, n, q, y_order=None):
    """Order of the requested group (not of the enumerated base group)."""
    gl = 1
    for i in range(n):
        gl *= q ** n - q ** i
    if family == "GL":
        return gl
    if family == "PGL":
        return gl // (q - 1)
    sl = gl // (q - 1)
    if family == "SL":
        return sl
    if family == "PSL":
        import math
        return sl // math.gcd(n, q - 1)
    if family == "SLQ":
        return sl // y_order
    raise ValueError("unknown family %r" % (family,))


# ---------------------------------------------------------------------------
# small exact matrix algebra over a field (python-level, for representatives)

def identity_mat(field, n):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n))
                 for i in range(n))


def scalar_mat(field, z, n):
    return tuple(tuple(z if i == j else field.zero for j in range(n))
                 for i in range(n))


def mat_mul(field, a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = field.zero
            for k in range(n):
                acc = field.add(acc, field.mul(a[i][k], b[k][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(field, z, a):
    return tuple(tuple(field.mul(z, x) for x in row) for row in a)


def mat_inv(field, a):
    n = len(a)
    work = [list(row) + [field.one if i == j else field.zero
                         for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != field.zero),
                   None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        inv = field.inv(work[col][col])
        work[col] = [field.mul(inv, x) for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != field.zero:
                c = work[r][col]
                work[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def mat_rank(field, a):
    rows = [list(r) for r in a]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows))
                    if rows[r][col] != field.zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != field.zero:
                c = rows[r][col]
                rows[r] = [field.sub(x, field.mul(c, y))
                           for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def mat_det(field, a):
    n = len(a)
    acc = field.zero
    for perm in itertools.permutations(range(n)):
        parity = _perm_parity(perm)
        prod = field.one
        for i in range(n):
            prod = field.mul(prod, a[i][perm[i]])
        acc = field.add(acc, field.neg(prod) if parity else prod)
    return acc


def _perm_parity(perm):
    seen = [False] * len(perm)
    parity = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        parity ^= (ln - 1) & 1
    return parity


# ---------------------------------------------------------------------------
# vectorized algebra on batches of coded matrices

class _Ops:
    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.q = field.q
        self.prime = field.k == 1
        if not self.prime:
            q = field.q
            self.mul_table = np.array(
                [[field.mul(a, b) for b in range(q)] for a in range(q)],
                dtype=np.uint8)
            self.add_table = np.array(
                [[field.add(a, b) for b in range(q)] for a in range(q)],
                dtype=np.uint8)
            self.neg_table = np.array([field.neg(a) for a in range(q)],
                                      dtype=np.uint8)

    def matmul(self, a, b):
        """Batched matrix product of coded matrices; broadcasts like @."""
        if self.prime:
            out = (a.astype(np.int32) @ b.astype(np.int32)) % self.q
            return out.astype(np.uint8)
        acc = None
        for k in range(self.n):
            lhs = a[..., :, k]
            rhs = b[..., k, :]
            term = self.mul_table[lhs[..., :, None], rhs[..., None, :]]
            acc = term if acc is None else self.add_table[acc, term]
        return acc

    def det(self, a):
        if self.prime:
            d = np.rint(np.linalg.det(a.astype(np.float64))).astype(np.int64)
            return (d % self.q).astype(np.uint8)
        acc = np.zeros(a.shape[:-2], dtype=np.uint8)
        for perm in itertools.permutations(range(self.n)):
            prod = a[..., 0, perm[0]]
            for i in range(1, self.n):
                prod = self.mul_table[prod, a[..., i, perm[i]]]
            if _perm_parity(perm):
                prod = self.neg_table[prod]
            acc = self.add_table[acc, prod]
        return acc


def _decode(codes, n, q):
    cells = n * n
    out = np.empty((len(codes), cells), dtype=np.uint8)
    c = np.asarray(codes, dtype=np.int64).copy()
    for j in range(cells):
        out[:, j] = c % q
        c //= q
    return out.reshape(-1, n, n)


def _encode(mats, q):
    flat = mats.reshape(mats.shape[0], -1).astype(np.int64)
    code = np.zeros(mats.shape[0], dtype=np.int64)
    for j in range(flat.shape[1] - 1, -1, -1):
        code = code * q + flat[:, j]
    return code


def _mat_to_tuple(mat):
    return tuple(tuple(int(x) for x in row) for row in mat)


def _tuple_to_array(mat):
    return np.array(mat, dtype=np.uint8)


def _single_code(field, mat):
    return int(_encode(_tuple_to_array(mat)[None, :, :], field.q)[0])


# ---------------------------------------------------------------------------
# generators

def _primitive_element(field):
    target = field.q - 1
    for x in field.units:
        order = 1
        acc = x
        while acc != field.one:
            acc = field.mul(acc, x)
            order += 1
        if order == target:
            return x
    raise RuntimeError("no primitive element found")


def _generator_mats(field, n, base_family):
    one, zero = field.one, field.zero
    ident = identity_mat(field, n)
    gens = []
    basis = [one]
    for _ in range(field.k - 1):
        basis.append(field.mul(basis[-1], field.p))
    for a in basis:
        t12 = [list(row) for row in ident]
        t12[0][1] = a
        gens.append(tuple(tuple(r) for r in t12))
        t21 = [list(row) for row in ident]
        t21[1][0] = a
        gens.append(tuple(tuple(r) for r in t21))
    if n >= 3:
        cyc = [[zero] * n for _ in range(n)]
        for i in range(n - 1):
            cyc[i + 1][i] = one
        corner = one
        if base_family == "SL" and n % 2 == 0:
            corner = field.minus_one
        cyc[0][n - 1] = corner
        gens.append(tuple(tuple(r) for r in cyc))
    if base_family == "GL":
        theta = _primitive_element(field)
        diag = [list(row) for row in ident]
        diag[0][0] = theta
        gens.append(tuple(tuple(r) for r in diag))
    rng = random.Random(987123)
    for _ in range(2):
        w = ident
        for _ in range(12):
            w = mat_mul(field, w, rng.choice(gens))
        if w != ident:
            gens.append(w)
    full = []
    seen = set()
    for g in gens:
        for m in (g, mat_inv(field, g)):
            if m not in seen:
                seen.add(m)
                full.append(m)
    return full


# ---------------------------------------------------------------------------
# base group enumeration and classification

class BaseGroup:
    """A fully enumerated GL_n(q) or SL_n(q) with certified conjugacy data."""

    def __init__(self, family, n, q, cap):
        if family not in ("GL", "SL"):
            raise ValueError("base groups are GL or SL, got %r" % (family,))
        self.family = family
        self.n = n
        self.q = q
        self.field = field_for_order(q)
        self.order = group_order(family, n, q)
        if self.order > cap:
            raise BudgetExceeded(
                "group %s_%d(%d) has order %d, over the cap %d"
                % (family, n, q, self.order, cap))
        address = q ** (n * n)
        if address > _ADDRESS_LIMIT:
            raise BudgetExceeded(
                "matrix space %d^%d is too large to address" % (q, n * n))
        self.ops = _Ops(self.field, n)
        self.codes = self._enumerate_codes(address)
        assert len(self.codes) == self.order, \
            "enumerated %d elements, expected %d" % (len(self.codes), self.order)
        self.lookup = np.full(address, -1, dtype=np.int32)
        self.lookup[self.codes] = np.arange(len(self.codes), dtype=np.int32)
        self._classify()
        self._certify()
        self._rep_mats = [
            _mat_to_tuple(_decode(self.codes[[r]], n, q)[0])
            for r in self.class_reps]
        self._inverse_class = [
            self.class_of_mat(mat_inv(self.field, m)) for m in self._rep_mats]
        self._square_root_cache = {}

    # -- enumeration

    def _enumerate_codes(self, address):
        q, n = self.q, self.n
        want_one = self.family == "SL"
        chunks = []
        for start in range(0, address, _CHUNK):
            block = np.arange(start, min(start + _CHUNK, address),
                              dtype=np.int64)
            dets = self.ops.det(_decode(block, n, q))
            mask = dets == self.field.one if want_one else dets != self.field.zero
            chunks.append(block[mask])
        return np.concatenate(chunks)

    # -- conjugacy

    def _classify(self):
        n, q = self.n, self.q
        gens = _generator_mats(self.field, n, self.family)
        gen_pairs = [(_tuple_to_array(g),
                      _tuple_to_array(mat_inv(self.field, g))) for g in gens]
        total = len(self.codes)
        class_id = np.full(total, -1, dtype=np.int32)
        reps = []
        scan = 0
        while True:
            while scan < total and class_id[scan] != -1:
                scan += 1
            if scan == total:
                break
            cid = len(reps)
            reps.append(scan)
            class_id[scan] = cid
            frontier = np.array([scan], dtype=np.int64)
            while frontier.size:
                nxt = []
                for start in range(0, frontier.size, _CHUNK):
                    batch = _decode(self.codes[frontier[start:start + _CHUNK]],
                                    n, q)
                    for g, ginv in gen_pairs:
                        conj = self.ops.matmul(self.ops.matmul(g, batch), ginv)
                        idx = self.lookup[_encode(conj, q)]
                        idx = np.unique(idx)
                        fresh = idx[class_id[idx] == -1]
                        if fresh.size:
                            class_id[fresh] = cid
                            nxt.append(fresh)
                frontier = (np.unique(np.concatenate(nxt))
                            if nxt else np.empty(0, dtype=np.int64))
        self.class_id = class_id
        self.class_reps = reps
        self.class_sizes = np.bincount(class_id, minlength=len(reps))
        self.num_classes = len(reps)

    # -- certification

    def _certify(self):
        assert int(self.class_sizes.sum()) == self.order, "class equation fails"
        for cid in range(self.num_classes):
            rep = _mat_to_tuple(
                _decode(self.codes[[self.class_reps[cid]]], self.n, self.q)[0])
            size = int(self.class_sizes[cid])
            if self._is_scalar(rep):
                assert size == 1, "scalar matrix in a class of size %d" % size
                continue
            cent = self._centralizer_order(rep)
            assert size * cent == self.order, (
                "orbit-stabilizer fails for class %d: %d * %d != %d"
                % (cid, size, cent, self.order))

    def _is_scalar(self, mat):
        z = mat[0][0]
        return mat == scalar_mat(self.field, z, self.n)

    def _commutant_basis(self, rep):
        """Basis of the algebra {X : rep X = X rep} as coded n^2-vectors."""
        field, n = self.field, self.n
        cells = n * n
        # (rep X - X rep)_{ij} = sum_k rep[i][k] X[k][j] - sum_k X[i][k] rep[k][j]
        eqs = []
        for i in range(n):
            for j in range(n):
                row = [field.zero] * cells
                for k in range(n):
                    row[k * n + j] = field.add(row[k * n + j], rep[i][k])
                for k in range(n):
                    row[i * n + k] = field.sub(row[i * n + k], rep[k][j])
                eqs.append(row)
        # kernel by elimination
        rows = [list(r) for r in eqs]
        pivots = {}
        rank = 0
        for col in range(cells):
            piv = next((r for r in range(rank, len(rows))
                        if rows[r][col] != field.zero), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = field.inv(rows[rank][col])
            rows[rank] = [field.mul(inv, x) for x in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col] != field.zero:
                    c = rows[r][col]
                    rows[r] = [field.sub(x, field.mul(c, y))
                               for x, y in zip(rows[r], rows[rank])]
            pivots[col] = rank
            rank += 1
        free = [c for c in range(cells) if c not in pivots]
        basis = []
        for fc in free:
            vec = [field.zero] * cells
            vec[fc] = field.one
            for col, r in pivots.items():
                vec[col] = field.neg(rows[r][fc])
            basis.append(vec)
        return basis

    def _centralizer_order(self, rep):
        field, n, q = self.field, self.n, self.q
        basis = self._commutant_basis(rep)
        m = len(basis)
        if q ** m <= 2 * 10 ** 6:
            combos = np.zeros((q ** m, n * n), dtype=np.uint8)
            coeffs = np.array(list(itertools.product(range(q), repeat=m)),
                              dtype=np.uint8)
            if self.ops.prime:
                combos = (coeffs.astype(np.int64)
                          @ np.array(basis, dtype=np.int64)) % q
                combos = combos.astype(np.uint8)
            else:
                for t in range(m):
                    term = self.ops.mul_table[
                        coeffs[:, t][:, None],
                        np.array(basis[t], dtype=np.uint8)[None, :]]
                    combos = self.ops.add_table[combos, term]
            dets = self.ops.det(combos.reshape(-1, n, n))
            if self.family == "SL":
                return int(np.count_nonzero(dets == field.one))
            return int(np.count_nonzero(dets != field.zero))
        # fall back to scanning the group for commuting elements
        rep_arr = _tuple_to_array(rep)
        count = 0
        for start in range(0, len(self.codes), _CHUNK):
            batch = _decode(self.codes[start:start + _CHUNK], n, q)
            left = self.ops.matmul(rep_arr, batch)
            right = self.ops.matmul(batch, rep_arr)
            count += int(np.count_nonzero(
                (left == right).reshape(len(batch), -1).all(axis=1)))
        return count

    # -- queries

    def rep_mat(self, cid):
        return self._rep_mats[cid]

    def class_of_mat(self, mat):
        cid = self.maybe_class_of_mat(mat)
        if cid < 0:
            raise ValueError("matrix is not in the group")
        return cid

    def maybe_class_of_mat(self, mat):
        idx = self.lookup[_single_code(self.field, mat)]
        return int(self.class_id[idx]) if idx >= 0 else -1

    def inverse_class(self, cid):
        return self._inverse_class[cid]

    def square_roots_into(self, y_codes):
        """Indices of all h in the group with h^2 in the central set Y."""
        key = tuple(sorted(y_codes))
        if key not in self._square_root_cache:
            targets = np.array(
                [_single_code(self.field, scalar_mat(self.field, z, self.n))
                 for z in key], dtype=np.int64)
            hits = []
            for start in range(0, len(self.codes), _CHUNK):
                batch = _decode(self.codes[start:start + _CHUNK],
                                self.n, self.q)
                sq = _encode(self.ops.matmul(batch, batch), self.q)
                mask = np.isin(sq, targets)
                if mask.any():
                    hits.append(np.arange(start, start + len(batch),
                                          dtype=np.int64)[mask])
            self._square_root_cache[key] = (
                np.concatenate(hits) if hits else np.empty(0, dtype=np.int64))
        return self._square_root_cache[key]

    def has_reverser_in(self, cid, y_codes):
        """Whether some h with h^2 in Y satisfies h g h^{-1} in Y g^{-1}."""
        rep = self._rep_mats[cid]
        rep_arr = _tuple_to_array(rep)
        inv = mat_inv(self.field, rep)
        targets = np.array(
            [_single_code(self.field, mat_scale(self.field, z, inv))
             for z in y_codes], dtype=np.int64)
        pool = self.square_roots_into(y_codes)
        for start in range(0, len(pool), _CHUNK):
            h = _decode(self.codes[pool[start:start + _CHUNK]],
                        self.n, self.q)
            hgh = self.ops.matmul(self.ops.matmul(h, rep_arr), h)
            if np.isin(_encode(hgh, self.q), targets).any():
                return True
        return False


def _base_group(family, n, q, cap):
    key = (family, n, q)
    if key not in _BASE_CACHE:
        _BASE_CACHE[key] = BaseGroup(family, n, q, cap)
    elif _BASE_CACHE[key].order > cap:
        raise BudgetExceeded(
            "group %s_%d(%d) has order %d, over the cap %d"
            % (family, n, q, _BASE_CACHE[key].order, cap))
    return _BASE_CACHE[key]


# ---------------------------------------------------------------------------
# groups as seen by callers (matrix groups and central quotients)

class GroupData:
    """Reality data for GL, SL, PGL, PSL, or SL/Y at one (n, q)."""

    def __init__(self, family, n, q, y_order=None, cap=None):
        cap = resolve_cap(cap)
        if family not in ("GL", "SL", "PGL", "PSL", "SLQ"):
            raise ValueError("unknown family %r" % (family,))
        import math
        self.family = family
        self.n = n
        self.q = q
        base_family = "GL" if family in ("GL", "PGL") else "SL"
        self.base = _base_group(base_family, n, q, cap)
        self.field = self.base.field
        field = self.field
        if family == "PGL":
            y = list(field.units)
        elif family == "PSL":
            y = [z for z in field.units if field.pow(z, n) == field.one]
        elif family == "SLQ":
            if y_order is None:
                raise ValueError("family SLQ needs the order of Y")
            full = math.gcd(n, q - 1)
            if y_order < 1 or full % y_order != 0:
                raise ValueError("|Y| = %d must divide gcd(n, q-1) = %d"
                                 % (y_order, full))
            y = [z for z in field.units if field.pow(z, y_order) == field.one]
            assert len(y) == y_order
        else:
            y = [field.one]
        self.y_codes = sorted(y)
        self.y_order = len(self.y_codes)
        self.order = self.base.order // self.y_order
        self._build_orbits()

    def _build_orbits(self):
        base, field = self.base, self.field
        owner = [-1] * base.num_classes
        orbits = []
        for cid in range(base.num_classes):
            if owner[cid] != -1:
                continue
            orbit = set()
            for z in self.y_codes:
                scaled = mat_scale(field, z, base.rep_mat(cid))
                orbit.add(base.class_of_mat(scaled))
            oid = len(orbits)
            for member in orbit:
                assert owner[member] in (-1, oid)
                owner[member] = oid
            orbits.append(tuple(sorted(orbit)))
        self.orbits = orbits
        self.owner = owner
        sizes = []
        for orbit in orbits:
            tot = int(sum(base.class_sizes[m] for m in orbit))
            assert tot % self.y_order == 0
            sizes.append(tot // self.y_order)
        self.class_sizes = sizes
        self.num_classes = len(orbits)
        assert sum(sizes) == self.order, "quotient class equation fails"

    def rep_mat(self, cid):
        return self.base.rep_mat(self.orbits[cid][0])

    def is_real(self, cid):
        inv = self.base.inverse_class(self.orbits[cid][0])
        return inv in self.orbits[cid] if self.y_order > 1 else \
            inv == self.orbits[cid][0]

    def is_strongly_real(self, cid):
        return self.base.has_reverser_in(self.orbits[cid][0], self.y_codes)

    def is_zeta_real(self, cid, zeta):
        if self.family not in ("GL", "SL"):
            raise ValueError("zeta-reality lives in the matrix groups")
        rep = self.rep_mat(cid)
        twisted = mat_scale(self.field, zeta, mat_inv(self.field, rep))
        # zeta * g^{-1} can fall outside SL (det zeta^n != 1); then g is not
        # zeta-real rather than an error.
        return self.base.maybe_class_of_mat(twisted) == self.orbits[cid][0]

    def real_class_ids(self):
        return [c for c in range(self.num_classes) if self.is_real(c)]

    def strongly_real_class_ids(self):
        return [c for c in range(self.num_classes)
                if self.is_strongly_real(c)]

    def zeta_real_class_ids(self, zeta=None):
        if self.q % 2 == 0:
            raise ValueError("zeta-real classes need odd q")
        if zeta is None:
            zeta = canonical_nonsquare(self.field)
        return [c for c in range(self.num_classes)
                if self.is_zeta_real(c, zeta)]

    def counts(self, zeta=None):
        out = {"real": len(self.real_class_ids()),
               "strongly_real": len(self.strongly_real_class_ids())}
        if self.family in ("GL", "SL") and self.q % 2 == 1:
            out["zeta_real"] = len(self.zeta_real_class_ids(zeta))
        return out


def enumerate_group(family, n, q, y_order=None, cap=None):
    return GroupData(family, n, q, y_order=y_order, cap=cap)


# ---------------------------------------------------------------------------
# matrices to labels

def char_poly(field, mat):
    """det(tI - mat) as a monic polynomial over the field."""
    n = len(mat)
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append((field.neg(mat[i][j]), field.one))
            else:
                row.append((field.neg(mat[i][j]),))
        entries.append(row)
    acc = ()
    for perm in itertools.permutations(range(n)):
        prod = polys.ONE
        for i in range(n):
            prod = polys.poly_mul(field, prod, entries[i][perm[i]])
        if _perm_parity(perm):
            prod = polys.poly_neg(field, prod)
        acc = polys.poly_add(field, acc, prod)
    return acc


def poly_at_matrix(field, f, mat):
    n = len(mat)
    acc = scalar_mat(field, field.zero, n)
    for c in reversed(f):
        acc = mat_mul(field, acc, mat)
        if c != field.zero:
            acc = tuple(tuple(field.add(x, c) if i == j else x
                              for j, x in enumerate(row))
                        for i, row in enumerate(acc))
    return acc


def matrix_to_label(field, mat):
    """The conjugacy-class label of an invertible matrix.

    Each irreducible factor of the characteristic polynomial contributes
    its reversed (constant-term-1) form to the u_i picked out by its block
    sizes, so the label's roots are the inverse eigenvalues and label_det
    agrees with the matrix determinant.
    """
    n = len(mat)
    chi = char_poly(field, mat)
    fact = polys.factorize(field, chi)
    slots = {}
    for f, mult in fact.factors:
        if polys.poly_eval(field, f, field.zero) == field.zero:
            raise ValueError("matrix is singular")
        d = polys.degree(f)
        if mult == 1:
            block_counts = {1: 1}
        else:
            b = poly_at_matrix(field, f, mat)
            ge = []
            prev = 0
            power = b
            while True:
                nullity = n - mat_rank(field, power)
                step = nullity - prev
                assert step % d == 0
                g = step // d
                if g == 0:
                    break
                ge.append(g)
                prev = nullity
                power = mat_mul(field, power, b)
                if len(ge) > mult:
                    raise AssertionError("runaway block computation")
            block_counts = {}
            for i in range(1, len(ge) + 1):
                m_i = ge[i - 1] - (ge[i] if i < len(ge) else 0)
                if m_i:
                    block_counts[i] = m_i
        rev = tuple(reversed(f))
        for i, m_i in block_counts.items():
            cur = slots.get(i, polys.ONE)
            slots[i] = polys.poly_mul(field, cur,
                                      polys.poly_pow(field, rev, m_i))
    top = max(slots) if slots else 0
    label = labels.make_label(field,
                              [slots.get(i, polys.ONE)
                               for i in range(1, top + 1)])
    assert labels.label_n(label) == n
    assert labels.label_det(field, label) == mat_det(field, mat)
    return label


# ---------------------------------------------------------------------------
# oracle vs engine

def verify_group(family, n, q, y_order=None, kinds=None, zeta=None, cap=None):
    """Count reality kinds two ways and report the comparison."""
    gd = enumerate_group(family, n, q, y_order=y_order, cap=cap)
    if kinds is None:
        kinds = ["real", "strongly_real"]
        if family in ("GL", "SL") and q % 2 == 1:
            kinds.append("zeta_real")
    if zeta is None and "zeta_real" in kinds:
        zeta = canonical_nonsquare(gd.field)
    checks = []
    ok = True
    for kind in kinds:
        if kind == "real":
            got = len(gd.real_class_ids())
        elif kind == "strongly_real":
            got = len(gd.strongly_real_class_ids())
        elif kind == "zeta_real":
            got = len(gd.zeta_real_class_ids(zeta))
        else:
            raise ValueError("unknown kind %r" % (kind,))
        engine = counts.count(family, n, q, kind,
                              y_order=y_order if family == "SLQ" else None,
                              zeta=zeta if kind == "zeta_real" else None).total
        match = got == engine
        ok = ok and match
        checks.append({"kind": kind, "oracle": got, "engine": engine,
                       "match": match})
    group = {"family": family, "n": n, "q": q}
    if family == "SLQ":
        group["y"] = y_order
    return {"group": group, "order": gd.order, "classes": gd.num_classes,
            "checks": checks, "match": ok}
