"""Generic homomorphism and extension dimensions between dimension vectors.

For dimension vectors a, b of an acyclic quiver, hom(a, b) and ext(a, b)
denote the minimal values of dim Hom(M, N) and dim Ext(M, N) over pairs of
representations with dim M = a, dim N = b; both minima are attained on a
dense open subset, and hom - ext = <a, b> always.

The computation rests on two classical facts:

* a general representation of b has a subrepresentation of dimension a
  exactly when a <= b componentwise and ext(a, b - a) = 0 (written a -> b,
  "a embeds in b");
* ext(a, b) = max { -<a', b> : a' embeds in a }
            = max { -<a, b''> : b'' a generic quotient of b }.

The set of generic subvector dimensions of a is computed once by dynamic
programming over the box [0, a] and cached; every ext value is then a
single max of pairings against that set. The canonical decomposition is
computed by recursive splitting along ext-orthogonal pairs and certified
against its defining invariants. An independent finite-field sampling
oracle (random representations over F_p, p = 2^31 - 1) is provided for
cross-checking; it is a verification device, never a trusted code path.
"""

from itertools import product

import numpy as np

from .errors import InputError, InternalCheckError

_SUBGEN = {}
_SUBGEN_NP = {}
_EULER_NP = {}
_CANDECOMP = {}

ORACLE_PRIME = 2**31 - 1


def _euler_np(quiver):
    mat = _EULER_NP.get(quiver.key)
    if mat is None:
        mat = np.array(quiver.euler_matrix(), dtype=np.int64)
        _EULER_NP[quiver.key] = mat
    return mat


def _check_dim_vector(quiver, v):
    v = quiver.check_vector(v)
    if any(x < 0 for x in v):
        raise InputError(f"dimension vector must be nonnegative, got {v}")
    return v


def generic_subvectors(quiver, a):
    """All a' such that a general representation of a has a subrepresentation
    of dimension a', in lexicographic order. Includes 0 and a."""
    a = _check_dim_vector(quiver, a)
    key = (quiver.key, a)
    cached = _SUBGEN.get(key)
    if cached is not None:
        return cached
    e = _euler_np(quiver)
    box = sorted(
        product(*(range(x + 1) for x in a)), key=lambda v: (sum(v), v)
    )
    for v in box:
        kv = (quiver.key, v)
        if kv in _SUBGEN:
            continue
        arr_v = np.array(v, dtype=np.int64)
        subs = []
        for u in product(*(range(x + 1) for x in v)):
            if u == v or not any(u):
                subs.append(u)
                continue
            mat_u = _SUBGEN_NP[(quiver.key, u)]
            w = e @ (arr_v - np.array(u, dtype=np.int64))
            # u embeds in v iff <u', v - u> >= 0 for every generic sub u' of u
            if int((mat_u @ w).min()) >= 0:
                subs.append(u)
        _SUBGEN[kv] = tuple(subs)
        _SUBGEN_NP[kv] = np.array(subs, dtype=np.int64)
    return _SUBGEN[key]


def generic_quotients(quiver, b):
    """All b'' such that a general representation of b has a quotient of
    dimension b''."""
    b = _check_dim_vector(quiver, b)
    return tuple(
        tuple(x - y for x, y in zip(b, u)) for u in generic_subvectors(quiver, b)
    )


def generic_ext(quiver, a, b):
    a = _check_dim_vector(quiver, a)
    b = _check_dim_vector(quiver, b)
    if sum(a) == 0 or sum(b) == 0:
        return 0
    generic_subvectors(quiver, a)
    mat = _SUBGEN_NP[(quiver.key, a)]
    w = _euler_np(quiver) @ np.array(b, dtype=np.int64)
    return int(-(mat @ w).min())


def generic_ext_dual(quiver, a, b):
    """ext(a, b) computed from generic quotients of b; used to cross-check
    the subvector formula."""
    a = _check_dim_vector(quiver, a)
    b = _check_dim_vector(quiver, b)
    if sum(a) == 0 or sum(b) == 0:
        return 0
    best = 0
    for q in generic_quotients(quiver, b):
        val = -quiver.pair(a, q)
        if val > best:
            best = val
    return best


def generic_hom_ext(quiver, a, b):
    """The pair (hom(a, b), ext(a, b))."""
    ext = generic_ext(quiver, a, b)
    hom = quiver.pair(a, b) + ext
    if hom < 0:
        raise InternalCheckError(f"negative generic hom for {a}, {b}")
    return hom, ext


def embeds(quiver, a, b):
    """Whether a general representation of b has a subrepresentation of
    dimension a."""
    a = _check_dim_vector(quiver, a)
    b = _check_dim_vector(quiver, b)
    if any(x > y for x, y in zip(a, b)):
        return False
    if sum(a) == 0 or a == b:
        return True
    generic_subvectors(quiver, a)
    mat = _SUBGEN_NP[(quiver.key, a)]
    w = _euler_np(quiver) @ np.array(
        tuple(y - x for x, y in zip(a, b)), dtype=np.int64
    )
    return int((mat @ w).min()) >= 0


def orthogonal(quiver, a, b):
    """hom(a, b) = ext(a, b) = 0."""
    return quiver.pair(a, b) == 0 and generic_ext(quiver, a, b) == 0


def is_schur_root(quiver, d):
    """Whether a general representation of d has endomorphism ring k.

    Criterion: d != 0 and every proper nonzero generic subvector d' of d
    satisfies <d', d> - <d, d'> > 0.
    """
    d = _check_dim_vector(quiver, d)
    if sum(d) == 0:
        return False
    generic_subvectors(quiver, d)
    mat = _SUBGEN_NP[(quiver.key, d)]
    e = _euler_np(quiver)
    arr = np.array(d, dtype=np.int64)
    diff = mat @ (e @ arr) - mat @ (e.T @ arr)
    for row, val in zip(mat, diff):
        if not row.any() or tuple(row) == d:
            continue
        if int(val) <= 0:
            return False
    return True


def _kind(quiver, root):
    q = quiver.tits(root)
    if q == 1:
        return "real"
    if q == 0:
        return "isotropic"
    if q < 0:
        return "imaginary"
    raise InternalCheckError(f"Schur root {root} with self-pairing {q} > 1")


def _candecomp_parts(quiver, d):
    key = (quiver.key, d)
    cached = _CANDECOMP.get(key)
    if cached is not None:
        return cached
    if is_schur_root(quiver, d):
        _CANDECOMP[key] = (d,)
        return (d,)
    # a non-Schur vector always admits an ext-orthogonal split
    generic_subvectors(quiver, d)
    for d1 in product(*(range(x + 1) for x in d)):
        if not any(d1) or d1 == d:
            continue
        d2 = tuple(x - y for x, y in zip(d, d1))
        if generic_ext(quiver, d1, d2) == 0 and generic_ext(quiver, d2, d1) == 0:
            parts = _candecomp_parts(quiver, d1) + _candecomp_parts(quiver, d2)
            _CANDECOMP[key] = parts
            return parts
    raise InternalCheckError(f"no ext-orthogonal split of non-Schur vector {d}")


def canonical_decomposition(quiver, d):
    """Canonical decomposition of d: list of (root, multiplicity, kind).

    Every returned root is a Schur root, ext vanishes between distinct
    entries in both directions, multiplicities of imaginary anisotropic
    entries are folded into the root itself (so they carry multiplicity 1),
    and sum(multiplicity * root) = d. These invariants are re-verified on
    every call.
    """
    d = _check_dim_vector(quiver, d)
    if sum(d) == 0:
        return []
    parts = _candecomp_parts(quiver, d)
    counts = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    entries = [
        (root, mult, _kind(quiver, root))
        for root, mult in sorted(counts.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
    ]
    _certify_candecomp(quiver, d, entries)
    return entries


def _certify_candecomp(quiver, d, entries):
    total = [0] * quiver.n
    for root, mult, kind in entries:
        if kind == "imaginary" and mult != 1:
            raise InternalCheckError("imaginary entry with multiplicity > 1")
        if not is_schur_root(quiver, root):
            raise InternalCheckError(f"candecomp entry {root} is not Schur")
        for i, x in enumerate(root):
            total[i] += mult * x
        if mult > 1 and generic_ext(quiver, root, root) != 0:
            raise InternalCheckError(f"self-extending repeated entry {root}")
    if tuple(total) != d:
        raise InternalCheckError("candecomp entries do not sum to input")
    roots = [r for r, _, _ in entries]
    for i, a in enumerate(roots):
        for b in roots[i + 1 :]:
            if generic_ext(quiver, a, b) != 0 or generic_ext(quiver, b, a) != 0:
                raise InternalCheckError(
                    f"candecomp entries {a}, {b} are not ext-orthogonal"
                )


def is_prehomogeneous(quiver, d):
    """Whether the canonical decomposition consists of real Schur roots only
    (equivalently, the representation space has a dense orbit)."""
    d = _check_dim_vector(quiver, d)
    if sum(d) == 0:
        return True
    return all(kind == "real" for _, _, kind in canonical_decomposition(quiver, d))


def _rank_mod_p(mat, p):
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, c]
        mask = below != 0
        if mask.any():
            a[r + 1 :][mask] = (
                a[r + 1 :][mask] - np.outer(below[mask], a[r])
            ) % p
        r += 1
    return r


def sample_hom_dim(quiver, a, b, trials=3, seed=0):
    """dim Hom(M, N) for random representations M, N of a, b over F_p with
    p = 2^31 - 1, minimized over the given number of trials.

    Each sample is an upper bound for hom(a, b) that is generically sharp;
    the result is deterministic for a fixed seed. Verification device only.
    """
    a = _check_dim_vector(quiver, a)
    b = _check_dim_vector(quiver, b)
    p = ORACLE_PRIME
    unknowns = sum(x * y for x, y in zip(a, b))
    if unknowns == 0:
        return 0
    if not quiver.arrows:
        return unknowns
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(max(1, trials)):
        m_mats = {}
        n_mats = {}
        for idx, (t, h) in enumerate(quiver.arrows):
            m_mats[idx] = rng.integers(0, p, size=(a[h], a[t]), dtype=np.int64)
            n_mats[idx] = rng.integers(0, p, size=(b[h], b[t]), dtype=np.int64)
        col_offset = {}
        off = 0
        for x in range(quiver.n):
            col_offset[x] = off
            off += a[x] * b[x]
        n_rows = sum(a[t] * b[h] for t, h in quiver.arrows)
        k = np.zeros((n_rows, unknowns), dtype=np.int64)
        row = 0
        for idx, (t, h) in enumerate(quiver.arrows):
            height = a[t] * b[h]
            if height == 0:
                continue
            # row-major vec: vec(f_h M) = (I ⊗ M^T) vec(f_h),
            #                vec(N f_t) = (N ⊗ I) vec(f_t)
            if a[h] * b[h] > 0:
                block = np.kron(np.eye(b[h], dtype=np.int64), m_mats[idx].T)
                k[row : row + height, col_offset[h] : col_offset[h] + a[h] * b[h]] += block
            if a[t] * b[t] > 0:
                block = np.kron(n_mats[idx], np.eye(a[t], dtype=np.int64))
                k[row : row + height, col_offset[t] : col_offset[t] + a[t] * b[t]] -= block
            row += height
        if row == 0:
            dim = unknowns
        else:
            dim = unknowns - _rank_mod_p(k[:row], p)
        if best is None or dim < best:
            best = dim
    return int(best)


def sample_end_dim(quiver, d, trials=3, seed=0):
    """dim End(M) for a single random representation M of d over F_p,
    minimized over trials. Generic value is 1 exactly for Schur roots."""
    d = _check_dim_vector(quiver, d)
    p = ORACLE_PRIME
    unknowns = sum(x * x for x in d)
    if unknowns == 0:
        return 0
    if not quiver.arrows:
        return unknowns
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(max(1, trials)):
        mats = {
            idx: rng.integers(0, p, size=(d[h], d[t]), dtype=np.int64)
            for idx, (t, h) in enumerate(quiver.arrows)
        }
        col_offset = {}
        off = 0
        for x in range(quiver.n):
            col_offset[x] = off
            off += d[x] * d[x]
        n_rows = sum(d[t] * d[h] for t, h in quiver.arrows)
        k = np.zeros((n_rows, unknowns), dtype=np.int64)
        row = 0
        for idx, (t, h) in enumerate(quiver.arrows):
            height = d[t] * d[h]
            if height == 0:
                continue
            m = mats[idx]
            k[row : row + height, col_offset[h] : col_offset[h] + d[h] * d[h]] += np.kron(
                np.eye(d[h], dtype=np.int64), m.T
            )
            k[row : row + height, col_offset[t] : col_offset[t] + d[t] * d[t]] -= np.kron(
                m, np.eye(d[t], dtype=np.int64)
            )
            row += height
        dim = unknowns - _rank_mod_p(k[:row], p) if row else unknowns
        if best is None or dim < best:
            best = dim
    return int(best)


def clear_caches():
    _SUBGEN.clear()
    _SUBGEN_NP.clear()
    _EULER_NP.clear()
    _CANDECOMP.clear()
