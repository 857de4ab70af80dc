"""King stability of dimension vectors for the weight attached to a root.

The weight of d is the linear form sigma_d(x) = -<x, d>. A nonzero vector
x is semistable when sigma_d(x) = 0 and sigma_d(x') <= 0 for every generic
subvector x' of x, stable when the inequality is strict on proper nonzero
subvectors. The semistable vectors form a rational polyhedral cone; for an
isotropic Schur root delta its extremal rays are spanned by the stable
real roots together with the tame root delta-bar when that is extremal.

All geometry here is exact: integer pairings, Fraction linear algebra,
and subset-based Caratheodory tests instead of floating-point LPs.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from .errors import InputError, InternalCheckError
from .homext import (
    _SUBGEN_NP,
    _check_dim_vector,
    _euler_np,
    embeds,
    generic_quotients,
    generic_subvectors,
    is_schur_root,
    orthogonal,
)
from .intlinalg import rank, solve


def sigma_weight(quiver, d):
    """Integer coefficient vector of the form x -> -<x, d>."""
    d = _check_dim_vector(quiver, d)
    e = quiver.euler_matrix()
    return tuple(-sum(e[i][j] * d[j] for j in range(quiver.n)) for i in range(quiver.n))


def sigma_value(quiver, d, x):
    return -quiver.pair(x, d)


def stability_status(quiver, x, delta):
    """"unstable", "semistable", or "stable" for the weight of delta.

    Decided on generic subvectors: semistable needs <x, delta> = 0 and
    <u, delta> >= 0 for every generic subvector u of x, stable needs the
    inequality strict for proper nonzero u.
    """
    x = _check_dim_vector(quiver, x)
    delta = _check_dim_vector(quiver, delta)
    if not any(x):
        raise InputError("the zero vector has no stability status")
    if quiver.pair(x, delta) != 0:
        return "unstable"
    strict = True
    for u in generic_subvectors(quiver, x):
        if u == x or not any(u):
            continue
        p = quiver.pair(u, delta)
        if p < 0:
            return "unstable"
        if p == 0:
            strict = False
    return "stable" if strict else "semistable"


def _semistable_filter(quiver, delta, candidates):
    """Rows of candidates (numpy int64, one vector per row) that are
    semistable for the weight of delta.

    Dual form of the subvector test: x is semistable iff <x, delta> = 0
    and <x, q> >= 0 for every generic quotient q of delta.
    """
    e = _euler_np(quiver)
    d = np.array(delta, dtype=np.int64)
    quots = np.array(generic_quotients(quiver, delta), dtype=np.int64)
    on_wall = (candidates @ (e @ d)) == 0
    candidates = candidates[on_wall]
    pairings = candidates @ (e @ quots.T)
    return candidates[(pairings >= 0).all(axis=1)]


def stable_vectors(quiver, delta, bound):
    """All nonzero stable vectors with coordinates <= bound, in ascending
    (total dimension, lexicographic) order.

    Semistability is the vectorized quotient test; a semistable x is then
    stable iff no previously found smaller stable vector embeds in it
    (a destabilizing subvector of minimal total dimension is itself
    stable, so the ascending sieve sees it first).
    """
    delta = _check_dim_vector(quiver, delta)
    if bound < 0:
        raise InputError("bound must be nonnegative")
    n = quiver.n
    e = _euler_np(quiver)
    semis = []
    axes = [np.arange(bound + 1, dtype=np.int64)] * (n - 1)
    tail = (
        np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n - 1)
        if n > 1
        else np.zeros((1, 0), dtype=np.int64)
    )
    for first in range(bound + 1):
        chunk = np.concatenate(
            [np.full((tail.shape[0], 1), first, dtype=np.int64), tail], axis=1
        )
        kept = _semistable_filter(quiver, delta, chunk)
        if kept.size:
            semis.append(kept)
    if not semis:
        return []
    allsemi = np.concatenate(semis, axis=0)
    totals = allsemi.sum(axis=1)
    order = np.lexsort(tuple(allsemi[:, k] for k in range(n - 1, -1, -1)) + (totals,))
    stables = []
    witnesses = []
    for row in allsemi[order]:
        x = tuple(int(v) for v in row)
        if not any(x):
            continue
        arr = np.array(x, dtype=np.int64)
        destabilized = False
        for u, u_arr, subs in witnesses:
            if sum(u) < sum(x) and all(a <= b for a, b in zip(u, x)):
                if int((subs @ (e @ (arr - u_arr))).min()) >= 0:
                    destabilized = True
                    break
        if destabilized:
            continue
        stables.append(x)
        generic_subvectors(quiver, x)
        witnesses.append((x, arr, _SUBGEN_NP[(quiver.key, x)]))
    return stables


def stable_decomposition(quiver, x, delta):
    """Multiset of stable vectors summing to x, obtained by peeling off
    the least stable subvector at each step. Input must be semistable."""
    x = _check_dim_vector(quiver, x)
    delta = _check_dim_vector(quiver, delta)
    status = stability_status(quiver, x, delta)
    if status == "unstable":
        raise InputError(f"{x} is not semistable for the weight of {delta}")
    parts = []
    rest = x
    while any(rest):
        if stability_status(quiver, rest, delta) == "stable":
            parts.append(rest)
            break
        piece = None
        for u in _stables_inside(quiver, rest, delta):
            if u != rest and embeds(quiver, u, rest):
                piece = u
                break
        if piece is None:
            raise InternalCheckError(
                f"semistable vector {rest} has no stable subvector"
            )
        parts.append(piece)
        rest = tuple(a - b for a, b in zip(rest, piece))
        if any(rest) and stability_status(quiver, rest, delta) == "unstable":
            raise InternalCheckError("peeling left an unstable remainder")
    _certify_stable_decomposition(quiver, x, delta, parts)
    return sorted(parts, key=lambda v: (sum(v), v))


def _stables_inside(quiver, box, delta):
    """Stable vectors u <= box in ascending (total, lex) order."""
    e = _euler_np(quiver)
    grid = np.stack(
        np.meshgrid(*[np.arange(b + 1, dtype=np.int64) for b in box], indexing="ij"),
        axis=-1,
    ).reshape(-1, len(box))
    kept = _semistable_filter(quiver, delta, grid)
    rows = sorted((tuple(int(v) for v in r) for r in kept), key=lambda v: (sum(v), v))
    out = []
    witnesses = []
    for x in rows:
        if not any(x):
            continue
        arr = np.array(x, dtype=np.int64)
        if any(
            sum(u) < sum(x)
            and all(a <= b for a, b in zip(u, x))
            and int((subs @ (e @ (arr - u_arr))).min()) >= 0
            for u, u_arr, subs in witnesses
        ):
            continue
        out.append(x)
        generic_subvectors(quiver, x)
        witnesses.append((x, arr, _SUBGEN_NP[(quiver.key, x)]))
    return out


def _certify_stable_decomposition(quiver, x, delta, parts):
    if tuple(sum(col) for col in zip(*parts)) != x:
        raise InternalCheckError("stable decomposition does not sum to the input")
    for p in parts:
        if stability_status(quiver, p, delta) != "stable":
            raise InternalCheckError(f"part {p} of the decomposition is not stable")
    distinct = sorted(set(parts), key=lambda v: (sum(v), v))
    if len(distinct) > 1:
        for perm in permutations(distinct):
            if all(
                orthogonal(quiver, perm[i], perm[j])
                for i in range(len(perm))
                for j in range(i + 1, len(perm))
            ):
                return
        raise InternalCheckError(
            "stable decomposition parts admit no orthogonal ordering"
        )


def in_cone(vectors, target):
    """Exact membership of target in the convex cone spanned by vectors.

    Caratheodory: target is in the cone iff some linearly independent
    subset carries it with nonnegative rational coefficients.
    """
    target = tuple(target)
    if not any(target):
        return True
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return False
    r = rank(vecs)
    n = len(target)
    for size in range(1, r + 1):
        for subset in combinations(vecs, size):
            if rank(subset) != size:
                continue
            mat = tuple(tuple(v[i] for v in subset) for i in range(n))
            sol = solve(mat, target)
            if sol is None:
                continue
            if all(c >= 0 for c in sol):
                ok = all(
                    sum(c * v[i] for c, v in zip(sol, subset)) == target[i]
                    for i in range(n)
                )
                if ok:
                    return True
    return False


@dataclass
class ConeReport:
    quiver: object
    delta: tuple
    bound: int
    weight: tuple
    rays: list
    stable_non_extremal: tuple | None
    deltabar: tuple | None
    proper: tuple | None
    simplex_decomposition: list | None
    stables: list
    complete: bool
    slice_coords: list | None = field(default=None)


def cone_report(quiver, delta, bound):
    """Extremal-ray description of the cone of semistable vectors.

    Enumerates stable vectors to the bound; the rays are the stable real
    roots plus the stable isotropic root when extremal. Proper is the
    intersection of all drop-one-ray subcones (empty or the isotropic
    ray), cross-checked against the simplex criterion: Proper is empty
    iff the number of rays equals the dimension of the cone's span.
    """
    delta = _check_dim_vector(quiver, delta)
    if quiver.pair(delta, delta) != 0 or not is_schur_root(quiver, delta):
        raise InputError(f"{delta} is not an isotropic Schur root")
    stables = stable_vectors(quiver, delta, bound)
    reals = [s for s in stables if quiver.pair(s, s) == 1]
    others = [s for s in stables if quiver.pair(s, s) != 1]
    for s in others:
        if quiver.pair(s, s) != 0:
            raise InternalCheckError(f"anisotropic imaginary stable vector {s}")
    if len(others) > 1:
        raise InternalCheckError(f"several stable isotropic vectors: {others}")
    deltabar = others[0] if others else None
    complete = deltabar is not None and all(max(s) < bound for s in stables)

    rays = list(reals)
    stable_non_extremal = None
    if deltabar is not None:
        if in_cone(reals, deltabar):
            stable_non_extremal = deltabar
        else:
            rays.append(deltabar)
    rays.sort(key=lambda v: (sum(v), v))

    for k, v in enumerate(rays):
        rest = rays[:k] + rays[k + 1 :]
        if in_cone(rest, v):
            raise InternalCheckError(f"stable vector {v} is not extremal")

    proper = None
    if deltabar is not None and rays:
        s = stable_non_extremal if stable_non_extremal is not None else deltabar
        if all(in_cone(rays[:k] + rays[k + 1 :], s) for k in range(len(rays))):
            proper = s
    simplicial = len(rays) == rank(rays) if rays else True
    if complete and (proper is None) != simplicial:
        raise InternalCheckError(
            "Proper/simplex cross-check failed: "
            f"proper={proper}, rays={len(rays)}, dim={rank(rays)}"
        )

    decomposition = None
    if deltabar is not None and len(rays) <= 10:
        decomposition = _simplex_decomposition(rays, deltabar)
        if complete and decomposition is None:
            raise InternalCheckError("no simplex decomposition found")

    return ConeReport(
        quiver=quiver,
        delta=delta,
        bound=bound,
        weight=sigma_weight(quiver, delta),
        rays=rays,
        stable_non_extremal=stable_non_extremal,
        deltabar=deltabar,
        proper=proper,
        simplex_decomposition=decomposition,
        stables=stables,
        complete=complete,
    )


def _slice_point(v):
    t = sum(v)
    return tuple(Fraction(x, t) for x in v)


def _simplex_decomposition(rays, deltabar):
    """Partition of the slice points of the rays, translated so the
    isotropic point is the origin, into groups each spanning independent
    subspaces and containing the origin in the simplex of its points.

    Returns a list of (ray index tuple, subspace dimension) or None.
    """
    s = _slice_point(deltabar)
    w = [tuple(a - b for a, b in zip(_slice_point(v), s)) for v in rays]
    nonzero = tuple(i for i in range(len(w)) if any(w[i]))
    total_dim = rank([w[i] for i in nonzero]) if nonzero else 0

    def group_dim(idx):
        pts = [w[i] for i in idx]
        d = rank(pts)
        if len(pts) == d:
            # together with the origin the points form a d-simplex with
            # the origin as a vertex
            return d
        if len(pts) == d + 1:
            # the origin must be a convex combination of the points
            mat = tuple(
                tuple(w[i][v] for i in idx) for v in range(len(s))
            ) + ((1,) * len(pts),)
            sol = solve(mat, (0,) * len(s) + (1,))
            if sol is not None and all(c >= 0 for c in sol):
                good = all(
                    sum(c * w[i][v] for c, i in zip(sol, idx)) == 0
                    for v in range(len(s))
                )
                if good:
                    return d
        return None

    best = None

    def search(remaining, groups, used_dim, basis):
        nonlocal best
        if best is not None:
            return
        if not remaining:
            if used_dim == total_dim:
                best = groups
            return
        first = remaining[0]
        rest = remaining[1:]
        # largest groups first: the canonical answer has as few groups as
        # possible (a simplicial cone is one group)
        for size in range(len(remaining), 0, -1):
            for extra in combinations(rest, size - 1):
                idx = (first,) + extra
                d = group_dim(idx)
                if d is None:
                    continue
                new_basis = basis + [w[i] for i in idx]
                if rank(new_basis) != used_dim + d:
                    continue
                search(
                    tuple(i for i in remaining if i not in idx),
                    groups + [(idx, d)],
                    used_dim + d,
                    new_basis,
                )
                if best is not None:
                    return

    search(nonzero, [], 0, [])
    return best


def slice_coordinates(report):
    """Rational coordinates of the rays, delta, and delta-bar on the
    affine slice of total dimension one, in a deterministic basis of the
    slice's direction space. Returns a list of (label, coords) pairs."""
    points = []
    for k, v in enumerate(report.rays):
        points.append((f"ray{k + 1}", _slice_point(v)))
    points.append(("delta", _slice_point(report.delta)))
    if report.deltabar is not None:
        points.append(("deltabar", _slice_point(report.deltabar)))
    origin = _slice_point(report.delta)
    dirs = [tuple(a - b for a, b in zip(p, origin)) for _, p in points]
    basis = []
    for d in dirs:
        if any(d) and rank(basis + [d]) == len(basis) + 1:
            basis.append(d)
    dim = len(basis)
    out = []
    n = len(origin)
    width = max(2, min(dim, 3)) if dim <= 3 else dim
    for label, p in points:
        rhs = tuple(a - b for a, b in zip(p, origin))
        if dim == 0:
            coords = (Fraction(0),) * 2
        else:
            mat = tuple(tuple(b[v] for b in basis) for v in range(n))
            sol = solve(mat, rhs)
            if sol is None:
                raise InternalCheckError("slice point outside the slice plane")
            coords = tuple(sol) + (Fraction(0),) * (width - dim)
        out.append((label, coords[:width] if dim <= 3 else coords))
    report.slice_coords = out
    return out
