"""Pipeline attaching a tame subcategory to an isotropic Schur root.

Given an isotropic Schur root delta of a connected quiver, delta splits
as v + w for an exceptional pair of real Schur roots with <w, v> = -2,
and extends to a full exceptional sequence whose other members are
stable classes M_i. Walking the chain of rank-3 subcategories
C(M_i, V_i, W_i) and reflecting delta past the preinjective members
produces a root delta-bar; the members whose running span with the pair
stays tame and connected, together with the reflected pair, generate a
tame connected subcategory R whose quiver is affine with delta-bar as
embedded null root. The affine family of R decides whether the
semi-invariant algebra is a polynomial ring (family A) or a hypersurface
(families D and E), in which case the relation ties the products over
the three non-homogeneous tubes.
"""

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import BudgetExhausted, InputError, InternalCheckError
from .homext import embeds, generic_hom_ext, is_schur_root
from .intlinalg import det, mat_vec, rank
from .quiver import affine_type
from .sequences import (
    _lattice_coords,
    coxeter_position,
    isotropic_reflection,
    mutate,
    position_type,
    reduce_to_simples,
    relative_coxeter,
    subcategory_quiver,
    validate_sequence,
)
from .stability import stable_vectors


def _check_isotropic_schur(quiver, delta):
    delta = quiver.check_vector(delta)
    if any(x < 0 for x in delta) or not any(delta):
        raise InputError(f"{delta} is not a positive dimension vector")
    if quiver.pair(delta, delta) != 0:
        raise InputError(f"{delta} is not isotropic")
    if not is_schur_root(quiver, delta):
        raise InputError(f"{delta} is not a Schur root")
    return delta


def find_tame_pair(quiver, delta):
    """The lexicographically least pair (v, w) of real Schur roots with
    v + w = delta, <w, v> = -2, and (v, w) exceptional."""
    delta = _check_isotropic_schur(quiver, delta)
    pair = _completion_pair(quiver, [], delta)
    if pair is None:
        raise InternalCheckError(
            f"no tame pair found for {delta}; an isotropic Schur root always has one"
        )
    return pair


def _completion_pair(quiver, ms, delta):
    """The lexicographically least pair (v, w) of real Schur roots with
    v + w = delta and <w, v> = -2 such that ms + [v, w] is an exceptional
    sequence, or None if the box [0, delta] holds no such v."""
    for v in product(*(range(x + 1) for x in delta)):
        if not any(v) or v == delta:
            continue
        w = tuple(a - b for a, b in zip(delta, v))
        if quiver.pair(v, v) != 1 or quiver.pair(w, w) != 1:
            continue
        if quiver.pair(w, v) != -2:
            continue
        # exceptionality forces all the forward pairings to vanish
        if any(quiver.pair(m, v) != 0 or quiver.pair(m, w) != 0 for m in ms):
            continue
        if generic_hom_ext(quiver, v, w) != (0, 0):
            continue
        if any(
            generic_hom_ext(quiver, m, v) != (0, 0)
            or generic_hom_ext(quiver, m, w) != (0, 0)
            for m in ms
        ):
            continue
        if not is_schur_root(quiver, v) or not is_schur_root(quiver, w):
            continue
        try:
            validate_sequence(quiver, list(ms) + [v, w])
        except InputError:
            continue
        return v, w
    return None


def _ext_topo_order(subset, ext):
    """Order the classes so that ext(a, b) > 0 puts b earlier, taking the
    smallest (total, lexicographic) class whenever several are free.
    None when the constraints form a cycle."""
    pending = {s: set() for s in subset}
    for a in subset:
        for b in subset:
            if a != b and ext(a, b) > 0:
                pending[a].add(b)
    order = []
    left = set(subset)
    while left:
        ready = [s for s in left if not (pending[s] & left)]
        if not ready:
            return None
        nxt = min(ready, key=lambda s: (sum(s), s))
        order.append(nxt)
        left.remove(nxt)
    return order


def stable_exceptional_sequence(quiver, delta, bound):
    """n-2 stable real Schur roots forming an exceptional sequence that a
    pair of real Schur roots summing to delta completes to a full one,
    leftmost first.

    Subsets of the stable real roots found up to the coordinate bound are
    tried in ascending (total, lexicographic) order; each subset is
    ordered by the constraint that a positive generic ext forces the
    target earlier, and accepted once a completion pair exists.
    """
    ms, _, _ = _stable_sequence_and_pair(quiver, delta, bound)
    return ms


def _stable_sequence_and_pair(quiver, delta, bound):
    delta = _check_isotropic_schur(quiver, delta)
    need = quiver.n - 2
    if need < 0:
        raise InputError("quiver has fewer than two vertices")
    if need == 0:
        v, w = find_tame_pair(quiver, delta)
        return [], v, w
    reals = sorted(
        (
            s
            for s in stable_vectors(quiver, delta, bound)
            if quiver.pair(s, s) == 1
        ),
        key=lambda s: (sum(s), s),
    )
    if len(reals) < need:
        raise BudgetExhausted(
            f"only {len(reals)} stable real roots with coordinates <= {bound}; "
            f"{need} are needed"
        )
    cache = {}

    def ext(a, b):
        if (a, b) not in cache:
            cache[a, b] = generic_hom_ext(quiver, a, b)[1]
        return cache[a, b]

    for subset in combinations(reals, need):
        order = _ext_topo_order(subset, ext)
        if order is None:
            continue
        try:
            validate_sequence(quiver, order)
        except InputError:
            continue
        pair = _completion_pair(quiver, order, delta)
        if pair is not None:
            return order, pair[0], pair[1]
    raise BudgetExhausted(
        f"stable real roots with coordinates <= {bound} contain no "
        f"{need}-member exceptional sequence with a completion pair"
    )


@dataclass(frozen=True)
class ChainLevel:
    index: int
    m: tuple
    v: tuple
    w: tuple
    kind: str
    position: object
    delta_in: tuple
    delta_out: tuple
    in_tame: bool


@dataclass(frozen=True)
class DeltaChain:
    delta: tuple
    levels: tuple
    delta_bar: tuple
    final_pair: tuple


def delta_chain(quiver, delta, ms, v, w):
    """Process the stable members right to left: classify each rank-3
    subcategory C(M_i, V_i, W_i) as wild-connected, tame-connected, or
    tame-disconnected, and when M_i is preinjective there, reflect delta
    along M_i and mutate the pair past it.

    A member decoupled from the pair can still reach it through a member
    processed earlier, so each level also records whether the span of
    M_i, M_{i-1}, ..., M_1 and the starting pair stays tame and
    connected; the members of the in_tame levels generate the tame
    subcategory together with the final pair."""
    delta = _check_isotropic_schur(quiver, delta)
    ms = [quiver.check_vector(m) for m in ms]
    validate_sequence(quiver, list(ms) + [v, w])
    cur_delta = delta
    cur_v, cur_w = tuple(v), tuple(w)
    levels = []
    for i in range(1, len(ms) + 1):
        m = ms[len(ms) - i]
        if tuple(a + b for a, b in zip(cur_v, cur_w)) != cur_delta:
            raise InternalCheckError("pair stopped summing to the current root")
        triple = validate_sequence(quiver, [m, cur_v, cur_w])
        simples = reduce_to_simples(triple)
        kind = _classify_triple(quiver, triple, simples, m)
        span = list(ms[len(ms) - i :]) + [tuple(v), tuple(w)]
        in_tame = _tame_connected_span(quiver, span)
        pos = position_type(triple, 1)
        delta_in = cur_delta
        if pos.tag == "preinjective":
            cur_delta = isotropic_reflection(quiver, cur_delta, m)
            moved = mutate(mutate(triple, 1, "left"), 2, "left")
            cur_v, cur_w = moved.classes[0], moved.classes[1]
        if quiver.pair(cur_delta, cur_delta) != 0 or not is_schur_root(
            quiver, cur_delta
        ):
            raise InternalCheckError(
                f"chain root {cur_delta} is not an isotropic Schur root"
            )
        if not embeds(quiver, cur_delta, delta_in):
            raise InternalCheckError(
                f"chain root {cur_delta} does not embed in {delta_in}"
            )
        levels.append(
            ChainLevel(
                index=i,
                m=m,
                v=triple.classes[1],
                w=triple.classes[2],
                kind=kind,
                position=pos,
                delta_in=delta_in,
                delta_out=cur_delta,
                in_tame=in_tame,
            )
        )
    return DeltaChain(
        delta=delta,
        levels=tuple(levels),
        delta_bar=cur_delta,
        final_pair=(cur_v, cur_w),
    )


def _classify_triple(quiver, triple, simples, m):
    g = simples.gram
    r = len(simples)
    links = [
        [g[i][j] != 0 or g[j][i] != 0 for j in range(r)] for i in range(r)
    ]
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(r):
            if i != j and links[i][j] and j not in seen:
                seen.add(j)
                frontier.append(j)
    if len(seen) < r:
        if m not in simples.classes:
            raise InternalCheckError(
                "disconnected level whose member is not a relative simple"
            )
        k = simples.classes.index(m)
        if not all(g[k][j] == 0 and g[j][k] == 0 for j in range(r) if j != k):
            raise InternalCheckError(
                "disconnected level whose member does not decouple"
            )
        return "tame-disconnected"
    aff = affine_type(subcategory_quiver(triple))
    if aff.is_affine:
        return "tame-connected"
    if aff.positive_semidefinite:
        raise InternalCheckError(
            "finite-type rank-3 subcategory cannot contain an isotropic root"
        )
    return "wild-connected"


def _tame_connected_span(quiver, gens):
    """Whether the subcategory generated by the given indecomposable
    classes is tame and connected.

    Tame: the symmetrized Euler form is positive semidefinite on the
    spanned sublattice, which for a symmetric integer matrix means every
    principal minor is nonnegative. Connected: the category generated by
    indecomposables splits exactly when their pairing graph does.
    """
    r = len(gens)
    g = [[quiver.pair(a, b) for b in gens] for a in gens]
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(r):
            if j not in seen and (g[i][j] != 0 or g[j][i] != 0):
                seen.add(j)
                frontier.append(j)
    if len(seen) < r:
        return False
    sym = [[g[i][j] + g[j][i] for j in range(r)] for i in range(r)]
    for size in range(1, r + 1):
        for idx in combinations(range(r), size):
            if det([[sym[i][j] for j in idx] for i in idx]) < 0:
                return False
    return True


@dataclass
class AnalysisReport:
    quiver: object
    delta: tuple
    delta_bar: tuple
    tame_pair: tuple
    chain: DeltaChain
    tame_levels: tuple
    r_generators: tuple
    r_simples: tuple
    r_quiver: object
    r_affine: object
    si_class: str
    stable_simples: list
    quasi_simples: list
    smaller_type: bool
    adjoined_variables: int
    relation: str | None
    bound_used: int
    horizon: int
    complete: bool
    stables: list = field(default_factory=list)


def analyze(quiver, delta, bound=12, horizon=64):
    """Full report for an isotropic Schur root: the chain, the tame
    subcategory R with its affine type and embedded null root, the
    semi-invariant classification, the stable simples, and the
    smaller-type test. The stable-root bound deepens twice before the
    search gives up."""
    if not quiver.is_connected():
        raise InputError("analysis needs a connected quiver")
    delta = _check_isotropic_schur(quiver, delta)
    b = bound
    last_err = None
    found = None
    while b <= bound * 4:
        try:
            found = _stable_sequence_and_pair(quiver, delta, b)
            break
        except BudgetExhausted as err:
            last_err = err
            b *= 2
    if found is None:
        raise last_err
    ms, v, w = found
    chain = delta_chain(quiver, delta, ms, v, w)
    tame_levels = tuple(lvl.index for lvl in chain.levels if lvl.in_tame)
    outside_ms = [lvl.m for lvl in chain.levels if not lvl.in_tame]
    kept = [
        m
        for k, m in enumerate(ms)
        if (len(ms) - k) in tame_levels
    ]
    r_generators = tuple(kept) + chain.final_pair
    r_seq = validate_sequence(quiver, list(r_generators))
    r_simples = reduce_to_simples(r_seq).classes
    r_quiver = subcategory_quiver(r_seq)
    r_aff = affine_type(r_quiver)
    if not r_aff.is_affine:
        raise InternalCheckError(
            f"tame subcategory has non-affine quiver ({r_aff.tag})"
        )
    embedded_null = tuple(
        sum(c * s[k] for c, s in zip(r_aff.null_root, r_simples))
        for k in range(quiver.n)
    )
    if embedded_null != chain.delta_bar:
        raise InternalCheckError(
            f"embedded null root {embedded_null} differs from the chain root "
            f"{chain.delta_bar}; the two computations must agree"
        )
    si_class = "hypersurface" if r_aff.family in ("D", "E") else "polynomial"

    stables = stable_vectors(quiver, delta, b)
    stable_reals = [s for s in stables if quiver.pair(s, s) == 1]
    quasi = [
        s for s in stable_reals if _lattice_coords(r_simples, s) is not None
    ]
    complete = chain.delta_bar in stables and all(max(s) < b for s in stables)
    if complete:
        covered = set(outside_ms) | set(quasi)
        missing = [s for s in stable_reals if s not in covered]
        if missing:
            raise InternalCheckError(
                f"stable real roots {missing} belong neither to the chain "
                "nor to the tame subcategory"
            )
    stable_simples = sorted(
        {(m, "exceptional") for m in outside_ms}
        | {(q, "exceptional") for q in quasi}
        | {(chain.delta_bar, "isotropic")},
        key=lambda t: (sum(t[0]), t[0]),
    )
    smaller = is_smaller_type(
        quiver, delta, horizon, _stable_reals=stable_reals
    )
    report = AnalysisReport(
        quiver=quiver,
        delta=delta,
        delta_bar=chain.delta_bar,
        tame_pair=(v, w),
        chain=chain,
        tame_levels=tame_levels,
        r_generators=r_generators,
        r_simples=r_simples,
        r_quiver=r_quiver,
        r_affine=r_aff,
        si_class=si_class,
        stable_simples=stable_simples,
        quasi_simples=quasi,
        smaller_type=smaller,
        adjoined_variables=quiver.n - rank(r_generators),
        relation=None,
        bound_used=b,
        horizon=horizon,
        complete=complete,
        stables=stables,
    )
    if si_class == "hypersurface":
        report.relation = hypersurface_relation(report)
    return report


def hypersurface_relation(report):
    """Formal relation among the semi-invariants of the three
    non-homogeneous tubes of R: the product of C[root] symbols over each
    tube, the three monomials summing to zero. None for polynomial
    reports."""
    if report.si_class == "polynomial":
        return None
    orbits = _tube_orbits(report)
    if len(orbits) != 3 or any(len(t) < 2 for t in orbits):
        raise InternalCheckError(
            f"expected three non-homogeneous tubes, found sizes "
            f"{sorted(len(t) for t in orbits)}"
        )
    for tube in orbits:
        total = tuple(sum(c) for c in zip(*tube))
        if total != report.delta_bar:
            raise InternalCheckError(
                f"tube {tube} sums to {total}, not to {report.delta_bar}"
            )
    monomials = []
    for tube in sorted(orbits, key=lambda t: (-len(t), sorted(t))):
        parts = ["C[%s]" % ",".join(str(x) for x in c) for c in sorted(tube)]
        monomials.append("*".join(parts))
    return " + ".join(monomials) + " = 0"


def _tube_orbits(report):
    """Quasi-simple roots grouped by relative Coxeter orbits."""
    r_simples = report.r_simples
    quasi = list(report.quasi_simples)
    coord_of = {}
    for s in quasi:
        c = _lattice_coords(r_simples, s)
        if c is None:
            raise InternalCheckError(f"quasi-simple {s} left the lattice of R")
        coord_of[s] = c
    by_coords = {coord_of[s]: s for s in quasi}
    phi = relative_coxeter(
        validate_sequence(report.quiver, list(report.r_generators))
    )
    orbits = []
    seen = set()
    for s in quasi:
        if s in seen:
            continue
        orbit = [s]
        seen.add(s)
        cur = coord_of[s]
        while True:
            cur = tuple(mat_vec(phi, cur))
            t = by_coords.get(cur)
            if t is None:
                raise InternalCheckError(
                    f"Coxeter image {cur} of a quasi-simple is not a quasi-simple"
                )
            if t == s:
                break
            if t in seen:
                raise InternalCheckError("tube orbits are not disjoint")
            seen.add(t)
            orbit.append(t)
        orbits.append(orbit)
    return orbits


def is_smaller_type(quiver, delta, horizon=64, _stable_reals=None):
    """Whether delta is of smaller type: some Coxeter power of delta has
    a zero coordinate within the horizon, cross-checked against the
    existence of a stable real root that is preprojective or preinjective
    in the module category. The two criteria must agree."""
    delta = _check_isotropic_schur(quiver, delta)
    not_sincere = False
    for phi in (quiver.coxeter_matrix(), quiver.coxeter_inverse()):
        x = delta
        for _ in range(horizon + 1):
            if any(c == 0 for c in x):
                not_sincere = True
                break
            if any(c < 0 for c in x):
                raise InternalCheckError(
                    "Coxeter orbit of an isotropic root left the positive cone"
                )
            x = tuple(mat_vec(phi, x))
        if not_sincere:
            break
    if _stable_reals is None:
        reals = [
            s
            for s in stable_vectors(quiver, delta, 12)
            if quiver.pair(s, s) == 1
        ]
    else:
        reals = _stable_reals
    e = quiver.euler_matrix()
    has_prepost = False
    for s in reals:
        tag = coxeter_position(e, s).tag
        if tag in ("preprojective", "preinjective"):
            has_prepost = True
            break
    if not_sincere and not has_prepost:
        raise InternalCheckError(
            "a non-sincere Coxeter power exists but every stable real root "
            "is regular; the two smaller-type criteria must agree"
        )
    if has_prepost and not not_sincere:
        raise BudgetExhausted(
            f"a stable root is preprojective or preinjective but no Coxeter "
            f"power within horizon {horizon} loses sincerity; raise the horizon"
        )
    return not_sincere
