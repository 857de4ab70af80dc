"""Exceptional sequences at the level of dimension vectors.

A sequence of real Schur roots (c_1, ..., c_r) is exceptional when
hom(c_i, c_j) = ext(c_i, c_j) = 0 for i < j and the classes are linearly
independent. The braid generator sigma_i reflects the (i+1)th class to
the left of the ith; its inverse reflects the ith to the right. On
classes both act by d -> +-(d - chi * d') with chi the pairing of the
moved class against the fixed one.

Every sequence spans a thick subcategory equivalent to representations
of a smaller acyclic quiver; reduce_to_simples finds the classes of its
simple objects, from which the subcategory quiver, the relative Coxeter
matrix, and preprojective/regular/preinjective position tests are
derived. All arithmetic is exact: integers, Fractions, and quadratic
irrationals for the spectral regularity certificate.
"""

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BudgetExhausted,
    InputError,
    InternalCheckError,
    NormalizeError,
    NotExceptionalError,
    SpectralCertificateError,
)
from .homext import generic_ext, generic_hom_ext, is_schur_root
from .intlinalg import (
    QuadExt,
    charpoly,
    det,
    mat_inv_int,
    mat_mul,
    mat_vec,
    poly_divmod_linear,
    quad_kernel_vector,
    rank,
    solve,
    transpose,
)
from .quiver import Quiver


def normalize(v):
    """v or -v, whichever is componentwise nonnegative."""
    v = tuple(v)
    if not any(v):
        raise NormalizeError("cannot normalize the zero vector")
    if all(x >= 0 for x in v):
        return v
    if all(x <= 0 for x in v):
        return tuple(-x for x in v)
    raise NormalizeError(f"mixed-sign class {v}; input was not exceptional")


class ExceptionalSequence:
    """Validated exceptional sequence of real Schur root classes.

    Immutable; build through validate_sequence. gram[i][j] is the Euler
    pairing <classes[i], classes[j]>.
    """

    __slots__ = ("quiver", "classes", "_gram", "_simples")

    def __init__(self, quiver, classes):
        self.quiver = quiver
        self.classes = tuple(tuple(c) for c in classes)
        self._gram = None
        self._simples = None

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, k):
        return self.classes[k]

    def __eq__(self, other):
        return (
            isinstance(other, ExceptionalSequence)
            and self.quiver.key == other.quiver.key
            and self.classes == other.classes
        )

    def __hash__(self):
        return hash((self.quiver.key, self.classes))

    def __repr__(self):
        return f"ExceptionalSequence({list(self.classes)})"

    @property
    def gram(self):
        if self._gram is None:
            pair = self.quiver.pair
            self._gram = tuple(
                tuple(pair(a, b) for b in self.classes) for a in self.classes
            )
        return self._gram

    @property
    def is_full(self):
        return len(self.classes) == self.quiver.n


def validate_sequence(quiver, classes):
    """Check all exceptional-sequence invariants; report the first failure."""
    classes = [quiver.check_vector(c) for c in classes]
    if not classes:
        raise NotExceptionalError("empty sequence")
    for k, c in enumerate(classes):
        if any(x < 0 for x in c):
            raise NotExceptionalError(f"class {k + 1} = {c} has negative entries")
        if quiver.pair(c, c) != 1:
            raise NotExceptionalError(f"class {k + 1} = {c} is not a real root")
        if not is_schur_root(quiver, c):
            raise NotExceptionalError(f"class {k + 1} = {c} is not a Schur root")
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            hom, ext = generic_hom_ext(quiver, classes[i], classes[j])
            if hom != 0 or ext != 0:
                raise NotExceptionalError(
                    f"orthogonality violation at pair ({i + 1}, {j + 1}): "
                    f"hom = {hom}, ext = {ext}"
                )
    if rank(classes) != len(classes):
        raise NotExceptionalError("classes are linearly dependent")
    seq = ExceptionalSequence(quiver, classes)
    if seq.is_full:
        if abs(det(seq.classes)) != 1:
            raise InternalCheckError("full exceptional sequence with |det| != 1")
    return seq


def _mutated_classes(quiver, classes, i, direction):
    """Apply sigma_i (left) or its inverse (right) to a class list; i is
    1-based, acting on positions (i, i+1)."""
    a, b = classes[i - 1], classes[i]
    chi = quiver.pair(b, a)
    out = list(classes)
    if direction == "left":
        moved = normalize(tuple(x - chi * y for x, y in zip(b, a)))
        out[i - 1], out[i] = moved, a
    elif direction == "right":
        moved = normalize(tuple(x - chi * y for x, y in zip(a, b)))
        out[i - 1], out[i] = b, moved
    else:
        raise InputError(f"unknown mutation direction {direction!r}")
    return out


def mutate(seq, i, direction, check=True):
    """sigma_i (direction "left") or sigma_i^-1 ("right"); 1 <= i < len.
    check=False skips revalidation; mutation preserves exceptionality, so
    this is safe on an already valid sequence and much faster when the
    classes are large."""
    if not 1 <= i <= len(seq) - 1:
        raise InputError(f"mutation index {i} out of range 1..{len(seq) - 1}")
    moved = _mutated_classes(seq.quiver, seq.classes, i, direction)
    if check:
        return validate_sequence(seq.quiver, moved)
    return ExceptionalSequence(seq.quiver, tuple(moved))


def apply_word(seq, word, check=True):
    """Apply a braid word, a list of (index, exponent) pairs with exponent
    +-1. The word is a composition: the last pair acts first."""
    for i, exp in reversed(list(word)):
        seq = mutate(seq, i, "left" if exp > 0 else "right", check=check)
    return seq


def _dirty_pairs(quiver, classes):
    pair = quiver.pair
    return [
        (i, j)
        for j in range(len(classes))
        for i in range(j)
        if pair(classes[j], classes[i]) > 0
    ]


def _unit_simples(quiver):
    """Simple classes of the whole category in an exceptional order: heads
    of arrows must precede tails (lexicographically least such order)."""
    n = quiver.n
    out_deg = [0] * n
    preds = [[] for _ in range(n)]
    for t, h in quiver.arrows:
        out_deg[t] += 1
        preds[h].append(t)
    ready = sorted(v for v in range(n) if out_deg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        changed = False
        for t in preds[v]:
            out_deg[t] -= 1
            if out_deg[t] == 0:
                ready.append(t)
                changed = True
        if changed:
            ready.sort()
    unit = lambda v: tuple(1 if k == v else 0 for k in range(n))
    return [unit(v) for v in order]


def reduce_to_simples(seq, budget=None):
    """Sequence of the classes of the simple objects of the thick
    subcategory spanned by seq, in exceptional order.

    Characterized by: same spanned lattice, and all below-diagonal Euler
    pairings <= 0 (equivalently hom vanishes in both directions between
    distinct members). Found by greedy adjacent mutations that lower total
    dimension, with a best-first braid search fallback; the result is
    certified against the characterization, so a bad search can only fail
    loudly, never return a wrong answer.
    """
    quiver = seq.quiver
    if seq._simples is not None:
        return seq._simples
    r = len(seq)
    if seq.is_full:
        result = validate_sequence(quiver, _unit_simples(quiver))
        seq._simples = result
        return result
    classes = list(seq.classes)
    steps = budget if budget is not None else 10 * r * r
    for _ in range(steps):
        pair_idx = None
        for i in range(r - 1):
            if quiver.pair(classes[i + 1], classes[i]) > 0:
                pair_idx = i + 1
                break
        if pair_idx is None:
            break
        try:
            left = _mutated_classes(quiver, classes, pair_idx, "left")
            right = _mutated_classes(quiver, classes, pair_idx, "right")
        except NormalizeError:
            break
        new_left = left[pair_idx - 1]
        new_right = right[pair_idx]
        classes = left if sum(new_left) <= sum(new_right) else right
    if _dirty_pairs(quiver, classes):
        classes = _braid_search(quiver, classes, budget or 4096)
    result = validate_sequence(quiver, classes)
    _certify_simples(seq, result)
    seq._simples = result
    return result


def _braid_search(quiver, classes, budget):
    """Best-first search over braid moves for a hom-orthogonal sequence."""
    r = len(classes)
    start = tuple(classes)
    heap = [(sum(sum(c) for c in start), len(_dirty_pairs(quiver, start)), start)]
    seen = {start}
    expanded = 0
    while heap:
        total, dirty, state = heapq.heappop(heap)
        if dirty == 0:
            return list(state)
        expanded += 1
        if expanded > budget:
            break
        for i in range(1, r):
            for direction in ("left", "right"):
                try:
                    child = tuple(
                        map(tuple, _mutated_classes(quiver, state, i, direction))
                    )
                except NormalizeError:
                    continue
                if child in seen:
                    continue
                seen.add(child)
                heapq.heappush(
                    heap,
                    (
                        sum(sum(c) for c in child),
                        len(_dirty_pairs(quiver, child)),
                        child,
                    ),
                )
    raise BudgetExhausted(
        f"no hom-orthogonal sequence found within {budget} braid moves"
    )


def _certify_simples(original, reduced):
    quiver = original.quiver
    g = reduced.gram
    r = len(reduced)
    for j in range(r):
        for i in range(j):
            if g[j][i] > 0:
                raise InternalCheckError("reduced sequence has positive back pairing")
    # same lattice: each side integrally expressible in the other
    for vec in original.classes:
        if _lattice_coords(reduced.classes, vec) is None:
            raise InternalCheckError("reduction changed the spanned lattice")
    for vec in reduced.classes:
        if _lattice_coords(original.classes, vec) is None:
            raise InternalCheckError("reduction changed the spanned lattice")


def _lattice_coords(basis, vec):
    """Integer coordinates of vec in the given class list, or None."""
    n = len(vec)
    mat = tuple(tuple(b[v] for b in basis) for v in range(n))
    sol = solve(mat, vec)
    if sol is None:
        return None
    out = []
    for x in sol:
        if x.denominator != 1:
            return None
        out.append(int(x))
    # solve() fills free variables with zero; confirm it really is a solution
    for v in range(n):
        if sum(c * b[v] for c, b in zip(out, basis)) != vec[v]:
            return None
    return tuple(out)


def subcategory_quiver(seq):
    """Acyclic quiver whose representations model the thick subcategory:
    one vertex per relative simple, -<s_j, s_i> arrows j -> i for i < j."""
    simples = reduce_to_simples(seq)
    g = simples.gram
    r = len(simples)
    arrows = []
    for j in range(r):
        for i in range(j):
            arrows.extend([(j, i)] * (-g[j][i]))
    sub = Quiver([f"s{k + 1}" for k in range(r)], arrows)
    if sub.euler_matrix() != g:
        raise InternalCheckError("subcategory quiver does not match the Gram matrix")
    return sub


def relative_coxeter(seq):
    """Coxeter matrix -G^-1 G^T of the relative simples' Gram matrix G,
    acting on coordinate column vectors in the simples basis."""
    g = reduce_to_simples(seq).gram
    g_inv = mat_inv_int(g)
    prod = mat_mul(g_inv, transpose(g))
    return tuple(tuple(-x for x in row) for row in prod)


@dataclass(frozen=True)
class PositionType:
    tag: str
    iterations: int | None = None
    certificate: str | None = None


def _simples_coordinates(simples, member):
    coords = _lattice_coords(simples.classes, member)
    if coords is None or any(x < 0 for x in coords):
        raise InputError(
            f"class {member} is not a nonnegative integer combination "
            "of the subcategory's simples"
        )
    return coords


def _gram_components(g):
    r = len(g)
    comp = list(range(r))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for i in range(r):
        for j in range(r):
            if i != j and (g[i][j] != 0 or g[j][i] != 0):
                comp[find(i)] = find(j)
    return [find(k) for k in range(r)]


def position_type(seq, index):
    """Classify seq.classes[index-1] inside the spanned subcategory as
    preprojective, regular, preinjective, or simple-disconnected.

    Forward Coxeter iterates of a preprojective class leave the
    nonnegative orthant (the orbit reaches a projective and then a negated
    injective); backward iterates of a preinjective class do the same.
    Periodic orbits are regular (tame case). When no iterate settles it,
    regularity is certified spectrally: both Euler pairings of the class
    against the positive eigenvectors for the extreme eigenvalues rho,
    1/rho must be strictly positive, decided exactly in Q(sqrt(D)).
    """
    if not 1 <= index <= len(seq):
        raise InputError(f"member index {index} out of range 1..{len(seq)}")
    member = seq.classes[index - 1]
    simples = reduce_to_simples(seq)
    g = simples.gram
    r = len(simples)
    coords = _simples_coordinates(simples, member)
    comp = _gram_components(g)
    if len(set(comp)) > 1:
        support = [k for k in range(r) if coords[k] != 0]
        if len(support) == 1 and coords[support[0]] == 1:
            k = support[0]
            isolated = all(
                g[k][j] == 0 and g[j][k] == 0 for j in range(r) if j != k
            )
            if isolated:
                return PositionType("simple-disconnected", iterations=0)
        raise InputError(
            "subcategory is disconnected and the member is not an isolated simple"
        )
    return coxeter_position(g, coords)


def coxeter_position(g, coords):
    """Classify a nonnegative coordinate vector against the Coxeter
    transformation of the unimodular Euler-form matrix g: forward orbit
    exit means preprojective, backward exit preinjective, periodicity or
    a positive spectral certificate means regular."""
    r = len(g)
    g_inv = mat_inv_int(g)
    phi = tuple(tuple(-x for x in row) for row in mat_mul(g_inv, transpose(g)))
    phi_inv = tuple(
        tuple(-x for x in row) for row in mat_mul(transpose(g_inv), g)
    )
    # iteration budget 64r, doubled twice before falling back to the
    # spectral certificate
    bound = 64 * r * 4
    fwd = bwd = coords
    for k in range(1, bound + 1):
        fwd = mat_vec(phi, fwd)
        if any(x < 0 for x in fwd):
            return PositionType("preprojective", iterations=k)
        if tuple(fwd) == tuple(coords):
            return PositionType(
                "regular", iterations=k, certificate=f"periodic with period {k}"
            )
        bwd = mat_vec(phi_inv, bwd)
        if any(x < 0 for x in bwd):
            return PositionType("preinjective", iterations=k)
    return _spectral_regularity(g, phi, coords, r)


def _spectral_regularity(g, phi, coords, r):
    coeffs = list(charpoly(phi))
    if abs(coeffs[-1]) != 1:
        raise InternalCheckError("relative Coxeter with non-unit determinant")
    for root in (1, -1):
        while len(coeffs) > 1:
            quot, rem = poly_divmod_linear(coeffs, root)
            if rem != 0:
                break
            coeffs = quot
    coeffs = [int(c) for c in coeffs]
    degree = len(coeffs) - 1
    if degree == 0:
        raise InternalCheckError(
            "quasi-unipotent Coxeter spectrum but the orbit never settled"
        )
    if degree != 2:
        raise SpectralCertificateError(
            f"irrational Coxeter factor of degree {degree}; only quadratic "
            "spectra are certifiable"
        )
    b, c = coeffs[1], coeffs[2]
    if c != 1:
        raise SpectralCertificateError(
            "quadratic Coxeter factor is not reciprocal; cannot pair rho with 1/rho"
        )
    disc = b * b - 4 * c
    if disc <= 0:
        raise SpectralCertificateError("no real spectral gap to certify against")
    half = Fraction(1, 2)
    rho_big = QuadExt(Fraction(-b, 2), half, disc)
    rho_small = QuadExt(Fraction(-b, 2), -half, disc)

    def eigvec(rho):
        shifted = tuple(
            tuple(
                QuadExt(Fraction(phi[i][j]), Fraction(0), disc)
                - (rho if i == j else QuadExt(Fraction(0), Fraction(0), disc))
                for j in range(r)
            )
            for i in range(r)
        )
        v = quad_kernel_vector(shifted)
        signs = [e.sign() for e in v]
        if all(s < 0 for s in signs):
            v = tuple(-e for e in v)
        elif not all(s > 0 for s in signs):
            raise SpectralCertificateError(
                "extreme eigenvector is not strictly positive"
            )
        return v

    v_big = eigvec(rho_big)
    v_small = eigvec(rho_small)
    zero = QuadExt(Fraction(0), Fraction(0), disc)

    def pair_quad(x, y):
        acc = zero
        for i in range(r):
            for j in range(r):
                if g[i][j] != 0:
                    acc = acc + x[i] * QuadExt(Fraction(g[i][j]), Fraction(0), disc) * y[j]
        return acc

    coords_q = tuple(QuadExt(Fraction(x), Fraction(0), disc) for x in coords)
    left = pair_quad(v_small, coords_q)
    right = pair_quad(coords_q, v_big)
    if left.sign() > 0 and right.sign() > 0:
        return PositionType(
            "regular",
            certificate=(
                f"spectral over Q(sqrt({disc})): <v(1/rho), d> and <d, v(rho)> "
                "are both positive"
            ),
        )
    raise SpectralCertificateError(
        f"spectral pairings have signs {left.sign()}, {right.sign()}; "
        "cannot certify regularity"
    )


@dataclass(frozen=True)
class Rank2Info:
    tame: bool
    delta: tuple | None


def rank2_tame_info(quiver, a, b, check=True):
    """Whether the rank-2 subcategory of the exceptional pair (a, b) is
    tame, and its isotropic root when it is. check=False skips the full
    pair validation for callers that already know (a, b) is exceptional;
    the pairing arithmetic and the isotropy assertion always run."""
    if check:
        pair_seq = validate_sequence(quiver, [a, b])
        a, b = pair_seq.classes
    else:
        a, b = quiver.check_vector(a), quiver.check_vector(b)
    c = quiver.pair(b, a)
    if abs(c) != 2:
        return Rank2Info(False, None)
    if c == -2:
        delta = tuple(x + y for x, y in zip(a, b))
    else:
        delta = normalize(tuple(x - y for x, y in zip(a, b)))
    if quiver.pair(delta, delta) != 0:
        raise InternalCheckError(f"tame pair produced non-isotropic root {delta}")
    return Rank2Info(True, delta)


def isotropic_reflection(quiver, delta, u):
    """delta' = delta - <delta, u> u for an isotropic delta and a real
    Schur root u; the result is isotropic and right-orthogonal to u."""
    delta = quiver.check_vector(delta)
    u = quiver.check_vector(u)
    if quiver.pair(delta, delta) != 0:
        raise InputError(f"{delta} is not isotropic")
    if quiver.pair(u, u) != 1 or not is_schur_root(quiver, u):
        raise InputError(f"{u} is not a real Schur root")
    c = quiver.pair(delta, u)
    out = tuple(x - c * y for x, y in zip(delta, u))
    if quiver.pair(out, out) != 0:
        raise InternalCheckError(f"reflection of {delta} along {u} lost isotropy")
    if quiver.pair(out, u) != 0:
        raise InternalCheckError("reflection output not orthogonal to the root")
    return out
