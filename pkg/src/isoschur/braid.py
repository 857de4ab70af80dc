"""Braid-group walk on exceptional sequences carrying an isotropic root.

A full exceptional sequence is of isotropic type when two consecutive
members generate a tame rank-2 subcategory; the position of that pair and
the isotropic root inside it are the extra data. The braid group on n-1
strands acts on such sequences: generators away from the pair delegate to
the plain mutations, the generator at the pair moves a neighbour across
it, and the generator just left of the pair reflects the pair itself,
changing the root.

Words compose with the rightmost generator acting first, written like
"g2^-1 g1^-1 g2 g1^-1".

Every isotropic Schur root is reachable from the null root of an affine
full subquiver by completing the pair with an exceptional class and
applying relative Coxeter powers inside the resulting rank-3 subcategory;
enumerate_isotropic runs that closure and brute_isotropic_filter is the
independent box-scan check.
"""

import re
from dataclasses import dataclass
from heapq import heappop, heappush

import numpy as np

from .analysis import _stable_sequence_and_pair
from .errors import BudgetExhausted, InputError, InternalCheckError
from .homext import generic_hom_ext, is_schur_root
from .intlinalg import mat_inv_int, mat_vec
from .quiver import affine_type
from .sequences import (
    ExceptionalSequence,
    _lattice_coords,
    _mutated_classes,
    rank2_tame_info,
    reduce_to_simples,
    relative_coxeter,
    subcategory_quiver,
    validate_sequence,
)


@dataclass(frozen=True)
class IsoTypeSequence:
    base: ExceptionalSequence
    position: int
    root_type: tuple

    def __repr__(self):
        return (
            f"IsoTypeSequence({list(self.base.classes)!r}, "
            f"position={self.position}, root={self.root_type})"
        )


def iso_type_sequence(quiver, classes, position=None):
    """Validated isotropic-type sequence; with position omitted, the
    smallest position whose pair is tame is taken."""
    base = validate_sequence(quiver, classes)
    if not base.is_full:
        raise InputError(
            f"isotropic type needs a full sequence, got length {len(base)}"
        )
    n = len(base)
    if position is None:
        for r in range(1, n):
            if rank2_tame_info(quiver, base.classes[r - 1], base.classes[r]).tame:
                position = r
                break
        else:
            raise InputError("no consecutive pair generates a tame subcategory")
    if not 1 <= position <= n - 1:
        raise InputError(f"position {position} out of range 1..{n - 1}")
    info = rank2_tame_info(
        quiver, base.classes[position - 1], base.classes[position]
    )
    if not info.tame:
        raise InputError(
            f"pair at position {position} does not generate a tame subcategory"
        )
    if not is_schur_root(quiver, info.delta):
        raise InternalCheckError(f"pair root {info.delta} is not Schur")
    return IsoTypeSequence(base, position, info.delta)


def gamma(iso, i, exponent=1):
    """One braid generator. With the pair at position r: i < r-1 is the
    plain mutation sigma_i, i > r is sigma_{i+1}, i = r moves the class
    right of the pair across it (position r+1), i = r-1 reflects the pair
    past its left neighbour (position r-1, root reflected along that
    neighbour). Inverses mirror these; gamma(., i, +1) then
    gamma(., i, -1) is the identity."""
    quiver = iso.base.quiver
    n = len(iso.base)
    r = iso.position
    if not 1 <= i <= n - 2:
        raise InputError(f"generator index {i} out of range 1..{n - 2}")
    if exponent not in (1, -1):
        raise InputError("exponent must be +1 or -1")
    classes = iso.base.classes
    delta = iso.root_type
    pos = r
    root = delta
    if exponent == 1:
        if i < r - 1:
            cls = _mutated_classes(quiver, classes, i, "left")
        elif i > r:
            cls = _mutated_classes(quiver, classes, i + 1, "left")
        elif i == r:
            if r == n - 1:
                raise InputError("no class to the right of the pair")
            cls = _mutated_classes(quiver, classes, r + 1, "left")
            cls = _mutated_classes(quiver, cls, r, "left")
            pos = r + 1
        else:
            u = classes[r - 2]
            cls = _mutated_classes(quiver, classes, r - 1, "left")
            cls = _mutated_classes(quiver, cls, r, "left")
            pos = r - 1
            c = quiver.pair(delta, u)
            root = tuple(x - c * y for x, y in zip(delta, u))
    else:
        if i < r - 1:
            cls = _mutated_classes(quiver, classes, i, "right")
        elif i > r:
            cls = _mutated_classes(quiver, classes, i + 1, "right")
        elif i == r - 1:
            cls = _mutated_classes(quiver, classes, r - 1, "right")
            cls = _mutated_classes(quiver, cls, r, "right")
            pos = r - 1
        else:
            if r == n - 1:
                raise InputError("no class to the right of the pair")
            u = classes[r + 1]
            cls = _mutated_classes(quiver, classes, r + 1, "right")
            cls = _mutated_classes(quiver, cls, r, "right")
            pos = r + 1
            c = quiver.pair(u, delta)
            root = tuple(x - c * y for x, y in zip(delta, u))
    if any(x < 0 for x in root):
        raise InternalCheckError(f"reflected root {root} left the positive cone")
    info = rank2_tame_info(quiver, cls[pos - 1], cls[pos], check=False)
    if not info.tame or info.delta != root:
        raise InternalCheckError(
            f"pair after gamma_{i}^{exponent} carries root "
            f"{info.delta if info.tame else None}, expected {root}"
        )
    return IsoTypeSequence(ExceptionalSequence(quiver, tuple(cls)), pos, root)


def apply_braid(iso, word):
    """Apply a braid word, a list of (index, exponent) pairs; the last
    pair acts first, matching the written order g_{i1}^{e1} ... g_{ik}^{ek}."""
    for i, exp in reversed(list(word)):
        iso = gamma(iso, i, exp)
    return iso


_TOKEN = re.compile(r"^g(\d+)(?:\^(-?1))?$")


def parse_braid_word(text):
    """Parse "g2^-1 g1" into [(2, -1), (1, 1)]."""
    word = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise InputError(f"bad braid token {tok!r}")
        word.append((int(m.group(1)), int(m.group(2) or 1)))
    return word


def format_braid_word(word):
    return " ".join(
        f"g{i}^-1" if exp == -1 else f"g{i}" for i, exp in word
    )


def _tame_connected(quiver, classes):
    seq = ExceptionalSequence(quiver, tuple(classes))
    try:
        return affine_type(subcategory_quiver(seq)).is_affine
    except InternalCheckError:
        return False


def is_tame_type(iso):
    """Split index s when the sequence is of tame type: position n-1, the
    first s classes projective in the ambient category, and the rest
    generating a tame connected subcategory. None otherwise; s = 0 means
    the whole category is tame connected."""
    base = iso.base
    n = len(base)
    if iso.position != n - 1:
        return None
    projectives = set(base.quiver.projective_roots())
    p = 0
    while p < n - 2 and base.classes[p] in projectives:
        p += 1
    for s in range(0, p + 1):
        if _tame_connected(base.quiver, base.classes[s:]):
            return s
    return None


def reduce_to_tame_type(iso, budget=10000):
    """Best-first search through the braid orbit for a tame-type
    sequence, preferring states with the shortest root; returns the braid
    word and the sequence it reaches. The budget counts generator
    applications."""
    n = len(iso.base)
    if n == 2:
        s = is_tame_type(iso)
        if s is None:
            raise InternalCheckError("rank-2 isotropic type must be tame type")
        return [], iso
    start_key = (iso.base.classes, iso.position)
    states = {start_key: iso}
    came = {start_key: None}
    heap = [(sum(iso.root_type), iso.root_type, iso.base.classes, iso.position)]
    popped = set()
    spent = 0
    while heap:
        _, _, cls, pos = heappop(heap)
        key = (cls, pos)
        if key in popped:
            continue
        popped.add(key)
        cur = states[key]
        if is_tame_type(cur) is not None:
            word = []
            walk = key
            while came[walk] is not None:
                walk, move = came[walk]
                word.append(move)
            check = apply_braid(states[start_key], word)
            if check != cur:
                raise InternalCheckError("braid word does not replay the search")
            return word, cur
        for i in range(1, n - 1):
            for exp in (1, -1):
                if i == cur.position and cur.position == n - 1:
                    continue
                if spent >= budget:
                    raise BudgetExhausted(
                        f"no tame-type sequence within {budget} generator "
                        "applications"
                    )
                spent += 1
                nxt = gamma(cur, i, exp)
                nkey = (nxt.base.classes, nxt.position)
                if nkey not in states:
                    states[nkey] = nxt
                    came[nkey] = (key, (i, exp))
                    heappush(
                        heap,
                        (
                            sum(nxt.root_type),
                            nxt.root_type,
                            nxt.base.classes,
                            nxt.position,
                        ),
                    )
    raise InternalCheckError(
        "braid orbit exhausted without reaching a tame-type sequence"
    )


def _box_rows(bound, n, first):
    """Integer grid [0..bound]^n with fixed first coordinate, as rows."""
    ranges = [np.arange(bound + 1, dtype=np.int64)] * (n - 1)
    grid = np.meshgrid(*ranges, indexing="ij") if n > 1 else []
    rows = (
        np.stack([g.ravel() for g in grid], axis=1)
        if n > 1
        else np.zeros((1, 0), dtype=np.int64)
    )
    first_col = np.full((rows.shape[0], 1), first, dtype=np.int64)
    return np.concatenate([first_col, rows], axis=1)


def brute_isotropic_filter(quiver, bound):
    """All isotropic Schur roots with coordinates <= bound, by exhaustive
    scan: the quadratic form vanishes and the root is Schur."""
    if bound < 1:
        raise InputError("bound must be at least 1")
    e = np.array(quiver.euler_matrix(), dtype=np.int64)
    out = []
    for first in range(bound + 1):
        rows = _box_rows(bound, quiver.n, first)
        vals = ((rows @ e) * rows).sum(axis=1)
        hit = rows[(vals == 0) & (rows.sum(axis=1) > 0)]
        for row in hit:
            d = tuple(int(x) for x in row)
            if is_schur_root(quiver, d):
                out.append(d)
    return sorted(out)


def _affine_seed_roots(quiver, bound):
    """Null roots of affine full subquivers, embedded with zeros."""
    n = quiver.n
    seeds = set()
    for mask in range(1, 1 << n):
        idx = [v for v in range(n) if mask >> v & 1]
        if len(idx) < 2:
            continue
        sub = quiver.full_subquiver([quiver.labels[v] for v in idx])
        if not sub.is_connected():
            continue
        aff = affine_type(sub)
        if not aff.is_affine:
            continue
        root = [0] * n
        for k, v in enumerate(idx):
            root[v] = aff.null_root[k]
        if max(root) <= bound:
            seeds.add(tuple(root))
    return seeds


def _tame_pairs(quiver, delta):
    """All splittings delta = v + w into an exceptional pair of real
    Schur roots with <w, v> = -2, in ascending order of v."""
    from itertools import product

    pairs = []
    for v in product(*(range(x + 1) for x in delta)):
        if not any(v) or v == delta:
            continue
        w = tuple(a - b for a, b in zip(delta, v))
        if quiver.pair(v, v) != 1 or quiver.pair(w, w) != 1:
            continue
        if quiver.pair(w, v) != -2:
            continue
        if generic_hom_ext(quiver, v, w) != (0, 0):
            continue
        if not is_schur_root(quiver, v) or not is_schur_root(quiver, w):
            continue
        pairs.append((v, w))
    return pairs


def _completions(quiver, u, v, xbound):
    """Exceptional classes X making (X, u, v) a valid triple, coordinates
    <= xbound. Vectorized prefilter on the Tits form and the two vanishing
    pairings, then exact validation."""
    e = np.array(quiver.euler_matrix(), dtype=np.int64)
    eu = e @ np.array(u, dtype=np.int64)
    ev = e @ np.array(v, dtype=np.int64)
    out = []
    for first in range(xbound + 1):
        rows = _box_rows(xbound, quiver.n, first)
        tits = ((rows @ e) * rows).sum(axis=1)
        keep = (tits == 1) & (rows @ eu == 0) & (rows @ ev == 0)
        for row in rows[keep]:
            x = tuple(int(c) for c in row)
            try:
                validate_sequence(quiver, [x, u, v])
            except InputError:
                continue
            out.append(x)
    return out


def _orbit_window(simples, phi, start_coords, bound):
    """Roots of the relative Coxeter orbit through start_coords whose
    embedded coordinates stay <= bound. Root lengths along the orbit dip
    to a single minimum, so each direction stops once the length grows
    past the bound."""
    n = len(simples[0])

    def embed(c):
        return tuple(
            sum(ck * s[j] for ck, s in zip(c, simples)) for j in range(n)
        )

    found = []
    start = embed(start_coords)
    for direction in (1, -1):
        mat = phi if direction == 1 else mat_inv_int(phi)
        coords = start_coords
        prev = start
        while True:
            coords = tuple(mat_vec(mat, coords))
            cur = embed(coords)
            if cur == start:
                break
            if any(x < 0 for x in cur):
                raise InternalCheckError(
                    f"relative Coxeter orbit left the positive cone at {cur}"
                )
            if max(cur) <= bound:
                found.append(cur)
            elif sum(cur) > sum(prev):
                break
            prev = cur
    if max(start) <= bound:
        found.append(start)
    return found


def enumerate_isotropic(quiver, bound):
    """All isotropic Schur roots with coordinates <= bound: closure of
    the affine-full-subquiver null roots under completing the tame pair
    with an exceptional class and applying relative Coxeter powers inside
    the rank-3 subcategory. Every emitted root is re-verified."""
    if bound < 1:
        raise InputError("bound must be at least 1")
    found = set()
    for root in _affine_seed_roots(quiver, bound):
        _verify_isotropic(quiver, root)
        found.add(root)
    frontier = sorted(found)
    done_triples = set()
    while frontier:
        fresh = []
        for root in frontier:
            for u, v in _tame_pairs(quiver, root):
                for x in _completions(quiver, u, v, 2 * bound):
                    seq = validate_sequence(quiver, [x, u, v])
                    simples = reduce_to_simples(seq).classes
                    if simples in done_triples:
                        continue
                    done_triples.add(simples)
                    coords = _lattice_coords(simples, root)
                    if coords is None:
                        raise InternalCheckError(
                            f"{root} is not in the lattice of its own triple"
                        )
                    phi = relative_coxeter(seq)
                    for emitted in _orbit_window(simples, phi, coords, bound):
                        if emitted not in found:
                            _verify_isotropic(quiver, emitted)
                            found.add(emitted)
                            fresh.append(emitted)
        frontier = sorted(fresh)
    return sorted(found)


def _verify_isotropic(quiver, root):
    if quiver.pair(root, root) != 0:
        raise InternalCheckError(f"constructed root {root} is not isotropic")
    if not is_schur_root(quiver, root):
        raise InternalCheckError(f"constructed root {root} is not Schur")


def probe_orbits(quiver, bound, budget=10000, member_bound=12):
    """Experimental: for each isotropic Schur root within the bound,
    build a standard isotropic-type sequence and reduce it; report the
    tame root type reached, or None when a search budget runs out."""
    rows = []
    for root in enumerate_isotropic(quiver, bound):
        entry = {"root": root, "tame_root": None, "word": None}
        try:
            ms, u, v = _stable_sequence_and_pair(quiver, root, member_bound)
            iso = iso_type_sequence(
                quiver, list(ms) + [u, v], position=quiver.n - 1
            )
            word, tame = reduce_to_tame_type(iso, budget)
            entry["tame_root"] = tame.root_type
            entry["word"] = format_braid_word(word)
        except BudgetExhausted:
            pass
        rows.append(entry)
    return rows
