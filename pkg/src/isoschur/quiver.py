"""Acyclic quivers, the Euler form and the Coxeter transformation.

Conventions used throughout the package:

* vertices are labelled strings; dimension vectors are integer tuples in
  vertex order;
* the Euler matrix is E[i][j] = delta_ij - #(arrows i -> j), so the Euler
  pairing is <a, b> = a^T E b = sum_i a_i b_i - sum_{arrows t->h} a_t b_h;
* the Coxeter matrix is Phi = -E^{-1} E^T acting on column vectors, with
  inverse Phi^{-1} = -E^{-T} E;
* projective and injective class vectors are d_P(x) = E^{-T} e_x and
  d_I(x) = E^{-1} e_x, satisfying Phi d_P(x) = -d_I(x).
"""

from dataclasses import dataclass
from math import lcm

from .errors import InputError, InternalCheckError
from .intlinalg import (
    charpoly,
    kernel_basis,
    mat_inv_int,
    mat_mul,
    mat_vec,
    primitive,
    transpose,
)


class Quiver:
    """A finite acyclic quiver with labelled vertices.

    Arrows are (tail_index, head_index) pairs; parallel arrows are allowed,
    loops and oriented cycles are not.
    """

    def __init__(self, labels, arrows):
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != len(labels):
            raise InputError("duplicate vertex labels")
        if not labels:
            raise InputError("quiver needs at least one vertex")
        self.labels = labels
        self.n = len(labels)
        arr = []
        for t, h in arrows:
            t, h = int(t), int(h)
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise InputError("arrow endpoint out of range")
            if t == h:
                raise InputError("loops are not allowed")
            arr.append((t, h))
        self.arrows = tuple(arr)
        self._check_acyclic()
        self.key = (self.n, tuple(sorted(self.arrows)))
        self._euler = None
        self._euler_inv = None
        self._coxeter = None
        self._coxeter_inv = None

    @classmethod
    def from_labelled_arrows(cls, labels, labelled_arrows):
        labels = [str(x) for x in labels]
        index = {lab: i for i, lab in enumerate(labels)}
        arrows = []
        for t, h in labelled_arrows:
            t, h = str(t), str(h)
            if t not in index or h not in index:
                raise InputError(f"arrow endpoint {t!r}->{h!r} not a vertex")
            arrows.append((index[t], index[h]))
        return cls(labels, arrows)

    def _check_acyclic(self):
        indeg = [0] * self.n
        for _, h in self.arrows:
            indeg[h] += 1
        queue = [i for i in range(self.n) if indeg[i] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for t, h in self.arrows:
                if t == v:
                    indeg[h] -= 1
                    if indeg[h] == 0:
                        queue.append(h)
        if seen != self.n:
            raise InputError("quiver has an oriented cycle")

    def index_of(self, label):
        label = str(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no vertex labelled {label!r}") from None

    def check_vector(self, v):
        v = tuple(int(x) for x in v)
        if len(v) != self.n:
            raise InputError(
                f"vector of length {len(v)}, quiver has {self.n} vertices"
            )
        return v

    def euler_matrix(self):
        if self._euler is None:
            counts = [[0] * self.n for _ in range(self.n)]
            for t, h in self.arrows:
                counts[t][h] += 1
            self._euler = tuple(
                tuple((1 if i == j else 0) - counts[i][j] for j in range(self.n))
                for i in range(self.n)
            )
        return self._euler

    def euler_inverse(self):
        if self._euler_inv is None:
            self._euler_inv = mat_inv_int(self.euler_matrix())
        return self._euler_inv

    def pair(self, a, b):
        """Euler pairing <a, b>."""
        total = sum(x * y for x, y in zip(a, b))
        for t, h in self.arrows:
            total -= a[t] * b[h]
        return total

    def tits(self, a):
        return self.pair(a, a)

    def coxeter_matrix(self):
        if self._coxeter is None:
            e = self.euler_matrix()
            self._coxeter = tuple(
                tuple(-x for x in row)
                for row in mat_mul(self.euler_inverse(), transpose(e))
            )
        return self._coxeter

    def coxeter_inverse(self):
        if self._coxeter_inv is None:
            e = self.euler_matrix()
            inv_t = transpose(self.euler_inverse())
            self._coxeter_inv = tuple(
                tuple(-x for x in row) for row in mat_mul(inv_t, e)
            )
        return self._coxeter_inv

    def coxeter_apply(self, x, k=1):
        """Phi^k x for any integer k, exactly."""
        x = tuple(int(v) for v in x)
        mat = self.coxeter_matrix() if k >= 0 else self.coxeter_inverse()
        for _ in range(abs(k)):
            x = mat_vec(mat, x)
        return x

    def projective_root(self, x):
        return tuple(row[x] for row in transpose(self.euler_inverse()))

    def injective_root(self, x):
        return tuple(row[x] for row in self.euler_inverse())

    def projective_roots(self):
        return [self.projective_root(i) for i in range(self.n)]

    def injective_roots(self):
        return [self.injective_root(i) for i in range(self.n)]

    def full_subquiver(self, labels):
        """The full subquiver on a subset of vertices, in original order."""
        idx = sorted(set(self.index_of(lab) for lab in labels))
        pos = {v: k for k, v in enumerate(idx)}
        arrows = [
            (pos[t], pos[h]) for t, h in self.arrows if t in pos and h in pos
        ]
        return Quiver([self.labels[v] for v in idx], arrows)

    def is_connected(self):
        if self.n == 1:
            return True
        adj = [set() for _ in range(self.n)]
        for t, h in self.arrows:
            adj[t].add(h)
            adj[h].add(t)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def to_dot(self):
        lines = ["digraph quiver {"]
        for lab in self.labels:
            lines.append(f'  "{lab}";')
        for t, h in self.arrows:
            lines.append(f'  "{self.labels[t]}" -> "{self.labels[h]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Quiver({list(self.labels)}, {list(self.arrows)})"


def classify_self_pairing(quiver, d):
    """Tag a dimension vector by its self-pairing: real (1), isotropic (0),
    imaginary (< 0) or none (>= 2, not the class of a Schur representation)."""
    d = quiver.check_vector(d)
    q = quiver.tits(d)
    if q == 1:
        return "real", q
    if q == 0:
        return "isotropic", q
    if q < 0:
        return "imaginary", q
    return "none", q


@dataclass
class AffineType:
    is_affine: bool
    tag: str | None = None
    family: str | None = None
    null_root: tuple | None = None
    positive_semidefinite: bool = False
    corank: int | None = None


def _undirected_degrees(quiver):
    deg = [0] * quiver.n
    for t, h in quiver.arrows:
        deg[t] += 1
        deg[h] += 1
    return deg


def _cycle_orientation_counts(quiver):
    """Walk the unique cycle; count arrows agreeing / disagreeing with the
    walk direction. Assumes every vertex has undirected degree 2."""
    incident = [[] for _ in range(quiver.n)]
    for aid, (t, h) in enumerate(quiver.arrows):
        incident[t].append((aid, h, True))
        incident[h].append((aid, t, False))
    used = set()
    cur = 0
    p = q = 0
    for _ in range(len(quiver.arrows)):
        step = None
        for aid, other, forward in incident[cur]:
            if aid not in used:
                step = (aid, other, forward)
                break
        if step is None:
            raise InternalCheckError("cycle walk failed")
        aid, other, forward = step
        used.add(aid)
        if forward:
            p += 1
        else:
            q += 1
        cur = other
    return (max(p, q), min(p, q))


def _tree_tag(quiver):
    """Recognize an extended Dynkin tree shape; returns a tag or None."""
    n = quiver.n
    deg = _undirected_degrees(quiver)
    if max(deg) > 4:
        return None
    adj = [[] for _ in range(n)]
    for t, h in quiver.arrows:
        adj[t].append(h)
        adj[h].append(t)

    def arm_length(start, first):
        """Length of the path from a branch vertex into direction first,
        stopping at a leaf or another branch vertex."""
        length = 1
        prev, cur = start, first
        while deg[cur] == 2:
            nxt = [w for w in adj[cur] if w != prev]
            if len(nxt) != 1:
                return None
            prev, cur = cur, nxt[0]
            length += 1
        return length, cur

    branches = [v for v in range(n) if deg[v] >= 3]
    if len(branches) == 1:
        b = branches[0]
        arms = []
        for w in adj[b]:
            res = arm_length(b, w)
            if res is None:
                return None
            length, end = res
            if deg[end] != 1:
                return None
            arms.append(length)
        arms.sort()
        if deg[b] == 4 and arms == [1, 1, 1, 1]:
            return "D-tilde(4)"
        if deg[b] == 3:
            if arms == [2, 2, 2]:
                return "E-tilde(6)"
            if arms == [1, 3, 3]:
                return "E-tilde(7)"
            if arms == [1, 2, 5]:
                return "E-tilde(8)"
        return None
    if len(branches) == 2:
        b1, b2 = branches
        if deg[b1] != 3 or deg[b2] != 3:
            return None
        leaf_arms = {b1: 0, b2: 0}
        connecting = 0
        for b in branches:
            for w in adj[b]:
                res = arm_length(b, w)
                if res is None:
                    return None
                length, end = res
                if deg[end] == 1 and length == 1:
                    leaf_arms[b] += 1
                elif end in branches and end != b:
                    connecting += 1
        if leaf_arms[b1] == 2 and leaf_arms[b2] == 2 and connecting == 2:
            return f"D-tilde({n - 1})"
    return None


def affine_type(quiver):
    """Decide whether the quiver is of extended Dynkin (affine) type.

    The decision is made by the symmetrized Tits form: affine means connected,
    positive semidefinite of corank exactly one. The tag is then read off the
    underlying graph and the null root is the primitive positive kernel vector.
    """
    e = quiver.euler_matrix()
    t_mat = tuple(
        tuple(e[i][j] + e[j][i] for j in range(quiver.n)) for i in range(quiver.n)
    )
    # det(tI + T) has all coefficients >= 0 exactly when T is psd
    neg = tuple(tuple(-x for x in row) for row in t_mat)
    coeffs = charpoly(neg)
    psd = all(c >= 0 for c in coeffs)
    corank = 0
    for c in reversed(coeffs):
        if c == 0:
            corank += 1
        else:
            break
    if not (psd and corank == 1 and quiver.is_connected()):
        return AffineType(
            is_affine=False,
            tag="not-affine",
            positive_semidefinite=psd,
            corank=corank,
        )

    basis = kernel_basis(t_mat)
    if len(basis) != 1:
        raise InternalCheckError("corank-one form with kernel rank != 1")
    scale = lcm(*(x.denominator for x in basis[0]))
    null = primitive(tuple(int(x * scale) for x in basis[0]))
    if all(x <= 0 for x in null):
        null = tuple(-x for x in null)
    if not all(x > 0 for x in null):
        raise InternalCheckError("affine null root is not strictly positive")

    deg = _undirected_degrees(quiver)
    tag = None
    family = None
    if len(quiver.arrows) == quiver.n and all(d == 2 for d in deg):
        p, q = _cycle_orientation_counts(quiver)
        tag = f"A-tilde({p},{q})"
        family = "A"
    elif len(quiver.arrows) == quiver.n - 1:
        tag = _tree_tag(quiver)
        if tag is not None:
            family = tag[0]
    if tag is None:
        raise InternalCheckError(
            "affine form whose graph is not an extended Dynkin shape"
        )
    return AffineType(
        is_affine=True,
        tag=tag,
        family=family,
        null_root=null,
        positive_semidefinite=True,
        corank=1,
    )
