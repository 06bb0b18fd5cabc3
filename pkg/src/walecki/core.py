"""Walecki tournaments on 2m+1 vertices.

The complete graph K_{2m+1} decomposes into m Hamilton cycles: take
vertices Z_n with n = 2m plus a hub vertex written ``*``, lay out the
zig-zag cycle

    C_0 = [*, 0, 1, -1, 2, -2, ..., m, *]

and rotate it: C_j is the image of C_0 under the ring rotation i -> i+j.
Orienting each cycle forward or backward according to a binary signature
u (forward where u_j = 1) produces a regular tournament W_u.

Vertices are encoded as plain ints: ring vertices are 0..n-1 and the hub
occupies the last slot, index n.  Adjacency is an N x N boolean matrix
with rows indexed by arc tails.

`build_tournament` constructs the adjacency from the explicit cycles;
`arc_direction` answers the same queries from a closed-form rule and is
kept deliberately independent so the two routes can cross-validate.
"""

from dataclasses import dataclass

import numpy as np

from .signature import check_signature

FORWARD = "+"
REVERSE = "-"

Arc = tuple[int, int]


def star_index(m: int) -> int:
    """Index of the hub vertex in a tournament with parameter m."""
    return 2 * m


def vertex_label(v: int, n: int) -> str:
    """Render a vertex index: ring vertices as decimals, the hub as ``*``."""
    return "*" if v == n else str(v)


@dataclass(frozen=True)
class DirectedHamCycle:
    """One directed Hamilton cycle of the decomposition.

    ``arcs`` walks the full cycle: N arcs visiting every vertex once.
    """

    base_index: int
    orientation: str
    arcs: tuple[Arc, ...]


def _zigzag(m: int) -> list[int]:
    # Ring offsets of the base cycle walk: 0, 1, -1, 2, -2, ..., m.
    seq = [0]
    for t in range(1, m):
        seq.append(t)
        seq.append(-t)
    seq.append(m)
    return seq


def cycle_arcs(m: int, j: int, orientation: str) -> DirectedHamCycle:
    """The directed Hamilton cycle C_j^+ or C_j^- on 2m+1 vertices.

    C_j^+ follows the rotated zig-zag walk [*, j, j+1, j-1, j+2, ..., j+m]
    and returns to the hub; C_j^- traverses the same walk backwards.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if not 0 <= j < m:
        raise IndexError(f"cycle index {j} out of range [0, {m})")
    if orientation not in (FORWARD, REVERSE):
        raise ValueError(f"orientation must be '+' or '-', got {orientation!r}")
    n = 2 * m
    walk = [star_index(m)] + [(j + d) % n for d in _zigzag(m)]
    arcs = [(walk[i], walk[i + 1]) for i in range(len(walk) - 1)]
    arcs.append((walk[-1], walk[0]))
    if orientation == REVERSE:
        arcs = [(h, t) for (t, h) in reversed(arcs)]
    return DirectedHamCycle(base_index=j, orientation=orientation, arcs=tuple(arcs))


class Tournament:
    """A tournament on Z_n union {*}, immutable after construction.

    Use `build_tournament` to obtain Walecki tournaments; `from_matrix`
    accepts any tournament adjacency (the symmetry routines work on
    arbitrary tournaments, e.g. deliberately corrupted ones in tests).
    """

    __slots__ = ("m", "n", "num_vertices", "star", "signature", "_matrix")

    def __init__(self, m: int, signature: str | None, matrix: np.ndarray):
        N = 2 * m + 1
        if matrix.shape != (N, N):
            raise ValueError(f"adjacency must be {N}x{N}, got {matrix.shape}")
        self.m = m
        self.n = 2 * m
        self.num_vertices = N
        self.star = star_index(m)
        self.signature = signature
        mat = matrix.astype(bool).copy()
        mat.setflags(write=False)
        self._matrix = mat

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, signature: str | None = None) -> "Tournament":
        N = matrix.shape[0]
        if N % 2 == 0 or N < 3:
            raise ValueError("a Walecki-sized tournament has an odd number >= 3 of vertices")
        return cls((N - 1) // 2, signature, matrix)

    @property
    def matrix(self) -> np.ndarray:
        """Read-only N x N boolean adjacency, rows indexed by arc tails."""
        return self._matrix

    def beats(self, x: int, y: int) -> bool:
        """True iff the arc between x and y points from x to y."""
        return bool(self._matrix[x, y])

    def arcs(self) -> list[Arc]:
        """All arcs sorted by (tail, head); the hub sorts last."""
        tails, heads = np.nonzero(self._matrix)
        return list(zip(tails.tolist(), heads.tolist()))

    def __repr__(self) -> str:
        sig = self.signature if self.signature is not None else "?"
        return f"Tournament(m={self.m}, signature={sig})"


def build_tournament(u: str) -> Tournament:
    """The Walecki tournament W_u: cycle C_j oriented forward iff u_j = 1."""
    check_signature(u)
    m = len(u)
    N = 2 * m + 1
    matrix = np.zeros((N, N), dtype=bool)
    for j, bit in enumerate(u):
        cycle = cycle_arcs(m, j, FORWARD if bit == "1" else REVERSE)
        for tail, head in cycle.arcs:
            matrix[tail, head] = True
    return Tournament(m, u, matrix)


def arc_direction(u: str, x: int, y: int) -> Arc:
    """Orientation of the edge {x, y} in W_u, in constant time.

    Derived from the cycle structure rather than from the built adjacency:

    * a hub edge {*, c} lies on cycle c mod m and leaves the hub iff
      (c < m and u_c = 1) or (c >= m and u_{c-m} = 0);
    * a ring edge {i, j} with i+j odd lies on cycle c = ((i+j-1) mod n)/2
      and, traversed forward, runs from c-l to c+1+l where l in [0, m-1]
      locates the edge in that cycle's zig family;
    * a ring edge with i+j even lies on cycle c = ((i+j) mod n)/2 and runs
      forward from c+l to c-l with l in [1, m-1].

    Halving is exact: (i+j-1) resp. (i+j) is even, and halving its residue
    mod n already lands in [0, m), which is the signature index.
    """
    check_signature(u)
    m = len(u)
    n = 2 * m
    star = star_index(m)
    if x == y:
        raise ValueError("an arc needs two distinct endpoints")
    for v in (x, y):
        if not 0 <= v <= star:
            raise ValueError(f"vertex {v} out of range for m={m}")

    if x == star or y == star:
        c = y if x == star else x
        cyc = c if c < m else c - m
        leaves_hub = (u[cyc] == "1") if c < m else (u[cyc] == "0")
        return (star, c) if leaves_hub else (c, star)

    if (x + y) % 2 == 1:
        c = ((x + y - 1) % n) // 2
        ell = (c - x) % n
        if ell <= m - 1 and (c + 1 + ell) % n == y:
            base = (x, y)
        else:
            ell = (c - y) % n
            base = (y, x)
    else:
        c = ((x + y) % n) // 2
        ell = (x - c) % n
        if 1 <= ell <= m - 1 and (c - ell) % n == y:
            base = (x, y)
        else:
            base = (y, x)
    return base if u[c] == "1" else (base[1], base[0])


def verify_decomposition(T: Tournament) -> bool:
    """Check T against its signature's cycle decomposition.

    True iff the m directed Hamilton cycles chosen by the signature are
    pairwise arc-disjoint and their union is exactly the arc set of T.
    """
    if T.signature is None:
        raise ValueError("tournament carries no signature to verify against")
    u = T.signature
    seen: set[Arc] = set()
    for j, bit in enumerate(u):
        cycle = cycle_arcs(T.m, j, FORWARD if bit == "1" else REVERSE)
        for arc in cycle.arcs:
            if arc in seen:
                return False
            seen.add(arc)
    return seen == set(T.arcs())


def to_text(T: Tournament) -> str:
    """Text dump: header line ``m=<int> u=<bits>`` then N adjacency rows."""
    sig = T.signature if T.signature is not None else "?"
    lines = [f"m={T.m} u={sig}"]
    for row in T.matrix:
        lines.append("".join("1" if b else "0" for b in row))
    return "\n".join(lines) + "\n"


def to_dot(T: Tournament) -> str:
    """DOT export for quick visual inspection; the hub renders as ``star``."""
    def name(v: int) -> str:
        return "star" if v == T.star else str(v)

    lines = ["digraph walecki {"]
    for tail, head in T.arcs():
        lines.append(f"    {name(tail)} -> {name(head)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
