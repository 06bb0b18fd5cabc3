"""Triangle censuses through a fixed arc.

Every third vertex seen from an arc a = (x, y) plays exactly one of four
roles: the triangle is *directed* (the other two arcs run head to tail),
a *bypass* (a runs source to sink past the middle vertex), an *out*
triangle (both other arcs leave a's endpoints) or an *in* triangle.  In a
regular tournament on 2m+1 vertices the four counts are rigidly linked:

    o(a) = i(a),  b(a) = m - 1 - i(a),  d(a) = m - i(a)

so in particular every arc lies in at least one directed triangle, and an
arc in a unique directed triangle has b(a) = 0.

The checks in this module aim at arcs with d(a) = 1: in every Walecki
tournament on at least 7 vertices the third vertex of such an arc's
triangle turns out to be the hub, which pins the hub under all
automorphisms (see `walecki.symmetry`).
"""

import enum
import io
from dataclasses import dataclass

import numpy as np

from .core import Arc, Tournament, vertex_label
from .signature import register_shift


class TriangleType(enum.Enum):
    """Role of a triangle from the perspective of one of its arcs."""

    IN = "in"
    OUT = "out"
    BYPASS = "bypass"
    DIRECTED = "directed"


@dataclass(frozen=True)
class TriangleProfile:
    """Counts of in/out/bypass/directed triangles through one arc."""

    in_count: int
    out_count: int
    bypass_count: int
    directed_count: int

    @property
    def total(self) -> int:
        return self.in_count + self.out_count + self.bypass_count + self.directed_count


def _require_arc(T: Tournament, a: Arc) -> Arc:
    x, y = a
    if not T.beats(x, y):
        raise ValueError(f"({x}, {y}) is not an arc of {T!r}")
    return a


def triangle_type(T: Tournament, a: Arc, ell: int) -> TriangleType:
    """Classify the triangle on arc ``a`` and third vertex ``ell``."""
    x, y = _require_arc(T, a)
    if ell == x or ell == y:
        raise ValueError("third vertex coincides with an arc endpoint")
    if T.beats(y, ell):
        return TriangleType.OUT if T.beats(x, ell) else TriangleType.DIRECTED
    return TriangleType.BYPASS if T.beats(x, ell) else TriangleType.IN


def arc_profile(T: Tournament, a: Arc) -> TriangleProfile:
    """Triangle counts through ``a`` over all N-2 third vertices."""
    x, y = _require_arc(T, a)
    B = T.matrix
    row_x, row_y = B[x], B[y]
    col_x, col_y = B[:, x], B[:, y]
    # The endpoints themselves never satisfy the combined conditions, so
    # no explicit exclusion is needed.
    return TriangleProfile(
        in_count=int(np.count_nonzero(col_x & col_y)),
        out_count=int(np.count_nonzero(row_x & row_y)),
        bypass_count=int(np.count_nonzero(row_x & col_y)),
        directed_count=int(np.count_nonzero(row_y & col_x)),
    )


def unique_triangle_arcs(T: Tournament) -> list[tuple[Arc, int]]:
    """Arcs lying in exactly one directed triangle, with its third vertex.

    Sorted by (tail, head); the hub's index is largest, so it sorts last.
    """
    out = []
    B = T.matrix
    for x, y in T.arcs():
        thirds = B[y] & B[:, x]
        if int(np.count_nonzero(thirds)) == 1:
            out.append(((x, y), int(np.nonzero(thirds)[0][0])))
    return out


def check_unique_star(T: Tournament) -> bool:
    """True iff every arc in a unique directed triangle closes at the hub.

    Only meaningful on 7 or more vertices; the 5-vertex tournament has
    unique-triangle arcs that close elsewhere and is refused outright.
    """
    if T.num_vertices < 7:
        raise ValueError("hub-uniqueness is only defined for 7 or more vertices")
    return all(third == T.star for _, third in unique_triangle_arcs(T))


def _allowed_allones_pairs(T: Tournament) -> set[frozenset[int]]:
    # Vertex pairs {i, i+m} such that the signature is the i-fold shift of
    # the all-ones signature.
    ones = "1" * T.m
    pairs = set()
    for i in range(T.n):
        if register_shift(ones, i) == T.signature:
            pairs.add(frozenset({i % T.n, (i + T.m) % T.n}))
    return pairs


def check_parity_condition(T: Tournament) -> bool:
    """Endpoint condition on arcs that lie in a unique directed triangle.

    Each such arc must either join two ring vertices of the same parity,
    or (for odd m, with the signature a shift of all-ones by i) join the
    ring vertices i and i+m.  Vacuously true when no arc qualifies.
    """
    if T.num_vertices < 7:
        raise ValueError("parity condition is only defined for 7 or more vertices")
    if T.signature is None:
        raise ValueError("tournament carries no signature")
    special = _allowed_allones_pairs(T) if T.m % 2 == 1 else set()
    for (x, y), _ in unique_triangle_arcs(T):
        if x == T.star or y == T.star:
            return False
        if (x - y) % 2 == 0:
            continue
        if frozenset({x, y}) not in special:
            return False
    return True


def profile_csv(T: Tournament) -> str:
    """Per-arc census as CSV.

    Columns: tail, head, the four counts, and the unique directed
    triangle's third vertex (blank unless directed_count = 1).
    """
    buf = io.StringIO()
    buf.write("tail,head,in,out,bypass,directed,unique_third_vertex\n")
    B = T.matrix
    for x, y in T.arcs():
        p = arc_profile(T, (x, y))
        third = ""
        if p.directed_count == 1:
            thirds = B[y] & B[:, x]
            third = vertex_label(int(np.nonzero(thirds)[0][0]), T.n)
        buf.write(
            f"{vertex_label(x, T.n)},{vertex_label(y, T.n)},"
            f"{p.in_count},{p.out_count},{p.bypass_count},{p.directed_count},{third}\n"
        )
    return buf.getvalue()
