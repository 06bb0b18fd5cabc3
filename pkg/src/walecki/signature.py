"""Binary signatures and the complementing register shift.

A signature is a string over {0,1} of length m >= 1, written with entry 0
first.  Signatures select the orientation of each Hamilton cycle in the
Walecki decomposition of K_{2m+1}; the register shift acting on signatures
mirrors the rotation symmetry of the decomposition, so signatures in the
same shift orbit always yield isomorphic tournaments.
"""

from itertools import product


def check_signature(u: str) -> str:
    """Validate a signature string and return it unchanged."""
    if not isinstance(u, str) or len(u) == 0:
        raise ValueError("signature must be a non-empty string over {0,1}")
    if any(c not in "01" for c in u):
        raise ValueError(f"signature must contain only 0 and 1: {u!r}")
    return u


def register_shift(u: str, i: int = 1) -> str:
    """Shift every entry of ``u`` right by ``i`` positions, cyclically.

    An entry that wraps past the end back to the front is complemented.
    One step sends u_0...u_{m-1} to (1-u_{m-1}) u_0 ... u_{m-2}.  The
    single step has order 2m, so ``i`` is reduced mod 2m; negative ``i``
    gives inverse shifts.
    """
    check_signature(u)
    i %= 2 * len(u)
    for _ in range(i):
        u = ("1" if u[-1] == "0" else "0") + u[:-1]
    return u


def complement(u: str) -> str:
    """Replace every 0 with a 1 and every 1 with a 0."""
    check_signature(u)
    return "".join("1" if c == "0" else "0" for c in u)


def is_antiperiodic(u: str) -> bool:
    """True iff ``u`` has even length 2k and u_{i+k} != u_i for all i < k.

    Equivalently, the second half of ``u`` is the complement of the first
    half.  Odd-length signatures are never anti-periodic.
    """
    check_signature(u)
    if len(u) % 2 != 0:
        return False
    k = len(u) // 2
    return all(u[i + k] != u[i] for i in range(k))


def enumerate_antiperiodic(k: int) -> list[str]:
    """All 2^k anti-periodic signatures of length 2k, sorted.

    The first k entries are free and the rest are forced, so the list is
    in lexicographic order of the first k bits.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = []
    for bits in product("01", repeat=k):
        head = "".join(bits)
        out.append(head + complement(head))
    return out


def shift_orbit(u: str) -> frozenset[str]:
    """The orbit of ``u`` under the cyclic group of register shifts.

    Contains ``u`` itself; its size divides 2m.
    """
    check_signature(u)
    return frozenset(register_shift(u, j) for j in range(2 * len(u)))


def orbit_canonical(u: str) -> str:
    """Lexicographically smallest member of ``shift_orbit(u)``.

    Equal for any two signatures in the same orbit, which makes it usable
    as a deduplication key in censuses.
    """
    return min(shift_orbit(u))
