"""Binary strings under rotation and reversal.

Strings are plain ``str`` objects over "0"/"1"; the usual 1-based position i
corresponds to index i-1 here.  This module holds the validity predicates for
Fibonacci/Lucas strings, ordered enumeration, the dihedral action, the
period/root decomposition, orbit sizes under rotation+reversal, and the
constructive witnesses for prescribed orbit sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .formulas import divisors

FIBONACCI = "fibonacci"
LUCAS = "lucas"


def is_fibonacci(u: str) -> bool:
    """True iff u contains no two adjacent 1s."""
    return "11" not in u


def is_lucas(u: str) -> bool:
    """True iff u contains no two cyclically adjacent 1s.

    Equivalently: fibonacci-valid and not both starting and ending with 1.
    The length-1 string "1" starts and ends with 1, so it is not valid.
    """
    return "11" not in u and not (u != "" and u[0] == "1" and u[-1] == "1")


def enumerate_strings(n: int, kind: str) -> list[str]:
    """All valid strings of length n in ascending lexicographic order."""
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if kind not in (FIBONACCI, LUCAS):
        raise ValueError(f"unknown string kind {kind!r}")
    out: list[str] = []

    def emit(prefix: str, rem: int) -> None:
        if rem == 0:
            out.append(prefix)
            return
        emit(prefix + "0", rem - 1)
        if rem == 1:
            out.append(prefix + "1")
        else:
            emit(prefix + "10", rem - 2)

    emit("", n)
    if kind == LUCAS and n >= 1:
        out = [u for u in out if u[0] == "0" or u[-1] == "0"]
    return out


def weight(u: str) -> int:
    """Number of 1s in u."""
    return u.count("1")


def rotate(u: str, j: int) -> str:
    """Rotate right by j positions: the last j characters move to the front."""
    n = len(u)
    if n == 0:
        raise ValueError("cannot rotate the empty string")
    j %= n
    return u[-j:] + u[:-j] if j else u


@dataclass(frozen=True)
class Dihedral:
    """Element of the dihedral group acting on length-n strings.

    Represents rotation**shift when reflected is False, and
    rotation**shift composed after reversal when reflected is True.
    """

    shift: int
    reflected: bool = False

    @classmethod
    def identity(cls) -> "Dihedral":
        return cls(0, False)

    @classmethod
    def rotation(cls, j: int = 1) -> "Dihedral":
        return cls(j, False)

    @classmethod
    def reflection(cls, j: int = 0) -> "Dihedral":
        return cls(j, True)

    @classmethod
    def full_group(cls, n: int) -> list["Dihedral"]:
        """All 2n elements valid for strings of length n; rotations first."""
        if n < 1:
            raise ValueError(f"dihedral group needs n >= 1, got {n}")
        return [cls(j, r) for r in (False, True) for j in range(n)]


def apply(g: Dihedral, u: str) -> str:
    """Image of u under g: reversal first when g is reflected, then rotation."""
    n = len(u)
    if n == 0:
        raise ValueError("dihedral maps are undefined on the empty string")
    if not 0 <= g.shift < n:
        raise ValueError(f"shift {g.shift} out of range for length {n}")
    return rotate(u[::-1] if g.reflected else u, g.shift)


def period(u: str) -> int:
    """Smallest k > 0 such that rotating u by k fixes it; divides len(u)."""
    n = len(u)
    if n == 0:
        raise ValueError("the empty string has no period")
    for d in divisors(n):
        if u == u[:d] * (n // d):
            return d
    raise AssertionError("unreachable: every string is fixed by a full rotation")


class PeriodDecomposition(NamedTuple):
    period: int
    exponent: int
    root: str
    symmetric: bool  # symmetry class of the root


def decompose(u: str) -> PeriodDecomposition:
    """Period, exponent, primitive root, and the root's symmetry class.

    period * exponent == len(u) and root * exponent == u always hold.
    """
    n = len(u)
    if n == 0:
        raise ValueError("cannot decompose the empty string")
    p = period(u)
    root = u[:p]
    return PeriodDecomposition(p, n // p, root, root[::-1] in root + root)


def is_symmetric(u: str) -> bool:
    """True iff the orbit of u under rotation+reversal has size period(u).

    Decided on the primitive root: the root's reversal must occur among its
    rotations.  When that fails the orbit has size 2*period(u) instead.
    """
    if not u:
        raise ValueError("symmetry is undefined for the empty string")
    root = u[: period(u)]
    return root[::-1] in root + root


def orbit_size(u: str) -> int:
    """Size of the orbit of u under all rotations and reversals; divides 2*len(u)."""
    d = decompose(u)
    return d.period if d.symmetric else 2 * d.period


def dihedral_orbit(u: str) -> set[str]:
    """The set of all rotations of u and of its reversal."""
    n = len(u)
    if n == 0:
        raise ValueError("dihedral orbits are undefined for the empty string")
    doubled = u + u
    rev = u[::-1]
    rev_doubled = rev + rev
    return {doubled[i : i + n] for i in range(n)} | {rev_doubled[i : i + n] for i in range(n)}


def canonical_rep(u: str) -> str:
    """Lexicographically least element of the orbit of u under rotation+reversal."""
    return min(dihedral_orbit(u))


def asymmetric_witness(n: int) -> str:
    """A Lucas-valid primitive string of length n whose orbit has full size 2n.

    No such string exists below length 9, so those lengths are rejected.
    """
    if n < 9:
        raise ValueError(f"no asymmetric Lucas string exists for length {n} < 9")
    return "101001" + "0" * (n - 6)


def vertex_orbit_witness(n: int, k: int) -> str:
    """A Lucas-valid string of length n >= 3 whose orbit size is exactly k.

    Sizes k dividing n come from powers of a primitive symmetric block;
    the remaining realizable sizes are even k >= 18 dividing 2n, built from
    an asymmetric block of length k/2.
    """
    if n < 3:
        raise ValueError(f"witness construction requires n >= 3, got {n}")
    if k < 1:
        raise ValueError(f"orbit size must be positive, got {k}")
    if n % k == 0:
        if k == 1:
            return "0" * n
        return ("1" + "0" * (k - 1)) * (n // k)
    if k >= 18 and (2 * n) % k == 0:
        return asymmetric_witness(k // 2) * (2 * n // k)
    raise ValueError(f"no vertex orbit of size {k} exists for length {n}")
