"""Pair-relative (i,j)-closures, the D-closure, and p-separatedness.

The two closure operators take a cover pair (Y, Z) with Y | Z == X;
the halves may overlap and may be empty.  All results are reported in
parent coordinates.
"""

from dataclasses import dataclass

from .bispace import BiSpace, check_ij
from .errors import CoverViolation
from .sets import full_mask


@dataclass(frozen=True)
class CoverPair:
    y: int
    z: int
    n: int

    def __post_init__(self):
        if self.y | self.z != full_mask(self.n):
            raise CoverViolation("cover pair must satisfy Y | Z == X")


def ij_closure_pair(b: BiSpace, i: int, j: int, a: int, p: CoverPair) -> int:
    """(i,j)-cl A(Y,Z) = i-cl(A & Y) | j-cl(A & (Z \\ Y))."""
    check_ij(i, j)
    if p.n != b.n:
        raise CoverViolation("cover pair built for a different ground set")
    return (b.top(i).cl_table[a & p.y]
            | b.top(j).cl_table[a & (p.z & ~p.y)])


def d_closure(b: BiSpace, a: int, p: CoverPair) -> int:
    """D-cl A(Y,Z): glue the two mixed closures along their own halves."""
    swapped = CoverPair(p.z, p.y, p.n)
    return ((ij_closure_pair(b, 1, 2, a, p) & p.y)
            | (ij_closure_pair(b, 2, 1, a, swapped) & p.z))


def is_d_closed(b: BiSpace, a: int, p: CoverPair) -> bool:
    return d_closure(b, a, p) == a


def p_separated(b: BiSpace, a: int, c: int) -> bool:
    """(1-cl A & B) | (A & 2-cl B) empty; the argument order matters."""
    return (b.t1.cl_table[a] & c) == 0 and (a & b.t2.cl_table[c]) == 0
