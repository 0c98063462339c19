"""Boundary matrices over fixed bases and (co)homology at desk scale."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainSystem
from .errors import BasisTooLarge, ValidationError
from .linalg import (
    HomologyResult,
    LatticeBasis,
    homology_from_matrices,
    homology_mod_q,
    rank_mod_p,
    smith_normal_form,
)

DEFAULT_BASIS_CAP = 50_000


@dataclass
class BoundaryMatrix:
    kind: str
    degree: int
    quotient: bool
    rows: list          # dim C_{degree-1} x dim C_{degree}
    row_basis: tuple
    col_basis: tuple

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


def _capped_basis(sys: ChainSystem, kind: str, degree: int, cap: int):
    basis = sys.basis(kind, degree)
    if len(basis) > cap:
        raise BasisTooLarge(len(basis), cap)
    return basis


def boundary_matrix(sys: ChainSystem, kind: str, degree: int,
                    quotient: bool = False,
                    cap: int = DEFAULT_BASIS_CAP) -> BoundaryMatrix:
    """Matrix of the boundary in the fixed generator bases.

    With ``quotient`` the degenerate span is echelon-reduced, complement
    coordinates present the quotient, and the induced matrix is returned;
    this requires the span to be saturated (all pivot values 1), which holds
    for every family produced here and is checked.
    """
    cols = _capped_basis(sys, kind, degree, cap)
    rows_basis = _capped_basis(sys, kind, degree - 1, cap)
    if not quotient:
        index = sys.basis_index(kind, degree - 1)
        mat = [[0] * len(cols) for _ in rows_basis]
        for j, gen in enumerate(cols):
            for term, coeff in sys.boundary(kind, gen).terms.items():
                mat[index[term]][j] += coeff
        return BoundaryMatrix(kind, degree, False, mat, tuple(rows_basis), tuple(cols))

    top = _quotient_data(sys, kind, degree)
    bot = _quotient_data(sys, kind, degree - 1)
    mat = [[0] * len(top["free"]) for _ in bot["free"]]
    for j, gen in enumerate(top["free"]):
        img = sys.boundary(kind, gen)
        reduced = bot["reduce"]({bot["index"][g]: c for g, c in img.terms.items()})
        for pos, coeff in reduced.items():
            mat[bot["free_pos"][pos]][j] += coeff
    # induced map is well defined only if the boundary keeps the span inside
    for vec in sys.degenerate_generators(kind, degree):
        img = sys.boundary_chain(kind, vec)
        if not sys.in_degenerate_span(img):
            raise ValidationError(
                f"degenerate span of kind {kind} is not boundary-closed at degree {degree}")
    return BoundaryMatrix(kind, degree, True, mat, tuple(bot["free"]), tuple(top["free"]))


def _quotient_data(sys: ChainSystem, kind: str, degree: int):
    basis = sys.basis(kind, degree)
    index = sys.basis_index(kind, degree)
    lat = LatticeBasis()
    for vec in sys.degenerate_generators(kind, degree):
        lat.insert({index[g]: c for g, c in vec.terms.items()})
    for p, u in lat.pivots.items():
        if u[p] != 1:
            raise ValidationError(
                f"degenerate span of kind {kind} at degree {degree} is not saturated")
    pivot_set = set(lat.pivots)
    free = tuple(g for g in basis if index[g] not in pivot_set)
    free_pos = {index[g]: i for i, g in enumerate(free)}

    def reduce(vec):
        return lat.reduce(dict(vec))

    return {"basis": basis, "index": index, "free": free,
            "free_pos": free_pos, "reduce": reduce}


def homology(sys: ChainSystem, kind: str, degree: int, modulus: int = 0,
             quotient: bool = False, cap: int = DEFAULT_BASIS_CAP) -> HomologyResult:
    """ker/im at one degree, over Z (modulus 0) or Z_q."""
    d_n = boundary_matrix(sys, kind, degree, quotient, cap)
    d_up = boundary_matrix(sys, kind, degree + 1, quotient, cap)
    dim_n = len(d_n.col_basis)
    if modulus == 0:
        return homology_from_matrices(d_n.rows, d_up.rows, dim_n)
    return homology_mod_q(d_n.rows, d_up.rows, dim_n, modulus)


def cohomology_dim_snf(sys: ChainSystem, kind: str, degree: int, p: int,
                       quotient: bool = False, cap: int = DEFAULT_BASIS_CAP) -> int:
    """dim over F_p of degree-n cohomology, ranks taken from integer Smith forms."""
    d_n = boundary_matrix(sys, kind, degree, quotient, cap)
    d_up = boundary_matrix(sys, kind, degree + 1, quotient, cap)
    dim_n = len(d_n.col_basis)
    r_n = _rank_mod_p_from_snf(d_n.rows, p)
    r_up = _rank_mod_p_from_snf(d_up.rows, p)
    return dim_n - r_up - r_n


def _rank_mod_p_from_snf(rows, p: int) -> int:
    if not rows or not rows[0]:
        return 0
    snf = smith_normal_form(rows)
    return sum(1 for d in snf.diagonal() if d % p != 0)


def cohomology_dim_field(sys: ChainSystem, kind: str, degree: int, p: int,
                         quotient: bool = False, cap: int = DEFAULT_BASIS_CAP) -> int:
    """Same dimension by direct Gaussian elimination over F_p."""
    d_n = boundary_matrix(sys, kind, degree, quotient, cap)
    d_up = boundary_matrix(sys, kind, degree + 1, quotient, cap)
    dim_n = len(d_n.col_basis)
    r_n = rank_mod_p(d_n.rows, p) if d_n.rows and d_n.rows[0] else 0
    r_up = rank_mod_p(d_up.rows, p) if d_up.rows and d_up.rows[0] else 0
    return dim_n - r_up - r_n
