"""Extended tangent spaces of matrix families and their codimension tau.

The group acting is the product of congruence (sym/sk) or left-right (sq)
matrix actions with coordinate changes of the source.  Its tangent space at a
family M is spanned by the partial derivatives dM/dx_i together with the
infinitesimal matrix actions; tau is the codimension of that span inside the
free module of all deformations, computed degree by degree with exact
arithmetic when the family is quasi-homogeneous.
"""

from __future__ import annotations

import math

from .algebra import Poly, independent_positions
from .families import solve_weights
from .quotient import (NonQuasiHomogeneousError, SubmodulePresentation,
                       graded_quotient_dim, truncated_quotient_dim)

EQUIVALENCES = ("sl", "gl")


def _unit_matrix_action(M, side, j, l):
    """E_jl * M (side 'left') or M * E_lj (side 'right') as an n x n grid."""
    n = len(M)
    zero = M[0][0] * 0
    rows = [[zero for _ in range(n)] for _ in range(n)]
    if side == "left":
        for b in range(n):
            rows[j][b] = M[l][b]
    else:
        for a in range(n):
            rows[a][j] = M[a][l]
    return rows


def _grid_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _grid_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _flatten(grid, positions):
    return tuple(grid[i][j] for (i, j) in positions)


def tangent_space(fam, equiv="sl"):
    """Presentation of the extended tangent space at the parameter-free germ.

    Generators come in a fixed order: the derivatives dM/dx_i in variable
    order, then the matrix-action fields row-major in (j, l).  For congruence
    kinds each action is E_jl M + M E_jl^T; for the two-sided square action
    the left and right families are listed separately.  Under 'sl' the
    diagonal actions are replaced by their trace-free differences
    (E_jj - E_11) so only the determinant-preserving subgroup acts.
    """
    if equiv not in EQUIVALENCES:
        raise ValueError("equiv must be one of %s" % (EQUIVALENCES,))
    germ = fam.specialize_params()
    n = germ.n
    positions = independent_positions(germ.kind, n)
    M = [[germ.matrix[i, j] for j in range(n)] for i in range(n)]
    gens = []
    for v in germ.vars:
        gens.append(_flatten([[e.diff(v) for e in row] for row in M], positions))
    if germ.kind in ("sym", "sk"):
        # congruence action: A |-> E_jl A + A E_jl^T
        def action(j, l):
            return _grid_add(_unit_matrix_action(M, "left", j, l),
                             _unit_matrix_action(M, "right", j, l))

        for j in range(n):
            for l in range(n):
                if j == l:
                    if equiv == "gl":
                        gens.append(_flatten(action(j, j), positions))
                    elif j > 0:
                        gens.append(_flatten(_grid_sub(action(j, j), action(0, 0)),
                                             positions))
                else:
                    gens.append(_flatten(action(j, l), positions))
    else:
        for side in ("left", "right"):
            def action(j, l, side=side):
                return _unit_matrix_action(M, side, j, l)

            for j in range(n):
                for l in range(n):
                    if j == l:
                        if equiv == "gl":
                            gens.append(_flatten(action(j, j), positions))
                        elif j > 0:
                            gens.append(_flatten(_grid_sub(action(j, j), action(0, 0)),
                                                 positions))
                    else:
                        gens.append(_flatten(action(j, l), positions))
    ws = solve_weights(germ)
    if ws is None:
        shifts = (0,) * len(positions)
        weights = None
    else:
        shifts = tuple(ws.entry_degrees[i][j] for (i, j) in positions)
        weights = dict(ws.var_weights)
    gens = [g for g in gens if any(not p.is_zero() for p in g)]
    return SubmodulePresentation(rank=len(positions), vars=germ.vars,
                                 generators=gens, shifts=shifts, weights=weights)


def tjurina(fam, equiv="sl", degree_cap=None, truncation_order=None):
    """Codimension of the extended tangent space: the number of independent
    deformation directions of the family.  math.inf when not finite."""
    pres = tangent_space(fam, equiv)
    if pres.weights is not None:
        return graded_quotient_dim(pres, degree_cap=degree_cap).value
    if truncation_order is None:
        raise NonQuasiHomogeneousError(
            "family is not quasi-homogeneous with positive weights; "
            "pass a truncation_order for an uncertified value")
    return truncated_quotient_dim(pres, truncation_order)


def tjurina_report(fam, equiv="sl", degree_cap=None):
    """tjurina plus the full per-degree report (quasi-homogeneous only)."""
    pres = tangent_space(fam, equiv)
    if pres.weights is None:
        raise NonQuasiHomogeneousError(
            "family is not quasi-homogeneous with positive weights")
    report = graded_quotient_dim(pres, degree_cap=degree_cap)
    return report.value, report
