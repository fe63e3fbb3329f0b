"""The plausible-prior polytope {nu in the simplex : E nu = observed} and
its exact interrogation: membership, vertex enumeration, linear
minimization, and inclusion testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DimensionMismatch, InternalInvariantError
from .linalg import Matrix, Vector, _rref_lists, dot, rank
from .model import Action, Experiment, Prior, signal_distribution

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class IdentifiedSet:
    """The set of priors consistent with an observed signal distribution.

    Nonempty by construction (the generating prior is always a member),
    convex, and compact: an affine slice of the probability simplex.
    """

    experiment: Experiment
    observed: Vector

    @property
    def n(self) -> int:
        return self.experiment.n

    @cached_property
    def _vertices(self) -> tuple:
        # pure memo; a benign double-compute under races yields identical values
        return _enumerate_vertices(self.experiment.matrix, self.observed)


def identified_set(exp: Experiment, mu: Prior) -> IdentifiedSet:
    return IdentifiedSet(exp, signal_distribution(exp, mu))


def contains(s: IdentifiedSet, nu: Prior) -> bool:
    """Exact membership: nu is already a prior, so only E nu = observed is left."""
    if nu.n != s.n:
        raise DimensionMismatch(f"prior of length {nu.n} against {s.n} states")
    return s.experiment.matrix.matvec(nu.weights) == s.observed


def _enumerate_vertices(exp_matrix: Matrix, observed: Vector) -> tuple:
    """All vertices of {nu >= 0 : E nu = observed, sum nu = 1}.

    A vertex is a basic feasible solution: its support indexes linearly
    independent columns of the stacked constraint matrix [E; 1].  Scanning
    every candidate support of size up to the stacked rank and solving the
    restricted system exactly therefore finds the complete vertex set;
    duplicates from degenerate supports are removed by exact comparison.
    Supports are scanned by size then lexicographically, which fixes the
    output order.
    """
    n = exp_matrix.ncols
    stacked = [list(row) for row in exp_matrix.rows] + [[_ONE] * n]
    rhs = [*observed, _ONE]
    r = len(_rref_lists([row[:] for row in stacked], n))
    seen = set()
    out = []
    for size in range(1, r + 1):
        for support in itertools.combinations(range(n), size):
            aug = [
                [row[c] for c in support] + [b]
                for row, b in zip(stacked, rhs)
            ]
            pivots = _rref_lists(aug, size + 1)
            if pivots and pivots[-1] == size:
                continue  # pivot in the rhs column: inconsistent
            if len(pivots) < size:
                continue  # dependent support columns: not a basis
            point = [_ZERO] * n
            feasible = True
            for row_index, col_index in enumerate(pivots):
                value = aug[row_index][size]
                if value < 0:
                    feasible = False
                    break
                point[support[col_index]] = value
            if not feasible:
                continue
            key = tuple(point)
            if key not in seen:
                seen.add(key)
                out.append(Prior(key))
    return tuple(out)


def vertices(s: IdentifiedSet) -> tuple:
    """The complete, duplicate-free vertex list of the polytope."""
    verts = s._vertices
    if not verts:
        raise InternalInvariantError("identified set with no vertices")
    return verts


def is_singleton(s: IdentifiedSet) -> bool:
    """True iff the experiment pins the prior down exactly (full column rank)."""
    return rank(s.experiment.matrix) == s.n


def is_full_simplex(s: IdentifiedSet) -> bool:
    """True iff the experiment reveals nothing (rank one: identical columns)."""
    return rank(s.experiment.matrix) == 1


def min_linear(s: IdentifiedSet, act: Action):
    """Exact minimum of <payoffs, .> over the polytope and a minimizing vertex.

    Linear objectives over a compact polytope are minimized at a vertex, so
    a scan of the enumerated vertex list is exact; ties go to the earliest
    vertex in enumeration order.
    """
    if act.n != s.n:
        raise DimensionMismatch(f"action of length {act.n} against {s.n} states")
    best_value = None
    best_vertex = None
    for vert in vertices(s):
        value = dot(act.payoffs, vert.weights)
        if best_value is None or value < best_value:
            best_value = value
            best_vertex = vert
    return best_value, best_vertex


def subset_of(s: IdentifiedSet, t: IdentifiedSet) -> bool:
    """Whether every member of s also satisfies t's equality constraints.

    Checking t's equalities at s's vertices suffices: membership in t is
    an affine condition, so it holds on a convex hull iff it holds at the
    hull's extreme points, and the simplex constraints hold automatically
    because vertices are priors.
    """
    if s.n != t.n:
        raise DimensionMismatch(f"sets over {s.n} and {t.n} states")
    t_matrix = t.experiment.matrix
    return all(t_matrix.matvec(v.weights) == t.observed for v in vertices(s))
