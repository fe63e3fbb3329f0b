"""Experiments, priors, actions, decision problems, and the seeded
generators used by the property suites.

An experiment is a column-stochastic signal matrix: entry (t, j) is the
probability of signal t conditional on state j, so column j is the signal
distribution in state j and E @ mu is the aggregate signal distribution
under prior mu.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ColumnSumNotOne,
    DimensionMismatch,
    InvalidDistribution,
    InvalidGarbling,
    NegativeEntry,
)
from .linalg import Matrix, Vector, vector

_ZERO = Fraction(0)
_ONE = Fraction(1)


class StochasticityConvention(enum.Enum):
    """Which axis of a garbling matrix must sum to one."""

    ROW = "row"
    COLUMN = "column"


@dataclass(frozen=True)
class Experiment:
    """A validated column-stochastic matrix (signal rows, state columns)."""

    matrix: Matrix

    def __post_init__(self):
        for i, row in enumerate(self.matrix.rows):
            for j, entry in enumerate(row):
                if entry < 0:
                    raise NegativeEntry(i, j, entry)
        for j in range(self.matrix.ncols):
            total = sum(self.matrix.col(j), _ZERO)
            if total != 1:
                raise ColumnSumNotOne(j, total)

    @property
    def m(self) -> int:
        """Signal count."""
        return self.matrix.nrows

    @property
    def n(self) -> int:
        """State count."""
        return self.matrix.ncols


def validate_experiment(matrix: Matrix) -> Experiment:
    """Return the experiment iff the matrix is exactly column stochastic."""
    return Experiment(matrix)


def experiment(rows) -> Experiment:
    """Convenience: build and validate an experiment from row literals."""
    return Experiment(Matrix.from_rows(rows))


@dataclass(frozen=True)
class Prior:
    """A point of the probability simplex, exact."""

    weights: Vector

    def __post_init__(self):
        bad = next((w for w in self.weights if w < 0), None)
        if bad is not None:
            raise InvalidDistribution(f"negative weight {bad}")
        total = sum(self.weights, _ZERO)
        if total != 1:
            raise InvalidDistribution(f"weights sum to {total}, expected exactly 1")

    @property
    def n(self) -> int:
        return len(self.weights)

    def full_support(self) -> bool:
        return all(w > 0 for w in self.weights)


def prior(weights) -> Prior:
    return Prior(vector(weights))


def uniform_prior(n: int) -> Prior:
    return Prior(tuple(Fraction(1, n) for _ in range(n)))


def point_prior(n: int, i: int) -> Prior:
    """The degenerate prior placing weight 1 on state i."""
    return Prior(tuple(_ONE if j == i else _ZERO for j in range(n)))


@dataclass(frozen=True)
class Action:
    """A payoff vector: entry i is the payoff in state i."""

    payoffs: Vector

    @property
    def n(self) -> int:
        return len(self.payoffs)


def action(payoffs) -> Action:
    return Action(vector(payoffs))


@dataclass(frozen=True)
class DecisionProblem:
    """A prior together with a finite, nonempty set of actions."""

    prior: Prior
    actions: tuple

    def __post_init__(self):
        if not self.actions:
            raise InvalidDistribution("a decision problem needs at least one action")
        for a in self.actions:
            if a.n != self.prior.n:
                raise DimensionMismatch(
                    f"action of length {a.n} in a {self.prior.n}-state problem"
                )


def decision_problem(pri: Prior, actions) -> DecisionProblem:
    return DecisionProblem(pri, tuple(actions))


def signal_distribution(exp: Experiment, pri: Prior) -> Vector:
    """The aggregate signal distribution E @ mu; always a point of the m-simplex."""
    if pri.n != exp.n:
        raise DimensionMismatch(
            f"prior of length {pri.n} for an experiment with {exp.n} states"
        )
    return exp.matrix.matvec(pri.weights)


def validate_garbling(matrix: Matrix, convention: StochasticityConvention) -> Matrix:
    """Check nonnegativity and the stochasticity sums of a garbling matrix."""
    for i, row in enumerate(matrix.rows):
        for j, entry in enumerate(row):
            if entry < 0:
                raise InvalidGarbling(f"negative entry {entry} at ({i}, {j})")
    if convention is StochasticityConvention.ROW:
        for i in range(matrix.nrows):
            total = sum(matrix.row(i), _ZERO)
            if total != 1:
                raise InvalidGarbling(f"row {i} sums to {total}, expected 1")
    else:
        for j in range(matrix.ncols):
            total = sum(matrix.col(j), _ZERO)
            if total != 1:
                raise InvalidGarbling(f"column {j} sums to {total}, expected 1")
    return matrix


def _composition(rng: random.Random, parts: int, total: int):
    """Nonnegative integers of the given length summing to total."""
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0, *cuts, total]
    return [bounds[k + 1] - bounds[k] for k in range(parts)]


def _stochastic_vector(rng: random.Random, length: int, denominator: int) -> Vector:
    return tuple(
        Fraction(part, denominator)
        for part in _composition(rng, length, denominator)
    )


def random_experiment(m: int, n: int, seed: int, denominator_bound: int) -> Experiment:
    """A deterministic pseudo-random experiment.

    Each column is drawn from the lattice of m-simplex points with
    denominator denominator_bound and is exactly normalized by
    construction; the same (m, n, seed, denominator_bound) always yields
    the same experiment.
    """
    if m < 1 or n < 1 or denominator_bound < 1:
        raise ValueError("m, n, and denominator_bound must be at least 1")
    rng = random.Random(seed)
    cols = [_stochastic_vector(rng, m, denominator_bound) for _ in range(n)]
    return Experiment(Matrix(tuple(zip(*cols))))


def random_garbling(
    l: int,
    m: int,
    seed: int,
    convention: StochasticityConvention,
    denominator_bound: int = 12,
) -> Matrix:
    """A deterministic pseudo-random nonnegative l x m stochastic matrix.

    Rows sum to one under ROW, columns under COLUMN.
    """
    if l < 1 or m < 1 or denominator_bound < 1:
        raise ValueError("l, m, and denominator_bound must be at least 1")
    rng = random.Random(seed)
    if convention is StochasticityConvention.ROW:
        rows = tuple(_stochastic_vector(rng, m, denominator_bound) for _ in range(l))
        return Matrix(rows)
    cols = [_stochastic_vector(rng, l, denominator_bound) for _ in range(m)]
    return Matrix(tuple(zip(*cols)))


def random_prior(
    n: int,
    seed: int,
    denominator_bound: int = 24,
    full_support: bool = False,
) -> Prior:
    """A deterministic pseudo-random prior on the denominator lattice.

    With full_support=True every weight is at least 1/denominator_bound,
    which requires denominator_bound >= n.
    """
    if n < 1 or denominator_bound < 1:
        raise ValueError("n and denominator_bound must be at least 1")
    rng = random.Random(seed)
    if full_support:
        if denominator_bound < n:
            raise ValueError("full support needs denominator_bound >= n")
        parts = _composition(rng, n, denominator_bound - n)
        return Prior(
            tuple(Fraction(part + 1, denominator_bound) for part in parts)
        )
    return Prior(_stochastic_vector(rng, n, denominator_bound))
