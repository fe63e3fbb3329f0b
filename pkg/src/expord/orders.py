"""Orders between experiments and their certificates.

Two comparators live here.  The robust order holds iff the nullspace of
the stronger experiment is contained in the nullspace of the weaker one,
equivalently iff the weaker matrix factors linearly through the stronger
(E' = Gamma E for some Gamma, stochastic or not).  The garbling order
additionally requires Gamma to be nonnegative and stochastic, decided by
an exact feasibility LP.  When the robust order fails, a constructive
witness is produced: a full-support prior, a nullspace direction the
weaker experiment does not annihilate, a perturbed plausible prior, and a
max-margin separating action, packaged into a one-action decision problem
on which the supposedly-stronger experiment yields a strictly lower
worst-case value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatch,
    InternalInvariantError,
    PreconditionViolated,
)
from .identified import IdentifiedSet, contains, identified_set, vertices
from .linalg import (
    Matrix,
    Vector,
    dot,
    is_zero_vector,
    nullspace_basis,
    solve,
    vec_add,
    vec_scale,
    vec_sub,
)
from .model import (
    Action,
    DecisionProblem,
    Experiment,
    Prior,
    StochasticityConvention,
    uniform_prior,
    validate_experiment,
    validate_garbling,
)
from .simplex import OPTIMAL, find_feasible, solve_standard_form

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RobustnessWitness:
    """Constructive refutation of "E is robustly more informative than E'".

    Invariants, all exact:
      - E @ direction = 0 while E' @ direction != 0;
      - p = mu + lam * direction is a strictly interior prior, plausible
        under E but not under E';
      - <action, q> >= <action, p> + margin at every vertex q of the
        E'-identified set, with margin > 0;
      - hence the one-action problem (mu, {action}) has a strictly lower
        worst-case value under E than under E'.
    """

    mu: Prior
    direction: Vector
    lam: Fraction
    p: Prior
    action: Action
    margin: Fraction


@dataclass(frozen=True)
class ComparisonVerdict:
    """Outcome of a robust-order query, with certificate either way."""

    robustly_more_informative: bool
    gamma: Matrix | None
    witness: RobustnessWitness | None


@dataclass(frozen=True)
class GarblingResult:
    """Outcome of a garbling-feasibility query."""

    feasible: bool
    gamma: Matrix | None


def _nullspace_included(a: Matrix, b: Matrix) -> bool:
    """Whether every vector annihilated by a is annihilated by b."""
    return all(is_zero_vector(b.matvec(v)) for v in nullspace_basis(a))


def linear_factor(stronger: Experiment, weaker: Experiment):
    """A matrix Gamma with weaker = Gamma @ stronger, or None.

    Exists iff the nullspace of the stronger experiment is contained in
    the weaker one's, in which case each row of the weaker matrix lies in
    the row space of the stronger and one exact solve per row recovers a
    factor.  Free coefficients are set to zero, which makes the result
    deterministic; for full-rank square experiments the factor is unique.
    """
    if stronger.n != weaker.n:
        raise DimensionMismatch(
            f"experiments over {stronger.n} and {weaker.n} states"
        )
    transposed = stronger.matrix.transpose()
    rows = []
    for i in range(weaker.m):
        coefficients = solve(transposed, weaker.matrix.row(i))
        if coefficients is None:
            return None
        rows.append(coefficients)
    return Matrix(tuple(rows))


def robustly_more_informative(
    stronger: Experiment, weaker: Experiment
) -> ComparisonVerdict:
    """Decide the robust order and attach a certificate.

    True: gamma carries a linear factor with weaker = gamma @ stronger.
    False: witness carries a verified refutation (see RobustnessWitness).
    """
    if stronger.n != weaker.n:
        raise DimensionMismatch(
            f"experiments over {stronger.n} and {weaker.n} states"
        )
    if _nullspace_included(stronger.matrix, weaker.matrix):
        gamma = linear_factor(stronger, weaker)
        if gamma is None or gamma @ stronger.matrix != weaker.matrix:
            raise InternalInvariantError("linear factor failed verification")
        return ComparisonVerdict(True, gamma, None)
    return ComparisonVerdict(False, None, build_witness(stronger, weaker))


def _max_feasible_step(weights: Vector, direction: Vector) -> Fraction:
    """Largest lam keeping weights + lam*direction nonnegative.

    Directions in an experiment's nullspace sum to zero (the all-ones row
    is in every experiment's row space), so nonnegativity is the only
    binding constraint and some entry of the direction is negative.
    """
    steps = [w / -d for w, d in zip(weights, direction) if d < 0]
    if not steps:
        raise InternalInvariantError("direction with no negative entry")
    return min(steps)


def _separating_action(p: Vector, verts):
    """Max-margin action separating p from the hull of verts, in [-1, 1]^n.

    Maximizes eps subject to <a, q - p> >= eps at every vertex q and
    -1 <= a_i <= 1, via the exact simplex on shifted variables u = a + 1.
    The box keeps the LP bounded; Bland's rule makes the output
    deterministic.
    """
    n = len(p)
    count = len(verts)
    # variables: u_0..u_{n-1}, eps_plus, eps_minus, w_0..w_{count-1}, s_0..s_{n-1}
    total = n + 2 + count + n
    rows = []
    rhs = []
    for j, q in enumerate(verts):
        difference = vec_sub(q.weights, p)
        row = [_ZERO] * total
        for i, d in enumerate(difference):
            row[i] = d
        row[n] = -_ONE
        row[n + 1] = _ONE
        row[n + 2 + j] = -_ONE
        rows.append(row)
        rhs.append(sum(difference, _ZERO))
    for i in range(n):
        row = [_ZERO] * total
        row[i] = _ONE
        row[n + 2 + count + i] = _ONE
        rows.append(row)
        rhs.append(Fraction(2))
    objective = [_ZERO] * total
    objective[n] = -_ONE
    objective[n + 1] = _ONE
    result = solve_standard_form(objective, rows, rhs)
    if result.status != OPTIMAL:
        raise InternalInvariantError(f"separating LP ended {result.status}")
    shifted = result.x[:n]
    margin = result.x[n] - result.x[n + 1]
    payoffs = tuple(u - 1 for u in shifted)
    return Action(payoffs), margin


def build_witness(stronger: Experiment, weaker: Experiment) -> RobustnessWitness:
    """Construct and verify a refutation of the robust order.

    The prior is uniform (full support, deterministic); the direction is
    the first nullspace basis vector of the stronger experiment that the
    weaker one fails to annihilate; the step is half the exact ratio-test
    bound, so the perturbed prior stays strictly interior.
    """
    if stronger.n != weaker.n:
        raise DimensionMismatch(
            f"experiments over {stronger.n} and {weaker.n} states"
        )
    direction = next(
        (
            v
            for v in nullspace_basis(stronger.matrix)
            if not is_zero_vector(weaker.matrix.matvec(v))
        ),
        None,
    )
    if direction is None:
        raise PreconditionViolated(
            "the robust order holds, so no witness exists"
        )
    mu = uniform_prior(stronger.n)
    lam = _max_feasible_step(mu.weights, direction) / 2
    p = Prior(vec_add(mu.weights, vec_scale(lam, direction)))
    weaker_set = identified_set(weaker, mu)
    act, margin = _separating_action(p.weights, vertices(weaker_set))

    if margin <= 0:
        raise InternalInvariantError("separating margin is not positive")
    if not contains(identified_set(stronger, mu), p):
        raise InternalInvariantError("perturbed prior left the identified set")
    if contains(weaker_set, p):
        raise InternalInvariantError("perturbed prior is not separated")
    return RobustnessWitness(mu, direction, lam, p, act, margin)


def witness_decision_problem(witness: RobustnessWitness) -> DecisionProblem:
    """The one-action decision problem on which the refutation bites."""
    return DecisionProblem(witness.mu, (witness.action,))


def blackwell_garbling(
    stronger: Experiment,
    weaker: Experiment,
    convention: StochasticityConvention,
) -> GarblingResult:
    """Decide whether weaker = Gamma @ stronger for a stochastic Gamma >= 0.

    Pure feasibility: one LP variable per Gamma entry, one equality per
    product entry plus the stochasticity sums, solved by the exact
    phase-one simplex.  The returned certificate is re-verified before it
    is handed back.
    """
    if stronger.n != weaker.n:
        raise DimensionMismatch(
            f"experiments over {stronger.n} and {weaker.n} states"
        )
    l, m, n = weaker.m, stronger.m, stronger.n
    variables = l * m
    rows = []
    rhs = []
    for i in range(l):
        for j in range(n):
            row = [_ZERO] * variables
            for k in range(m):
                row[i * m + k] = stronger.matrix.rows[k][j]
            rows.append(row)
            rhs.append(weaker.matrix.rows[i][j])
    if convention is StochasticityConvention.ROW:
        for i in range(l):
            row = [_ZERO] * variables
            for k in range(m):
                row[i * m + k] = _ONE
            rows.append(row)
            rhs.append(_ONE)
    else:
        for k in range(m):
            row = [_ZERO] * variables
            for i in range(l):
                row[i * m + k] = _ONE
            rows.append(row)
            rhs.append(_ONE)
    point = find_feasible(rows, rhs)
    if point is None:
        return GarblingResult(False, None)
    gamma = Matrix(
        tuple(tuple(point[i * m + k] for k in range(m)) for i in range(l))
    )
    validate_garbling(gamma, convention)
    if gamma @ stronger.matrix != weaker.matrix:
        raise InternalInvariantError("garbling certificate failed verification")
    return GarblingResult(True, gamma)


def blackwell_implies_robust_check(
    exp: Experiment,
    gamma0: Matrix,
    convention: StochasticityConvention,
) -> bool:
    """Garble exp by a given stochastic gamma0 and query the robust order.

    Under COLUMN the product is itself a valid experiment and the full
    comparator runs; under ROW the product need not be column stochastic,
    so the comparison runs on the raw matrices via the nullspace
    criterion, which is well defined either way.  Expected true always.
    """
    if gamma0.ncols != exp.m:
        raise DimensionMismatch(
            f"garbling with {gamma0.ncols} columns against {exp.m} signals"
        )
    validate_garbling(gamma0, convention)
    product = gamma0 @ exp.matrix
    if convention is StochasticityConvention.COLUMN:
        verdict = robustly_more_informative(exp, validate_experiment(product))
        return verdict.robustly_more_informative
    return _nullspace_included(exp.matrix, product)
