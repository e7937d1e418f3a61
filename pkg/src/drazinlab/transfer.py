"""Side-condition checks and exact transfer of (generalized) inverses.

The central objects are quadruples (a, b, c, d) of equal-size square
matrices subject to four intertwining conditions:

    (ac)^2 = (db)(ac),   (db)^2 = (ac)(db),
    b(ac)a = b(db)a,     c(ac)d = c(db)d.

Under these, setting alpha = 1 - bd and beta = 1 - ac, the Drazin data of
beta is an explicit expression in the Drazin data of alpha:

    y = [1 - d p (1 - p alpha (1 + bd))^-1 b a c](1 + ac) + d x b a c

with p = alpha^pi and x = alpha^D. Every transfer operation here evaluates
y, recomputes the Drazin inverse of beta directly, and returns both; the
formula is never trusted on its own. The invertibility of
1 - p alpha (1 + bd) is itself a consequence of the conditions (p alpha is
the nilpotent core of alpha), so a singular instance is reported as an
internal failure rather than swallowed.

Note the factor inside the inverse carries the idempotent p: dropping it
would leave 1 - alpha(1 + bd) = (bd)^2, which is singular for most
instances of interest.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb

from .drazin import DrazinData, drazin, index_of
from .errors import (
    ConditionsViolatedError,
    IdentityFalsifiedError,
    InternalInvariantError,
    InternalInvertibilityError,
    NoGroupInverseError,
    ShapeError,
    SingularMatrixError,
)
from .matrices import Matrix, inverse, rank


@dataclass(frozen=True)
class Quadruple:
    """Four square matrices of one common size."""

    a: Matrix
    b: Matrix
    c: Matrix
    d: Matrix

    def __post_init__(self):
        n = self.a.rows
        for name in ("a", "b", "c", "d"):
            m = getattr(self, name)
            if not m.is_square() or m.rows != n:
                raise ShapeError(f"matrix {name} must be square of size {n}")

    @property
    def size(self) -> int:
        return self.a.rows


def lifted_triple(a: Matrix, b: Matrix, c: Matrix) -> Quadruple:
    """Lift a triple to a quadruple by d := a."""
    return Quadruple(a, b, c, a)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a batch of exact identity checks, one residual each."""

    labels: tuple[str, ...]
    residuals: tuple[Matrix, ...]

    @property
    def holds(self) -> tuple[bool, ...]:
        return tuple(r.is_zero() for r in self.residuals)

    @property
    def all_hold(self) -> bool:
        return all(self.holds)

    def _one(self, i: int):
        return self.residuals[i].is_zero(), self.residuals[i]

    # Positional accessors for the common four-condition reports.
    cond1 = property(lambda self: self._one(0)[0])
    cond2 = property(lambda self: self._one(1)[0])
    cond3 = property(lambda self: self._one(2)[0])
    cond4 = property(lambda self: self._one(3)[0])
    residual1 = property(lambda self: self._one(0)[1])
    residual2 = property(lambda self: self._one(1)[1])
    residual3 = property(lambda self: self._one(2)[1])
    residual4 = property(lambda self: self._one(3)[1])


def check_conditions(q: Quadruple) -> ConditionReport:
    """Evaluate the four side conditions exactly; residuals are LHS - RHS."""
    a, b, c, d = q.a, q.b, q.c, q.d
    ac = a * c
    db = d * b
    return ConditionReport(
        labels=(
            "(ac)^2 = (db)(ac)",
            "(db)^2 = (ac)(db)",
            "b(ac)a = b(db)a",
            "c(ac)d = c(db)d",
        ),
        residuals=(
            ac * ac - db * ac,
            db * db - ac * db,
            b * ac * a - b * db * a,
            c * ac * d - c * db * d,
        ),
    )


def check_strong_conditions(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> ConditionReport:
    """The stronger two-identity premise acd = dbd, dba = aca.

    When both hold, the four side conditions of `check_conditions` follow,
    so any quadruple passing here passes there as well.
    """
    return ConditionReport(
        labels=("acd = dbd", "dba = aca"),
        residuals=(a * c * d - d * b * d, d * b * a - a * c * a),
    )


def check_triple_conditions(a: Matrix, b: Matrix, c: Matrix) -> ConditionReport:
    """The four-triple-identity premise on (a, b, c); lifts via d := a."""
    aba = a * b * a
    aca = a * c * a
    return ConditionReport(
        labels=(
            "(aba)b = (aca)b",
            "b(aba) = b(aca)",
            "(aba)c = (aca)c",
            "c(aba) = c(aca)",
        ),
        residuals=(
            (aba - aca) * b,
            b * (aba - aca),
            (aba - aca) * c,
            c * (aba - aca),
        ),
    )


# -- classic single-pair lemmas --------------------------------------------


def jacobson_inverse(a: Matrix, b: Matrix) -> Matrix:
    """(1 - ba)^-1 = 1 + b (1 - ab)^-1 a, verified exactly.

    Raises SingularMatrixError when 1 - ab is singular (in which case
    1 - ba is checked to be singular too).
    """
    _require_pair(a, b)
    eye = Matrix.identity(a.rows)
    alpha = eye - a * b
    beta = eye - b * a
    if rank(alpha) < a.rows:
        if rank(beta) == a.rows:
            raise InternalInvariantError("1-ab singular but 1-ba invertible")
        raise SingularMatrixError("1-ab is singular (and so is 1-ba)")
    result = eye + b * inverse(alpha) * a
    if result * beta != eye:
        raise InternalInvariantError("transferred inverse failed verification")
    return result


def jacobson_drazin(a: Matrix, b: Matrix) -> Matrix:
    """The Drazin-inverse analogue 1 + b (1-ab)^D a of the classic lemma.

    The simple form is only an identity for (1-ba)^D when the correction
    term carried by the spectral idempotent of 1-ab vanishes; this
    function evaluates both sides exactly and raises IdentityFalsifiedError
    when they differ (e.g. whenever ab = 1), rather than returning a wrong
    value silently.
    """
    _require_pair(a, b)
    eye = Matrix.identity(a.rows)
    formula = eye + b * drazin(eye - a * b).dinv * a
    direct = drazin(eye - b * a).dinv
    if formula != direct:
        raise IdentityFalsifiedError(
            "1 + b(1-ab)^D a differs from (1-ba)^D on this pair",
            lhs=direct,
            rhs=formula,
        )
    return formula


def _require_pair(a: Matrix, b: Matrix) -> None:
    if not a.is_square() or not b.is_square() or a.rows != b.rows:
        raise ShapeError("pair lemmas require two square matrices of equal size")


# -- quadruple transfers -----------------------------------------------------


@dataclass(frozen=True)
class TransferOutcome:
    """Transferred and directly computed Drazin data for beta = 1 - ac."""

    beta: Matrix
    beta_drazin: DrazinData
    direct: DrazinData
    agrees: bool
    alpha_index: int
    beta_index: int

    @property
    def alpha_pi_nonzero(self) -> bool:
        """True when the spectral-idempotent branch of the formula was live."""
        return self.alpha_index > 0


def _require_conditions(q: Quadruple) -> None:
    report = check_conditions(q)
    if not report.all_hold:
        failed = [lab for lab, ok in zip(report.labels, report.holds) if not ok]
        raise ConditionsViolatedError(f"side conditions fail: {'; '.join(failed)}")


def _evaluate_transfer(q: Quadruple) -> TransferOutcome:
    a, b, c, d = q.a, q.b, q.c, q.d
    eye = Matrix.identity(q.size)
    alpha = eye - b * d
    beta = eye - a * c
    alpha_data = drazin(alpha)
    p, x = alpha_data.spectral_idempotent, alpha_data.dinv
    try:
        resolvent = inverse(eye - p * alpha * (eye + b * d))
    except SingularMatrixError as exc:
        raise InternalInvertibilityError(
            "1 - p alpha (1+bd) singular: conditions violated or kernel bug"
        ) from exc
    bac = b * a * c
    y = (eye - d * p * resolvent * bac) * (eye + a * c) + d * x * bac
    direct = drazin(beta)
    outcome = TransferOutcome(
        beta=beta,
        beta_drazin=DrazinData(y, direct.index, eye - beta * y),
        direct=direct,
        agrees=y == direct.dinv,
        alpha_index=alpha_data.index,
        beta_index=direct.index,
    )
    return outcome


def transfer_gdrazin(q: Quadruple) -> TransferOutcome:
    """Evaluate the transfer formula for beta = 1 - ac and compare with the
    directly computed Drazin inverse."""
    _require_conditions(q)
    return _evaluate_transfer(q)


def transfer_drazin(q: Quadruple) -> TransferOutcome:
    """Transfer plus the index bound, asserted in both directions.

    The four conditions are symmetric under (a,b,c,d) -> (d,c,b,a), so both
    i(beta) <= i(alpha)+1 and i(alpha) <= i(beta)+1 must hold; a violation
    of either is a falsification worth surfacing loudly.
    """
    _require_conditions(q)
    outcome = _evaluate_transfer(q)
    if abs(outcome.alpha_index - outcome.beta_index) > 1:
        raise IdentityFalsifiedError(
            f"index bound violated: i(alpha)={outcome.alpha_index}, "
            f"i(beta)={outcome.beta_index}"
        )
    return outcome


def transfer_group(q: Quadruple) -> TransferOutcome:
    """Group-inverse version: requires i(1-bd) <= 1, verifies i(1-ac) <= 1.

    The transferred value coincides with the Drazin formula (x = alpha^# when
    the index is at most 1); `agrees` additionally demands that beta has a
    group inverse and that the formula reproduces it exactly.
    """
    _require_conditions(q)
    alpha = Matrix.identity(q.size) - q.b * q.d
    if index_of(alpha) > 1:
        raise NoGroupInverseError("1-bd has index >= 2, group transfer refused")
    outcome = _evaluate_transfer(q)
    if outcome.beta_index > 1:
        return replace(outcome, agrees=False)
    if outcome.agrees:
        y = outcome.beta_drazin.dinv
        if outcome.beta * y * outcome.beta != outcome.beta:
            raise InternalInvariantError("value at index <= 1 fails the group axiom a x a = a")
    return outcome


def power_instance(q: Quadruple, n: int) -> Quadruple:
    """Rebuild (a, b', c', d) so that 1 - a c' = (1-ac)^n and 1 - b' d = (1-bd)^n.

    c' = sum_{i=1..n} (-1)^(i+1) C(n,i) c (ac)^(i-1) and symmetrically
    b' = sum_{i=1..n} (-1)^(i+1) C(n,i) (bd)^(i-1) b; the binomial signs are
    pinned by the n = 1 case, where the sums must collapse to c and b. The
    derived quadruple satisfies the side conditions again, which is checked
    before returning.
    """
    if n < 1:
        raise ValueError("power construction needs n >= 1")
    _require_conditions(q)
    a, b, c, d = q.a, q.b, q.c, q.d
    ac = a * c
    bd = b * d
    c_term, b_term = c, b
    c_sum = c_term.scale(comb(n, 1))
    b_sum = b_term.scale(comb(n, 1))
    for i in range(2, n + 1):
        c_term = c_term * ac
        b_term = bd * b_term
        coeff = comb(n, i) if i % 2 else -comb(n, i)
        c_sum = c_sum + c_term.scale(coeff)
        b_sum = b_sum + b_term.scale(coeff)
    eye = Matrix.identity(q.size)
    if eye - a * c_sum != (eye - ac) ** n:
        raise InternalInvariantError("power construction failed for 1 - a c'")
    if eye - b_sum * d != (eye - bd) ** n:
        raise InternalInvariantError("power construction failed for 1 - b' d")
    derived = Quadruple(a, b_sum, c_sum, d)
    if not check_conditions(derived).all_hold:
        raise InternalInvariantError("derived quadruple lost the side conditions")
    return derived
