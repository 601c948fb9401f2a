"""Push-forwards of powers of the Pluecker class, and degree formulas.

For a rank-r bundle E over a base X, the Grassmann bundle G_X(d, E) carries
the Pluecker class (the first Chern class of the determinant of the universal
rank-d quotient).  Its powers push forward to universal integer combinations
of Schur polynomials in the Segre classes of E:

    push(N) = sum over |lam| = N - d(r-d) of  f(lam + eps) * Delta_lam(s(E))

where eps is the d x (r-d) rectangle, f counts standard Young tableaux, and
Delta_lam is the Jacobi-Trudi determinant det[s_{lam_i + j - i}].  Below the
critical power d(r-d) the push-forward vanishes for degree reasons.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Literal

from .chowring import (
    BundleModel,
    GradedPoly,
    SplitBundle,
    integrate_over_pm,
    ring_of,
    segre_classes,
)
from .partitions import Partition, add_rectangle, enumerate_partitions
from .schur import jacobi_trudi_det, schur_via_jacobi_trudi
from .tableaux import syt_count_hook

DenominatorVariant = Literal["linear", "factorial"]


def _check_d_r(d: int, r: int) -> None:
    if not 1 <= d <= r:
        raise ValueError(f"need 1 <= d <= r, got d={d}, r={r}")


def _check_model(r: int, model: BundleModel) -> None:
    if model.rank != r:
        raise ValueError(f"model has rank {model.rank}, expected {r}")


def pushforward_schur_class(
    mu: Partition, d: int, r: int, segre: list[GradedPoly]
) -> GradedPoly:
    """Push a single Schur class of the quotient bundle down to the base.

    The image of Delta_mu(s(Q)) is the Jacobi-Trudi determinant on the shifted
    integer vector (mu_1 - (r-d), ..., mu_d - (r-d)); entries with negative
    subscript vanish, so shapes that do not contain the rectangle give zero.
    ``segre`` must extend to subscript mu_1 - (r-d) + d - 1.
    """
    _check_d_r(d, r)
    if len(mu) > d:
        raise ValueError(f"partition {mu} has more than {d} parts")
    shift = r - d
    return jacobi_trudi_det([mu.part(i) - shift for i in range(d)], segre)


def pushforward_plucker_power(N: int, d: int, r: int, model: BundleModel) -> GradedPoly:
    """Push the N-th power of the Pluecker class down to the base of the model.

    Homogeneous of degree N - d(r-d); the zero class when N is below the
    fiber dimension d(r-d).
    """
    _check_d_r(d, r)
    _check_model(r, model)
    if N < 0:
        raise ValueError(f"power must be nonnegative, got {N}")
    ring = ring_of(model)
    fiber_dim = d * (r - d)
    if N < fiber_dim:
        return ring.zero()
    weight = N - fiber_dim
    segre = segre_classes(model, weight + d)
    total = ring.zero()
    for lam in enumerate_partitions(weight, d):
        count = syt_count_hook(add_rectangle(lam, d, r - d))
        total = total + count * schur_via_jacobi_trudi(lam, segre, size=d)
    return total


def degree_grassmann_bundle_terms(
    d: int, model: SplitBundle
) -> list[tuple[Partition, int, Fraction]]:
    """Per-shape contributions (shape, tableau count, integral) to the degree."""
    r = model.rank
    _check_d_r(d, r)
    m = model.base_dim
    segre = segre_classes(model, m + d)
    rows = []
    for lam in enumerate_partitions(m, d):
        count = syt_count_hook(add_rectangle(lam, d, r - d))
        integral = integrate_over_pm(schur_via_jacobi_trudi(lam, segre, size=d), m)
        rows.append((lam, count, integral))
    return rows


def degree_grassmann_bundle(d: int, model: SplitBundle) -> Fraction:
    """Degree of the Grassmann bundle of a split bundle over P^m.

    Integrates the push-forward of the top power of the Pluecker class over
    the base; always an integer when the twists make the embedding exist, but
    returned exact and unreduced so callers can assert integrality.
    """
    r = model.rank
    _check_d_r(d, r)
    m = model.base_dim
    top = pushforward_plucker_power(d * (r - d) + m, d, r, model)
    return integrate_over_pm(top, m)


def degree_grassmannian_classical(d: int, r: int) -> int:
    """Degree of the Grassmannian of corank-d subspaces in its Pluecker embedding.

    Closed form: (d(r-d))! * prod_{l<d} l! / prod_{l<=d} (r-l)!, evaluated in
    exact integer arithmetic with the division asserted exact.
    """
    _check_d_r(d, r)
    numerator = factorial(d * (r - d)) * prod(factorial(l) for l in range(1, d))
    denominator = prod(factorial(r - l) for l in range(1, d + 1))
    degree, rem = divmod(numerator, denominator)
    assert rem == 0, f"degree formula division not exact for d={d}, r={r}"
    return degree


def compositions(total: int, length: int) -> Iterator[tuple[int, ...]]:
    """All vectors of ``length`` nonnegative integers summing to ``total``,
    first coordinate descending (lexicographically largest first)."""
    if length == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, length - 1):
            yield (first,) + rest


def rational_form_coefficients(
    N: int, d: int, r: int, denominator: DenominatorVariant
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Coefficients of the composition-sum form of the push-forward.

    The sum runs over all vectors k of d nonnegative integers with
    |k| = N - d(r-d); the k-th coefficient is

        N! * prod_{i<j} (k_i - k_j - i + j) / prod_i D_i

    with D_i = (r + k_i - i) for the ``linear`` variant and (r + k_i - i)!
    for the ``factorial`` variant.  Vectors whose difference product vanishes
    are skipped.  Raises ZeroDivisionError if a surviving term divides by
    zero, which can happen for the linear variant when d = r.
    """
    _check_d_r(d, r)
    if denominator not in ("linear", "factorial"):
        raise ValueError(f"unknown denominator variant {denominator!r}")
    fiber_dim = d * (r - d)
    if N < fiber_dim:
        raise ValueError(f"power {N} is below the fiber dimension {fiber_dim}")
    weight = N - fiber_dim
    n_fact = factorial(N)
    out = []
    for k in compositions(weight, d):
        numerator = n_fact
        for i in range(d):
            for j in range(i + 1, d):
                numerator *= k[i] - k[j] + (j - i)
        if numerator == 0:
            continue
        if denominator == "factorial":
            denom = prod(factorial(r + k[i] - (i + 1)) for i in range(d))
        else:
            denom = prod(r + k[i] - (i + 1) for i in range(d))
            if denom == 0:
                raise ZeroDivisionError(
                    f"linear denominator vanishes at k={k} for d={d}, r={r}"
                )
        out.append((k, Fraction(numerator, denom)))
    return out


def pushforward_rational_form(
    N: int, d: int, r: int, model: BundleModel, denominator: DenominatorVariant
) -> GradedPoly:
    """Composition-sum form of the push-forward, with rational coefficients.

    Evaluates the ``rational_form_coefficients`` sum on products of Segre
    classes of the model.  The test suite determines empirically which
    denominator variant agrees with ``pushforward_plucker_power``.
    """
    _check_model(r, model)
    coefficients = rational_form_coefficients(N, d, r, denominator)
    ring = ring_of(model)
    weight = N - d * (r - d)
    segre = segre_classes(model, weight)
    total = ring.zero()
    for k, coeff in coefficients:
        term = ring.scalar(coeff)
        for exponent in k:
            term = term * segre[exponent]
        total = total + term
    return total
