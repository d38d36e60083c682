"""Regime classification for the maximal radius over graphs of order n
with matching number beta.

For each (n, beta, alpha) the maximum of the alpha-spectral radius is
attained by one of three graphs, and which one depends on where n sits
relative to the threshold n* = ((2*alpha+3)*beta + alpha + 2)/(alpha+1):

  FULL       n in {2b, 2b+1}      max (alpha+1)(n-1)   at K_n
  BELOW      2b+2 <= n < n*       max 2(alpha+1)b      at K_{2b+1} u bar(K)
  THRESHOLD  n = n* (exact)       max 2(alpha+1)b      at both graphs below
  ABOVE      n > n*               closed form          at K_b v bar(K_{n-b})

The threshold test is exact rational arithmetic, never a float compare:
alpha is carried as a Fraction, so n = n* is decided correctly even for
alphas like 1/2 where n* is integral only for certain beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from .graphs import (
    Graph,
    complete_graph,
    disjoint_union,
    empty_graph,
)
from .spectral import closed_form_complete_split, complete_split_graph

FULL = "FULL"
BELOW = "BELOW"
THRESHOLD = "THRESHOLD"
ABOVE = "ABOVE"
EMPTY = "EMPTY"

COMPLETE = "COMPLETE"
ODD_CLIQUE_PLUS_ISOLATES = "ODD_CLIQUE_PLUS_ISOLATES"
COMPLETE_SPLIT = "COMPLETE_SPLIT"
EMPTY_GRAPH = "EMPTY_GRAPH"

CASE_NUMBERS = {FULL: 1, BELOW: 2, THRESHOLD: 3, ABOVE: 4, EMPTY: 0}

_TIGHT_ALPHA = (sqrt(5.0) - 1.0) / 2.0


def as_fraction(alpha) -> Fraction:
    """Exact rational view of alpha; accepts "p/q" strings, ints, floats
    (binary-exact), and Fractions."""
    if isinstance(alpha, Fraction):
        value = alpha
    elif isinstance(alpha, str):
        value = Fraction(alpha)
    else:
        value = Fraction(alpha)
    if value < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    return value


@dataclass(frozen=True)
class RegimeVerdict:
    """Which regime applies and what it predicts.

    ``sampled_region`` flags parameter points just past the threshold at
    large alpha where the cubic's positivity at the probe value is
    established by sampling rather than a closed sign argument; the
    prediction itself is unchanged.
    """

    n: int
    beta: int
    alpha: Fraction
    case_id: str
    n_star: Fraction
    predicted_rho: float
    extremal_descriptors: tuple[str, ...]
    sampled_region: bool = False

    @property
    def case_number(self) -> int:
        return CASE_NUMBERS[self.case_id]


def threshold_n_star(beta: int, alpha) -> Fraction:
    """((2*alpha + 3)*beta + alpha + 2) / (alpha + 1), exactly."""
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    a = as_fraction(alpha)
    return ((2 * a + 3) * beta + a + 2) / (a + 1)


def classify_regime(n: int, beta: int, alpha) -> RegimeVerdict:
    """Classify (n, beta, alpha); beta = 0 degenerates to the edgeless
    verdict rather than an error."""
    a = as_fraction(alpha)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if beta < 0 or beta > n // 2:
        raise ValueError(f"no graph of order {n} has matching number {beta}")
    af = float(a)
    if beta == 0:
        return RegimeVerdict(n, 0, a, EMPTY, threshold_n_star(0, a), 0.0, (EMPTY_GRAPH,))
    n_star = threshold_n_star(beta, a)
    if n == 2 * beta or n == 2 * beta + 1:
        return RegimeVerdict(
            n, beta, a, FULL, n_star, (af + 1.0) * (n - 1), (COMPLETE,)
        )
    if Fraction(n) < n_star:
        return RegimeVerdict(
            n, beta, a, BELOW, n_star, 2.0 * (af + 1.0) * beta, (ODD_CLIQUE_PLUS_ISOLATES,)
        )
    if Fraction(n) == n_star:
        return RegimeVerdict(
            n,
            beta,
            a,
            THRESHOLD,
            n_star,
            2.0 * (af + 1.0) * beta,
            (COMPLETE_SPLIT, ODD_CLIQUE_PLUS_ISOLATES),
        )
    return RegimeVerdict(
        n,
        beta,
        a,
        ABOVE,
        n_star,
        closed_form_complete_split(n, beta, af),
        (COMPLETE_SPLIT,),
        sampled_region=_in_sampled_region(n, beta, af),
    )


def _in_sampled_region(n: int, beta: int, alpha: float) -> bool:
    # some core size s >= 1 admissible at this point has
    # n + alpha*s - alpha*beta + s - 2*beta - 1 < 0
    if alpha <= _TIGHT_ALPHA:
        return False
    s_cap = (alpha * alpha + alpha - 1.0) * beta / ((1.0 + alpha) ** 2)
    return s_cap >= 1.0 and n < (alpha + 2.0) * beta - alpha


def predicted_bound(n: int, beta: int, alpha) -> float:
    """The case-appropriate maximal radius over order n, matching beta."""
    return classify_regime(n, beta, alpha).predicted_rho


def build_descriptor(descriptor: str, n: int, beta: int) -> Graph:
    """Concrete graph for one extremal descriptor, canonically labeled."""
    if descriptor == COMPLETE:
        return complete_graph(n)
    if descriptor == ODD_CLIQUE_PLUS_ISOLATES:
        return disjoint_union(complete_graph(2 * beta + 1), empty_graph(n - 2 * beta - 1))
    if descriptor == COMPLETE_SPLIT:
        return complete_split_graph(n, beta)
    if descriptor == EMPTY_GRAPH:
        return empty_graph(n)
    raise ValueError(f"unknown extremal descriptor {descriptor!r}")


def predicted_extremal_graphs(verdict: RegimeVerdict, n: int | None = None, beta: int | None = None) -> list[Graph]:
    """One concrete graph per descriptor in the verdict."""
    n = verdict.n if n is None else n
    beta = verdict.beta if beta is None else beta
    return [build_descriptor(d, n, beta) for d in verdict.extremal_descriptors]
