"""The alpha-spectral radius and the small matrices that predict it.

For a graph G and alpha >= 0 the matrix of interest is
``alpha * D(G) + A(G)`` with D the degree diagonal and A the adjacency
matrix; its largest eigenvalue is the alpha-spectral radius rho.  At
alpha = 0 this is the adjacency spectral radius, at alpha = 1 the
signless Laplacian spectral radius.

Beyond the dense computation this module carries the structured join
family K_s v (K_{n_1} u ... u K_{n_q}), whose vertex orbits collapse the
eigenproblem to a (q+1) x (q+1) quotient matrix, the closed-form radius
of the complete split graph K_b v bar(K_{n-b}), and the cubic whose
largest root is the radius of the one-big-clique family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .graphs import Graph, complete_graph, component_masks, empty_graph, join, union_all

DEFAULT_TOL = 1e-10
ROOT_TOL = 1e-12
DEFAULT_MAX_ITER = 500_000
ORACLE_ORDER_CAP = 64


class ConvergenceError(RuntimeError):
    """Power iteration missed the residual target within the iteration cap
    (usually the tolerance is too tight for a near-degenerate spectrum)."""


@dataclass(frozen=True)
class SpectralResult:
    """Radius plus convergence evidence.

    ``perron_vector`` covers the vertices of the achieving component (in
    ``component`` order), normalized to sup-norm 1, all entries positive.
    It is omitted only for an edgeless achieving component at alpha = 0,
    where the block is identically zero.
    """

    rho: float
    perron_vector: tuple[float, ...] | None
    component: tuple[int, ...]
    iterations: int
    residual: float


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """Dense alpha * D + A for the whole graph."""
    alpha = _check_alpha(alpha)
    mat = np.zeros((g.n, g.n))
    for v in range(g.n):
        mat[v, v] = alpha * g.degree(v)
        for u in g.neighbors(v):
            mat[v, u] = 1.0
    return mat


def spectral_radius(
    g: Graph,
    alpha: float,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralResult:
    """Largest eigenvalue of alpha * D + A by shifted power iteration.

    Each connected component is solved independently and the maximum is
    reported.  The iteration runs on the block plus c*I with
    c = 1 + alpha * max_degree(G): that makes the matrix entrywise
    nonnegative with positive diagonal, hence primitive on a component,
    so convergence needs no further machinery.  The returned residual is
    ``max|A_alpha x - rho x|`` with ``max|x| = 1``.
    """
    alpha = _check_alpha(alpha)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if g.n == 0:
        return SpectralResult(0.0, None, (), 0, 0.0)
    shift = 1.0 + alpha * g.max_degree()
    best: SpectralResult | None = None
    for mask in component_masks(g):
        verts = _mask_vertices(mask)
        if len(verts) == 1:
            vec = (1.0,) if alpha > 0 else None
            cand = SpectralResult(0.0, vec, tuple(verts), 0, 0.0)
        else:
            block = _component_block(g, verts, alpha)
            lam, x, its, res = _power_iteration(block + shift * np.eye(len(verts)), tol, max_iter)
            x = x / np.max(np.abs(x))
            cand = SpectralResult(lam - shift, tuple(float(t) for t in x), tuple(verts), its, res)
        if best is None or cand.rho > best.rho:
            best = cand
    return best


def spectral_radius_oracle(g: Graph, alpha: float) -> float:
    """Radius via the dense symmetric eigensolver; independent of the
    power-iteration path, used to cross-validate it."""
    alpha = _check_alpha(alpha)
    if g.n > ORACLE_ORDER_CAP:
        raise ValueError(f"oracle supports at most {ORACLE_ORDER_CAP} vertices, got {g.n}")
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(alpha_matrix(g, alpha))[-1])


def _mask_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _component_block(g: Graph, verts: list[int], alpha: float) -> np.ndarray:
    index = {v: i for i, v in enumerate(verts)}
    k = len(verts)
    block = np.zeros((k, k))
    for v in verts:
        block[index[v], index[v]] = alpha * g.degree(v)
        for u in g.neighbors(v):
            block[index[v], index[u]] = 1.0
    return block


def _power_iteration(mat: np.ndarray, tol: float, max_iter: int):
    """Dominant eigenpair of a primitive symmetric matrix.

    Starts from the positive cone (all-ones), so it converges to the
    Perron pair; stops on the sup-norm residual, which is invariant
    under the diagonal shift applied by the caller.
    """
    k = mat.shape[0]
    x = np.full(k, 1.0 / sqrt(k))
    for iteration in range(1, max_iter + 1):
        y = mat @ x
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * x)) / np.max(np.abs(x)))
        if res <= tol:
            return lam, x, iteration, res
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return 0.0, x, iteration, 0.0
        x = y / norm
    raise ConvergenceError(
        f"power iteration missed residual {tol:g} after {max_iter} iterations"
    )


# -- join families -----------------------------------------------------


@dataclass(frozen=True)
class JoinFamily:
    """K_s v (K_{n_1} u ... u K_{n_q}) with odd part sizes, sorted ascending.

    The realized order is s + sum(parts) and the realized matching number
    is s + sum((n_i - 1) / 2): pair up inside each odd clique, then match
    every core vertex to one of the q leftover part vertices.  That count
    needs q >= s, which the constructor enforces; with q < s the stated
    matching number would overshoot (K_3 v K_1 is K_4 with matching 2,
    not 3).
    """

    s: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.s < 0:
            raise ValueError("core size must be nonnegative")
        if len(self.parts) == 0:
            raise ValueError("at least one part is required")
        if any(p < 1 or p % 2 == 0 for p in self.parts):
            raise ValueError(f"parts must be odd and positive, got {self.parts}")
        if tuple(sorted(self.parts)) != self.parts:
            raise ValueError("parts must be sorted ascending")
        if self.s > len(self.parts):
            raise ValueError(
                f"core size {self.s} exceeds part count {len(self.parts)}; "
                "the family would not realize its stated matching number"
            )

    @property
    def q(self) -> int:
        return len(self.parts)

    @property
    def order(self) -> int:
        return self.s + sum(self.parts)

    @property
    def beta(self) -> int:
        return self.s + sum((p - 1) // 2 for p in self.parts)

    def graph(self) -> Graph:
        """Concrete graph with the core clique labeled first."""
        return join(complete_graph(self.s), union_all([complete_graph(p) for p in self.parts]))

    def shifted(self) -> "JoinFamily":
        """Move two vertices from the second-largest part to the largest."""
        if self.q < 2:
            raise ValueError("need at least two parts to shift")
        if self.parts[-2] < 3:
            raise ValueError("second-largest part must have at least 3 vertices")
        parts = list(self.parts)
        parts[-2] -= 2
        parts[-1] += 2
        return JoinFamily(self.s, tuple(sorted(parts)))


def complete_split_family(n: int, beta: int) -> JoinFamily:
    """K_beta v bar(K_{n-beta}) seen as a join family (all parts are 1)."""
    if not n > beta >= 1:
        raise ValueError(f"need n > beta >= 1, got n={n}, beta={beta}")
    return JoinFamily(beta, (1,) * (n - beta))


def one_clique_family(n: int, beta: int, s: int) -> JoinFamily:
    """K_s v (K_{2b-2s+1} u bar(K_{q-1})) with q = n + s - 2*beta."""
    if not 0 <= s <= beta:
        raise ValueError(f"need 0 <= s <= beta, got s={s}, beta={beta}")
    if n < 2 * beta + 1:
        raise ValueError(f"need n >= 2*beta + 1, got n={n}, beta={beta}")
    q = n + s - 2 * beta
    parts = tuple(sorted([1] * (q - 1) + [2 * beta - 2 * s + 1]))
    return JoinFamily(s, parts)


def quotient_matrix(family: JoinFamily, alpha: float) -> np.ndarray:
    """Orbit-collapse matrix of the join family, parts first, core last.

    Row i says a part-i vertex has (n_i - 1) neighbors in its own clique
    plus s in the core, with alpha * degree on the diagonal; the core row
    sees n_j vertices of each part.  Nonsymmetric by construction (rows
    transcribe the orbit system literally), but its eigenvalues are a
    subset of the full matrix spectrum and the largest equals the
    full-graph radius.
    """
    alpha = _check_alpha(alpha)
    if family.s == 0:
        raise ValueError("quotient collapse is defined for a nonempty core (s >= 1)")
    s = family.s
    n = family.order
    q = family.q
    mat = np.zeros((q + 1, q + 1))
    for i, part in enumerate(family.parts):
        mat[i, i] = (alpha + 1) * (part - 1) + alpha * s
        mat[i, q] = s
        mat[q, i] = part
    mat[q, q] = alpha * (n - 1) + s - 1
    return mat


def quotient_radius(family: JoinFamily, alpha: float) -> float:
    """Largest eigenvalue of the quotient matrix (real by construction)."""
    eigs = np.linalg.eigvals(quotient_matrix(family, alpha))
    k = int(np.argmax(eigs.real))
    if abs(eigs[k].imag) > 1e-9:
        raise ArithmeticError("quotient matrix produced a non-real leading eigenvalue")
    return float(eigs[k].real)


def family_radius(family: JoinFamily, alpha: float) -> float:
    """Radius of the family graph: quotient for s >= 1, largest clique
    for the disconnected s = 0 case."""
    if family.s >= 1:
        return quotient_radius(family, alpha)
    alpha = _check_alpha(alpha)
    return (alpha + 1) * (family.parts[-1] - 1)


# -- closed forms ------------------------------------------------------


def closed_form_complete_split(n: int, beta: int, alpha: float) -> float:
    """Radius of K_beta v bar(K_{n-beta}) in closed form.

    The larger root of the quadratic from the two-orbit collapse:
    lambda^2 - [alpha*n + (alpha+1)*beta - (alpha+1)] * lambda
             + (alpha^2-1)*beta*n + (alpha+1)*beta^2 - alpha*(alpha+1)*beta.
    """
    alpha = _check_alpha(alpha)
    if not n > beta >= 1:
        raise ValueError(f"need n > beta >= 1, got n={n}, beta={beta}")
    b = alpha * n + (alpha + 1) * beta - (alpha + 1)
    c = (alpha * alpha - 1) * beta * n + (alpha + 1) * beta * beta - alpha * (alpha + 1) * beta
    return 0.5 * b + 0.5 * sqrt(b * b - 4.0 * c)


def split_graph_quadratic(lam: float, n: int, beta: int, alpha: float) -> float:
    """The quadratic whose larger root is the complete-split radius."""
    alpha = _check_alpha(alpha)
    b = alpha * n + (alpha + 1) * beta - (alpha + 1)
    c = (alpha * alpha - 1) * beta * n + (alpha + 1) * beta * beta - alpha * (alpha + 1) * beta
    return lam * lam - b * lam + c


def cubic_f(lam: float, n: int, beta: int, s: int, alpha: float) -> float:
    """Characteristic cubic of the one-big-clique family, evaluated as
    written:

    (lam - alpha*n - s + alpha + 1)(lam - alpha*s)[lam - 2(alpha+1)beta + (alpha+2)s]
      - s(n + s - 2*beta - 1)[lam - 2(alpha+1)beta + (alpha+2)s]
      - s(2*beta - 2*s + 1)(lam - alpha*s)
    """
    alpha = _check_alpha(alpha)
    t1 = lam - alpha * n - s + alpha + 1
    t2 = lam - alpha * s
    t3 = lam - 2.0 * (alpha + 1) * beta + (alpha + 2) * s
    return t1 * t2 * t3 - s * (n + s - 2 * beta - 1) * t3 - s * (2 * beta - 2 * s + 1) * t2


def _cubic_f_derivative(lam: float, n: int, beta: int, s: int, alpha: float) -> float:
    t1 = lam - alpha * n - s + alpha + 1
    t2 = lam - alpha * s
    t3 = lam - 2.0 * (alpha + 1) * beta + (alpha + 2) * s
    return t1 * t2 + t1 * t3 + t2 * t3 - s * (n + s - 2 * beta - 1) - s * (2 * beta - 2 * s + 1)


def largest_root_f(n: int, beta: int, s: int, alpha: float, tol: float = ROOT_TOL) -> float:
    """The unique root of the cubic at or beyond 2(alpha+1)beta - (alpha+1)s.

    Bisection from the bracket [2(alpha+1)beta - (alpha+1)s,
    (alpha+1)(n-1) + 1] followed by a Newton polish.  Equals the radius
    of K_s v (K_{2b-2s+1} u bar(K_{q-1})).
    """
    alpha = _check_alpha(alpha)
    if not 0 <= s <= beta:
        raise ValueError(f"need 0 <= s <= beta, got s={s}, beta={beta}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if s == 0:
        # cubic factors as (lam - alpha*n + alpha + 1) * lam * (lam - 2(alpha+1)beta)
        return max(0.0, alpha * n - alpha - 1, 2.0 * (alpha + 1) * beta)
    lo = 2.0 * (alpha + 1) * beta - (alpha + 1) * s
    hi = (alpha + 1) * (n - 1) + 1.0
    flo = cubic_f(lo, n, beta, s, alpha)
    fhi = cubic_f(hi, n, beta, s, alpha)
    if flo > 0 or fhi <= 0:
        raise ValueError(
            f"no root bracket for n={n}, beta={beta}, s={s}, alpha={alpha}: "
            f"f({lo})={flo}, f({hi})={fhi}"
        )
    if flo == 0.0:
        return lo
    a, b = lo, hi
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        if cubic_f(mid, n, beta, s, alpha) > 0:
            b = mid
        else:
            a = mid
    lam = 0.5 * (a + b)
    for _ in range(4):
        deriv = _cubic_f_derivative(lam, n, beta, s, alpha)
        if deriv == 0.0:
            break
        step = cubic_f(lam, n, beta, s, alpha) / deriv
        nxt = lam - step
        if not a - tol <= nxt <= b + tol:
            break
        lam = nxt
    return lam


def shift_function_f(delta: float, lam: float, family: JoinFamily, alpha: float) -> float:
    """Secular function tracking a transfer of ``delta`` vertices from the
    second-largest part to the largest, at spectral parameter ``lam``.

    Defined for lam >= (alpha+1)(n_q + s - 1) and 0 <= delta <= 2; at
    delta = 0 its zero is the family radius.  A denominator may still
    vanish inside the window for small cores; the pole is the caller's
    lookout and surfaces as ZeroDivisionError.
    """
    alpha = _check_alpha(alpha)
    if family.q < 2:
        raise ValueError("shift function needs at least two parts")
    if family.s < 1:
        raise ValueError("shift function is defined for a nonempty core")
    if not 0.0 <= delta <= 2.0:
        raise ValueError(f"delta must lie in [0, 2], got {delta}")
    s = family.s
    n = family.order
    floor_lam = (alpha + 1) * (family.parts[-1] + s - 1)
    if lam < floor_lam:
        raise ValueError(f"lambda {lam} below the domain bound {floor_lam}")
    total = (lam - alpha * n - s + alpha + 1) / s
    for part in family.parts[:-2]:
        total -= part / (lam - (alpha + 1) * (part - 1) - alpha * s)
    p1, p2 = family.parts[-2], family.parts[-1]
    total -= (p1 - delta) / (lam - (alpha + 1) * (p1 - delta - 1) - alpha * s)
    total -= (p2 + delta) / (lam - (alpha + 1) * (p2 + delta - 1) - alpha * s)
    return total


def _check_alpha(alpha) -> float:
    value = float(alpha)
    if value < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    return value


def complete_split_graph(n: int, beta: int) -> Graph:
    """K_beta v bar(K_{n-beta}) with the clique labeled first."""
    if not n > beta >= 0:
        raise ValueError(f"need n > beta >= 0, got n={n}, beta={beta}")
    return join(complete_graph(beta), empty_graph(n - beta))
