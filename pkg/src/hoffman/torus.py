"""Circulant discretizations of distance graphs, used as exact oracles.

Graphs on Z_m^n whose connection set is an annulus of lattice vectors are
diagonalized by characters, so their full spectrum is available as a
multidimensional FFT of the connection-set indicator.  Comparing the
resulting Hoffman bounds against their continuous targets (and against
brute force on small instances) validates the analytic pipeline end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .euclidean import RadialMeasure, chromatic_bound_euclidean, density_bound
from .graphs import Graph
from .spectral import SymMatrix

_VERTEX_CAP = 2**24
_DENSE_CAP = 2**16
_GROUP_CAP = 10_000

_CSV_HEADER = "m,discrete_chi_lb,discrete_alpha_ub,continuous_chi_lb,continuous_alpha_ub"


@dataclass(frozen=True)
class CirculantGraph:
    """Cayley graph of Z_m^n: x ~ y whenever x - y lies in the connection set."""

    modulus: int
    dim: int
    connection_set: frozenset

    def __post_init__(self):
        m = int(self.modulus)
        n = int(self.dim)
        if m < 3:
            raise ValueError(f"modulus must be at least 3, got {m}")
        if n < 1:
            raise ValueError(f"dimension must be at least 1, got {n}")
        if m**n > _VERTEX_CAP:
            raise ValueError(f"{m}^{n} vertices exceed the cap {_VERTEX_CAP}")
        cset = frozenset(tuple(int(c) % m for c in s) for s in self.connection_set)
        zero = (0,) * n
        for s in cset:
            if len(s) != n:
                raise ValueError(f"connection element {s} has wrong arity")
            if s == zero:
                raise ValueError("connection set must not contain 0")
            if tuple((-c) % m for c in s) not in cset:
                raise ValueError(f"connection set not closed under negation at {s}")
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "connection_set", cset)

    @property
    def vertex_count(self) -> int:
        return self.modulus**self.dim

    @property
    def degree(self) -> int:
        return len(self.connection_set)


def _folded(m: int) -> np.ndarray:
    """Signed representatives of Z_m: j for j <= m/2, j - m beyond."""
    f = np.arange(m, dtype=float)
    f[f > m / 2.0] -= m
    return f


def build_torus_graph(m: int, n: int, radii, tol: float = 0.25) -> CirculantGraph:
    """Annulus circulant: s != 0 with | ||s|| - d_i | <= tol for some radius.

    Norms are taken on folded representatives, so the set is automatically
    symmetric; radii are in lattice units.
    """
    m, n = int(m), int(n)
    if m < 3 or n < 1:
        raise ValueError("need modulus >= 3 and dimension >= 1")
    if m**n > _VERTEX_CAP:
        raise ValueError(f"{m}^{n} vertices exceed the cap {_VERTEX_CAP}")
    ds = [float(d) for d in radii]
    if not ds or any(d <= 0.0 for d in ds):
        raise ValueError("radii must be positive")
    tol = float(tol)
    if not (0.0 < tol < 1.0):
        raise ValueError(f"tol must lie in (0, 1), got {tol!r}")

    fold2 = _folded(m) ** 2
    norm2 = np.zeros((m,) * n)
    for axis in range(n):
        shape = [1] * n
        shape[axis] = m
        norm2 = norm2 + fold2.reshape(shape)
    norms = np.sqrt(norm2)
    mask = np.zeros_like(norms, dtype=bool)
    for d in ds:
        mask |= np.abs(norms - d) <= tol
    mask &= norm2 > 0.0
    members = np.argwhere(mask)
    if members.size == 0:
        raise ValueError("no lattice vector matches any radius; connection set empty")
    return CirculantGraph(m, n, frozenset(map(tuple, members.tolist())))


def circulant_spectrum(g: CirculantGraph) -> np.ndarray:
    """All eigenvalues (character sums), nonincreasing.

    lambda_u = sum_{s in S} cos(2 pi u.s / m), computed for every u at once
    as the FFT of the connection-set indicator.
    """
    m, n = g.modulus, g.dim
    indicator = np.zeros((m,) * n)
    idx = np.array(sorted(g.connection_set), dtype=int)
    indicator[tuple(idx.T)] = 1.0
    spec = np.fft.fftn(indicator).real.ravel()
    return np.sort(spec)[::-1]


def circulant_to_graph(g: CirculantGraph) -> Graph:
    """Expanded vertex form, for dense eigensolvers and brute-force oracles."""
    m, n = g.modulus, g.dim
    total = g.vertex_count
    if total > _DENSE_CAP:
        raise ValueError(f"{total} vertices exceed the dense cap {_DENSE_CAP}")
    coords = np.indices((m,) * n).reshape(n, total).T
    weights = m ** np.arange(n - 1, -1, -1)
    edges = set()
    for s in sorted(g.connection_set):
        shifted = (coords + np.array(s)) % m
        targets = shifted @ weights
        sources = np.arange(total)
        lo = np.minimum(sources, targets)
        hi = np.maximum(sources, targets)
        edges.update(zip(lo.tolist(), hi.tolist()))
    return Graph(total, frozenset(edges))


def symmetrize(a: SymMatrix, generators, cap: int = _GROUP_CAP) -> SymMatrix:
    """Average of P^T A P over the permutation group the generators close to.

    The result commutes with every group element; when the group is
    vertex-transitive the all-ones vector becomes an eigenvector.
    """
    size = a.size
    gens = []
    for perm in generators:
        p = tuple(int(v) for v in perm)
        if sorted(p) != list(range(size)):
            raise ValueError("generator is not a permutation of the vertex set")
        gens.append(p)

    identity = tuple(range(size))
    group = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for sigma in frontier:
            for p in gens:
                composed = tuple(p[s] for s in sigma)
                if composed not in group:
                    if len(group) >= cap:
                        raise ValueError(f"group order exceeds cap {cap}")
                    group.add(composed)
                    nxt.append(composed)
        frontier = nxt

    dense = a.to_dense()
    acc = np.zeros_like(dense)
    for sigma in sorted(group):
        p = np.array(sigma)
        acc += dense[np.ix_(p, p)]
    return SymMatrix.from_dense(acc / len(group))


def _circulant_bounds(m: int, n: int, lattice_radii, tol: float):
    """(chi_lb, alpha_ub) from the exact circulant spectrum.

    The graph is regular of degree |S| with A1 = |S|1, so the ratio bound
    needs no degree-fluctuation correction.
    """
    g = build_torus_graph(m, n, lattice_radii, tol)
    spec = circulant_spectrum(g)
    lam_min = float(spec[-1])
    lam_max = float(spec[0])
    chi = (lam_max - lam_min) / (-lam_min)
    alpha = (-lam_min) / (g.degree - lam_min)
    return chi, alpha


def convergence_study(n: int, radii, moduli, tol: float = 0.25):
    """Discrete Hoffman bounds along refining circulants vs continuous targets.

    For modulus m the radii are scaled to lattice units as
    round(d_i * m / m_ref) with m_ref the first modulus, so the first row is
    the coarsest discretization and later rows refine it.  Returns rows
    (m, discrete_chi_lb, discrete_alpha_ub, continuous_chi_lb,
    continuous_alpha_ub); the continuous columns are constant.
    """
    n = int(n)
    ms = [int(m) for m in moduli]
    if not ms or any(b <= a for a, b in zip(ms, ms[1:])):
        raise ValueError("moduli must be strictly increasing")
    ds = [float(d) for d in radii]
    if not ds or any(d <= 0.0 for d in ds):
        raise ValueError("radii must be positive")
    m_ref = ms[0]

    uniform = RadialMeasure(n, tuple((d, 1.0 / len(ds)) for d in sorted(set(ds))))
    cont_chi = chromatic_bound_euclidean(uniform).value
    cont_alpha = density_bound(uniform).value

    rows = []
    for m in ms:
        lattice = sorted({round(d * m / m_ref) for d in ds})
        lattice = [r for r in lattice if r > 0]
        if not lattice:
            raise ValueError(f"all radii round to zero at modulus {m}")
        chi, alpha = _circulant_bounds(m, n, lattice, tol)
        rows.append((m, chi, alpha, cont_chi, cont_alpha))
    return rows


def convergence_csv(rows) -> str:
    """CSV text for a convergence table: header plus 10-significant-digit rows."""
    lines = [_CSV_HEADER]
    for m, dchi, dalpha, cchi, calpha in rows:
        cells = [str(int(m))] + [f"{float(v):.10g}" for v in (dchi, dalpha, cchi, calpha)]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
