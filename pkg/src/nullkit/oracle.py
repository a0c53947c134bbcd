"""Independent brute-force validators for the Groebner machinery.

Membership is decided by exact Gaussian elimination on the linear system of
coefficient-matching constraints for degree-bounded quotients.  None of this
code shares a reduction path with the Groebner engine it cross-checks.

Sampling is deterministic: a fixed low-height grid of Gaussian-rational
coordinates is enumerated first (so instances built around known zeros are
hit by construction), followed by a seeded random tail.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ShapeError
from .polyring import DirectionalPoint, GoodPoint, MPoly, Ring, VecPoly
from .scalars import GQ_ONE, GQ_ZERO, GaussQ, QuatQ


@dataclass(frozen=True)
class SampleConfig:
    """Deterministic sampling parameters; identical configs reproduce
    identical streams."""

    seed: int = 0
    trials: int = 48
    height: int = 4


# ---------------------------------------------------------------------------
# exact linear algebra over the Gaussian rationals


def _solve_sparse(equations):
    """Solve a sparse linear system given as (coeff_dict, rhs) pairs.

    Returns a dict mapping unknown keys to GaussQ values (free unknowns are
    zero), or None when inconsistent.  Deterministic: rows are folded in
    order and each picks its smallest remaining column as pivot.
    """
    pivots = {}  # column -> (row_dict, rhs), row normalized with pivot 1
    for row, rhs in equations:
        row = dict(row)
        for col in sorted(row):
            if col in pivots:
                prow, prhs = pivots[col]
                factor = row.pop(col)
                for c2, v2 in prow.items():
                    if c2 == col:
                        continue
                    prev = row.get(c2)
                    s = -factor * v2 if prev is None else prev - factor * v2
                    if s.is_zero():
                        row.pop(c2, None)
                    else:
                        row[c2] = s
                rhs = rhs - factor * prhs
        if not row:
            if not rhs.is_zero():
                return None
            continue
        pivot = min(row)
        inv = row[pivot].inv()
        row = {c: v * inv for c, v in row.items()}
        rhs = rhs * inv
        pivots[pivot] = (row, rhs)

    solution = {}
    for col in sorted(pivots, reverse=True):
        row, rhs = pivots[col]
        value = rhs
        for c2, v2 in row.items():
            if c2 == col:
                continue
            value = value - v2 * solution.get(c2, GQ_ZERO)
        solution[col] = value
    return solution


def gauss_kernel(rows, ncols: int):
    """Exact kernel basis of a matrix given as a list of coefficient rows.

    Returns a list of length-``ncols`` tuples, one per free column, in
    ascending free-column order.
    """
    pivots = {}
    for row in rows:
        row = {c: v for c, v in enumerate(row) if not v.is_zero()}
        for col in sorted(row):
            if col in pivots:
                factor = row.pop(col)
                for c2, v2 in pivots[col].items():
                    if c2 == col:
                        continue
                    prev = row.get(c2)
                    s = -factor * v2 if prev is None else prev - factor * v2
                    if s.is_zero():
                        row.pop(c2, None)
                    else:
                        row[c2] = s
        if row:
            pivot = min(row)
            inv = row[pivot].inv()
            pivots[pivot] = {c: v * inv for c, v in row.items()}

    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [GQ_ZERO] * ncols
        vec[fc] = GQ_ONE
        for col in sorted(pivots, reverse=True):
            row = pivots[col]
            value = GQ_ZERO
            for c2, v2 in row.items():
                if c2 == col:
                    continue
                value = value - v2 * vec[c2]
            vec[col] = value
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# degree-bounded membership


def _monomials_up_to(nvars: int, bound: int):
    """All exponent tuples of total degree <= bound, lexicographic order."""
    if nvars == 0:
        return [()]
    out = []
    for head in range(bound + 1):
        for tail in _monomials_up_to(nvars - 1, bound - head):
            out.append((head,) + tail)
    return out


def linear_membership(target: VecPoly, gens, deg_bound: int):
    """Decide whether ``target`` is a combination of ``gens`` with quotient
    degrees at most ``deg_bound``; sound and complete at the bound.

    Returns the quotient polynomials, or None when no bounded solution
    exists.
    """
    gens = list(gens)
    ring = target.ring
    rank = target.rank
    for g in gens:
        if g.rank != rank or g.ring != ring:
            raise ShapeError("generators and target live in different modules")
    if deg_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    monos = _monomials_up_to(ring.nvars, deg_bound)

    # unknown (j, mono) = coefficient of mono in quotient j
    columns = {}
    for j, g in enumerate(gens):
        for pos, comp in enumerate(g.comps):
            for gm, gc in comp.terms.items():
                for qm in monos:
                    key = (pos, tuple(a + b for a, b in zip(gm, qm)))
                    columns.setdefault(key, {})
                    col = columns[key]
                    unk = (j, qm)
                    prev = col.get(unk)
                    s = gc if prev is None else prev + gc
                    if s.is_zero():
                        col.pop(unk, None)
                    else:
                        col[unk] = s

    rhs_map = {}
    for pos, comp in enumerate(target.comps):
        for m, c in comp.terms.items():
            rhs_map[(pos, m)] = c

    for key in rhs_map:
        columns.setdefault(key, {})

    equations = [(coeffs, rhs_map.get(key, GQ_ZERO))
                 for key, coeffs in sorted(columns.items())]
    solution = _solve_sparse(equations)
    if solution is None:
        return None

    quotients = []
    for j in range(len(gens)):
        terms = {}
        for qm in monos:
            value = solution.get((j, qm))
            if value is not None and not value.is_zero():
                terms[qm] = value
        quotients.append(MPoly(ring, terms))
    return quotients


# ---------------------------------------------------------------------------
# deterministic sampling


def _grid_values(height: int):
    """Fixed stream of small Gaussian rationals, lowest height first."""
    vals = [GaussQ(0), GaussQ(1), GaussQ(-1), GaussQ(0, 1), GaussQ(0, -1),
            GaussQ(1, 1), GaussQ(1, -1), GaussQ(-1, 1), GaussQ(-1, -1),
            GaussQ(2), GaussQ(-2), GaussQ(0, 2), GaussQ(0, -2),
            GaussQ(Fraction(1, 2)), GaussQ(Fraction(-1, 2))]
    return [v for v in vals if abs(v.re) <= height and abs(v.im) <= height]


def _random_rat(rng: random.Random, height: int) -> Fraction:
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return Fraction(num, den)


def _random_gauss(rng: random.Random, height: int) -> GaussQ:
    return GaussQ(_random_rat(rng, height), _random_rat(rng, height))


def sample_points(cfg: SampleConfig, d: int):
    """Deterministic stream of Gaussian-rational points in d coordinates:
    the low-height grid first, then seeded random points, ``cfg.trials`` in
    total."""
    out = []
    for point in itertools.product(_grid_values(cfg.height), repeat=d):
        if len(out) >= cfg.trials:
            return out
        out.append(tuple(point))
    rng = random.Random(cfg.seed)
    while len(out) < cfg.trials:
        out.append(tuple(_random_gauss(rng, cfg.height) for _ in range(d)))
    return out


def sample_good_point(cfg: SampleConfig, d: int,
                      rng: random.Random | None = None) -> GoodPoint:
    """Random point with pairwise commuting quaternion coordinates.

    Coordinates have the shape alpha_l + beta_l * q for a single random
    quaternion q, which commutes by construction.
    """
    rng = rng or random.Random(cfg.seed)
    q = QuatQ(*(_random_rat(rng, cfg.height) for _ in range(4)))
    coords = []
    for _ in range(d):
        alpha = _random_rat(rng, cfg.height)
        beta = _random_rat(rng, cfg.height)
        coords.append(QuatQ(alpha) + q * beta)
    return GoodPoint(coords)


def _ideal_generators(gens_or_ideal):
    gens = getattr(gens_or_ideal, "generators", None)
    return gens if gens is not None else list(gens_or_ideal)


def sample_directional_zeros(gens_or_ideal, n: int, d: int,
                             cfg: SampleConfig):
    """Directional points annihilating every generator, found by exact
    kernel computation at sampled coordinates."""
    gens = _ideal_generators(gens_or_ideal)
    out = []
    for a in sample_points(cfg, d):
        rows = []
        for g in gens:
            rows.extend(g.eval_point(a))
        if rows:
            kernel = gauss_kernel(rows, n)
        else:
            kernel = [tuple(GQ_ONE if c == idx else GQ_ZERO
                            for c in range(n)) for idx in range(n)]
        for v in kernel:
            out.append(DirectionalPoint(a, v))
    return out


def refute_by_sampling(f_mat, gens_or_ideal, cfg: SampleConfig):
    """First sampled directional zero of the generators that the query
    matrix does not annihilate, or None."""
    gens = _ideal_generators(gens_or_ideal)
    n = f_mat.n
    d = f_mat.ring.nvars
    for p in sample_directional_zeros(gens, n, d, cfg):
        value = f_mat.eval_dir(p)
        if any(not x.is_zero() for x in value):
            return p
    return None
