"""Quiver representations, quiver-Grassmannian point counts, and the
cluster-character map from rigid indecomposables to cluster variables.

Euler characteristics are obtained by counting points over several primes of
good reduction, interpolating the counting polynomial and evaluating it at 1.
This assumes the subrepresentation varieties in play have polynomial point
counts whose value at 1 is the Euler characteristic, which holds for the
rigid representations of the Dynkin quivers treated here; the interpolation
integrality check and the cross-checks against mutation guard the assumption.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .laurent import LaurentPoly
from .linalg import (
    gaussian_binomial,
    in_row_space_mod,
    lagrange_interpolate,
    mat_vec_mod,
    rank_mod,
    rank_rational,
    subspaces_mod,
)
from .quiver import IceQuiver, is_dynkin
from .roots import positive_roots
from .seeds import cluster_variables, denominator_vector

PRIME_POOL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
SUBSPACE_TUPLE_BOUND = 10 ** 6


class SearchExhausted(RuntimeError):
    """Random search for a rigid representation ran out of trials."""


class InterpolationError(RuntimeError):
    """Point counts did not fit an integer counting polynomial."""


IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuiverRep:
    """Integer-matrix representation of a good acyclic quiver.

    ``arrows[r] = (i, j)`` are 0-based source/target (repeated per
    multiplicity); ``maps[r]`` is the d_j x d_i matrix of the r-th arrow.
    """

    quiver: IceQuiver
    dim: tuple[int, ...]
    maps: tuple[IntMatrix, ...]

    def __post_init__(self) -> None:
        arrows = rep_arrows(self.quiver)
        if len(self.maps) != len(arrows):
            raise ValueError("need one matrix per arrow")
        for (i, j), mat in zip(arrows, self.maps):
            if len(mat) != self.dim[j] or any(len(row) != self.dim[i] for row in mat):
                raise ValueError(
                    f"matrix for arrow {i + 1}->{j + 1} must be {self.dim[j]}x{self.dim[i]}"
                )

    @property
    def arrows(self) -> list[tuple[int, int]]:
        return rep_arrows(self.quiver)


def rep_arrows(q: IceQuiver) -> list[tuple[int, int]]:
    """0-based arrow list (source, target) expanded by multiplicity."""
    out: list[tuple[int, int]] = []
    for i in range(q.m):
        for j in range(q.m):
            out.extend((i, j) for _ in range(max(0, q.b[i][j])))
    return out


def euler_form(q: IceQuiver, d: tuple[int, ...], e: tuple[int, ...]) -> int:
    """<d, e> = sum d_i e_i - sum over arrows i->j of d_i e_j."""
    total = sum(a * b for a, b in zip(d, e))
    for i, j in rep_arrows(q):
        total -= d[i] * e[j]
    return total


def _end_dim_rational(rep: QuiverRep) -> int:
    """Dimension over Q of the endomorphism space (block maps phi_i with
    phi_j V_alpha = V_alpha phi_i for every arrow)."""
    dim = rep.dim
    offsets = []
    at = 0
    for d in dim:
        offsets.append(at)
        at += d * d
    unknowns = at
    rows: list[list[int]] = []
    for (i, j), mat in zip(rep.arrows, rep.maps):
        di, dj = dim[i], dim[j]
        # Equation block: phi_j . mat - mat . phi_i = 0, entrywise (r, c).
        for r in range(dj):
            for c in range(di):
                row = [0] * unknowns
                for s in range(dj):
                    row[offsets[j] + r * dj + s] += mat[s][c]
                for s in range(di):
                    row[offsets[i] + s * di + c] -= mat[r][s]
                rows.append(row)
    if not rows:
        return sum(d * d for d in dim)
    return unknowns - rank_rational(rows)


def _end_dim_mod(rep: QuiverRep, p: int) -> int:
    dim = rep.dim
    offsets = []
    at = 0
    for d in dim:
        offsets.append(at)
        at += d * d
    unknowns = at
    rows: list[list[int]] = []
    for (i, j), mat in zip(rep.arrows, rep.maps):
        di, dj = dim[i], dim[j]
        for r in range(dj):
            for c in range(di):
                row = [0] * unknowns
                for s in range(dj):
                    row[offsets[j] + r * dj + s] += mat[s][c]
                for s in range(di):
                    row[offsets[i] + s * di + c] -= mat[r][s]
                rows.append(row)
    if not rows:
        return sum(d * d for d in dim)
    return unknowns - rank_mod(rows, p)


def end_dim(rep: QuiverRep) -> int:
    return _end_dim_rational(rep)


def generic_rigid_rep(
    q: IceQuiver,
    d: tuple[int, ...],
    trials: int = 1000,
    rng: random.Random | int | None = None,
) -> QuiverRep:
    """A 0/1-matrix representation with one-dimensional endomorphism ring.

    For a positive-root dimension vector of a Dynkin quiver this certifies a
    rigid indecomposable; the search is randomized but the certificate is an
    exact rank computation.
    """
    dynkin = is_dynkin(q)
    if dynkin is None:
        raise ValueError("generic_rigid_rep expects a Dynkin quiver")
    if tuple(d) not in positive_roots(dynkin):
        raise ValueError(f"{d} is not a positive root of {dynkin}")
    rand = rng if isinstance(rng, random.Random) else random.Random(rng)
    arrows = rep_arrows(q)
    for _ in range(trials):
        maps = tuple(
            tuple(
                tuple(rand.randint(0, 1) for _ in range(d[i])) for _ in range(d[j])
            )
            for i, j in arrows
        )
        rep = QuiverRep(q, tuple(d), maps)
        if _end_dim_rational(rep) == 1:
            return rep
    raise SearchExhausted(
        f"no rigid representation with dimension vector {d} in {trials} trials"
    )


def count_subreps(rep: QuiverRep, e: tuple[int, ...], p: int) -> int:
    """Number of subrepresentation tuples of dimension vector e over F_p."""
    d = rep.dim
    if any(ei < 0 or ei > di for ei, di in zip(e, d)):
        raise ValueError("subrepresentation dimensions out of range")
    total = 1
    for di, ei in zip(d, e):
        total *= gaussian_binomial(di, ei, p)
        if total > SUBSPACE_TUPLE_BOUND:
            raise ValueError(
                f"subspace enumeration of {total}+ tuples exceeds the configured bound"
            )
    if total == 0:
        return 0
    arrows_by_source: dict[int, list[tuple[int, IntMatrix]]] = {}
    for (i, j), mat in zip(rep.arrows, rep.maps):
        arrows_by_source.setdefault(i, []).append((j, mat))
    count = 0
    vertex_choices = [list(subspaces_mod(d[i], e[i], p)) for i in range(len(d))]
    for choice in product(*vertex_choices):
        ok = True
        for i, targets in arrows_by_source.items():
            for j, mat in targets:
                for basis_vec in choice[i]:
                    image = mat_vec_mod(mat, basis_vec, p)
                    if any(image) and not in_row_space_mod(choice[j], image, p):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def _good_primes(rep: QuiverRep) -> list[int]:
    return [p for p in PRIME_POOL if _end_dim_mod(rep, p) == 1]


def euler_char(rep: QuiverRep, e: tuple[int, ...]) -> int:
    """Euler characteristic of the subrepresentation variety of dimension e.

    Counts points over D+1 good-reduction primes (D the ambient product-of-
    Grassmannians dimension), interpolates the degree-<=D counting polynomial,
    checks integrality and evaluates at 1.  One retry with fresh primes.
    """
    d = rep.dim
    degree = sum(ei * (di - ei) for ei, di in zip(e, d))
    good = _good_primes(rep)
    if len(good) < degree + 1:
        raise InterpolationError("not enough good-reduction primes in the pool")
    batches = [good[: degree + 1]]
    if len(good) >= 2 * (degree + 1):
        batches.append(good[degree + 1 : 2 * (degree + 1)])
    last_error: InterpolationError | None = None
    for primes in batches:
        points = [(p, count_subreps(rep, e, p)) for p in primes]
        coeffs = lagrange_interpolate(points)
        if all(c.denominator == 1 for c in coeffs):
            return int(sum(coeffs))
        last_error = InterpolationError(
            f"non-integral counting polynomial from primes {primes}"
        )
    assert last_error is not None
    raise last_error


def cc(rep: QuiverRep) -> LaurentPoly:
    """The cluster character: sum over e of chi(Gr_e) times the exponent
    monomial, divided by the dimension-vector monomial."""
    q = rep.quiver
    n = q.m
    d = rep.dim
    if not any(d):
        return LaurentPoly.one(n)  # only the empty subrepresentation contributes
    arrows = rep.arrows
    total = LaurentPoly.zero(n)
    for e in product(*(range(di + 1) for di in d)):
        chi = euler_char(rep, e)
        if chi == 0:
            continue
        exps = [0] * n
        for i, j in arrows:
            exps[j] += e[i]
            exps[i] += d[j] - e[j]
        total = total + LaurentPoly.monomial(tuple(exps), chi)
    return total.shift(tuple(-di for di in d))


@dataclass(frozen=True)
class CCRootEntry:
    root: tuple[int, ...]
    denominator: tuple[int, ...]
    value: LaurentPoly
    matched: bool


@dataclass(frozen=True)
class CCReport:
    ok: bool
    entries: tuple[CCRootEntry, ...]
    missing: tuple[LaurentPoly, ...]  # non-initial variables not hit by the map


def cc_bijection_check(
    q: IceQuiver,
    trials: int = 1000,
    rng: random.Random | int | None = None,
    budget: int = 20_000,
) -> CCReport:
    """Build one rigid indecomposable per positive root, apply the cluster
    character, and compare with the non-initial cluster variables."""
    dynkin = is_dynkin(q)
    if dynkin is None:
        raise ValueError("cc_bijection_check expects a Dynkin quiver")
    rand = rng if isinstance(rng, random.Random) else random.Random(rng)
    variables, complete = cluster_variables(q, budget)
    if not complete:
        raise ValueError("exchange graph exploration hit the budget")
    initial = {LaurentPoly.variable(i, q.n) for i in range(q.n)}
    non_initial = set(variables) - initial
    entries: list[CCRootEntry] = []
    produced: set[LaurentPoly] = set()
    for root in positive_roots(dynkin):
        rep = generic_rigid_rep(q, root, trials=trials, rng=rand)
        value = cc(rep)
        produced.add(value)
        entries.append(
            CCRootEntry(
                root=root,
                denominator=denominator_vector(value, q.n),
                value=value,
                matched=value in non_initial,
            )
        )
    missing = tuple(sorted(non_initial - produced, key=lambda p: p.sort_key()))
    ok = not missing and all(entry.matched for entry in entries) and len(produced) == len(entries)
    return CCReport(ok=ok, entries=tuple(entries), missing=missing)
