"""Hook Kronecker coefficients by tableau counting, and a character oracle.

``kron_hook`` counts natural-order colored tableaux whose total reading
word is a ballot sequence and whose southwest corner is unbarred; that
count is g(lam, (n-d, 1^d), nu).  ``kron_oracle`` computes any Kronecker
coefficient from the character table, with characters given by the
Murnaghan-Nakayama rule.

Tableaux of total content lam only use the values 1..len(lam), so the
orders used for counting live on that many letters.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice
from math import factorial, prod
from typing import Iterable, Sequence

from .orders import natural_order, small_bar_order
from .shapes import Partition, ShapeError, hook_mu, partitions_of
from .tableaux import ColoredTableau, enumerate_tableaux, iter_fillings

MAX_SWEEP_N = 8
THREADS_ENV = "KRONHOOK_THREADS"


class OracleError(ArithmeticError):
    """The character formula produced a non-integer or negative multiplicity."""


# --- character oracle -------------------------------------------------------

@lru_cache(maxsize=None)
def _chi(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1 if not lam else 0
    k, rest = rho[0], rho[1:]
    length = len(lam)
    beta = [part + length - 1 - i for i, part in enumerate(lam)]
    present = set(beta)
    total = 0
    for b in beta:
        # removing a border strip of size k moves one bead from b to b - k;
        # its height is the number of beads jumped over
        if b - k < 0 or b - k in present:
            continue
        height = sum(1 for c in beta if b - k < c < b)
        moved = sorted((c if c != b else b - k for c in beta), reverse=True)
        smaller = tuple(p for p in (m - (length - 1 - i) for i, m in enumerate(moved)) if p)
        total += (-1) ** height * _chi(smaller, rest)
    return total


def mn_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """The irreducible character of S_n indexed by ``lam`` at cycle type ``rho``."""
    lam, rho = Partition(lam), Partition(sorted(rho, reverse=True))
    if lam.n != rho.n:
        raise ShapeError(f"character needs |lam| = |rho|, got {lam.n} and {rho.n}")
    return _chi(tuple(lam), tuple(rho))


def z(rho: Iterable[int]) -> int:
    """Centralizer order prod_i i^(m_i) m_i! of a permutation of cycle type ``rho``."""
    rho = tuple(rho)
    return prod(i ** rho.count(i) * factorial(rho.count(i)) for i in set(rho))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    values: dict[tuple[Partition, Partition], int]
    class_sizes: dict[Partition, int]

    @property
    def partitions(self) -> list[Partition]:
        return list(self.class_sizes)

    def __call__(self, lam, rho) -> int:
        return self.values[Partition(lam), Partition(rho)]


@lru_cache(maxsize=None)
def character_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    values = {(lam, rho): _chi(tuple(lam), tuple(rho)) for lam in parts for rho in parts}
    sizes = {rho: factorial(n) // z(rho) for rho in parts}
    return CharacterTable(n, values, sizes)


def kron_oracle(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """g(lam, mu, nu) = (1/n!) sum over classes of |class| chi_lam chi_mu chi_nu."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if not lam.n == mu.n == nu.n:
        raise ShapeError(f"Kronecker coefficient needs equal sizes, got {lam.n}, {mu.n}, {nu.n}")
    n = lam.n
    table = character_table(n)
    total = sum(
        size * table.values[lam, rho] * table.values[mu, rho] * table.values[nu, rho]
        for rho, size in table.class_sizes.items()
    )
    g, r = divmod(total, factorial(n))
    if r or g < 0:
        raise OracleError(f"class sum {total}/{factorial(n)} is not a multiplicity")
    return g


def oracle_hook(lam: Iterable[int], d: int, nu: Iterable[int]) -> int:
    """g(lam, (n-d, 1^d), nu), taken to be 0 at d = -1."""
    lam = Partition(lam)
    if d == -1:
        return 0
    return kron_oracle(lam, hook_mu(lam.n, d), nu)


# --- tableau counts ---------------------------------------------------------

def _check_args(lam, d, nu) -> tuple[Partition, Partition]:
    lam, nu = Partition(lam), Partition(nu)
    if lam.n != nu.n:
        raise ShapeError(f"lambda and nu must have the same size, got {lam.n} and {nu.n}")
    if lam.n < 1 or not 0 <= d <= lam.n - 1:
        raise ShapeError(f"d must lie in [0, n-1] for n={lam.n}, got {d}")
    return lam, nu


@lru_cache(maxsize=4096)
def natural_corner_counts(lam: tuple[int, ...], nu: tuple[int, ...]) -> dict[int, tuple[int, int]]:
    """Map color d to (barred corner, unbarred corner) counts of natural-order ballot tableaux."""
    n = sum(lam)
    out = {d: [0, 0] for d in range(n + 1)}
    if n == 0:
        out[0][1] = 1
        return {d: tuple(v) for d, v in out.items()}
    sw = sum(nu) - nu[-1]  # flat index of the southwest cell
    for flat in iter_fillings(nu, natural_order(len(lam)), lam, ballot=True):
        d = sum(1 for x in flat if x.barred)
        out[d][0 if flat[sw].barred else 1] += 1
    return {d: tuple(v) for d, v in out.items()}


@lru_cache(maxsize=4096)
def small_bar_counts(lam: tuple[int, ...], nu: tuple[int, ...]) -> dict[int, int]:
    """Map color d to the number of small-bar-order ballot tableaux."""
    n = sum(lam)
    out = {d: 0 for d in range(n + 1)}
    if n == 0:
        out[0] = 1
        return out
    for flat in iter_fillings(nu, small_bar_order(len(lam)), lam, ballot=True):
        out[sum(1 for x in flat if x.barred)] += 1
    return out


def corner_split(lam, d: int, nu) -> tuple[int, int]:
    """(|barred southwest corner|, |unbarred southwest corner|) among natural-order ballot tableaux."""
    lam, nu = _check_args(lam, d, nu)
    return natural_corner_counts(tuple(lam), tuple(nu))[d]


def kron_hook(lam, d: int, nu) -> int:
    """g(lam, (n-d, 1^d), nu) as a count of colored Yamanouchi tableaux."""
    return corner_split(lam, d, nu)[1]


def kron_sum(lam, d: int, nu) -> int:
    """g(lam, mu(d), nu) + g(lam, mu(d-1), nu) as a small-bar-order tableau count."""
    lam, nu = _check_args(lam, d, nu)
    return small_bar_counts(tuple(lam), tuple(nu))[d]


def hook_witnesses(lam, d: int, nu, cap: int | None = 20) -> list[ColoredTableau]:
    """The tableaux counted by ``kron_hook``, first ``cap`` of them."""
    lam, nu = _check_args(lam, d, nu)
    order = natural_order(len(lam))
    found = enumerate_tableaux(
        nu, lam, d, order,
        filter=lambda t: not t[t.southwest].barred,
        ballot=True,
    )
    return list(islice(found, cap))


# --- sweeps -----------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientReport:
    lam: Partition
    d: int
    nu: Partition
    theorem_count: int
    sum_count: int
    oracle_g_d: int
    oracle_g_dm1: int
    corner_plus: int
    corner_minus: int
    mismatches: tuple[str, ...] = ()
    witnesses: tuple[ColoredTableau, ...] | None = field(default=None, compare=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        data = {
            "lambda": list(self.lam),
            "d": self.d,
            "nu": list(self.nu),
            "theorem_count": self.theorem_count,
            "sum_count": self.sum_count,
            "oracle_g_d": self.oracle_g_d,
            "oracle_g_dm1": self.oracle_g_dm1,
            "corner_plus": self.corner_plus,
            "corner_minus": self.corner_minus,
            "mismatches": list(self.mismatches),
        }
        if self.witnesses is not None:
            from .tableaux import tableau_to_json
            data["witnesses"] = [tableau_to_json(t) for t in self.witnesses]
        return data


def reports_for_pair(lam: Partition, nu: Partition, d_range: Sequence[int] | None = None) -> list[CoefficientReport]:
    """Reports for one (lam, nu) and every requested d."""
    n = lam.n
    corners = natural_corner_counts(tuple(lam), tuple(nu))
    sums = small_bar_counts(tuple(lam), tuple(nu))
    out = []
    for d in d_range if d_range is not None else range(n):
        plus, minus = corners[d]
        g_d, g_dm1 = oracle_hook(lam, d, nu), oracle_hook(lam, d - 1, nu)
        bad = []
        if minus != g_d:
            bad.append(f"theorem count {minus} != oracle {g_d}")
        if sums[d] != g_d + g_dm1:
            bad.append(f"small bar count {sums[d]} != oracle sum {g_d + g_dm1}")
        if plus + minus != sums[d]:
            bad.append(f"natural ballot count {plus + minus} != small bar count {sums[d]}")
        prev_minus = corners[d - 1][1] if d >= 1 else 0
        if plus != prev_minus:
            bad.append(f"barred corners {plus} != unbarred corners at d-1 {prev_minus}")
        out.append(CoefficientReport(lam, d, nu, minus, sums[d], g_d, g_dm1, plus, minus, tuple(bad)))
    return out


def _pair_job(args):
    lam, nu, d_range = args
    return reports_for_pair(lam, nu, d_range)


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def verify_sweep(
    n: int,
    d_range: Sequence[int] | None = None,
    workers: int | None = None,
    max_n: int = MAX_SWEEP_N,
) -> list[CoefficientReport]:
    """Reports for every lam, nu of n and every d, ordered by (lam, nu, d).

    Partitions follow :func:`partitions_of` order.  ``workers`` defaults to
    the ``KRONHOOK_THREADS`` environment variable (1 if unset).
    """
    if not 1 <= n <= max_n:
        raise ShapeError(f"sweep size must lie in [1, {max_n}], got {n}")
    if d_range is not None:
        d_range = [d for d in d_range if 0 <= d <= n - 1]
    parts = partitions_of(n)
    jobs = [(lam, nu, d_range) for lam in parts for nu in parts]
    workers = default_workers() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_pair_job, jobs, chunksize=4))
    else:
        chunks = [_pair_job(job) for job in jobs]
    return [report for chunk in chunks for report in chunk]


def sweep_failed(reports: Iterable[CoefficientReport]) -> bool:
    return any(not r.ok for r in reports)
