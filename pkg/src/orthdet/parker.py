"""Batch parity verification: every computed determinant class must be odd.

The sweeps cover the three rational families (unipotent, symmetric group
via q = 1, and sign pairs) over configurable ranges, recording failures as
witnesses instead of booleans: a single even class would be mathematically
significant and has to be diagnosable.

The point-wise parity lemma behind the sweeps compares c(c+2) with
[c]_q [c+2]_q; both sides are read through their 2-adic valuation, which
keeps the check exact even where the q-integer products are thousands of
digits long.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InvariantViolation, NotIrrPlusError
from .gl import sign_pair_determinant, unipotent_degree, unipotent_determinant
from .hecke import det_poly_factored
from .squareclass import Parity, SquareClass, parity_of_integer
from .tableaux import check_partition, enumerate_partitions, syt_count

DEFAULT_WITNESS_LIMIT = 8


def lemma_parity_check(c: int, q: int) -> bool:
    """Whether c(c+2) and [c]_q [c+2]_q lie in square classes of equal parity.

    True for every valid input is the theorem; a False return is a finding.
    """
    if c < 1:
        raise ValueError(f"c must be positive, got {c}")
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    lhs = parity_of_integer(c * (c + 2))
    qc = (q**c - 1) // (q - 1)
    qc2 = (q ** (c + 2) - 1) // (q - 1)
    return lhs == parity_of_integer(qc * qc2)


def parity_bridge_check(shape, q: int) -> bool:
    """Whether the determinant class parity at q matches the one at 1."""
    shape = check_partition(shape)
    if syt_count(shape) % 2:
        raise ValueError(f"shape {shape} has odd degree: no determinant class")
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be odd and >= 3, got {q}")
    factored = det_poly_factored(shape)
    return factored.parity_at(q) == factored.parity_at(1)


@dataclass(frozen=True)
class ParityWitness:
    """One checked character: shapes, parameter, class and its parity."""

    shapes: tuple[tuple[int, ...], ...]
    q: int
    det_class: SquareClass

    @property
    def parity(self) -> Parity:
        return self.det_class.parity

    def to_json(self) -> dict:
        return {
            "shapes": [list(s) for s in self.shapes],
            "q": self.q,
            "class": self.det_class.to_json(),
        }


@dataclass(frozen=True)
class ParityReport:
    """Outcome of one sweep; the conjecture holds on the scope iff ok."""

    family: str
    n_max: int
    q_values: tuple[int, ...]
    checked: int
    failures: tuple[ParityWitness, ...]
    witnesses: tuple[ParityWitness, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n_max": self.n_max,
            "q": list(self.q_values),
            "checked": self.checked,
            "ok": self.ok,
            "failures": [w.to_json() for w in self.failures],
            "witnesses": [w.to_json() for w in self.witnesses],
        }


def _shapes_of(n: int) -> list[tuple[int, ...]]:
    return [()] if n == 0 else enumerate_partitions(n)


def _check_unipotent_shape(args) -> list[ParityWitness]:
    shape, q_values = args
    count = syt_count(shape)
    rows = []
    for q in q_values:
        degree = unipotent_degree(shape, q)
        if degree % 2 != count % 2:
            raise InvariantViolation(
                f"degree parity {degree % 2} disagrees with tableau-count parity "
                f"{count % 2} for {shape} at q={q}"
            )
        if degree % 2:
            continue
        rows.append(ParityWitness((shape,), q, unipotent_determinant(shape, q).det_class))
    return rows


def _check_symmetric_shape(shape) -> list[ParityWitness]:
    if syt_count(shape) % 2:
        return []
    det = det_poly_factored(shape).square_class(1)
    return [ParityWitness((shape,), 1, det)]


def _check_sign_pairs(args) -> list[ParityWitness]:
    lam, n, q_values = args
    rows = []
    for mu in _shapes_of(n - sum(lam)):
        for q in q_values:
            try:
                result = sign_pair_determinant(lam, mu, q)
            except NotIrrPlusError:
                continue
            rows.append(ParityWitness((lam, mu), q, result.det_class))
    return rows


def _run_sweep(family, n_max, q_values, tasks, worker, witness_limit, jobs) -> ParityReport:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(worker, tasks))
    else:
        batches = [worker(task) for task in tasks]
    checked = 0
    failures = []
    witnesses = []
    for batch in batches:
        for row in batch:
            checked += 1
            if row.parity is not Parity.ODD:
                failures.append(row)
            if len(witnesses) < witness_limit:
                witnesses.append(row)
    return ParityReport(
        family=family,
        n_max=n_max,
        q_values=tuple(q_values),
        checked=checked,
        failures=tuple(failures),
        witnesses=tuple(witnesses),
    )


def verify_parker_unipotent(
    n_max: int,
    q_values,
    *,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    jobs: int = 1,
) -> ParityReport:
    """Check all even-degree unipotent determinant classes up to n_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    q_values = tuple(q_values)
    from .gl import as_odd_prime_power

    for q in q_values:
        as_odd_prime_power(q)
    tasks = [
        (shape, q_values)
        for n in range(2, n_max + 1)
        for shape in enumerate_partitions(n)
    ]
    return _run_sweep(
        "unipotent", n_max, q_values, tasks, _check_unipotent_shape, witness_limit, jobs
    )


def verify_parker_symmetric(
    n_max: int,
    *,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    jobs: int = 1,
) -> ParityReport:
    """Check all even-degree symmetric group determinant classes up to n_max."""
    if n_max < 2:
        raise ValueError(f"n_max must be at least 2, got {n_max}")
    tasks = [
        shape for n in range(2, n_max + 1) for shape in enumerate_partitions(n)
    ]
    return _run_sweep(
        "symmetric", n_max, (1,), tasks, _check_symmetric_shape, witness_limit, jobs
    )


def verify_parker_sign_pairs(
    n_max: int,
    q_values,
    *,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    jobs: int = 1,
) -> ParityReport:
    """Check all even-degree sign-pair determinant classes up to n_max.

    Pairs run over (lam, mu) with |lam| + |mu| = n <= n_max, either side
    possibly empty (but not both); odd-degree characters are skipped.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    q_values = tuple(q_values)
    from .gl import as_odd_prime_power

    for q in q_values:
        as_odd_prime_power(q)
    tasks = [
        (lam, n, q_values)
        for n in range(1, n_max + 1)
        for ell in range(0, n + 1)
        for lam in _shapes_of(ell)
    ]
    return _run_sweep(
        "sign-pair", n_max, q_values, tasks, _check_sign_pairs, witness_limit, jobs
    )
