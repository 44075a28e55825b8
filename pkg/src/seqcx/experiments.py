"""Exhaustive and randomized distribution experiments.

Exhaustive mode walks every length-n prefix over F_q in lexicographic order,
tallies the distribution of E_n (and of L_n, t_n), and optionally runs the
full bound-checker battery on each prefix, counting violations.  Monte Carlo
mode samples sequences with i.i.d. uniform terms and reports the E_n
distribution across a schedule of prefix lengths, together with the fraction
of samples falling below sqrt((1-eps) * n) for a couple of eps values; the
fractions are reported, never thresholded, since the sqrt(n) growth statement
is asymptotic.

Sampling is counter-based: term i of sample j is derived by hashing
(seed, j, i, attempt) and mapping the 64-bit draw into [0, q) by rejection,
so results are independent of worker count and chunking.  Identical configs
therefore produce bit-identical records.
"""

from __future__ import annotations

import hashlib
import math
import struct
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from scipy.special import gammaincc

from . import expcomp, lincomp, theorems
from .field import Field
from .lincomp import Sequence
from .series import substitute

EXHAUSTIVE_CAP = 1 << 20

DEFAULT_SCHEDULE = (16, 25, 36, 49, 64)
LOW_FRACTION_EPS = (0.25, 0.5)


@dataclass(frozen=True)
class ExperimentConfig:
    field: Field
    n: int
    mode: str  # "exhaustive" | "montecarlo"
    samples: int = 0
    seed: int = 0
    schedule: Optional[tuple[int, ...]] = None
    checks: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "montecarlo"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive":
            if self.field.q**self.n > EXHAUSTIVE_CAP:
                raise ValueError(
                    f"q^n = {self.field.q}^{self.n} exceeds exhaustive cap"
                )
        else:
            if self.samples < 1:
                raise ValueError("montecarlo mode requires samples >= 1")
            if self.schedule is not None:
                object.__setattr__(self, "schedule", tuple(sorted(self.schedule)))

    def resolved_schedule(self) -> tuple[int, ...]:
        if self.schedule:
            return self.schedule
        return (self.n,) if self.n else DEFAULT_SCHEDULE


@dataclass
class DistributionRecord:
    q: int
    n: int
    mode: str
    total: int
    counts: dict  # E_n value -> count
    counts_l: Optional[dict] = None
    counts_t: Optional[dict] = None

    def stats(self) -> dict:
        root = math.sqrt(self.n)
        mean = sum(v * c for v, c in self.counts.items()) / self.total
        half = (self.total - 1) // 2  # lower median
        acc = 0
        median = None
        for v in sorted(self.counts):
            acc += self.counts[v]
            if acc > half:
                median = v
                break
        return {
            "mean_ratio": mean / root,
            "median_ratio": median / root,
            "min_ratio": min(self.counts) / root,
        }

    def to_dict(self) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "mode": self.mode,
            "total": self.total,
            "counts": [[v, self.counts[v]] for v in sorted(self.counts)],
            "stats": self.stats(),
        }
        if self.counts_l is not None:
            out["counts_l"] = [[v, self.counts_l[v]] for v in sorted(self.counts_l)]
        if self.counts_t is not None:
            out["counts_t"] = [[v, self.counts_t[v]] for v in sorted(self.counts_t)]
        return out


@dataclass
class EnumerationResult:
    record: DistributionRecord
    violations: int
    failures_by_claim: dict
    witness_failures: int
    checks_run: bool

    def to_dict(self) -> dict:
        return {
            "record": self.record.to_dict(),
            "violations": self.violations,
            "failures_by_claim": dict(sorted(self.failures_by_claim.items())),
            "witness_failures": self.witness_failures,
            "checks_run": self.checks_run,
        }


@dataclass
class MonteCarloResult:
    seed: int
    samples: int
    schedule: tuple
    records: dict  # n -> DistributionRecord
    low_fractions: dict  # eps (str) -> {n: fraction}

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "schedule": list(self.schedule),
            "records": {str(n): self.records[n].to_dict() for n in self.schedule},
            "low_fractions": {
                eps: {str(n): frac for n, frac in sorted(per_n.items())}
                for eps, per_n in sorted(self.low_fractions.items())
            },
        }


@dataclass
class LowExpansionProbe:
    """Count of prefixes with E_n <= b, alongside the reference value q^(b^2).

    Exploratory: the comparison is reported, not asserted; at small n the
    count can exceed the reference (e.g. q=2, n=4, b=1 gives 4 > 2).
    """

    q: int
    n: int
    b: int
    count: int
    reference: int
    exploratory: bool = True

    @property
    def ratio(self) -> float:
        return self.count / self.reference

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "b": self.b,
            "count": self.count,
            "reference_q_b_squared": self.reference,
            "ratio": self.ratio,
            "exploratory": self.exploratory,
        }


# -- counter-based sampling ---------------------------------------------------

_U64 = (1 << 64) - 1


def draw_element(seed: int, stream: int, index: int, q: int) -> int:
    """Uniform element of [0, q) from the counter (seed, stream, index).

    Raw 64-bit hash outputs are mapped by rejection, so there is no modulo
    bias; the attempt counter advances on the (astronomically rare) reject.
    """
    limit = (1 << 64) // q * q
    attempt = 0
    while True:
        block = struct.pack(">QQQQ", seed & _U64, stream & _U64, index, attempt)
        value = int.from_bytes(hashlib.sha256(block).digest()[:8], "big")
        if value < limit:
            return value % q
        attempt += 1


def sample_terms(seed: int, stream: int, length: int, q: int) -> list[int]:
    return [draw_element(seed, stream, i, q) for i in range(length)]


# -- exhaustive enumeration ---------------------------------------------------


def _decode_prefix(index: int, q: int, n: int) -> list[int]:
    """Index -> prefix digits, most significant digit first (s_0)."""
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        index, digits[pos] = divmod(index, q)
    return digits


def _check_prefix(field: Field, terms: list[int], n: int):
    """Witness-validated profile plus the full checker battery for one prefix.

    Returns (values_e, fail_counter, witness_failures).
    """
    seq = Sequence(field, terms)
    values_e = []
    witness_failures = 0
    for m in range(1, n + 1):
        wit = expcomp.expansion_complexity(seq, m)
        values_e.append(wit.complexity)
        if wit.poly is not None:
            ok = (
                wit.poly.total_degree == wit.complexity
                and substitute(wit.poly, seq.prefix_series(m), m).is_zero()
            )
            if not ok:
                witness_failures += 1
    profile_l = lincomp.linear_profile(seq, n)
    reports = theorems.check_growth(profile_l, values_e)
    for m in range(2, n + 1):
        if any(terms[:m]):
            reports.extend(theorems.check_theorem4(seq, m, expansion=values_e[m - 1]))
            reports.extend(
                theorems.check_misc_upper(seq, m, expansion_profile=values_e)
            )
    fails = Counter()
    for rep in reports:
        if rep.failed:
            fails[rep.claim_id] += 1
    return values_e, fails, witness_failures


def _enumerate_chunk(p, m, modulus, n, checks, start, stop):
    field = Field(p, m, modulus or None)
    q = field.q
    counts = Counter()
    counts_l = Counter()
    counts_t = Counter()
    fails = Counter()
    witness_failures = 0
    for index in range(start, stop):
        terms = _decode_prefix(index, q, n)
        length, conn = lincomp._bm_core(field, terms)
        fit = lincomp._fit_from_core(n, length, conn)
        counts_l[fit.complexity] += 1
        counts_t[fit.t] += 1
        if checks:
            values_e, prefix_fails, wf = _check_prefix(field, terms, n)
            counts[values_e[-1]] += 1
            fails.update(prefix_fails)
            witness_failures += wf
        else:
            counts[expcomp.expansion_value(field, terms, n)] += 1
    return counts, counts_l, counts_t, fails, witness_failures


def _chunk_ranges(total: int, workers: int):
    workers = max(1, min(workers, total))
    size = -(-total // workers)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def _run_chunks(worker, args_list, workers):
    if workers <= 1 or len(args_list) <= 1:
        return [worker(*args) for args in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(worker, *args) for args in args_list]
        return [f.result() for f in futures]


def enumerate_all(cfg: ExperimentConfig) -> EnumerationResult:
    """Walk all q^n prefixes (lexicographic), tally distributions, and count
    bound violations when cfg.checks is set."""
    if cfg.mode != "exhaustive":
        raise ValueError("enumerate_all requires exhaustive mode")
    field = cfg.field
    total = field.q**cfg.n
    ranges = _chunk_ranges(total, cfg.workers)
    args = [
        (field.p, field.m, field.modulus, cfg.n, cfg.checks, lo, hi)
        for lo, hi in ranges
    ]
    counts = Counter()
    counts_l = Counter()
    counts_t = Counter()
    fails = Counter()
    witness_failures = 0
    for part in _run_chunks(_enumerate_chunk, args, cfg.workers):
        counts.update(part[0])
        counts_l.update(part[1])
        counts_t.update(part[2])
        fails.update(part[3])
        witness_failures += part[4]
    record = DistributionRecord(
        field.q, cfg.n, "exhaustive", total, dict(counts),
        dict(counts_l), dict(counts_t),
    )
    violations = sum(fails.values()) + witness_failures
    return EnumerationResult(record, violations, dict(fails), witness_failures, cfg.checks)


def count_low_expansion(cfg: ExperimentConfig, b: int) -> LowExpansionProbe:
    """#{prefixes with E_n <= b} against q^(b^2), reported not asserted."""
    if cfg.mode != "exhaustive":
        raise ValueError("count_low_expansion requires exhaustive mode")
    field = cfg.field
    q = field.q
    count = 0
    for index in range(q**cfg.n):
        terms = _decode_prefix(index, q, cfg.n)
        if expcomp.expansion_value(field, terms, cfg.n) <= b:
            count += 1
    return LowExpansionProbe(q, cfg.n, b, count, q ** (b * b))


# -- Monte Carlo --------------------------------------------------------------


def _mc_chunk(p, m, modulus, schedule, seed, start, stop):
    field = Field(p, m, modulus or None)
    q = field.q
    length = max(schedule)
    counters = {n: Counter() for n in schedule}
    for j in range(start, stop):
        terms = sample_terms(seed, j, length, q)
        for n in schedule:
            counters[n][expcomp.expansion_value(field, terms, n)] += 1
    return counters


def monte_carlo(cfg: ExperimentConfig) -> MonteCarloResult:
    """Sample cfg.samples sequences and tabulate E_n across the schedule."""
    if cfg.mode != "montecarlo":
        raise ValueError("monte_carlo requires montecarlo mode")
    schedule = cfg.resolved_schedule()
    field = cfg.field
    ranges = _chunk_ranges(cfg.samples, cfg.workers)
    args = [
        (field.p, field.m, field.modulus, schedule, cfg.seed, lo, hi)
        for lo, hi in ranges
    ]
    counters = {n: Counter() for n in schedule}
    for part in _run_chunks(_mc_chunk, args, cfg.workers):
        for n in schedule:
            counters[n].update(part[n])
    records = {
        n: DistributionRecord(field.q, n, "montecarlo", cfg.samples, dict(counters[n]))
        for n in schedule
    }
    low_fractions = {}
    for eps in LOW_FRACTION_EPS:
        per_n = {}
        for n in schedule:
            threshold = math.sqrt((1 - eps) * n)
            below = sum(c for v, c in counters[n].items() if v < threshold)
            per_n[n] = below / cfg.samples
        low_fractions[str(eps)] = per_n
    return MonteCarloResult(cfg.seed, cfg.samples, schedule, records, low_fractions)


def chi_square_consistency(
    observed: dict, expected_probs: dict, total: int, *, min_expected: float = 5.0
) -> dict:
    """Chi-square comparison of observed counts against exact probabilities.

    Adjacent values are pooled (ascending) until each bin's expected count
    reaches min_expected; a trailing underfull bin is merged backwards.
    Returns the statistic, degrees of freedom, and p-value.
    """
    values = sorted(set(observed) | set(expected_probs))
    bins = []
    acc_obs = 0.0
    acc_exp = 0.0
    for v in values:
        acc_obs += observed.get(v, 0)
        acc_exp += expected_probs.get(v, 0.0) * total
        if acc_exp >= min_expected:
            bins.append((acc_obs, acc_exp))
            acc_obs = 0.0
            acc_exp = 0.0
    if acc_exp > 0 or acc_obs > 0:
        if bins:
            last_obs, last_exp = bins.pop()
            bins.append((last_obs + acc_obs, last_exp + acc_exp))
        else:
            bins.append((acc_obs, acc_exp))
    if len(bins) < 2:
        raise ValueError("not enough mass to form two chi-square bins")
    stat = sum((obs - exp) ** 2 / exp for obs, exp in bins)
    df = len(bins) - 1
    p_value = float(gammaincc(df / 2.0, stat / 2.0))
    return {"statistic": stat, "df": df, "p_value": p_value, "bins": len(bins)}


# -- shortest-recurrence ambiguity scan --------------------------------------


@dataclass
class TnAmbiguityReport:
    n: int
    total: int
    zero_skipped: int
    singleton: int
    ambiguous: int
    all_choices_hold: int
    some_choice_fails: int
    canonical_failures: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "zero_skipped": self.zero_skipped,
            "singleton_t": self.singleton,
            "ambiguous_t": self.ambiguous,
            "bounds_hold_for_all_choices": self.all_choices_hold,
            "bounds_fail_for_some_choice": self.some_choice_fails,
            "canonical_choice_failures": self.canonical_failures,
        }


def _attainable_t_values(bits: int, n: int, length: int) -> set:
    """All t values over every length-L recurrence fitting the n-bit prefix."""
    out = set()
    for mask in range(1 << length):
        full = mask | (1 << length)
        if all(
            ((bits >> i) & full).bit_count() % 2 == 0 for i in range(n - length)
        ):
            t = length
            for l in range(length):
                if (mask >> l) & 1:
                    t = l
                    break
            out.add(t)
    return out


def tn_ambiguity_scan(cfg: ExperimentConfig) -> TnAmbiguityReport:
    """Enumerate every shortest recurrence of every q=2 prefix of length n,
    and grade the prefix bounds under each attainable t choice.

    Quantifies how much the bounds depend on which shortest recurrence is
    picked when it is not unique (possible for n < 2 L_n).
    """
    if cfg.mode != "exhaustive":
        raise ValueError("tn_ambiguity_scan requires exhaustive mode")
    if cfg.field.q != 2 or cfg.n > 10:
        raise ValueError("scan is limited to q=2 and n <= 10")
    n = cfg.n
    field = cfg.field
    zero_skipped = singleton = ambiguous = 0
    all_hold = some_fail = canonical_failures = 0
    for index in range(2**n):
        terms = _decode_prefix(index, 2, n)
        if not any(terms):
            zero_skipped += 1
            continue
        bits = 0
        for i, s in enumerate(terms):
            if s:
                bits |= 1 << i
        length, conn = lincomp._bm_core(field, terms)
        fit = lincomp._fit_from_core(n, length, conn)
        e_n = expcomp.expansion_value(field, terms, n)
        t_set = _attainable_t_values(bits, n, length)
        if len(t_set) == 1:
            singleton += 1
        else:
            ambiguous += 1
        if n >= 2:
            holds = {
                t: (
                    e_n >= theorems.periodic_lower_bound(length, t, n)
                    and e_n <= theorems.prefix_upper_bound(length, t, n)
                )
                for t in t_set
            }
            if all(holds.values()):
                all_hold += 1
            else:
                some_fail += 1
            if not holds.get(fit.t, True):
                canonical_failures += 1
    return TnAmbiguityReport(
        n, 2**n, zero_skipped, singleton, ambiguous,
        all_hold, some_fail, canonical_failures,
    )
