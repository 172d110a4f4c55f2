"""Maximizing the 3-AP count over subsets of a finite ground set.

The ground set is an ordinary :class:`PointSet`; subsets are sorted index
tuples into it.  A subset S of size n has exactly n constant progressions, so
its count is n plus the number of nonconstant ground triples inside S.  Both
searchers precompute those triples once.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import io
from .counting import count, worker_count
from .errors import BudgetExceeded, InvalidInput
from .metric import PointSet, ap3_relation

DEFAULT_BUDGET = 10**7
DEFAULT_SEED = 20240601


def nonconstant_triples(ground: PointSet) -> list[tuple[int, int, int]]:
    D = ground.distance_matrix()
    factor = ground.space.ap_factor
    m = len(ground)
    return [
        (a, b, c)
        for b in range(m)
        for a in range(m)
        for c in range(m)
        if a != c and ap3_relation(D[a][b], D[b][c], D[a][c], factor)
    ]


@dataclass(frozen=True)
class SearchResult:
    best_value: int
    witnesses: tuple[tuple[int, ...], ...]
    evaluations: int
    seed: int | None = None
    mode: str = "exhaustive"

    def to_dict(self, ground: PointSet | None = None) -> dict:
        out = {
            "mode": self.mode,
            "best_value": self.best_value,
            "witnesses": [list(w) for w in self.witnesses],
            "evaluations": self.evaluations,
            "seed": self.seed,
        }
        if ground is not None:
            out["witness_sets"] = [io.to_dict(ground.subset(w)) for w in self.witnesses]
        return out


def exhaustive_max(ground: PointSet, n: int, budget: int = DEFAULT_BUDGET,
                   workers: int | None = None) -> SearchResult:
    """Exact maximum over all n-subsets of ``ground``, with every optimal subset.

    Witnesses are sorted index tuples in lexicographic order.  Raises
    :class:`BudgetExceeded` when C(|ground|, n) exceeds ``budget``.
    """
    m = len(ground)
    if not 0 <= n <= m:
        raise InvalidInput(f"n must be in 0..{m}, got {n}")
    required = math.comb(m, n)
    if required > budget:
        raise BudgetExceeded(required, budget)
    if n == 0:
        return SearchResult(0, ((),), 1)

    # each triple is charged to its largest index, as a bitmask of the other two
    charged = [[] for _ in range(m)]
    for a, b, c in nonconstant_triples(ground):
        top = max(a, b, c)
        charged[top].append(sum(1 << i for i in (a, b, c) if i != top))

    def explore(firsts):
        best, found, evals = -1, [], 0
        chosen = []

        def dfs(start, mask, inner):
            nonlocal best, found, evals
            if len(chosen) == n:
                evals += 1
                if inner > best:
                    best, found = inner, [tuple(chosen)]
                elif inner == best:
                    found.append(tuple(chosen))
                return
            for x in range(start, m - (n - len(chosen)) + 1):
                gain = sum(1 for t in charged[x] if t & mask == t)
                chosen.append(x)
                dfs(x + 1, mask | (1 << x), inner + gain)
                chosen.pop()

        for first in firsts:
            chosen.append(first)
            dfs(first + 1, 1 << first, 0)
            chosen.pop()
        return best, found, evals

    firsts = list(range(m - n + 1))
    w = min(worker_count(workers), len(firsts))
    parts = [firsts[k::w] for k in range(w)]
    if w == 1:
        results = [explore(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=w) as pool:
            results = list(pool.map(explore, parts))

    best = max(r[0] for r in results)
    witnesses = sorted(wt for r in results if r[0] == best for wt in r[1])
    return SearchResult(best + n, tuple(witnesses), sum(r[2] for r in results))


@dataclass(frozen=True)
class Schedule:
    """Annealing schedule; ``None`` fields take defaults derived from the instance.

    Defaults: initial temperature n, geometric cooling by ``ratio`` per
    proposal, and 200 * n * |ground| proposals per restart.
    """

    initial_temperature: float | None = None
    ratio: float = 0.995
    proposals: int | None = None


def _anneal(m: int, n: int, incident, rng: random.Random, schedule: Schedule):
    members = rng.sample(range(m), n)
    in_set = [False] * m
    for x in members:
        in_set[x] = True
    outside = [x for x in range(m) if not in_set[x]]

    def touching(x):
        return sum(1 for t in incident[x] if all(in_set[i] for i in t if i != x))

    value = n + _inside(incident, in_set)
    best, best_set = value, tuple(sorted(members))
    evals = 1
    if not outside or not members:
        return best, best_set, evals

    temperature = float(schedule.initial_temperature if schedule.initial_temperature is not None else n)
    steps = schedule.proposals if schedule.proposals is not None else 200 * n * m
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(len(outside))
        x, y = members[i], outside[j]
        in_set[x] = False
        lost = touching(x)
        gained = touching(y)
        delta = gained - lost
        evals += 1
        if delta >= 0 or (temperature > 0 and rng.random() < math.exp(delta / temperature)):
            in_set[y] = True
            members[i], outside[j] = y, x
            value += delta
            if value > best:
                best, best_set = value, tuple(sorted(members))
        else:
            in_set[x] = True
        temperature *= schedule.ratio
    return best, best_set, evals


def _inside(incident, in_set) -> int:
    seen = set()
    for x, ts in enumerate(incident):
        if in_set[x]:
            for t in ts:
                if all(in_set[i] for i in t):
                    seen.add(t)
    return len(seen)


def stochastic_max(ground: PointSet, n: int, seed: int = DEFAULT_SEED, schedule: Schedule | None = None,
                   restarts: int = 1, workers: int | None = None) -> SearchResult:
    """Simulated annealing with single-element swaps; deterministic given ``seed``.

    Restart k draws from its own generator seeded by ``(seed, k)``, so the
    result does not depend on how restarts are spread over threads.  The
    reported witness is the first-found best subset of the earliest restart
    that reaches the overall best value.
    """
    m = len(ground)
    if not 0 <= n <= m:
        raise InvalidInput(f"n must be in 0..{m}, got {n}")
    if restarts < 1:
        raise InvalidInput("restarts must be >= 1")
    schedule = schedule or Schedule()
    incident = [[] for _ in range(m)]
    for t in nonconstant_triples(ground):
        for i in set(t):
            incident[i].append(t)

    def run(k):
        return _anneal(m, n, incident, random.Random(f"{seed}:{k}"), schedule)

    w = min(worker_count(workers), restarts)
    if w == 1:
        results = [run(k) for k in range(restarts)]
    else:
        with ThreadPoolExecutor(max_workers=w) as pool:
            results = list(pool.map(run, range(restarts)))

    best = max(r[0] for r in results)
    witness = next(r[1] for r in results if r[0] == best)
    return SearchResult(best, (witness,), sum(r[2] for r in results), seed, "stochastic")


@dataclass
class AuditReport:
    """Outcome of checking random point sets against an upper bound."""

    trials: int
    violations: list = field(default_factory=list)
    tightest_total: int | None = None
    tightest_bound: int | None = None
    tightest_set: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "violations": self.violations,
            "tightest": {"total": self.tightest_total, "bound": self.tightest_bound,
                         "set": self.tightest_set},
        }


def bound_audit(sampler: Callable[[random.Random], PointSet], bound: Callable, trials: int,
                seed: int = DEFAULT_SEED, counter=count) -> AuditReport:
    """Count ``trials`` sampled sets and compare each against ``bound(n)``.

    ``bound`` returns a Prediction or an int.  Each violation is recorded with
    the offending set serialized for replay; the tightest instance is the
    first one of least slack.
    """
    rng = random.Random(seed)
    report = AuditReport(trials)
    best_slack = None
    for trial in range(trials):
        A = sampler(rng)
        total = counter(A).total
        cap = bound(len(A))
        cap = getattr(cap, "value", cap)
        slack = cap - total
        if slack < 0:
            report.violations.append({"trial": trial, "total": total, "bound": cap, "set": io.dumps(A)})
        if best_slack is None or slack < best_slack:
            best_slack = slack
            report.tightest_total, report.tightest_bound, report.tightest_set = total, cap, io.dumps(A)
    return report
