"""Identity and conjecture checks over parameter grids, with deterministic reports.

Each case compares two exactly-computed polynomials.  Theorem cases failing
indicate an implementation bug and abort the sweep by default; conjecture
cases failing are findings and never abort.  Reports are merged in the fixed
(family, parameter) order regardless of how many workers ran the cases, so a
report is byte-identical across parallelism settings.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .grassmann import h_basis_report, kschur_basis_report, subalgebra_hilbert
from .lagrangian import lg_subalgebra_hilbert, lg_top_power
from .partitions import (
    k_conjugate,
    partitions_in_box,
    shifted_compose,
    shifted_decompose,
    strict_partitions_in_triangle,
    vacancy,
    vacant_compose,
    vacant_decompose,
    vacant_partitions,
)
from .qseries import (
    QPoly,
    gen_sum,
    grass_subalgebra_formula,
    lg_hilbert_series,
    lg_subalgebra_formula,
    q_binomial,
    q_binomial_prime,
)

THEOREM = "theorem"
CONJECTURE = "conjecture"

PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass(frozen=True)
class Case:
    name: str
    params: dict
    status: str
    expected: QPoly
    actual: QPoly
    detail: str = ""
    kind: str = THEOREM

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "status": self.status,
            "expected": self.expected.json_coeffs(),
            "actual": self.actual.json_coeffs(),
            "detail": self.detail,
        }


@dataclass
class Report:
    cases: list[Case] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, ERROR: 0}
        for case in self.cases:
            out[case.status] += 1
        return out

    @property
    def ok(self) -> bool:
        s = self.summary
        return s[FAIL] == 0 and s[ERROR] == 0

    def to_json_obj(self) -> dict:
        return {
            "cases": [c.to_json_obj() for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def to_text(self) -> str:
        lines = []
        for c in self.cases:
            params = " ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"{c.status.upper():5s} {c.name} {params}"
            if c.status != PASS:
                line += f" | expected={c.expected} actual={c.actual}"
                if c.detail:
                    line += f" | {c.detail}"
            lines.append(line)
        s = self.summary
        lines.append(f"summary: pass={s[PASS]} fail={s[FAIL]} error={s[ERROR]}")
        return "\n".join(lines)

    def to_markdown(self) -> str:
        lines = ["| status | case | params | detail |", "| --- | --- | --- | --- |"]
        for c in self.cases:
            params = ", ".join(f"{k}={v}" for k, v in c.params.items())
            detail = c.detail if c.status != PASS else ""
            lines.append(f"| {c.status} | {c.name} | {params} | {detail} |")
        s = self.summary
        lines.append("")
        lines.append(f"**pass** {s[PASS]} / **fail** {s[FAIL]} / **error** {s[ERROR]}")
        return "\n".join(lines)


def _case(name, params, kind, expected: QPoly, actual: QPoly, detail: str = "") -> Case:
    status = PASS if expected == actual else FAIL
    return Case(
        name=name,
        params=params,
        status=status,
        expected=expected,
        actual=actual,
        detail=detail if status == FAIL else "",
        kind=kind,
    )


# ---------------------------------------------------------------------------
# Individual checks.


def check_summand_identity(ell: int, k: int, i: int) -> Case:
    """Three-way identity: formula summand, i-vacant generating sum, and the
    generating sum over first-part-i partitions with in-box k-conjugate.
    These are theorems, so any failure is a bug."""
    if not (1 <= i <= min(ell, k)):
        raise ValueError(f"need 1 <= i <= min(ell, k), got ell={ell}, k={k}, i={i}")
    formula = QPoly.q_power(i) * q_binomial(k, i) * q_binomial_prime(ell, i, k)
    vacant_sum = gen_sum(vacant_partitions(ell, k, i))
    conj_family = [
        k_conjugate(lam, k)
        for lam in partitions_in_box(ell, k)
        if k_conjugate(lam, k).first == i
    ]
    conj_sum = gen_sum(conj_family)
    params = {"ell": ell, "k": k, "i": i}
    if vacant_sum != formula:
        return _case("summand", params, THEOREM, formula, vacant_sum,
                     "i-vacant generating sum disagrees with the formula")
    if conj_sum != formula:
        return _case("summand", params, THEOREM, formula, conj_sum,
                     "k-conjugate reformulation disagrees with the formula")
    return _case("summand", params, THEOREM, formula, formula)


def check_rt(ell: int, k: int) -> list[Case]:
    """Computed subalgebra Hilbert series against the closed formula, for every
    generation bound m.  The m in {0, 1, min} cases are proven and must pass."""
    cases = []
    low = min(ell, k)
    for m in range(low + 1):
        kind = THEOREM if m in (0, 1, low) else CONJECTURE
        expected = grass_subalgebra_formula(ell, k, m)
        actual = subalgebra_hilbert(ell, k, m)
        cases.append(_case("rt", {"ell": ell, "k": k, "m": m}, kind, expected, actual))
    return cases


def check_lg(n: int) -> list[Case]:
    """Lagrangian subalgebra Hilbert series against the closed formula for each
    m, plus the even-m stabilisation identities (both proven for m in {1, n},
    stabilisation proven for all even m)."""
    cases = []
    for m in range(1, n + 1):
        kind = THEOREM if m in (1, n) else CONJECTURE
        expected = lg_subalgebra_formula(n, m)
        actual = lg_subalgebra_hilbert(n, m)
        cases.append(_case("lg", {"n": n, "m": m}, kind, expected, actual))
    for m in range(2, n + 1, 2):
        expected = lg_subalgebra_hilbert(n, m - 1)
        actual = lg_subalgebra_hilbert(n, m)
        cases.append(
            _case("lg-stab", {"n": n, "m": m}, THEOREM, expected, actual,
                  "even-m subalgebra differs from its odd predecessor")
        )
    return cases


def check_prop51(n: int) -> Case:
    """Pure q-series identity: the staircase generating function equals one
    plus the odd-indexed shifted q-binomials."""
    expected = lg_hilbert_series(n)
    actual = QPoly.one() if n == 0 else lg_subalgebra_formula(n, n)
    return _case("prop51", {"n": n}, THEOREM, expected, actual)


def _vacant_roundtrip_polys(ell: int, k: int) -> tuple[QPoly, QPoly, str]:
    family = [lam for lam in partitions_in_box(ell, k) if lam]
    expected = gen_sum(family)
    good = []
    detail = ""
    for lam in family:
        i, j, dag, ddag = vacant_decompose(lam, k)
        if vacant_compose(i, j, dag, ddag, k) == lam:
            good.append(lam)
        elif not detail:
            detail = f"decompose/compose round trip failed at {lam}"
    actual = gen_sum(good)
    bad_compose = 0
    for i in range(1, min(ell, k) + 1):
        for j in range(ell - i + 1):
            for dag in partitions_in_box(i, k - i):
                for ddag in partitions_in_box(j, i - 1):
                    lam = vacant_compose(i, j, dag, ddag, k)
                    if vacant_decompose(lam, k) != (i, j, dag, ddag):
                        bad_compose += 1
                        if not detail:
                            detail = f"compose/decompose round trip failed at {(i, j, dag, ddag)}"
    if bad_compose:
        actual = actual - QPoly({0: bad_compose})
    return expected, actual, detail


def _shifted_roundtrip_polys(n: int) -> tuple[QPoly, QPoly, str]:
    family = [lam for lam in strict_partitions_in_triangle(n) if lam]
    expected = gen_sum(family)
    good = []
    detail = ""
    for lam in family:
        i, j, mu = shifted_decompose(lam, n)
        if shifted_compose(i, j, mu, n) == lam and i % 2 == 1 and 1 <= i <= n and mu.fits(j, i):
            good.append(lam)
        elif not detail:
            detail = f"decompose/compose round trip failed at {lam}"
    actual = gen_sum(good)
    bad_compose = 0
    for i in range(1, n + 1, 2):
        for j in range(n - i + 1):
            for mu in partitions_in_box(j, i):
                lam = shifted_compose(i, j, mu, n)
                if shifted_decompose(lam, n) != (i, j, mu):
                    bad_compose += 1
                    if not detail:
                        detail = f"compose/decompose round trip failed at {(i, j, mu)}"
    if bad_compose:
        actual = actual - QPoly({0: bad_compose})
    return expected, actual, detail


def check_vacant_roundtrip(ell: int, k: int) -> Case:
    expected, actual, detail = _vacant_roundtrip_polys(ell, k)
    return _case("vacant-roundtrip", {"ell": ell, "k": k}, THEOREM, expected, actual, detail)


def check_shifted_roundtrip(n: int) -> Case:
    expected, actual, detail = _shifted_roundtrip_polys(n)
    return _case("shifted-roundtrip", {"n": n}, THEOREM, expected, actual, detail)


def check_decompositions(ell: int, k: int, n: int) -> Case:
    """Round-trip bijectivity of both explicit decompositions, in one case."""
    e1, a1, d1 = _vacant_roundtrip_polys(ell, k)
    e2, a2, d2 = _shifted_roundtrip_polys(n)
    detail = d1 or d2
    return _case(
        "decompositions", {"ell": ell, "k": k, "n": n}, THEOREM, e1 + e2, a1 + a2, detail
    )


def check_vacancy_conjugation(ell: int, k: int) -> Case:
    """Vacancy equals the first part of the k-conjugate, for every nonempty
    partition in the box."""
    family = [lam for lam in partitions_in_box(ell, k) if lam]
    counts: dict[int, int] = {}
    agree: dict[int, int] = {}
    detail = ""
    for lam in family:
        v = vacancy(lam, k)
        counts[v] = counts.get(v, 0) + 1
        if k_conjugate(lam, k).first == v:
            agree[v] = agree.get(v, 0) + 1
        elif not detail:
            detail = f"vacancy({lam}) = {v} but k-conjugate is {k_conjugate(lam, k)}"
    return _case(
        "vacancy-conjugation", {"ell": ell, "k": k}, THEOREM,
        QPoly(counts), QPoly(agree), detail,
    )


def _basis_case(name: str, report) -> Case:
    expected = QPoly({e.degree: e.candidates for e in report.degrees})
    actual_counts = {}
    detail = ""
    for e in report.degrees:
        actual_counts[e.degree] = e.rank if e.ok else -1
        if not e.ok and not detail:
            flags = f"independent={e.independent} spans={e.spans} contained={e.contained}"
            detail = (
                f"degree {e.degree}: candidates={e.candidates} rank={e.rank} dim={e.dim} {flags}"
            )
    return _case(
        name,
        {"ell": report.ell, "k": report.k, "m": report.m},
        CONJECTURE,
        expected,
        QPoly(actual_counts),
        detail,
    )


def check_h_basis(ell: int, k: int, m: int) -> Case:
    return _basis_case("h-basis", h_basis_report(ell, k, m))


def check_kschur_basis(ell: int, k: int, m: int) -> Case:
    return _basis_case("kschur-basis", kschur_basis_report(ell, k, m))


def check_lg_top_power(n: int) -> Case:
    """Nonvanishing of the top power of the degree-one generator.  The detail
    always records the coefficient: it doubles as a regression constant."""
    value = lg_top_power(n)
    actual = QPoly.one() if value > 0 else QPoly.zero()
    return Case(
        name="lg-top-power",
        params={"n": n},
        status=PASS if value > 0 else FAIL,
        expected=QPoly.one(),
        actual=actual,
        detail=f"top coefficient {value}",
        kind=THEOREM,
    )


# ---------------------------------------------------------------------------
# Sweep configuration and execution.

FAMILIES = (
    "summand",
    "rt",
    "h-basis",
    "kschur-basis",
    "lg",
    "prop51",
    "decomp-vacant",
    "decomp-shifted",
    "vacancy",
)

DEFAULT_CONFIG: dict = {
    "families": {
        "summand": {"max": 6},
        "rt": {"max": 6},
        "h-basis": {"max": 4},
        "kschur-basis": {"max": 4},
        "lg": {"max": 8},
        "prop51": {"max": 30},
        "decomp-vacant": {"max": 6},
        "decomp-shifted": {"max": 9},
        "vacancy": {"max": 6},
    }
}

_PAIR_FAMILIES = {"summand", "rt", "h-basis", "kschur-basis", "decomp-vacant", "vacancy"}
_N_FAMILIES = {"lg", "prop51", "decomp-shifted"}


class ConfigError(ValueError):
    pass


def _family_pairs(spec: dict) -> list[tuple[int, int]]:
    if "pairs" in spec:
        pairs = spec["pairs"]
        if not isinstance(pairs, list) or not all(
            isinstance(p, (list, tuple)) and len(p) == 2 and all(isinstance(x, int) and x >= 1 for x in p)
            for p in pairs
        ):
            raise ConfigError(f"'pairs' must be a list of [ell, k] integer pairs, got {pairs!r}")
        return [tuple(p) for p in pairs]
    maximum = spec.get("max")
    if not isinstance(maximum, int) or maximum < 1:
        raise ConfigError(f"family spec needs 'max' >= 1 or explicit 'pairs', got {spec!r}")
    return [(ell, k) for ell in range(1, maximum + 1) for k in range(1, maximum + 1)]


def _family_ns(spec: dict) -> list[int]:
    if "ns" in spec:
        ns = spec["ns"]
        if not isinstance(ns, list) or not all(isinstance(x, int) and x >= 0 for x in ns):
            raise ConfigError(f"'ns' must be a list of nonnegative integers, got {ns!r}")
        return list(ns)
    maximum = spec.get("max")
    if not isinstance(maximum, int) or maximum < 0:
        raise ConfigError(f"family spec needs 'max' >= 0 or explicit 'ns', got {spec!r}")
    return list(range(1, maximum + 1))


def validate_config(config: dict) -> dict:
    if not isinstance(config, dict):
        raise ConfigError(f"config must be a JSON object, got {type(config).__name__}")
    unknown = set(config) - {"families", "jobs", "keep_going"}
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    families = config.get("families", {})
    if not isinstance(families, dict):
        raise ConfigError("'families' must be an object")
    bad = set(families) - set(FAMILIES)
    if bad:
        raise ConfigError(f"unknown families: {sorted(bad)}; known: {list(FAMILIES)}")
    jobs = config.get("jobs")
    if jobs is not None and (not isinstance(jobs, int) or jobs < 1):
        raise ConfigError(f"'jobs' must be a positive integer, got {jobs!r}")
    keep_going = config.get("keep_going", False)
    if not isinstance(keep_going, bool):
        raise ConfigError(f"'keep_going' must be a boolean, got {keep_going!r}")
    for name, spec in families.items():
        if not isinstance(spec, dict):
            raise ConfigError(f"family {name!r} spec must be an object, got {spec!r}")
        if name in _PAIR_FAMILIES:
            _family_pairs(spec)
        else:
            _family_ns(spec)
    return config


def _tasks_for(config: dict) -> list:
    """Task list in the fixed (family, params) order; each task returns Case(s)."""
    families = config.get("families", {})
    tasks = []
    for name in FAMILIES:
        if name not in families:
            continue
        spec = families[name]
        if name == "summand":
            for ell, k in _family_pairs(spec):
                for i in range(1, min(ell, k) + 1):
                    tasks.append(lambda ell=ell, k=k, i=i: [check_summand_identity(ell, k, i)])
        elif name == "rt":
            for ell, k in _family_pairs(spec):
                tasks.append(lambda ell=ell, k=k: check_rt(ell, k))
        elif name == "h-basis":
            for ell, k in _family_pairs(spec):
                for m in range(1, min(ell, k) + 1):
                    tasks.append(lambda ell=ell, k=k, m=m: [check_h_basis(ell, k, m)])
        elif name == "kschur-basis":
            for ell, k in _family_pairs(spec):
                for m in range(1, min(ell, k) + 1):
                    tasks.append(lambda ell=ell, k=k, m=m: [check_kschur_basis(ell, k, m)])
        elif name == "lg":
            for n in _family_ns(spec):
                if n >= 1:
                    tasks.append(lambda n=n: check_lg(n))
                    tasks.append(lambda n=n: [check_lg_top_power(n)])
        elif name == "prop51":
            for n in _family_ns(spec):
                tasks.append(lambda n=n: [check_prop51(n)])
        elif name == "decomp-vacant":
            for ell, k in _family_pairs(spec):
                tasks.append(lambda ell=ell, k=k: [check_vacant_roundtrip(ell, k)])
        elif name == "decomp-shifted":
            for n in _family_ns(spec):
                tasks.append(lambda n=n: [check_shifted_roundtrip(n)])
        elif name == "vacancy":
            for ell, k in _family_pairs(spec):
                tasks.append(lambda ell=ell, k=k: [check_vacancy_conjugation(ell, k)])
    return tasks


def _run_tasks(tasks, jobs: int, keep_going: bool) -> Report:
    report = Report()
    if not tasks:
        return report

    def run_one(task):
        try:
            return task()
        except Exception as exc:  # surfaced as an error case, never swallowed
            return [
                Case(
                    name="error",
                    params={},
                    status=ERROR,
                    expected=QPoly.zero(),
                    actual=QPoly.zero(),
                    detail=f"{type(exc).__name__}: {exc}",
                    kind=THEOREM,
                )
            ]

    aborted = False
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run_one, task) for task in tasks]
        for fut in futures:
            if aborted:
                fut.cancel()
                continue
            cases = fut.result()
            report.cases.extend(cases)
            if not keep_going and any(
                c.kind == THEOREM and c.status in (FAIL, ERROR) for c in cases
            ):
                aborted = True
    if aborted and report.cases:
        last = report.cases[-1]
        report.cases[-1] = Case(
            name=last.name,
            params=last.params,
            status=last.status,
            expected=last.expected,
            actual=last.actual,
            detail=(last.detail + "; " if last.detail else "") + "sweep aborted on theorem failure",
            kind=last.kind,
        )
    return report


def sweep(config: dict | None = None, jobs: int | None = None, keep_going: bool | None = None) -> Report:
    """Run every configured check family and merge the cases deterministically.

    `jobs`/`keep_going` arguments override the values in the config.
    """
    config = validate_config(DEFAULT_CONFIG if config is None else config)
    if jobs is None:
        jobs = config.get("jobs") or os.cpu_count() or 1
    if keep_going is None:
        keep_going = config.get("keep_going", False)
    return _run_tasks(_tasks_for(config), jobs, keep_going)
