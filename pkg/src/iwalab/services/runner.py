from __future__ import annotations

import datetime
import json
import logging
import time

from pathlib import Path
from typing import Any
from typing import Callable

from iwalab.algebra.characters import UnitCharacter
from iwalab.algebra.element import AlgebraElement
from iwalab.algebra.types import PrimeConfig
from iwalab.flats.flats import FlatLevel
from iwalab.flats.flats import detect_flats
from iwalab.flats.flats import ns_hypothesis_level
from iwalab.flats.gadgets import find_nonsimple_twist
from iwalab.flats.zeros import twisted_zero_set
from iwalab.flats.zeros import zero_set_level
from iwalab.ideals.coprime import pseudo_null_certificate
from iwalab.ideals.elementary import ElementaryModule
from iwalab.ideals.elementary import chi
from iwalab.ideals.elementary import sharp_ideal
from iwalab.ideals.elementary import twist_ideal
from iwalab.ideals.exceptions import IdealError
from iwalab.ideals.sizes import finite_level_size
from iwalab.ideals.sizes import growth_profile
from iwalab.ideals.splitting import is_sharp_stable
from iwalab.ideals.splitting import split_p
from iwalab.ideals.splitting import split_simple
from iwalab.serialization.codec import dump_characters
from iwalab.serialization.codec import dump_element
from iwalab.serialization.codec import dump_elementary
from iwalab.serialization.codec import dump_system
from iwalab.serialization.exceptions import SchemaError
from iwalab.serialization.job import JobSpec
from iwalab.serialization.report import ReportDocument
from iwalab.serialization.report import Timing
from iwalab.services.exceptions import SessionError
from iwalab.services.session import Settings
from iwalab.systems.fourier import fourier_check
from iwalab.systems.limits import funeq_check
from iwalab.systems.report import CheckResult
from iwalab.systems.report import SystemReport
from iwalab.systems.report import validate
from iwalab.systems.synthesis import from_torsion_module
from iwalab.systems.system import GammaSystem
from iwalab.systems.twist import twist_system


logger = logging.getLogger(__name__)

Runner = Callable[[JobSpec, Settings], ReportDocument]


def _precision(job: JobSpec, settings: Settings) -> int:
    return settings.precision or job.prime.precision


def _levels(job: JobSpec) -> int:
    value = job.flags.get("levels")
    return job.levels if value is None else int(value)


def _module(job: JobSpec) -> ElementaryModule:
    if job.module is None:
        raise SchemaError("module", "missing field")
    return job.module


def _element(job: JobSpec) -> AlgebraElement:
    """The element of the document, else the generator of chi(module)."""
    if job.element is not None:
        return job.element
    if job.module is not None:
        return chi(job.module).generator(job.d)
    raise SchemaError("element", "missing field (or give a module)")


def _system(job: JobSpec, settings: Settings) -> GammaSystem:
    if job.system is not None:
        return job.system
    if job.module is None:
        raise SchemaError("system", "missing field (or give a module)")
    return from_torsion_module(
        job.module,
        PrimeConfig(job.p, _precision(job, settings)),
        job.gamma,
        _levels(job),
        job.mode,  # type: ignore[arg-type]
        settings.budget,
    )


def _document(
    job: JobSpec,
    settings: Settings,
    checks: tuple[CheckResult, ...] = (),
    results: dict[str, Any] | None = None,
) -> ReportDocument:
    config = {
        **job.header(),
        **settings.echo(),
        "precision": _precision(job, settings),
        "mode": job.mode,
    }
    flags = {k: v for k, v in job.flags.items() if v is not None}
    return ReportDocument(
        job.command, {**config, "flags": flags}, checks, results or {}
    )


def _summaries(report: SystemReport) -> list[dict[str, Any]]:
    return [
        {
            "level": summary.level,
            "a_order": summary.a_order,
            "b_order": summary.b_order,
            "a_divisors": list(summary.a_divisors),
            "b_divisors": list(summary.b_divisors),
        }
        for summary in report.levels
    ]


def _orders(system: GammaSystem) -> list[list[int]]:
    return [[a, b] for a, b in system.orders()]


def _flat(flat: FlatLevel) -> dict[str, Any]:
    return {
        "basis": [list(row) for row in flat.basis],
        "targets": list(flat.targets),
        "codimension": flat.codimension,
    }


def run_validate(job: JobSpec, settings: Settings) -> ReportDocument:
    report = validate(_system(job, settings), settings.jobs)
    return _document(job, settings, report.checks, {"levels": _summaries(report)})


def run_synthesize(job: JobSpec, settings: Settings) -> ReportDocument:
    system = _system(job, settings)
    results: dict[str, Any] = {"orders": _orders(system)}
    out = job.flags.get("out")
    if out is not None:
        document = {
            "header": {**job.header(), "levels": system.max_level},
            "mode": job.mode,
            "module": dump_elementary(_module(job)),
            "system": dump_system(system),
        }
        try:
            text = json.dumps(document, sort_keys=True, indent=2)
            Path(out).write_text(text + "\n")
        except OSError as error:
            raise SessionError(f"Cannot write {out}: {error.strerror}.")
        results["out"] = str(out)
    else:
        results["system"] = dump_system(system)
    return _document(job, settings, results=results)


def _sizes(
    module: ElementaryModule, job: JobSpec, settings: Settings
) -> list[int | None]:
    sizes: list[int | None] = []
    for n in range(_levels(job) + 1):
        try:
            sizes.append(finite_level_size(module, job.p, n, settings.budget))
        except IdealError as error:
            logger.info("No finite size at level %s: %s", n, error.message)
            sizes.append(None)
    return sizes


def run_char_ideal(job: JobSpec, settings: Settings) -> ReportDocument:
    module = _module(job)
    labels = job.gamma.labels or None
    ideal = chi(module)
    split = split_simple(module, job.p, job.tags)  # type: ignore[arg-type]
    sizes = _sizes(module, job, settings)
    results: dict[str, Any] = {
        "chi": ideal.format(labels),
        "generator": dump_element(ideal.generator(job.d)),
        "sharp": sharp_ideal(ideal).format(labels),
        "sharp_stable": is_sharp_stable(module),
        "sizes": sizes,
        "factors": [
            {"xi": verdict.factor.xi.format(labels), "kind": verdict.verdict}
            for verdict in split.verdicts
        ],
    }

    checks = []
    if job.mode == "full" and all(size is not None for size in sizes):
        system = from_torsion_module(
            module, job.prime, job.gamma, _levels(job), "full", settings.budget
        )
        for n, size in enumerate(sizes):
            order = system.level(n).b.order
            witness = None
            if order != size:
                witness = f"|b_{n}| = {order}, sizes give {size}"
            checks.append(CheckResult.judge("size", "level size", f"n={n}", witness))

    if len(job.elements) >= 2:
        certificate = pseudo_null_certificate(job.elements, job.p)
        results["pseudo_null"] = {
            "verdict": certificate.verdict,
            "pair": list(certificate.pair) if certificate.pair else None,
            "reason": certificate.reason,
        }
    return _document(job, settings, tuple(checks), results)


def _level(job: JobSpec) -> int:
    value = job.flags.get("level")
    return job.levels if value is None else int(value)


def run_zero_set(job: JobSpec, settings: Settings) -> ReportDocument:
    xi, n = _element(job), _level(job)
    zeros = zero_set_level(xi, job.p, n, settings.budget, settings.jobs)
    results: dict[str, Any] = {
        "level": n,
        "count": len(zeros),
        "zeros": dump_characters(zeros),
    }
    checks = []
    if job.flags.get("flats"):
        report = detect_flats(zeros, job.p, job.d, n)
        results["flats"] = [_flat(flat) for flat in report.cover]
        results["residual"] = dump_characters(report.residual)
        checks.append(
            CheckResult.judge(
                "flats",
                "galois closed",
                f"n={n}",
                None if report.galois_closed else "zero set is not Galois stable",
            )
        )
    return _document(job, settings, tuple(checks), results)


def run_ns_check(job: JobSpec, settings: Settings) -> ReportDocument:
    verdict = ns_hypothesis_level(
        _element(job), job.p, _level(job), settings.budget, settings.jobs
    )
    violated = verdict.verdict == "violated"
    check = CheckResult(
        "ns",
        "no codimension one flat",
        f"n={verdict.level}",
        not violated,
        verdict.describe() if violated else None,
    )
    results = {
        "verdict": verdict.verdict,
        "description": verdict.describe(),
        "flats": [_flat(flat) for flat in verdict.report.cover],
        "residual": dump_characters(verdict.report.residual),
    }
    return _document(job, settings, (check,), results)


def run_funeq(job: JobSpec, settings: Settings) -> ReportDocument:
    system = _system(job, settings)
    report = funeq_check(system, settings.node_budget, settings.jobs)
    results = {
        "levels": [
            {
                "level": level.level,
                "divisors_equal": level.divisors_equal,
                "equivariant": level.equivariant,
                "nodes": level.nodes,
            }
            for level in report.levels
        ],
        "stabilized": report.invariants.stabilized,
        "limits": [
            {"level": profile.level, "a": list(profile.a), "b": list(profile.b)}
            for profile in report.invariants.levels
        ],
    }
    return _document(job, settings, report.to_report().checks, results)


def run_fourier_check(job: JobSpec, settings: Settings) -> ReportDocument:
    report = fourier_check(
        _system(job, settings),
        int(job.flags.get("samples") or 100),
        int(job.flags.get("seed") or 0),
    )
    return _document(job, settings, report.checks)


def _phi(job: JobSpec, settings: Settings) -> UnitCharacter:
    text = str(job.flags["phi"])
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise SchemaError("--phi", f"expected integers u1,...,ud, got {text!r}")
    if len(values) != job.d:
        raise SchemaError("--phi", f"expected {job.d} values, got {len(values)}")
    return UnitCharacter(job.p, _precision(job, settings), values)


def run_twist(job: JobSpec, settings: Settings) -> ReportDocument:
    precision = _precision(job, settings)
    checks: list[CheckResult] = []
    results: dict[str, Any] = {}
    if job.flags.get("search"):
        xi = _element(job)
        k = int(job.flags.get("order") or 1)
        phi = find_nonsimple_twist(
            xi,
            job.p,
            k,
            precision,
            levels=_levels(job),
            node_budget=settings.node_budget,
            budget=settings.budget,
        )
        for n in range(_levels(job) + 1):
            zeros = twisted_zero_set(phi, xi, n, settings.budget)
            witness = f"vanishes at {list(zeros[0].exponents)}" if zeros else None
            checks.append(
                CheckResult.judge("twist", "no twisted zeros", f"n={n}", witness)
            )
    elif job.flags.get("phi"):
        phi = _phi(job, settings)
    else:
        raise SchemaError("--phi", "give --phi u1,...,ud or --search")
    results["phi"] = list(phi.values)

    if job.module is not None:
        ideal = chi(job.module)
        results["chi"] = twist_ideal(ideal, phi).format(job.gamma.labels or None)
    synthesize = job.module is not None and not job.flags.get("search")
    if job.system is not None or synthesize:
        twisted = twist_system(_system(job, settings), phi)
        report = validate(twisted, settings.jobs)
        checks.extend(report.checks)
        results["orders"] = _orders(twisted)
    return _document(job, settings, tuple(checks), results)


def run_split(job: JobSpec, settings: Settings) -> ReportDocument:
    module = _module(job)
    labels = job.gamma.labels or None
    by = job.flags.get("by") or "simple"
    if by == "simple":
        split = split_simple(module, job.p, job.tags)  # type: ignore[arg-type]
        results = {
            "si": dump_elementary(split.si),
            "ns": dump_elementary(split.ns),
            "verdicts": [
                {"xi": v.factor.xi.format(labels), "kind": v.verdict}
                for v in split.verdicts
            ],
        }
    elif by == "p":
        p_part, np_part = split_p(module, job.p)
        results = {"p": dump_elementary(p_part), "np": dump_elementary(np_part)}
    else:
        raise SchemaError("--by", f"expected simple or p, got {by!r}")
    return _document(job, settings, results=results)


def run_growth(job: JobSpec, settings: Settings) -> ReportDocument:
    xi = _element(job)
    profile = growth_profile(xi, job.p, _levels(job), settings.budget)
    top = len(profile.ranks) - 1
    witness = None
    if not profile.within_bound:
        witness = f"rank {profile.ranks[-1]} at level {top} outgrows p^(n(d-1))"
    check = CheckResult.judge("growth", "rank bound", f"n={top}", witness)
    results = {
        "ranks": list(profile.ranks),
        "constant": profile.constant,
        "stabilized": profile.stabilized,
    }
    return _document(job, settings, (check,), results)


RUNNERS: dict[str, Runner] = {
    "validate": run_validate,
    "synthesize": run_synthesize,
    "char-ideal": run_char_ideal,
    "zero-set": run_zero_set,
    "ns-check": run_ns_check,
    "funeq": run_funeq,
    "fourier-check": run_fourier_check,
    "twist": run_twist,
    "split": run_split,
    "growth": run_growth,
}


def run(job: JobSpec, settings: Settings) -> ReportDocument:
    """Dispatch ``job`` to its command and time it when asked."""
    runner = RUNNERS.get(job.command)
    if runner is None:
        raise SessionError(f"Unknown command {job.command!r}.")
    started = datetime.datetime.now()
    clock = time.perf_counter()
    report = runner(job, settings)
    logger.info("%s finished, %s checks", job.command, len(report.checks))
    if settings.timing:
        report = report.with_timing(Timing(started, time.perf_counter() - clock))
    return report
