# module7_cli/main.py

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional

from common.constants import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    ExitStatus,
    GradedKind,
    OutputFormat,
    RelationFamily,
    TraceCap,
)
from common.entities import CheckReport
from common.errors import MatrixInvariantsError
from common.settings import load_caps
from module1_exactalg.polynomials import one_minus, series_ring
from module1_exactalg.series import rational_fn, rf_expand
from module2_symmfunc.multiplicities import c32_multiplicity_closed_form, mult_reconstruct, mult_series, schur_decompose2
from module3_fingroup.groups import MatGroup
from module3_fingroup.group_io import read_group_file
from module3_fingroup.invariants import extract_generators, generator_degrees, molien
from module3_fingroup.reflections import reflection_check
from module4_tracealg.evaluation import sample_rng, verify_zero
from module4_tracealg.graded import dim_table, min_gen_profile, profile_lines
from module4_tracealg.hilbert import hilbert_check, named_series, t22_multiplicity_check
from module4_tracealg.identities import cayley_hamilton, phi2, psi2
from module4_tracealg.relations import (
    ads_relation,
    ads_relation_check,
    c2d_alternating_relations,
    c2d_gram_relations,
    c2d_relations_check,
)
from module5_traceid.group_algebra import fundamental, random_element, random_ideal_element, trace_poly
from module5_traceid.ideal import ideal_dimension, ideal_membership, semantic_identity
from module6_nilpotency.nagata_higman import bounds, minimal_class, nh_membership

logger = logging.getLogger(__name__)

COMMANDS = (
    "molien", "invariants", "reflections", "hilbert", "mingen",
    "schur", "multseries", "traceid", "nilpotency", "verify-relations",
)

# Closed-form series checked when hilbert is called without --series.
DEFAULT_HILBERT_SERIES = {
    (2, 2, GradedKind.PURE): "fhl",
    (3, 2, GradedKind.PURE): "teranishi",
    (2, 2, GradedKind.MIXED): "t22",
}


@dataclass
class RunConfig:
    """One batch invocation. Identical configs produce byte-identical output."""
    command: str
    degree: int = 0
    n: int = 2
    d: int = 2
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    group: Optional[Path] = None
    output: Optional[Path] = None
    fmt: OutputFormat = OutputFormat.HUMAN
    progress: bool = False
    verbose: bool = False
    kind: GradedKind = GradedKind.PURE
    cap: TraceCap = TraceCap.RAZMYSLOV
    series: Optional[str] = None
    expect: Optional[str] = None
    maxdeg: Optional[int] = None
    m: int = 3
    random: int = 0
    N: Optional[int] = None
    sweep: Optional[int] = None
    which: Optional[RelationFamily] = None
    check_closed_form: bool = False
    symbolic: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown subcommand {self.command!r}")
        if self.degree < 0:
            raise ValueError(f"degree must be >= 0, got {self.degree}")
        if self.samples < 1:
            raise ValueError(f"samples must be >= 1, got {self.samples}")


@dataclass
class RunResult:
    status: ExitStatus
    title: str
    records: List[str] = field(default_factory=list)
    summary: List[str] = field(default_factory=list)

    def render(self, fmt: OutputFormat) -> str:
        if OutputFormat(fmt) is OutputFormat.STRUCTURED:
            lines = list(self.records)
        else:
            lines = [f"=== {self.title} ==="] + [f"  {r}" for r in self.records] + self.summary
        return "\n".join(lines) + "\n"


def _status(ok: bool) -> ExitStatus:
    return ExitStatus.OK if ok else ExitStatus.MISMATCH


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _load_group(config: RunConfig) -> MatGroup:
    if config.group is None:
        raise ValueError(f"{config.command} needs --group FILE")
    return read_group_file(config.group, load_caps().group_cap)


def _expected_molien(kind: str, n: int):
    R = series_ring(1)
    t, = R.gens
    if kind == "symmetric":
        return rational_fn(R.one, [one_minus(R, [i]) for i in range(1, n + 1)])
    if kind == "trivial":
        return rational_fn(R.one, [one_minus(R, [1])] * n)
    if kind == "cyclic3":
        if n != 3:
            raise ValueError(f"the cyclic3 closed form is for 3 x 3 matrices, group has n = {n}")
        return rational_fn(1 + t**3, [one_minus(R, [1]), one_minus(R, [2]), one_minus(R, [3])])
    raise ValueError(f"unknown expectation {kind!r}")


def cmd_molien(config: RunConfig) -> RunResult:
    group = _load_group(config)
    series = molien(group, config.degree)
    result = RunResult(ExitStatus.OK, f"Molien series of {config.group} (|G| = {group.order})", series.lines())
    if config.expect:
        expected = rf_expand(_expected_molien(config.expect, group.n), config.degree)
        ok = expected.poly == series.poly
        result.status = _status(ok)
        result.summary.append(f"matches {config.expect} closed form: {_flag(ok)}")
    return result


def cmd_invariants(config: RunConfig) -> RunResult:
    group = _load_group(config)
    extracted = extract_generators(group, config.maxdeg, config.progress)
    records = [f"{k} : {f}" for k, polys in extracted for f in polys]
    degrees = ",".join(str(k) for k in generator_degrees(extracted))
    return RunResult(ExitStatus.OK, f"invariant generators of {config.group}", records, [f"degrees: {degrees}"])


def cmd_reflections(config: RunConfig) -> RunResult:
    group = _load_group(config)
    reflections, generated = reflection_check(group)
    records = [f"order={group.order}", f"pseudo_reflections={len(reflections)}", f"generated={_flag(generated)}"]
    return RunResult(ExitStatus.OK, f"pseudo-reflections of {config.group}", records)


def _report_result(report: CheckReport, records: List[str]) -> RunResult:
    summary = [report.summary_line()] + [f"note: {n}" for n in report.notes]
    return RunResult(_status(report.ok), report.name, records + [f"status={'match' if report.ok else 'mismatch'}"], summary)


def cmd_hilbert(config: RunConfig) -> RunResult:
    kind = GradedKind(config.kind)
    name = config.series or DEFAULT_HILBERT_SERIES.get((config.n, config.d, kind))
    if config.n == 1 and name is None:
        name = "polynomial"
    if name is None:
        table = dim_table(config.n, config.d, config.degree, kind, config.cap, config.progress)
        logger.warning("no closed form known for n=%d d=%d %s; printing dimensions only", config.n, config.d, kind.value)
        return RunResult(ExitStatus.OK, f"graded dimensions n={config.n} d={config.d}", table.lines())
    report = hilbert_check(
        config.n, config.d, config.degree, named_series(name, config.d), kind, config.cap, config.progress,
    )
    return _report_result(report, report.details["table"].lines())


def cmd_mingen(config: RunConfig) -> RunResult:
    profile = min_gen_profile(config.n, config.d, config.degree, config.cap, config.progress)
    total = sum(profile.values())
    return RunResult(
        ExitStatus.OK,
        f"minimal generators of C_{config.n}{config.d} up to degree {config.degree}",
        profile_lines(profile),
        [f"total generators: {total}"],
    )


def cmd_schur(config: RunConfig) -> RunResult:
    name = config.series or "teranishi"
    if config.check_closed_form and name != "teranishi":
        raise ValueError("--check-closed-form compares against the closed form of H(C32); use --series teranishi")
    dec = schur_decompose2(rf_expand(named_series(name), config.degree))
    result = RunResult(ExitStatus.OK, f"Schur multiplicities of {name} up to degree {config.degree}", dec.lines())
    if config.check_closed_form:
        ok = mult_series(dec).series.poly == c32_multiplicity_closed_form(config.degree).series.poly
        result.status = _status(ok)
        result.summary.append(f"agrees with the closed-form multiplicity series: {_flag(ok)}")
    return result


def cmd_multseries(config: RunConfig) -> RunResult:
    closed = c32_multiplicity_closed_form(config.degree)
    hilbert = rf_expand(named_series("teranishi"), config.degree)
    from_hilbert = mult_series(schur_decompose2(hilbert))
    same = from_hilbert.series.poly == closed.series.poly
    round_trip = mult_reconstruct(closed).poly == hilbert.poly
    summary = [
        f"equals the Schur decomposition of H(C32): {_flag(same)}",
        f"reconstructs H(C32): {_flag(round_trip)}",
    ]
    return RunResult(_status(same and round_trip), f"multiplicity series of H(C32) up to degree {config.degree}",
                     closed.lines(), summary)


def cmd_traceid(config: RunConfig) -> RunResult:
    n, m = config.n, config.m
    records = [f"dim J({n},{m}) = {ideal_dimension(n, m)}"]
    elements = []
    if m >= n + 1:
        elements.append(("fundamental", fundamental(n).embed(m)))
    for i in range(config.random):
        rng = sample_rng(config.seed, i)
        if i % 2 and m >= n + 1:
            elements.append((f"random-ideal {i}", random_ideal_element(n, m, rng)))
        else:
            elements.append((f"random {i}", random_element(m, rng)))
    agree = True
    for label, e in elements:
        member = ideal_membership(e, n)
        identity = semantic_identity(e, n)
        agree = agree and member == identity
        records.append(f"{label}: member={_flag(member)} identity={_flag(identity)}")
    summary = [f"seed={config.seed}", f"membership agrees with evaluation: {_flag(agree)}"]
    return RunResult(_status(agree), f"trace identities n={n} m={m}", records, summary)


def cmd_nilpotency(config: RunConfig) -> RunResult:
    n = config.n
    low, high, known = bounds(n)
    summary = [f"bounds: {low} <= N({n}) <= {high}" + (f", known N({n}) = {known}" if known else "")]
    if config.sweep is not None:
        found = minimal_class(n, config.sweep, config.progress)
        records = [f"n={n} minimal_N={found if found is not None else 'none'}"]
        ok = known is None or (found == known if known <= config.sweep else found is None)
    else:
        member = nh_membership(n, config.N, config.progress)
        records = [f"n={n} N={config.N} member={_flag(member)}"]
        ok = known is None or member == (config.N >= known)
    return RunResult(_status(ok), f"Nagata-Higman n={n}", records, summary)


def _verify_symbolic(name: str, relations, n: int, traceless: bool) -> CheckReport:
    report = CheckReport(name, ok=True)
    for r, relation in enumerate(relations):
        report.checked += 1
        if not verify_zero(relation, n, traceless):
            report.ok = False
            report.counterexample = f"relation {r}"
            break
    return report


def _identity_checks(name: str, cases) -> CheckReport:
    """cases: (label, expression, n, expected vanishing)."""
    report = CheckReport(name, ok=True)
    for label, expr, n, expected in cases:
        report.checked += 1
        vanishes = verify_zero(expr, n)
        report.notes.append(f"{label} on {n}x{n}: vanishes={_flag(vanishes)}")
        if vanishes != expected:
            report.ok = False
            report.counterexample = report.counterexample or label
    return report


def cmd_verify_relations(config: RunConfig) -> RunResult:
    which = RelationFamily(config.which)
    records: List[str] = []
    if which is RelationFamily.ADS:
        if config.symbolic:
            logger.warning("symbolic check of the C_32 relation expands polynomials of degree 12; this is slow")
            report = _verify_symbolic("ads relation symbolic", [ads_relation()], 3, True)
        else:
            report = ads_relation_check(config.samples, config.seed, progress=config.progress)
            records = [f"samples={config.samples}", f"seed={config.seed}"]
    elif which is RelationFamily.C2D:
        if config.symbolic:
            relations = c2d_gram_relations(config.d) + c2d_alternating_relations(config.d)
            report = _verify_symbolic(f"c2d relations d={config.d} symbolic", relations, 2, True)
        else:
            report = c2d_relations_check(config.d, config.samples, config.seed, config.progress)
            records = [f"samples={config.samples}", f"seed={config.seed}"]
    elif which is RelationFamily.CAYLEY_HAMILTON:
        report = _identity_checks("cayley-hamilton", [
            ("psi2", psi2(), 2, True),
            ("phi2", phi2(), 2, True),
        ] + [(f"chi_{k}", cayley_hamilton(k), k, True) for k in (1, 2, 3)])
    elif which is RelationFamily.FUNDAMENTAL:
        report = _identity_checks("fundamental trace identities", [
            ("fundamental(2)", trace_poly(fundamental(2)), 2, True),
            ("fundamental(3)", trace_poly(fundamental(3)), 3, True),
            ("fundamental(2)", trace_poly(fundamental(2)), 3, False),
        ])
    else:
        report = t22_multiplicity_check(config.degree or 6, config.progress)
    return _report_result(report, records)


HANDLERS: Dict[str, Callable[[RunConfig], RunResult]] = {
    "molien": cmd_molien,
    "invariants": cmd_invariants,
    "reflections": cmd_reflections,
    "hilbert": cmd_hilbert,
    "mingen": cmd_mingen,
    "schur": cmd_schur,
    "multseries": cmd_multseries,
    "traceid": cmd_traceid,
    "nilpotency": cmd_nilpotency,
    "verify-relations": cmd_verify_relations,
}


def run(config: RunConfig) -> RunResult:
    logger.info("running %s", config.command)
    return HANDLERS[config.command](config)


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", dest="fmt", type=OutputFormat, choices=[f.value for f in OutputFormat],
                        default=OutputFormat.HUMAN, help="human-readable report or line-oriented records")
    parser.add_argument("--output", type=Path, help="write the report here instead of stdout")
    parser.add_argument("--progress", action="store_true", help="show progress bars on stderr")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matinv",
        description="Invariants of finite groups and of generic matrices: series, generators, relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("molien", help="Molien series of a finite matrix group")
    p.add_argument("--group", type=Path, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--expect", choices=["symmetric", "cyclic3", "trivial"])

    p = sub.add_parser("invariants", help="generators of the invariant ring")
    p.add_argument("--group", type=Path, required=True)
    p.add_argument("--maxdeg", type=int)

    p = sub.add_parser("reflections", help="is the group generated by pseudo-reflections")
    p.add_argument("--group", type=Path, required=True)

    p = sub.add_parser("hilbert", help="graded dimensions of a trace algebra against a closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--kind", type=GradedKind, choices=[k.value for k in GradedKind], default=GradedKind.PURE)
    p.add_argument("--series", choices=["teranishi", "fhl", "polynomial", "t22"])

    p = sub.add_parser("mingen", help="multidegrees of minimal generators of C_nd")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--cap", type=TraceCap, choices=[c.value for c in TraceCap], default=TraceCap.RAZMYSLOV)

    p = sub.add_parser("schur", help="Schur multiplicities of a two-variable series")
    p.add_argument("--series", choices=["teranishi", "fhl", "t22"], required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--check-closed-form", action="store_true", help="compare with the closed-form multiplicity series")

    p = sub.add_parser("multseries", help="closed-form multiplicity series of H(C32)")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("traceid", help="ideal membership against evaluation for trace identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--random", type=int, default=0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("nilpotency", help="Nagata-Higman nilpotency class")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--N", type=int)
    group.add_argument("--sweep", type=int)

    p = sub.add_parser("verify-relations", help="check identities and defining relations")
    p.add_argument("--which", type=RelationFamily, choices=[r.value for r in RelationFamily], required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--symbolic", action="store_true", help="full symbolic expansion instead of sampling")

    for p in sub.choices.values():
        _common(p)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    return RunConfig(**fields)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitStatus.USAGE.value

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        config = config_from_args(args)
        result = run(config)
    except (MatrixInvariantsError, ValueError) as e:
        logger.error("%s", e)
        return ExitStatus.USAGE.value
    except Exception:
        logger.exception("%s failed", args.command)
        return ExitStatus.USAGE.value

    text = result.render(config.fmt)
    if config.output is not None:
        try:
            config.output.write_text(text)
        except OSError as e:
            logger.error("cannot write %s: %s", config.output, e)
            return ExitStatus.USAGE.value
    else:
        sys.stdout.write(text)
    return result.status.value
