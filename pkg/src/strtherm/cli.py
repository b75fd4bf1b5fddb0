"""Command-line front end: analyze files, batch corpora, generate test inputs.

Every file is treated as raw bits; no format interpretation happens
anywhere.  The analyze pipeline is a straight composition of the library
operations, so its numbers are exactly the library's numbers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import lcm

from . import bitstring, ensemble, equilibrium, thermo
from .errors import DegenerateModel, EmptyInput, StrthermError

REPORT_VERSION = 1

_BIT_ORDERS = {"msb": bitstring.MSB_FIRST, "lsb": bitstring.LSB_FIRST}

# fixed pattern for the structured self-test corpus; the 32-bit period
# divides power-of-two sizes so rotation periodicity is exact, and half
# the bits are set so the fitted model is non-degenerate
_PERIODIC_PATTERN = b"\x6a\xc5\x3b\x91"


@dataclass(frozen=True)
class AnalysisConfig:
    """Everything one analysis run depends on."""

    inputs: tuple[str, ...]
    bit_order: str = bitstring.MSB_FIRST
    max_bits: int | None = None
    ensemble_size: int | None = None
    output_format: str = "human"
    emit_histogram: str | None = None
    emit_curves: str | None = None


@dataclass(frozen=True)
class AnalysisResult:
    mode: str
    hist: ensemble.Histogram
    model: equilibrium.EquilibriumModel
    report: thermo.ThermoReport
    full: bool


def _load(path: str, bit_order: str, max_bits: int | None) -> bitstring.BitString:
    with open(path, "rb") as fh:
        data = fh.read()
    if not data:
        raise EmptyInput(f"{path}: file is empty")
    b = bitstring.from_bytes(data, bit_order)
    if max_bits is not None:
        b = bitstring.truncate(b, max_bits)
    return b


def analyze(config: AnalysisConfig) -> AnalysisResult:
    """Run ingestion, ensemble, model fit and thermodynamics for one config."""
    if not 1 <= len(config.inputs) <= 2:
        raise ValueError("analysis takes one input, or two in pair mode")
    if len(config.inputs) == 2:
        a = _load(config.inputs[0], config.bit_order, config.max_bits)
        b = _load(config.inputs[1], config.bit_order, config.max_bits)
        n = config.ensemble_size
        ens = ensemble.build_pair_ensemble(
            a, b, lcm(a.nbits, b.nbits) if n is None else n
        )
    else:
        b = _load(config.inputs[0], config.bit_order, config.max_bits)
        n = config.ensemble_size
        ens = ensemble.build_self_ensemble(b, b.nbits if n is None else n)
    hist = ensemble.histogram(ens)
    model = equilibrium.fit(hist)
    report = thermo.build_report(hist, model)
    return AnalysisResult(ens.mode, hist, model, report, ens.full)


def gen_corpus(kind: str, size_bytes: int, seed: int, out_path: str) -> None:
    """Write a deterministic self-test corpus file."""
    if size_bytes < 1:
        raise ValueError(f"corpus size must be >= 1 byte, got {size_bytes}")
    if kind == "all_zero":
        data = b"\x00" * size_bytes
    elif kind == "periodic":
        reps = size_bytes // len(_PERIODIC_PATTERN) + 1
        data = (_PERIODIC_PATTERN * reps)[:size_bytes]
    elif kind == "random":
        b = bitstring.random_bitstring(8 * size_bytes, 0.5, seed)
        data = b.value.to_bytes(size_bytes, "big")
    else:
        raise ValueError(f"unknown corpus kind {kind!r}")
    with open(out_path, "wb") as fh:
        fh.write(data)


def _analysis_json(config: AnalysisConfig, result: AnalysisResult) -> str:
    doc = {
        "report_version": REPORT_VERSION,
        "mode": result.mode,
        "input": config.inputs[0],
        "bit_order": config.bit_order,
        "nbits": result.report.nbits,
        "n_obs": result.report.n_obs,
        "full_ensemble": result.full,
        "report": thermo.report_to_dict(result.report),
    }
    if len(config.inputs) == 2:
        doc["pair_input"] = config.inputs[1]
    return json.dumps(doc, indent=2) + "\n"


_HUMAN_ROWS = (
    ("temperature", "temperature", "dimensionless"),
    ("internal energy", "internal_energy", "per particle, observed"),
    ("internal energy (equilibrium)", "internal_energy_eq", "per particle, T/2"),
    ("entropy, thermodynamic", "entropy_thermo", "bits/particle"),
    ("entropy, thermodynamic (equilibrium)", "entropy_thermo_eq", "bits/particle"),
    ("entropy, microstate", "entropy_micro_per_bit", "bits/bit"),
    ("entropy, microstate (equilibrium)", "entropy_micro_eq_per_bit", "bits/bit"),
    ("partition function", "partition_fn", "dimensionless"),
    ("whole-ensemble entropy", "entropy_nats", "nats"),
    ("free energy", "free_energy", "dimensionless"),
    ("pressure", "pressure", "dimensionless"),
    ("volume", "volume", "sqrt(bits)"),
    ("fit quality", "fit_quality", "normalized RMS, lower = closer to equilibrium"),
)


def _analysis_human(config: AnalysisConfig, result: AnalysisResult) -> str:
    r = result.report
    lines = [
        f"input:            {config.inputs[0]}",
    ]
    if len(config.inputs) == 2:
        lines.append(f"pair input:       {config.inputs[1]}")
    lines += [
        f"mode:             {result.mode}",
        f"bit order:        {config.bit_order}",
        f"bits analyzed:    {r.nbits}",
        f"observations:     {r.n_obs}" + ("  (full ensemble)" if result.full else ""),
        f"degenerate:       {'yes' if r.degenerate else 'no'}",
    ]
    width = max(len(label) for label, _, _ in _HUMAN_ROWS) + 2
    for label, attr, unit in _HUMAN_ROWS:
        value = getattr(r, attr)
        rendered = "undefined" if value is None else f"{value:.6g}"
        lines.append(f"{(label + ':').ljust(width)}{rendered}  [{unit}]")
    return "\n".join(lines) + "\n"


def _write_artifacts(config: AnalysisConfig, result: AnalysisResult) -> None:
    if config.emit_histogram:
        with open(config.emit_histogram, "w") as fh:
            fh.write(ensemble.histogram_to_csv(result.hist))
    if config.emit_curves:
        if result.model.degenerate:
            print(
                "strtherm: degenerate model, no curve file written",
                file=sys.stderr,
            )
        else:
            rows = equilibrium.model_curve(result.model, result.hist.max_distance)
            with open(config.emit_curves, "w") as fh:
                fh.write(equilibrium.curve_to_csv(rows))


_SUMMARY_COLUMNS = (
    ("u_bar", "internal_energy"),
    ("u_bar_eq", "internal_energy_eq"),
    ("s_thermo", "entropy_thermo"),
    ("s_thermo_eq", "entropy_thermo_eq"),
    ("s_micro_per_bit", "entropy_micro_per_bit"),
    ("s_micro_eq_per_bit", "entropy_micro_eq_per_bit"),
    ("fit_quality", "fit_quality"),
)


def corpus_summary(configs: list[AnalysisConfig]) -> list[dict]:
    """One summary row per input; per-file failures become error rows."""
    rows = []
    for config in configs:
        row = {"input": config.inputs[0], "error": ""}
        try:
            result = analyze(config)
        except (StrthermError, OSError, ValueError) as exc:
            row["error"] = str(exc)
            for key, _ in _SUMMARY_COLUMNS:
                row[key] = None
        else:
            for key, attr in _SUMMARY_COLUMNS:
                row[key] = getattr(result.report, attr)
        rows.append(row)
    return rows


def _summary_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["input"] + [key for key, _ in _SUMMARY_COLUMNS] + ["error"])
    for row in rows:
        cells = [row["input"]]
        for key, _ in _SUMMARY_COLUMNS:
            value = row[key]
            cells.append("" if value is None else repr(value))
        cells.append(row["error"])
        writer.writerow(cells)
    return buf.getvalue()


def _summary_human(rows: list[dict]) -> str:
    headers = ["input"] + [key for key, _ in _SUMMARY_COLUMNS] + ["error"]
    table = [headers]
    for row in rows:
        cells = [row["input"]]
        for key, _ in _SUMMARY_COLUMNS:
            value = row[key]
            cells.append("" if value is None else f"{value:.4g}")
        cells.append(row["error"])
        table.append(cells)
    widths = [max(len(r[i]) for r in table) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in table]
    return "\n".join(lines) + "\n"


def _read_manifest(path: str) -> list[str]:
    with open(path) as fh:
        lines = [line.strip() for line in fh]
    return [line for line in lines if line and not line.startswith("#")]


def _cmd_analyze(args: argparse.Namespace) -> int:
    inputs = (args.file,) if args.pair is None else (args.file, args.pair)
    config = AnalysisConfig(
        inputs=inputs,
        bit_order=_BIT_ORDERS[args.bit_order],
        max_bits=args.bits,
        ensemble_size=args.ensemble,
        output_format=args.format,
        emit_histogram=args.emit_histogram,
        emit_curves=args.emit_curves,
    )
    result = analyze(config)
    if config.output_format == "json":
        sys.stdout.write(_analysis_json(config, result))
    elif config.output_format == "csv":
        sys.stdout.write(thermo.report_to_csv(result.report))
    else:
        sys.stdout.write(_analysis_human(config, result))
    _write_artifacts(config, result)
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    paths = _read_manifest(args.manifest)
    configs = [
        AnalysisConfig(
            inputs=(path,),
            bit_order=_BIT_ORDERS[args.bit_order],
            max_bits=args.bits,
        )
        for path in paths
    ]
    rows = corpus_summary(configs)
    if args.format == "csv":
        sys.stdout.write(_summary_csv(rows))
    else:
        sys.stdout.write(_summary_human(rows))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    gen_corpus(args.kind, args.bytes, args.seed, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strtherm",
        description="Thermodynamic analysis of binary strings via the "
        "cyclic shift-XOR ensemble.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="analyze one file (or a pair)")
    p_analyze.add_argument("file", help="input file, read as raw bits")
    p_analyze.add_argument("--pair", metavar="FILE2", help="second input for pair mode")
    p_analyze.add_argument("--bits", type=int, metavar="N",
                           help="truncate input to the first N bits")
    p_analyze.add_argument("--ensemble", type=int, metavar="N",
                           help="number of shifts (default: all of them)")
    p_analyze.add_argument("--bit-order", choices=sorted(_BIT_ORDERS), default="msb",
                           help="bit 0 is the MSB or the LSB of each byte")
    p_analyze.add_argument("--format", choices=("json", "csv", "human"),
                           default="human")
    p_analyze.add_argument("--emit-histogram", metavar="PATH",
                           help="write the distance histogram CSV (the dots)")
    p_analyze.add_argument("--emit-curves", metavar="PATH",
                           help="write the model curve CSV (the lines)")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_batch = sub.add_parser("batch", help="summarize a corpus of files")
    p_batch.add_argument("manifest",
                         help="text file with one input path per line; "
                         "blank lines and # comments are skipped")
    p_batch.add_argument("--bits", type=int, metavar="N",
                         help="truncate every input to the first N bits")
    p_batch.add_argument("--bit-order", choices=sorted(_BIT_ORDERS), default="msb")
    p_batch.add_argument("--format", choices=("csv", "human"), default="human")
    p_batch.set_defaults(func=_cmd_batch)

    p_gen = sub.add_parser("gen", help="generate a self-test corpus file")
    p_gen.add_argument("--kind", required=True,
                       choices=("random", "periodic", "all_zero"))
    p_gen.add_argument("--bytes", type=int, required=True, metavar="N")
    p_gen.add_argument("--seed", type=int, default=0, metavar="S")
    p_gen.add_argument("--out", required=True, metavar="PATH")
    p_gen.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (StrthermError, OSError, ValueError) as exc:
        print(f"strtherm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
