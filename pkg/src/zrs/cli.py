"""Command line interface.

Subcommands: classify, eval, metric, sweep, probe. Interactions come in as
JSON on stdin or from --input FILE:

    {"form": "abcd", "a": [re, im], "b": [re, im], "c": [re, im], "d": [re, im]}
    {"form": "frakT", "t": [[[re, im], [re, im]], [[re, im], [re, im]]]}

and, for sweep --family FrakTPath only,

    {"form": "frakT_path", "ts": [t, t, ...]}   (each t shaped like "frakT")

Output is canonical single-line JSON (sorted keys, no whitespace, complex
numbers as [re, im]) or CSV for sweeps. Exit codes: 0 success including
structured pole / not-applicable answers, 2 malformed input, 3 coefficients
with no boundary matrix, 4 sweep grid guard violations.
"""

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from .classifier import Sheet, classify
from .errors import AtPole, NotApplicable, NotRepresentable, ZrsError
from .interaction import Interaction
from .metric import (
    Applicability,
    check_applicability,
    construct,
    cosh_chi_from_poles,
    metric_matrix,
    verify_intertwining,
)
from .resolvent import similarity_integral_probe
from .smatrix import build

MAX_GRID = 10_000_000

CSV_COLUMNS = [
    "index",
    "param_re",
    "param_im",
    "pole1_k_re",
    "pole1_k_im",
    "pole1_order",
    "pole1_sheet",
    "pole2_k_re",
    "pole2_k_im",
    "pole2_order",
    "pole2_sheet",
    "pole_at_infinity",
    "eig1_re",
    "eig1_im",
    "eig2_re",
    "eig2_im",
    "sing1",
    "sing2",
    "singularity_at_infinity",
    "exc1_re",
    "exc1_im",
    "similarity",
    "region",
    "has_negative_eigenvalues",
    "error",
]

PROBE_NOTE = (
    "evidence, not a certificate: values bounded across decreasing epsilon "
    "are consistent with similarity to a self-adjoint operator; growth like "
    "1/epsilon indicates a real spectral singularity"
)


class SchemaError(Exception):
    """Input does not match the documented JSON schema."""


def _f(x):
    x = float(x)
    if x == 0.0:
        return 0.0
    return x


def _pair(z):
    z = complex(z)
    return [_f(z.real), _f(z.imag)]


def _dump(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(obj):
    sys.stdout.write(_dump(obj) + "\n")


def _read_payload(args):
    if getattr(args, "input", None):
        try:
            raw = Path(args.input).read_text()
        except OSError as exc:
            raise SchemaError(f"cannot read {args.input}: {exc}")
    else:
        raw = sys.stdin.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}")
    if not isinstance(data, dict):
        raise SchemaError("top-level JSON value must be an object")
    return data


def _cell(value, where):
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in value
        )
    ):
        raise SchemaError(f"{where} must be [re, im]")
    return complex(value[0], value[1])


def _parse_matrix(raw, where):
    if not isinstance(raw, list) or len(raw) != 2:
        raise SchemaError(f"{where} must be a 2x2 matrix of [re, im] pairs")
    out = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != 2:
            raise SchemaError(f"{where} must be a 2x2 matrix of [re, im] pairs")
        out.append([_cell(cell, f"{where}[{i}][{j}]") for j, cell in enumerate(row)])
    return out


def _interaction_from(data):
    form = data.get("form")
    if form == "abcd":
        missing = [key for key in "abcd" if key not in data]
        if missing:
            raise SchemaError(f"missing field(s): {', '.join(missing)}")
        return Interaction.from_abcd(*(_cell(data[key], f"field {key!r}") for key in "abcd"))
    if form == "frakT":
        if "t" not in data:
            raise SchemaError("missing field 't'")
        return Interaction.from_matrix(_parse_matrix(data["t"], "field 't'"))
    raise SchemaError("field 'form' must be 'abcd' or 'frakT'")


def _path_from(data):
    if data.get("form") != "frakT_path":
        raise SchemaError("FrakTPath sweeps need input with form 'frakT_path'")
    ts = data.get("ts")
    if not isinstance(ts, list) or not ts:
        raise SchemaError("field 'ts' must be a non-empty list of 2x2 matrices")
    return [_parse_matrix(t, f"field 'ts'[{i}]") for i, t in enumerate(ts)]


def _parse_k(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise SchemaError("--k must be RE,IM")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise SchemaError("--k must be RE,IM")


def _parse_dir(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise SchemaError("--dir must be RE,IM")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise SchemaError("--dir must be RE,IM")


def _parse_range(text, option):
    parts = text.split(":")
    if len(parts) != 2:
        raise SchemaError(f"{option} must be A:B")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise SchemaError(f"{option} must be A:B")


def _classification_payload(c):
    poles = []
    for p in c.poles:
        poles.append(
            {
                "k": None if p.location is None else _pair(p.location),
                "order": p.order,
                "sheet": p.sheet.value,
                "z": None if p.z is None else _pair(p.z),
            }
        )
    return {
        "eigenvalues": [_pair(z) for z in c.eigenvalues],
        "exceptional_points": [_pair(z) for z in c.exceptional_points],
        "has_negative_eigenvalues": c.has_negative_eigenvalues,
        "poles": poles,
        "region": c.region.value,
        "similarity": c.similarity.value,
        "singularity_at_infinity": c.singularity_at_infinity,
        "spectral_singularities": [_f(x) for x in c.spectral_singularities],
    }


def _cmd_classify(args):
    interaction = _interaction_from(_read_payload(args))
    _emit(_classification_payload(classify(interaction)))
    return 0


def _cmd_eval(args):
    k = _parse_k(args.k)
    interaction = _interaction_from(_read_payload(args))
    s = build(interaction)
    try:
        m = s.evaluate(k)
    except AtPole:
        _emit({"k": _pair(k), "pole": True})
        return 0
    _emit(
        {
            "k": _pair(k),
            "s": [[_pair(m[0, 0]), _pair(m[0, 1])], [_pair(m[1, 0]), _pair(m[1, 1])]],
        }
    )
    return 0


def _cmd_metric(args):
    interaction = _interaction_from(_read_payload(args))
    applicability, reason = check_applicability(interaction)
    if applicability is Applicability.NOT_APPLICABLE:
        _emit({"applicable": False, "reason": reason})
        return 0
    spec = construct(interaction)
    E = metric_matrix(spec)
    residual = verify_intertwining(interaction, spec)
    if applicability is Applicability.TWO_IMAGINARY_POLES:
        cosh_chi = _f(cosh_chi_from_poles(interaction))
    else:
        cosh_chi = None
    _emit(
        {
            "alpha": [_f(x) for x in spec.alpha],
            "applicable": True,
            "applicability": applicability.value,
            "chi": _f(spec.chi),
            "cosh_chi_from_poles": cosh_chi,
            "e": [[_pair(E[0, 0]), _pair(E[0, 1])], [_pair(E[1, 0]), _pair(E[1, 1])]],
            "intertwining_residual": _f(residual),
            "kappa": _f(spec.kappa),
        }
    )
    return 0


def _grid(start, stop, step):
    if step <= 0:
        raise _GuardError("--param step must be positive")
    count = math.floor((stop - start) / step + 1 + 1e-9)
    if count < 1:
        raise _GuardError("empty parameter grid")
    if count > MAX_GRID:
        raise _GuardError(f"parameter grid has {count} points, limit is {MAX_GRID}")
    return [start + j * step for j in range(count)]


class _GuardError(Exception):
    pass


def _row_from(index, param, classification, error):
    row = dict.fromkeys(CSV_COLUMNS)
    row["index"] = index
    row["param_re"] = _f(param.real)
    row["param_im"] = _f(param.imag)
    row["error"] = error
    if classification is None:
        return row
    finite = [p for p in classification.poles if p.sheet is not Sheet.INFINITY]
    for slot, p in zip((1, 2), finite):
        row[f"pole{slot}_k_re"] = _f(p.location.real)
        row[f"pole{slot}_k_im"] = _f(p.location.imag)
        row[f"pole{slot}_order"] = p.order
        row[f"pole{slot}_sheet"] = p.sheet.value
    row["pole_at_infinity"] = any(
        p.sheet is Sheet.INFINITY for p in classification.poles
    )
    for slot, z in zip((1, 2), classification.eigenvalues):
        row[f"eig{slot}_re"] = _f(z.real)
        row[f"eig{slot}_im"] = _f(z.imag)
    for slot, x in zip((1, 2), classification.spectral_singularities):
        row[f"sing{slot}"] = _f(x)
    row["singularity_at_infinity"] = classification.singularity_at_infinity
    for slot, z in zip((1,), classification.exceptional_points):
        row[f"exc{slot}_re"] = _f(z.real)
        row[f"exc{slot}_im"] = _f(z.imag)
    row["similarity"] = classification.similarity.value
    row["region"] = classification.region.value
    row["has_negative_eigenvalues"] = classification.has_negative_eigenvalues
    return row


def _csv_cell(value):
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _sweep_points(args):
    family = args.family
    if family == "FrakTPath":
        matrices = _path_from(_read_payload(args))
        return [(complex(i), ("matrix", m)) for i, m in enumerate(matrices)]
    if not args.param:
        raise SchemaError("--param is required for this family")
    start, stop, step = _parse_param(args.param)
    direction = _parse_dir(args.dir)
    points = []
    for t in _grid(start, stop, step):
        if family == "Delta":
            points.append((t * direction, ("abcd", (t * direction, 0, 0, 0))))
        elif family == "Mixed":
            points.append((t * direction, ("abcd", (0, t * direction, 0, 0))))
        elif family == "DeltaPrime":
            points.append((t * direction, ("abcd", (0, 0, 0, t * direction))))
        else:  # ExampleV
            phase = complex(math.cos(t), math.sin(t))
            points.append(
                (complex(t), ("abcd", (-phase, -1, 1, phase.conjugate())))
            )
    return points


def _parse_param(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise SchemaError("--param must be START:STOP:STEP")
    try:
        return float(parts[0]), float(parts[1]), float(parts[2])
    except ValueError:
        raise SchemaError("--param must be START:STOP:STEP")


def _cmd_sweep(args):
    points = _sweep_points(args)
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
    for index, (param, spec) in enumerate(points):
        classification = None
        error = None
        try:
            if spec[0] == "matrix":
                interaction = Interaction.from_matrix(spec[1])
            else:
                interaction = Interaction.from_abcd(*spec[1])
            classification = classify(interaction)
        except ZrsError as exc:
            error = type(exc).__name__
        row = _row_from(index, param, classification, error)
        if writer is not None:
            writer.writerow([_csv_cell(row[col]) for col in CSV_COLUMNS])
        else:
            _emit(row)
    return 0


def _cmd_probe(args):
    interaction = _interaction_from(_read_payload(args))
    xi_range = _parse_range(args.xi, "--xi")
    if args.epsilon <= 0:
        raise SchemaError("--epsilon must be positive")
    value = similarity_integral_probe(
        interaction, args.epsilon, xi_range, n=args.n
    )
    _emit(
        {
            "epsilon": _f(args.epsilon),
            "label": "evidence",
            "n": args.n,
            "note": PROBE_NOTE,
            "value": _f(value),
            "xi": [_f(xi_range[0]), _f(xi_range[1])],
        }
    )
    return 0


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="zrs",
        description="Scattering matrices and spectral reports for zero-range interactions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", help="read the interaction JSON from FILE instead of stdin")

    p = sub.add_parser("classify", help="poles, spectrum and similarity verdict")
    add_input(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("eval", help="evaluate S(k)")
    add_input(p)
    p.add_argument("--k", required=True, help="evaluation point as RE,IM")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("metric", help="metric operator, when applicable")
    add_input(p)
    p.set_defaults(handler=_cmd_metric)

    p = sub.add_parser("sweep", help="classify along a parameter family")
    add_input(p)
    p.add_argument(
        "--family",
        required=True,
        choices=["Delta", "Mixed", "DeltaPrime", "ExampleV", "FrakTPath"],
    )
    p.add_argument("--param", help="grid as START:STOP:STEP (ignored for FrakTPath)")
    p.add_argument("--dir", default="1,0", help="complex direction RE,IM for the swept coefficient")
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("probe", help="similarity integral probe along z = xi + i*epsilon")
    add_input(p)
    p.add_argument("--epsilon", required=True, type=float)
    p.add_argument("--xi", required=True, help="integration range as A:B")
    p.add_argument("--n", type=int, default=200001, help="quadrature nodes")
    p.set_defaults(handler=_cmd_probe)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotRepresentable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except _GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ZrsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
