"""Command-line interface.

Subcommands
-----------
admissible   decide whether (p, k, family) admits the construction
subset       cumulative sumset layers, indices and verdict
spectrum     full Cayley spectrum with bound classification
code-gen     emit the parity-check matrix and code parameters
code-verify  cross-check decoder table against sumset layers
decode       decode words read from stdin, one per line
lemma-suite  run the brute-force verification battery

Exit codes: 0 success, 1 precondition violation, 2 verification mismatch.
Identical configurations produce byte-identical output.
"""

import argparse
import json
import sys

from .codes import (VerificationError, build_code, code_parameters,
                    coset_leader_table, decode, matrix_from_json_dict,
                    matrix_from_text, parity_check_matrix, round_trip_check,
                    verify_quasi_perfect)
from .curves import admissibility, generator_set
from .fields import DEFAULT_AMBIENT_CAP, SizeCapError, make_field
from .lemmas import lemma_battery
from .spectra import full_spectrum
from .sumsets import CoverageError, classify

_YESNO = {True: "yes", False: "no"}


def _add_common(sub):
    sub.add_argument("--p", type=int, help="odd prime characteristic")
    sub.add_argument("--k", type=int, default=1, help="extension degree (default 1)")
    sub.add_argument("--family", choices=("plus", "minus"),
                     help="generator family")
    sub.add_argument("--format", choices=("json", "text"), default="text",
                     dest="fmt", help="output format (default text)")
    sub.add_argument("--out", help="write output to this file instead of stdout")
    sub.add_argument("--cap", type=int, default=DEFAULT_AMBIENT_CAP,
                     help="ambient size cap on q^2")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quasilee", description=__doc__.split("\n")[0])
    sp = ap.add_subparsers(dest="command", required=True)

    for name, helptext in (
            ("admissible", "check whether the family applies at (p, k)"),
            ("subset", "cumulative sumset layers and verdict"),
            ("spectrum", "Cayley graph spectrum and bounds"),
            ("code-gen", "parity-check matrix and code parameters"),
            ("code-verify", "verify decoder table against sumset layers"),
            ("decode", "decode words from stdin"),
            ("lemma-suite", "run the brute-force lemma battery")):
        sub = sp.add_parser(name, help=helptext)
        _add_common(sub)
        if name == "spectrum":
            sub.add_argument("--dump-csv", help="also write eigenvalues "
                             "and exact counts to this CSV file")
        if name in ("code-verify", "decode"):
            sub.add_argument("--matrix", help="read the parity-check matrix "
                             "from this file instead of --p/--k/--family")
        if name == "code-verify":
            sub.add_argument("--seed", type=int, default=0,
                             help="seed for the decode round trip (default 0)")
            sub.add_argument("--trials", type=int, default=200,
                             help="round-trip trial count (default 200)")
    return ap


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"--{name} is required for this command")


def _generator(args):
    _require(args, "p", "family")
    return generator_set(make_field(args.p, args.k, cap=args.cap), args.family)


def _load_matrix(args):
    if getattr(args, "matrix", None):
        with open(args.matrix) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            return matrix_from_json_dict(json.loads(text))
        return matrix_from_text(text)
    return None


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------

def cmd_admissible(args) -> str:
    _require(args, "p", "family")
    rep = admissibility(args.p, args.k, args.family)
    if args.fmt == "json":
        return _json(rep.to_json_dict())
    return (f"family={rep.family} p={rep.p} k={rep.k} q={rep.q} "
            f"minus3={rep.minus3_class} admissible={_YESNO[rep.admissible]}\n"
            f"reason: {rep.reason}\n")


def cmd_subset(args) -> str:
    cls = classify(_generator(args))
    if args.fmt == "json":
        return _json(cls.to_json_dict())
    lay = cls.layers
    limit = "none" if lay.limit_index is None else lay.limit_index
    return (f"family={lay.generator.family} p={lay.generator.p} "
            f"k={lay.generator.k} n={lay.n}\n"
            f"layers: {' '.join(str(s) for s in lay.sizes)}\n"
            f"critical_index={lay.critical_index} limit_index={limit} "
            f"covered={_YESNO[lay.covered]}\n"
            f"verdict={cls.verdict}\n")


def cmd_spectrum(args) -> str:
    gen = _generator(args)
    rep = full_spectrum(gen)
    if args.dump_csv:
        with open(args.dump_csv, "w") as fh:
            heads = ",".join(f"count_{j}" for j in range(gen.p))
            fh.write(f"alpha,eigenvalue,{heads}\n")
            for alpha in range(gen.ambient_size):
                row = ",".join(str(int(c)) for c in rep.counts[alpha])
                fh.write(f"{alpha},{float(rep.eigenvalues[alpha])!r},{row}\n")
    if args.fmt == "json":
        return _json(rep.to_json_dict())
    return (f"family={gen.family} p={gen.p} k={gen.k} "
            f"degree={rep.degree} vertices={gen.ambient_size}\n"
            f"max_nontrivial_abs={rep.max_nontrivial_abs!r}\n"
            f"ramanujan_bound={rep.ramanujan_bound!r}\n"
            f"almost_ramanujan_bound={rep.almost_bound!r}\n"
            f"classification={rep.classification} "
            f"connected={_YESNO[rep.connected]}\n")


def cmd_code_gen(args) -> str:
    _require(args, "p", "family")
    code = build_code(args.p, args.k, args.family)
    if args.fmt == "json":
        return _json(code.to_json_dict())
    radius = "none" if code.covering_radius is None else code.covering_radius
    return (code.matrix.to_text()
            + f"# n={code.n} dimension={code.dimension} "
              f"codewords={code.codeword_count} density={code.density!r}\n"
            + f"# error_correction={code.error_correction} "
              f"covering_radius={radius} verdict={code.verdict}\n")


def _code_and_table(args):
    mat = _load_matrix(args)
    if mat is None:
        code = code_parameters(_generator(args))
    else:
        code = code_parameters(mat.generator)
    table = coset_leader_table(code.matrix)
    return code, table


def cmd_code_verify(args) -> str:
    code, table = _code_and_table(args)
    rep = verify_quasi_perfect(code, table)
    ok, total = round_trip_check(table, args.trials, args.seed,
                                 max_weight=min(2, rep.error_correction))
    if ok != total:
        raise VerificationError(f"decode round trip failed: {ok}/{total}")
    if args.fmt == "json":
        d = rep.to_json_dict()
        d["round_trip"] = {"ok": ok, "trials": total, "seed": args.seed}
        return _json(d)
    g = code.generator
    hist = " ".join(f"{w}:{c}" for w, c in sorted(table.histogram().items()))
    return (f"family={g.family} p={g.p} k={g.k} n={code.n} "
            f"dimension={code.dimension}\n"
            f"verdict={code.verdict} quasi_perfect={_YESNO[rep.quasi_perfect]}\n"
            f"error_correction={rep.error_correction} "
            f"covering_radius={rep.covering_radius} (table and layers agree)\n"
            f"leader_weights: {hist}\n"
            f"round_trip: {ok}/{total} seed={args.seed}\n")


def cmd_decode(args) -> str:
    mat = _load_matrix(args)
    if mat is None:
        mat = parity_check_matrix(_generator(args))
    table = coset_leader_table(mat)
    out = []
    for lineno, line in enumerate(sys.stdin, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word = [int(tok) for tok in line.split()]
            res = decode(table, word)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if args.fmt == "json":
            out.append(json.dumps({"codeword": list(res.codeword),
                                   "error": list(res.error),
                                   "weight": res.weight}, sort_keys=True))
        else:
            out.append(f"{' '.join(map(str, res.codeword))} | "
                       f"{' '.join(map(str, res.error))} | {res.weight}")
    return "\n".join(out) + ("\n" if out else "")


def cmd_lemma_suite(args) -> str:
    _require(args, "p")
    checks = lemma_battery(args.p, args.k)
    passed = sum(c.passed for c in checks)
    if args.fmt == "json":
        body = _json({"p": args.p, "k": args.k,
                      "checks": [c.to_json_dict() for c in checks],
                      "passed": passed, "total": len(checks)})
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}"
                 for c in checks]
        lines.append(f"{passed}/{len(checks)} checks passed")
        body = "\n".join(lines) + "\n"
    if passed != len(checks):
        raise _LemmaFailure(body)
    return body


class _LemmaFailure(Exception):
    """Carries the battery report for a failing suite."""


_DISPATCH = {
    "admissible": cmd_admissible,
    "subset": cmd_subset,
    "spectrum": cmd_spectrum,
    "code-gen": cmd_code_gen,
    "code-verify": cmd_code_verify,
    "decode": cmd_decode,
    "lemma-suite": cmd_lemma_suite,
}


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; here 2 is reserved for
        # verification mismatches, so usage problems map to 1
        return 0 if exc.code in (0, None) else 1
    try:
        text = _DISPATCH[args.command](args)
    except (ValueError, ZeroDivisionError, SizeCapError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: precondition: {exc}", file=sys.stderr)
        return 1
    except (VerificationError, CoverageError, AssertionError) as exc:
        print(f"error: verification: {exc}", file=sys.stderr)
        return 2
    except _LemmaFailure as exc:
        _emit(str(exc), args.out)
        print("error: verification: lemma battery has failing checks",
              file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
