"""Command-line entry point: ``gammazero <command> [options]``.

Every command emits a JSON report (stdout, or ``--report PATH``). Commands
that produce a table or a file write it to ``--out``; the others write the
report there instead. Verify commands exit with status 1 when any verdict is
unequal.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__, _kernels
from .cabling import (
    BudgetExceeded as LiftBudgetExceeded,
    count_lifts_naive,
    count_one_colorable_lifts,
    lift,
    question1_explore,
    write_question1_csv,
)
from .chords import (
    ChordDiagram,
    ChordParseError,
    chromatic_number,
    enumerate_diagrams,
    genus,
    intersection_graph,
    is_isomorphic,
    pairing_from_chords,
    pairing_from_word,
    word_of,
)
from .mutation import (
    Arrangement,
    MutationError,
    build_words,
    canonical_start,
    decompose,
    exhaustive_instances,
    flip,
    random_shared_diagram,
    share_from_ranges,
    slot_name,
    verify_many,
)
from .skein import (
    PDError,
    SkeinBudgetExceeded,
    cable,
    convention,
    gamma0,
    gamma_coefficients,
    homfly,
    load_pd,
    verify_mutant_cable,
)
from .weights import BudgetExceeded as WeightBudgetExceeded
from .weights import SeriesError, expand_homfly, weight_gamma0, weight_sl

EXIT_OK, EXIT_UNEQUAL, EXIT_USAGE, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


# -- input helpers ----------------------------------------------------------------------------


def raw_pairing(text: str) -> tuple[int, ...]:
    """Pairing exactly as written (no rotation to canonical form).

    A word in which every symbol occurs once is shorthand for that word
    written twice, so ``1`` means ``11`` and ``12`` means ``1212``.
    """
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        obj = json.loads(s)
        if isinstance(obj, dict):
            return pairing_from_chords(obj["chords"], obj.get("degree"))
        return pairing_from_chords(obj)
    if s in ("", "0", "-"):
        return ()
    if not s.isalnum():
        raise ChordParseError(f"unexpected character in word {s!r}")
    if len(set(s)) == len(s):
        s = s + s
    return pairing_from_word(s)


def diagram_arg(text: str) -> ChordDiagram:
    return ChordDiagram.from_pairing(raw_pairing(text))


def parse_share(text: str) -> tuple[tuple[int, int], tuple[int, int]]:
    """``I=a..b,J=c..d`` with inclusive leg ranges."""
    parts = dict(p.split("=", 1) for p in text.replace(" ", "").split(","))
    try:
        ranges = []
        for k in ("I", "J"):
            lo, hi = parts[k].split("..")
            ranges.append((int(lo), int(hi)))
    except (KeyError, ValueError):
        raise UsageError(f"--share expects I=a..b,J=c..d, got {text!r}") from None
    return ranges[0], ranges[1]


def read_json_arg(text: str) -> Any:
    """Inline JSON, or a path to a JSON file."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    return json.loads(Path(s).read_text())


def frac(x) -> str:
    return str(x)


def poly_payload(p) -> dict[str, object]:
    return {"text": str(p), "variables": list(p.variables), "terms": p.to_terms()}


# -- commands ----------------------------------------------------------------------------------


def cmd_weight(args) -> tuple[dict, int]:
    d = diagram_arg(args.diagram)
    payload: dict[str, object] = {"diagram": str(d), "genus": genus(d)}
    if args.gamma0:
        payload["gamma0"] = str(weight_gamma0(d).poly)
    else:
        w = weight_sl(d, cap=args.state_cap)
        payload["polynomial"] = {"text": str(w), "h_degree": w.h_degree, "terms": w.poly.to_terms()}
    return payload, EXIT_OK


def cmd_expand(args) -> tuple[dict, int]:
    d = load_pd(args.pd)
    p = homfly(d, args.skein_sign, args.budget_secs)
    s = expand_homfly(p, d.components, args.order)
    rows = [(i, j, c) for i, j, c in s.rows()]
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["i", "j", "coefficient"])
            w.writerows((i, j, frac(c)) for i, j, c in rows)
    above = [(i, j) for i, j, _ in rows if i > j + 1]
    payload = {
        "pd": args.pd,
        "components": d.components,
        "order": args.order,
        "coefficients": [{"i": i, "j": j, "value": frac(c)} for i, j, c in rows],
        "diagonal": [frac(c) for c in s.diagonal()],
        "above_diagonal_nonzero": [list(k) for k in above],
    }
    return payload, EXIT_OK


def cmd_lifts(args) -> tuple[dict, int]:
    d = diagram_arg(args.diagram)
    lc = count_one_colorable_lifts(d, args.p, budget=args.budget)
    payload: dict[str, object] = {"diagram": str(d), "p": args.p, "count": lc.count}
    if args.census:
        naive = count_lifts_naive(d, args.p, census=True)
        payload["by_genus"] = {str(g): n for g, n in sorted((naive.by_genus or {}).items())}
    return payload, EXIT_OK


def cmd_question1(args) -> tuple[dict, int]:
    rows = question1_explore(args.max_degree, args.p, jobs=args.jobs)
    rows.sort(key=lambda r: (r.degree, r.diagram.word))
    if args.out:
        write_question1_csv(rows, args.out)
    verdicts: dict[str, int] = {}
    for r in rows:
        verdicts[r.verdict] = verdicts.get(r.verdict, 0) + 1
    payload = {
        "max_degree": args.max_degree,
        "p": args.p,
        "diagrams": len(rows),
        "verdicts": dict(sorted(verdicts.items())),
        "violations": [str(r.diagram) for r in rows if r.verdict == "VIOLATION"],
        "converse_fails": [str(r.diagram) for r in rows if r.verdict == "converse-fails"],
        "csv": args.out,
    }
    return payload, EXIT_UNEQUAL if verdicts.get("VIOLATION") else EXIT_OK


def cmd_mutate(args) -> tuple[dict, int]:
    pairing = raw_pairing(args.diagram)
    i_range, j_range = parse_share(args.share)
    sd = share_from_ranges(pairing, i_range, j_range)
    mut = sd.mutated()
    payload = {
        "diagram": "".join(map(str, word_of(pairing))),
        "share": sd.share.describe(),
        "rotated": "".join(map(str, word_of(sd.pairing))),
        "mutant": "".join(map(str, word_of(mut.pairing))),
        "mutant_canonical": str(mut.diagram),
        "graphs_isomorphic": is_isomorphic(intersection_graph(sd.pairing), intersection_graph(mut.pairing)),
    }
    return payload, EXIT_OK


def cmd_flip(args) -> tuple[dict, int]:
    spec = read_json_arg(args.lift)
    pairing = raw_pairing(spec["diagram"] if isinstance(spec["diagram"], str) else json.dumps(spec["diagram"]))
    i_range, j_range = parse_share(spec["share"])
    sd = share_from_ranges(pairing, i_range, j_range)
    if i_range[0] != 0:
        raise UsageError("flip expects the share's I arc to start at leg 0 so colors index legs directly")
    lifted = lift(sd.pairing, spec["colors"], int(spec["p"]))
    if not lifted.is_one_colorable():
        raise UsageError("the lift in --lift has crossing chords")
    arr = Arrangement.of_lift(sd, lifted)
    classes = [c for c in decompose(arr).R if any(arr.slots[t] for t in c)]
    if not 1 <= args.class_index <= len(classes):
        raise UsageError(f"--class must be in 1..{len(classes)}")
    cls = classes[args.class_index - 1]
    if args.start == "canonical":
        k = canonical_start(cls, arr.p)
        anchor = sorted(cls)[k] // 4 + 1
    else:
        k, anchor = 0, 1
    new, _, fw = flip(arr, cls, anchor, k)
    where = {x: slot_name(t) for t, content in enumerate(new.slots) for x in content}
    payload: dict[str, object] = {
        "class": [slot_name(t) for t in sorted(cls)],
        "start": args.start,
        "flipped_slots": {str(x): where[x] for x in sorted(where)},
    }
    trace = build_words(cls, arr.p, anchor, k).trace()
    if args.trace:
        payload["trace"] = trace
        for key in ("R", "W", "W_rev"):
            print(f"{key}: {trace[key] if isinstance(trace[key], str) else ' '.join(trace[key])}", file=sys.stderr)
        for key, words in trace["gaps"].items():
            print(f"gaps {key}: ({', '.join(words)})", file=sys.stderr)
        print(f"R_rev: {' '.join(trace['R_rev'])}", file=sys.stderr)
        print(f"gluing: ({', '.join(trace['gluing'])})", file=sys.stderr)
    return payload, EXIT_OK


def cmd_verify_prop_key(args) -> tuple[dict, int]:
    instances = list(exhaustive_instances(args.max_degree)) if args.max_degree > 0 else []
    rng = random.Random(args.seed)
    for _ in range(args.random):
        instances.append(random_shared_diagram(rng, args.random_max_degree))
    verdicts = verify_many(instances, args.p, args.psi_max_degree, jobs=args.jobs)
    rows = [v.row() for v in verdicts]
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]) if rows else ["verdict"])
            w.writeheader()
            w.writerows(rows)
    unequal = [r for r in rows if r["verdict"] != "equal"]
    payload = {
        "max_degree": args.max_degree,
        "p": args.p,
        "random": args.random,
        "instances": len(rows),
        "psi_checked": sum(int(r["psi_checked"]) for r in rows),
        "graphs_isomorphic": all(r["graphs_isomorphic"] in (1, "") for r in rows),
        "unequal": unequal,
        "verdict": "equal" if not unequal else "unequal",
        "csv": args.out,
    }
    return payload, EXIT_OK if not unequal else EXIT_UNEQUAL


def cmd_homfly(args) -> tuple[dict, int]:
    d = load_pd(args.pd)
    t = time.perf_counter()
    p = homfly(d, args.skein_sign, args.budget_secs)
    payload = {
        "pd": args.pd,
        "crossings": len(d.crossings),
        "components": d.components,
        "writhe": d.writhe,
        "homfly": poly_payload(p),
        "gamma": {str(i): str(g) for i, g in gamma_coefficients(p, d.components).items()},
        "seconds": round(time.perf_counter() - t, 3),
    }
    return payload, EXIT_OK


def cmd_gamma0(args) -> tuple[dict, int]:
    d = load_pd(args.pd)
    t = time.perf_counter()
    g = gamma0(d, args.skein_sign, args.budget_secs)
    payload = {
        "pd": args.pd,
        "crossings": len(d.crossings),
        "components": d.components,
        "gamma0": poly_payload(g),
        "seconds": round(time.perf_counter() - t, 3),
    }
    return payload, EXIT_OK


def cmd_cable(args) -> tuple[dict, int]:
    d = load_pd(args.pd)
    c = cable(d, args.p, args.q)
    text = f"# name: ({args.p},{args.q})-cable of {args.pd}\n" + c.to_pd_text()
    if args.out:
        Path(args.out).write_text(text)
    payload = {
        "pd": args.pd,
        "p": args.p,
        "q": args.q,
        "crossings": len(c.crossings),
        "components": c.components,
        "writhe": c.writhe,
        "out": args.out,
    }
    if not args.out:
        payload["pd_text"] = text
    return payload, EXIT_OK


def cmd_verify_mutant(args) -> tuple[dict, int]:
    v = verify_mutant_cable(load_pd(args.pd1), load_pd(args.pd2), args.p, args.q, args.skein_sign, args.budget_secs)
    payload = {"pd1": args.pd1, "pd2": args.pd2, **v.to_json()}
    if v.status == "budget-exceeded":
        return payload, EXIT_BUDGET
    return payload, EXIT_OK if v.equal else EXIT_UNEQUAL


def cmd_census(args) -> tuple[dict, int]:
    rows = []
    counts: dict[str, dict[str, int]] = {}
    for n in range(args.max_degree + 1):
        hist: dict[str, int] = {}
        for d in enumerate_diagrams(n):
            g = genus(d)
            hist[str(g)] = hist.get(str(g), 0) + 1
            row: dict[str, object] = {
                "diagram": str(d),
                "degree": n,
                "genus": g,
                "chromatic_number": chromatic_number(intersection_graph(d)),
            }
            if args.p:
                row[f"lifts_p{args.p}"] = count_one_colorable_lifts(d, args.p).count
            rows.append(row)
        counts[str(n)] = dict(sorted(hist.items()))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    payload = {
        "max_degree": args.max_degree,
        "diagrams_per_degree": {k: sum(v.values()) for k, v in counts.items()},
        "by_genus": counts,
        "csv": args.out,
    }
    return payload, EXIT_OK


# -- parser ----------------------------------------------------------------------------------


TABLE_COMMANDS = {"expand", "question1", "verify-prop-key", "census", "cable"}


def build_parser() -> tuple[argparse.ArgumentParser, dict[str, argparse.ArgumentParser]]:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (table or PD for table commands, else the JSON report)")
    common.add_argument("--report", help="write the JSON report here instead of stdout")
    common.add_argument("--config", help="key=value file presetting options")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--skein-sign", choices=["plus", "standard"], default="plus")
    common.add_argument(
        "--budget-secs", type=float, default=None, help="time cap for skein recursions (default: $GAMMA0_BUDGET_SECS)"
    )

    parser = argparse.ArgumentParser(prog="gammazero", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"gammazero {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    subs: dict[str, argparse.ArgumentParser] = {}

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        subs[name] = sp
        return sp

    sp = add("weight", cmd_weight, "sl_N weight of a chord diagram")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--gamma0", action="store_true", help="genus-0 part only, without the state sum")
    sp.add_argument("--state-cap", type=int, default=14, help="largest degree for the state sum")

    sp = add("expand", cmd_expand, "(N, h) expansion of the HOMFLY polynomial of a PD diagram")
    sp.add_argument("--pd", required=True)
    sp.add_argument("--order", type=int, default=8)

    sp = add("lifts", cmd_lifts, "count 1-colorable lifts to the p-fold cover")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--census", action="store_true", help="histogram of all p^(2n) lifts by genus")
    sp.add_argument("--budget", type=int, default=3**24, help="largest p^(2n) accepted")

    sp = add("question1", cmd_question1, "colorability of the intersection graph versus lift existence")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("-p", type=int, required=True)

    sp = add("mutate", cmd_mutate, "mutate a chord diagram along a share")
    sp.add_argument("--diagram", required=True)
    sp.add_argument("--share", required=True, help="I=a..b,J=c..d (inclusive leg ranges)")

    sp = add("flip", cmd_flip, "flip one class of share slots of a lift")
    sp.add_argument("--lift", required=True, help="JSON (inline or file): diagram, share, p, colors")
    sp.add_argument("--class", dest="class_index", type=int, default=1, help="1-based index among nonempty classes")
    sp.add_argument("--trace", action="store_true")
    sp.add_argument(
        "--start", choices=["least", "canonical"], default="least",
        help="read the class from its least slot with copy 1 as anchor, or from its canonical start",
    )

    sp = add("verify-prop-key", cmd_verify_prop_key, "equal lift counts for diagrams and their mutants")
    sp.add_argument("--max-degree", type=int, required=True, help="exhaustive instances up to this degree (0: none)")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--random", type=int, default=0, help="additional seeded random instances")
    sp.add_argument("--random-max-degree", type=int, default=8)
    sp.add_argument("--psi-max-degree", type=int, default=3, help="check the explicit bijection up to this degree")

    sp = add("homfly", cmd_homfly, "HOMFLY polynomial of a PD diagram")
    sp.add_argument("--pd", required=True)

    sp = add("gamma0", cmd_gamma0, "lowest coefficient polynomial of a PD diagram")
    sp.add_argument("--pd", required=True)

    sp = add("cable", cmd_cable, "(p, q)-cable diagram of a knot")
    sp.add_argument("--pd", required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)

    sp = add("verify-mutant", cmd_verify_mutant, "compare gamma^0 of the (p, q)-cables of two knots")
    sp.add_argument("--pd1", required=True)
    sp.add_argument("--pd2", required=True)
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)

    sp = add("census", cmd_census, "all chord diagrams up to a degree with genus and chromatic number")
    sp.add_argument("--max-degree", type=int, required=True)
    sp.add_argument("-p", type=int, default=0, help="also count lifts for this p")

    return parser, subs


def read_config(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if not s or s.startswith("["):
            continue
        if "=" not in s:
            raise UsageError(f"{path}:{n}: expected key = value")
        k, v = (t.strip() for t in s.split("=", 1))
        out[k.replace("-", "_")] = v.strip('"').strip("'")
    return out


def config_path(argv: Sequence[str]) -> str | None:
    for i, tok in enumerate(argv):
        if tok == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if tok.startswith("--config="):
            return tok.split("=", 1)[1]
    return None


def apply_config(path: str, argv: Sequence[str], subs: dict[str, argparse.ArgumentParser]) -> None:
    """Turn config entries into defaults of the chosen subcommand (command line still wins)."""
    name = next((t for t in argv if t in subs), None)
    if name is None:
        return
    actions = {a.dest: a for a in subs[name]._actions}
    for key, raw in read_config(path).items():
        act = actions.get(key)
        if act is None:
            raise UsageError(f"config key {key!r} is not an option of {name}")
        if isinstance(act, argparse._StoreTrueAction):
            value: object = raw.lower() in ("1", "true", "yes", "on")
        else:
            try:
                value = act.type(raw) if act.type else raw
            except ValueError:
                raise UsageError(f"config {key}={raw!r} is not a valid value") from None
            if act.choices and value not in act.choices:
                raise UsageError(f"config {key}={raw!r}: choose from {list(act.choices)}")
        act.default = value
        act.required = False


def resolve_budget(args: argparse.Namespace) -> None:
    if args.budget_secs is None and os.environ.get("GAMMA0_BUDGET_SECS"):
        args.budget_secs = float(os.environ["GAMMA0_BUDGET_SECS"])


def inputs_of(args: argparse.Namespace) -> dict[str, object]:
    skip = {"func", "report", "config"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subs = build_parser()
    cfg = config_path(argv)
    try:
        if cfg:
            apply_config(cfg, argv, subs)
    except (UsageError, OSError) as exc:
        print(f"gammazero: config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else EXIT_USAGE
    try:
        resolve_budget(args)
        convention(args.skein_sign)
        t = time.perf_counter()
        payload, code = args.func(args)
        wall = time.perf_counter() - t
    except UsageError as exc:
        print(f"gammazero {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ChordParseError, MutationError, PDError, SeriesError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"gammazero {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SkeinBudgetExceeded, LiftBudgetExceeded, WeightBudgetExceeded) as exc:
        print(f"gammazero {args.command}: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET

    report = {
        "command": args.command,
        "argv": argv,
        "inputs": inputs_of(args),
        "seed": args.seed,
        "budgets": {"skein_secs": args.budget_secs, "jobs": args.jobs},
        "wall_seconds": round(wall, 3),
        "version": __version__,
        "kernels": _kernels.BACKEND,
        "conventions": {"skein_sign": args.skein_sign, "four_term": "D1 - D2 - D3 + D4"},
        "payload": payload,
    }
    text = json.dumps(report, indent=2, default=str) + "\n"
    target = args.report or (None if args.command in TABLE_COMMANDS else args.out)
    if target:
        Path(target).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
