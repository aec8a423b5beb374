"""Command line front-end.

Each command builds a plain result structure of ints, strings, bools, lists
and dicts.  Text output is rendered from that structure; JSON output is the
same structure with every integer written as a decimal string, so values of
any size survive 64-bit consumers.

Exit codes: 0 success, 2 invalid input, 3 command inapplicable (smooth
input, unsupported dimension), 4 invariant failure or iteration cap hit.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable, Optional

from . import bounds as B
from . import curve as C
from . import toric as T
from .errors import (AlreadySmooth, InvalidInput, InvariantFailure,
                     MalformedInput, ToricNashError, UnsupportedDimension)
from .semigroup import CurveGenerators, make

EXIT_OK, EXIT_INVALID, EXIT_INAPPLICABLE, EXIT_INVARIANT = 0, 2, 3, 4
STATUS = {EXIT_OK: "ok", EXIT_INVALID: "invalid_input",
          EXIT_INAPPLICABLE: "inapplicable", EXIT_INVARIANT: "invariant_failure"}

_INT = r"[+-]?\d+"
_CURVE_RE = re.compile(rf"{_INT}(,{_INT})*")
_TUPLE_RE = re.compile(rf"\(({_INT}(,{_INT})*)\)")
_VECTORS_RE = re.compile(rf"\({_INT}(,{_INT})*\)(,\({_INT}(,{_INT})*\))*")


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, (AlreadySmooth, UnsupportedDimension)):
        return EXIT_INAPPLICABLE
    if isinstance(exc, InvalidInput):
        return EXIT_INVALID
    return EXIT_INVARIANT


# ---------------------------------------------------------------- parsing

def _squash(text: str) -> str:
    return "".join(text.split())


def parse_curve(text: str) -> CurveGenerators:
    """``"12, 28, 33"`` -> ``{12, 28, 33}``; order and repeats are ignored."""
    s = _squash(text)
    if not s:
        raise MalformedInput("empty input")
    if not _CURVE_RE.fullmatch(s):
        raise MalformedInput(f"expected comma-separated integers, got {text.strip()!r}")
    return make(int(t) for t in s.split(","))


def parse_vectors(text: str) -> tuple[tuple[int, ...], ...]:
    """``"(1,0),(1,1)"`` -> vectors; bare integers give 1-dimensional vectors."""
    s = _squash(text)
    if not s:
        raise MalformedInput("empty input")
    if _CURVE_RE.fullmatch(s):
        return tuple((int(t),) for t in s.split(","))
    if not _VECTORS_RE.fullmatch(s):
        raise MalformedInput(f"expected parenthesized integer tuples, got {text.strip()!r}")
    return tuple(tuple(int(t) for t in m.group(1).split(","))
                 for m in _TUPLE_RE.finditer(s))


def _is_vector_text(text: str) -> bool:
    return "(" in text


# ---------------------------------------------------------------- results

def _set(A: CurveGenerators) -> list[int]:
    return list(A.elements)


def _vecs(vectors) -> list[list[int]]:
    return [list(v) for v in vectors]


def do_resolve(A: CurveGenerators, opts) -> dict:
    t = C.resolve(A, cap=opts.cap)
    return {
        "steps": [_set(s) for s in t.steps],
        "multiplicity": list(t.per_step_multiplicity),
        "embedding_dim": list(t.per_step_embedding_dim),
        "eta": t.eta,
        "final": _set(t.final),
    }


def do_summary(A: CurveGenerators, opts) -> dict:
    s = C.division_summary(A)
    eta_direct = None
    if s.eta <= opts.cap:
        eta_direct = C.resolve(A, cap=opts.cap).eta
        if eta_direct != s.eta:
            raise InvariantFailure(f"sum of quotients {s.eta} != eta {eta_direct} for {A}")
    return {
        "rows": [{"a1": r.a1, "a2": r.a2, "q": r.q, "r": r.r, "set_after": _set(r.set_after)}
                 for r in s.rows],
        "delta": s.delta,
        "sum_q": s.eta,
        "eta_direct": eta_direct,
    }


def do_bounds(A: CurveGenerators, opts) -> dict:
    r = B.bound_report(A)
    return {
        "a1": r.a1, "a2": r.a2,
        "v": r.v_value,
        "eta_bound": r.eta_bound,
        "fib_lower_a1": r.fib_lower_a1,
        "fib_lower_a2": r.fib_lower_a2,
        "fib_lower_holds": r.fib_lower_holds,
        "delta_fib_bound": r.delta_fib_bound,
        "delta_digit_bound": r.delta_digit_bound,
        "eta": r.eta,
        "delta": r.delta,
    }


def _node(node: T.ChartNode) -> dict:
    return {
        "pivot": None if node.pivot is None else [i + 1 for i in node.pivot],
        "generators": _vecs(node.config.vectors),
        "status": node.status,
        "children": [_node(c) for c in node.children],
    }


def do_charts(config: T.LatticeConfig, opts) -> dict:
    charts = [{
        "pivot": [i + 1 for i in c.pivot],
        "det": T.pivot_det(config, c.pivot),
        "retained": c.retained,
        "generators": _vecs(c.generators),
    } for c in T.all_charts(config)]
    out = {"charts": charts, "tree": None, "truncated": False}
    depth = opts.depth if opts.depth is not None else 8
    if depth > 0:
        if config.dim > 2:
            if opts.depth is not None:
                raise UnsupportedDimension(f"chart iteration needs d <= 2, got d={config.dim}")
            return out
        tree = T.iterate_multidim(config, depth)
        out["tree"] = _node(tree.root)
        out["truncated"] = tree.truncated
    return out


def do_ideal(config: T.LatticeConfig, opts) -> dict:
    rels = T.kernel_binomials(config, opts.deg)
    for rel in rels:
        if not T.verify_binomial(config, rel):
            raise InvariantFailure(f"{rel.render()} does not vanish on {config}")
    return {
        "log_jacobian": T.log_jacobian(config).render(),
        "degree_bound": opts.deg,
        "binomials": [rel.render() for rel in rels],
    }


def _curve_verdicts(A: CurveGenerators, opts) -> dict:
    if A.is_smooth:
        return {"smooth": True}
    t = C.resolve(A, cap=opts.cap)
    s = C.division_summary(A)
    r = B.bound_report(A)
    rep = C.trace_invariants(t)
    steps = t.steps
    v_drop = all(B.v_of(steps[k + 1]) <= B.v_of(steps[k]) - 2
                 for k in range(len(steps) - 1) if not steps[k + 1].is_smooth)
    drop = next(k for k in range(1, len(steps)) if steps[k].min < A.min)
    return {
        "min_monotone": rep.multiplicity_nonincreasing,
        "min_drop_step": drop == C.min_drop_steps(A),
        "v_drop": v_drop,
        "eta_bound": t.eta <= r.eta_bound,
        "fib_lower": r.fib_lower_holds,
        "delta_fib": s.delta < r.delta_fib_bound,
        "delta_digits": s.delta < r.delta_digit_bound,
        "sumq_eq_eta": s.eta == t.eta,
        "delta_le_eta": s.delta <= t.eta,
        "emb_monotone": rep.embedding_nonincreasing,
    }


def _vector_verdicts(config: T.LatticeConfig, opts) -> dict:
    out = {
        "separator_positive": all(config.grade(v) > 0 for v in config.vectors),
        "binomials_vanish": all(T.verify_binomial(config, rel)
                                for rel in T.kernel_binomials(config, opts.deg)),
        "log_jacobian_nonempty": bool(T.log_jacobian(config).monomials),
    }
    if config.dim == 1:
        A = T.as_curve(config)
        if not A.is_smooth and len(A) > 1:
            step = C.nash_step(A)
            retained = [T.as_curve(c.config) for c in T.all_charts(config) if c.retained]
            out["chart_is_nash_step"] = retained == [step]
    return out


def do_check_line(text: str, opts) -> dict:
    if _is_vector_text(text):
        config = T.validate(parse_vectors(text))
        return {"input": _vecs(config.vectors), "verdicts": _vector_verdicts(config, opts)}
    A = parse_curve(text)
    return {"input": _set(A), "verdicts": _curve_verdicts(A, opts)}


# ---------------------------------------------------------------- rendering

def to_json_value(x):
    """Integers become decimal strings, recursively; bools and None stay."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, dict):
        return {k: to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    return x


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _fmt_set(xs) -> str:
    return "{" + ", ".join(map(str, xs)) + "}"


def _fmt_vecs(vs) -> str:
    return "{" + ", ".join(T.format_vector(tuple(v)) for v in vs) + "}"


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    return ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
            for r in [header] + rows]


def text_resolve(res: dict) -> list[str]:
    rows = [[str(k), _fmt_set(s), str(m), str(e)]
            for k, (s, m, e) in enumerate(zip(res["steps"], res["multiplicity"],
                                               res["embedding_dim"]))]
    return _table(["step", "set", "mult", "emb"], rows) + [
        f"eta: {res['eta']}", f"final: {_fmt_set(res['final'])}"]


def text_summary(res: dict) -> list[str]:
    rows = [[str(i), str(r["a1"]), str(r["a2"]), str(r["q"]), str(r["r"]),
             _fmt_set(r["set_after"])] for i, r in enumerate(res["rows"], 1)]
    direct = res["eta_direct"]
    tail = f"sum q: {res['sum_q']} = eta: " + (
        f"{direct} (checked by direct iteration)" if direct is not None
        else f"{res['sum_q']} (direct iteration skipped, above --cap)")
    return _table(["row", "a1", "a2", "q", "r", "set after"], rows) + [
        f"delta: {res['delta']}", tail]


def text_bounds(res: dict) -> list[str]:
    holds = "holds" if res["fib_lower_holds"] else "FAILS"
    return [
        f"v: {res['v']}",
        f"eta bound floor(v/2): {res['eta_bound']}",
        f"eta: {res['eta']}",
        f"fibonacci lower bound: a1 = {res['a1']} >= {res['fib_lower_a1']}, "
        f"a2 = {res['a2']} >= {res['fib_lower_a2']}: {holds}",
        f"delta bound (fibonacci): delta < {res['delta_fib_bound']}",
        f"delta bound (digits): delta < {res['delta_digit_bound']}",
        f"delta: {res['delta']}",
    ]


def _text_tree(node: dict, indent: int, out: list[str]):
    label = "root" if node["pivot"] is None else "pivot " + T.format_vector(tuple(node["pivot"]))
    out.append(f"{'  ' * indent}{label}: {_fmt_vecs(node['generators'])} [{node['status']}]")
    for c in node["children"]:
        _text_tree(c, indent + 1, out)


def text_charts(res: dict) -> list[str]:
    out = []
    for c in res["charts"]:
        flag = "retained" if c["retained"] else "dropped"
        out.append(f"pivot {T.format_vector(tuple(c['pivot']))}  det {c['det']}  {flag}: "
                   f"{_fmt_vecs(c['generators'])}")
    if res["tree"] is not None:
        out.append("tree:" + (" (truncated)" if res["truncated"] else ""))
        _text_tree(res["tree"], 1, out)
    return out


def text_ideal(res: dict) -> list[str]:
    out = ["log jacobian: " + ", ".join(res["log_jacobian"])]
    out.append(f"binomials (degree <= {res['degree_bound']}):")
    out.extend("  " + b for b in res["binomials"])
    if not res["binomials"]:
        out.append("  none")
    return out


def text_check(res: dict) -> list[str]:
    out = []
    for item in res["items"]:
        shown = _fmt_vecs(item["input"]) if item["input"] and isinstance(item["input"][0], list) \
            else _fmt_set(item["input"])
        bad = [k for k, v in item["verdicts"].items() if v is False]
        body = " ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in item["verdicts"].items()
                        if k != "smooth")
        if item["verdicts"].get("smooth"):
            body = "smooth, nothing to check"
        out.append(f"line {item['line']}: {shown} {'FAIL' if bad else 'ok'}  {body}")
    out.append(f"{res['checks']} checks on {len(res['items'])} inputs, {res['failures']} failed")
    return out


# ---------------------------------------------------------------- driver

CURVE_COMMANDS: dict[str, tuple[Callable, Callable]] = {
    "resolve": (do_resolve, text_resolve),
    "summary": (do_summary, text_summary),
    "bounds": (do_bounds, text_bounds),
}
VECTOR_COMMANDS: dict[str, tuple[Callable, Callable]] = {
    "charts": (do_charts, text_charts),
    "ideal": (do_ideal, text_ideal),
}


class UsageError(InvalidInput):
    code = "UsageError"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="toricnash",
                description="Iterated Nash modification of toric curves and charts of toric varieties.")
    p.add_argument("command", choices=["resolve", "summary", "bounds", "charts", "ideal", "check"])
    p.add_argument("input", nargs="?",
                   help="curve set like 12,28,33 or vectors like (1,0),(1,1); '-' reads stdin")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--deg", type=_nonneg, default=4, help="degree bound for binomials (default 4)")
    p.add_argument("--depth", type=_nonneg, default=None,
                   help="depth cap for chart iteration (default 8, 0 disables)")
    p.add_argument("--cap", type=_nonneg, default=10**6, help="iteration cap (default 10^6)")
    p.add_argument("--batch", metavar="PATH", help="one input per line; '-' reads stdin")
    return p


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


class _LineError(Exception):
    def __init__(self, line: int, exc: ToricNashError):
        self.line, self.exc = line, exc


def _run_one(command: str, text: str, opts):
    if command == "check":
        return None, do_check_line(text, opts)
    if command in CURVE_COMMANDS:
        if _is_vector_text(text):
            raise MalformedInput(f"{command} takes a curve set, got vectors {text.strip()!r}")
        A = parse_curve(text)
        return _set(A), CURVE_COMMANDS[command][0](A, opts)
    config = T.validate(parse_vectors(text))
    return _vecs(config.vectors), VECTOR_COMMANDS[command][0](config, opts)


def _check_report(items: list[dict]) -> dict:
    checks = sum(len([v for v in it["verdicts"].values() if isinstance(v, bool)])
                 - (1 if "smooth" in it["verdicts"] else 0) for it in items)
    failures = sum(1 for it in items for v in it["verdicts"].values() if v is False)
    return {"items": items, "checks": checks, "failures": failures}


def execute(argv: list[str], stdin=None) -> tuple[int, str, str]:
    """Run one invocation and return ``(exit code, stdout, stderr)``."""
    stdin = sys.stdin if stdin is None else stdin
    try:
        opts = build_parser().parse_args(argv)
    except UsageError as exc:
        return EXIT_INVALID, "", f"error: {exc.code}: {exc}\n"
    cmd = opts.command
    # for check the positional argument is the batch path
    if (opts.input is None) == (opts.batch is None):
        return _fail(cmd, None, opts, MalformedInput(
            "give exactly one input source: an inline argument or --batch PATH"))
    batch = opts.batch is not None or cmd == "check"
    try:
        if batch:
            source = opts.batch if opts.batch is not None else opts.input
            lines = _lines(_read(source, stdin))
            results, inputs = [], []
            for no, text in lines:
                try:
                    echo, res = _run_one(cmd, text, opts)
                except ToricNashError as exc:
                    raise _LineError(no, exc) from None
                if cmd == "check":
                    res = {"line": no, **res}
                    inputs.append(res["input"])
                else:
                    inputs.append(echo)
                    res = {"line": no, "input": echo, "result": res}
                results.append(res)
            result = _check_report(results) if cmd == "check" else {"items": results}
            echo = inputs
        else:
            text = _read("-", stdin) if opts.input == "-" else opts.input
            echo, result = _run_one(cmd, text, opts)
    except _LineError as err:
        return _fail(cmd, None, opts, err.exc, line=err.line)
    except ToricNashError as exc:
        return _fail(cmd, opts.input, opts, exc)
    code = EXIT_OK
    err = ""
    if cmd == "check" and result["failures"]:
        code = EXIT_INVARIANT
        err = f"error: InvariantFailure: {result['failures']} of {result['checks']} checks failed\n"
    doc = {"command": cmd, "input": echo, "result": result, "status": STATUS[code]}
    return code, _render(doc, opts, batch), err


def _render(doc: dict, opts, batch: bool) -> str:
    if opts.json:
        return dump_json(to_json_value(doc))
    cmd = doc["command"]
    if cmd == "check":
        lines = text_check(doc["result"])
    else:
        render = {**CURVE_COMMANDS, **VECTOR_COMMANDS}[cmd][1]
        fmt = _fmt_set if cmd in CURVE_COMMANDS else _fmt_vecs
        if batch:
            lines = []
            for item in doc["result"]["items"]:
                lines.append(f"line {item['line']}: {fmt(item['input'])}")
                lines.extend("  " + s for s in render(item["result"]))
        else:
            lines = [f"input: {fmt(doc['input'])}"] + render(doc["result"])
    return "\n".join(lines) + "\n"


def _fail(cmd: str, echo, opts, exc: ToricNashError, line: Optional[int] = None):
    code = exit_code(exc)
    where = f"line {line}: " if line is not None else ""
    msg = f"{where}{exc}".replace("\n", " ")
    err = f"error: {exc.code}: {msg}\n"
    out = ""
    if opts.json:
        result = {"error": exc.code, "message": msg}
        if line is not None:
            result["line"] = line
        out = dump_json(to_json_value({"command": cmd, "input": echo, "result": result,
                                       "status": STATUS[code]}))
    return code, out, err


def main(argv: Optional[list[str]] = None) -> int:
    code, out, err = execute(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
