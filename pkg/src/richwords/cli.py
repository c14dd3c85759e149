"""Command-line front end: ``richwords <command> ...``.

Exit codes: 0 success, 2 usage or parse error, 3 consistency failure or
oracle divergence.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass, field

from . import __version__, morphisms, oracle, sweeps
from .balance import (
    WRFamilySpec,
    fraenkel_word,
    frequencies,
    is_balanced,
    is_periodic_balanced,
    matches_wr_family,
    wr_family_word,
)
from .errors import ConsistencyError
from .palindex import PalindromeIndex
from .periodic import (
    INFINITE,
    PeriodicVerdict,
    balanced_conjugate_factorization,
    is_product_of_two_palindromes,
    periodic_defective_positions,
    periodic_verdict,
)
from .richness import (
    RichnessReport,
    analysis_window,
    complete_returns,
    richness_report,
    weak_richness,
    iterated_palindromic_closure,
)
from .words import (
    FIBONACCI,
    THUE_MORSE,
    EventuallyPeriodic,
    MorphicFixedPoint,
    Morphism,
    Periodic,
    check_word,
    is_spec_text,
    parse_spec,
)


# -- analysis report --------------------------------------------------------

@dataclass
class AnalysisReport:
    input: str
    window: int | None  # length of the analyzed prefix when the input is a spec
    richness: RichnessReport
    weakly_rich: bool
    weak_witness: str | None
    balanced: bool
    balance_witness: list[str] | None  # [u, v, letter]
    complexity: list[tuple[int, int, int]] = field(default_factory=list)  # (n, P(n), C(n))
    periodic: PeriodicVerdict | None = None
    version: str = __version__

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "input": self.input,
            "window": self.window,
            "richness": self.richness.to_json(),
            "weakly_rich": self.weakly_rich,
            "weak_witness": self.weak_witness,
            "balanced": self.balanced,
            "balance_witness": self.balance_witness,
            "complexity": [list(row) for row in self.complexity],
            "periodic": None if self.periodic is None else self.periodic.to_json(),
        }

    @classmethod
    def from_json(cls, d: dict) -> AnalysisReport:
        per = d["periodic"]
        if per is not None:
            per = PeriodicVerdict(
                per["word"], per["primitive_root"], per["power_rich"], per["power_almost_rich"],
                INFINITE if per["defect"] == "infinite" else per["defect"],
            )
        return cls(
            input=d["input"],
            window=d["window"],
            richness=RichnessReport.from_json(d["richness"]),
            weakly_rich=d["weakly_rich"],
            weak_witness=d["weak_witness"],
            balanced=d["balanced"],
            balance_witness=d["balance_witness"],
            complexity=[tuple(row) for row in d["complexity"]],
            periodic=per,
            version=d["version"],
        )


def analyze(text: str, window: int | None = None, complexity: int = 0,
            with_ups: bool = False, check_oracle: bool = False) -> AnalysisReport:
    """Full report on a word, or on the analysis window of an infinite-word spec."""
    spec = parse_spec(text) if is_spec_text(text) else None
    if spec is None:
        w = check_word(text)
        used = None
    else:
        w = analysis_window(spec, window)
        used = len(w)
    rep = richness_report(w, with_ups=with_ups)
    weak = weak_richness(w)
    if isinstance(spec, Periodic):
        bal = is_periodic_balanced(spec.period)
    else:
        bal = is_balanced(w)
    per = periodic_verdict(spec.period) if isinstance(spec, (Periodic, EventuallyPeriodic)) else None
    if isinstance(spec, Periodic) and len(w) >= 2 * len(spec.period) and per.power_rich != rep.is_rich:
        raise ConsistencyError("window richness disagrees with the periodic verdict")
    idx = PalindromeIndex(w)
    table = [(r.n, r.palindromes, r.factors) for r in idx.complexity_table(complexity)] if complexity else []
    report = AnalysisReport(
        input=text,
        window=used,
        richness=rep,
        weakly_rich=weak.weakly_rich,
        weak_witness=None if weak.witness is None else weak.witness.return_word,
        balanced=bal.balanced,
        balance_witness=None if bal.witness is None else [bal.witness.u, bal.witness.v, bal.witness.letter],
        complexity=table,
        periodic=per,
    )
    if not (rep.is_rich == (rep.defect == 0) == (not rep.defective_positions)):
        raise ConsistencyError("richness, defect and defective positions disagree")
    if check_oracle:
        oracle_check(w, report, periodic_balance=isinstance(spec, Periodic))
    return report


def oracle_check(w: str, report: AnalysisReport, periodic_balance: bool = False) -> None:
    """Recompute every reported quantity by brute force; raise on divergence."""
    rep = report.richness

    def agree(what, fast, slow):
        if fast != slow:
            raise ConsistencyError(f"oracle divergence on {what}: fast={fast!r} oracle={slow!r}")

    pals = oracle.naive_palindrome_set(w)
    agree("palindrome_count", rep.palindrome_count, len(pals))
    agree("defect", rep.defect, oracle.naive_defect(w))
    agree("is_rich", rep.is_rich, oracle.naive_is_rich(w))
    agree("defective_positions", rep.defective_positions, oracle.naive_defective_positions(w))
    agree("oddities", {(o.pair, o.incriminated_palindrome) for o in rep.oddities},
          oracle.naive_oddity_pairs(w))
    slow_witness = oracle.naive_weak_richness_witness(w)
    agree("weakly_rich", report.weakly_rich, slow_witness is None)
    if not periodic_balance:
        agree("balanced", report.balanced, oracle.naive_balanced(w))
    for n, p, c in report.complexity:
        agree(f"complexity({n})", (p, c), oracle.naive_complexity(w, n))


# -- text rendering ---------------------------------------------------------

def _render_analysis(r: AnalysisReport) -> str:
    rep = r.richness
    lines = [f"input: {r.input}"]
    if r.window is not None:
        lines.append(f"window: {r.window}")
    lines += [
        f"length: {rep.word_length}",
        f"palindromes (with empty word): {rep.palindrome_count}",
        f"rich: {'yes' if rep.is_rich else 'no'}",
        f"defect: {rep.defect}",
    ]
    if rep.defective_positions:
        lines.append("defective positions: " + " ".join(map(str, rep.defective_positions)))
    if rep.oddities:
        lines.append(f"oddities: {len(rep.oddities)}")
        for o in rep.oddities:
            lines.append(f"  {{{o.representative}, {o.representative[::-1]}}} "
                         f"palindrome {o.incriminated_palindrome} at {o.end_position}")
    else:
        lines.append("oddities: 0")
    wr = "yes" if r.weakly_rich else f"no (witness {r.weak_witness})"
    lines.append(f"weakly rich: {wr}")
    if r.balanced:
        lines.append("balanced: yes")
    else:
        u, v, x = r.balance_witness
        lines.append(f"balanced: no ({u} vs {v} on {x})")
    if rep.ups_per_prefix is not None:
        lines.append("ups: " + " ".join("-" if u is None else u for u in rep.ups_per_prefix))
    if r.complexity:
        lines.append("n  P(n)  C(n)")
        lines += [f"{n}  {p}  {c}" for n, p, c in r.complexity]
    if r.periodic is not None:
        v = r.periodic
        d = "infinite" if v.defect == INFINITE else v.defect
        lines.append(f"periodic: root {v.primitive_root}, power rich {v.power_rich}, "
                     f"almost rich {v.power_almost_rich}, defect {d}")
    return "\n".join(lines)


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=False, default=_json_default))
    else:
        print(text)


def _json_default(o):
    if isinstance(o, float) and math.isinf(o):
        return "infinite"
    raise TypeError(f"not serializable: {type(o).__name__}")


def _read_arg(s: str) -> str:
    """A positional word or spec; ``@path`` reads it from a file."""
    if s.startswith("@"):
        with open(s[1:], encoding="utf-8") as fh:
            return "".join(fh.read().split())
    return s


# -- commands ---------------------------------------------------------------

def cmd_analyze(args) -> int:
    text = _read_arg(args.input)
    r = analyze(text, args.window, args.complexity, args.ups, args.oracle)
    _emit(args, r.to_json(), _render_analysis(r))
    return 0


_FAMILY_RE = re.compile(r"family([12])\(k=(\d+),(n|j)=(\d+)\)")


def parse_family(text: str) -> WRFamilySpec:
    m = _FAMILY_RE.fullmatch(text.replace(" ", ""))
    if not m:
        raise ValueError(f"bad family spec {text!r}; use family1(k=3,n=1) or family2(k=4,j=2)")
    fam, k, key, val = int(m[1]), int(m[2]), m[3], int(m[4])
    if (fam == 1) != (key == "n"):
        raise ValueError("family1 takes n, family2 takes j")
    return WRFamilySpec(fam, k, n=val if key == "n" else 0, j=val if key == "j" else 0)


def generate(kind: str, params: list[str]) -> str:
    def need(k):
        if len(params) != k:
            raise ValueError(f"generate {kind} takes {k} argument(s)")

    def length(s):
        n = int(s)
        if n < 0:
            raise ValueError("negative length")
        return n

    if kind == "fibonacci":
        need(1)
        return FIBONACCI.prefix(length(params[0]))
    if kind == "thue-morse":
        need(1)
        return THUE_MORSE.prefix(length(params[0]))
    if kind == "fraenkel":
        need(1)
        return fraenkel_word(int(params[0]))
    if kind == "episturmian":
        need(2)
        directive, n = check_word(params[0]), length(params[1])
        if not directive:
            raise ValueError("empty directive")
        out = ""
        d = directive
        while len(out) < n:
            out = iterated_palindromic_closure(d)
            d += directive
        return out[:n]
    if kind == "wr-family":
        need(2)
        return Periodic(wr_family_word(parse_family(params[0]))).prefix(length(params[1]))
    if kind == "fixed-point":
        need(3)
        m = Morphism.parse(params[0])
        return MorphicFixedPoint(m, params[1]).prefix(length(params[2]))
    raise ValueError(f"unknown kind {kind!r}")


def cmd_generate(args) -> int:
    w = generate(args.kind, args.params)
    _emit(args, {"version": __version__, "kind": args.kind, "params": args.params, "word": w}, w)
    return 0


def cmd_enumerate(args) -> int:
    rest = list(args.params)
    pred = args.predicate
    theorem = None
    if pred == "counterexample-hunt":
        if not rest:
            raise ValueError("counterexample-hunt needs a theorem id")
        theorem = rest.pop(0)
    if len(rest) != 2:
        raise ValueError("expected <alphabet_size> <max_len>")
    k, n = int(rest[0]), int(rest[1])
    if pred == "rich":
        counts = sweeps.count_rich(k, n, args.jobs)
        data = {"predicate": pred, "alphabet_size": k, "max_len": n,
                "counts": {str(i): c for i, c in sorted(counts.items())}}
        text = "\n".join(f"{i} {c}" for i, c in sorted(counts.items()))
    elif pred == "weakly-rich-period":
        counts = sweeps.count_weakly_rich_periods(k, n, args.jobs)
        data = {"predicate": pred, "alphabet_size": k, "max_len": n,
                "counts": {str(i): c for i, c in sorted(counts.items())}}
        text = "\n".join(f"{i} {c}" for i, c in sorted(counts.items()))
    elif pred == "balanced-wr":
        hits = sweeps.balanced_wr_periods(k, n, args.jobs)
        data = {"predicate": pred, "alphabet_size": k, "max_len": n,
                "hits": [{"period": h.period, "family": h.family} for h in hits],
                "all_matched": all(h.family is not None for h in hits)}
        text = "\n".join(f"{h.period} {h.family or 'NO MATCH'}" for h in hits) or "no hits"
    elif pred == "counterexample-hunt":
        res = sweeps.hunt(theorem, k, n, args.jobs)
        data = res.to_json()
        if res.violation is None:
            text = f"none found ({res.checked} checked)"
        else:
            text = f"violation: {res.violation[0]}: {res.violation[1]}"
    else:
        raise ValueError(f"unknown predicate {pred!r}")
    data["version"] = __version__
    _emit(args, data, text)
    return 0


def _certificate_json(m: Morphism, cert) -> dict:
    out = cert.to_json()
    chk = morphisms.special_check(m, cert)
    out["standard"] = cert.shift == 0
    out["special"] = chk.special
    out["special_bound"] = chk.bound
    return out


def cmd_morphism(args) -> int:
    m = Morphism.parse(args.morphism)
    sub = args.sub
    p = args.params
    if sub == "apply":
        if len(p) != 1:
            raise ValueError("morphism apply takes one word")
        w = m(check_word(_read_arg(p[0])))
        _emit(args, {"version": __version__, "image": w}, w)
    elif sub == "iterate":
        if len(p) != 2:
            raise ValueError("morphism iterate takes <letter> <steps>")
        w = m.iterate(p[0], int(p[1]))
        _emit(args, {"version": __version__, "word": w}, w)
    elif sub == "classify-p":
        cert = morphisms.is_class_P(m)
        if cert is None:
            _emit(args, {"version": __version__, "class_p": None}, "not class P")
        else:
            data = _certificate_json(m, cert)
            kind = "standard P" if cert.shift == 0 else f"class P (shift {cert.shift})"
            qs = ", ".join(f"{x}: {json.dumps(v)}" for x, v in data["q"].items())
            text = (f"{kind}, p={cert.p!r}\nq: {qs}\n"
                    f"special: {data['special']} (bound {data['special_bound']})")
            data["version"] = __version__
            _emit(args, data, text)
    elif sub == "special-test":
        if len(p) != 1:
            raise ValueError("morphism special-test takes one infinite-word spec")
        cert = _standard_cert(m)
        ok = morphisms.special_rich_test(m, cert, parse_spec(_read_arg(p[0])), args.window)
        _emit(args, {"version": __version__, "rich": ok}, "rich" if ok else "not rich")
    elif sub == "fixed-point-class":
        if len(p) != 1:
            raise ValueError("morphism fixed-point-class takes a seed letter")
        res = morphisms.special_fixed_point_class(m, _standard_cert(m), p[0])
        _emit(args, {"version": __version__, "class": res.verdict, "prefix": res.prefix,
                     "image": res.image}, res.verdict)
    else:
        raise ValueError(f"unknown morphism subcommand {sub!r}")
    return 0


def _standard_cert(m: Morphism):
    for cert in morphisms.class_p_certificates(m):
        if cert.shift == 0 and morphisms.is_special(m, cert):
            return cert
    raise ValueError("morphism is not special standard P")


def cmd_periodic(args) -> int:
    w = check_word(_read_arg(args.word))
    v = periodic_verdict(w)
    data = v.to_json()
    data["defective_positions"] = periodic_defective_positions(w)
    fact = None
    if is_product_of_two_palindromes(v.primitive_root):
        f = balanced_conjugate_factorization(v.primitive_root)
        fact = [f.p, f.q]
    data["balanced_factorization"] = fact
    data["version"] = __version__
    d = "infinite" if v.defect == INFINITE else v.defect
    text = (f"root: {v.primitive_root}\npower rich: {v.power_rich}\n"
            f"almost rich: {v.power_almost_rich}\ndefect: {d}")
    if data["defective_positions"]:
        text += "\ndefective positions: " + " ".join(map(str, data["defective_positions"]))
    _emit(args, data, text)
    return 0


def cmd_balance(args) -> int:
    text = _read_arg(args.input)
    if is_spec_text(text):
        spec = parse_spec(text)
        if not isinstance(spec, Periodic):
            raise ValueError("balance takes a word or a periodic: spec")
        res = is_periodic_balanced(spec.period)
        freqs = {x: str(f) for x, f in frequencies(spec.period).items()}
        m = matches_wr_family(spec.period)
        family = None if m is None else {"family": str(m.spec), "permutation": m.permutation,
                                         "shift": m.shift}
    else:
        res = is_balanced(check_word(text))
        freqs, family = None, None
    w = res.witness
    data = {"version": __version__, "input": text, "balanced": res.balanced,
            "witness": None if w is None else {"u": w.u, "v": w.v, "letter": w.letter},
            "frequencies": freqs, "wr_family": family}
    out = "balanced" if res.balanced else f"not balanced ({w.u} vs {w.v} on {w.letter})"
    if freqs:
        out += "\nfrequencies: " + " ".join(f"{x}={f}" for x, f in freqs.items())
    if family:
        out += f"\nmatches {family['family']}"
    _emit(args, data, out)
    return 0


def cmd_returns(args) -> int:
    text = _read_arg(args.input)
    if is_spec_text(text):
        w = analysis_window(parse_spec(text), args.window)
    else:
        w = check_word(text)
    u = check_word(args.factor)
    if not u:
        raise ValueError("empty factor")
    rets = complete_returns(w, u)
    data = {"version": __version__, "factor": u, "window": len(w),
            "returns": [{"word": r.return_word, "start": r.start,
                         "palindrome": r.return_word == r.return_word[::-1]} for r in rets]}
    text_out = "\n".join(f"{r.start} {r.return_word}" for r in rets) or "no complete returns"
    _emit(args, data, text_out)
    return 0


# -- argument parsing -------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--oracle", action="store_true", default=d(False),
                   help="cross-check with brute-force definitions")
    p.add_argument("--window", type=int, default=d(None), help="analysis window length for specs")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for enumerate")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="richwords", description="Palindromic richness toolkit.")
    parser.add_argument("--version", action="version", version=f"richwords {__version__}")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    p = add("analyze", cmd_analyze, "richness, defect, oddities, balance of a word or spec")
    p.add_argument("input", help="word, spec (periodic:, evper:, morphic:) or @file")
    p.add_argument("--complexity", type=int, default=0, metavar="N", help="table of P(n), C(n) up to N")
    p.add_argument("--ups", action="store_true", help="list the ups of every prefix")

    p = add("generate", cmd_generate, "generate words")
    p.add_argument("kind", choices=["fibonacci", "thue-morse", "fraenkel", "episturmian",
                                    "wr-family", "fixed-point"])
    p.add_argument("params", nargs="*")

    p = add("enumerate", cmd_enumerate, "exhaustive counts and counterexample hunts")
    p.add_argument("predicate", choices=["rich", "weakly-rich-period", "balanced-wr",
                                         "counterexample-hunt"])
    p.add_argument("params", nargs="+", help="[theorem-id] alphabet_size max_len")

    p = add("morphism", cmd_morphism, "apply and classify morphisms")
    p.add_argument("sub", choices=["apply", "iterate", "classify-p", "special-test",
                                   "fixed-point-class"])
    p.add_argument("morphism", help="images, e.g. a=ab,b=a")
    p.add_argument("params", nargs="*")

    p = add("periodic", cmd_periodic, "richness and defect of w^ω")
    p.add_argument("word")

    p = add("balance", cmd_balance, "balance of a word or a periodic spec")
    p.add_argument("input")

    p = add("returns", cmd_returns, "complete returns to a factor")
    p.add_argument("input")
    p.add_argument("factor")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.window is not None and args.window < 1:
        parser.error("--window must be >= 1")
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except ConsistencyError as e:
        print(f"richwords: consistency error: {e}", file=sys.stderr)
        return 3
    except (ValueError, RuntimeError, OSError) as e:
        print(f"richwords: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
