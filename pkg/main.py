"""Command-line front door of the almost-Kähler Hodge engine."""
import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

# Add the repository root so ``src`` imports resolve from any cwd
sys.path.insert(0, str(Path(__file__).parent))

from src.almost_kahler import AXIOMS, AKManifold
from src.catalog_io import (
    builtin,
    builtin_manifest,
    list_builtins,
    manifest_to_manifold,
    read_manifest,
    render_report,
    render_table,
)
from src.exact_algebra import smallest_positive
from src.exterior import FormValue
from src.harmonic_analysis import (
    FAMILIES,
    GAP_OPERATORS,
    build_report,
    check_degree,
    decompose_form,
    hlc_audit,
    laplacian_roots,
    membership_constant,
)
from src.operator_calc import identity_suite
from src.shared.config import Config, get_config, load_config, use_config
from src.shared.errors import (
    ConfigurationError,
    ConsistencyError,
    EngineError,
    InputOutputError,
    ManifestError,
    ShapeMismatchError,
    ValidationError,
)
from src.shared.logger import log, setup_logger

COMMANDS = ("validate", "report", "identities", "spectrum", "hlc", "constants", "decompose", "list")
OPERATOR_CHOICES = ("d", "dLambda", "dbar", "mu", "dbar-mu")


class HodgeEngine:
    """Runs one command against one manifold and returns the text to print."""

    def __init__(self, config: Config, output_format: str = None):
        self.config = config
        self.format = output_format or config.output.format
        log.debug(f"Hodge engine ready (format {self.format}, eig width {config.precision.eig_width})")

    @property
    def seed(self) -> int:
        return self.config.audit.seed

    @property
    def width(self):
        return self.config.precision.width

    def _emit(self, data: Dict, title: str, rows: Sequence[Dict], notes: Sequence[str] = ()) -> str:
        if self.format == "json":
            return json.dumps(data, indent=2, ensure_ascii=False)
        return render_table(title, rows, notes)

    def load(self, builtin_name: str = None, path: str = None) -> AKManifold:
        if builtin_name is not None:
            m = builtin(builtin_name)
        else:
            m = manifest_to_manifold(read_manifest(path))
        log.info(f"Loaded {m.name} (dimension {m.dimension})")
        return m

    def run_list(self) -> str:
        rows = []
        for name in list_builtins():
            manifest = builtin_manifest(name)
            rows.append({"name": name, "dimension": manifest.dimension,
                         "description": manifest.annotations[0] if manifest.annotations else ""})
        return self._emit({"builtins": rows}, "Built-in manifolds", rows)

    def run_validate(self, m: AKManifold) -> str:
        """Reaching this point means every axiom passed; failures raise earlier."""
        axioms = {code: "pass" for code in AXIOMS}
        data = {
            "manifold": m.name,
            "dimension": m.dimension,
            "axioms": axioms,
            "unimodular": m.unimodular,
            "compact_quotient": m.compact_quotient,
            "nomizu": m.nomizu,
        }
        notes = [] if m.unimodular else ["The algebra is not unimodular; Gram adjoints are not L2 adjoints."]
        rows = [{"axiom": code, "status": status} for code, status in axioms.items()]
        return self._emit(data, f"Validation: {m.name}", rows, notes)

    def run_report(self, m: AKManifold) -> str:
        report = build_report(m, self.seed)
        if self.format == "json":
            return report.model_dump_json(indent=2)
        return render_report(report)

    def run_identities(self, m: AKManifold) -> str:
        report = identity_suite(m, seed=self.seed)
        if self.format == "json":
            text = report.model_dump_json(indent=2)
        else:
            rows = [{"id": c.id, "anchor": c.anchor, "status": c.status, "defect": c.defect or ""}
                    for c in report.checks]
            text = render_table(f"Identity suite: {m.name}", rows)
        if not report.passed:
            print(text)
            ids = ", ".join(c.id for c in report.failures)
            raise ConsistencyError("IDENTITY", f"{len(report.failures)} identities failed on {m.name}: {ids}")
        return text

    def run_spectrum(self, m: AKManifold, operator: str = None, degree: int = None) -> str:
        operators = [operator.replace("-", "+")] if operator else list(GAP_OPERATORS)
        degrees = self._degrees(m, degree)
        spectra = []
        for selection in operators:
            for k in degrees:
                roots = laplacian_roots(m, selection, k, self.width)
                gap = smallest_positive(roots)
                spectra.append({
                    "operator": selection,
                    "degree": k,
                    "eigenvalues": [r.to_json() for r in roots],
                    "gap": gap.as_string() if gap is not None else None,
                })
        rows = [{"operator": s["operator"], "degree": s["degree"],
                 "eigenvalues": ", ".join(_root_text(r) for r in s["eigenvalues"]),
                 "gap": s["gap"] or "-"} for s in spectra]
        return self._emit({"manifold": m.name, "eig_width": self.config.precision.eig_width, "spectra": spectra},
                          f"Laplacian spectra: {m.name}", rows)

    def run_hlc(self, m: AKManifold) -> str:
        report = hlc_audit(m)
        data = {"manifold": m.name, "hlc": report.verdicts(), **report.to_json()}
        rows = [{"k": d.degree, "holds": d.holds, "statements": d.statements,
                 "rank": d.lefschetz_d.rank, "non_hlc_degree": report.non_hlc_degrees[d.degree]}
                for d in report.degrees]
        notes = [f"{name}: {ok}" for name, ok in report.checks.items()]
        return self._emit(data, f"Hard Lefschetz audit: {m.name}", rows, notes)

    def run_constants(self, m: AKManifold, family: str = None, degree: int = None) -> str:
        families = [family] if family else list(FAMILIES)
        results = [membership_constant(m, name, k, self.width).to_json()
                   for name in families for k in self._degrees(m, degree)]
        rows = [{"family": r["family"], "k": r["degree"], "best constant": r["best_constant"],
                 "threshold": r["threshold"] or "-", "status": r["status"]} for r in results]
        return self._emit({"manifold": m.name, "constants": results}, f"Membership constants: {m.name}", rows)

    def run_decompose(self, m: AKManifold, form_text: str) -> str:
        form = parse_form(m, form_text)
        result = decompose_form(m, form)
        data = {"manifold": m.name, **result.to_json()}
        rows = []
        for d in result.degrees:
            for pq, piece in d.bidegrees.items():
                rows.append({"k": d.degree, "part": f"({pq})", "form": _form_text(piece)})
            rows.append({"k": d.degree, "part": "harmonic", "form": _form_text(d.harmonic)})
            rows.append({"k": d.degree, "part": "exact", "form": _form_text(d.exact)})
            rows.append({"k": d.degree, "part": "coexact", "form": _form_text(d.coexact)})
            for piece in d.lefschetz:
                rows.append({"k": d.degree, "part": f"L^{piece['r']} primitive", "form": _form_text(piece["piece"])})
        return self._emit(data, f"Decomposition on {m.name}", rows)

    @staticmethod
    def _degrees(m: AKManifold, degree: Optional[int]) -> List[int]:
        if degree is None:
            return list(range(m.dimension + 1))
        check_degree(m, degree)
        return [degree]


def _root_text(root: Dict) -> str:
    if root["kind"] == "exact":
        text = root["value"]
    else:
        text = f"[{root['lo']}, {root['hi']}]"
    return text if root["multiplicity"] == 1 else f"{text} (x{root['multiplicity']})"


def _form_text(form: FormValue) -> str:
    if form.is_zero():
        return "0"
    ordered = sorted(form.coefficients.items(), key=lambda mc: (mc[0].degree, tuple(mc[0])))
    return " + ".join(f"({coeff}) {mono.key}" for mono, coeff in ordered)


def parse_form(m: AKManifold, text: str) -> FormValue:
    """Monomial-key JSON; a value is {"re": .., "im": ..} or a bare rational string."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ManifestError(f"--form is not valid JSON: {e.msg}", "/form")
    if not isinstance(data, dict):
        raise ManifestError("--form must be a JSON object keyed by monomials", "/form")
    data = {key: value if isinstance(value, dict) else {"re": str(value)} for key, value in data.items()}
    try:
        return FormValue.from_json(m.dimension, data, "/form")
    except ShapeMismatchError as e:
        raise ManifestError(str(e), "/form")


class _Parser(argparse.ArgumentParser):
    """Usage errors are validation failures (exit 1), not argparse's exit 2."""

    def error(self, message):
        raise ValidationError("INVOCATION", message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(description="Exact Hodge theory of almost Kähler Lie algebras")
    parser.add_argument("command", choices=COMMANDS, help="Command to run")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--builtin", metavar="NAME", help="Built-in manifold name (see `list`)")
    source.add_argument("--file", metavar="PATH", help="Manifest JSON file")
    parser.add_argument("--format", choices=("json", "markdown"), help="Output format")
    parser.add_argument("--eig-width", metavar="RATIONAL", help="Width of isolating intervals")
    parser.add_argument("--seed", type=int, help="Seed for property vectors")
    parser.add_argument("--degree", type=int, help="Restrict to one form degree")
    parser.add_argument("--family", choices=tuple(FAMILIES), help="Membership family")
    parser.add_argument("--operator", choices=OPERATOR_CHOICES, help="Laplacian for `spectrum`")
    parser.add_argument("--form", help="Form for `decompose`, monomial-key JSON")
    parser.add_argument("--config", metavar="PATH", help="Config YAML file")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    return parser


def configure(args: argparse.Namespace) -> Config:
    """Config file and environment first, then the flags of this invocation."""
    config = load_config(args.config) if args.config else get_config()
    update = config.model_dump()
    if args.eig_width is not None:
        update["precision"]["eig_width"] = args.eig_width
    if args.seed is not None:
        if args.seed < 0:
            raise ValidationError("INVOCATION", "--seed must be a non-negative integer")
        update["audit"]["seed"] = args.seed
    try:
        config = Config(**update)
    except ValueError as e:
        raise ConfigurationError(f"Invalid command-line override: {e}")
    setup_logger(config.logging.log_dir, "DEBUG" if args.verbose else config.logging.level)
    return use_config(config)


def dispatch(args: argparse.Namespace) -> str:
    engine = HodgeEngine(configure(args), args.format)
    if args.command == "list":
        return engine.run_list()

    if args.builtin is None and args.file is None:
        raise ValidationError("INVOCATION", "one of --builtin or --file is required")
    m = engine.load(args.builtin, args.file)

    if args.command == "validate":
        return engine.run_validate(m)
    elif args.command == "report":
        return engine.run_report(m)
    elif args.command == "identities":
        return engine.run_identities(m)
    elif args.command == "spectrum":
        return engine.run_spectrum(m, args.operator, args.degree)
    elif args.command == "hlc":
        return engine.run_hlc(m)
    elif args.command == "constants":
        return engine.run_constants(m, args.family, args.degree)
    elif args.command == "decompose":
        if not args.form:
            raise ValidationError("INVOCATION", "decompose needs --form")
        return engine.run_decompose(m, args.form)
    raise ValidationError("INVOCATION", f"unknown command {args.command!r}")


def run(argv: Sequence[str] = None) -> int:
    """Parse ``argv``, run the command and return the exit status."""
    try:
        args = build_parser().parse_args(argv)
        output = dispatch(args)
    except EngineError as e:
        log.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        error = InputOutputError(str(e))
        log.error(f"InputOutputError: {error}")
        print(f"error: {error}", file=sys.stderr)
        return error.exit_code
    print(output)
    return 0


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
