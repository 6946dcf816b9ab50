"""Command-line front end"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from .config import DEFAULT_SATURATION_CAP
from .decomposition import indecomposable_components, special_graphs
from .enumeration import FILTERS, enumerate_graphs, verify_corpus
from .errors import BadParameters, HgSyntaxError, HoffmanError
from .families import FAMILIES, build_family, check_claims, family_me8
from .graph import (
    HoffmanGraph,
    decode_hg,
    delete_slim,
    format_hg,
    format_hg_stream,
    load_hg,
    parse_hg_stream,
)
from .lattice import classify_reduced_lattice
from .render import Report, get_renderer
from .representation import VectorRep, reduced_gram
from .saturation import is_saturated, verify_me8_maximality
from .spectra import b_matrix, lambda_min, limit_table, min_eig_at_least, significant

logger = logging.getLogger(__name__)

STDIN = "-"


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _matrix_lines(rows: Sequence[Sequence[int]]) -> List[str]:
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return ["  " + " ".join(str(x).rjust(width) for x in row) for row in rows]


def _edge_text(edges: Sequence[Sequence[str]]) -> str:
    return ", ".join(f"{a}-{b}" for a, b in edges) or "(none)"


def _graph_dict(H: HoffmanGraph) -> Dict[str, Any]:
    return {
        "slim": list(H.slim_names),
        "fat": list(H.fat_names),
        "edges": [list(e) for e in H.edges()],
    }


def _parse_params(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise BadParameters(f"parameters must be comma-separated integers, got '{text}'") from None


def _parse_filters(text: Optional[str]) -> List[str]:
    if not text:
        return []
    return [part.strip() for part in text.split(",") if part.strip()]


class HofflatApplication:
    """Main application class wiring the subcommands to the library"""

    def __init__(self):
        self.parser = self._create_parser()

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create and configure argument parser"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            choices=["text", "json", "yaml"],
            default="text",
            help="Output format.",
        )
        common.add_argument(
            "--json",
            action="store_const",
            const="json",
            dest="format",
            default="text",
            help="Shorthand for --format json.",
        )
        common.add_argument(
            "-v",
            "--verbose",
            action="count",
            default=0,
            help="Log progress to stderr (-v info, -vv debug).",
        )

        parser = argparse.ArgumentParser(
            prog="hofflat",
            description="Fat Hoffman graphs with smallest eigenvalue at least -3.",
        )
        sub = parser.add_subparsers(dest="command", required=True)

        analyze = sub.add_parser(
            "analyze", parents=[common], help="Eigenvalues, Gram matrices and special graphs."
        )
        analyze.add_argument("file", help="Input .hg file, '-' for standard input.")
        analyze.add_argument("--norm", type=int, default=3, help="Norm m of the verdict.")

        decompose = sub.add_parser(
            "decompose", parents=[common], help="Split into indecomposable components."
        )
        decompose.add_argument("file", help="Input .hg file, '-' for standard input.")

        classify = sub.add_parser(
            "classify", parents=[common], help="Recognize the reduced lattice of norm 3."
        )
        classify.add_argument("file", help="Input .hg file, '-' for standard input.")

        saturated = sub.add_parser(
            "saturated", parents=[common], help="Test saturation under fat attachment."
        )
        saturated.add_argument("file", help="Input .hg file, '-' for standard input.")
        saturated.add_argument("--mu", type=int, default=3, help="Eigenvalue bound -mu.")
        saturated.add_argument(
            "--max-slim-for-saturation",
            type=int,
            default=DEFAULT_SATURATION_CAP,
            help="Refuse graphs with more slim vertices.",
        )

        family = sub.add_parser("family", parents=[common], help="Build a named family.")
        family.add_argument("name", choices=FAMILIES, help="Family name.")
        family.add_argument(
            "params", nargs="?", default=None, help="Parameters: T for ht, N1,N2,... for an."
        )
        family.add_argument("-o", "--output", help="Write the .hg stream to this file.")
        family.add_argument(
            "--check", action="store_true", help="Re-derive the claimed properties."
        )

        enumerate_ = sub.add_parser(
            "enumerate", parents=[common], help="Enumerate small graphs up to isomorphism."
        )
        enumerate_.add_argument("--max-slim", type=int, required=True)
        enumerate_.add_argument("--max-fat", type=int, required=True)
        enumerate_.add_argument(
            "--filter",
            default="",
            help=f"Comma-separated subset of {','.join(FILTERS)}.",
        )
        enumerate_.add_argument(
            "--verify", action="store_true", help="Append the structure-theorem report."
        )

        limit = sub.add_parser(
            "limit", parents=[common], help="Clique-expansion convergence table."
        )
        limit.add_argument("file", help="Input .hg file, '-' for standard input.")
        limit.add_argument("--max-n", type=int, required=True, help="Largest clique size.")

        maximality = sub.add_parser(
            "maximality", parents=[common], help="Maximality of the E8 example."
        )
        maximality.add_argument(
            "--delete", action="append", default=[], help="Slim vertex to delete first."
        )
        return parser

    def _configure_logging(self, verbosity: int) -> None:
        level = logging.WARNING
        if verbosity == 1:
            level = logging.INFO
        elif verbosity > 1:
            level = logging.DEBUG
        logging.basicConfig(
            level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
        )

    def _read_graphs(self, source: str) -> List[HoffmanGraph]:
        if source == STDIN:
            stream = getattr(sys.stdin, "buffer", None)
            text = sys.stdin.read() if stream is None else decode_hg(stream.read())
            graphs = parse_hg_stream(text)
        else:
            graphs = load_hg(Path(source))
        if not graphs:
            raise HgSyntaxError("no graph in input", 1)
        return graphs

    def _per_graph(
        self, args: argparse.Namespace, command: Callable[[HoffmanGraph], Report]
    ) -> Report:
        """Run a command on every graph of the input; several graphs give a list"""
        reports = [command(H) for H in self._read_graphs(args.file)]
        if len(reports) == 1:
            return reports[0]
        lines: List[str] = []
        for i, report in enumerate(reports):
            if i:
                lines.append("---")
            lines.extend(report.lines)
        return Report([r.payload for r in reports], lines)

    def _analyze(self, args: argparse.Namespace) -> Report:
        m = args.norm

        def command(H: HoffmanGraph) -> Report:
            value = lambda_min(H)
            ok = min_eig_at_least(H, m)
            b = b_matrix(H).tolist()
            gram = reduced_gram(H, m)
            special = special_graphs(H).to_dict()
            payload = {
                "slim_count": H.slim_count,
                "fat_count": H.fat_count,
                "lambda_min": significant(value),
                "norm": m,
                "min_eig_at_least": ok,
                "b_matrix": b,
                "reduced_gram": gram.to_dict(),
                "special_graphs": special,
            }
            lines = [
                f"slim vertices: {H.slim_count}, fat vertices: {H.fat_count}",
                f"λ_min = {value:.9f}",
                f"λ_min ≥ -{m}: {_flag(ok)}",
                "B:",
                *_matrix_lines(b),
                f"reduced Gram (norm {m}):",
                *_matrix_lines(gram.entries),
                f"S-: {_edge_text(special['minus'])}",
                f"S+: {_edge_text(special['plus'])}",
            ]
            return Report(payload, lines)

        return self._per_graph(args, command)

    def _decompose(self, args: argparse.Namespace) -> Report:
        def command(H: HoffmanGraph) -> Report:
            parts = indecomposable_components(H)
            payload = {
                "indecomposable": len(parts) == 1,
                "components": [_graph_dict(P) for P in parts],
            }
            lines = [f"components: {len(parts)}"]
            for P in parts:
                lines.append(f"# slim {' '.join(P.slim_names)}")
                lines.extend(format_hg(P).splitlines())
            return Report(payload, lines)

        return self._per_graph(args, command)

    def _classify(self, args: argparse.Namespace) -> Report:
        def command(H: HoffmanGraph) -> Report:
            lattice = classify_reduced_lattice(H)
            payload = {"label": lattice.label, **lattice.to_dict()}
            if lattice.embedding is not None:
                payload["embedding"] = lattice.embedding.to_dict()
            lines = [
                f"lattice: {lattice.label}",
                f"rank: {lattice.rank}, discriminant: {lattice.discriminant}, "
                f"min norm: {lattice.min_norm}",
            ]
            return Report(payload, lines)

        return self._per_graph(args, command)

    def _saturated(self, args: argparse.Namespace) -> Report:
        def command(H: HoffmanGraph) -> Report:
            result = is_saturated(H, args.mu, args.max_slim_for_saturation)
            line = f"saturated: {_flag(result.saturated)}"
            if result.witness is not None:
                line += f" (a fat vertex attaches to {', '.join(result.witness)})"
            return Report(result.to_dict(), [line])

        return self._per_graph(args, command)

    def _family(self, args: argparse.Namespace) -> Report:
        instance = build_family(args.name, _parse_params(args.params))
        stream = format_hg_stream(instance.graphs)
        payload = {
            "family": instance.name,
            "graphs": [_graph_dict(H) for H in instance.graphs],
            "claims": instance.claims,
        }
        lines = stream.splitlines()
        if args.output:
            Path(args.output).write_text(stream, encoding="utf-8")
            lines = [f"wrote {len(instance.graphs)} graph(s) to {args.output}"]
        if args.check:
            results = check_claims(instance)
            payload["checks"] = results
            lines += [f"# {key}: {_flag(ok)}" for key, ok in results.items()]
        return Report(payload, lines)

    def _enumerate(self, args: argparse.Namespace) -> Report:
        graphs = enumerate_graphs(args.max_slim, args.max_fat, _parse_filters(args.filter))
        lines = format_hg_stream(graphs).splitlines()
        payload: Any = [_graph_dict(H) for H in graphs]
        if args.verify:
            report = verify_corpus(graphs)
            payload = {"graphs": payload, "verification": report.to_dict()}
            lines.append(f"# graphs: {report.graphs}")
            lines += [f"# {check}: {count} checked" for check, count in report.tallies.items()]
            for violation in report.violations:
                lines.append(f"# violation {violation.check}: {violation.detail}")
            lines.append(f"# violations: {len(report.violations)}")
        return Report(payload, lines)

    def _limit(self, args: argparse.Namespace) -> Report:
        def command(H: HoffmanGraph) -> Report:
            target = lambda_min(H)
            rows = limit_table(H, args.max_n)
            payload = [r.to_dict() for r in rows]
            lines = [f"λ_min = {target:.9f}", "n  lambda_min  gap"]
            lines += [f"{r.n}  {r.lambda_min_gamma_n:.9f}  {r.gap:.3e}" for r in rows]
            return Report(payload, lines)

        return self._per_graph(args, command)

    def _maximality(self, args: argparse.Namespace) -> Report:
        H, rep = family_me8()
        if args.delete:
            H = delete_slim(H, args.delete)
            rep = VectorRep(
                rep.kind, rep.scale, H.slim_names, tuple(rep.vector(n) for n in H.slim_names)
            )
        report = verify_me8_maximality(H, rep)
        lines = [
            f"alpha: {report.alpha}",
            f"fat attachment impossible: {_flag(report.fat_attachment_impossible)} "
            f"(dual minimal norm {report.dual_min_norm})",
            f"slim attachment impossible: {_flag(report.slim_attachment_impossible)} "
            f"({report.refuted_roots} of {report.orthogonal_roots} roots refuted, "
            f"{report.paired_roots} of {report.adjacent_roots} roots paired)",
            f"confirmed: {_flag(report.confirmed)}",
        ]
        return Report(report.to_dict(), lines)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Main entry point; returns the exit code"""
        args = self.parser.parse_args(argv)
        self._configure_logging(args.verbose)
        commands = {
            "analyze": self._analyze,
            "decompose": self._decompose,
            "classify": self._classify,
            "saturated": self._saturated,
            "family": self._family,
            "enumerate": self._enumerate,
            "limit": self._limit,
            "maximality": self._maximality,
        }
        try:
            report = commands[args.command](args)
        except HoffmanError as error:
            print(f"Error: {error.name}: {error}", file=sys.stderr)
            return 1
        get_renderer(args.format).render(report)
        return 0
