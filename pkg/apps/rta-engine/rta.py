#!/usr/bin/env python3
"""
RTA Engine - command line driver
Build, verify and compute with regular triangular algebras

Exit status: 0 success, 1 usage or parse error, 2 verification failure
"""

import argparse
import json
import logging
import os
import sys

# Run from any working directory: lib/ lives next to this script
script_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, script_dir)

from lib import zoo
from lib.artifacts import (blocks_payload, central_payload, check_payload, dump_json, dump_tsv,
                           duflo_payload, layers_payload, pbw_payload, sset_payload, verma_payload,
                           write_text)
from lib.center import central_character, center_search, hc_project, is_central
from lib.checks import (check_anti_involution, check_hopf, default_duflo_candidate, find_duflo_delta,
                        generator_weights)
from lib.config import CONFIG_NAME, DEFAULT_CONFIG, load_config, save_config, setup_logging
from lib.errors import HypothesisError, RTAError, UnsupportedParameterError
from lib.formatter import FAIL_MARK, PASS_MARK, ReportFormatter
from lib.presentation import export_presentation, spec_from_selector
from lib.ssets import THREADS_ENV, block_partition, s3_closure, s_sets, thread_count
from lib.verma import build_verma, composition_multiplicities, singular_vectors, tcentral_jh

logger = logging.getLogger("rta")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2

COMMANDS = {
    "list-zoo": "list the built-in algebra families",
    "show": "generators, weights and rule count of an algebra",
    "pbw-check": "resolve every overlap up to --max-degree",
    "hopf-check": "coassociativity, counit, antipode and the involutions T, ST",
    "antihom-check": "the anti-involution on rules, generators and weights",
    "verma": "weight spaces, singular vectors and multiplicities of Z(--hw)",
    "singular": "singular vectors of Z(--hw) to --depth",
    "mult": "composition multiplicities [Z(--hw) : V(mu)]",
    "tcentral": "one-dimensional Jordan-Holder layers when b_- acts maximally",
    "central": "centrality certificates of named (or searched) central elements",
    "hc": "Harish-Chandra projection of the named central elements",
    "chi": "central characters across --weights",
    "sset": "truncated linkage closure of --hw and its projections",
    "blocks": "truncated block partition of --weights",
    "duflo": "integer grading functional nonzero on every generator weight",
    "export": "write the algebra as a presentation file",
}

COMMAND_ALIASES = {"tcentral": ["layers"]}


def parse_param(text: str):
    """k=v, v read as JSON when it parses and as a plain string otherwise"""
    if '=' not in text:
        raise UnsupportedParameterError(f"parameter '{text}' is not k=v")
    key, value = text.split('=', 1)
    try:
        return key.strip(), json.loads(value)
    except json.JSONDecodeError:
        return key.strip(), value.strip()


def split_weights(text: str):
    """Weight literals separated by ';'"""
    return [item.strip() for item in text.split(';') if item.strip()]


class RTACommands:
    """One method per subcommand; each returns an exit status"""

    def __init__(self, config, args):
        self.config = config
        self.args = args
        self.formatter = ReportFormatter(config.get('max_line_length', 79))
        self._spec = None

    # ------------------------------------------------------------------
    # request plumbing

    @property
    def spec(self):
        if self._spec is None:
            if not self.args.algebra:
                raise UnsupportedParameterError(f"{self.args.command} needs --algebra")
            params = dict(parse_param(p) for p in self.args.param or [])
            self._spec = spec_from_selector(self.args.algebra, params)
        return self._spec

    def option(self, name: str, key: str):
        value = getattr(self.args, name, None)
        return self.config[key] if value is None else value

    def positive(self, name: str, key: str) -> int:
        value = int(self.option(name, key))
        if value < 1:
            raise UnsupportedParameterError(f"--{name.replace('_', '-')} must be positive, got {value}")
        return value

    @property
    def depth(self) -> int:
        return self.positive("depth", "depth")

    @property
    def margin(self) -> int:
        return int(self.option("margin", "truncation_margin"))

    @property
    def threads(self) -> int:
        if self.args.threads is not None:
            return thread_count(self.args.threads)
        if os.environ.get(THREADS_ENV):
            return thread_count()
        return thread_count(self.config.get("threads", 1))

    @property
    def output_format(self) -> str:
        return self.args.format or self.config.get("output_format", "json")

    def highest_weight(self):
        if not self.args.hw:
            raise UnsupportedParameterError(f"{self.args.command} needs --hw")
        return self.spec.model.parse_weight(self.args.hw)

    def weight_list(self):
        if not self.args.weights:
            raise UnsupportedParameterError(f"{self.args.command} needs --weights")
        return [self.spec.model.parse_weight(text) for text in split_weights(self.args.weights)]

    def out_path(self):
        out = self.args.out
        if out is None or out == "-":
            return None
        directory = self.config.get("output_dir", ".")
        if not os.path.isabs(out) and directory not in ("", "."):
            out = os.path.join(directory, out)
        return out

    def emit(self, payload, text: str, tsv=None):
        """Write the payload in the requested format to --out or stdout"""
        fmt = self.output_format
        if fmt == "json":
            body = dump_json(payload)
        elif fmt == "tsv":
            if tsv is None:
                raise UnsupportedParameterError(f"{self.args.command} has no tsv form")
            body = dump_tsv(*tsv)
        else:
            body = text + "\n"
        write_text(body, self.out_path())

    def status(self, ok: bool, text: str) -> int:
        """Status line on stderr when the payload goes to stdout"""
        stream = sys.stderr if self.out_path() is None and self.output_format != "text" else sys.stdout
        print(self.formatter.format_status(ok, text), file=stream)
        return EXIT_OK if ok else EXIT_FAILED

    # ------------------------------------------------------------------
    # algebras

    def cmd_list_zoo(self):
        rows = [(name, description) for name, (_, description) in zoo.FAMILIES.items()]
        payload = {"families": [{"name": n, "description": d} for n, d in rows]}
        text = self.formatter.format_report("ALGEBRA ZOO", rows)
        self.emit(payload, text, (["family", "description"], rows))
        return EXIT_OK

    def cmd_show(self):
        spec = self.spec
        p, model = spec.presentation, spec.model
        generators = [{"name": s.name, "class": s.cls, "root": s.root.to_list(),
                       "weight": model.render_offset(s.weight), "degree": s.degree}
                      for s in p.symbols]
        payload = {
            "algebra": spec.name, "family": spec.family, "field": spec.field.kind,
            "weights": {"name": model.name, "kind": model.kind, "coordinates": list(model.coordinates),
                        "simple_roots": [model.render_offset(r) for r in model.simple_roots]},
            "generators": generators, "rules": len(p.rules),
            "anti_involution": spec.anti_involution is not None, "hopf": spec.hopf is not None,
            "central": dict(spec.central), "notes": list(spec.notes),
        }
        rows = [("algebra", spec.name), ("family", spec.family), ("field", spec.field.kind),
                ("weights", f"{model.name} ({model.kind}) on {', '.join(model.coordinates)}"),
                ("rules", str(len(p.rules))),
                ("anti-involution", "yes" if spec.anti_involution is not None else "no"),
                ("hopf data", "yes" if spec.hopf is not None else "no")]
        table = self.formatter.format_columns(
            ["generator", "class", "root", "weight"],
            [[g["name"], g["class"], str(g["root"]), g["weight"]] for g in generators])
        lines = [f"{label} = {text}" for label, text in spec.central.items()] + spec.notes
        text = self.formatter.format_report(spec.name.upper(), rows, lines) + "\n" + table
        self.emit(payload, text, (["generator", "class", "root", "weight"],
                                  [[g["name"], g["class"], g["root"], g["weight"]] for g in generators]))
        return EXIT_OK

    def cmd_export(self):
        write_text(export_presentation(self.spec), self.out_path())
        return EXIT_OK

    # ------------------------------------------------------------------
    # verification

    def cmd_pbw_check(self):
        spec = self.spec
        report = spec.presentation.check_pbw(self.positive("max_degree", "max_degree"))
        payload = pbw_payload(spec, report)
        lines = [report.note] + [f.describe(spec.presentation) for f in report.failures]
        text = self.formatter.format_report("PBW CHECK", [
            ("algebra", spec.name), ("max degree", str(report.max_degree)),
            ("overlaps", str(report.overlaps_checked)), ("failures", str(len(report.failures)))], lines)
        self.emit(payload, text, (["word", "difference"],
                                  [[f["word"], f["difference"]] for f in payload["failures"]]))
        return self.status(report.passed, f"{spec.name}: {report.overlaps_checked} overlaps resolved"
                           if report.passed else f"{spec.name}: {len(report.failures)} overlaps disagree")

    def _check_report(self, report):
        payload = check_payload(report)
        rows = [("algebra", report.algebra), ("check", report.check),
                ("items", str(report.items_checked)), ("failures", str(len(report.failures)))]
        rows += [(key, json.dumps(value, sort_keys=True)) for key, value in sorted(report.flags.items())]
        text = self.formatter.format_report(report.check.upper(), rows,
                                            [f.describe() for f in report.failures])
        self.emit(payload, text, (["check", "subject", "residue"],
                                  [[f.check, f.subject, f.residue] for f in report.failures]))
        return self.status(report.passed, f"{report.algebra}: {report.check}, "
                                          f"{report.items_checked} items, {len(report.failures)} failures")

    def cmd_hopf_check(self):
        return self._check_report(check_hopf(self.spec))

    def cmd_antihom_check(self):
        return self._check_report(check_anti_involution(self.spec))

    # ------------------------------------------------------------------
    # Verma modules

    def _verma_text(self, payload) -> str:
        rows = [("algebra", payload["algebra"]), ("lambda", payload["lambda"]),
                ("depth", str(payload["depth"])), ("horizon", str(payload["horizon"]))]
        output = [self.formatter.format_report("VERMA MODULE", rows)]
        if payload["weight_spaces"]:
            output.append(self.formatter.format_columns(
                ["offset", "weight", "dim"],
                [[s["offset"], s["weight"], str(s["dim"])] for s in payload["weight_spaces"]]))
        if payload["singular"]:
            output.append(self.formatter.format_separator())
            output.extend(self.formatter.wrap_text(f"singular at {v['offset']}: {v['vector']}", "  ")
                          for v in payload["singular"])
        if payload["multiplicities"]:
            output.append(self.formatter.format_separator())
            output.extend(f"  [Z : V({m['mu']})] = {m['m']}" for m in payload["multiplicities"])
        return "\n".join(output)

    def cmd_verma(self):
        spec, lam, depth = self.spec, self.highest_weight(), self.depth
        vslice = build_verma(spec, lam, depth)
        composition = composition_multiplicities(spec, lam, depth, self.margin)
        payload = verma_payload(spec, vslice, singular_vectors(vslice), composition)
        self.emit(payload, self._verma_text(payload),
                  (["offset", "weight", "dim"], [[s["offset"], s["weight"], s["dim"]]
                                                 for s in payload["weight_spaces"]]))
        return EXIT_OK

    def cmd_singular(self):
        spec, lam = self.spec, self.highest_weight()
        vslice = build_verma(spec, lam, self.depth)
        payload = verma_payload(spec, vslice, singular_vectors(vslice))
        payload["weight_spaces"] = []
        self.emit(payload, self._verma_text(payload),
                  (["offset", "vector"], [[v["offset"], v["vector"]] for v in payload["singular"]]))
        return EXIT_OK

    def cmd_mult(self):
        spec, lam, depth = self.spec, self.highest_weight(), self.depth
        composition = composition_multiplicities(spec, lam, depth, self.margin)
        payload = {"algebra": spec.name, "lambda": str(lam), "depth": depth, "horizon": composition.horizon,
                   "multiplicities": [{"mu": str(mu), "theta": composition.thetas[mu].to_list(), "m": m}
                                      for mu, m in composition.multiplicities.items()]}
        text = self.formatter.format_report("COMPOSITION MULTIPLICITIES", [
            ("algebra", spec.name), ("lambda", str(lam)), ("horizon", str(composition.horizon))],
            [f"[Z : V({m['mu']})] = {m['m']}" for m in payload["multiplicities"]])
        self.emit(payload, text, (["mu", "m"], [[m["mu"], m["m"]] for m in payload["multiplicities"]]))
        return EXIT_OK

    def cmd_tcentral(self):
        spec, lam = self.spec, self.highest_weight()
        try:
            report = tcentral_jh(spec, lam, self.depth)
        except HypothesisError as e:
            payload = {"algebra": spec.name, "lambda": str(lam), "passed": False,
                       "pair": list(e.pair), "residue": e.residue}
            self.emit(payload, self.formatter.format_report("HYPOTHESIS FAILS", [
                ("pair", f"[{e.pair[0]}, {e.pair[1]}]"), ("residue", e.residue)]),
                (["x", "y", "residue"], [[e.pair[0], e.pair[1], e.residue]]))
            return self.status(False, str(e))
        payload = layers_payload(spec, report)
        text = self.formatter.format_report("ONE-DIMENSIONAL LAYERS", [
            ("algebra", spec.name), ("lambda", str(lam)), ("depth", str(report.depth)),
            ("layers", str(len(report.layers)))],
            [f"{layer['mu']}: {layer['m']}" for layer in payload["layers"]] + report.non_maximal)
        self.emit(payload, text, (["mu", "m"], [[layer["mu"], layer["m"]] for layer in payload["layers"]]))
        return self.status(report.passed, f"{spec.name}: every b_- v_lambda maximal to depth {report.depth}"
                           if report.passed else f"{spec.name}: {len(report.non_maximal)} non-maximal vectors")

    # ------------------------------------------------------------------
    # centers

    def _central_elements(self):
        elements = self.spec.central_elements()
        if elements and not self.args.search:
            return elements
        degree = int(self.option("max_degree", "center_max_degree"))
        found = center_search(self.spec, degree)
        return {f"z{k + 1}": element for k, element in enumerate(found)}

    def cmd_central(self):
        spec = self.spec
        records, lines, ok = [], [], True
        for name, element in self._central_elements().items():
            certificate = is_central(spec, element)
            ok = ok and certificate.central
            failures = [{"generator": g, "commutator": c.render()} for g, c in certificate.commutators
                        if not c.is_zero()]
            records.append({"element_name": name, "element": element.render(),
                            "central": certificate.central, "failures": failures})
            mark = PASS_MARK if certificate.central else FAIL_MARK
            lines.append(f"{mark} {name} = {element.render()}")
            lines.extend(f"    [{name}, {f['generator']}] = {f['commutator']}" for f in failures)
        payload = {"algebra": spec.name, "elements": records}
        text = self.formatter.format_report("CENTRAL ELEMENTS", [("algebra", spec.name),
                                                                 ("elements", str(len(records)))], lines)
        self.emit(payload, text, (["element", "central"], [[r["element_name"], r["central"]] for r in records]))
        return EXIT_OK if ok else EXIT_FAILED

    def cmd_hc(self):
        spec = self.spec
        elements = self._central_elements()
        lams = self.weight_list() if self.args.weights else []
        characters = [central_character(spec, lam, elements) for lam in lams]
        records = central_payload(spec, elements, characters)
        if self.args.twist:
            for record, element in zip(records, elements.values()):
                record["theta"] = hc_project(spec, element, theta_twist=True).render()
        payload = {"algebra": spec.name, "records": records}
        lines = [f"xi({r['element_name']}) = {r['xi']}" for r in records]
        lines += [f"theta({r['element_name']}) = {r['theta']}" for r in records if "theta" in r]
        text = self.formatter.format_report("HARISH-CHANDRA PROJECTION", [("algebra", spec.name)], lines)
        self.emit(payload, text, (["element", "xi"], [[r["element_name"], r["xi"]] for r in records]))
        return EXIT_OK

    def cmd_chi(self):
        spec = self.spec
        elements = self._central_elements()
        names = list(elements)
        characters = [central_character(spec, lam, elements) for lam in self.weight_list()]
        payload = {"algebra": spec.name, "records": central_payload(spec, elements, characters),
                   "note": "equality is with respect to the supplied central elements"}
        rows = [[str(c.lam)] + [c.rendered()[n] for n in names] for c in characters]
        text = self.formatter.format_header(f"CENTRAL CHARACTERS - {spec.name}") + "\n" + \
            self.formatter.format_columns(["lambda"] + names, rows)
        self.emit(payload, text, (["lambda"] + names, rows))
        return EXIT_OK

    # ------------------------------------------------------------------
    # linkage

    def cmd_sset(self):
        spec, lam = self.spec, self.highest_weight()
        report = s3_closure(spec, lam, self.depth, self.positive("rounds", "rounds"),
                            self.threads, self.margin)
        s1, s2 = s_sets(report)
        payload = sset_payload(spec, report, s1, s2)
        text = self.formatter.format_report("LINKAGE CLOSURE", [
            ("algebra", spec.name), ("seed", str(lam)), ("members", ", ".join(payload["members"])),
            ("S1", ", ".join(payload["s1"])), ("S2", ", ".join(payload["s2"])),
            ("growth", " ".join(str(g) for g in report.growth)), ("status", report.status)],
            [f"{a} -> {b}" for a, b in payload["edges"]])
        self.emit(payload, text, (["from", "to"], payload["edges"]))
        return EXIT_OK

    def cmd_blocks(self):
        spec = self.spec
        partition = block_partition(spec, self.weight_list(), self.depth,
                                    self.positive("rounds", "rounds"), self.threads, self.margin)
        payload = blocks_payload(spec, partition)
        lines = []
        for k, cell in enumerate(payload["cells"]):
            flag = " (still growing)" if k in partition.truncated_cells else ""
            lines.append(f"{{{', '.join(cell)}}}{flag}")
        text = self.formatter.format_report("TRUNCATED BLOCKS", [
            ("algebra", spec.name), ("depth", str(self.depth)), ("cells", str(len(partition.cells)))], lines)
        self.emit(payload, text, (["cell", "weight"],
                                  [[k, w] for k, cell in enumerate(payload["cells"]) for w in cell]))
        return EXIT_OK

    def cmd_duflo(self):
        spec = self.spec
        if self.args.candidate:
            candidate = [int(v) for v in self.args.candidate.split(',')]
        else:
            candidate = default_duflo_candidate(spec)
        result = find_duflo_delta(generator_weights(spec), candidate,
                                  int(self.config.get("duflo_max_bound", 1024)))
        payload = duflo_payload(spec, result)
        rows = [("algebra", spec.name), ("coordinates", ", ".join(spec.model.coordinates)),
                ("delta", str(payload["delta"])), ("box", str(result.bound))]
        if candidate is not None:
            rows.append(("candidate", f"{payload['candidate']} "
                                      f"{PASS_MARK if result.candidate_valid else FAIL_MARK}"))
        self.emit(payload, self.formatter.format_report("GRADING FUNCTIONAL", rows),
                  (["coordinate", "delta"], list(zip(spec.model.coordinates, result.delta or ()))))
        ok = result.delta is not None and result.candidate_valid is not False
        return EXIT_OK if ok else EXIT_FAILED

    def run(self) -> int:
        command = getattr(self.args, "canonical", self.args.command)
        handler = getattr(self, "cmd_" + command.replace('-', '_'))
        logger.info("running %s", command)
        return handler()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rta.py", description="Regular triangular algebra engine",
                                     epilog=ReportFormatter().format_help(COMMANDS),
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--config", help=f"configuration file (default: {CONFIG_NAME})")
    parser.add_argument("--create-config", action="store_true",
                        help=f"write an example {CONFIG_NAME} next to this script and exit")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="zoo family (u_sl2, hecke_gl_2, ...) or presentation file")
    common.add_argument("--param", action="append", metavar="K=V", help="family parameter, repeatable")
    common.add_argument("--hw", help="highest weight literal, e.g. '[1]'")
    common.add_argument("--weights", help="weight literals separated by ';'")
    common.add_argument("--depth", type=int)
    common.add_argument("--rounds", type=int)
    common.add_argument("--max-degree", type=int)
    common.add_argument("--margin", type=int, help="truncation margin below the depth")
    common.add_argument("--threads", type=int)
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "tsv", "text"))
    common.add_argument("--search", action="store_true", help="search the center instead of named elements")
    common.add_argument("--twist", action="store_true", help="also report the rho-shifted projection")
    common.add_argument("--candidate", help="grading functional to validate, e.g. 3,-1")
    sub = parser.add_subparsers(dest="command")
    for name, description in COMMANDS.items():
        command_parser = sub.add_parser(name, parents=[common], aliases=COMMAND_ALIASES.get(name, []),
                                        help=description, description=description)
        command_parser.set_defaults(canonical=name)
    return parser


def main(argv=None) -> int:
    """Main entry point"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.create_config:
        path = os.path.join(script_dir, CONFIG_NAME)
        save_config(DEFAULT_CONFIG, path)
        print(f"{PASS_MARK} Example config written to {path}")
        return EXIT_OK
    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    config = load_config(args.config, script_dir)
    setup_logging(config)
    try:
        if os.environ.get(THREADS_ENV):
            thread_count()
        return RTACommands(config, args).run()
    except RTAError as e:
        print(f"{FAIL_MARK} {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"{FAIL_MARK} {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error("cannot write output: %s", e)
        print(f"{FAIL_MARK} {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
