"""Command-line interface.

All commands read a JSON config describing the project (corpus paths,
reference list, thresholds, output directory) and write deterministic
TSV reports plus a ``manifest.json`` recording SHA-256 hashes of every
input and output.  A stage whose recorded input hashes still match is
reused instead of recomputed.

Exit codes: 0 success, 1 validation findings, 2 input/parse error,
3 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from termflex import crossdomain, extraction, sketch
from termflex.corpus import ingest_vertical
from termflex.domains import GENERAL, sort_domains
from termflex.errors import InputError, TermflexError, ValidationFailure
from termflex.query import builtin_patterns, parse_pattern_library
from termflex.templates import (
    assemble_flexible,
    flexible_to_json,
    kb_from_json,
    lint_kb,
    render_flexible,
    validate_kb,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _sha256(path):
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _atomic_write(path, text):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        handle.write(text)
    os.replace(tmp, path)


class Project:
    """Config plus lazily computed, manifest-cached pipeline stages."""

    def __init__(self, config_path, overrides=None):
        try:
            with open(config_path, encoding="utf-8") as handle:
                self.config = json.load(handle)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {config_path}: {exc}") from None
        self._apply_env()
        for key, value in (overrides or {}).items():
            if value is not None:
                self.config[key] = value
        self.base = os.path.dirname(os.path.abspath(config_path))
        self.out = self._path(self.config.get("out", "out"))
        os.makedirs(self.out, exist_ok=True)
        self.manifest_path = os.path.join(self.out, "manifest.json")
        if os.path.exists(self.manifest_path):
            with open(self.manifest_path, encoding="utf-8") as handle:
                self.manifest = json.load(handle)
        else:
            self.manifest = {}
        self._corpora = None

    def _apply_env(self):
        """TERMFLEX_<KEY> environment variables override scalar config keys."""
        for key in ("out", "window", "top_k", "min_domains", "pos_filter"):
            value = os.environ.get(f"TERMFLEX_{key.upper()}")
            if value is not None:
                self.config[key] = int(value) if value.isdigit() else value

    def _path(self, relative):
        return os.path.normpath(os.path.join(self.base, relative))

    def save_manifest(self):
        _atomic_write(
            self.manifest_path, json.dumps(self.manifest, indent=2, sort_keys=True) + "\n"
        )

    # -- config accessors --------------------------------------------------

    def domain_paths(self):
        domains = self.config.get("domains")
        if not domains:
            raise InputError("config has no 'domains' mapping")
        return {code: self._path(p) for code, p in domains.items()}

    def corpora(self):
        if self._corpora is None:
            self._corpora = {}
            for code in sort_domains(self.domain_paths()):
                path = self.domain_paths()[code]
                try:
                    with open(path, encoding="utf-8") as handle:
                        self._corpora[code] = ingest_vertical(handle, code)
                except OSError as exc:
                    raise InputError(f"cannot read corpus {path}: {exc}") from None
        return self._corpora

    def thresholds(self):
        cfg = self.config.get("threshold", {})
        mode = cfg.get("mode", "fixed")
        ratio = cfg.get("ratio", 5000)
        fixed = cfg.get("fixed", 64)
        return {
            code: crossdomain.domain_threshold(
                corpus.word_count, ratio=ratio, mode=mode, fixed=fixed
            )
            for code, corpus in self.corpora().items()
        }

    def reference(self):
        path = self.config.get("reference")
        if not path:
            raise InputError("config has no 'reference' frequency list")
        with open(self._path(path), encoding="utf-8") as handle:
            return extraction.load_reference_counts(handle)

    def stl(self):
        path = self.config.get("stl")
        if not path:
            return None
        with open(self._path(path), encoding="utf-8") as handle:
            return crossdomain.load_stl(handle)

    def flags(self):
        path = self.config.get("flags")
        if not path:
            return None
        with open(self._path(path), encoding="utf-8") as handle:
            return crossdomain.load_flags(handle)

    def patterns(self):
        path = self.config.get("patterns")
        if not path:
            return builtin_patterns()
        with open(self._path(path), encoding="utf-8") as handle:
            return parse_pattern_library(handle.read())

    def window(self, corpus):
        window = self.config.get("window", "auto")
        if window == "auto":
            return sketch.derive_window(
                corpus.mean_word_length, self.config.get("char_budget", 250)
            )
        return int(window)

    # -- stages ------------------------------------------------------------

    def stage_inputs(self, stage):
        paths = sorted(self.domain_paths().values())
        if stage in ("extract", "matrix", "worklist"):
            paths.append(self._path(self.config["reference"]))
        if stage == "worklist":
            for key in ("stl", "flags"):
                if self.config.get(key):
                    paths.append(self._path(self.config[key]))
        return {p: _sha256(p) for p in paths}

    def stage_fresh(self, stage):
        record = self.manifest.get(stage)
        if not record:
            return False
        try:
            if record["inputs"] != self.stage_inputs(stage):
                return False
            for path, digest in record["outputs"].items():
                if not os.path.exists(path) or _sha256(path) != digest:
                    return False
        except OSError:
            return False
        return True

    def record_stage(self, stage, outputs, params=None):
        self.manifest[stage] = {
            "inputs": self.stage_inputs(stage),
            "params": params or {},
            "outputs": {p: _sha256(p) for p in outputs},
        }
        self.save_manifest()

    def run_ingest(self):
        if self.stage_fresh("ingest"):
            return os.path.join(self.out, "stats.tsv")
        thresholds = self.thresholds()
        lines = ["DOMAIN\tWORDS\tMEAN_WORD_LENGTH\tTHRESHOLD"]
        for code, corpus in self.corpora().items():
            lines.append(
                f"{code}\t{corpus.word_count}\t{corpus.mean_word_length:.2f}"
                f"\t{thresholds[code]}"
            )
        path = os.path.join(self.out, "stats.tsv")
        _atomic_write(path, "\n".join(lines) + "\n")
        self.record_stage("ingest", [path], self.config.get("threshold", {}))
        return path

    def run_extract(self):
        outputs = [
            os.path.join(self.out, "candidates", f"{code}.tsv")
            for code in self.corpora()
        ]
        if self.stage_fresh("extract"):
            return outputs
        reference = self.reference()
        pos_filter = self.config.get("pos_filter", "N.*")
        outputs = []
        for code, corpus in self.corpora().items():
            candidates = extraction.extract_candidates(
                corpus, reference, pos_filter=pos_filter
            )
            lines = ["LEMMA\tFREQ\tSCORE"]
            lines += [
                f"{c.lemma}\t{c.frequency}\t{c.score:.4f}" for c in candidates
            ]
            path = os.path.join(self.out, "candidates", f"{code}.tsv")
            _atomic_write(path, "\n".join(lines) + "\n")
            outputs.append(path)
        self.record_stage("extract", outputs, {"pos_filter": pos_filter})
        return outputs

    def _load_candidates(self):
        self.run_extract()
        lists = {}
        for code in self.corpora():
            path = os.path.join(self.out, "candidates", f"{code}.tsv")
            counts = {}
            with open(path, encoding="utf-8") as handle:
                next(handle)
                for line in handle:
                    lemma, freq, _score = line.rstrip("\n").split("\t")
                    counts[lemma] = int(freq)
            lists[code] = counts
        return lists

    def run_matrix(self):
        path = os.path.join(self.out, "matrix.tsv")
        if self.stage_fresh("matrix"):
            return path
        matrix = crossdomain.build_matrix(self._load_candidates(), self.thresholds())
        _atomic_write(path, crossdomain.matrix_to_tsv(matrix, stl=self.stl()))
        self.record_stage("matrix", [path])
        return path

    def run_worklist(self):
        path = os.path.join(self.out, "worklist.tsv")
        if self.stage_fresh("worklist"):
            return path
        matrix = crossdomain.build_matrix(self._load_candidates(), self.thresholds())
        rows = crossdomain.filter_working_list(
            matrix,
            min_domains=self.config.get("min_domains", 3),
            stl=self.stl(),
            flags=self.flags(),
        )
        lines = ["LEMMA\tN_DOMAINS\tSTL\t" + "\t".join(matrix.domain_order)]
        for row in rows:
            cells = [row.lemma, str(len(row.domains)), "-"]
            for code in matrix.domain_order:
                cells.append(str(row.frequencies[code]) if code in row.frequencies else "-")
            lines.append("\t".join(cells))
        _atomic_write(path, "\n".join(lines) + "\n")
        self.record_stage("worklist", [path], {"min_domains": self.config.get("min_domains", 3)})
        return path

    def run_contextonyms(self, lemma):
        outputs = []
        for code, corpus in self.corpora().items():
            ctx = sketch.contextonyms(
                lemma, corpus, self.window(corpus), top_n=self.config.get("top_n")
            )
            lines = ["RANK\tLEMMA\tFREQ"]
            lines += [
                f"{rank}\t{e.lemma}\t{e.frequency}"
                for rank, e in enumerate(ctx.entries, start=1)
            ]
            path = os.path.join(self.out, "contextonyms", f"{lemma}.{code}.tsv")
            _atomic_write(path, "\n".join(lines) + "\n")
            outputs.append(path)
        self.record_stage(f"contextonyms:{lemma}", outputs)
        return outputs

    def run_compare_ctx(self, lemma):
        top_k = self.config.get("top_k", 50)
        lists = {}
        for code, corpus in self.corpora().items():
            lists[code] = sketch.contextonyms(lemma, corpus, self.window(corpus))
        partition = sketch.compare_contextonym_sets(lists, top_k=top_k)
        lines = ["LEMMA\tSHARED_BY"]
        for signature in sorted(partition, key=lambda s: (-len(s), s)):
            for shared in partition[signature]:
                lines.append(f"{shared}\t{'+'.join(signature)}")
        path = os.path.join(self.out, "compare", f"{lemma}.tsv")
        _atomic_write(path, "\n".join(lines) + "\n")
        self.record_stage(f"compare-ctx:{lemma}", [path], {"top_k": top_k})
        return path

    def run_hypernyms(self, lemma):
        patterns = self.patterns()
        outputs = []
        for code, corpus in self.corpora().items():
            hits = sketch.hypernym_candidates(lemma, corpus, patterns)
            lines = ["SUPERORDINATE\tPATTERN\tCONTEXT"]
            lines += [f"{h.superordinate}\t{h.pattern}\t{h.context}" for h in hits]
            path = os.path.join(self.out, "hypernyms", f"{lemma}.{code}.tsv")
            _atomic_write(path, "\n".join(lines) + "\n")
            outputs.append(path)
        self.record_stage(f"hypernyms:{lemma}", outputs)
        return outputs

    def run_tally(self, lemma):
        self.run_hypernyms(lemma)
        candidates = []
        for code in self.corpora():
            path = os.path.join(self.out, "hypernyms", f"{lemma}.{code}.tsv")
            with open(path, encoding="utf-8") as handle:
                next(handle)
                for line in handle:
                    sup, _pattern, _ctx = line.rstrip("\n").split("\t", 2)
                    candidates.append((sup, code))
        extra = self.config.get("superordinates")
        if extra:
            with open(self._path(extra), encoding="utf-8") as handle:
                for line_no, line in enumerate(handle, start=1):
                    stripped = line.strip()
                    if not stripped or stripped.startswith("#"):
                        continue
                    cols = stripped.split("\t")
                    if len(cols) != 2:
                        raise InputError(
                            f"superordinates line {line_no}: expected PHRASE<TAB>SOURCE"
                        )
                    candidates.append((cols[0], cols[1]))
        rows, sources = sketch.tally_superordinates(candidates)
        path = os.path.join(self.out, "tally", f"{lemma}.tsv")
        _atomic_write(path, sketch.tally_to_tsv(rows, sources))
        self.record_stage(f"tally:{lemma}", [path])
        return path

    def load_kb(self):
        path = self.config.get("kb")
        if not path:
            raise InputError("config has no 'kb' path")
        try:
            with open(self._path(path), encoding="utf-8") as handle:
                return kb_from_json(handle.read())
        except OSError as exc:
            raise InputError(f"cannot read kb: {exc}") from None
        except (KeyError, json.JSONDecodeError) as exc:
            raise InputError(f"malformed kb document: {exc}") from None


def build_parser():
    parser = argparse.ArgumentParser(
        prog="termflex",
        description="Corpus-based terminology workflows and flexible definitions",
    )
    parser.add_argument("--config", "-c", required=True, help="project config JSON")
    parser.add_argument("--out", help="output directory (overrides config)")
    parser.add_argument("--threshold-mode", choices=["floor", "round", "fixed"])
    parser.add_argument("--threshold", type=int, help="fixed threshold value")
    parser.add_argument("--window", type=int, help="contextonym window override")
    parser.add_argument("--top-n", type=int, help="contextonym list length cap")
    parser.add_argument("--top-k", type=int, help="top-k for set comparison")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ingest", help="validate corpora and report statistics")
    sub.add_parser("extract", help="per-domain candidate terms by specificity")
    sub.add_parser("matrix", help="cross-domain candidate matrix")
    sub.add_parser("worklist", help="filtered working list of shared terms")
    p = sub.add_parser("contextonyms", help="contextonym sketch of a lemma")
    p.add_argument("lemma")
    p = sub.add_parser("compare-ctx", help="compare contextonym sets across domains")
    p.add_argument("lemma")
    p = sub.add_parser("hypernyms", help="pattern-based superordinate candidates")
    p.add_argument("lemma")
    p = sub.add_parser("tally", help="tally superordinate candidates by headword")
    p.add_argument("lemma")
    p = sub.add_parser("kb", help="knowledge-base operations")
    p.add_argument("action", choices=["validate", "lint", "export-flexible"])
    p.add_argument("concept", nargs="?")
    return parser


def run(argv):
    args = build_parser().parse_args(argv)
    overrides = {
        "out": args.out,
        "window": args.window,
        "top_n": args.top_n,
        "top_k": args.top_k,
    }
    if args.threshold_mode or args.threshold is not None:
        threshold = {}
        if args.threshold_mode:
            threshold["mode"] = args.threshold_mode
        if args.threshold is not None:
            threshold["fixed"] = args.threshold
            threshold.setdefault("mode", "fixed")
        overrides["threshold"] = threshold
    project = Project(args.config, overrides)
    command = args.command
    if command == "ingest":
        print(project.run_ingest())
    elif command == "extract":
        for path in project.run_extract():
            print(path)
    elif command == "matrix":
        print(project.run_matrix())
    elif command == "worklist":
        print(project.run_worklist())
    elif command == "contextonyms":
        for path in project.run_contextonyms(args.lemma):
            print(path)
    elif command == "compare-ctx":
        print(project.run_compare_ctx(args.lemma))
    elif command == "hypernyms":
        for path in project.run_hypernyms(args.lemma):
            print(path)
    elif command == "tally":
        print(project.run_tally(args.lemma))
    elif command == "kb":
        kb = project.load_kb()
        if args.action == "validate":
            findings = validate_kb(kb)
            for finding in findings:
                print(finding)
            if findings:
                return EXIT_VALIDATION
            print("ok")
        elif args.action == "lint":
            for warning in lint_kb(kb):
                print(warning)
        else:
            if not args.concept:
                raise InputError("export-flexible requires a CONCEPT argument")
            flex = assemble_flexible(args.concept, kb)
            text_path = os.path.join(project.out, "flexible", f"{args.concept}.txt")
            json_path = os.path.join(project.out, "flexible", f"{args.concept}.json")
            _atomic_write(text_path, render_flexible(flex))
            _atomic_write(json_path, flexible_to_json(flex))
            print(json_path)
            print(text_path)
    return EXIT_OK


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except ValidationFailure as exc:
        for violation in exc.violations:
            print(violation, file=sys.stderr)
        return EXIT_VALIDATION
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TermflexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - map unexpected errors to exit 3
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
