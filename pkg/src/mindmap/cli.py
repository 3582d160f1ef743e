"""Command-line entry point: expand | generate | report | classify.

Every subcommand exits 0 on success and nonzero with a one-line
diagnostic on failure.  Output files are written to a temporary name
and renamed, so a crash never leaves a partial file behind.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import __version__
from .config import RunConfig, load_config, load_stores, load_word_list, parse_quota_key
from .errors import ConfigurationError, MindMapError
from .evaluation import compare_configs
from .generator import export_trace, generate, render_svg
from .mixer import Provenance, baseline_config, expand


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _build_parser() -> argparse.ArgumentParser:
    assets = argparse.ArgumentParser(add_help=False)
    assets.add_argument("--config", type=Path, help="TOML config file; flags override it")
    for name in ("embeddings", "phonetic", "pos", "domains", "graph", "prototypes"):
        assets.add_argument(f"--{name}", type=Path, help=f"path to the {name} file")
    assets.add_argument("--rng-seed", type=int, help="sampling seed (default 0)")
    assets.add_argument("--max-candidates", type=int, help="cap per expansion (default 7)")

    parser = argparse.ArgumentParser(
        prog="mindmap",
        description="Generate artistic mind maps by four-strategy word expansion.",
    )
    parser.add_argument("--version", action="version", version=f"mindmap {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", parents=[assets], help="print one seed's candidate table")
    p_expand.add_argument("seed")
    p_expand.add_argument(
        "--quota",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="override a mixing quota, e.g. --quota semantic=1 (repeatable; must sum to 1)",
    )

    p_generate = sub.add_parser("generate", parents=[assets], help="write an SVG map and its trace")
    p_generate.add_argument("seeds", nargs="+")
    p_generate.add_argument("--iterations", type=int, help="frontier rounds (default 28)")
    p_generate.add_argument("--out", type=Path, default=Path("."), help="output directory")

    p_report = sub.add_parser(
        "report", parents=[assets], help="baseline-vs-proposed provenance distributions"
    )
    p_report.add_argument("seed_file", type=Path, help="seed list, one word per line")
    p_report.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p_report.add_argument("--json", action="store_true", help="also write report.json")

    p_classify = sub.add_parser("classify", parents=[assets], help="painting domain of one word")
    p_classify.add_argument("word")
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    for name in ("embeddings", "phonetic", "pos", "domains", "graph", "prototypes"):
        value = getattr(args, name)
        if value is not None:
            setattr(cfg, name, value)
    mix = cfg.generation.mix
    if args.rng_seed is not None:
        mix = dataclasses.replace(mix, rng_seed=args.rng_seed)
    if args.max_candidates is not None:
        mix = dataclasses.replace(mix, max_candidates=args.max_candidates)
    if getattr(args, "quota", None):
        quotas = {p: 0.0 for p in Provenance}
        for item in args.quota:
            name, sep, value = item.partition("=")
            if not sep:
                raise ConfigurationError(f"--quota expects NAME=VALUE, got {item!r}")
            quotas[parse_quota_key(name)] = float(value)
        mix = dataclasses.replace(mix, quotas=quotas)
    cfg.generation = dataclasses.replace(cfg.generation, mix=mix)
    if getattr(args, "iterations", None) is not None:
        cfg.generation = dataclasses.replace(cfg.generation, iterations=args.iterations)
    return cfg


def _cmd_expand(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    stores, _ = load_stores(cfg)
    candidates = expand(args.seed, cfg.generation.mix, stores)
    word_width = max([len(c.word) for c in candidates] + [4])
    print(f"{'word':<{word_width}}  {'provenance':<20}  {'similarity':>10}  detail")
    for c in candidates:
        sim = f"{c.similarity:.4f}" if c.similarity is not None else "--"
        print(f"{c.word:<{word_width}}  {c.provenance.label:<20}  {sim:>10}  {c.detail}")
    return 0


def _safe_stem(seeds: list[str]) -> str:
    stem = "-".join(seeds)
    return "".join("_" if ch in '/\\:*?"<>|' else ch for ch in stem) or "mindmap"


def _cmd_generate(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    stores, prototypes = load_stores(cfg)
    mind_map = generate(args.seeds, cfg.generation, stores, prototypes)
    out_dir: Path = args.out
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = _safe_stem(args.seeds)
    svg_path = out_dir / f"{stem}.svg"
    trace_path = out_dir / f"{stem}.trace.json"
    _atomic_write(svg_path, render_svg(mind_map))
    _atomic_write(trace_path, export_trace(mind_map))
    print(svg_path)
    print(trace_path)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    stores, _ = load_stores(cfg)
    seeds = load_word_list(args.seed_file)
    if not seeds:
        raise ConfigurationError(f"seed file {args.seed_file} is empty")
    mix = cfg.generation.mix
    baseline, proposed = compare_configs(
        seeds,
        baseline_config(mix.max_candidates, mix.rng_seed),
        mix,
        stores,
        cfg.thresholds,
    )
    print(baseline.to_text())
    print()
    print(proposed.to_text())
    if args.json:
        args.out.mkdir(parents=True, exist_ok=True)
        path = args.out / "report.json"
        payload = {"baseline": baseline.to_dict(), "proposed": proposed.to_dict()}
        _atomic_write(path, json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n")
        print(f"\n{path}")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    cfg = _run_config(args)
    stores, prototypes = load_stores(cfg)
    from .scene import classify_domain, painting_element

    domain, confidence = classify_domain(args.word, prototypes, stores.embeddings)
    element = painting_element(domain)
    print(f"{args.word}\t{domain.value}\tconfidence={confidence:.4f}\tglyph={element.glyph}")
    return 0


_COMMANDS = {
    "expand": _cmd_expand,
    "generate": _cmd_generate,
    "report": _cmd_report,
    "classify": _cmd_classify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except MindMapError as exc:
        print(f"mindmap {args.command}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"mindmap {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
