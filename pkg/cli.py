"""
Anelo: verificação exaustiva de propriedades de anéis finitos.

Run:  python cli.py sets "K(Z4,2)" --pretty
      python cli.py verify --check CHK-theorem-j --jobs 4
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from cache_store import load_or_compute
from catalog import DEFAULT_CATALOG, build_subject, load_catalog
from checks import REGISTRY
from classifiers import decompositions, parse_kind, ring_class_report
from config import configure, get_settings, reset_settings
from constructions.base import ensure_index
from errors import AneloError, InternalInconsistency, SizeExceeded
from harness import run_suite
from structure_sets import SET_NAMES, sets_summary_text
from table_loader import ring_summary

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE = 3


def _emit(payload: Any) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2, default=int))


# ─────────────────────────────────────────────────────────────────
# Subcommands
# ─────────────────────────────────────────────────────────────────


def cmd_sets(args: argparse.Namespace) -> int:
    ring = build_subject(args.expr).ring
    sets = load_or_compute(ring)
    if args.json:
        payload: dict[str, Any] = {"label": ring.label, "order": ring.order, "sets": sets.to_dict()}
        if args.pretty:
            payload["rendered"] = {name: [ring.render(i) for i in getattr(sets, name)] for name in SET_NAMES}
        _emit(payload)
    elif args.table:
        print(ring_summary(ring, sets))
    else:
        print(sets_summary_text(ring, sets, pretty=args.pretty))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    ring = build_subject(args.expr).ring
    load_or_compute(ring)
    report = ring_class_report(ring)
    if args.json:
        _emit(report.to_dict())
        return EXIT_OK
    print(f"Classificação de {report.label} (ordem {report.order}):")
    for name, value in report.flags().items():
        print(f"  • {name:<24} {'sim' if value else 'não'}")
    if report.witnesses:
        print("\nTestemunhas:")
        for name, witness in report.witnesses.items():
            print(f"  • {name}: {witness}")
    for note in report.notes:
        print(f"\nNota: {note}")
    return EXIT_OK


def cmd_element(args: argparse.Namespace) -> int:
    ring = build_subject(args.expr).ring
    a = ensure_index(args.index, ring.order, "element")
    kind = parse_kind(args.kind)
    found = decompositions(ring, a, kind)
    if args.json:
        _emit({
            "label": ring.label,
            "element": a,
            "kind": kind.value,
            "decompositions": [
                {**d.to_dict(), "rendered": {"e": ring.render(d.idempotent), "j": ring.render(d.complement)}}
                for d in found
            ],
        })
        return EXIT_OK
    print(f"{ring.render(a)} em {ring.label}: {len(found)} decomposição(ões) {kind.value}")
    for d in found:
        flag = "" if d.commuting else "  (não comutam)"
        print(f"  • e = {ring.render(d.idempotent)} [{d.idempotent}], j = {ring.render(d.complement)} [{d.complement}]{flag}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    subjects = load_catalog(args.catalog)
    report = run_suite(subjects, args.check or None, jobs=args.jobs)
    if args.json:
        print(report.to_json_lines(timing=not args.no_timing))
    else:
        print(report.summary_text())
        for r in report.failures():
            print(f"\nFALHA {r.check_id} em {r.subject}: {json.dumps(r.witness, ensure_ascii=False, default=int)}")
            if r.note:
                print(f"  nota: {r.note}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_catalog(args: argparse.Namespace) -> int:
    subjects = load_catalog(args.catalog)
    rows = [
        {"expr": s.expr, "label": s.label, "order": s.ring.order, "build_seconds": round(s.build_seconds, 4)}
        for s in subjects
    ]
    if args.json:
        _emit(rows)
        return EXIT_OK
    print(f"Catálogo {args.catalog or DEFAULT_CATALOG} ({len(rows)} anéis):")
    for row in rows:
        print(f"  • {row['expr']:<20} ordem {row['order']:>5}   {row['build_seconds']:.3f}s")
    return EXIT_OK


def cmd_checks(args: argparse.Namespace) -> int:
    if args.json:
        _emit([{"check_id": c.check_id, "statement": c.statement} for c in REGISTRY.values()])
        return EXIT_OK
    for check in REGISTRY.values():
        print(f"{check.check_id:<26} {check.statement}")
    return EXIT_OK


# ─────────────────────────────────────────────────────────────────
# Parser
# ─────────────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="anelo", description="Anéis finitos, conjuntos J# e limpeza forte.")
    parser.add_argument("--cap", type=int, default=None, help="ordem máxima de um anel construído")
    parser.add_argument("--cache", default=None, help="diretório do cache de conjuntos estruturais")
    parser.add_argument("--no-cache", action="store_true", help="não lê nem grava o cache")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="saída JSON")
        p.set_defaults(handler=handler)
        return p

    p = command("sets", cmd_sets, "os sete conjuntos estruturais de um anel")
    p.add_argument("expr")
    p.add_argument("--pretty", action="store_true", help="renderiza os elementos")
    p.add_argument("--table", action="store_true", help="tabela com tamanho, fração e amostra de cada conjunto")

    p = command("classify", cmd_classify, "relatório de classes do anel")
    p.add_argument("expr")

    p = command("element", cmd_element, "decomposições a = e + j de um elemento")
    p.add_argument("expr")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--kind", default="strongly-jsharp-clean")

    p = command("verify", cmd_verify, "executa as verificações sobre o catálogo")
    p.add_argument("--catalog", type=Path, default=None)
    p.add_argument("--check", action="append", default=[], metavar="ID")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omite elapsed_s das linhas JSON")

    p = command("catalog", cmd_catalog, "lista o catálogo com ordens e tempos de construção")
    p.add_argument("--catalog", type=Path, default=None)

    command("checks", cmd_checks, "lista as verificações registradas")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    overrides: dict[str, Any] = {}
    if args.cap is not None:
        overrides["order_cap"] = args.cap
    if args.cache:
        overrides["cache_dir"] = Path(args.cache)
    if args.no_cache:
        overrides["cache_enabled"] = False
    settings = configure(**overrides) if overrides else get_settings()
    logging.basicConfig(level=getattr(logging, settings.log_level, logging.INFO), stream=sys.stderr)

    try:
        return args.handler(args)
    except SizeExceeded as exc:
        print(f"Erro: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InternalInconsistency:
        log.exception("invariant broken")
        return EXIT_CHECK_FAILED
    except (AneloError, ValueError, KeyError, OSError) as exc:
        print(f"Erro: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if overrides:
            reset_settings()


if __name__ == "__main__":
    sys.exit(main())
