#!/usr/bin/env python3
# Copyright 2026 The OntoWeave Authors
# SPDX-License-Identifier: Apache-2.0
"""Counts chunks, entities, labels and OWL axioms in .lont fixtures.

Written against the surface syntax only; it shares no code with the C++
reader. `--check FILE` compares against frozen counts and exits non-zero on
any difference.
"""

import argparse
import csv
import json
import re
import sys
from pathlib import Path

TOKEN = re.compile(r'\s+|;[^\n]*|\(|\)|"(?:[^"\\]|\\.)*"|[^\s()";]+')

HEADS = {
    "defontology": "ontology",
    "defclass": "class",
    "defoproperty": "property",
    "defindividual": "individual",
}


def chunks(text):
    out = []
    current = None
    for line in text.split("\n"):
        if not line.strip():
            current = None
            continue
        kind = "narrative" if line.lstrip().startswith(";;") else "code"
        if current is None or current[0] != kind:
            current = [kind, []]
            out.append(current)
        current[1].append(line)
    return [(kind, "\n".join(lines)) for kind, lines in out]


def read_sexprs(code):
    stack = [[]]
    for m in TOKEN.finditer(code):
        tok = m.group(0)
        if tok.isspace() or tok.startswith(";"):
            continue
        if tok == "(":
            stack.append([])
        elif tok == ")":
            done = stack.pop()
            stack[-1].append(done)
        else:
            stack[-1].append(tok)
    assert len(stack) == 1, "unbalanced parentheses"
    return stack[0]


def options(form):
    opts = {}
    key = None
    for item in form[2:]:
        if isinstance(item, str) and item.startswith(":"):
            key = item
            opts.setdefault(key, [])
        else:
            opts[key].append(item)
    return opts


def axioms(kind, opts):
    n = lambda k: len(opts.get(k, []))
    present = lambda k: 1 if n(k) else 0
    documentation = n(":label") + n(":comment")
    if kind == "class":
        return 1 + n(":super") + present(":equivalent") + present(":disjoint") + documentation
    if kind == "property":
        return (1 + n(":super") + n(":domain") + n(":range") +
                n(":characteristic") + documentation)
    if kind == "individual":
        return 1 + n(":type") + n(":fact") + documentation
    return 0


def scan(text):
    found = chunks(text)
    entities = {}
    axiom_total = 0
    for kind, body in found:
        if kind != "code":
            continue
        for form in read_sexprs(body):
            head, name = form[0], form[1]
            entity_kind = HEADS[head]
            entities[name] = entity_kind
            axiom_total += axioms(entity_kind, options(form))
    per_kind = {}
    for k in entities.values():
        per_kind[k] = per_kind.get(k, 0) + 1
    return {
        "chunks": len(found),
        "code_chunks": sum(1 for k, _ in found if k == "code"),
        "narrative_chunks": sum(1 for k, _ in found if k == "narrative"),
        "entities": len(entities),
        "entities_by_kind": dict(sorted(per_kind.items())),
        "axioms": axiom_total,
        "names": sorted(entities),
    }


def bundle_identifiers(text):
    names = set()
    section = None
    for line in text.split("\n"):
        line = line.strip()
        if line.startswith("["):
            section = line
        elif section == "[identifiers]" and "=" in line:
            names.add(line.split("=", 1)[0].strip())
    return names


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("fixtures", type=Path)
    parser.add_argument("--check", type=Path)
    args = parser.parse_args()
    d = args.fixtures

    result = {}
    for name in ("pizza", "aminoacid"):
        result[name] = scan((d / f"{name}.lont").read_text(encoding="utf-8"))
    for bundle in ("it", "ar"):
        covered = bundle_identifiers((d / f"{bundle}.lb").read_text(encoding="utf-8"))
        for name in ("pizza", "aminoacid"):
            result[name][f"covered_by_{bundle}"] = len(set(result[name]["names"]) & covered)
    pizza = result["pizza"]
    pizza["injected_labels_it_ar"] = pizza["covered_by_it"] + pizza["covered_by_ar"]

    with open(d / "pizzas.csv", newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    result["pizzas_csv"] = {
        "rows": len(rows),
        "distinct_names": len({r["name"] for r in rows}),
    }

    if args.check:
        frozen = json.loads(args.check.read_text(encoding="utf-8"))
        if frozen != result:
            json.dump(result, sys.stdout, indent=2, ensure_ascii=False)
            print("\nfrozen counts differ from the fixtures", file=sys.stderr)
            return 1
        print("fixture counts match")
        return 0
    json.dump(result, sys.stdout, indent=2, ensure_ascii=False)
    print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
