#!/usr/bin/env python3
"""Generates the bundled sample source tree under data/sample_corpus/.

Two stand-in languages are produced: `A` (Hack-like, camelCase, `->` member
access) and `B` (Python-like, snake_case, `.` member access). Files are
grouped by origin:

  ide/     snapshots captured while authoring (manifest carries a cursor)
  accept/  files whose identifier sites feed the synthesized acceptance log
  commit/  files from version control, drawn from disjoint projects written
           in a different house style

Output is fully determined by --seed. Re-running overwrites the tree.
"""

import argparse
import json
import os
import random
import shutil

NOUNS = [
    "user", "account", "order", "invoice", "payment", "session", "token",
    "cache", "request", "response", "message", "queue", "report", "profile",
    "item", "cart", "product", "customer", "shipment", "address", "review",
    "rating", "comment", "post", "feed", "event", "metric", "job", "task",
    "schedule", "ticket", "channel", "group", "member", "permission", "role",
    "policy", "document", "folder", "image", "story", "page", "query",
    "record", "batch", "ledger", "wallet", "coupon", "discount", "inventory",
    "warehouse", "vendor", "contract", "budget", "device", "region", "build",
    "release", "alert", "quota",
]
AUTHOR_VERBS = ["get", "fetch", "load", "save", "update", "delete", "create",
                "find", "list", "count", "remove", "add", "validate", "send",
                "process", "sync", "refresh", "notify", "track", "render"]
COMMIT_VERBS = ["retrieve", "persist", "lookup", "compute", "resolve",
                "publish", "archive", "merge", "apply", "format", "check",
                "build", "parse", "collect", "get", "find"]
QUALIFIERS = ["", "", "ById", "ByName", "ForUser", "All", "Active", "Pending",
              "Recent", "Cached", "Batch", "Count"]
FIELDS = ["id", "name", "status", "amount", "owner", "createdAt", "updatedAt",
          "total", "label", "priority", "score", "version", "kind", "limit"]
HELPERS = ["logger", "clock", "metrics", "config", "cache"]
HELPER_METHODS = {
    "logger": ["info", "warn", "error", "debug"],
    "clock": ["now", "elapsedSince", "today"],
    "metrics": ["increment", "recordLatency", "observe"],
    "config": ["getInt", "getString", "isEnabled"],
    "cache": ["getOrNull", "put", "invalidate", "contains"],
}
MESSAGES = ["missing", "invalid", "stale", "done", "retrying", "skipped",
            "loaded", "saved", "timeout", "denied"]


def cap(s):
    return s[0].upper() + s[1:]


def camel_to_snake(name):
    out = []
    for i, ch in enumerate(name):
        if ch.isupper() and i > 0:
            out.append("_")
        out.append(ch.lower())
    return "".join(out)


class Project:
    def __init__(self, rng, name, entities, verbs, style):
        self.rng = rng
        self.name = name
        self.entities = entities
        self.style = style
        self.methods = {}
        self.fields = {}
        for e in entities:
            picks = set()
            while len(picks) < 5:
                verb = rng.choice(verbs)
                qual = rng.choice(QUALIFIERS)
                if verb in ("list", "count", "collect") and not qual:
                    qual = "All"
                picks.add(verb + cap(e) + qual)
            self.methods[e] = sorted(picks)
            self.fields[e] = sorted(rng.sample(FIELDS, 4))

    def repo_class(self, e):
        suffix = "Repository" if self.style == "author" else "Store"
        return cap(e) + suffix


class CodeWriter:
    """Renders the abstract statements of one class into either language."""

    def __init__(self, lang, rng):
        self.lang = lang
        self.rng = rng
        self.lines = []
        self.indent = 0

    def ident(self, camel):
        return camel if self.lang == "A" else camel_to_snake(camel)

    def emit(self, text=""):
        pad = ("  " if self.lang == "A" else "    ") * self.indent
        self.lines.append(pad + text if text else "")

    def member(self, target, name):
        if self.lang == "A":
            return f"{target}->{self.ident(name)}"
        return f"{target}.{self.ident(name)}"

    def self_ref(self):
        return "this" if self.lang == "A" else "self"

    def null(self):
        return "null" if self.lang == "A" else "None"

    def comment(self, text):
        self.emit(("// " if self.lang == "A" else "# ") + text)

    def block_open(self, head):
        if self.lang == "A":
            self.emit(head + " {")
        else:
            self.emit(head + ":")
        self.indent += 1

    def block_close(self):
        self.indent -= 1
        if self.lang == "A":
            self.emit("}")

    def stmt(self, text):
        self.emit(text + (";" if self.lang == "A" else ""))


def write_class(w, project, entity, deps, helpers, style, rng):
    """One service class: constructor wiring plus several methods."""
    svc = cap(entity) + ("Service" if style == "author" else "Manager")
    me = w.self_ref()
    dep_fields = [(d, project.repo_class(d)) for d in deps]
    helper_fields = list(helpers)

    if w.lang == "A":
        w.emit(f"namespace {project.name};")
        w.emit()
        for h in helper_fields:
            w.emit(f"use core\\{cap(h)};")
        w.emit()
        if style == "commit":
            w.emit("/**")
            w.emit(f" * {svc} coordinates {entity} lifecycle operations.")
            w.emit(" */")
        w.block_open(f"final class {svc}")
        for d, cls in dep_fields:
            w.stmt(f"private {cls} {w.ident(d + 'Repository' if style == 'author' else d + 'Store')}")
        for h in helper_fields:
            w.stmt(f"private {cap(h)} {h}")
        w.emit()
        params = ", ".join(
            [f"{cls} {w.ident(d + ('Repository' if style == 'author' else 'Store'))}" for d, cls in dep_fields]
            + [f"{cap(h)} {h}" for h in helper_fields])
        w.block_open(f"public function __construct({params})")
        for d, _ in dep_fields:
            f = w.ident(d + ("Repository" if style == "author" else "Store"))
            w.stmt(f"{me}->{f} = {f}")
        for h in helper_fields:
            w.stmt(f"{me}->{h} = {h}")
        w.block_close()
    else:
        for h in helper_fields:
            w.emit(f"from core.{h} import {cap(h)}")
        w.emit()
        w.emit()
        w.block_open(f"class {svc}")
        if style == "commit":
            w.emit(f'"""{svc} coordinates {entity} lifecycle operations."""')
            w.emit()
        fields = [w.ident(d + ("Repository" if style == "author" else "Store")) for d, _ in dep_fields]
        params = ", ".join(["self"] + fields + helper_fields)
        w.block_open(f"def __init__({params})")
        for f in fields + helper_fields:
            w.stmt(f"self.{f} = {f}")
        w.block_close()

    n_methods = rng.randint(4, 7)
    for _ in range(n_methods):
        w.emit()
        write_method(w, project, entity, dep_fields, helper_fields, style, rng)
    w.block_close()


def write_method(w, project, entity, dep_fields, helpers, style, rng):
    me = w.self_ref()
    dep, _ = rng.choice(dep_fields)
    repo_field = dep + ("Repository" if style == "author" else "Store")
    method = rng.choice(project.methods[dep])
    arg = dep + "Id"
    name = rng.choice(project.methods[entity])
    if w.lang == "A":
        ret = cap(dep) if rng.random() < 0.6 else "void"
        w.block_open(f"public function {w.ident(name)}(int {w.ident(arg)}): {ret}")
    else:
        w.block_open(f"def {w.ident(name)}(self, {w.ident(arg)})")
    var = w.ident(dep)
    call = w.member(w.member(me, repo_field), method)
    w.stmt(f"{var} = {call}({w.ident(arg)})")
    shape = rng.random()
    if shape < 0.35:
        cond = f"{var} === null" if w.lang == "A" else f"{var} is None"
        w.block_open(f"if ({cond})" if w.lang == "A" else f"if {cond}")
        if "logger" in helpers:
            w.stmt(f'{w.member(w.member(me, "logger"), rng.choice(HELPER_METHODS["logger"]))}("{rng.choice(MESSAGES)} {dep}")')
        w.stmt(f"return {w.null()}")
        w.block_close()
    elif shape < 0.6:
        items = w.ident(dep + "s")
        other = rng.choice(project.methods[dep])
        w.stmt(f"{items} = {w.member(w.member(me, repo_field), other)}({w.ident(arg)})")
        field = rng.choice(project.fields[dep])
        acc = w.ident("total" + cap(field))
        w.stmt(f"{acc} = 0")
        if w.lang == "A":
            w.block_open(f"foreach ({items} as {var}Item)")
            w.stmt(f"{acc} = {acc} + {var}Item->{w.ident(field)}")
        else:
            w.block_open(f"for {var}_item in {items}")
            w.stmt(f"{acc} = {acc} + {var}_item.{w.ident(field)}")
        w.block_close()
        if "metrics" in helpers:
            w.stmt(f'{w.member(w.member(me, "metrics"), rng.choice(HELPER_METHODS["metrics"]))}("{w.ident(dep)}", {acc})')
    elif shape < 0.8:
        field = rng.choice(project.fields[dep])
        w.stmt(f"{w.member(var, field)} = {rng.randint(0, 9)}")
        save = [m for m in project.methods[dep] if m.startswith(("save", "update", "persist", "apply"))]
        target = save[0] if save else rng.choice(project.methods[dep])
        w.stmt(f"{w.member(w.member(me, repo_field), target)}({var})")
    else:
        if "cache" in helpers:
            key = w.ident(dep + "Key")
            w.stmt(f'{key} = "{w.ident(dep)}:" + {w.ident(arg)}')
            w.stmt(f'{w.member(w.member(me, "cache"), "put")}({key}, {var})')
        else:
            helper = rng.choice(helpers)
            w.stmt(f"{w.member(w.member(me, helper), rng.choice(HELPER_METHODS[helper]))}({var})")
    if style == "commit" and rng.random() < 0.5:
        w.comment(f"{w.ident(dep)} handled by {w.ident(method)}")
    w.stmt(f"return {var}")
    w.block_close()


def make_projects(rng, prefix, count, verbs, style, nouns):
    projects = []
    for i in range(count):
        entities = rng.sample(nouns, rng.randint(5, 7))
        projects.append(Project(rng, f"{prefix}{i}", entities, verbs, style))
    return projects


def render_file(lang, project, style, rng):
    w = CodeWriter(lang, rng)
    n_classes = rng.randint(2, 3)
    for k in range(n_classes):
        entity = rng.choice(project.entities)
        deps = rng.sample(project.entities, rng.randint(2, 3))
        helpers = rng.sample(HELPERS, rng.randint(2, 3))
        if k:
            w.emit()
            if lang == "B":
                w.emit()
        write_class(w, project, entity, deps, helpers, style, rng)
    return "\n".join(w.lines) + "\n"


def cursor_for(content, rng):
    lo = len(content) // 2
    pos = rng.randint(lo, len(content))
    while pos < len(content) and content[pos] not in " \n":
        pos += 1
    return pos


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "sample_corpus"))
    ap.add_argument("--seed", type=int, default=20210601)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = os.path.abspath(args.out)
    if os.path.exists(out):
        shutil.rmtree(out)

    nouns = list(NOUNS)
    rng.shuffle(nouns)
    author_nouns = nouns[:40]
    commit_nouns = nouns[20:]

    plan = [
        # lang, origin, style, projects, files per project
        ("A", "author", 12, 20),
        ("A", "commit", 10, 12),
        ("B", "author", 6, 20),
    ]
    manifest = []
    for lang, style, n_proj, per_proj in plan:
        projects = make_projects(
            rng, ("hk" if lang == "A" else "py") + ("app" if style == "author" else "lib"),
            n_proj, AUTHOR_VERBS if style == "author" else COMMIT_VERBS, style,
            author_nouns if style == "author" else commit_nouns)
        ext = ".hk" if lang == "A" else ".py"
        for p in projects:
            for f in range(per_proj):
                if style == "commit":
                    origin = "commit"
                elif lang == "A":
                    origin = "ide_snapshot" if f % 2 == 0 else "acceptance_log"
                else:
                    origin = "ide_snapshot" if f % 3 == 0 else "acceptance_log"
                sub = {"ide_snapshot": "ide", "acceptance_log": "accept", "commit": "commit"}[origin]
                rel = os.path.join(lang, sub, p.name, f"file{f:02d}{ext}")
                content = render_file(lang, p, style, rng)
                path = os.path.join(out, rel)
                os.makedirs(os.path.dirname(path), exist_ok=True)
                with open(path, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(content)
                entry = {"path": rel, "language": lang, "origin": origin}
                if origin == "ide_snapshot":
                    entry["cursor_offset"] = len(content.encode("utf-8")[:cursor_for(content, rng)])
                manifest.append(entry)
    manifest.sort(key=lambda e: e["path"])
    with open(os.path.join(out, "manifest.jsonl"), "w", encoding="utf-8") as fh:
        for e in manifest:
            fh.write(json.dumps(e, sort_keys=True) + "\n")
    print(f"wrote {len(manifest)} files to {out}")


if __name__ == "__main__":
    main()
