"""Reports: a subject plus ordered sections, rendered as text or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass
class Section:
    title: str
    # a string, or a table given as a list of rows (dicts with the same keys)
    content: Any


@dataclass
class Report:
    subject: str
    command: str = ""
    status: str = "ok"
    sections: list[Section] = field(default_factory=list)

    def add(self, title: str, content) -> Report:
        self.sections.append(Section(title, content))
        return self

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "subject": self.subject,
            "status": self.status,
            "sections": [{"title": s.title, "content": s.content} for s in self.sections],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        return cls(data["subject"], data.get("command", ""), data.get("status", "ok"),
                   [Section(s["title"], s["content"]) for s in data["sections"]])

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"== {self.subject} ==", f"status: {self.status}"]
        for s in self.sections:
            lines.append("")
            lines.append(f"-- {s.title}")
            lines.extend(_render(s.content))
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _render(content) -> list[str]:
    if isinstance(content, str):
        return content.splitlines() or [""]
    if isinstance(content, dict):
        width = max((len(str(k)) for k in content), default=0)
        return [f"{str(k).ljust(width)} : {_cell(v)}" for k, v in content.items()]
    if isinstance(content, list):
        if not content:
            return ["(none)"]
        if all(isinstance(r, dict) for r in content):
            keys = list(content[0])
            for r in content[1:]:
                keys += [k for k in r if k not in keys]
            cells = [[_cell(r.get(k, "")) for k in keys] for r in content]
            widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
            head = "  ".join(k.ljust(w) for k, w in zip(keys, widths))
            out = [head.rstrip(), "  ".join("-" * w for w in widths)]
            out += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
            return out
        return [f"- {_cell(r)}" for r in content]
    return [_cell(content)]


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_cell(x)}" for k, x in v.items()) + "}"
    return str(v)
