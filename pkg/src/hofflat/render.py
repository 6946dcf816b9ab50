"""Report renderers for the command-line tool"""

import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List, NamedTuple

import yaml


class Report(NamedTuple):
    """Outcome of a command: JSON-able payload plus human-readable lines"""

    payload: Any
    lines: List[str]


class Renderer(ABC):
    """Abstract base class for all renderers"""

    @abstractmethod
    def render(self, report: Report) -> None:
        """Print a report to standard output"""


class TextRenderer(Renderer):
    """Renders the human-readable lines"""

    def render(self, report: Report) -> None:
        for line in report.lines:
            print(line)


class JSONRenderer(Renderer):
    """Renders the payload as JSON"""

    def render(self, report: Report) -> None:
        print(json.dumps(report.payload, indent=2, ensure_ascii=False))


class YAMLRenderer(JSONRenderer):
    """Renders the payload as YAML"""

    def render(self, report: Report) -> None:
        print(
            yaml.dump(
                report.payload,
                indent=2,
                allow_unicode=True,
                default_flow_style=False,
                sort_keys=False,
            ),
            end="",
        )


RENDERERS: Dict[str, type] = {
    "text": TextRenderer,
    "json": JSONRenderer,
    "yaml": YAMLRenderer,
}


def get_renderer(name: str) -> Renderer:
    try:
        return RENDERERS[name]()
    except KeyError:
        raise ValueError(f"Unknown format: {name}") from None
