"""Object class registry and surface-form (synonym) tables.

Classes are loaded from plain-text data files shipped with the package:
``object_classes.txt`` (45 graspable + 16 receptacle classes under
``[graspable]`` / ``[receptacle]`` section headers, one class per line) and
``synonyms.txt`` (``class: form1, form2, ...``).
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

from .errors import DomainError

N_GRASPABLE = 45
N_RECEPTACLE = 16

# Global room-kind vocabulary. The default world uses the first four; the
# order fixes room ids, message-bit positions and GotoRoom action indices.
ROOM_KINDS = ("kitchen", "bedroom", "bathroom", "livingroom", "diningroom", "office")

GROUND_AGENT_CLASS = "ground_agent"
DRONE_AGENT_CLASS = "drone_agent"

# Receptacle classes that carry an open/closed state flag in observations.
CLOSABLE_RECEPTACLES = frozenset({"cabinet", "dresser", "game_box", "nightstand"})

# Node state ids used by scene graphs and the state-embedding table.
STATE_DEFAULT = 0
STATE_PLACED = 1
STATE_HELD = 2
STATE_OPEN = 3
STATE_CLOSED = 4
N_NODE_STATES = 5


def _read_data_text(name: str) -> str:
    return importlib.resources.files("coophome.data").joinpath(name).read_text(encoding="utf-8")


def _parse_class_file(text: str) -> dict[str, list[str]]:
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = sections.setdefault(line[1:-1], [])
        elif current is not None:
            current.append(line)
    return sections


def _parse_synonym_file(text: str) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, forms = line.partition(":")
        table[name.strip()] = tuple(f.strip() for f in forms.split(",") if f.strip())
    return table


@dataclass(frozen=True)
class ObjectRegistry:
    """The fixed class vocabulary: graspables, receptacles and surface forms."""

    graspable_classes: tuple[str, ...]
    receptacle_classes: tuple[str, ...]
    synonyms: dict[str, tuple[str, ...]] = field(repr=False)

    def __post_init__(self):
        if len(self.graspable_classes) != N_GRASPABLE:
            raise DomainError(
                f"expected {N_GRASPABLE} graspable classes, got {len(self.graspable_classes)}"
            )
        if len(self.receptacle_classes) != N_RECEPTACLE:
            raise DomainError(
                f"expected {N_RECEPTACLE} receptacle classes, got {len(self.receptacle_classes)}"
            )
        combined = self.graspable_classes + self.receptacle_classes
        if len(set(combined)) != len(combined):
            raise DomainError("class names must be unique across graspables and receptacles")

    @property
    def all_node_classes(self) -> tuple[str, ...]:
        """Every class a scene-graph node can carry, in fixed embedding order."""
        return (
            self.graspable_classes
            + self.receptacle_classes
            + ROOM_KINDS
            + (GROUND_AGENT_CLASS, DRONE_AGENT_CLASS)
        )

    def class_id(self, name: str) -> int:
        try:
            return self.all_node_classes.index(name)
        except ValueError:
            raise DomainError(f"unknown object class: {name!r}") from None

    def class_name(self, class_id: int) -> str:
        classes = self.all_node_classes
        if not 0 <= class_id < len(classes):
            raise DomainError(f"class id out of range: {class_id}")
        return classes[class_id]

    def is_graspable(self, name: str) -> bool:
        return name in self.graspable_classes

    def is_receptacle(self, name: str) -> bool:
        return name in self.receptacle_classes

    def surface_forms(self, name: str) -> tuple[str, ...]:
        forms = self.synonyms.get(name)
        if not forms:
            raise DomainError(f"class missing from synonym table: {name!r}")
        return forms

    def canonical_form(self, name: str) -> str:
        return self.surface_forms(name)[0]


def load_registry() -> ObjectRegistry:
    """Load the packaged class registry and synonym table."""
    sections = _parse_class_file(_read_data_text("object_classes.txt"))
    return ObjectRegistry(
        graspable_classes=tuple(sections.get("graspable", ())),
        receptacle_classes=tuple(sections.get("receptacle", ())),
        synonyms=_parse_synonym_file(_read_data_text("synonyms.txt")),
    )


_DEFAULT: ObjectRegistry | None = None


def default_registry() -> ObjectRegistry:
    """Singleton registry; the class tables are immutable package data."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = load_registry()
    return _DEFAULT
