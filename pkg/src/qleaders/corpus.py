"""The bundled fixture codes and path resolution for them."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .code import DEFAULT_MAX_ENUM, LinearCode


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    path: Path
    expected: Path | None = None

    def load(self, max_enum: int = DEFAULT_MAX_ENUM) -> LinearCode:
        return LinearCode.load(self.path, max_enum)


def fixture_dir() -> Path:
    return Path(str(resources.files("qleaders") / "fixtures"))


def corpus() -> list[CorpusEntry]:
    out = []
    for path in sorted(fixture_dir().glob("*.code")):
        expected = path.with_suffix(".expected")
        out.append(CorpusEntry(path.stem, path, expected if expected.exists() else None))
    return out


def resolve(path: str | Path) -> Path:
    """A real file wins; otherwise ``fixtures/<name>.code`` or a bare name
    is looked up among the bundled fixtures."""
    path = Path(path)
    if path.exists():
        return path
    bundled = fixture_dir() / path.name
    if bundled.exists():
        return bundled
    bundled = bundled.with_suffix(".code")
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no such code file: {path}")


def load(path: str | Path, max_enum: int = DEFAULT_MAX_ENUM) -> LinearCode:
    return LinearCode.load(resolve(path), max_enum)
