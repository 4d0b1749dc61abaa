"""Experiment presets: Markdown files whose frontmatter holds RunConfig fields."""

# stdlib
from pathlib import Path
from typing import Any

# local
from augmoments.loaders.load_markdown_with_frontmatter import load_markdown_with_frontmatter
from augmoments.utils import list_files, resolve_path


def preset_dirs() -> list[Path]:
    """./presets shadows the packaged presets."""
    return [Path.cwd() / "presets", Path(__file__).parent.parent / "presets"]


def load_preset(name: str) -> dict[str, Any]:
    """Frontmatter of preset `name`, with the Markdown body under 'description'."""
    metadata, content = load_markdown_with_frontmatter(resolve_path(f"{name}.md", preset_dirs()))
    return {**metadata, "description": content.strip()}


def list_presets() -> list[tuple[str, str]]:
    """(name, first description line) of every available preset."""
    presets = []
    for path in list_files("*.md", preset_dirs()):
        _, content = load_markdown_with_frontmatter(path)
        summary = content.strip().splitlines()[0] if content.strip() else ""
        presets.append((path.stem, summary))
    return presets
