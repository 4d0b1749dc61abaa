"""Markdown files with YAML frontmatter, as used by experiment presets."""

# stdlib
from pathlib import Path
from typing import Any

# third party
import frontmatter

# local
from augmoments.errors import FormatError


def load_markdown_with_frontmatter(file_path: str | Path) -> tuple[dict[str, Any], str]:
    """Return (metadata, body) of a Markdown file.

    Raises:
        FileNotFoundError: If the file does not exist.
        FormatError: If the frontmatter is not valid YAML.
    """
    path = Path(file_path)
    if not path.is_file():
        raise FileNotFoundError(f"Markdown file not found: {path}")

    try:
        post = frontmatter.loads(path.read_text(encoding="utf-8"))
    except Exception as e:
        raise FormatError(f"Failed to parse markdown frontmatter in {path}: {e!s}") from e
    return dict(post.metadata), post.content
