"""Search paths for presets and data files: earlier directories shadow later ones."""

# stdlib
from collections.abc import Iterator, Sequence
from pathlib import Path

SearchDirs = Sequence[str | Path]


def _candidates(names: Sequence[str], search_dirs: SearchDirs) -> Iterator[Path]:
    for directory in search_dirs:
        for name in names:
            yield Path(directory) / name


def resolve_path(names: str | Sequence[str], search_dirs: SearchDirs) -> Path:
    """
    First existing file, directory by directory, trying `names` in order within each.

    Args:
        names: A filename, or alternatives such as a plain and a gzipped name.
        search_dirs: Directories in priority order.

    Raises:
        FileNotFoundError: Listing every name and directory searched.
    """
    names = [names] if isinstance(names, str) else list(names)
    found = next((candidate for candidate in _candidates(names, search_dirs) if candidate.is_file()), None)
    if found is None:
        searched = ", ".join(str(Path(d)) for d in search_dirs)
        raise FileNotFoundError(f"none of {names} found in: {searched}")
    return found


def list_files(pattern: str, search_dirs: SearchDirs) -> list[Path]:
    """Files matching a glob across directories, sorted by name; a name is taken from the first directory holding it."""
    found: dict[str, Path] = {}
    for directory in map(Path, search_dirs):
        if directory.is_dir():
            for candidate in sorted(directory.glob(pattern)):
                found.setdefault(candidate.name, candidate)
    return [found[name] for name in sorted(found)]
