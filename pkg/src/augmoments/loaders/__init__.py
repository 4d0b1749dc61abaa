"""Loaders for experiment presets."""

from .load_markdown_with_frontmatter import load_markdown_with_frontmatter as load_markdown_with_frontmatter
from .load_preset import list_presets as list_presets
from .load_preset import load_preset as load_preset
from .load_preset import preset_dirs as preset_dirs
