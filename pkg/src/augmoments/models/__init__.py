"""Data models for grids, images, distributions, moments and run configuration."""
