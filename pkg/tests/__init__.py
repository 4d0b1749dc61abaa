"""Tests for the augmoments package."""
