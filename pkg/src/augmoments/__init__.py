"""Augmoments: exact moments of data augmentation for image transforms."""

__version__ = "0.1.0"

from .Experiment import Experiment as Experiment
