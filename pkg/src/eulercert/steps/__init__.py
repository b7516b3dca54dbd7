"""pypyr steps for eulercert pipelines.

Each module exposes ``run_step(context)`` and is referenced by dotted name
from the YAML files in ``eulercert/pipelines/``.
"""
