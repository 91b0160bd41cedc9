"""Executable checks of the structural identities and conjectures."""
from .harness import CHECKS, CONJECTURES, REGISTRY, THEOREMS, instances, scan, verify
from .verdict import Bounds, Verdict

__all__ = ["Bounds", "CHECKS", "CONJECTURES", "REGISTRY", "THEOREMS", "Verdict",
           "instances", "scan", "verify"]
