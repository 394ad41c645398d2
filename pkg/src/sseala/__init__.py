"""Exact verification of graded Lie algebras built from skew-symmetric rational matrices.

Everything here computes over exact rationals; there is no floating point in
any check. The package exposes algebra constructors, a structure-constant
bracket engine, degree-filtration tooling, module builders, and a CLI
(``sseala``) that runs the verification suites and writes deterministic JSON
reports.
"""

from __future__ import annotations

__version__ = "0.1.0"
