"""Symmetric special biserial algebras Γ(p,q;r), Λ(p,q;s,t) and N_m^n."""

import json

from ._core import (
    Algebra,
    SSBError,
    build,
    canonical_spec,
    classify,
    derived_normal_form,
    dot,
    emit,
    run_suite,
    verify_explicit_iso,
)


def invariants(source, char=None, hh_max_degree=1):
    """Same keys as `ssb invariants --json`."""
    return json.loads(build(source, char)._report(hh_max_degree))


__all__ = [
    "Algebra",
    "SSBError",
    "build",
    "canonical_spec",
    "classify",
    "derived_normal_form",
    "dot",
    "emit",
    "invariants",
    "run_suite",
    "verify_explicit_iso",
]
