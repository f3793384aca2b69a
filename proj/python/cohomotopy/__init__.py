"""Cohomotopy sets of smooth closed oriented connected 4-manifolds.

The heavy lifting happens in the compiled extension; this package adds
thin dict-returning wrappers around the JSON surfaces.
"""

import json as _json

from ._core import (
    DocumentParseError,
    FinAbGroup,
    ManifoldData,
    catalog_get,
    catalog_names,
    classify_extension,
    connected_sum,
    e_nk,
    extension_check,
    extension_oracle,
    f1_group,
    fiber_group,
    group_from_orders,
    h2_zero_classes,
    is_spin,
    is_twisted_2class,
    manifold_from_json,
    manifold_to_json,
    manifold_type,
    parity,
    report_json,
    report_text,
    self_intersection,
    simply_connected,
    smith_normal_form,
    surgered_example,
)

__all__ = [
    "DocumentParseError",
    "FinAbGroup",
    "ManifoldData",
    "catalog_get",
    "catalog_names",
    "classify_extension",
    "connected_sum",
    "e_nk",
    "extension_check",
    "extension_oracle",
    "f1_group",
    "fiber_group",
    "group_from_orders",
    "h2_zero_classes",
    "is_spin",
    "is_twisted_2class",
    "manifold",
    "manifold_from_json",
    "manifold_to_json",
    "manifold_type",
    "parity",
    "report",
    "report_json",
    "report_text",
    "self_intersection",
    "simply_connected",
    "smith_normal_form",
    "surgered_example",
]


def report(x, bound=5, radius=5):
    """Full cohomotopy report as a dict (see report_text for prose)."""
    return _json.loads(report_json(x, bound, radius))


def manifold(doc):
    """Build a ManifoldData from a document dict or JSON string."""
    if isinstance(doc, str):
        return manifold_from_json(doc)
    return manifold_from_json(_json.dumps(doc))
