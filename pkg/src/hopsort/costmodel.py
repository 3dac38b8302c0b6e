"""Closed-form work model for the hop-link sort.

``predicted_cost`` counts abstract merge work units -- node visits and
relinks as well as inspections -- so it tracks the *trend* of measured
comparison counts (flat in n per element once k is fixed) rather than their
magnitude.  Reports print both and never conflate them.
"""

from __future__ import annotations

import math


def predicted_cost(n: int, k: int) -> float:
    """Predicted total work for length ``n`` with ``k`` distinct keys.

    All-distinct inputs (k == n) cost n + n*log2(n); duplicated inputs
    (k < n) cost 2n + n*log2(k) - k.  The two branches agree at k == n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k < 1 or k > n:
        raise ValueError(f"k must be in 1..n (n={n}), got {k}")
    if k == n:
        return n + n * math.log2(n)
    return 2 * n + n * math.log2(k) - k


def per_element(total: float, n: int) -> float:
    """Average work or comparisons per element; table output prints 5 decimals."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return total / n
