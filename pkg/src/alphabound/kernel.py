"""High-degree peeling: shrink "alpha(G) <= p - k?" to a bounded-size graph.

Let p be the counting bound of ``bounds.nonedge_bound``.  Any independent
set of size p - k + 1 consists of vertices with degree at most
n - (p - k + 1), so deleting every vertex of degree >= n - p + k (degrees
measured in the input graph, all deletions simultaneous) preserves the
answer exactly: alpha(G) <= p - k iff the peeled graph has no independent
set of size p - k + 1.

For p >= 2k + 1 the peeled graph has at most p + 2k + 1 vertices and,
strictly, fewer than p(p+1)/(p-k); the follow-up cover search therefore
needs budget at most n0 - (p - k + 1) <= 3k.  Below p = 2k + 1 the
routine refuses instead of returning something weaker.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bounds import nonedge_bound
from .errors import ParameterError
from .graph import Graph

__all__ = [
    "KernelResult",
    "kernelize",
    "kernel_size_bound",
    "kernel_size_bound_scaled",
]


@dataclass(frozen=True)
class KernelResult:
    """Outcome of peeling: the reduced graph plus the bookkeeping around it.

    ``mapping[new_id] = original_id`` for the kernel's vertices;
    ``removed`` lists the peeled original ids ascending.  ``budget_t`` is
    the vertex-cover budget n0 - (p - k + 1) for the follow-up search; it
    may be negative, in which case (as with ``trivially_yes``) the kernel
    is already too small to hold an independent set of size p - k + 1.
    """

    kernel: Graph
    removed: tuple[int, ...]
    mapping: tuple[int, ...]
    n0: int
    p: int
    k: int
    budget_t: int
    trivially_yes: bool


def kernelize(g: Graph, k: int) -> KernelResult:
    """Peel every vertex of degree >= n - p + k in one simultaneous pass.

    Requires k >= 0 and p >= 2k + 1 (ParameterError otherwise; the
    answer-preservation argument needs the headroom).  Work is one degree
    scan plus the induced subgraph build.
    """
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}")
    p = nonedge_bound(g)
    if p < 2 * k + 1:
        raise ParameterError(
            f"peeling needs p >= 2k + 1, got p={p}, k={k} (n={g.n}, m={g.m})"
        )
    n = g.n
    threshold = n - p + k
    degrees = g.degrees()
    keep = [v for v in range(n) if degrees[v] < threshold]
    removed = tuple(v for v in range(n) if degrees[v] >= threshold)
    kernel, mapping = g.induced_subgraph(keep)
    n0 = kernel.n
    return KernelResult(
        kernel=kernel,
        removed=removed,
        mapping=mapping,
        n0=n0,
        p=p,
        k=k,
        budget_t=n0 - (p - k + 1),
        trivially_yes=n0 <= p - k,
    )


def kernel_size_bound(p: int, k: int) -> int:
    """The guaranteed kernel-order ceiling p + 2k + 1, valid for p >= 2k + 1."""
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}")
    if p < 2 * k + 1:
        raise ParameterError(f"size bound needs p >= 2k + 1, got p={p}, k={k}")
    return p + 2 * k + 1


def kernel_size_bound_scaled(p: int, k: int, c) -> Fraction:
    """Kernel-order ceiling p + c/(c-1) * (k+1) under the scaling p >= c*k, c > 1.

    ``c`` may be any rational (int, Fraction, or float taken at exact
    value).  Exact rational arithmetic; the caller decides how to round.
    """
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}")
    c = Fraction(c)
    if c <= 1:
        raise ParameterError(f"scale must exceed 1, got {c}")
    if p < c * k:
        raise ParameterError(f"scaled bound needs p >= c*k, got p={p}, c={c}, k={k}")
    return Fraction(p) + c / (c - 1) * (k + 1)
