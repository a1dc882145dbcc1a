"""Schubert and skew Schubert polynomials, rc-graphs and increasing Bruhat chains."""

from ._core import (
    bruhat_leq,
    chains,
    code,
    expand,
    length,
    lr,
    normal_form,
    pieri,
    rcgraphs,
    schubert,
    schubert_terms,
    skew,
    skew_expansion,
    verify,
)

__all__ = [
    "bruhat_leq",
    "chains",
    "code",
    "expand",
    "length",
    "lr",
    "normal_form",
    "pieri",
    "rcgraphs",
    "schubert",
    "schubert_terms",
    "skew",
    "skew_expansion",
    "verify",
]
