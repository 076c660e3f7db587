"""Exact certificates for probabilistic pushdown automata.

Thin layer over the compiled ``_core`` module: rational results come back as
``fractions.Fraction``; certificates and models stay in their text formats.
"""

from fractions import Fraction

from . import _core
from ._core import CertificateFormatError, ModelError, ModelMismatch

__all__ = [
    "CertificateFormatError",
    "ModelError",
    "ModelMismatch",
    "bounds",
    "certify",
    "decide",
    "explore",
    "gen",
    "parse",
    "pbpa",
    "simulate",
    "verify",
]


def _frac(text):
    return Fraction(text)


def _frac_values(mapping):
    return {k: _frac(v) for k, v in mapping.items()}


def parse(text, strict=False):
    """Validate a model and return its states, alphabet, hash and deadlocked pairs."""
    return _core.parse(text, strict)


def bounds(text, epsilon="1e-9", method="newton", max_iter=0):
    """Certified bracket ``(lower, upper)`` for every non-zero return probability."""
    out = _core.bounds(text, str(epsilon), method, max_iter)
    out["bounds"] = {k: (_frac(lo), _frac(hi)) for k, (lo, hi) in out["bounds"].items()}
    out["gap"] = _frac(out["gap"])
    return out


def certify(text, kind, epsilon="1e-9", strict=False, budget=200):
    """Synthesize a certificate of ``kind`` (upper, lower, past, cpast) as text."""
    return _core.certify(text, kind, str(epsilon), strict, budget)


def verify(text, certificate):
    """Check a certificate exactly. Returns kind, accepted flag and violations."""
    return _core.verify(text, certificate)


def decide(text, max_iter=200):
    """Run the PAST semi-decision. Outcome is ``PAST``, ``non-AST`` or ``unknown``."""
    out = _core.decide(text, max_iter)
    if "runtimes" in out:
        out["runtimes"] = _frac_values(out["runtimes"])
    if "witness_sum" in out:
        out["witness_sum"] = _frac(out["witness_sum"])
    return out


def pbpa(text):
    """Exact PAST decision and runtimes for single-state automata."""
    out = _core.pbpa(text)
    out["runtimes"] = _frac_values(out["runtimes"])
    return out


def gen(kind, param=""):
    """Model text of a built-in family: fig1, delta_a, fig4 or fig5."""
    return _core.gen(kind, str(param))


def explore(text, start, step_cap, stack_cap):
    """Exact lower bounds from bounded breadth-first path enumeration."""
    out = _core.explore(text, start, step_cap, stack_cap)
    out["probability"] = _frac_values(out["probability"])
    out["moment"] = _frac_values(out["moment"])
    return out


def simulate(text, start, runs=100000, cap=10000, seed=1):
    """Seeded Monte Carlo estimates of return probabilities and run length."""
    return _core.simulate(text, start, runs, cap, seed)
