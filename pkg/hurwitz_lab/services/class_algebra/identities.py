"""Property suites for the class algebra.

Each check returns the list of failures it found (empty when the identity
holds); the verification suite files them into a report.
"""
import itertools
import random
from fractions import Fraction
from typing import List, Optional

import numpy as np

from ..finite_group import ClassTable, FiniteGroup
from ..utils.logging_config import get_logger
from .algebra import (
    StructureConstants,
    convolve,
    structure_constants_by_convolution,
    trace_product,
)

logger = get_logger(__name__)


def check_identity_coefficients(sc: StructureConstants) -> List[str]:
    """``c[mu][nu][1] = size(mu)`` when ``nu = mu^-1``, else 0."""
    failures = []
    for mu in range(sc.n):
        for nu in range(sc.n):
            expected = sc.sizes[mu] if nu == sc.inverse[mu] else 0
            got = int(sc.c[mu, nu, sc.identity_class])
            if got != expected:
                failures.append(f"c[{mu}][{nu}][identity] = {got}, expected {expected}")
    return failures


def check_commutativity(sc: StructureConstants) -> List[str]:
    bad = np.argwhere(sc.c != sc.c.transpose(1, 0, 2))
    return [f"c[{mu}][{nu}][{lam}] != c[{nu}][{mu}][{lam}]" for mu, nu, lam in bad.tolist()]


def check_associativity(
    sc: StructureConstants,
    rng: Optional[random.Random] = None,
    samples: Optional[int] = None,
) -> List[str]:
    """
    ``(f_a f_b) f_c = f_a (f_b f_c)`` on basis triples.

    All triples when ``samples`` is None, otherwise that many random ones.
    """
    triples = list(itertools.product(range(sc.n), repeat=3))
    if samples is not None and samples < len(triples):
        rng = rng or random.Random(0)
        triples = [tuple(rng.randrange(sc.n) for _ in range(3)) for _ in range(samples)]

    failures = []
    for a, b, c in triples:
        fa, fb, fc = sc.basis(a), sc.basis(b), sc.basis(c)
        left = convolve(convolve(fa, fb, sc), fc, sc)
        right = convolve(fa, convolve(fb, fc, sc), sc)
        if left != right:
            failures.append(f"associativity fails on classes ({a}, {b}, {c})")
    return failures


def check_four_trace_expansion(sc: StructureConstants) -> List[str]:
    """
    Cut a four-holed sphere along every pairing of its boundary classes.

    ``tr(f1 f2 f3 f4) = sum_nu tr(f_s1 f_s2 f_nu) tr(f_s3 f_s4 f_nu^-1) / size(nu)``
    for every ordering ``s`` of the four factors.
    """
    n = sc.n
    three = {
        (a, b, nu): trace_product([a, b, nu], sc)
        for a in range(n) for b in range(n) for nu in range(n)
    }
    failures = []
    for quad in itertools.product(range(n), repeat=4):
        whole = trace_product(list(quad), sc)
        for s in set(itertools.permutations(quad)):
            cut = sum(
                Fraction(three[s[0], s[1], nu] * three[s[2], s[3], sc.inverse[nu]], sc.sizes[nu])
                for nu in range(n)
            )
            if cut != whole:
                failures.append(f"four-trace expansion fails for {quad} split as {s}: {cut} != {whole}")
    logger.debug(f"Four-trace expansion checked on {n ** 4} class quadruples")
    return failures


def check_against_convolution(group: FiniteGroup, table: ClassTable, sc: StructureConstants) -> List[str]:
    """Compare with the full-convolution oracle (small groups only)."""
    oracle = structure_constants_by_convolution(group, table)
    bad = np.argwhere(oracle.c != sc.c)
    return [
        f"c[{mu}][{nu}][{lam}] = {int(sc.c[mu, nu, lam])}, convolution gives {int(oracle.c[mu, nu, lam])}"
        for mu, nu, lam in bad.tolist()
    ]
