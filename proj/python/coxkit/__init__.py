"""Exact Coxeter transformations, Jordan forms, and the block tensor
calculus for smooth complete toric varieties and rational surfaces.

Thin convenience layer over the compiled core: fans travel as dicts in the
same schema as the fan JSON files, rationals as "p/q" strings, reports as
dicts.
"""

import json

from coxkit import _coxkit

__version__ = _coxkit.__version__

__all__ = [
    "fixture_names",
    "fixture",
    "validate",
    "betti",
    "cone_counts",
    "fan_report",
    "star_subdivide",
    "product",
    "surface",
    "tensor",
    "tensor_oracle",
    "cartan",
    "reproduce",
]


def _fan_json(fan):
    if isinstance(fan, str):
        return fan
    return json.dumps(fan)


def fixture_names():
    """Names of the bundled fans."""
    return list(_coxkit.fixture_names())


def fixture(name):
    """A bundled fan as a dict."""
    return json.loads(_coxkit.fixture_json(name))


def validate(fan):
    """All structural violations of a fan; empty means valid."""
    return list(_coxkit.validate_fan(_fan_json(fan)))


def betti(fan):
    return list(_coxkit.betti_numbers(_fan_json(fan)))


def cone_counts(fan):
    return list(_coxkit.cone_counts(_fan_json(fan)))


def fan_report(fan):
    """Full Coxeter report: polynomial, Jordan type, Lefschetz status,
    and the cross-checks between the direct, Betti, and cone-count routes."""
    return json.loads(_coxkit.fan_report_json(_fan_json(fan)))


def star_subdivide(fan, cone):
    """Blow-up at the face spanned by the given ray indices."""
    return json.loads(_coxkit.star_subdivide_json(_fan_json(fan), list(cone)))


def product(fan_x, fan_y):
    return json.loads(_coxkit.product_fan_json(_fan_json(fan_x), _fan_json(fan_y)))


def surface(base="P2", a=0, blowups=0, emit_psi=False):
    """Coxeter report for P2 or a Hirzebruch surface blown up in
    ``blowups`` points."""
    return json.loads(_coxkit.surface_report_json(base, a, blowups, emit_psi))


def _blocks(blocks):
    return [(str(eigenvalue), int(size)) for eigenvalue, size in blocks]


def tensor(blocks):
    """Jordan type of a tensor product of Jordan blocks, in closed form.

    ``blocks`` is an iterable of (eigenvalue, size) pairs; eigenvalues are
    ints or "p/q" strings. Zero eigenvalues are handled by the pairwise
    fold."""
    blocks = _blocks(blocks)
    if any(e in ("0", "-0") for e, _ in blocks):
        return json.loads(_coxkit.tensor_pairwise_json(blocks))
    return json.loads(_coxkit.tensor_json(blocks))


def tensor_oracle(blocks, cap=4096):
    """Kronecker brute-force oracle for the same computation."""
    return json.loads(_coxkit.tensor_oracle_json(_blocks(blocks), cap))


def cartan(rows):
    """-C^t C^(-1) of an integer Cartan matrix, with its Jordan data when
    the eigenvalue is a single sign."""
    return json.loads(_coxkit.cartan_coxeter_json([[int(x) for x in row] for row in rows]))


def reproduce(table, cap=4096):
    """Regenerate one of the bundled verification tables
    (del-pezzo, fano3, thm410, prop54, thm31)."""
    return json.loads(_coxkit.reproduce_json(table, cap))
