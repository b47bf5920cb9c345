"""Exact limiting densities of random finitely presented unary structures.

Thin pythonic layer over the C++ core: arbitrary-precision counts come back
as ``int``/``Fraction``, structure descriptors as dicts.
"""

import json as _json
from fractions import Fraction as _Fraction

try:
    from . import _core
except ImportError:  # in-tree test layout: the extension sits on sys.path
    import _core  # type: ignore

BudgetExceededError = _core.BudgetExceededError
LimdensError = _core.LimdensError
__version__ = _core.__version__

FAMILIES = (
    "bijective",
    "two-id-bijective",
    "unary",
    "abelian",
    "genbij",
    "s3c",
    "multi-unary",
)


def _frac(pair):
    return _Fraction(int(pair[0]), int(pair[1]))


def classify(family, *inputs):
    """Descriptor of the structure presented by the given identity/relator."""
    return _json.loads(_core.classify_json(family, list(inputs)))


def classify_genbij(spec_json, identity, generators=1):
    return _json.loads(_core.classify_genbij_json(spec_json, generators, identity))


def identity_count(family, s):
    """Number of identities of length at most s, N(s)."""
    return int(_core.identity_count_upto(family, s))


def total_presentations(family, s, k=1, mode="unordered-distinct"):
    return int(_core.total_presentations(family, s, k, mode))


def alpha_count(n, s):
    return int(_core.alpha_count(n, s))


def residue_shares(modulus, s):
    """Share of identities of length <= s per residue of X mod the modulus."""
    counts, total = _core.x_residue_counts(modulus, s)
    total = int(total)
    return [_Fraction(int(c), total) for c in counts]


def density_series(family, sentence, smax, strategy="aggregate", k=1,
                   mode="unordered-distinct"):
    """List of (s, Fraction) pairs for P_s(phi)/P_s."""
    pts = _core.density_points(family, sentence, smax, strategy, k, mode)
    return [(s, _Fraction(int(c), int(t))) for s, c, t in pts]


def coprime_density(smax, mode="ordered-with-rep"):
    """Grid of (s, Fraction) points plus the even/odd reference limits."""
    pts, even_ref, odd_ref = _core.coprime_density_points(smax, mode)
    series = [(s, _Fraction(int(c), int(t))) for s, c, t in pts]
    return series, even_ref, odd_ref


def constants_like_density(n, r, smax):
    pa, pb = _core.constants_like_points(n, r, smax)
    conv = lambda pts: [(s, _Fraction(int(c), int(t))) for s, c, t in pts]
    return conv(pa), conv(pb)


def walk_distribution(n, support, k):
    return [_frac(p) for p in _core.walk_distribution(n, support, k)]


def walk_tv_distance(n, support, k):
    return _frac(_core.walk_tv_distance(n, support, k))


def gaifman_group(spec_json):
    return _json.loads(_core.gaifman_group_json(spec_json))


def ball_code(family, identity, r, center="a"):
    return _core.ball_code_hex(family, identity, r, center)


def eval_invariant(family, presentation, sentence):
    return _core.eval_invariant(family, presentation, sentence)


def eval_sentence(family, presentation, sentence, budget=1e8):
    return _core.eval_sentence(family, presentation, sentence, budget)


def verify(only=""):
    """Run the acceptance criteria; returns (passed, total, report_text)."""
    return _core.verify(only)


def cli(args):
    """Invoke the command-line interface in-process."""
    return _core.cli(list(args))
