#!/usr/bin/env python3
"""
Certificate Audit Harness

Runs named verification suites at concrete ranks n and aggregates the
certificates into a deterministic JSON (or text) report:
1. Config loading and logging setup
2. Per-rank context with the shared algebras, embeddings and splits
3. Declared check lists per suite, merged and sorted by (name, n)
4. Dimension bookkeeping for sp(n) + sp(1) inside sp(n+1)
5. Sub-commands verify, dims and decompose
"""

import argparse
import json
import logging
import os
import sys
import traceback
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from multiprocessing.pool import ThreadPool
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import psutil

import classical
import embeddings
import repmod
from exactmat import Matrix, Signature, format_rational, rank, signature
from liealg import (
    Certificate, Counterexample, MatrixSpan, centralizer_in, check_structure_constants,
    subalgebra, symmetric_pair_check, trace_form,
)

__version__ = "1.0.0"

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'
SKIP_REASON = "paper requires n ≥ 3"

DEFAULT_CONFIG = {
    "log_level": "INFO",
    "log_file": None,
    "small_ranks": [3, 5],
    "max_rank": 8,
    "random_seed": 0,
    "jacobi_exhaustive_max_dim": 40,
    "jacobi_sample_size": 1000,
    "workers": 1,
}

SUITES = ("algebras", "embeddings", "centralizers", "decomposition", "forms", "schur", "dims")

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class ConfigError(ValueError):
    """Unreadable configuration or unsupported command-line values"""


# Configuration and logging

def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """Merge config.json (or path) over the defaults"""
    config = dict(DEFAULT_CONFIG)
    path = path or os.path.join(os.path.dirname(os.path.abspath(__file__)), "config.json")
    if not os.path.exists(path):
        logger.warning(f"Config file {path} not found, using defaults")
        return config
    try:
        with open(path, 'r', encoding='utf-8') as f:
            loaded = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Failed to load config {path}: {e}") from e
    if not isinstance(loaded, dict):
        raise ConfigError(f"Config {path} must hold a JSON object")
    config.update(loaded)

    ranks = config["small_ranks"]
    if not (isinstance(ranks, list) and len(ranks) == 2 and all(isinstance(r, int) for r in ranks)):
        raise ConfigError(f"small_ranks must be [low, high], got {ranks}")
    for key in ("max_rank", "jacobi_exhaustive_max_dim", "jacobi_sample_size", "workers"):
        if not isinstance(config[key], int) or config[key] < 1:
            raise ConfigError(f"{key} must be a positive integer, got {config[key]}")
    return config


def configure_logging(config: Dict[str, Any], verbose: bool = False):
    """stderr handler always, plus a file handler when log_file is set"""
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if config.get("log_file"):
        handlers.append(logging.FileHandler(config["log_file"]))
    level = logging.DEBUG if verbose else getattr(logging, str(config.get("log_level", "INFO")).upper(), logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def log_memory(label: str):
    rss = psutil.Process().memory_info().rss / (1024 * 1024)
    logger.info(f"Memory after {label}: {rss:.1f} MiB resident")


def parse_ranks(text: str, config: Dict[str, Any]) -> List[int]:
    """'k', 'a..b' or 'all-small'"""
    if text == "all-small":
        low, high = config["small_ranks"]
    elif ".." in text:
        first, _, last = text.partition("..")
        try:
            low, high = int(first), int(last)
        except ValueError:
            raise ConfigError(f"Invalid rank range '{text}'")
    else:
        try:
            low = high = int(text)
        except ValueError:
            raise ConfigError(f"Invalid rank '{text}'")
    if low < 1 or high < low:
        raise ConfigError(f"Rank range {low}..{high} is empty or below 1")
    if high > config["max_rank"]:
        raise ConfigError(f"Rank {high} exceeds max_rank {config['max_rank']}")
    return list(range(low, high + 1))


# Report types

@dataclass
class CheckResult:
    name: str
    n: int
    status: str
    expected: str
    actual: str
    reference: str
    witness: Optional[Any] = None

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            self.witness = {"detail": f"expected {self.expected}, got {self.actual}"}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "status": self.status,
            "expected": self.expected,
            "actual": self.actual,
            "paper_ref": self.reference,
            "witness": to_jsonable(self.witness),
        }


@dataclass
class SuiteReport:
    suite: str
    n: Union[int, str]
    checks: List[CheckResult]
    tool_version: str = __version__

    def __post_init__(self):
        self.checks.sort(key=lambda c: (c.name, c.n))

    @property
    def summary(self) -> Dict[str, int]:
        return {status: sum(1 for c in self.checks if c.status == status) for status in (PASS, FAIL, SKIPPED)}

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "n": self.n,
            "tool_version": self.tool_version,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }


def to_jsonable(value: Any) -> Any:
    """Fractions as 'p/q', matrices as row lists, tuples as lists"""
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Matrix):
        return [[format_rational(x) for x in row] for row in value.to_rows()]
    if isinstance(value, Signature):
        return list(value.as_tuple())
    if isinstance(value, Counterexample):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def render_json(report: SuiteReport) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def render_text(report: SuiteReport) -> str:
    markers = {PASS: "✓", FAIL: "✗", SKIPPED: "–"}
    lines = [f"liecert {report.tool_version} - suite '{report.suite}', n = {report.n}", ""]
    for check in report.checks:
        lines.append(f"{markers[check.status]} {check.name} [n={check.n}]: "
                     f"expected {check.expected}, actual {check.actual}")
        if check.status != PASS and check.witness is not None:
            lines.append(f"    witness: {json.dumps(to_jsonable(check.witness), ensure_ascii=False)}")
    summary = report.summary
    lines.append("")
    lines.append(f"{summary[PASS]} passed, {summary[FAIL]} failed, {summary[SKIPPED]} skipped")
    return "\n".join(lines) + "\n"


# Shared per-rank objects

class RankContext:
    """Lazily built algebras, embeddings and modules for one rank"""

    def __init__(self, n: int, config: Dict[str, Any]):
        self.n = n
        self.config = config

    @cached_property
    def sp(self):
        return classical.sp_algebra(self.n)

    @cached_property
    def sp1(self):
        return classical.sp_algebra(1)

    @cached_property
    def so(self):
        return classical.so_split_algebra(2 * self.n)

    @cached_property
    def sp_succ(self):
        return classical.sp_algebra(self.n + 1)

    @cached_property
    def root_datum(self) -> classical.RootDatum:
        return classical.sp_root_datum(self.n)

    @cached_property
    def product_root_datum(self) -> classical.RootDatum:
        return classical.direct_sum_root_datum(self.root_datum, classical.sp_root_datum(1))

    @cached_property
    def sp_in_so(self) -> embeddings.Embedding:
        return embeddings.embed_sp_in_so(self.n)

    @cached_property
    def sp_sp1_in_so(self) -> embeddings.Embedding:
        return embeddings.embed_sp_sp1_in_so(self.n)

    @cached_property
    def sp_sp1_in_succ(self) -> embeddings.Embedding:
        return embeddings.embed_sp_sp1_in_sp_succ(self.n)

    @cached_property
    def split(self) -> embeddings.SymmetricSplit:
        return embeddings.symmetric_split(self.n)

    @cached_property
    def so_adjoint(self) -> repmod.Representation:
        return repmod.restriction_representation(self.so, self.sp_in_so, "adjoint")

    @cached_property
    def so_standard(self) -> repmod.Representation:
        return repmod.restriction_representation(self.so, self.sp_in_so, "standard")

    @cached_property
    def complement_module(self) -> repmod.Representation:
        split = self.split
        rho = repmod.restriction_representation(split.parent, split.embedding, "adjoint")
        return repmod.subrepresentation(rho, split.parent.coordinate_rows(split.complement))

    @cached_property
    def minimal_orthogonal(self) -> repmod.MinimalOrthogonalReport:
        return repmod.minimal_orthogonal_audit(self.n)

    @cached_property
    def so_centralizer(self) -> List[Matrix]:
        return centralizer_in(self.so, self.sp_in_so.images)

    def structure_check(self, algebra) -> Certificate:
        return check_structure_constants(algebra, self.config["jacobi_exhaustive_max_dim"],
                                         self.config["jacobi_sample_size"], self.config["random_seed"])


Outcome = Tuple[bool, str, str, Optional[Any]]


@dataclass
class Check:
    """One declared check: func returns (passed, expected, actual, witness)"""
    name: str
    reference: str
    func: Callable[[RankContext], Outcome]
    min_rank: int = 1


def _certificate_outcome(cert: Certificate, expected: str = "certified") -> Outcome:
    actual = "certified" if cert.passed else "violated"
    witness = cert.counterexample if not cert.passed else None
    return cert.passed, expected, actual, witness


def _dim_outcome(expected: int, actual: int) -> Outcome:
    return expected == actual, f"dim = {expected}", f"dim = {actual}", None


def _summands_text(summands: Sequence[repmod.IrreducibleSummand]) -> str:
    return "; ".join(f"{list(s.highest_weight)} x{s.multiplicity} (dim {s.dim_each})" for s in summands)


def _hw(n: int, *entries: int) -> Tuple[int, ...]:
    return tuple(entries) + (0,) * (n - len(entries))


# algebras

def _check_dim_sp(ctx: RankContext) -> Outcome:
    return _dim_outcome(ctx.n * (2 * ctx.n + 1), ctx.sp.dim)


def _check_dim_so(ctx: RankContext) -> Outcome:
    return _dim_outcome(comb(4 * ctx.n, 2), ctx.so.dim)


def _check_dim_sp_succ(ctx: RankContext) -> Outcome:
    return _dim_outcome((ctx.n + 1) * (2 * ctx.n + 3), ctx.sp_succ.dim)


def _check_structure_sp(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.structure_check(ctx.sp))


def _check_structure_so(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.structure_check(ctx.so))


def _check_killing_trace(ctx: RankContext) -> Outcome:
    factor = 2 * ctx.n + 2
    K = ctx.sp.killing.gram
    T = trace_form(ctx.sp)
    diff = K.first_difference(T.scale(factor))
    actual = f"K = {factor} tr" if diff is None else "not proportional"
    return diff is None, f"K = {factor} tr", actual, diff


def _check_killing_invariant(ctx: RankContext) -> Outcome:
    cfg = ctx.config
    ok = ctx.sp.killing.is_ad_invariant(cfg["jacobi_exhaustive_max_dim"], cfg["jacobi_sample_size"], cfg["random_seed"])
    return ok, "ad-invariant", "ad-invariant" if ok else "not ad-invariant", None


def _check_killing_signature(ctx: RankContext) -> Outcome:
    n = ctx.n
    sig = signature(ctx.sp.killing.gram)
    # Split real form: positive part on the symmetric complement of u(n)
    expected = Signature(n * (n + 1), n * n, 0)
    return sig == expected, str(expected), str(sig), None


# embeddings

def _check_embed_sp_so(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.sp_in_so.certificate)


def _check_embed_sp_sp1_so(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.sp_sp1_in_so.certificate)


def _check_embed_sp_sp1_succ(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.sp_sp1_in_succ.certificate)


def _check_first_factor(ctx: RankContext) -> Outcome:
    first = ctx.sp_sp1_in_so.factor_images(0)
    for index, (X, Y) in enumerate(zip(first, ctx.sp_in_so.images)):
        diff = X.first_difference(Y)
        if diff is not None:
            return False, "equal images", "images differ", {"index": index, "entry": diff}
    return True, "equal images", "equal images", None


def _check_commute_so(ctx: RankContext) -> Outcome:
    return _certificate_outcome(embeddings.factors_commute(ctx.sp_sp1_in_so))


def _check_commute_succ(ctx: RankContext) -> Outcome:
    return _certificate_outcome(embeddings.factors_commute(ctx.sp_sp1_in_succ))


def _check_sl2_factor(ctx: RankContext) -> Outcome:
    images = ctx.sp_sp1_in_so.factor_images(1)
    algebra = subalgebra(ctx.so, images, "sp(1) image")
    sc = algebra.structure_constants
    # (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    relations = {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}
    for pair, expected in relations.items():
        found = {k: v for k, v in sc.bracket_coordinates(*pair).items()}
        if found != {k: Fraction(v) for k, v in expected.items()}:
            return False, "sl2 relations", "relations differ", {"pair": pair, "coordinates": found}
    return True, "sl2 relations", "sl2 relations", None


def _check_nullcone(ctx: RankContext) -> Outcome:
    return _certificate_outcome(embeddings.nullcone_check(ctx.n), "isotropic invariant halves")


def _check_pair_sl_sp(ctx: RankContext) -> Outcome:
    emb = embeddings.embed_sp_in_sl(ctx.n)
    if not emb.certificate.passed:
        return _certificate_outcome(emb.certificate)
    return _certificate_outcome(symmetric_pair_check(emb.target, emb.images))


def _check_pair_so_gl(ctx: RankContext) -> Outcome:
    emb = embeddings.embed_gl_in_so(ctx.n)
    if not emb.certificate.passed:
        return _certificate_outcome(emb.certificate)
    cert = symmetric_pair_check(emb.target, emb.images)
    if not cert.passed:
        return _certificate_outcome(cert)
    gl_span = MatrixSpan(emb.images)
    for index, X in enumerate(ctx.sp_in_so.images):
        if not gl_span.contains(X):
            return False, "certified", "sp(n) image leaves gl(2n)", {"index": index}
    return True, "certified", "certified", None


# centralizers

def _check_centralizer_dim(ctx: RankContext) -> Outcome:
    return _dim_outcome(3, len(ctx.so_centralizer))


def _check_centralizer_pattern(ctx: RankContext) -> Outcome:
    return _certificate_outcome(embeddings.centralizer_matches_w0(ctx.n, ctx.so_centralizer))


def _check_centralizer_sp1_image(ctx: RankContext) -> Outcome:
    size = 4 * ctx.n
    found = MatrixSpan(ctx.so_centralizer, (size, size))
    image = ctx.sp_sp1_in_so.factor_images(1)
    missing = [i for i, X in enumerate(image) if not found.contains(X)]
    equal = not missing and len(image) == found.dim
    return equal, "centralizer = sp(1) image", "equal" if equal else "differ", {"missing": missing} if missing else None


def _check_centralizer_succ(ctx: RankContext) -> Outcome:
    return _dim_outcome(0, len(centralizer_in(ctx.sp_succ, ctx.sp_sp1_in_succ.images)))


# decomposition

def _expected_adjoint_so(n: int) -> List[Tuple[Tuple[int, ...], int, int]]:
    expected = [(_hw(n, 2), 1, n * (2 * n + 1))]
    if n >= 2:
        expected.append((_hw(n, 1, 1), 3, comb(2 * n, 2) - 1))
    expected.append((_hw(n), 3, 1))
    return expected


def _summands_outcome(summands, expected) -> Outcome:
    found = sorted((s.highest_weight, s.multiplicity, s.dim_each) for s in summands)
    wanted = sorted(expected)
    expected_text = "; ".join(f"{list(w)} x{m} (dim {d})" for w, m, d in sorted(expected, reverse=True))
    return found == wanted, expected_text, _summands_text(summands), None


def _check_decompose_adjoint_so(ctx: RankContext) -> Outcome:
    summands = repmod.decompose(ctx.so_adjoint, ctx.root_datum)
    return _summands_outcome(summands, _expected_adjoint_so(ctx.n))


def _check_zero_weight(ctx: RankContext) -> Outcome:
    weights = repmod.weight_decomposition(ctx.so_adjoint, ctx.root_datum)
    zero = weights.multiplicity(_hw(ctx.n))
    # n from sp(n), n - 1 from each varpi_2 copy, one per trivial copy
    expected = 4 * ctx.n
    return zero == expected, f"multiplicity {expected}", f"multiplicity {zero}", None


def _check_decompose_standard_so(ctx: RankContext) -> Outcome:
    summands = repmod.decompose(ctx.so_standard, ctx.root_datum)
    return _summands_outcome(summands, [(_hw(ctx.n, 1), 2, 2 * ctx.n)])


def _check_decompose_complement(ctx: RankContext) -> Outcome:
    n = ctx.n
    summands = repmod.decompose(ctx.complement_module, ctx.product_root_datum)
    return _summands_outcome(summands, [(_hw(n, 1) + (1,), 1, 4 * n)])


def _check_decompose_adjoint_sl(ctx: RankContext) -> Outcome:
    n = ctx.n
    emb = embeddings.embed_sp_in_sl(n)
    rho = repmod.restriction_representation(emb.target, emb, "adjoint")
    expected = [(_hw(n, 2), 1, n * (2 * n + 1))]
    if n >= 2:
        expected.append((_hw(n, 1, 1), 1, comb(2 * n, 2) - 1))
    return _summands_outcome(repmod.decompose(rho, ctx.root_datum), expected)


def _check_irreducible_complement(ctx: RankContext) -> Outcome:
    cert = repmod.irreducibility_certificate(ctx.complement_module, ctx.product_root_datum)
    ok = cert.irreducible and cert.commutant_dim == 1
    return ok, "irreducible, commutant dim 1", \
        f"{'irreducible' if cert.irreducible else 'reducible'}, commutant dim {cert.commutant_dim}", None


def _check_irreducible_standard(ctx: RankContext) -> Outcome:
    cert = repmod.irreducibility_certificate(repmod.standard_representation(ctx.sp), ctx.root_datum)
    ok = cert.irreducible and cert.commutant_dim == 1
    return ok, "irreducible, commutant dim 1", \
        f"{'irreducible' if cert.irreducible else 'reducible'}, commutant dim {cert.commutant_dim}", None


def _check_reducible_doubled(ctx: RankContext) -> Outcome:
    cert = repmod.irreducibility_certificate(ctx.so_standard, ctx.root_datum)
    ok = not cert.irreducible and cert.commutant_dim == 4
    return ok, "reducible, commutant dim 4", \
        f"{'irreducible' if cert.irreducible else 'reducible'}, commutant dim {cert.commutant_dim}", None


# forms

def _check_forms_standard(ctx: RankContext) -> Outcome:
    rho = repmod.standard_representation(ctx.sp)
    sym = repmod.invariant_bilinear_forms(rho, "symmetric")
    skew = repmod.invariant_bilinear_forms(rho, "skew")
    spans_j = len(skew) == 1 and MatrixSpan(skew).contains(classical.sp_form(ctx.n).matrix)
    ok = not sym and spans_j
    return ok, "symmetric 0, skew 1 (J~)", f"symmetric {len(sym)}, skew {len(skew)}" + (" (J~)" if spans_j else ""), None


def _check_forms_doubled(ctx: RankContext) -> Outcome:
    n = ctx.n
    forms = repmod.invariant_bilinear_forms(ctx.so_standard, "symmetric")
    expected = f"1 form, signature {Signature(2 * n, 2 * n, 0)}"
    if len(forms) != 1:
        return False, expected, f"{len(forms)} forms", None
    sig = signature(forms[0])
    return sig.as_tuple() == (2 * n, 2 * n, 0), expected, f"1 form, signature {sig}", None


def _check_split_dim(ctx: RankContext) -> Outcome:
    return _dim_outcome(4 * ctx.n, len(ctx.split.complement))


def _check_split_pair(ctx: RankContext) -> Outcome:
    return _certificate_outcome(ctx.split.certificate)


def _check_split_spans(ctx: RankContext) -> Outcome:
    spans = bool(ctx.split.certificate.evidence.get("mm_spans_subalgebra"))
    return spans, "[m,m] = subalgebra", "[m,m] = subalgebra" if spans else "proper subspace", None


def _check_split_signature(ctx: RankContext) -> Outcome:
    n = ctx.n
    sig = ctx.split.complement_signature
    return sig.as_tuple() == (2 * n, 2 * n, 0), str(Signature(2 * n, 2 * n, 0)), str(sig), None


def _check_split_basis(ctx: RankContext) -> Outcome:
    split = ctx.split
    return split.basis_rank == split.parent.dim, f"rank {split.parent.dim}", f"rank {split.basis_rank}", None


def _check_wedge2(ctx: RankContext) -> Outcome:
    n = ctx.n
    J = classical.so_split_form(2 * n).matrix
    images = repmod.wedge2_to_so(4 * n, J)
    coords = []
    for pair, X in images.items():
        c = ctx.so.coordinates(X)
        if c is None:
            return False, "isomorphism onto so(2n,2n)", "image leaves so(2n,2n)", {"bivector": pair}
        coords.append(c)
    r = rank(Matrix.from_rows(coords))
    return r == ctx.so.dim, f"rank {ctx.so.dim}", f"rank {r}", None


def _check_minimal_orthogonal(ctx: RankContext) -> Outcome:
    report = ctx.minimal_orthogonal
    witness = {
        "standard_symmetric_forms": report.standard_symmetric_forms,
        "fundamental_dims": {v.j: v.dimension for v in report.fundamental_dims},
        "doubled_signature": report.doubled_form_signature,
        "padded_radicals": report.padded_radicals,
    }
    actual = f"m = {report.minimal_dimension}" if report.passed else "pillar failed"
    return report.passed, f"m = {4 * ctx.n}", actual, None if report.passed else witness


# schur

def _schur(ctx: RankContext) -> embeddings.SchurConstants:
    return embeddings.schur_constants(ctx.n, ctx.split)


def _scalar_outcome(value: Optional[Fraction], expected: Optional[Fraction], failure) -> Outcome:
    if value is None:
        return False, format_rational(expected) if expected is not None else "exact scalar", "not proportional", failure
    if expected is None:
        return True, "exact scalar", format_rational(value), None
    return value == expected, format_rational(expected), format_rational(value), None


def _check_schur_an(ctx: RankContext) -> Outcome:
    n = ctx.n
    constants = _schur(ctx)
    return _scalar_outcome(constants.a_n, Fraction(2 * n + 4, 2 * n + 2), constants.failures.get("a_n"))


def _check_schur_a1(ctx: RankContext) -> Outcome:
    constants = _schur(ctx)
    return _scalar_outcome(constants.a_1, Fraction(2 * ctx.n + 4, 4), constants.failures.get("a_1"))


def _check_schur_a0(ctx: RankContext) -> Outcome:
    constants = _schur(ctx)
    return _scalar_outcome(constants.a_0, None, constants.failures.get("a_0"))


def _check_schur_cross(ctx: RankContext) -> Outcome:
    return _certificate_outcome(_schur(ctx).cross_terms_zero, "all zero")


# dims

def _check_weyl_binomial(ctx: RankContext) -> Outcome:
    n = ctx.n
    weyl = [repmod.weyl_dim(n, repmod.fundamental_weight(n, j)) for j in range(1, n + 1)]
    binomial = [repmod.fundamental_dim_binomial(n, j) for j in range(1, n + 1)]
    return weyl == binomial, str(binomial), str(weyl), None


def _check_lemma_4n(ctx: RankContext) -> Outcome:
    verdicts = repmod.lemma_4n_audit(ctx.n)
    failed = [v.j for v in verdicts if not v.passed]
    dims = {v.j: v.dimension for v in verdicts}
    return not failed, f"all > {4 * ctx.n}", str(list(dims.values())), {"failed_j": failed, "dims": dims} if failed else None


def _check_closed_forms(ctx: RankContext) -> Outcome:
    checks = repmod.closed_form_checks(ctx.n)
    ok = all(checks.values())
    return ok, "closed forms hold", "closed forms hold" if ok else "mismatch", None if ok else checks


def theorem_a_dimension_audit(n: int, ctx: Optional[RankContext] = None) -> List[CheckResult]:
    """
    Dimension bookkeeping of sp(n) + sp(1) plus a 4n-dim module inside sp(n+1).

    Dimensions are read off the constructed algebras; ctx shares them with
    the other checks of the same rank.
    """
    if n < 3:
        raise ValueError(f"The dimension audit needs n >= 3, got {n}")
    ctx = ctx or RankContext(n, dict(DEFAULT_CONFIG))
    dim_group = ctx.sp.dim + ctx.sp1.dim
    minimal = ctx.minimal_orthogonal.minimal_dimension
    dim_succ = ctx.sp_succ.dim
    upper = (n + 1) * (2 * n + 3)
    reference = "dim G + m(g) = (n+1)(2n+3) = dim sp(n+1)"

    def result(name, ok, expected, actual):
        return CheckResult(name, n, PASS if ok else FAIL, str(expected), str(actual), reference)

    return [
        result("theorem_a_dim_group", dim_group == n * (2 * n + 1) + 3, n * (2 * n + 1) + 3, dim_group),
        result("theorem_a_sum", minimal is not None and dim_group + minimal == upper,
               upper, dim_group + minimal if minimal is not None else "no minimal dimension"),
        result("theorem_a_strict_lower", dim_group < dim_succ,
               f"{n * (2 * n + 1) + 3} < {upper}", f"{dim_group} vs {dim_succ}"),
        result("theorem_a_dim_sp_succ", dim_succ == upper, upper, dim_succ),
    ]


SUITE_CHECKS: Dict[str, List[Check]] = {
    "algebras": [
        Check("dim_sp", "dim sp(n) = n(2n+1)", _check_dim_sp),
        Check("dim_so", "dim so(2n,2n) = C(4n,2)", _check_dim_so),
        Check("dim_sp_succ", "dim sp(n+1) = (n+1)(2n+3)", _check_dim_sp_succ),
        Check("structure_constants_sp", "sp(n) is a Lie algebra", _check_structure_sp),
        Check("structure_constants_so", "so(2n,2n) is a Lie algebra", _check_structure_so),
        Check("killing_trace_sp", "Killing form of sp(n) is (2n+2) tr(XY)", _check_killing_trace),
        Check("killing_invariant_sp", "Killing form is ad-invariant", _check_killing_invariant),
        Check("killing_signature_sp", "Killing form of sp(n) has signature (n(n+1), n^2, 0)",
              _check_killing_signature),
    ],
    "embeddings": [
        Check("embed_sp_in_so", "sp(n) includes in so(2n,2n) via diag(M, -M^T)", _check_embed_sp_so),
        Check("embed_sp_sp1_in_so", "sp(n) + sp(1) includes in so(2n,2n)", _check_embed_sp_sp1_so),
        Check("embed_sp_sp1_in_sp_succ", "sp(n) + sp(1) includes in sp(n+1)", _check_embed_sp_sp1_succ),
        Check("embed_first_factor", "sp(n) factor of sp(n) + sp(1) -> so(2n,2n) is the sp(n) inclusion",
              _check_first_factor),
        Check("factors_commute_so", "sp(n) and sp(1) images commute in so(2n,2n)", _check_commute_so),
        Check("factors_commute_sp_succ", "sp(n) and sp(1) images commute in sp(n+1)", _check_commute_succ),
        Check("sp1_factor_relations", "the W0 image satisfies the sl2 relations", _check_sl2_factor),
        Check("nullcone_halves", "both R^2n summands of R^4n are isotropic", _check_nullcone),
        Check("symmetric_pair_sl_sp", "(sl(2n), sp(n)) is a symmetric pair", _check_pair_sl_sp),
        Check("symmetric_pair_so_gl", "(so(2n,2n), gl(2n)) is a symmetric pair containing sp(n)",
              _check_pair_so_gl),
    ],
    "centralizers": [
        Check("centralizer_sp_in_so", "centralizer of sp(n) in so(2n,2n) is {W0(a,b,c)}", _check_centralizer_dim),
        Check("centralizer_w0_pattern", "centralizer of sp(n) in so(2n,2n) is {W0(a,b,c)}",
              _check_centralizer_pattern),
        Check("centralizer_equals_sp1_image", "the sp(1) factor is the full centralizer",
              _check_centralizer_sp1_image),
        Check("centralizer_sp_sp1_in_sp_succ", "centralizer of sp(n) + sp(1) in sp(n+1) is 0",
              _check_centralizer_succ),
    ],
    "decomposition": [
        Check("decompose_adjoint_so", "so(2n,2n) = sp(n) + 3 varpi_2 + 3 trivial", _check_decompose_adjoint_so),
        Check("weights_adjoint_so_zero", "zero weight space of so(2n,2n) under sp(n)", _check_zero_weight),
        Check("decompose_standard_so", "R^4n = R^2n + R^2n under sp(n)", _check_decompose_standard_so),
        Check("decompose_complement", "the complement of sp(n) + sp(1) in sp(n+1) is irreducible",
              _check_decompose_complement),
        Check("decompose_adjoint_sl", "sl(2n) = sp(n) + varpi_2 under sp(n)", _check_decompose_adjoint_sl),
        Check("irreducible_complement", "the complement of sp(n) + sp(1) in sp(n+1) is irreducible",
              _check_irreducible_complement),
        Check("irreducible_standard_sp", "R^2n is an irreducible sp(n)-module", _check_irreducible_standard),
        Check("reducible_doubled_standard", "R^2n + R^2n is reducible", _check_reducible_doubled),
    ],
    "forms": [
        Check("forms_standard_sp", "R^2n has no invariant symmetric form, one skew form", _check_forms_standard),
        Check("forms_doubled_standard", "R^2n + R^2n carries one invariant form of signature (2n,2n)",
              _check_forms_doubled),
        Check("split_complement_dim", "sp(n+1) = sp(n) + sp(1) + R^{2n,2n}", _check_split_dim),
        Check("split_symmetric_pair", "(sp(n+1), sp(n) + sp(1)) is a symmetric pair", _check_split_pair),
        Check("split_mm_spans", "[m,m] = sp(n) + sp(1)", _check_split_spans),
        Check("split_killing_signature", "Killing form on the complement has signature (2n,2n)",
              _check_split_signature),
        Check("split_basis_rank", "subalgebra and complement together form a basis", _check_split_basis),
        Check("wedge2_isomorphism", "wedge^2 R^{2n,2n} is isomorphic to so(2n,2n)", _check_wedge2),
        Check("minimal_orthogonal_dim", "minimal orthogonal representation of sp(n) has dimension 4n",
              _check_minimal_orthogonal, min_rank=3),
    ],
    "schur": [
        Check("schur_a_n", "Killing of sp(n+1) on the sp(n) factor is a_n K_n", _check_schur_an),
        Check("schur_a_1", "Killing of sp(n+1) on the sp(1) factor is a_1 K_1", _check_schur_a1),
        Check("schur_a_0", "Killing of sp(n+1) on the complement is a_0 times the invariant form",
              _check_schur_a0),
        Check("schur_cross_terms", "the three summands are Killing-orthogonal", _check_schur_cross),
    ],
    "dims": [
        Check("weyl_vs_binomial", "dim varpi_j = C(2n,j) - C(2n,j-2)", _check_weyl_binomial),
        Check("lemma_4n", "dim varpi_j > 4n for 2 <= j <= n", _check_lemma_4n, min_rank=3),
        Check("fundamental_closed_forms", "closed forms for j = 2, 3", _check_closed_forms),
    ],
}


# Execution

def run_check(check: Check, ctx: RankContext) -> CheckResult:
    """Never raises: exceptions become failed checks with the message as witness"""
    if ctx.n < check.min_rank:
        return CheckResult(check.name, ctx.n, SKIPPED, "-", "-", check.reference, {"reason": SKIP_REASON})
    try:
        passed, expected, actual, witness = check.func(ctx)
    except Exception as e:
        logger.error(f"✗ {check.name} (n={ctx.n}) raised {type(e).__name__}: {e}")
        logger.debug(f"Traceback: {traceback.format_exc()}")
        return CheckResult(check.name, ctx.n, FAIL, "no error", f"{type(e).__name__}", check.reference,
                           {"error": f"{type(e).__name__}: {e}"})
    status = PASS if passed else FAIL
    if passed:
        logger.debug(f"✓ {check.name} (n={ctx.n}): {actual}")
    else:
        logger.warning(f"✗ {check.name} (n={ctx.n}): expected {expected}, got {actual}")
    return CheckResult(check.name, ctx.n, status, expected, actual, check.reference, witness)


def _dims_checks(ctx: RankContext) -> List[CheckResult]:
    n = ctx.n
    if n < 3:
        names = ("theorem_a_dim_group", "theorem_a_sum", "theorem_a_strict_lower", "theorem_a_dim_sp_succ")
        return [CheckResult(name, n, SKIPPED, "-", "-", "dim G + m(g) = (n+1)(2n+3) = dim sp(n+1)",
                            {"reason": SKIP_REASON}) for name in names]
    try:
        return theorem_a_dimension_audit(n, ctx)
    except Exception as e:
        logger.error(f"✗ dimension audit (n={n}): {e}")
        logger.debug(f"Traceback: {traceback.format_exc()}")
        return [CheckResult("theorem_a_dim_group", n, FAIL, "no error", type(e).__name__,
                            "dim G + m(g) = (n+1)(2n+3) = dim sp(n+1)", {"error": str(e)})]


def run_suite(n: int, suite: str, config: Optional[Dict[str, Any]] = None) -> List[CheckResult]:
    """Checks of one suite (or 'all') at rank n, in declared order"""
    config = config or dict(DEFAULT_CONFIG)
    if suite != "all" and suite not in SUITE_CHECKS:
        raise ConfigError(f"Unknown suite '{suite}', choose from {', '.join(SUITES + ('all',))}")
    if n < 1:
        raise ConfigError(f"Rank must be at least 1, got {n}")
    names = SUITES if suite == "all" else (suite,)
    ctx = RankContext(n, config)
    results: List[CheckResult] = []
    for name in names:
        logger.info(f"Running suite '{name}' for n={n}")
        checks = SUITE_CHECKS[name]
        workers = config.get("workers", 1)
        if workers > 1:
            with ThreadPool(workers) as pool:
                results.extend(pool.map(lambda c: run_check(c, ctx), checks))
        else:
            results.extend(run_check(c, ctx) for c in checks)
        if name == "dims":
            results.extend(_dims_checks(ctx))
        log_memory(f"suite '{name}' (n={n})")
    return results


def build_report(ranks: Sequence[int], suite: str, config: Optional[Dict[str, Any]] = None) -> SuiteReport:
    checks: List[CheckResult] = []
    for n in ranks:
        checks.extend(run_suite(n, suite, config))
    label: Union[int, str] = ranks[0] if len(ranks) == 1 else f"{ranks[0]}..{ranks[-1]}"
    return SuiteReport(suite, label, checks)


# Sub-commands

def dims_table(n: int) -> str:
    lines = [f"Fundamental modules of sp({n}) (bound 4n = {4 * n})",
             f"{'j':>3} {'weyl':>8} {'binomial':>9} {'> 4n':>5}"]
    for j in range(1, n + 1):
        weyl = repmod.weyl_dim(n, repmod.fundamental_weight(n, j))
        binomial = repmod.fundamental_dim_binomial(n, j)
        lines.append(f"{j:>3} {weyl:>8} {binomial:>9} {'yes' if binomial > 4 * n else 'no':>5}")
    return "\n".join(lines) + "\n"


DECOMPOSITIONS = {
    ("so-split", "sp"): lambda n: (embeddings.embed_sp_in_so(n), classical.sp_root_datum(n)),
    ("so-split", "sp-sp1"): lambda n: (embeddings.embed_sp_sp1_in_so(n), _product_datum(n)),
    ("sl", "sp"): lambda n: (embeddings.embed_sp_in_sl(n), classical.sp_root_datum(n)),
    ("gl", "sp"): lambda n: (embeddings.embed_sp_in_gl(n), classical.sp_root_datum(n)),
    ("sp-succ", "sp-sp1"): lambda n: (embeddings.embed_sp_sp1_in_sp_succ(n), _product_datum(n)),
}


def _product_datum(n: int) -> classical.RootDatum:
    return classical.direct_sum_root_datum(classical.sp_root_datum(n), classical.sp_root_datum(1))


def decompose_command(target: str, under: str, n: int) -> List[repmod.IrreducibleSummand]:
    builder = DECOMPOSITIONS.get((target, under))
    if builder is None:
        raise ConfigError(f"Unsupported decomposition of {target} under {under}")
    emb, rd = builder(n)
    rho = repmod.restriction_representation(emb.target, emb, "adjoint")
    return repmod.decompose(rho, rd)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liecert", description="Exact certificates for sp(n) embeddings and modules")
    parser.add_argument("--config", help="Path to a JSON config file (default: config.json next to the tool)")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--n", required=True, help="Rank k, range a..b or all-small")
    verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    verify.add_argument("--format", default="json", choices=["json", "text"])
    verify.add_argument("--out", help="Write the report to this file instead of stdout")

    dims = commands.add_parser("dims", help="Print the fundamental-dimension table")
    dims.add_argument("--n", required=True, type=int)

    decompose = commands.add_parser("decompose", help="Decompose an adjoint module into irreducibles")
    decompose.add_argument("--target", default="so-split", choices=["so-split", "sl", "gl", "sp-succ"])
    decompose.add_argument("--under", default="sp", choices=["sp", "sp-sp1"])
    decompose.add_argument("--n", required=True, type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
    except ConfigError as e:
        configure_logging(dict(DEFAULT_CONFIG))
        logger.error(str(e))
        return 2
    configure_logging(config, args.verbose)

    try:
        if args.command == "verify":
            ranks = parse_ranks(args.n, config)
            report = build_report(ranks, args.suite, config)
            output = render_json(report) if args.format == "json" else render_text(report)
            if args.out:
                with open(args.out, 'w', encoding='utf-8') as f:
                    f.write(output)
                logger.info(f"Report written to {args.out}")
            else:
                sys.stdout.write(output)
            summary = report.summary
            logger.info(f"{summary[PASS]} passed, {summary[FAIL]} failed, {summary[SKIPPED]} skipped")
            return report.exit_code

        if args.command == "dims":
            parse_ranks(str(args.n), config)
            sys.stdout.write(dims_table(args.n))
            return 0

        parse_ranks(str(args.n), config)
        summands = decompose_command(args.target, args.under, args.n)
        for summand in summands:
            sys.stdout.write(f"{summand}\n")
        return 0
    except ConfigError as e:
        logger.error(str(e))
        return 2
    except Exception as e:
        logger.error(f"Command {args.command} failed: {e}")
        logger.debug(f"Traceback: {traceback.format_exc()}")
        return 1
