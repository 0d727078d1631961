"""Named verification suites, the executable form of the package's claims.

Each suite runs a list of checks; a check compares a computed value with
its expected value and records where the expectation comes from: "paper"
for values asserted by the source results this package reproduces,
"derived" for values frozen from an independent computation, "trivial"
for arithmetic.  Informational checks report context (like census counts
whose published value disagrees with the enumeration) without affecting
the suite verdict.

Every suite is deterministic for a fixed seed; serialized reports leave
out wall-clock timings so identical invocations emit identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
import itertools
import json
import random
import time

from . import catalog
from .brambles import STRICT_BRAMBLE, classify, order, tree_product_bramble
from .divisor import Divisor
from .errors import ValidationError
from .gonality import (
    SearchOptions,
    conjecture_bound,
    expected_product_gonality,
    gonality,
    product_report,
    replicate_divisor,
)
from .multigraph import Multigraph, ProductIndex, cartesian_product
from .orientations import rook_defeat_instance, sourceless_divisor_classes
from .rank import has_positive_rank, riemann_roch_residual
from .reduction import dhar_burn, has_effective_rep

__all__ = ["Check", "SuiteReport", "SUITE_NAMES", "run_suite", "run_all"]

_DEFAULT_SEED = 20240901


@dataclass(frozen=True)
class Check:
    description: str
    expected: object
    computed: object
    passed: bool
    provenance: str  # paper | derived | trivial
    informational: bool = False
    note: str = ""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    checks: tuple[Check, ...]
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return all(c.passed or c.informational for c in self.checks)

    def to_json_obj(self) -> dict:
        # timings omitted so byte output is reproducible
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "checks": [
                {
                    "description": c.description,
                    "expected": _plain(c.expected),
                    "computed": _plain(c.computed),
                    "passed": c.passed,
                    "provenance": c.provenance,
                    "informational": c.informational,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.checks:
            tag = "INFO" if c.informational else ("PASS" if c.passed else "FAIL")
            line = (
                f"  {tag} {c.description}: expected {_plain(c.expected)!r}, "
                f"computed {_plain(c.computed)!r} [{c.provenance}]"
            )
            if c.note:
                line += f" ({c.note})"
            lines.append(line)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(
            f"  {verdict}: {sum(1 for c in self.checks if c.passed)}/"
            f"{len(self.checks)} checks in {self.elapsed_s:.1f}s"
        )
        return "\n".join(lines)


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, str, float)) or x is None:
        return x
    return str(x)


def _eq_check(desc, expected, computed, provenance, note=""):
    return Check(
        description=desc,
        expected=expected,
        computed=computed,
        passed=expected == computed,
        provenance=provenance,
        note=note,
    )


def _true_check(desc, computed, provenance, note=""):
    return _eq_check(desc, True, bool(computed), provenance, note)


# ---------------------------------------------------------------------
# individual suites


def _suite_rook(seed, slow, opts):
    checks = []
    sizes = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)]
    if slow:
        sizes.append((3, 5))
    for m, n in sizes:
        g = cartesian_product(catalog.complete(m), catalog.complete(n))
        case_opts = opts
        if m * n >= 15:  # the stretch case needs ~3.3M raw candidates
            case_opts = SearchOptions(
                threads=opts.threads,
                time_budget_s=opts.time_budget_s,
                max_candidates=max(opts.max_candidates, 6_000_000),
            )
        cert = gonality(g, case_opts, upper_bound_hint=(m - 1) * n)
        checks.append(
            _eq_check(
                f"gonality of the {m}x{n} rook product", (m - 1) * n,
                cert.gonality, "paper",
            )
        )
    return checks


def _suite_genus1_k2(seed, slow, opts):
    checks = []
    k2 = catalog.complete(2)
    members = catalog.genus1_census(3, 5)
    for i, g in enumerate(members):
        name = catalog.census_entry_name(g, i)
        cert = gonality(cartesian_product(g, k2), opts, upper_bound_hint=min(g.n, 4))
        checks.append(
            _eq_check(
                f"gonality of {name} x K2", min(g.n, 4), cert.gonality, "paper"
            )
        )
    checks.append(
        _eq_check("genus-1 census members on 3..5 vertices", 18, len(members),
                  "derived",
                  note="8 simple plus 10 non-simple, from exhaustive enumeration")
    )
    return checks


def _suite_table1(seed, slow, opts):
    # the twelve simple products with published gonalities
    k2 = catalog.complete(2)
    cases = [
        ("K2 x K2", catalog.complete(2), k2, 2),
        ("K2 x P3", catalog.complete(2), catalog.path(3), 2),
        ("P3 x P3", catalog.path(3), catalog.path(3), 3),
        ("K3 x K3", catalog.complete(3), catalog.complete(3), 6),
        ("K3 x K2", catalog.complete(3), k2, 3),
        ("C4 x K2", catalog.cycle(4), k2, 4),
        ("C5 x K2", catalog.cycle(5), k2, 4),
        ("T(3,1) x K2", catalog.tadpole(3, 1), k2, 4),
        ("T(3,2) x K2", catalog.tadpole(3, 2), k2, 4),
        ("T(4,1) x K2", catalog.tadpole(4, 1), k2, 4),
        ("bull x K2", catalog.bull(), k2, 4),
        ("cricket x K2", catalog.cricket(), k2, 4),
    ]
    checks = []
    for name, a, b, expected_gon in cases:
        product = cartesian_product(a, b)
        cert = gonality(product, opts, upper_bound_hint=expected_gon)
        conj = conjecture_bound(product)
        checks.append(
            _eq_check(f"gonality of {name}", expected_gon, cert.gonality, "paper")
        )
        checks.append(
            _eq_check(
                f"{name} attains the genus bound floor((g+3)/2)",
                conj, cert.gonality, "paper",
            )
        )
    return checks


def _suite_nonsimple(seed, slow, opts):
    checks = []
    b2 = catalog.banana(2)
    b21 = catalog.double_banana(2, 1)
    k2 = catalog.complete(2)
    k3 = catalog.complete(3)

    for name, a, b, expected_gon in [
        ("B2 x B2", b2, b2, 4),
        ("B(2,1) x K3", b21, k3, 6),
    ]:
        product = cartesian_product(a, b)
        cert = gonality(product, opts, upper_bound_hint=expected_gon)
        checks.append(
            _eq_check(f"gonality of {name}", expected_gon, cert.gonality, "paper")
        )
        checks.append(
            _eq_check(
                f"{name} attains the genus bound floor((g+3)/2)",
                conjecture_bound(product), cert.gonality, "paper",
            )
        )

    members = catalog.genus1_census(3, 5)
    nonsimple = [g for g in members if not g.is_simple()]
    for i, g in enumerate(nonsimple):
        product = cartesian_product(g, k2)
        cert = gonality(product, opts, upper_bound_hint=min(g.n, 4))
        checks.append(
            _eq_check(
                f"non-simple genus-1 member {i} (n={g.n}) x K2 attains "
                "floor((g+3)/2)",
                conjecture_bound(product), cert.gonality, "paper",
            )
        )

    checks.append(
        Check(
            description="non-simple genus-1 census count on 3..5 vertices "
            "(published value 9)",
            expected=9,
            computed=len(nonsimple),
            passed=True,
            provenance="paper",
            informational=True,
            note="enumeration disagrees with the published count; the extra "
            "member is the doubled edge with a three-leaf branch vertex"
            if len(nonsimple) != 9
            else "",
        )
    )

    # the one product strictly below the genus bound
    product = cartesian_product(b21, b21)
    cert = gonality(product, opts, upper_bound_hint=6)
    checks.append(
        _eq_check("gonality of B(2,1) x B(2,1)", 5, cert.gonality, "derived",
                  note="published bound is <= 5; exact value frozen from "
                  "this search and cross-checked against the brute-force "
                  "rank oracle in the test suite")
    )
    checks.append(
        _true_check(
            "B(2,1) x B(2,1) sits strictly below floor((g+3)/2)",
            cert.gonality < conjecture_bound(product), "paper",
        )
    )
    return checks


def _suite_riemann_roch(seed, slow, opts):
    rng = random.Random(seed)
    pool = [
        g
        for _, g in catalog.small_instances(max_vertices=8)
        if g.genus() <= 8 and g.n <= 8
    ]
    checks = []
    failures = 0
    total = 200
    for _ in range(total):
        g = rng.choice(pool)
        genus = g.genus()
        deg = rng.randint(-3, 2 * genus + 2)
        chips = _random_divisor(rng, g.n, deg)
        if riemann_roch_residual(g, Divisor(chips)) != 0:
            failures += 1
    checks.append(
        _eq_check(
            f"Riemann-Roch residual vanishes on {total} random divisors "
            "(degree -3 .. 2g+2, graphs up to 8 vertices)",
            0, failures, "paper",
        )
    )
    return checks


def _random_divisor(rng, n, degree):
    # scatter |degree|+2n single chips with signs, then fix the total
    chips = [0] * n
    for _ in range(abs(degree) + n):
        chips[rng.randrange(n)] += rng.choice((-1, 1))
    diff = degree - sum(chips)
    chips[rng.randrange(n)] += diff
    return tuple(chips)


def _suite_upperbound(seed, slow, opts):
    rng = random.Random(seed)
    pool = [
        (name, g)
        for name, g in catalog.small_instances(max_vertices=4, max_edges=8)
    ]
    checks = []
    replication_failures = []
    bound_failures = []
    pairs = []
    while len(pairs) < 50:
        pair = rng.choice(pool), rng.choice(pool)
        if pair[0][1].n + pair[1][1].n <= 7:  # keeps every search in budget
            pairs.append(pair)
    for (name_a, a), (name_b, b) in pairs:
        cert_a = gonality(a)
        witness = cert_a.witness
        product = cartesian_product(a, b)
        replicated = replicate_divisor(witness, a, b, side="left")
        if replicated.degree() != cert_a.gonality * b.n or not has_positive_rank(
            product, replicated
        ):
            replication_failures.append((name_a, name_b))
        cert_b = gonality(b)
        expected = expected_product_gonality(a, b, cert_a.gonality, cert_b.gonality)
        cert = gonality(product, opts, upper_bound_hint=expected)
        if cert.gonality > expected:
            bound_failures.append((name_a, name_b))
    checks.append(
        _eq_check(
            "replicated witnesses keep positive rank on 50 random products",
            [], replication_failures, "paper",
        )
    )
    checks.append(
        _eq_check(
            "exact product gonality never exceeds the replication bound on "
            "those 50 products",
            [], bound_failures, "paper",
        )
    )
    return checks


def _suite_arbitrarily_large(seed, slow, opts):
    checks = []
    for n in range(2, 6):
        g = catalog.chain(n)
        product = cartesian_product(g, g)
        index = ProductIndex(g.n, g.n)
        chips = [0] * (g.n * g.n)
        for i in range(n):
            for j in range(n):
                chips[index.flat(i, j)] = 1
        chips[index.flat(n - 1, n - 1)] += 1
        d = Divisor(tuple(chips))
        checks.append(
            _eq_check(f"diagonal divisor degree on chain({n}) squared",
                      n * n + 1, d.degree(), "trivial")
        )
        checks.append(
            _true_check(
                f"diagonal divisor on chain({n}) squared has positive rank",
                has_positive_rank(product, d), "paper",
            )
        )
    for n in range(2, 5):
        checks.append(
            _eq_check(f"gonality of chain({n})", n,
                      gonality(catalog.chain(n), opts).gonality, "paper")
        )
    # the n = 2 product is small enough to search outright
    product = cartesian_product(catalog.chain(2), catalog.chain(2))
    cert = gonality(product, opts, upper_bound_hint=6)
    checks.append(
        _true_check(
            "chain(2) squared stays below the replication bound",
            cert.gonality < 6, "paper",
        )
    )
    return checks


def _suite_example_simple(seed, slow, opts):
    g = catalog.k4_tail()
    checks = [
        _eq_check("k4_tail vertex count", 8, g.n, "trivial"),
        _eq_check("k4_tail edge count", 10, g.num_edges(), "trivial"),
        _eq_check("gonality of k4_tail", 3, gonality(g, opts).gonality, "paper"),
    ]
    product = cartesian_product(g, g)
    index = ProductIndex(8, 8)
    chips = [0] * 64
    for i in range(4):
        for j in range(4):
            chips[index.flat(i, j)] += 1
    chips[index.flat(3, 3)] += 1
    for v in (4, 5, 6):
        chips[index.flat(v, v)] += 2
    d = Divisor(tuple(chips))
    checks.append(_eq_check("special divisor degree on the k4_tail square",
                            23, d.degree(), "trivial"))
    checks.append(
        _true_check(
            "degree-23 divisor on the k4_tail square has positive rank "
            "(far below the replication bound of 24)",
            has_positive_rank(product, d), "paper",
        )
    )
    return checks


def _suite_spencer(seed, slow, opts):
    checks = []
    instances = [
        (name, g)
        for name, g in catalog.small_instances(max_vertices=4, max_edges=8)
        if g.num_edges() <= 8 and g.n <= 4
    ]
    mismatch = []
    tested_classes = 0
    for name, g in instances:
        genus = g.genus()
        realizable = sourceless_divisor_classes(g)
        for deg in range(-2, genus):
            for rep in _degree_classes(g, deg):
                tested_classes += 1
                effective = has_effective_rep(g, rep)
                realized = rep.chips in realizable.get(deg, set())
                if effective != realized:
                    mismatch.append((name, deg, rep.chips))
    checks.append(
        _eq_check(
            f"effectivity matches sourceless realizability on {tested_classes} "
            "divisor classes (degree <= genus-1, graphs up to 4 vertices and "
            "8 edges)",
            [], mismatch, "paper",
        )
    )

    g, d = rook_defeat_instance()
    checks.append(_eq_check("defeat divisor degree on the 5x5 rook product",
                            19, d.degree(), "paper"))
    loaded = frozenset(i for i, c in enumerate(d.chips) if c == 6)
    survived = all(
        loaded <= dhar_burn(g, d, q).unburned
        for q in range(g.n)
        if d.chips[q] == 0
    )
    checks.append(
        _true_check(
            "all three loaded vertices survive the burn from every chipless "
            "start",
            survived, "paper",
        )
    )
    return checks


def _degree_classes(g: Multigraph, degree: int):
    """One reduced representative per divisor class of the given degree:
    enumerate configurations bounded by valence-1 off the base, keep the
    ones the burn certifies as reduced, and set the base entry to match
    the degree."""
    from .reduction import _burn_mask
    import numpy as np

    n = g.n
    caps = [g.valence(v) for v in range(1, n)]
    for tail in itertools.product(*(range(c) for c in caps)):
        arr = np.array((0,) + tail, dtype=np.int64)
        if _burn_mask(g.mult, arr, 0).all():
            chips = (degree - sum(tail),) + tail
            yield Divisor(chips)


def _suite_conjecture(seed, slow, opts):
    checks = []
    offenders_g1 = []
    offenders_g = []
    tree_mismatch = []
    for name, g in catalog.small_instances(max_vertices=8):
        cert = gonality(g, opts)
        genus = g.genus()
        if cert.gonality > genus + 1:
            offenders_g1.append(name)
        if genus >= 2 and cert.gonality > genus:
            offenders_g.append(name)
        if (cert.gonality == 1) != g.is_tree():
            tree_mismatch.append(name)
    checks.append(
        _eq_check("gonality <= genus+1 across the catalog (up to 8 vertices)",
                  [], offenders_g1, "paper")
    )
    checks.append(
        _eq_check("gonality <= genus whenever genus >= 2", [], offenders_g,
                  "paper")
    )
    checks.append(
        _eq_check("gonality 1 exactly on trees", [], tree_mismatch, "paper")
    )

    genus1_offenders = []
    for i, g in enumerate(catalog.genus1_census(3, 6)):
        if gonality(g, opts).gonality != 2:
            genus1_offenders.append(i)
    checks.append(
        _eq_check("every genus-1 census member (3..6 vertices) has gonality 2",
                  [], genus1_offenders, "paper")
    )

    # the conjectured bound, proven for nontrivial products
    factors = [
        ("K2", catalog.complete(2)),
        ("P3", catalog.path(3)),
        ("K3", catalog.complete(3)),
        ("B2", catalog.banana(2)),
        ("B(2,1)", catalog.double_banana(2, 1)),
        ("star4", catalog.star(4)),
        ("C4", catalog.cycle(4)),
    ]
    product_offenders = []
    for (name_a, a), (name_b, b) in itertools.combinations_with_replacement(
        factors, 2
    ):
        report = product_report(a, b, opts)
        if report.is_exact() and report.actual > report.conjecture_bound:
            product_offenders.append(f"{name_a} x {name_b}")
    checks.append(
        _eq_check(
            "every exactly-searched product respects floor((g+3)/2)",
            [], product_offenders, "paper",
        )
    )
    return checks


def _suite_bramble(seed, slow, opts):
    rng = random.Random(seed)
    checks = []
    order_failures = []
    gonality_failures = []
    pairs = []
    for _ in range(20):
        t1 = _random_tree(rng, rng.randint(2, 6))
        t2 = _random_tree(rng, rng.randint(2, 6))
        pairs.append((t1, t2))
    for t1, t2 in pairs:
        product = cartesian_product(t1, t2)
        family = tree_product_bramble(t1, t2)
        expected_order = min(t1.n, t2.n)
        kind = classify(product, family)
        got_order = order(product, family)
        if kind != STRICT_BRAMBLE or got_order != expected_order:
            order_failures.append((t1.n, t2.n, kind, got_order))
        # order is a lower bound, replication the matching upper bound;
        # spreading the larger tree's degree-1 witness costs min(m, n)
        side = "right" if t1.n <= t2.n else "left"
        witness = gonality(t2 if side == "right" else t1).witness
        spread = replicate_divisor(
            witness, t1, t2, side=side
        )
        if spread.degree() != expected_order or not has_positive_rank(
            product, spread
        ):
            gonality_failures.append((t1.n, t2.n, "replication"))
    checks.append(
        _eq_check(
            "cross families on 20 random tree products are strict brambles "
            "of order min(m, n)",
            [], order_failures, "paper",
        )
    )
    checks.append(
        _eq_check(
            "bramble order meets the replicated witness, pinning gonality "
            "at min(m, n)",
            [], gonality_failures, "paper",
        )
    )
    # one pair small enough to cross-check by exhaustive search
    t1, t2 = catalog.path(2), catalog.path(3)
    cert = gonality(cartesian_product(t1, t2), opts)
    checks.append(
        _eq_check("exhaustive search agrees on P2 x P3", 2, cert.gonality,
                  "paper")
    )
    return checks


def _random_tree(rng, n):
    edges = [(rng.randrange(i), i, 1) for i in range(1, n)]
    from .multigraph import build

    return build(n, edges)


def _suite_burning(seed, slow, opts):
    rng = random.Random(seed)
    checks = []

    # complete graphs: deg <= n-2 and a chipless start burn everything
    survivors = []
    for n in range(2, 7):
        g = catalog.complete(n)
        for chips in _effective_divisors_up_to(n, n - 2):
            d = Divisor(chips)
            for q in range(n):
                if chips[q] == 0:
                    if dhar_burn(g, d, q).unburned:
                        survivors.append((n, chips, q))
    checks.append(
        _eq_check(
            "low-degree divisors on complete graphs (n <= 6, exhaustive) "
            "never survive a chipless burn",
            [], survivors, "paper",
        )
    )

    # rook products: some burn consumes two full rows and two full columns
    failures = []
    for m, n in ((3, 3), (3, 4)):
        g = cartesian_product(catalog.complete(m), catalog.complete(n))
        index = ProductIndex(m, n)
        deg = n * (m - 1) - 1
        for _ in range(500):
            chips = [0] * (m * n)
            for _ in range(deg):
                chips[rng.randrange(m * n)] += 1
            d = Divisor(tuple(chips))
            if not _some_burn_clears_rows_and_columns(g, d, index):
                failures.append((m, n, tuple(chips)))
    checks.append(
        _eq_check(
            "500 sampled degree-n(m-1)-1 divisors on each rook product admit "
            "a start whose burn consumes two full rows and columns",
            [], failures, "paper",
        )
    )
    return checks


def _effective_divisors_up_to(n, max_degree):
    for deg in range(0, max_degree + 1):
        stack = [(deg, ())]
        while stack:
            rest, prefix = stack.pop()
            if len(prefix) == n - 1:
                yield prefix + (rest,)
                continue
            for a in range(rest + 1):
                stack.append((rest - a, prefix + (a,)))


def _some_burn_clears_rows_and_columns(g, d, index):
    m, n = index.m, index.k
    column_chips = [
        sum(d[index.flat(i, j)] for i in range(m)) for j in range(n)
    ]
    for j in range(n):
        if column_chips[j] >= m - 1:
            continue
        for i in range(m):
            v = index.flat(i, j)
            if d[v]:
                continue
            burned = dhar_burn(g, d, v).burned
            rows = sum(
                all(index.flat(r, c) in burned for c in range(n))
                for r in range(m)
            )
            cols = sum(
                all(index.flat(r, c) in burned for r in range(m))
                for c in range(n)
            )
            if rows >= 2 and cols >= 2:
                return True
    return False


SUITE_NAMES = (
    "rook",
    "genus1-k2",
    "table1",
    "nonsimple",
    "riemann-roch",
    "upperbound",
    "arbitrarily-large",
    "example-simple",
    "spencer",
    "conjecture",
    "bramble",
    "burning",
)

_SUITES = {
    "rook": _suite_rook,
    "genus1-k2": _suite_genus1_k2,
    "table1": _suite_table1,
    "nonsimple": _suite_nonsimple,
    "riemann-roch": _suite_riemann_roch,
    "upperbound": _suite_upperbound,
    "arbitrarily-large": _suite_arbitrarily_large,
    "example-simple": _suite_example_simple,
    "spencer": _suite_spencer,
    "conjecture": _suite_conjecture,
    "bramble": _suite_bramble,
    "burning": _suite_burning,
}


def run_suite(
    name: str,
    seed: int = _DEFAULT_SEED,
    slow: bool = False,
    threads: int = 1,
    time_budget_s: float | None = None,
) -> SuiteReport:
    """Run one named suite and report its checks."""
    if name not in _SUITES:
        raise ValidationError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    opts = SearchOptions(threads=threads, time_budget_s=time_budget_s)
    start = time.monotonic()
    checks = _SUITES[name](seed, slow, opts)
    return SuiteReport(
        suite=name,
        seed=seed,
        checks=tuple(checks),
        elapsed_s=time.monotonic() - start,
    )


def run_all(
    seed: int = _DEFAULT_SEED,
    slow: bool = False,
    threads: int = 1,
    time_budget_s: float | None = None,
) -> list[SuiteReport]:
    return [
        run_suite(name, seed=seed, slow=slow, threads=threads,
                  time_budget_s=time_budget_s)
        for name in SUITE_NAMES
    ]
