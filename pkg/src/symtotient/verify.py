"""Verification sweeps: every closed form against its independent oracle.

Each cell checks one theorem-level identity over a fixed parameter grid.
The manifest maps cell names to suites so the CLI and the acceptance
tests run the very same sweeps; adding a theorem is one manifest entry.
Grid points whose tuple space exceeds the active budget are reported as
skipped with a reason, never silently dropped.
"""

import math
import random
from dataclasses import dataclass, field, replace

from . import congruence as cg
from . import totient as tt
from .arith import divisor_count, identity, jordan_totient, one, primes_in_range
from .budget import DEFAULT_BUDGET, BudgetExceededError
from .symfield import (
    QuadraticForm,
    SymSystem,
    closed_count_e1e2,
    closed_count_e2,
    closed_count_el_mod2,
    count_zeros_bruteforce,
    e2_matrix,
    extend_with_ek,
    quad_form_count,
    quadform_value_histogram,
)

# The sweep grids are pinned to the default budget; shrinking the runtime
# budget skips the cells that no longer fit instead of shrinking the grid.
GRID_CAP = DEFAULT_BUDGET


@dataclass
class CellResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)
    skips: list[str] = field(default_factory=list)

    def check(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(label)

    def skip(self, label: str) -> None:
        self.skipped += 1
        self.skips.append(label)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        total = self.passed + self.failed
        line = f"{self.name}: {self.passed}/{total} ok"
        if self.skipped:
            line += f", {self.skipped} skipped ({self.skips[0]})"
        if self.failures:
            line += f" FAIL [{'; '.join(self.failures[:5])}]"
        return line


def _e2_grid():
    for p in primes_in_range(3, 31):
        for k in range(2, 7):
            if p**k <= GRID_CAP:
                yield k, p


def cell_e2(budget=None) -> CellResult:
    """Closed e_2 count == enumeration over every in-cap (k, p), odd p <= 31,
    2 <= k <= 6; the grid contains the degenerate cells (4,3) and (6,5)."""
    res = CellResult("e2")
    for k, p in _e2_grid():
        try:
            brute = count_zeros_bruteforce(SymSystem(k, {2}), p, budget=budget)
        except BudgetExceededError:
            res.skip(f"k={k} p={p} over budget")
            continue
        res.check(closed_count_e2(k, p) == brute, f"k={k} p={p}")
    return res


def cell_e1e2(budget=None) -> CellResult:
    """Closed (e_1, e_2) count == enumeration over the same grid."""
    res = CellResult("e1e2")
    for k, p in _e2_grid():
        try:
            brute = count_zeros_bruteforce(SymSystem(k, {1, 2}), p, budget=budget)
        except BudgetExceededError:
            res.skip(f"k={k} p={p} over budget")
            continue
        res.check(closed_count_e1e2(k, p) == brute, f"k={k} p={p}")
    return res


def cell_p2_closed(budget=None) -> CellResult:
    """All sieved-binomial closed forms at p = 2 against enumeration, k <= 20."""
    res = CellResult("p2-closed")
    for k in range(2, 21):
        try:
            b2 = count_zeros_bruteforce(SymSystem(k, {2}), 2, budget=budget)
            b12 = count_zeros_bruteforce(SymSystem(k, {1, 2}), 2, budget=budget)
        except BudgetExceededError:
            res.skip(f"k={k} over budget")
            continue
        res.check(closed_count_e2(k, 2) == b2, f"e2 k={k}")
        res.check(closed_count_e1e2(k, 2) == b12, f"e1e2 k={k}")
    for k in range(1, 21):
        for l in range(1, min(4, k) + 1):
            try:
                bl = count_zeros_bruteforce(SymSystem(k, {l}), 2, budget=budget)
            except BudgetExceededError:
                res.skip(f"el l={l} k={k} over budget")
                continue
            res.check(closed_count_el_mod2(l, k) == bl, f"el l={l} k={k}")
    res.check(closed_count_e2(3, 2) == 4, "spot N_3(e2,2)=4")
    res.check(closed_count_el_mod2(3, 3) == 7, "spot N_3(e3,2)=7")
    return res


def _stated_sum_e2_ek(k: int, p: int) -> int:
    # the theorem-stated sum for J = {2, k}: truncated alternating sum plus
    # the boundary term (-1)^k (kp - 1)
    return sum(
        (-1) ** (j + 1) * math.comb(k, j) * closed_count_e2(k - j, p)
        for j in range(1, k - 1)
    ) + (-1) ** k * (k * p - 1)


def _stated_sum_e1e2_ek(k: int, p: int) -> int:
    # the analogue for J = {1, 2, k}: boundary term (-1)^k (k - 1)
    return sum(
        (-1) ** (j + 1) * math.comb(k, j) * closed_count_e1e2(k - j, p)
        for j in range(1, k - 1)
    ) + (-1) ** k * (k - 1)


def cell_recurrence(budget=None) -> CellResult:
    """The append-e_k recurrence against enumeration for J in {1},{2},{1,2},
    3 <= k <= 5, p in {2,3,5,7}; plus the two theorem-stated sums whose
    boundary terms the recurrence must reproduce."""
    res = CellResult("recurrence")
    for p in (2, 3, 5, 7):
        for k in (3, 4, 5):
            for J in ({1}, {2}, {1, 2}):
                ext = extend_with_ek(J, k, p, budget=budget)
                try:
                    brute = count_zeros_bruteforce(
                        SymSystem(k, frozenset(J) | {k}), p, budget=budget
                    )
                except BudgetExceededError:
                    res.skip(f"J={sorted(J)} k={k} p={p} over budget")
                    continue
                res.check(ext == brute, f"J={sorted(J)} k={k} p={p}")
            res.check(
                extend_with_ek({2}, k, p, budget=budget) == _stated_sum_e2_ek(k, p),
                f"boundary(kp-1) k={k} p={p}",
            )
            res.check(
                extend_with_ek({1, 2}, k, p, budget=budget) == _stated_sum_e1e2_ek(k, p),
                f"boundary(k-1) k={k} p={p}",
            )
    return res


def _random_symmetric(rng: random.Random, k: int, p: int):
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            rows[i][j] = rows[j][i] = rng.randrange(p)
    return rows


def _random_degenerate(rng: random.Random, k: int, p: int):
    # a sum of fewer than k rank-one pieces is always singular
    r = rng.randrange(k)
    rows = [[0] * k for _ in range(k)]
    for _ in range(r):
        v = [rng.randrange(p) for _ in range(k)]
        for i in range(k):
            for j in range(k):
                rows[i][j] = (rows[i][j] + v[i] * v[j]) % p
    return rows


def cell_quadform(budget=None) -> CellResult:
    """Quadratic-form solution counts: per sampled form the counts over all b
    match enumeration and sum to p^k (50 forms per (k, p), 10 of them forced
    degenerate; seeded, so the sample is reproducible)."""
    rng = random.Random(0x5EED)
    res = CellResult("quadform")
    for p in (3, 5, 7, 13):
        for k in range(1, 5):
            samples = [_random_symmetric(rng, k, p) for _ in range(40)]
            samples += [_random_degenerate(rng, k, p) for _ in range(10)]
            for idx, rows in enumerate(samples):
                form = QuadraticForm(p, rows)
                try:
                    hist = quadform_value_histogram(form, budget=budget)
                except BudgetExceededError:
                    res.skip(f"k={k} p={p} over budget")
                    break
                counts = [quad_form_count(form, b) for b in range(p)]
                res.check(
                    sum(counts) == p**k and counts == [int(h) for h in hist],
                    f"k={k} p={p} sample={idx}",
                )
    return res


def _nonempty_subsets(k: int):
    full = list(range(1, k + 1))
    out = []
    for mask in range(1, 1 << k):
        out.append(frozenset(j for j in full if mask >> (j - 1) & 1))
    return out


def cell_product_forms(budget=None) -> CellResult:
    """Both product-form totients against Z_n^k enumeration for n <= 50,
    k <= 3, every nonempty J."""
    res = CellResult("product-forms")
    for k in (1, 2, 3):
        subsets = _nonempty_subsets(k)
        for n in range(1, 51):
            for J in subsets:
                sj = tt.TotientSpec(k, J, "joint", n)
                si = tt.TotientSpec(k, J, "individual", n)
                try:
                    bj = tt.varphi_bruteforce(sj, budget=budget)
                    bi = tt.phi_bruteforce(si, budget=budget)
                except BudgetExceededError:
                    res.skip(f"n={n} k={k} over budget")
                    continue
                res.check(tt.varphi(sj, budget=budget) == bj, f"joint n={n} k={k} J={sorted(J)}")
                res.check(tt.phi(si, budget=budget) == bi, f"indiv n={n} k={k} J={sorted(J)}")
    return res


def cell_relation(budget=None) -> CellResult:
    """The subset-alternating bridge between the two totients, both directions,
    against enumerated subset values at k = 3, p in {3, 5}, a <= 2."""
    res = CellResult("relation")
    k = 3
    subsets = _nonempty_subsets(k)
    for p in (3, 5):
        for a in (1, 2):
            n = p**a
            try:
                joint = {
                    J: tt.varphi_bruteforce(tt.TotientSpec(k, J, "joint", n), budget=budget)
                    for J in subsets
                }
                indiv = {
                    J: tt.phi_bruteforce(tt.TotientSpec(k, J, "individual", n), budget=budget)
                    for J in subsets
                }
            except BudgetExceededError:
                res.skip(f"n={n} over budget")
                continue
            full = frozenset({1, 2, 3})
            alt_joint = sum((-1) ** (len(J) + 1) * joint[J] for J in subsets)
            alt_indiv = sum((-1) ** (len(J) + 1) * indiv[J] for J in subsets)
            res.check(indiv[full] == alt_joint, f"indiv-from-joint n={n}")
            res.check(joint[full] == alt_indiv, f"joint-from-indiv n={n}")
    return res


def cell_jordan(budget=None) -> CellResult:
    """The full-set joint totient equals the Jordan totient, closed forms on
    both sides, n <= 10^4, k <= 5."""
    res = CellResult("jordan")
    for k in range(1, 6):
        J = frozenset(range(1, k + 1))
        bad = None
        for n in range(1, 10_001):
            spec = tt.TotientSpec(k, J, "joint", n)
            if tt.varphi(spec) != jordan_totient(k, n):
                bad = n
                break
        res.check(bad is None, f"k={k} first mismatch n={bad}")
    return res


def cell_phi12(budget=None) -> CellResult:
    """The closed J={1,2} totient: against the J={1,k} product at k = 2 for
    n <= 500, and against enumeration for k in {2, 3}, n <= 40."""
    res = CellResult("phi12")
    bad = None
    for n in range(1, 501):
        if tt.closed_phi_12(2, n) != tt.toth_phi_1k(2, n):
            bad = n
            break
    res.check(bad is None, f"toth k=2 first mismatch n={bad}")
    for k in (2, 3):
        for n in range(1, 41):
            spec = tt.TotientSpec(k, {1, 2}, "individual", n)
            try:
                brute = tt.phi_bruteforce(spec, budget=budget)
            except BudgetExceededError:
                res.skip(f"k={k} n={n} over budget")
                continue
            res.check(tt.closed_phi_12(k, n) == brute, f"k={k} n={n}")
    res.check(tt.closed_phi_12(2, 9) == 18, "spot phi_12(2,9)=18")
    return res


def cell_phi123(budget=None) -> CellResult:
    """The closed J={1,2,3} totient against enumeration for n <= 40."""
    res = CellResult("phi123")
    for n in range(1, 41):
        spec = tt.TotientSpec(3, {1, 2, 3}, "individual", n)
        try:
            brute = tt.phi_bruteforce(spec, budget=budget)
        except BudgetExceededError:
            res.skip(f"n={n} over budget")
            continue
        res.check(tt.closed_phi_123(n) == brute, f"n={n}")
    res.check(tt.closed_phi_123(5) == 40, "spot phi_123(5)=40")
    res.check(tt.closed_phi_123(2) == 1, "spot phi_123(2)=1")
    return res


MENON_WEIGHTS = (("id", identity), ("one", one), ("tau", divisor_count))


def cell_menon(budget=None) -> CellResult:
    """Menon identity, both sides, for n <= 40 over the three (k, J) shapes and
    three weight functions; includes the classical gcd-sum spot value."""
    res = CellResult("menon")
    for k, J in ((1, frozenset({1})), (2, frozenset({1, 2})), (3, frozenset({1, 2, 3}))):
        for n in range(1, 41):
            for fname, f in MENON_WEIGHTS:
                try:
                    lhs = tt.menon_lhs(n, k, J, f, budget=budget)
                except BudgetExceededError:
                    res.skip(f"n={n} k={k} over budget")
                    continue
                rhs = tt.menon_rhs(n, k, J, f, budget=budget)
                res.check(lhs == rhs, f"n={n} k={k} f={fname}")
    res.check(tt.menon_lhs(6, 1, {1}, identity) == 8, "classical n=6 gcd-sum = 8")
    return res


_CONSTRAINT_FAMILIES = (
    frozenset({1}),
    frozenset({2}),
    frozenset({1, 2}),
    frozenset({2, 3}),
    frozenset({1, 2, 3}),
)


def cell_congruence_classes(budget=None) -> CellResult:
    """Right-hand-side behavior of restricted congruences for n <= 30, k <= 3:
    counts constant on gcd classes, unit fibers uniform, and the unit-RHS
    formula (an exact division) matching enumeration."""
    res = CellResult("congruence-classes")
    for k in (1, 2, 3):
        families = [J for J in _CONSTRAINT_FAMILIES if max(J) <= k]
        for n in range(1, 31):
            for J in families:
                prob = cg.CongruenceProblem(
                    (1,) * k, 0, n, SymSystem(k, J, "individual")
                )
                try:
                    hist = cg.solution_histogram(prob, budget=budget)
                except BudgetExceededError:
                    res.skip(f"n={n} k={k} over budget")
                    continue
                classes_ok = all(
                    int(hist[b]) == int(hist[math.gcd(b, n) % n]) for b in range(n)
                )
                res.check(classes_ok, f"classes n={n} k={k} J={sorted(J)}")
                units = [b for b in range(n) if math.gcd(b, n) == 1]
                uniform = len({int(hist[b]) for b in units}) <= 1
                res.check(uniform, f"unit-fibers n={n} k={k} J={sorted(J)}")
                closed = cg.count_unit_rhs(replace(prob, b=1 % n), budget=budget)
                res.check(
                    closed == int(hist[1 % n]),
                    f"unit-rhs n={n} k={k} J={sorted(J)}",
                )
    return res


def cell_g3_g4(budget=None) -> CellResult:
    """The three- and four-variable closed products against enumeration:
    g3 for every n <= 50 and every unit m; g4 for odd n <= 27, plus the
    even-n zero checked by enumeration at n in {2, 4, 6}."""
    res = CellResult("g3-g4")
    for n in range(1, 51):
        prob = cg.CongruenceProblem((1, 1, 1), 0, n, SymSystem(3, {2, 3}, "individual"))
        try:
            hist = cg.solution_histogram(prob, budget=budget)
        except BudgetExceededError:
            res.skip(f"g3 n={n} over budget")
            continue
        units = [m for m in range(n) if math.gcd(m, n) == 1]
        res.check(
            all(cg.g3_closed(m, n) == int(hist[m]) for m in units), f"g3 n={n}"
        )
    for n in list(range(1, 28, 2)) + [2, 4, 6]:
        prob = cg.CongruenceProblem((1, 1, 1, 1), 0, n, SymSystem(4, {3, 4}, "individual"))
        try:
            hist = cg.solution_histogram(prob, budget=budget)
        except BudgetExceededError:
            res.skip(f"g4 n={n} over budget")
            continue
        units = [m for m in range(n) if math.gcd(m, n) == 1]
        res.check(
            all(cg.g4_closed(m, n) == int(hist[m]) for m in units), f"g4 n={n}"
        )
    for n in range(2, 51, 2):
        res.check(cg.g4_closed(1, n) == 0, f"g4 even n={n}")
    res.check(cg.g3_closed(1, 5) == 10, "spot g3(1,5)=10")
    res.check(cg.g4_closed(1, 3) == 5, "spot g4(1,3)=5")
    return res


def cell_ramanujan(budget=None) -> CellResult:
    """The generalized Ramanujan sum: product form against the direct
    exponential sum for n <= 20, k in {2, 3}, J in {{2}, {1,2}}, every m."""
    res = CellResult("ramanujan")
    for k in (2, 3):
        for J in (frozenset({2}), frozenset({1, 2})):
            for n in range(1, 21):
                try:
                    ok = all(
                        cg.generalized_ramanujan(m, n, k, J, budget=budget)
                        == cg.generalized_ramanujan_direct(m, n, k, J, budget=budget)
                        for m in range(n)
                    )
                except BudgetExceededError:
                    res.skip(f"n={n} k={k} over budget")
                    continue
                res.check(ok, f"n={n} k={k} J={sorted(J)}")
    return res


def cell_degenerate_consistency(budget=None) -> CellResult:
    """The merged eta(0)-absorbing e_2 formula against the radical-reduction
    count of the explicit e_2 matrix at the degenerate arities k = 1 mod p."""
    res = CellResult("degenerate-e2")
    for k, p in ((4, 3), (7, 3), (6, 5), (8, 7), (12, 11)):
        res.check(
            closed_count_e2(k, p) == quad_form_count(e2_matrix(k, p), 0),
            f"k={k} p={p}",
        )
    return res


MANIFEST = (
    ("symfield", "e2", cell_e2),
    ("symfield", "e1e2", cell_e1e2),
    ("symfield", "p2-closed", cell_p2_closed),
    ("symfield", "recurrence", cell_recurrence),
    ("symfield", "quadform", cell_quadform),
    ("symfield", "degenerate-e2", cell_degenerate_consistency),
    ("totient", "product-forms", cell_product_forms),
    ("totient", "relation", cell_relation),
    ("totient", "jordan", cell_jordan),
    ("totient", "phi12", cell_phi12),
    ("totient", "phi123", cell_phi123),
    ("menon", "menon", cell_menon),
    ("congruence", "congruence-classes", cell_congruence_classes),
    ("congruence", "g3-g4", cell_g3_g4),
    ("congruence", "ramanujan", cell_ramanujan),
)

SUITES = ("all",) + tuple(dict.fromkeys(suite for suite, _, _ in MANIFEST))


def run_suite(suite: str = "all", budget: int | None = None) -> list[CellResult]:
    """Run every manifest cell in the suite, in manifest order."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    results = []
    for cell_suite, _, fn in MANIFEST:
        if suite in ("all", cell_suite):
            results.append(fn(budget=budget))
    return results
