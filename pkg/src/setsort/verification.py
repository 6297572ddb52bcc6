"""Executable checks for the sorting bound, decomposition lemma,
clump growth, truncation commutation, and the two witness theorems.

Every check scans an exhaustively enumerated corpus (never a random
sample) and reports a CheckResult; a failure carries the lexicographically
first counterexample so it can be replayed through the machine module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .enumeration import (
    CellSpec,
    canonical_partitions,
    find_witnesses,
)
from .machine import (
    ABA,
    Pattern,
    apply_phi,
    apply_phi_aba,
    iterate,
    sorting_depth,
)
from .words import (
    Word,
    clumped_count,
    concat,
    format_word,
    index_occurrence,
    is_sorted,
    mcount,
    n_distinct,
    slice_word,
    truncate,
)


_report_cache: dict[CellSpec, object] = {}


def cell_witness_report(cell: CellSpec, jobs: int = 1):
    """Memoized witness search; checks at the same N share one scan."""
    if cell not in _report_cache:
        _report_cache[cell] = find_witnesses(cell, jobs=jobs)
    return _report_cache[cell]


@dataclass(frozen=True)
class HeadDecomposition:
    """p = head^l1 s1 head^l2 s2 ... head^lm sm head^l(m+1), head absent from every s_i."""

    head: int
    exponents: tuple[int, ...]  # l1 .. l(m+1); all positive except possibly the last
    segments: tuple[Word, ...]  # s1 .. sm, nonempty, head-free

    def reassemble(self) -> Word:
        out: list[int] = []
        for exp, seg in zip(self.exponents, self.segments + ((),)):
            out.extend([self.head] * exp)
            out.extend(seg)
        return tuple(out)


def decompose_by_head(p: Sequence[int]) -> HeadDecomposition:
    if not p:
        raise ValueError("cannot decompose the empty word")
    p = tuple(p)
    head = p[0]
    exponents: list[int] = []
    segments: list[Word] = []
    i = 0
    n = len(p)
    while i < n:
        exp = 0
        while i < n and p[i] == head:
            exp += 1
            i += 1
        seg_start = i
        while i < n and p[i] != head:
            i += 1
        seg = p[seg_start:i]
        exponents.append(exp)
        if seg:
            segments.append(seg)
    if len(exponents) == len(segments):  # word ends inside a segment
        exponents.append(0)
    return HeadDecomposition(head=head, exponents=tuple(exponents), segments=tuple(segments))


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    counterexample: Word | None = None
    expected: str = ""
    actual: str = ""
    detail: str = ""

    def __post_init__(self):
        assert self.passed == (self.counterexample is None)

    def summary(self) -> str:
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name} [{self.scope}]"
        if self.detail:
            line += f" -- {self.detail}"
        if not self.passed:
            line += (
                f" counterexample={format_word(self.counterexample)}"
                f" expected={self.expected} actual={self.actual}"
            )
        return line


def all_canonical_upto(max_len: int, min_len: int = 1) -> Iterator[Word]:
    for length in range(min_len, max_len + 1):
        for n in range(1, length + 1):
            yield from canonical_partitions(CellSpec(n, length))


def check_lemma_decomposition(max_len: int = 8) -> CheckResult:
    """One aba pass equals the recursive pass on head-free segments followed
    by all copies of the head letter."""
    scope = f"canonical words, length <= {max_len}"
    for p in all_canonical_upto(max_len):
        dec = decompose_by_head(p)
        rhs = concat(
            *(apply_phi_aba(s) for s in dec.segments),
            (dec.head,) * sum(dec.exponents),
        )
        lhs = apply_phi_aba(p)
        if lhs != rhs:
            return CheckResult(
                "lemma-decomposition", scope, False, p,
                expected=format_word(rhs), actual=format_word(lhs),
            )
    return CheckResult("lemma-decomposition", scope, True)


def check_clump_growth(max_len: int = 8) -> CheckResult:
    """An unsorted word strictly gains clumped letters in one aba pass."""
    scope = f"unsorted canonical words, length <= {max_len}"
    for p in all_canonical_upto(max_len):
        if is_sorted(p):
            continue
        before = clumped_count(p)
        after = clumped_count(apply_phi_aba(p))
        if after <= before:
            return CheckResult(
                "clump-growth", scope, False, p,
                expected=f"> {before}", actual=str(after),
            )
    return CheckResult("clump-growth", scope, True)


def check_trunc_commute(max_len: int = 8) -> CheckResult:
    """Truncation commutes with the aba pass up to truncation."""
    scope = f"canonical words, length <= {max_len}"
    for p in all_canonical_upto(max_len):
        lhs = truncate(apply_phi_aba(p))
        rhs = truncate(apply_phi_aba(truncate(p)))
        if lhs != rhs:
            return CheckResult(
                "trunc-commute", scope, False, p,
                expected=format_word(rhs), actual=format_word(lhs),
            )
    return CheckResult("trunc-commute", scope, True)


def check_cor_lockstep(witnesses: Sequence[Sequence[int]]) -> CheckResult:
    """A witness gains exactly one clumped letter per pass: C after pass i is i,
    and the word first sorts at pass N."""
    scope = f"{len(witnesses)} witnesses"
    for p in witnesses:
        n = n_distinct(p)
        w = tuple(p)
        for i in range(n):
            c = clumped_count(w)
            if c != i:
                return CheckResult(
                    "lockstep", scope, False, tuple(p),
                    expected=f"C(phi^{i}) = {i}", actual=str(c),
                )
            w = apply_phi_aba(w)
        if not is_sorted(w):
            return CheckResult(
                "lockstep", scope, False, tuple(p),
                expected=f"sorted after {n} passes", actual="unsorted",
            )
    return CheckResult("lockstep", scope, True)


def check_upper_bound(max_len: int = 9) -> CheckResult:
    """Every word is sorted after N passes, N its distinct-letter count."""
    scope = f"canonical words, length <= {max_len}"
    count = 0
    for p in all_canonical_upto(max_len):
        count += 1
        if not is_sorted(iterate(p, Pattern(ABA), n_distinct(p))):
            return CheckResult(
                "upper-bound", scope, False, p,
                expected="sorted", actual="unsorted",
            )
    return CheckResult("upper-bound", scope, True, detail=f"{count} classes")


def check_theorem_minimal(n: int, jobs: int = 1) -> CheckResult:
    """The only witness of length <= 2N is (1 2 ... N)^2; shorter cells are empty."""
    scope = f"N={n}, L in [{n}, {2 * n}]"
    expected_word = tuple(range(1, n + 1)) * 2
    for length in range(n, 2 * n + 1):
        report = cell_witness_report(CellSpec(n, length), jobs=jobs)
        found = [w.witness for w in report.witnesses]
        if length < 2 * n:
            if found:
                return CheckResult(
                    "theorem-minimal", scope, False, found[0],
                    expected="no witness", actual=f"witness at L={length}",
                )
        elif found != [expected_word]:
            bad = found[0] if found else expected_word
            return CheckResult(
                "theorem-minimal", scope, False, bad,
                expected=format_word(expected_word),
                actual=" ".join(format_word(w) for w in found) or "none",
            )
    return CheckResult("theorem-minimal", scope, True)


def expected_next_minimal_count(n: int) -> int:
    return comb(n + 1, 2) + 2 * comb(n, 2)


def check_theorem_count(n: int, jobs: int = 1) -> CheckResult:
    """The length-2N+1 witness count matches the closed form."""
    scope = f"N={n}, L={2 * n + 1}"
    report = cell_witness_report(CellSpec(n, 2 * n + 1), jobs=jobs)
    want = expected_next_minimal_count(n)
    got = len(report.witnesses)
    if got != want:
        return CheckResult(
            "theorem-count", scope, False, (),
            expected=str(want), actual=str(got),
        )
    return CheckResult("theorem-count", scope, True, detail=f"{got} witnesses")


def check_multiplicity_profile(n: int, jobs: int = 1) -> CheckResult:
    """Every length-2N+1 witness has one triple letter and N-1 double letters."""
    scope = f"N={n}, L={2 * n + 1}"
    report = cell_witness_report(CellSpec(n, 2 * n + 1), jobs=jobs)
    for prof in report.witnesses:
        counts = sorted(prof.multiplicities.values(), reverse=True)
        if counts != [3] + [2] * (n - 1):
            return CheckResult(
                "multiplicity-profile", scope, False, prof.witness,
                expected="one letter x3, rest x2", actual=str(counts),
            )
    return CheckResult("multiplicity-profile", scope, True)


def family_count_identity(n: int) -> bool:
    """C(2N,2) - 3*C(N,2) = C(N+1,2): the head-triple closed form collapses."""
    return comb(2 * n, 2) - 3 * comb(n, 2) == comb(n + 1, 2)


def check_family_counts(n: int, jobs: int = 1) -> CheckResult:
    """Length-2N+1 witnesses split into tail-heavy / prefix-heavy / head-triple
    families of sizes C(N,2), C(N,2), C(N+1,2), and every double-head witness
    keeps both slices around the head's second occurrence at mcount <= 2."""
    scope = f"N={n}, L={2 * n + 1}"
    report = cell_witness_report(CellSpec(n, 2 * n + 1), jobs=jobs)
    tallies = {"tail-heavy": 0, "prefix-heavy": 0, "head-triple": 0}
    for prof in report.witnesses:
        p = prof.witness
        if prof.family is None:
            return CheckResult(
                "family-counts", scope, False, p,
                expected="a family tag", actual="unclassifiable",
            )
        tallies[prof.family] += 1
        if prof.first_letter_mult == 2:
            cut = index_occurrence(p, p[0], 2)
            left = mcount(slice_word(p, 1, cut))
            right = mcount(slice_word(p, cut, len(p)))
            if left > 2 or right > 2:
                return CheckResult(
                    "family-counts", scope, False, p,
                    expected="slice mcount <= 2", actual=f"({left}, {right})",
                )
            # the off-by-one slice variants used by the per-family counts
            tail2 = mcount(slice_word(p, cut + 1, len(p))) == 2
            pre2 = mcount(slice_word(p, 1, cut - 1)) == 2
            want = prof.family == "tail-heavy"
            if tail2 != want or pre2 == want:
                return CheckResult(
                    "family-counts", scope, False, p,
                    expected=f"slice conditions matching {prof.family}",
                    actual=f"tail-mcount2={tail2} prefix-mcount2={pre2}",
                )
    want_counts = {
        "tail-heavy": comb(n, 2),
        "prefix-heavy": comb(n, 2),
        "head-triple": comb(n + 1, 2),
    }
    if tallies != want_counts:
        return CheckResult(
            "family-counts", scope, False, (),
            expected=str(want_counts), actual=str(tallies),
        )
    if not family_count_identity(n):
        return CheckResult(
            "family-counts", scope, False, (),
            expected="C(2N,2) - 3C(N,2) = C(N+1,2)", actual="identity fails",
        )
    return CheckResult("family-counts", scope, True, detail=str(tallies))


def probe_sigma(sigma: Pattern, max_len: int = 6, cap: int | None = None) -> CheckResult:
    """Look for a word whose orbit under a non-aba pattern cycles unsorted.

    Finding one supports aba being the unique sorting pattern; finding none
    within bounds is explicitly indeterminate, not a refutation.
    """
    name = f"probe-sigma-{sigma}"
    scope = f"canonical words, length <= {max_len}"
    for p in all_canonical_upto(max_len):
        result = sorting_depth(p, sigma, cap=cap)
        if not result.sorts:
            return CheckResult(
                name, scope, True,
                detail=f"{format_word(p)} cycles without sorting",
            )
    return CheckResult(name, scope, True, detail="none found (indeterminate)")


def run_suite(
    n_min: int = 3,
    n_max: int = 4,
    corpus_len: int = 8,
    bound_len: int = 9,
    jobs: int = 1,
) -> list[CheckResult]:
    """The full check suite; one result per check, failures never abort."""
    results = [
        check_lemma_decomposition(corpus_len),
        check_clump_growth(corpus_len),
        check_trunc_commute(corpus_len),
        check_upper_bound(bound_len),
    ]
    all_witnesses: list[Word] = []
    for n in range(n_min, n_max + 1):
        results.append(check_theorem_minimal(n, jobs=jobs))
        results.append(check_theorem_count(n, jobs=jobs))
        results.append(check_multiplicity_profile(n, jobs=jobs))
        results.append(check_family_counts(n, jobs=jobs))
        for length in (2 * n, 2 * n + 1):
            report = cell_witness_report(CellSpec(n, length), jobs=jobs)
            all_witnesses.extend(w.witness for w in report.witnesses)
    results.append(check_cor_lockstep(all_witnesses))
    results.append(probe_sigma(Pattern((1, 2)), max_len=4))
    return results
