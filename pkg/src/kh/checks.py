"""Named verification tasks over seeded corpora.

Every task derives its corpus deterministically from the (fuzz, seed)
configuration, runs an exact identity, and reports a plain dict. The task
list has a fixed order and results are assembled by task index, so serial
runs and thread-pool runs of the same configuration serialize to the same
bytes. No timestamps, no timing, no environment state in the output.
"""

import json
from concurrent.futures import ThreadPoolExecutor

from . import corpus
from .bracket import bracket_q, jones_J
from .doldkan import roundtrip_check
from .formal import homologous_witness_formal
from .homology import (
    HomologyGroup,
    bigraded_homology,
    graded_euler,
    homology,
    poincare_polynomial,
    shifted_homology,
)
from .khovanov import differential
from .nerve import (
    barycentric_subdivision,
    khovanov_homology_via_nerve,
    subdivision_theorem_check,
)
from .simplicial import (
    chain_complex,
    check_identities,
    homologous_witness,
    linearize,
    moore_complex,
    standard_simplex,
)


def _result(name, ok, cases, detail):
    return {
        "name": name,
        "status": "ok" if ok else "fail",
        "cases": cases,
        "detail": detail,
    }


def _task_identities(fuzz, seed, n=None):
    objects = corpus.random_simplicial_sets(fuzz - fuzz // 2, seed)
    objects += corpus.random_modules(fuzz // 2, seed)
    builtins = corpus.builtin_objects()
    objects += [obj for _, obj in builtins]
    instances = 0
    violations = []
    for obj in objects:
        rep = check_identities(obj)
        instances += rep.checked
        violations.extend(rep.violations[:1])
    flagged = (
        not check_identities(corpus.corrupted_module()).ok
        and not check_identities(corpus.corrupted_set()).ok
    )
    ok = not violations and flagged
    detail = "%d identity instances; corrupted controls flagged: %s" % (
        instances,
        flagged,
    )
    if violations:
        detail += "; first violation: %s" % violations[0]
    return _result("identities", ok, len(objects), detail)


def _task_d_squared(fuzz, seed, n=None):
    diagrams = corpus.random_diagrams(fuzz, seed)
    states = 0
    for d in diagrams:
        bc = differential(d)
        bc.check_d_squared()
        states += sum(bc.dims().values())
    return _result(
        "d_squared", True, len(diagrams), "%d enhanced states, d^2 = 0" % states
    )


def _task_euler_jones(fuzz, seed, n=None):
    diagrams = corpus.random_diagrams(fuzz, seed)
    bad = 0
    for d in diagrams:
        bc = differential(d)
        if graded_euler(bc) != bracket_q(d):
            bad += 1
            continue
        p = poincare_polynomial(bigraded_homology(bc), bc.n_plus, bc.n_minus)
        if p.at_t_minus_one() != jones_J(d):
            bad += 1
    return _result(
        "euler_jones",
        bad == 0,
        len(diagrams),
        "graded Euler = bracket and P(-1, q) = J on %d diagrams, %d failures"
        % (len(diagrams), bad),
    )


def _nonzero_groups(d):
    raw = shifted_homology(bigraded_homology(differential(d)), d.n_plus, d.n_minus)
    return {ij: g for ij, g in raw.items() if g.free_rank or g.torsion}


def _task_reidemeister(fuzz, seed, n=None):
    pairs = corpus.reidemeister_pairs(min(fuzz, 30), seed)
    kinds = sorted({k for (_, _, k) in pairs})
    bad = 0
    for before, after, _ in pairs:
        if _nonzero_groups(before) != _nonzero_groups(after):
            bad += 1
        elif jones_J(before) != jones_J(after):
            bad += 1
    return _result(
        "reidemeister",
        bad == 0,
        len(pairs),
        "homology and J invariant on %d move pairs (%s), %d failures"
        % (len(pairs), ", ".join(kinds), bad),
    )


def _task_subdivision(fuzz, seed, n=None):
    dims = (n,) if n else (1, 2, 3)
    per = max(1, fuzz // 16)
    bad = []
    cases = 0
    for dim in dims:
        for F in corpus.random_functors(dim, per, seed):
            cases += 1
            rep = subdivision_theorem_check(dim, F)
            if not rep.ok:
                bad.append("n=%d: %s" % (dim, rep.mismatches[0]))
    counts_ok = all(
        len(barycentric_subdivision(m).cells(m)) == _factorial(m + 1)
        for m in range(5)
    )
    ok = not bad and counts_ok
    detail = "three-way agreement at n in %s, %d functors; top-cell counts (n+1)!: %s" % (
        list(dims),
        cases,
        counts_ok,
    )
    if bad:
        detail += "; " + bad[0]
    return _result("subdivision", ok, cases, detail)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _task_doldkan(fuzz, seed, n=None):
    complexes = corpus.random_complexes(max(1, fuzz // 2), seed)
    bad = 0
    for C in complexes:
        rep = roundtrip_check(C, 3)
        if not rep.ok:
            bad += 1
    return _result(
        "doldkan",
        bad == 0,
        len(complexes),
        "N(Gamma(C)) = C in rank, Smith form and homology on %d complexes, %d failures"
        % (len(complexes), bad),
    )


_BG_EXPECTED = {
    "z2": (4, ((1, ()), (0, (2,)), (0, ()), (0, (2,)))),
    "z3": (3, ((1, ()), (0, (3,)), (0, ()))),
    "z4": (3, ((1, ()), (0, (4,)), (0, ()))),
    "klein": (3, ((1, ()), (0, (2, 2)), (0, (2,)))),
    "trivial": (3, ((1, ()), (0, ()), (0, ()))),
}


def _task_bg(fuzz, seed, n=None):
    from .simplicial import classifying_space

    bad = []
    for name, (truncation, expected) in sorted(_BG_EXPECTED.items()):
        if name == "trivial":
            elements, table, unit = ("e",), {("e", "e"): "e"}, "e"
        else:
            elements, table, unit = corpus._group_table(name)
        B = classifying_space(elements, table, unit, truncation)
        got = homology(moore_complex(linearize(B)))[:truncation]
        want = tuple(HomologyGroup(f, t) for f, t in expected)
        if got != want:
            bad.append("%s: %s != %s" % (name, got, want))
    return _result(
        "bg",
        not bad,
        len(_BG_EXPECTED),
        "classifying-space homology matches group homology"
        if not bad
        else "; ".join(bad),
    )


def _task_witness(fuzz, seed, n=None):
    out = homologous_witness_formal()
    symbolic = out["boundary"].is_zero()
    rng = corpus._rng(seed, "witness")
    hosts = [
        M
        for M in corpus.random_modules(max(4, fuzz), seed)
        if M.truncation >= 2 and M.dims[1] > 0
    ]
    pairs = 0
    for M in hosts:
        a = tuple(rng.randrange(-3, 4) for _ in range(M.dims[1]))
        b = tuple(rng.randrange(-3, 4) for _ in range(M.dims[1]))
        homologous_witness(M, a, b)
        pairs += 1
    return _result(
        "witness",
        symbolic,
        pairs + 1,
        "boundary of the witness vanishes symbolically and on %d concrete pairs"
        % pairs,
    )


def _task_moore(fuzz, seed, n=None):
    modules = corpus.random_modules(fuzz, seed)
    bad = 0
    for M in modules:
        hN = homology(moore_complex(M))
        hC = homology(chain_complex(M))
        if hN[: M.truncation] != hC[: M.truncation]:
            bad += 1
    return _result(
        "moore",
        bad == 0,
        len(modules),
        "H(Moore) = H(chains) through the reliable range on %d modules, %d failures"
        % (len(modules), bad),
    )


def _task_dual_route(fuzz, seed, n=None):
    small = [
        d
        for d in corpus.random_diagrams(4 * max(2, fuzz // 8), seed, max_crossings=5)
        if d.n_crossings <= 5
    ][: max(2, fuzz // 8)]
    bad = 0
    for d in small:
        via = {
            ij: g
            for ij, g in khovanov_homology_via_nerve(d).items()
            if g.free_rank or g.torsion
        }
        if via != _nonzero_groups(d):
            bad += 1
    return _result(
        "dual_route",
        bad == 0,
        len(small),
        "nerve route = direct route in every bidegree on %d diagrams, %d failures"
        % (len(small), bad),
    )


_TASKS = (
    ("identities", _task_identities),
    ("d_squared", _task_d_squared),
    ("euler_jones", _task_euler_jones),
    ("reidemeister", _task_reidemeister),
    ("subdivision", _task_subdivision),
    ("doldkan", _task_doldkan),
    ("bg", _task_bg),
    ("witness", _task_witness),
    ("moore", _task_moore),
    ("dual_route", _task_dual_route),
)

TASK_NAMES = tuple(name for name, _ in _TASKS)


def run_checks(fuzz=50, seed=7, parallel=False, only=None, n=None):
    """Run the verification suite; identical config gives identical output."""
    if only is not None and only not in TASK_NAMES:
        raise ValueError("unknown check %r; tasks: %s" % (only, ", ".join(TASK_NAMES)))
    tasks = [(name, fn) for name, fn in _TASKS if only is None or name == only]

    def run_one(item):
        name, fn = item
        try:
            return fn(fuzz, seed, n=n)
        except Exception as e:  # a crashed task is a failed check
            return _result(name, False, 0, "%s: %s" % (type(e).__name__, e))

    if parallel:
        with ThreadPoolExecutor(max_workers=min(4, len(tasks))) as pool:
            results = list(pool.map(run_one, tasks))
    else:
        results = [run_one(item) for item in tasks]
    return {
        "schema": "kh/1",
        "fuzz": fuzz,
        "seed": seed,
        "ok": all(r["status"] == "ok" for r in results),
        "checks": results,
    }


def checks_json(report):
    """Canonical byte form of a check report."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def checks_text(report):
    lines = [
        "check suite: %s (fuzz=%d, seed=%s)"
        % ("ok" if report["ok"] else "FAIL", report["fuzz"], report["seed"])
    ]
    for r in report["checks"]:
        lines.append("%-4s %-12s cases=%-4d %s" % (r["status"], r["name"], r["cases"], r["detail"]))
    return "\n".join(lines) + "\n"
