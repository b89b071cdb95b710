"""Verification reports: computed invariants checked against the claim table.

The expected values per family live in data/claims.json, not in code, so a
disagreement between computation and expectation is a data diff.  A report
carries every computed invariant, the claim-by-claim comparison, and an
optional script-replay result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from . import kirby
from .casson import casson_brieskorn
from .errors import BrieskornError
from .plumbing import (
    brieskorn_plumbing,
    determinant,
    intersection_matrix,
    is_negative_definite,
    signature,
)
from .seifert import FAMILIES, BrieskornTriple, UnknownFamily, seifert_invariants
from .wu import mubar, wu_class, wu_square

CSV_HEADER = "family,n,p,q,r,vertices,det,neg_def,signature,wu_square,mubar,pass"


@dataclass(frozen=True)
class ClaimCheck:
    name: str
    expected: object
    actual: object
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    family: str
    n: int
    triple: tuple[int, int, int]
    vertex_count: int
    determinant: int
    negative_definite: bool
    signature: int
    wu_square: int
    mubar: int
    obstructed: bool
    claims_checked: tuple[ClaimCheck, ...]
    script_replayed: tuple[str, bool] | None = None

    @property
    def passed(self) -> bool:
        ok = all(c.passed for c in self.claims_checked)
        if self.script_replayed is not None:
            ok = ok and self.script_replayed[1]
        return ok

    def to_json_obj(self) -> dict:
        obj = {
            "family": self.family,
            "n": self.n,
            "triple": list(self.triple),
            "vertex_count": self.vertex_count,
            "determinant": self.determinant,
            "negative_definite": self.negative_definite,
            "signature": self.signature,
            "wu_square": self.wu_square,
            "mubar": self.mubar,
            "obstructed": self.obstructed,
            "claims_checked": [c.to_json_obj() for c in self.claims_checked],
            "script_replayed": (
                None
                if self.script_replayed is None
                else {"name": self.script_replayed[0], "pass": self.script_replayed[1]}
            ),
            "pass": self.passed,
        }
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def to_csv_row(self) -> str:
        p, q, r = self.triple
        cells = [
            self.family,
            self.n,
            p,
            q,
            r,
            self.vertex_count,
            self.determinant,
            _csv_bool(self.negative_definite),
            self.signature,
            self.wu_square,
            self.mubar,
            _csv_bool(self.passed),
        ]
        return ",".join(str(c) for c in cells)


def _csv_bool(b: bool) -> str:
    return "true" if b else "false"


def report_from_json(text: str) -> VerificationReport:
    obj = json.loads(text)
    return VerificationReport(
        family=obj["family"],
        n=obj["n"],
        triple=tuple(obj["triple"]),
        vertex_count=obj["vertex_count"],
        determinant=obj["determinant"],
        negative_definite=obj["negative_definite"],
        signature=obj["signature"],
        wu_square=obj["wu_square"],
        mubar=obj["mubar"],
        obstructed=obj["obstructed"],
        claims_checked=tuple(
            ClaimCheck(c["name"], c["expected"], c["actual"], c["pass"])
            for c in obj["claims_checked"]
        ),
        script_replayed=(
            None
            if obj.get("script_replayed") is None
            else (obj["script_replayed"]["name"], obj["script_replayed"]["pass"])
        ),
    )


@lru_cache(maxsize=1)
def load_claims() -> dict:
    text = resources.files("brieskorn.data").joinpath("claims.json").read_text()
    return json.loads(text)


def family_notes(family_id: str, n: int) -> list[str]:
    """Informational flags attached to specific family members."""
    entry = load_claims()["families"].get(family_id, {})
    return [note["note"] for note in entry.get("notes", []) if note.get("n") == n]


def _claim_applies(claim: dict, n: int) -> bool:
    parity = claim.get("parity", "all")
    if parity == "even":
        return n % 2 == 0
    if parity == "odd":
        return n % 2 == 1
    return True


def _expected_of(claim: dict, n: int):
    test = claim["test"]
    kind = test["type"]
    if kind == "affine":
        return test["a"] * n + test["b"]
    if kind == "eq":
        return test["value"]
    if kind == "abs_eq":
        return f"|x| = {test['value']}"
    if kind == "nonzero":
        return "!= 0"
    raise ValueError(f"unknown claim test {kind!r}")


def _check(claim: dict, n: int, actual) -> bool:
    test = claim["test"]
    kind = test["type"]
    if kind == "affine":
        return actual == test["a"] * n + test["b"]
    if kind == "eq":
        return actual == test["value"]
    if kind == "abs_eq":
        return abs(actual) == test["value"]
    if kind == "nonzero":
        return actual != 0
    raise ValueError(f"unknown claim test {kind!r}")


def build_report(family_id: str, n: int, replay_script: bool = False) -> VerificationReport:
    """Compute all invariants of family member n and check the claim table."""
    spec = FAMILIES.get(family_id)
    if spec is None:
        raise UnknownFamily(family_id)
    triple = spec.triple_of(n)
    graph = brieskorn_plumbing(triple)
    m = intersection_matrix(graph)
    det = determinant(m)
    neg_def = is_negative_definite(m)
    sig = signature(m)
    # computed directly (not via wu.mubar) so that a hypothetical failure of
    # the unimodularity/definiteness claims is reported instead of raised
    w = wu_class(m)
    w2 = wu_square(m, w)
    assert (sig - w2) % 8 == 0
    mu_value = (sig - w2) // 8
    computed = {
        "vertex_count": graph.vertex_count,
        "determinant": det,
        "negative_definite": neg_def,
        "signature": sig,
        "wu_square": w2,
        "mubar": mu_value,
    }
    checks = []
    for claim in load_claims()["families"][family_id]["claims"]:
        if not _claim_applies(claim, n):
            continue
        actual = computed[claim["target"]]
        checks.append(
            ClaimCheck(claim["name"], _expected_of(claim, n), actual, _check(claim, n, actual))
        )
    replayed = None
    if replay_script:
        if family_id in kirby.SCRIPTED_FAMILIES:
            script = kirby.script_generator(family_id, n)
            try:
                kirby.replay(script)
                replayed = (script.name, True)
            except BrieskornError:
                replayed = (script.name, False)
        else:
            replayed = (f"{family_id}:n={n}", False)
    return VerificationReport(
        family=family_id,
        n=n,
        triple=triple.components,
        vertex_count=graph.vertex_count,
        determinant=det,
        negative_definite=neg_def,
        signature=sig,
        wu_square=w2,
        mubar=mu_value,
        obstructed=mu_value != 0,
        claims_checked=tuple(checks),
        script_replayed=replayed,
    )


def family_sweep(family_id: str, n_from: int, n_to: int, replay_script: bool = False):
    """Yield one report per admissible n in [n_from, n_to]."""
    spec = FAMILIES.get(family_id)
    if spec is None:
        raise UnknownFamily(family_id)
    for n in range(n_from, n_to + 1):
        if spec.admissible(n):
            yield build_report(family_id, n, replay_script=replay_script)


def triple_summary(t: BrieskornTriple, with_casson: bool) -> dict:
    """Everything the `info` command prints, as one deterministic dict."""
    if t.is_degenerate:
        obj = {
            "triple": list(t.components),
            "degenerate": True,
            "seifert": None,
            "plumbing": {"weights": [], "edges": []},
            "determinant": 1,
            "signature": 0,
            "negative_definite": True,
            "wu_class": [],
            "wu_square": 0,
            "mubar": 0,
            "obstructed": False,
            "casson": 0,  # S^3; the empty lattice count costs nothing
        }
        return obj
    s = seifert_invariants(t)
    graph = brieskorn_plumbing(t)
    m = intersection_matrix(graph)
    mu = mubar(graph)
    obj = {
        "triple": list(t.components),
        "degenerate": False,
        "seifert": {"b": s.b, "legs": [list(leg) for leg in s.legs]},
        "plumbing": graph.to_json_obj(),
        "determinant": determinant(m),
        "signature": mu.signature,
        "negative_definite": is_negative_definite(m),
        "wu_class": list(wu_class(m).coords),
        "wu_square": mu.wu_square,
        "mubar": mu.mubar,
        "obstructed": mu.obstructed,
    }
    obj["casson"] = (
        casson_brieskorn(t) if (with_casson or _is_cheap_casson(t)) else None
    )
    return obj


def _is_cheap_casson(t: BrieskornTriple) -> bool:
    """The Sigma(2,3,6n+1) shape, where the lattice count is trivially cheap."""
    return t.p == 2 and t.q == 3 and t.r % 6 == 1
