"""Framed-link moves, replay semantics, and the family script generator."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brieskorn import (
    FramedLink,
    IntMatrix,
    blow_down,
    blow_up,
    brieskorn_plumbing,
    determinant,
    plumbing_to_link,
    replay,
    script_from_json,
    script_generator,
    script_to_json,
    slide,
    validate_triple,
)
from brieskorn.errors import (
    DuplicateLabel,
    FinalMismatch,
    IllegalBlowdown,
    SameComponent,
    ScriptFormatError,
    StepIllegal,
    UnsupportedFamily,
)
from brieskorn.kirby import SCRIPTED_FAMILIES, Blowdown, Blowup, KirbyScript, Slide
from brieskorn.plumbing import PlumbingGraph


def L(labels, rows):
    return FramedLink(tuple(labels), IntMatrix.from_rows(rows))


def random_symmetric(rng, n, lo=-9, hi=9):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return rows


class TestPlumbingToLink:
    def test_single_vertex(self):
        link = plumbing_to_link(PlumbingGraph((-1,), ()))
        assert link.labels == ("v0",)
        assert link.matrix.entries == ((-1,),)

    def test_sigma_2_7_19_matches_intersection_matrix(self):
        from brieskorn import intersection_matrix

        g = brieskorn_plumbing(validate_triple(2, 7, 19))
        link = plumbing_to_link(g)
        assert link.size == 6
        assert link.matrix == intersection_matrix(g)
        assert link.labels == ("v0", "L1-1", "L2-1", "L2-2", "L3-1", "L3-2")

    def test_e8_star_labels(self):
        g = brieskorn_plumbing(validate_triple(2, 3, 5))
        link = plumbing_to_link(g)
        assert link.labels == (
            "v0",
            "L1-1",
            "L2-1",
            "L2-2",
            "L3-1",
            "L3-2",
            "L3-3",
            "L3-4",
        )


class TestBlowDown:
    def test_single_component(self):
        link = blow_down(L(["a"], [[-1]]), "a")
        assert link.size == 0 and link.matrix.n == 0

    def test_two_component_example(self):
        link = blow_down(L(["a", "b"], [[-1, 1], [1, -2]]), "a")
        assert link.labels == ("b",)
        assert link.matrix.entries == ((-1,),)

    def test_illegal_framing(self):
        with pytest.raises(IllegalBlowdown):
            blow_down(L(["a", "b"], [[-2, 1], [1, -2]]), "a")

    def test_determinant_identity_random(self):
        rng = random.Random(123)
        for _ in range(300):
            n = rng.randint(1, 8)
            rows = random_symmetric(rng, n)
            c = rng.randrange(n)
            eps = rng.choice([1, -1])
            rows[c][c] = eps
            link = L([f"c{i}" for i in range(n)], rows)
            before = determinant(link.matrix)
            after = determinant(blow_down(link, f"c{c}").matrix)
            assert before == eps * after


class TestSlide:
    def test_formula_example(self):
        link = slide(L(["a", "b"], [[-1, 0], [0, -1]]), "a", "b", 1)
        assert link.matrix.entries == ((-2, -1), (-1, -1))

    def test_same_component_rejected(self):
        with pytest.raises(SameComponent):
            slide(L(["a", "b"], [[-1, 0], [0, -1]]), "a", "a", 1)

    def test_slide_then_inverse_is_identity(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(2, 6)
            link = L([f"c{i}" for i in range(n)], random_symmetric(rng, n))
            i, j = rng.sample(range(n), 2)
            s = rng.choice([1, -1])
            back = slide(slide(link, f"c{i}", f"c{j}", s), f"c{i}", f"c{j}", -s)
            assert back == link

    @settings(deadline=None)
    @given(st.integers(2, 5), st.integers(0, 10**6), st.sampled_from([1, -1]))
    def test_congruence_invariants(self, n, seed, s):
        rng = random.Random(seed)
        link = L([f"c{i}" for i in range(n)], random_symmetric(rng, n, -5, 5))
        i, j = rng.sample(range(n), 2)
        after = slide(link, f"c{i}", f"c{j}", s)
        assert determinant(after.matrix) == determinant(link.matrix)
        from brieskorn.plumbing import inertia

        assert inertia(after.matrix) == inertia(link.matrix)


class TestBlowUp:
    def test_on_empty(self):
        link = blow_up(L([], []), -1, [], "e")
        assert link.labels == ("e",)
        assert link.matrix.entries == ((-1,),)

    def test_inverse_of_blow_down_when_unlinked(self):
        rng = random.Random(42)
        for _ in range(50):
            n = rng.randint(0, 5)
            link = L([f"c{i}" for i in range(n)], random_symmetric(rng, n))
            sign = rng.choice([1, -1])
            up = blow_up(link, sign, [0] * n, "new")
            assert determinant(up.matrix) == sign * determinant(link.matrix)
            assert blow_down(up, "new") == link

    def test_blow_down_inverts_linked_blow_up_via_schur(self):
        rng = random.Random(43)
        for _ in range(50):
            n = rng.randint(1, 5)
            link = L([f"c{i}" for i in range(n)], random_symmetric(rng, n))
            sign = rng.choice([1, -1])
            v = [rng.randint(-3, 3) for _ in range(n)]
            up = blow_up(link, sign, v, "new")
            down = blow_down(up, "new")
            m = link.matrix.entries
            expected = [
                [m[i][j] - sign * v[i] * v[j] for j in range(n)] for i in range(n)
            ]
            assert down.matrix.entries == tuple(tuple(r) for r in expected)

    def test_duplicate_label(self):
        with pytest.raises(DuplicateLabel):
            blow_up(L(["a"], [[-1]]), 1, [0], "a")

    def test_wrong_linking_length(self):
        with pytest.raises(ValueError):
            blow_up(L(["a"], [[-1]]), 1, [0, 0], "b")


class TestReplay:
    def test_empty_moves_success(self):
        link = L(["a"], [[-1]])
        script = KirbyScript("id", link, (), link)
        trace = replay(script)
        assert trace.final == link
        assert trace.steps == ()

    def test_trace_records_step_det_legal(self):
        script = KirbyScript(
            "demo",
            L(["a", "b"], [[-1, 1], [1, -2]]),
            (Blowdown("a"),),
            L(["b"], [[-1]]),
        )
        trace = replay(script)
        assert [s.to_json_obj() for s in trace.steps] == [
            {"step": 1, "op": "blowdown:a", "det": -1, "legal": True}
        ]
        assert trace.steps[-1].state == trace.final  # post-move state kept

    def test_final_mismatch(self):
        script = KirbyScript(
            "bad",
            L(["a", "b"], [[-1, 1], [1, -2]]),
            (Blowdown("a"),),
            L(["b"], [[-2]]),
        )
        with pytest.raises(FinalMismatch) as err:
            replay(script)
        assert "expected -2, got -1" in str(err.value)

    def test_step_illegal(self):
        script = KirbyScript(
            "illegal",
            L(["a", "b"], [[-3, 1], [1, -2]]),
            (Blowdown("a"),),
            L(["b"], [[-2]]),
        )
        with pytest.raises(StepIllegal) as err:
            replay(script)
        assert err.value.index == 0

    def test_missing_component_is_illegal(self):
        script = KirbyScript(
            "missing",
            L(["a"], [[-1]]),
            (Blowdown("zz"),),
            L(["a"], [[-1]]),
        )
        with pytest.raises(StepIllegal):
            replay(script)


class TestScriptJson:
    def test_round_trip(self):
        script = script_generator("thm1-even2", 2)
        text = script_to_json(script)
        parsed = script_from_json(text)
        assert parsed == script
        obj = json.loads(text)
        assert set(obj) == {"name", "initial", "moves", "expect", "annotations"}
        ops = {mv["op"] for mv in obj["moves"]}
        assert ops <= {"blowdown", "slide", "blowup"}

    def test_truncated_json(self):
        with pytest.raises(ScriptFormatError):
            script_from_json('{"name": "x", "initial"')

    def test_malformed_script_object(self):
        with pytest.raises(ScriptFormatError):
            script_from_json('{"name": "x"}')
        with pytest.raises(ScriptFormatError):
            script_from_json(
                '{"name":"x","initial":{"labels":["a"],"matrix":[[-1]]},'
                '"moves":[{"op":"warp"}],"expect":{"labels":[],"matrix":[]}}'
            )


class TestScriptGenerator:
    def test_base_case_sigma_2_7_19(self):
        script = script_generator("thm1-even2", 1)
        trace = replay(script)
        assert trace.final.labels == ("K", "m")
        assert trace.final.matrix.entries == ((0, 1), (1, -1))
        assert all(abs(step.det) == 1 for step in trace.steps)

    def test_stage_structure_grows_with_n(self):
        # n-1 reduction stages of one chain blow-down each, on top of the base
        base = len(script_generator("thm1-even2", 1).moves)
        for n in (2, 3, 5):
            assert len(script_generator("thm1-even2", n).moves) == base + n - 1

    def test_singletons_end_plus_one(self):
        for fam in ("thm2-single13", "thm2-single25"):
            script = script_generator(fam, 1)
            trace = replay(script)
            assert trace.final.labels == ("K",)
            assert trace.final.matrix.entries == ((1,),)

    def test_thm2_families_end_km(self):
        for fam in ("thm2-2a", "thm2-3a", "thm2-2b", "thm2-3b", "thm2-2c", "thm2-3c"):
            for n in (1, 2, 5):
                trace = replay(script_generator(fam, n))
                assert trace.final.labels == ("K", "m")
                assert trace.final.matrix.entries == ((0, 1), (1, -1))

    def test_all_supported_families_replay_to_50(self):
        # every intermediate state stays an integral homology sphere (|det|=1)
        for fam, kind in sorted(SCRIPTED_FAMILIES.items()):
            top = 1 if kind == "single" else 50
            for n in range(1, top + 1):
                trace = replay(script_generator(fam, n))
                assert all(abs(step.det) == 1 for step in trace.steps), (fam, n)

    def test_unsupported_family(self):
        with pytest.raises(UnsupportedFamily):
            script_generator("al-2", 1)
        with pytest.raises(UnsupportedFamily):
            script_generator("nosuch", 1)

    def test_annotations_present(self):
        script = script_generator("thm1-even3", 2)
        assert any("isotopy" in a for a in script.annotations)
