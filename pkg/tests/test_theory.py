"""
Tests du format de fichier, du chargement et de la vérification des théories.
"""
import json
from pathlib import Path

import pytest

from kernel.errors import UnknownTheorem
from kernel.rules import is_primitive
from macros.base import TrustPolicy
from theory import (
    DefinitionError, DuplicateName, ImportCycle, ImportNotFound, ItemError, SchemaError, Theory,
    UnsupportedItem, check_theory, dump_document, expand_theorem, load_theory,
    parse_document, read_document, save_theory,
)
from theory.checker import FAILED, OK, SKIPPED, linear_proof_of
from theory.errors import format_path

THEORIES_DIR = Path(__file__).parent.parent / "theories"
GOLDEN_DIR = Path(__file__).parent / "golden"


def write(directory, name, document):
    """Écrit un document de théorie et retourne son chemin."""
    path = directory / f"{name}.json"
    path.write_text(json.dumps(document, indent=2), encoding="utf-8")
    return path


def thm(name, prop, proof, vars=None):
    return {
        "ty": "thm", "name": name, "vars": vars or {}, "prop": prop,
        "proof": [
            {"id": str(i), "rule": rule, "args": args, "prevs": prevs}
            for i, (rule, args, prevs) in enumerate(proof)
        ],
    }


IMP_REFL = [("assume", "A", []), ("implies_intro", "A", ["0"])]


class TestModels:
    def test_minimal_document(self):
        doc = parse_document({"name": "t"})
        assert doc.imports == []
        assert doc.content == []

    def test_missing_name(self):
        with pytest.raises(SchemaError) as excinfo:
            parse_document({"imports": []})
        assert excinfo.value.path == ["name"]

    def test_missing_field_path(self):
        with pytest.raises(SchemaError) as excinfo:
            parse_document({"name": "t", "content": [{"ty": "thm.ax", "name": "a"}]})
        assert excinfo.value.path == ["content", 0, "prop"]

    def test_unknown_tag(self):
        with pytest.raises(SchemaError) as excinfo:
            parse_document({"name": "t", "content": [{"ty": "lemma", "name": "a"}]})
        assert excinfo.value.path[:2] == ["content", 0]

    def test_negative_arity(self):
        with pytest.raises(SchemaError):
            parse_document({"name": "t", "content": [{"ty": "type.ax", "name": "n", "arity": -1}]})

    def test_inductive_items_unsupported(self):
        with pytest.raises(UnsupportedItem) as excinfo:
            parse_document({"name": "t", "content": [{"ty": "type.ind", "name": "list"}]})
        assert excinfo.value.index == 0

    def test_unknown_keys_preserved(self):
        doc = parse_document({"name": "t", "imports": [], "content": [], "author": "x"})
        assert json.loads(dump_document(doc))["author"] == "x"

    def test_format_path(self):
        assert format_path(["content", 3, "proof", 0, "args"]) == "content[3].proof[0].args"

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(SchemaError):
            read_document(path)


class TestCanonicalWriting:
    @pytest.mark.parametrize("name", ["logic_base", "nat", "gaps_demo"])
    def test_shipped_theories_are_canonical(self, name):
        path = THEORIES_DIR / f"{name}.json"
        assert dump_document(read_document(path)) == path.read_text(encoding="utf-8")

    def test_golden_empty(self):
        path = GOLDEN_DIR / "empty.json"
        assert dump_document(parse_document({"name": "empty"})) == path.read_text(encoding="utf-8")

    def test_save_theory_round_trip(self, nat_thy, tmp_path):
        target = tmp_path / "out" / "nat.json"
        save_theory(nat_thy, target)
        assert target.read_text(encoding="utf-8") == (THEORIES_DIR / "nat.json").read_text(encoding="utf-8")

    def test_optional_keys_omitted(self):
        doc = parse_document({"name": "t", "content": [thm("imp_refl", "A --> A", IMP_REFL, {"A": "bool"})]})
        item = json.loads(dump_document(doc))["content"][0]
        assert list(item) == ["ty", "name", "vars", "prop", "proof"]
        assert list(item["proof"][0]) == ["id", "rule", "args", "prevs"]


class TestLoader:
    def test_imports_loaded_once(self, loader, logic_thy, nat_thy):
        assert nat_thy.parents[0] is logic_thy
        assert loader.load("nat") is nat_thy

    def test_closure(self, nat_thy):
        assert [t.name for t in nat_thy.closure()] == ["logic_base", "nat"]

    def test_import_not_found(self, tmp_path):
        path = write(tmp_path, "t", {"name": "t", "imports": ["missing"], "content": []})
        with pytest.raises(ImportNotFound) as excinfo:
            load_theory(path)
        assert excinfo.value.name == "missing"

    def test_import_cycle(self, tmp_path):
        write(tmp_path, "a", {"name": "a", "imports": ["b"], "content": []})
        path = write(tmp_path, "b", {"name": "b", "imports": ["a"], "content": []})
        with pytest.raises(ImportCycle) as excinfo:
            load_theory(path)
        assert excinfo.value.chain == ["b", "a", "b"]

    def test_import_from_search_path(self, tmp_path):
        path = write(tmp_path, "t", {"name": "t", "imports": ["logic_base"], "content": []})
        thy = load_theory(path, [THEORIES_DIR])
        assert "conj" in thy.signature.constants

    def test_duplicate_theorem(self, tmp_path):
        axiom = {"ty": "thm.ax", "name": "a", "vars": {}, "prop": "!p::bool. p"}
        path = write(tmp_path, "t", {"name": "t", "content": [axiom, axiom]})
        with pytest.raises(DuplicateName):
            load_theory(path)

    def test_duplicate_with_import(self, tmp_path):
        axiom = {"ty": "thm.ax", "name": "trueI", "vars": {}, "prop": "true"}
        path = write(tmp_path, "t", {"name": "t", "imports": ["logic_base"], "content": [axiom]})
        with pytest.raises(DuplicateName) as excinfo:
            load_theory(path, [THEORIES_DIR])
        assert excinfo.value.theory == "logic_base"

    def test_duplicate_type(self, tmp_path):
        path = write(tmp_path, "t", {"name": "t", "content": [{"ty": "type.ax", "name": "bool", "arity": 0}]})
        with pytest.raises(DuplicateName):
            load_theory(path)

    def test_unreadable_statement(self, tmp_path):
        axiom = {"ty": "thm.ax", "name": "a", "vars": {}, "prop": "p --> q"}
        path = write(tmp_path, "t", {"name": "t", "content": [axiom]})
        with pytest.raises(ItemError) as excinfo:
            load_theory(path)
        assert excinfo.value.index == 0
        assert excinfo.value.name == "a"

    def test_non_boolean_statement(self, tmp_path):
        axiom = {"ty": "thm.ax", "name": "a", "vars": {}, "prop": "%p::bool. p"}
        path = write(tmp_path, "t", {"name": "t", "content": [axiom]})
        with pytest.raises(ItemError):
            load_theory(path)


class TestDefinitions:
    @pytest.mark.parametrize("prop", [
        "c --> c",
        "(!p::bool. p) = c",
        "c = (c --> c)",
        "c = (!x::'a. x = x)",
    ])
    def test_rejected(self, tmp_path, prop):
        item = {"ty": "def", "name": "c", "type": "bool", "prop": prop}
        path = write(tmp_path, "t", {"name": "t", "content": [item]})
        with pytest.raises(DefinitionError):
            load_theory(path)

    def test_definition_theorem(self, logic_thy, seq):
        assert "iff" in logic_thy.signature.constants
        assert logic_thy.entry("iff_def").kind == "definition"
        assert logic_thy.get_theorem("id_def").hyps == frozenset()


class TestTheoryApi:
    def test_get_theorem_forms(self, logic_thy, term):
        assert logic_thy.get_theorem("conjI").prop == term("A --> B --> A & B")
        assert logic_thy.get_theorem("conjI", schematic=True).prop == term("?A --> ?B --> ?A & ?B")

    def test_unknown_theorem(self, logic_thy):
        with pytest.raises(UnknownTheorem):
            logic_thy.get_theorem("nonexistent")

    def test_view_hides_later_items(self, logic_thy):
        index, _ = logic_thy.theorem_item("imp_refl")
        view = logic_thy.view(index)
        assert view.get_theorem("conjI") == logic_thy.get_theorem("conjI")
        with pytest.raises(UnknownTheorem):
            view.get_theorem("imp_refl")

    def test_view_sees_imports(self, nat_thy):
        assert nat_thy.view(0).get_theorem("conjI") == nat_thy.get_theorem("conjI")

    def test_entry_vars(self, nat_thy):
        from kernel.hol_type import NatType

        assert nat_thy.entry("add_comm").vars == {"a": NatType, "b": NatType}

    def test_theorem_items(self, logic_thy):
        names = [item.name for _, item in logic_thy.theorem_items()]
        assert names[0] == "imp_refl"
        assert len(names) == 19


class TestCheckTheory:
    def test_logic_base(self, logic_thy):
        report = check_theory(logic_thy, TrustPolicy(0), no_gaps=True)
        assert report.ok, report.to_json()
        assert {r.status for r in report.results} == {OK}

    @pytest.mark.parametrize("threshold", [0, 1, 2])
    def test_nat(self, nat_thy, threshold):
        report = check_theory(nat_thy, TrustPolicy(threshold), no_gaps=True)
        assert report.ok, report.to_json()
        assert len(report.results) == 20

    def test_trust_monotonicity(self, nat_thy):
        reports = [check_theory(nat_thy, TrustPolicy(t)) for t in (0, 1, 2)]
        steps = [r.steps_checked for r in reports]
        assert steps[0] > steps[1] >= steps[2]
        assert reports[0].macro_steps_trusted == 0
        assert reports[2].macro_steps_expanded == 0
        assert reports[1].macro_steps_expanded > 0

    def test_gaps_allowed(self, loader):
        report = check_theory(loader.load("gaps_demo"))
        assert report.ok
        assert report.gaps == ["excluded_middle_true", "conj_comm_gap"]
        statuses = {r.name: r.status for r in report.results}
        assert statuses["disj_intro_closed"] == OK

    def test_gaps_rejected(self, loader):
        report = check_theory(loader.load("gaps_demo"), no_gaps=True)
        assert not report.ok
        assert report.failures == []

    def test_gap_positions(self, loader):
        report = check_theory(loader.load("gaps_demo"))
        by_name = {r.name: r for r in report.results}
        assert by_name["excluded_middle_true"].gaps == ["0"]
        assert by_name["conj_comm_gap"].gaps == ["1"]

    def test_with_imports(self, nat_thy):
        report = check_theory(nat_thy, TrustPolicy(2), with_imports=True)
        assert [sub.theory for sub in report.imports] == ["logic_base"]
        assert report.ok
        assert report.to_dict()["imports"][0]["theory"] == "logic_base"

    def test_failure_reported(self, tmp_path):
        bad = thm("bad", "A --> A", [("assume", "A", []), ("implies_intro", "B", ["0"])], {"A": "bool", "B": "bool"})
        good = thm("good", "A --> A", IMP_REFL, {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [bad, good]})
        report = check_theory(load_theory(path))
        assert not report.ok
        assert report.failures == ["bad"]
        assert report.results[0].status == FAILED
        assert "énoncé" in report.results[0].error
        assert report.results[1].status == OK

    def test_failed_item_id(self, tmp_path):
        bad = thm("bad", "A --> A", [("assume", "A", []), ("symmetric", "", ["0"])], {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [bad]})
        result = check_theory(load_theory(path)).results[0]
        assert result.status == FAILED
        assert result.failed_item == "1"

    def test_fail_fast(self, tmp_path):
        bad = thm("bad", "A --> A", [("assume", "A", []), ("symmetric", "", ["0"])], {"A": "bool"})
        good = thm("good", "A --> A", IMP_REFL, {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [bad, good]})
        report = check_theory(load_theory(path), fail_fast=True)
        assert [r.status for r in report.results] == [FAILED, SKIPPED]
        assert not report.ok

    def test_theorem_cannot_use_itself(self, tmp_path):
        loop = thm("loop", "A --> A", [("theorem", "loop", [])], {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [loop]})
        assert check_theory(load_theory(path)).results[0].status == FAILED

    def test_leading_zero_id_rejected(self, tmp_path):
        proof = thm("padded", "A --> A", IMP_REFL, {"A": "bool"})
        proof["proof"][1]["prevs"] = ["00"]
        path = write(tmp_path, "t", {"name": "t", "content": [proof]})
        result = check_theory(load_theory(path)).results[0]
        assert result.status == FAILED
        assert "00" in result.error

    def test_recursion_error_fails_one_theorem(self, tmp_path, monkeypatch):
        import theory.checker as checker

        real = checker.check_linear_proof

        def too_deep(proof, *args, **kwargs):
            if len(proof) == 3:
                raise RecursionError("maximum recursion depth exceeded")
            return real(proof, *args, **kwargs)

        monkeypatch.setattr(checker, "check_linear_proof", too_deep)
        deep = thm("deep", "A --> A", IMP_REFL + [("assume", "A", [])], {"A": "bool"})
        good = thm("good", "A --> A", IMP_REFL, {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [deep, good]})
        report = check_theory(load_theory(path))
        assert [r.status for r in report.results] == [FAILED, OK]
        assert "récursion" in report.results[0].error

    def test_schematic_conclusion_accepted(self, tmp_path):
        via_theorem = thm("again", "A --> A", [("theorem", "first", [])], {"A": "bool"})
        first = thm("first", "A --> A", IMP_REFL, {"A": "bool"})
        path = write(tmp_path, "t", {"name": "t", "content": [first, via_theorem]})
        assert [r.status for r in check_theory(load_theory(path)).results] == [OK, OK]

    def test_report_dict(self, logic_thy):
        data = check_theory(logic_thy, TrustPolicy(1)).to_dict()
        assert data["ok"] is True
        assert data["trust"] == 1
        assert data["totals"]["theorems"] == 19
        assert set(data["theorems"][0]) >= {"name", "status", "steps_checked", "gaps", "error"}


class TestExpandTheorem:
    def test_macro_proof_expanded(self, nat_thy):
        result = expand_theorem(nat_thy, "two_plus_two")
        assert result.changed
        assert result.items_before == 1
        index, item = Theory(result.document, nat_thy.parents).theorem_item("two_plus_two")
        proof = linear_proof_of(item)
        assert len(proof) == result.items_after
        assert all(is_primitive(rule) for rule in proof.rules())
        assert all(step.th is not None for step in item.proof)

    def test_expanded_document_checks(self, nat_thy):
        for name in ("add_zero_both", "square_succ", "fold_coeff"):
            result = expand_theorem(nat_thy, name)
            thy = Theory(result.document, nat_thy.parents)
            report = check_theory(thy, TrustPolicy(0), no_gaps=True)
            assert report.ok, report.to_json()

    def test_primitive_proof_unchanged(self, logic_thy):
        result = expand_theorem(logic_thy, "imp_refl")
        assert not result.changed
        assert dump_document(result.document) == dump_document(logic_thy.document)

    def test_original_document_untouched(self, nat_thy):
        before = dump_document(nat_thy.document)
        expand_theorem(nat_thy, "big_product")
        assert dump_document(nat_thy.document) == before

    def test_unknown_theorem(self, nat_thy):
        with pytest.raises(UnknownTheorem):
            expand_theorem(nat_thy, "conjI")
