"""Definitional template validation, flexible assembly and serialization."""

import json

import pytest

from termflex.domains import GENERAL
from termflex.errors import ValidationFailure
from termflex.kb import Redirect
from termflex.templates import (
    DefinitionalTemplate,
    assemble_flexible,
    build_template,
    classify_genus,
    flexible_to_json,
    kb_from_json,
    kb_to_json,
    lint_kb,
    lint_template,
    render_flexible,
    render_template,
    validate_kb,
    validate_template,
)

from fixture_kb import build_fixture_kb, row
from kb_mutations import MUTATIONS, run_mutation


@pytest.fixture(scope="module")
def kb():
    return build_fixture_kb()


# -- baseline validity -----------------------------------------------------


def test_fixture_templates_all_valid(kb):
    for key, template in kb.templates.items():
        assert validate_template(template, kb) == [], key


def test_fixture_kb_valid(kb):
    assert validate_kb(kb) == []


def test_fixture_lint_only_derivative_warnings(kb):
    warnings = lint_kb(kb)
    assert [w.code for w in warnings] == ["lint-derivative"] * 3
    flagged = {w.message.split("'")[1] for w in warnings}
    assert flagged == {"CHEMICAL DECOMPOSITION", "WATER", "CHLORINATION"}


def test_lint_template_flags_derivative_but_not_definiendum(kb):
    # rows whose right-hand side is the definiendum itself are fine ...
    che = kb.templates[("CHLORINE", "CHE")]
    assert lint_template(che, kb) == []
    # ... but a nominalization of its term is flagged
    wat = kb.templates[("CHLORINE", "WAT")]
    assert any("CHLORINATION" in w.message for w in lint_template(wat, kb))


# -- mutations -------------------------------------------------------------


@pytest.mark.parametrize(
    "description, mutation, expected",
    MUTATIONS,
    ids=[code for _, _, code in MUTATIONS],
)
def test_single_rule_mutations(description, mutation, expected):
    codes = run_mutation(mutation)
    assert codes, description
    assert set(codes) == {expected}, description


def test_label_on_general_template_rejected(kb):
    template = kb.templates[("POLLUTANT", GENERAL)]
    bad = DefinitionalTemplate(
        template.definiendum, GENERAL, template.rows, "modulation"
    )
    assert [v.code for v in validate_template(bad, kb)] == ["label-general"]


def test_unknown_label_rejected(kb):
    template = kb.templates[("POLLUTANT", "WAS")]
    bad = DefinitionalTemplate(
        template.definiendum, "WAS", template.rows, "variation"
    )
    assert [v.code for v in validate_template(bad, kb)] == ["label-unknown"]


def test_validate_kb_prefixes_template_findings():
    kb = build_fixture_kb()
    template = kb.templates[("CHLORINE", "WAT")]
    rows = list(template.rows)
    import dataclasses

    rows[9] = dataclasses.replace(rows[9], pid="P12")
    kb.templates[("CHLORINE", "WAT")] = DefinitionalTemplate(
        "CHLORINE", "WAT", rows
    )
    findings = [str(f) for f in validate_kb(kb)]
    assert any(f.startswith("template:CHLORINE(WAT).row-numbering") for f in findings)


# -- scaffolding and genus classification ----------------------------------


def test_build_template_seeds_genus_and_inheritable_rows(kb):
    draft = build_template("WATER POLLUTANT", "WAT", kb)
    assert draft.rows[0].relation == "type-of"
    assert draft.rows[0].rhs.render() == "POLLUTANT"
    relations = [r.relation for r in draft.rows[1:]]
    assert "affects" in relations  # specialized from POLLUTANT (GENERAL)
    assert all(r.kind == "SP" for r in draft.rows[1:])


def test_classify_genus(kb):
    assert classify_genus("AGENT", kb) == ("telic", "heuristic")
    assert classify_genus("SUBSTANCE", kb) == ("constitutive", "heuristic")
    assert classify_genus("CONTACT TANK", kb) == ("formal", "heuristic")
    kb2 = build_fixture_kb()
    kb2.concepts["CONTACT TANK"].qualia_role_hint = "telic"
    assert classify_genus("CONTACT TANK", kb2) == ("telic", "annotated")


# -- flexible definitions --------------------------------------------------


def test_flexible_structure_pollutant(kb):
    flex = assemble_flexible("POLLUTANT", kb)
    assert flex.general is kb.templates[("POLLUTANT", GENERAL)]
    shape = [
        (domain, "redirect" if isinstance(entry, Redirect) else "template")
        for domain, entry in flex.entries
    ]
    assert shape == [("AIR", "redirect"), ("WAS", "template"), ("WAT", "redirect")]


def test_flexible_structure_chlorine(kb):
    flex = assemble_flexible("CHLORINE", kb)
    shape = [
        (domain, "redirect" if isinstance(entry, Redirect) else "template")
        for domain, entry in flex.entries
    ]
    assert shape == [("AIR", "template"), ("CHE", "template"), ("WAT", "template")]


def test_flexible_requires_general_template(kb):
    with pytest.raises(ValidationFailure) as exc:
        assemble_flexible("GREENHOUSE GAS", kb)
    assert exc.value.violations[0].code == "general-missing"


def test_redirect_conflict_detected():
    kb = build_fixture_kb()
    kb.redirects[("POLLUTANT", "WAS")] = Redirect(
        "POLLUTANT", "WAS", "POLLUTANT", GENERAL
    )
    with pytest.raises(ValidationFailure) as exc:
        assemble_flexible("POLLUTANT", kb)
    assert exc.value.violations[0].code == "redirect-conflict"


def test_render_flexible_shows_redirects_and_labels(kb):
    text = render_flexible(assemble_flexible("POLLUTANT", kb))
    assert text.startswith("POLLUTANT (GENERAL)")
    assert "see AIR POLLUTANT (AIR)" in text
    assert "[perspectivization]" in text
    assert "see WATER POLLUTANT (WAT)" in text


def test_render_template_lines(kb):
    text = render_template(kb.templates[("CHLORINE", "WAT")])
    lines = text.splitlines()
    assert lines[0] == "CHLORINE (WAT)"
    assert lines[1] == "  P1 DI @ CHLORINE type-of WATER DISINFECTANT"
    assert "  P4 DI π CHLORINE affects (reacts with) ORGANIC COMPOUND" in lines


# -- serialization ---------------------------------------------------------


def test_kb_json_round_trip(kb):
    text = kb_to_json(kb)
    again = kb_from_json(text)
    assert set(again.concepts) == set(kb.concepts)
    assert again.hierarchy == kb.hierarchy
    assert again.redirects == kb.redirects
    assert set(again.templates) == set(kb.templates)
    for key in kb.templates:
        assert again.templates[key].rows == kb.templates[key].rows
        assert again.templates[key].variation_label == kb.templates[key].variation_label
    assert again.propositions == kb.propositions
    assert validate_kb(again) == []
    # canonical form is stable
    assert kb_to_json(again) == text


def test_flexible_json_is_well_formed(kb):
    doc = json.loads(flexible_to_json(assemble_flexible("POLLUTANT", kb)))
    assert doc["concept"] == "POLLUTANT"
    domains = [entry["domain"] for entry in doc["entries"]]
    assert domains == ["AIR", "WAS", "WAT"]
    air = doc["entries"][0]
    assert air["redirect"]["target_concept"] == "AIR POLLUTANT"
