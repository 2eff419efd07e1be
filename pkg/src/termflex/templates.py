"""Definitional templates and domain-flexible definitions.

A template defines one concept in one domain (or GENERAL) as an ordered
list of proposition rows P1..Pn.  Row kinds:

* ``DI`` -- directly asserted definitional information,
* ``SP`` -- specialization of a proposition inherited from the genus,
* ``EX`` -- extra information traced to a non-preferential superordinate,
* ``FR`` -- frame rows relating concepts of the definiendum's context
  (always placed at the end).

P1 must state the genus: definiendum type-of its preferential
superordinate for that domain.  A domain entry may instead be a
redirect to another concept's template (one hop, no chains).  The
flexible definition of a concept is its GENERAL template plus the
per-domain templates/redirects in taxonomy order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from termflex.domains import GENERAL, sort_domains
from termflex.errors import KBError, ValidationFailure
from termflex.kb import (
    Concept,
    HierarchyEntry,
    KnowledgeBase,
    Proposition,
    Redirect,
    STATUSES,
    canonical_relation,
    parse_concept_expr,
)

KINDS = ("DI", "SP", "EX", "FR")

VARIATION_LABELS = ("modulation", "perspectivization", "subconceptualization")

GENUS_CLASSES = ("telic", "agentive", "constitutive", "formal")


@dataclass
class DefinitionalTemplate:
    definiendum: str
    domain: str
    rows: list  # Proposition with pid/kind set
    variation_label: str | None = None
    definition_text: str | None = None


@dataclass
class FlexibleDefinition:
    concept: str
    general: DefinitionalTemplate
    entries: list  # (domain, DefinitionalTemplate | Redirect) in taxonomy order


@dataclass(frozen=True)
class Violation:
    code: str
    pid: str | None
    message: str

    def __str__(self):
        where = f" [{self.pid}]" if self.pid else ""
        return f"{self.code}{where}: {self.message}"


def _stem_overlap(a, b):
    """Length of the common prefix of two names, spaces removed."""
    a = a.replace(" ", "").replace("-", "").lower()
    b = b.replace(" ", "").replace("-", "").lower()
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


def _is_derivative(name, term):
    return _stem_overlap(name, term) >= 5


def _ancestor_rows(kb, definiendum, domain):
    """Candidate parent propositions along the preferential chain."""
    rows = []
    try:
        chain = kb.preferential_chain(definiendum, domain)
    except KBError:
        chain = []
    for ancestor in chain:
        template = kb.templates.get((ancestor, domain)) or kb.templates.get(
            (ancestor, GENERAL)
        )
        if template:
            for row in template.rows:
                if ancestor in row.lhs.concepts():
                    rows.append(row)
        for prop in kb.direct_propositions(ancestor, domain):
            rows.append(prop)
    return rows


def _general_def_rows(kb, definiendum):
    template = kb.templates.get((definiendum, GENERAL))
    if not template:
        return None
    return [
        row
        for row in template.rows
        if row.kind != "FR" and definiendum in row.lhs.concepts()
    ]


def validate_template(template, kb):
    """All violations of template well-formedness rules (empty = valid)."""
    v = []
    rows = template.rows
    definiendum = template.definiendum

    if definiendum not in kb.concepts:
        v.append(Violation("concept-undeclared", None, f"definiendum {definiendum!r}"))

    # dense row numbering P1..Pn in order
    expected = [f"P{i}" for i in range(1, len(rows) + 1)]
    actual = [row.pid for row in rows]
    if actual != expected:
        v.append(
            Violation(
                "row-numbering",
                None,
                f"rows must be numbered P1..P{len(rows)} in order, got {actual}",
            )
        )

    introduced = {definiendum}
    seen_fr = False
    for row in rows:
        pid = row.pid
        if row.kind not in KINDS:
            v.append(Violation("row-kind", pid, f"unknown kind {row.kind!r}"))
            continue
        if row.status not in STATUSES:
            v.append(Violation("status-algebra", pid, f"bad status {row.status!r}"))
        try:
            canon, inverted = canonical_relation(row.relation)
        except KBError as exc:
            v.append(Violation("relation-unknown", pid, str(exc)))
            continue
        for name in row.lhs.concepts() | row.rhs.concepts():
            if name not in kb.concepts:
                v.append(Violation("concept-undeclared", pid, f"{name!r}"))
        nature_issues = (
            kb._nature_violations(row, canon, inverted)
            if all(
                n in kb.concepts for n in row.lhs.concepts() | row.rhs.concepts()
            )
            else []
        )
        for issue in nature_issues:
            v.append(Violation("nature-constraint", pid, issue))

        if row.kind == "FR":
            seen_fr = True
            if canon == "type-of" and not inverted and definiendum in row.lhs.concepts():
                v.append(
                    Violation(
                        "fr-type-of",
                        pid,
                        "a frame row may not state the definiendum's own genus",
                    )
                )
            mentioned = row.lhs.concepts() | row.rhs.concepts()
            anchored = bool(mentioned & introduced) or any(
                _is_derivative(name, definiendum) for name in row.lhs.concepts()
            )
            if not anchored:
                v.append(
                    Violation(
                        "fr-unanchored",
                        pid,
                        "frame row mentions no previously introduced concept "
                        "and no derivative of the definiendum",
                    )
                )
        elif seen_fr:
            v.append(
                Violation("fr-order", pid, "non-FR row after an FR row; FR rows go last")
            )

        if row.kind == "SP":
            parents = _ancestor_rows(kb, definiendum, template.domain)
            supported = False
            for parent in parents:
                try:
                    p_canon, p_inverted = canonical_relation(parent.relation)
                except KBError:
                    continue
                if (p_canon, p_inverted) != (canon, inverted):
                    continue
                if kb.expr_specializes(row.rhs, parent.rhs, template.domain):
                    supported = True
                    break
            if not supported:
                v.append(
                    Violation(
                        "sp-unsupported",
                        pid,
                        f"no inherited proposition with relation {row.relation!r} "
                        "that this row legally specializes",
                    )
                )

        if row.kind == "EX":
            nonpref = kb.non_preferential_superordinates(
                definiendum, template.domain
            )
            traced = False
            for sup in nonpref:
                sup_template = kb.templates.get((sup, template.domain)) or \
                    kb.templates.get((sup, GENERAL))
                if sup_template:
                    for srow in sup_template.rows:
                        try:
                            s_canon, s_inverted = canonical_relation(srow.relation)
                        except KBError:
                            continue
                        if (s_canon, s_inverted) != (canon, inverted):
                            continue
                        if row.rhs.concepts() & srow.rhs.concepts() or \
                                kb.expr_specializes(row.rhs, srow.rhs, template.domain):
                            traced = True
                            break
                if traced:
                    break
                # attribute named after the superordinate itself
                # (e.g. a gaseous/GAS style pairing)
                if any(
                    _stem_overlap(name.split()[0], sup.split()[0]) >= 3
                    for name in row.rhs.concepts()
                ):
                    traced = True
                    break
            if not traced:
                v.append(
                    Violation(
                        "ex-untraceable",
                        pid,
                        "extra row traces to no non-preferential superordinate",
                    )
                )

        introduced |= row.lhs.concepts() | row.rhs.concepts()

    # P1: genus statement
    if not rows:
        v.append(Violation("p1-missing", None, "template has no rows"))
    else:
        p1 = rows[0]
        if p1.kind != "DI":
            v.append(Violation("p1-kind", "P1", "P1 must be a DI row"))
        canon_ok = False
        try:
            canon, inverted = canonical_relation(p1.relation)
            canon_ok = canon == "type-of" and not inverted
        except KBError:
            pass
        if not canon_ok:
            v.append(Violation("p1-relation", "P1", "P1 must state 'type-of'"))
        else:
            entry = kb.hierarchy_entry(definiendum, template.domain)
            if entry is None:
                v.append(
                    Violation(
                        "p1-superordinate",
                        "P1",
                        f"no hierarchy entry for {definiendum} in {template.domain}",
                    )
                )
            else:
                rhs = p1.rhs.concepts()
                if p1.lhs.concepts() != {definiendum} or rhs != {entry.preferential}:
                    v.append(
                        Violation(
                            "p1-superordinate",
                            "P1",
                            f"P1 must read {definiendum} type-of "
                            f"{entry.preferential} for domain {template.domain}",
                        )
                    )

    v.extend(_check_variation_label(template, kb))
    return v


def _check_variation_label(template, kb):
    v = []
    label = template.variation_label
    if template.domain == GENERAL:
        if label is not None:
            v.append(
                Violation(
                    "label-general", None, "GENERAL template cannot carry a variation label"
                )
            )
        return v
    if label is None:
        return v
    if label not in VARIATION_LABELS:
        v.append(Violation("label-unknown", None, f"unknown label {label!r}"))
        return v
    general_rows = _general_def_rows(kb, template.definiendum)
    if general_rows is None:
        return v  # nothing to compare against; flagged via assembly
    general_real = {
        canonical_relation(r.relation)
        for r in general_rows
        if r.status == "@" and not r.negated
    }
    general_all = {canonical_relation(r.relation) for r in general_rows}
    own = [
        r
        for r in template.rows
        if r.kind != "FR" and template.definiendum in r.lhs.concepts()
    ]
    promotions = [
        r
        for r in own
        if r.status == "@"
        and not r.negated
        and canonical_relation(r.relation) not in general_real
    ]
    if label == "perspectivization" and promotions:
        v.append(
            Violation(
                "label-perspectivization",
                promotions[0].pid,
                "perspectivization must not promote new information to @ status",
            )
        )
    if label == "subconceptualization" and not promotions:
        v.append(
            Violation(
                "label-subconceptualization",
                None,
                "subconceptualization requires at least one @ row absent "
                "from the GENERAL template",
            )
        )
    if label == "modulation":
        novel = [
            r for r in own if canonical_relation(r.relation) not in general_all
        ]
        if promotions or novel:
            bad = (promotions or novel)[0]
            v.append(
                Violation(
                    "label-modulation",
                    bad.pid,
                    "modulation may only re-weight existing information",
                )
            )
    return v


def lint_template(template, kb):
    """Non-fatal warnings, e.g. morphological derivatives of the term.

    A right-hand-side concept sharing a stem with the definiendum (like
    a nominalization of its term) belongs on the concept map but should
    stay out of the definition prose.
    """
    warnings = []
    for row in template.rows:
        for name in row.rhs.concepts():
            if name != template.definiendum and _is_derivative(
                name, template.definiendum
            ):
                warnings.append(
                    Violation(
                        "lint-derivative",
                        row.pid,
                        f"{name!r} derives from the definiendum's term; "
                        "map-only, exclude from prose",
                    )
                )
    return warnings


def build_template(definiendum, domain, kb):
    """Start a template: genus row plus inheritable slots to specialize."""
    entry = kb.hierarchy_entry(definiendum, domain)
    if entry is None:
        raise KBError(f"no hierarchy entry for {definiendum} in {domain}")
    rows = [
        Proposition(
            lhs=parse_concept_expr(definiendum),
            relation="type-of",
            rhs=parse_concept_expr(entry.preferential),
            status="@",
            kind="DI",
            pid="P1",
            domains=frozenset({domain}),
        )
    ]
    genus_template = kb.templates.get((entry.preferential, domain)) or \
        kb.templates.get((entry.preferential, GENERAL))
    if genus_template:
        for row in genus_template.rows:
            if row.kind == "FR" or entry.preferential not in row.lhs.concepts():
                continue
            if canonical_relation(row.relation) == ("type-of", False):
                continue
            rows.append(
                Proposition(
                    lhs=parse_concept_expr(definiendum),
                    relation=row.relation,
                    rhs=row.rhs,
                    specializer=row.specializer,
                    status=row.status,
                    negated=row.negated,
                    kind="SP",
                    pid=f"P{len(rows) + 1}",
                    domains=frozenset({domain}),
                )
            )
    return DefinitionalTemplate(definiendum, domain, rows)


# ---------------------------------------------------------------------------
# Genus classification
# ---------------------------------------------------------------------------

_TELIC_PRIMARY = ("has-function", "carried-out-with", "studies", "measures", "represents")
_TELIC_SECONDARY = ("affects", "causes", "effects")


def classify_genus(candidate, kb, domain=GENERAL):
    """(genus class, source) for a superordinate candidate concept.

    An annotated qualia role hint wins; otherwise a heuristic over the
    candidate's own propositions: function-bearing relations make it
    telic, result-of agentive, part-of/made-of constitutive, an
    effect-on-something telic, and anything else formal.
    """
    concept_obj = kb.concepts.get(candidate)
    if concept_obj and concept_obj.qualia_role_hint:
        if concept_obj.qualia_role_hint not in GENUS_CLASSES:
            raise KBError(f"bad qualia role hint {concept_obj.qualia_role_hint!r}")
        return concept_obj.qualia_role_hint, "annotated"

    def rows_for(relation):
        out = list(kb.query_relation(candidate, relation, domain))
        for template in kb.templates.values():
            for row in template.rows:
                if candidate not in row.lhs.concepts() or not row.active_in(domain):
                    continue
                if canonical_relation(row.relation) == canonical_relation(relation):
                    out.append(row)
        return out

    if any(rows_for(rel) for rel in _TELIC_PRIMARY):
        return "telic", "heuristic"
    if rows_for("result-of"):
        return "agentive", "heuristic"
    if rows_for("part-of") or rows_for("made-of"):
        return "constitutive", "heuristic"
    if any(rows_for(rel) for rel in _TELIC_SECONDARY):
        return "telic", "heuristic"
    return "formal", "heuristic"


# ---------------------------------------------------------------------------
# Flexible definitions
# ---------------------------------------------------------------------------


def assemble_flexible(concept_name, kb):
    """Assemble the flexible definition of a concept.

    Requires a valid GENERAL template.  Redirect targets must resolve to
    a real template in one hop.
    """
    general = kb.templates.get((concept_name, GENERAL))
    if general is None:
        raise ValidationFailure(
            [Violation("general-missing", None, f"{concept_name} has no GENERAL template")]
        )
    violations = validate_template(general, kb)
    if violations:
        raise ValidationFailure(violations)

    entries = {}
    for (name, domain), template in kb.templates.items():
        if name == concept_name and domain != GENERAL:
            entries[domain] = template
    for (name, domain), redirect in kb.redirects.items():
        if name != concept_name or domain == GENERAL:
            continue
        if domain in entries:
            raise ValidationFailure(
                [Violation("redirect-conflict", None,
                           f"{concept_name} has both a template and a redirect in {domain}")]
            )
        target_key = (redirect.target_concept, redirect.target_domain)
        if target_key in kb.redirects:
            raise ValidationFailure(
                [Violation("redirect-chain", None,
                           f"redirect {concept_name}({domain}) points to another redirect")]
            )
        if target_key not in kb.templates:
            raise ValidationFailure(
                [Violation("redirect-dangling", None,
                           f"redirect target {target_key} has no template")]
            )
        entries[domain] = redirect

    ordered = [(d, entries[d]) for d in sort_domains(entries)]
    return FlexibleDefinition(concept_name, general, ordered)


def render_template(template):
    label = f" [{template.variation_label}]" if template.variation_label else ""
    lines = [f"{template.definiendum} ({template.domain}){label}"]
    for row in template.rows:
        lines.append(f"  {row.pid} {row.kind} {row.render()}")
    if template.definition_text:
        lines.append(f"  def: {template.definition_text}")
    return "\n".join(lines)


def render_flexible(flex):
    blocks = [render_template(flex.general)]
    for domain, entry in flex.entries:
        if isinstance(entry, Redirect):
            blocks.append(
                f"{flex.concept} ({domain})\n  see {entry.target_concept} "
                f"({entry.target_domain})"
            )
        else:
            blocks.append(render_template(entry))
    return "\n\n".join(blocks) + "\n"


# ---------------------------------------------------------------------------
# Knowledge base (de)serialization -- one JSON document
# ---------------------------------------------------------------------------


def _prop_to_dict(prop):
    return {
        "pid": prop.pid,
        "kind": prop.kind,
        "status": prop.status,
        "negated": prop.negated,
        "lhs": prop.lhs.render(),
        "relation": prop.relation,
        "specializer": prop.specializer,
        "rhs": prop.rhs.render(),
        "domains": sorted(prop.domains),
        "template_only": prop.template_only,
    }


def _prop_from_dict(data):
    return Proposition(
        lhs=parse_concept_expr(data["lhs"]),
        relation=data["relation"],
        rhs=parse_concept_expr(data["rhs"]),
        specializer=data.get("specializer"),
        status=data.get("status", "@"),
        negated=data.get("negated", False),
        domains=frozenset(data.get("domains", ())),
        kind=data.get("kind"),
        pid=data.get("pid"),
        template_only=data.get("template_only", False),
    )


def kb_to_json(kb):
    from termflex.kb import RELATIONS

    doc = {
        "relations": [
            {
                "name": r.name,
                "inverse": r.inverse,
                "symmetric": r.symmetric,
                "parent": r.parent,
            }
            for r in RELATIONS.values()
        ],
        "concepts": [
            {
                "name": c.name,
                "nature": c.nature,
                "terms": c.terms,
                "qualia_role_hint": c.qualia_role_hint,
            }
            for c in sorted(kb.concepts.values(), key=lambda c: c.name)
        ],
        "hierarchy": [
            {
                "concept": e.concept,
                "domain": e.domain,
                "preferential": e.preferential,
                "non_preferential": list(e.non_preferential),
            }
            for e in sorted(kb.hierarchy.values(), key=lambda e: (e.concept, e.domain))
        ],
        "propositions": [_prop_to_dict(p) for p in kb.propositions],
        "templates": [
            {
                "definiendum": t.definiendum,
                "domain": t.domain,
                "variation_label": t.variation_label,
                "definition_text": t.definition_text,
                "rows": [_prop_to_dict(r) for r in t.rows],
            }
            for t in (
                kb.templates[k] for k in sorted(kb.templates)
            )
        ],
        "redirects": [
            {
                "concept": r.concept,
                "domain": r.domain,
                "target_concept": r.target_concept,
                "target_domain": r.target_domain,
            }
            for r in (kb.redirects[k] for k in sorted(kb.redirects))
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def kb_from_json(text):
    data = json.loads(text)
    kb = KnowledgeBase()
    for c in data.get("concepts", ()):
        kb.add_concept(
            Concept(
                c["name"],
                c.get("nature", "physical-entity"),
                c.get("terms") or {},
                c.get("qualia_role_hint"),
            )
        )
    for e in data.get("hierarchy", ()):
        kb.add_hierarchy(
            HierarchyEntry(
                e["concept"],
                e["domain"],
                e["preferential"],
                tuple(e.get("non_preferential", ())),
            )
        )
    for p in data.get("propositions", ()):
        kb.add_proposition(_prop_from_dict(p), check=False)
    for t in data.get("templates", ()):
        template = DefinitionalTemplate(
            t["definiendum"],
            t["domain"],
            [_prop_from_dict(r) for r in t.get("rows", ())],
            t.get("variation_label"),
            t.get("definition_text"),
        )
        kb.templates[(template.definiendum, template.domain)] = template
    for r in data.get("redirects", ()):
        redirect = Redirect(
            r["concept"], r["domain"], r["target_concept"], r["target_domain"]
        )
        kb.redirects[(redirect.concept, redirect.domain)] = redirect
    return kb


def flexible_to_json(flex):
    entries = []
    for domain, entry in flex.entries:
        if isinstance(entry, Redirect):
            entries.append(
                {
                    "domain": domain,
                    "redirect": {
                        "target_concept": entry.target_concept,
                        "target_domain": entry.target_domain,
                    },
                }
            )
        else:
            entries.append(
                {
                    "domain": domain,
                    "template": {
                        "definiendum": entry.definiendum,
                        "variation_label": entry.variation_label,
                        "definition_text": entry.definition_text,
                        "rows": [_prop_to_dict(r) for r in entry.rows],
                    },
                }
            )
    doc = {
        "concept": flex.concept,
        "general": {
            "definition_text": flex.general.definition_text,
            "rows": [_prop_to_dict(r) for r in flex.general.rows],
        },
        "entries": entries,
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def validate_kb(kb):
    """All violations across propositions, templates and redirects."""
    findings = []
    for i, prop in enumerate(kb.propositions):
        probe = KnowledgeBase(root=kb.root)
        probe.concepts = kb.concepts
        probe.propositions = kb.propositions[:i]
        for issue in probe.validate_proposition(prop):
            findings.append(Violation("proposition", prop.pid, issue))
    for template in kb.templates.values():
        for violation in validate_template(template, kb):
            findings.append(
                Violation(
                    f"template:{template.definiendum}({template.domain})."
                    f"{violation.code}",
                    violation.pid,
                    violation.message,
                )
            )
    for redirect in kb.redirects.values():
        target_key = (redirect.target_concept, redirect.target_domain)
        if target_key in kb.redirects:
            findings.append(
                Violation(
                    "redirect-chain",
                    None,
                    f"{redirect.concept}({redirect.domain}) points to another redirect",
                )
            )
        elif target_key not in kb.templates:
            findings.append(
                Violation(
                    "redirect-dangling",
                    None,
                    f"{redirect.concept}({redirect.domain}) -> {target_key} "
                    "has no template",
                )
            )
    return findings


def lint_kb(kb):
    """Warnings: redundant propositions and derivative-term rows."""
    warnings = []
    for i, prop in enumerate(kb.propositions):
        probe = KnowledgeBase(root=kb.root)
        probe.concepts = kb.concepts
        probe.hierarchy = kb.hierarchy
        probe.templates = kb.templates
        probe.propositions = kb.propositions[:i] + kb.propositions[i + 1:]
        verdict = probe.detect_redundant(prop)
        if verdict != "novel":
            warnings.append(Violation(verdict, prop.pid, prop.render()))
    for template in kb.templates.values():
        warnings.extend(lint_template(template, kb))
    return warnings
