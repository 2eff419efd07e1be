"""Concept knowledge base: concepts, relations, propositions.

Concepts carry one of five natures.  Conceptual relations form a fixed
registry where every non-symmetric relation has a named inverse; a
proposition is stored once, in the direction its source authored, and
the inverse reading is derived at query time.  Propositions carry a
status (``@`` real/ascertained, ``π`` prototypical), optional negation,
and a domain scope.

Concept expressions combine concept names with ``&`` (and), ``|`` (or)
and ``x`` (exclusive or); precedence is ``x`` > ``&`` > ``|``,
left-associative, with parentheses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from termflex.domains import GENERAL
from termflex.errors import ExprParseError, KBError

NATURES = ("physical-entity", "mental-entity", "process", "state", "property")

STATUS_REAL = "@"
STATUS_PROTOTYPICAL = "π"
STATUSES = (STATUS_REAL, STATUS_PROTOTYPICAL)

#: Concept that subsumes everything (top of the ontology).
ROOT_CONCEPT = "ENTITY"


# ---------------------------------------------------------------------------
# Concept expressions
# ---------------------------------------------------------------------------

_PRECEDENCE = {"or": 1, "and": 2, "xor": 3, "concept": 4}
_OP_SYMBOL = {"or": "|", "and": "&", "xor": "x"}


@dataclass(frozen=True)
class Expr:
    op: str  # concept | and | or | xor
    name: str | None = None
    children: tuple = ()

    def concepts(self):
        if self.op == "concept":
            return {self.name}
        out = set()
        for child in self.children:
            out |= child.concepts()
        return out

    def render(self):
        if self.op == "concept":
            return self.name
        sep = f" {_OP_SYMBOL[self.op]} "
        parts = []
        for child in self.children:
            text = child.render()
            if _PRECEDENCE[child.op] < _PRECEDENCE[self.op]:
                text = f"({text})"
            parts.append(text)
        return sep.join(parts)

    def __str__(self):
        return self.render()


def concept(name):
    return Expr("concept", name=name)


def _combine(op, children):
    # flatten same-op children; a left-associative chain of one operator
    # is equivalent to its n-ary form
    flat = []
    for child in children:
        if child.op == op:
            flat.extend(child.children)
        else:
            flat.append(child)
    if len(flat) == 1:
        return flat[0]
    return Expr(op, children=tuple(flat))


_WORD_RE = re.compile(r"[A-Za-z0-9_'.\-]+")


def _tokenize_expr(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "&|()":
            tokens.append(ch)
            i += 1
            continue
        m = _WORD_RE.match(text, i)
        if not m:
            raise ExprParseError(f"unexpected character {ch!r} in concept expression")
        word = m.group(0)
        i = m.end()
        if word in ("x", "X"):
            tokens.append("x")
        else:
            tokens.append(("WORD", word))
    return tokens


def parse_concept_expr(text, kb=None, declare=False):
    """Parse a concept expression string into an :class:`Expr`.

    With a ``kb``, unknown concept names raise unless ``declare`` is
    set, in which case they are declared with the default nature.
    """
    tokens = _tokenize_expr(text)
    if not tokens:
        raise ExprParseError("empty concept expression")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def parse_or():
        nonlocal pos
        parts = [parse_and()]
        while peek() == "|":
            pos += 1
            parts.append(parse_and())
        return _combine("or", parts)

    def parse_and():
        nonlocal pos
        parts = [parse_xor()]
        while peek() == "&":
            pos += 1
            parts.append(parse_xor())
        return _combine("and", parts)

    def parse_xor():
        nonlocal pos
        parts = [parse_atom()]
        while peek() == "x":
            pos += 1
            parts.append(parse_atom())
        return _combine("xor", parts)

    def parse_atom():
        nonlocal pos
        tok = peek()
        if tok == "(":
            pos += 1
            inner = parse_or()
            if peek() != ")":
                raise ExprParseError("missing closing parenthesis")
            pos += 1
            return inner
        if isinstance(tok, tuple):
            words = []
            while isinstance(peek(), tuple):
                words.append(peek()[1])
                pos += 1
            return concept(" ".join(words))
        raise ExprParseError(f"unexpected token {tok!r} in concept expression")

    expr = parse_or()
    if pos != len(tokens):
        raise ExprParseError(f"trailing tokens after expression: {tokens[pos:]!r}")
    if kb is not None:
        for name in expr.concepts():
            if name not in kb.concepts:
                if declare:
                    kb.ensure_concept(name)
                else:
                    raise KBError(f"undeclared concept {name!r}")
    return expr


# ---------------------------------------------------------------------------
# Relation registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    name: str
    inverse: str
    symmetric: bool = False
    parent: str | None = None  # subtype of another relation
    takes_specializer: bool = False


def _registry():
    rels = [
        Relation("type-of", "has-type"),
        Relation("part-of", "has-part"),
        Relation("phase-of", "has-phase"),
        Relation("made-of", "material-of"),
        Relation("delimited-by", "delimited-by", symmetric=True),
        Relation("located-in", "location-of"),
        Relation("takes-place-in", "setting-of"),
        Relation("result-of", "results-in"),
        Relation("causes", "caused-by"),
        Relation("affects", "affected-by", takes_specializer=True),
        # extension: direct effect without full causation
        Relation("effects", "effected-by", takes_specializer=True),
        Relation("has-function", "function-of"),
        Relation("carried-out-with", "used-for", parent="has-function"),
        Relation("studies", "studied-by", parent="has-function"),
        Relation("measures", "measured-by", parent="has-function"),
        Relation("represents", "represented-by", parent="has-function"),
        Relation("attribute-of", "has-attribute"),
    ]
    return {r.name: r for r in rels}


RELATIONS = _registry()

#: every usable relation name -> (canonical name, authored-as-inverse?)
RELATION_NAMES = {}
for _r in RELATIONS.values():
    RELATION_NAMES[_r.name] = (_r.name, False)
    if not _r.symmetric:
        RELATION_NAMES[_r.inverse] = (_r.name, True)

#: accepted spelling variants
RELATION_NAMES["has-location"] = ("located-in", False)


def canonical_relation(name):
    """(canonical name, inverted flag); unknown names raise KBError."""
    try:
        return RELATION_NAMES[name]
    except KeyError:
        raise KBError(f"unknown relation {name!r}") from None


def inverse_name(name):
    canon, inverted = canonical_relation(name)
    rel = RELATIONS[canon]
    if rel.symmetric:
        return rel.name
    return rel.name if inverted else rel.inverse


# ---------------------------------------------------------------------------
# Concepts, propositions, hierarchy
# ---------------------------------------------------------------------------


@dataclass
class Concept:
    name: str
    nature: str = "physical-entity"
    terms: dict = field(default_factory=dict)  # lang -> [term strings]
    qualia_role_hint: str | None = None  # telic/agentive/constitutive/formal

    def __post_init__(self):
        if self.nature not in NATURES:
            raise KBError(f"unknown nature {self.nature!r} for {self.name}")
        if not self.terms:
            self.terms = {"en": [self.name.lower()]}


@dataclass
class Proposition:
    lhs: Expr
    relation: str
    rhs: Expr
    specializer: str | None = None
    status: str | None = STATUS_REAL
    negated: bool = False
    domains: frozenset = frozenset()  # empty = all domains / GENERAL
    kind: str | None = None  # DI / SP / EX / FR when part of a template
    pid: str | None = None  # P-number inside a template
    template_only: bool = False
    provenance: str | None = None

    def active_in(self, domain):
        return not self.domains or domain in self.domains or GENERAL in self.domains

    def render(self):
        rel = self.relation
        if self.specializer:
            rel = f"{rel} ({self.specializer})"
        status = ""
        if self.status:
            status = ("!" if self.negated else "") + self.status + " "
        return f"{status}{self.lhs} {rel} {self.rhs}"


@dataclass(frozen=True)
class HierarchyEntry:
    concept: str
    domain: str
    preferential: str
    non_preferential: tuple = ()


@dataclass(frozen=True)
class Redirect:
    """One-hop pointer from (concept, domain) to another concept's template."""

    concept: str
    domain: str
    target_concept: str
    target_domain: str


class KnowledgeBase:
    def __init__(self, root=ROOT_CONCEPT):
        self.root = root
        self.concepts = {}
        self.hierarchy = {}  # (concept, domain) -> HierarchyEntry
        self.propositions = []
        self.templates = {}  # (concept, domain) -> DefinitionalTemplate
        self.redirects = {}  # (concept, domain) -> Redirect

    # -- concepts ----------------------------------------------------------

    def add_concept(self, concept_obj):
        if concept_obj.name in self.concepts:
            raise KBError(f"concept {concept_obj.name!r} already declared")
        self.concepts[concept_obj.name] = concept_obj
        return concept_obj

    def ensure_concept(self, name, nature="physical-entity"):
        if name not in self.concepts:
            self.concepts[name] = Concept(name, nature)
        return self.concepts[name]

    def nature(self, name):
        try:
            return self.concepts[name].nature
        except KeyError:
            raise KBError(f"undeclared concept {name!r}") from None

    # -- hierarchy ---------------------------------------------------------

    def add_hierarchy(self, entry):
        for name in (entry.concept, entry.preferential, *entry.non_preferential):
            if name not in self.concepts:
                raise KBError(f"undeclared concept {name!r} in hierarchy entry")
        if entry.preferential == entry.concept:
            raise KBError(f"{entry.concept} cannot be its own superordinate")
        self.hierarchy[(entry.concept, entry.domain)] = entry
        try:
            self.preferential_chain(entry.concept, entry.domain)
        except KBError:
            del self.hierarchy[(entry.concept, entry.domain)]
            raise

    def hierarchy_entry(self, concept_name, domain):
        entry = self.hierarchy.get((concept_name, domain))
        if entry is None and domain != GENERAL:
            entry = self.hierarchy.get((concept_name, GENERAL))
        return entry

    def preferential_chain(self, concept_name, domain):
        """Superordinates of a concept along the domain's preferential path."""
        chain = []
        seen = {concept_name}
        current = concept_name
        while True:
            entry = self.hierarchy_entry(current, domain)
            if entry is None:
                break
            parent = entry.preferential
            if parent in seen:
                raise KBError(
                    f"cycle in preferential hierarchy at {parent!r} ({domain})"
                )
            chain.append(parent)
            seen.add(parent)
            current = parent
        return chain

    def non_preferential_superordinates(self, concept_name, domain):
        """Non-preferential superordinates active for a contextual domain.

        Includes the GENERAL preferential superordinate when it differs
        from the domain's own: in a contextual domain the general genus
        still holds, just not preferentially.
        """
        entry = self.hierarchy_entry(concept_name, domain)
        out = list(entry.non_preferential) if entry else []
        if domain != GENERAL:
            general = self.hierarchy.get((concept_name, GENERAL))
            if general and entry and general.preferential != entry.preferential:
                if general.preferential not in out:
                    out.append(general.preferential)
        return out

    # -- propositions ------------------------------------------------------

    def add_proposition(self, prop, check=True):
        if check:
            violations = self.validate_proposition(prop)
            if violations:
                raise KBError("; ".join(violations))
        self.propositions.append(prop)
        return prop

    def validate_proposition(self, prop):
        """Well-formedness violations for a proposition (empty = valid)."""
        violations = []
        try:
            canon, inverted = canonical_relation(prop.relation)
        except KBError as exc:
            return [str(exc)]
        if prop.status is not None and prop.status not in STATUSES:
            violations.append(f"unknown status {prop.status!r}")
        if prop.negated and prop.status is None:
            violations.append("negation requires a status mark (@ or π)")
        for name in prop.lhs.concepts() | prop.rhs.concepts():
            if name not in self.concepts:
                violations.append(f"undeclared concept {name!r}")
        if violations:
            return violations
        violations.extend(self._nature_violations(prop, canon, inverted))
        dup = self._find_stored(prop, canon, inverted)
        if dup is not None:
            violations.append(
                f"proposition already stored as {dup.render()!r}; "
                "the inverse reading is derived, not stored"
            )
        return violations

    def _nature_violations(self, prop, canon, inverted):
        lhs, rhs = (prop.rhs, prop.lhs) if inverted else (prop.lhs, prop.rhs)
        lhs_natures = {self.nature(n) for n in lhs.concepts()}
        rhs_natures = {self.nature(n) for n in rhs.concepts()}
        out = []

        def check(natures, allowed, side):
            bad = natures - set(allowed)
            if bad:
                out.append(
                    f"relation {canon}: {side} nature must be in "
                    f"{sorted(allowed)}, got {sorted(bad)}"
                )

        if canon == "attribute-of":
            check(lhs_natures, {"property"}, "attribute side")
        elif canon == "causes":
            check(rhs_natures, {"process"}, "effect side")
        elif canon == "phase-of":
            check(lhs_natures | rhs_natures, {"process"}, "either")
        elif canon == "takes-place-in":
            check(lhs_natures, {"process", "state"}, "event side")
        elif canon in ("located-in", "delimited-by"):
            check(lhs_natures | rhs_natures, {"physical-entity"}, "either")
        elif canon == "made-of":
            check(lhs_natures | rhs_natures, {"physical-entity"}, "either")
        return out

    def _find_stored(self, prop, canon, inverted):
        rel = RELATIONS[canon]
        for stored in self.propositions:
            s_canon, s_inverted = canonical_relation(stored.relation)
            if s_canon != canon:
                continue
            same_dir = s_inverted == inverted
            if rel.symmetric:
                pairs = [(stored.lhs, stored.rhs), (stored.rhs, stored.lhs)]
            elif same_dir:
                pairs = [(stored.lhs, stored.rhs)]
            else:
                pairs = [(stored.rhs, stored.lhs)]
            for lhs, rhs in pairs:
                if lhs == prop.lhs and rhs == prop.rhs and stored.status == prop.status \
                        and stored.negated == prop.negated:
                    if not prop.domains or not stored.domains or prop.domains & stored.domains:
                        return stored
        return None

    def query_relation(self, concept_name, relation, domain=GENERAL):
        """Propositions about a concept under a relation, inverse included.

        Stored propositions authored in the inverse direction are
        reported flipped, so callers see a uniform direction.
        """
        canon, want_inverted = canonical_relation(relation)
        out = []
        for prop in self.propositions:
            if not prop.active_in(domain):
                continue
            s_canon, s_inverted = canonical_relation(prop.relation)
            if s_canon != canon:
                continue
            if s_inverted == want_inverted or RELATIONS[canon].symmetric:
                if concept_name in prop.lhs.concepts():
                    out.append(prop)
            if s_inverted != want_inverted or RELATIONS[canon].symmetric:
                if concept_name in prop.rhs.concepts():
                    out.append(
                        replace(
                            prop,
                            lhs=prop.rhs,
                            rhs=prop.lhs,
                            relation=inverse_name(prop.relation),
                            provenance="derived-inverse",
                        )
                    )
        return out

    # -- subsumption -------------------------------------------------------

    def _edges(self, relations, domain):
        edges = {}

        def add(child_expr, parent_expr):
            for child in child_expr.concepts():
                for parent in parent_expr.concepts():
                    edges.setdefault(child, set()).add(parent)

        def harvest(prop):
            if prop.negated or prop.status == STATUS_PROTOTYPICAL:
                return
            if not prop.active_in(domain):
                return
            canon, inverted = canonical_relation(prop.relation)
            if canon not in relations:
                return
            # for made-of the component (the part) is the right-hand side
            flip = inverted if canon != "made-of" else not inverted
            if flip:
                add(prop.rhs, prop.lhs)
            else:
                add(prop.lhs, prop.rhs)

        for prop in self.propositions:
            harvest(prop)
        for template in self.templates.values():
            for row in template.rows:
                harvest(row)
        if "type-of" in relations:
            for entry in self.hierarchy.values():
                if entry.domain in (domain, GENERAL):
                    edges.setdefault(entry.concept, set()).add(entry.preferential)
                    for sup in entry.non_preferential:
                        edges.setdefault(entry.concept, set()).add(sup)
        return edges

    def _reachable(self, start, goal, edges):
        seen = set()
        stack = [start]
        while stack:
            node = stack.pop()
            if node == goal:
                return True
            if node in seen:
                continue
            seen.add(node)
            stack.extend(edges.get(node, ()))
        return False

    def is_subordinate(self, name, ancestor, domain=GENERAL):
        if name == ancestor or ancestor == self.root:
            return True
        return self._reachable(name, ancestor, self._edges({"type-of"}, domain))

    def is_meronym(self, name, whole, domain=GENERAL):
        return self._reachable(
            name, whole, self._edges({"part-of", "made-of"}, domain)
        )

    def specializes(self, name, target, domain=GENERAL):
        """True when ``name`` equals, is subordinate to or part of ``target``."""
        return self.is_subordinate(name, target, domain) or self.is_meronym(
            name, target, domain
        )

    def expr_specializes(self, expr, target_expr, domain=GENERAL):
        """Every concept of ``expr`` specializes some concept of target."""
        targets = target_expr.concepts()
        return all(
            any(self.specializes(c, t, domain) for t in targets)
            for c in expr.concepts()
        )

    # -- inheritance -------------------------------------------------------

    def direct_propositions(self, concept_name, domain):
        return [
            p
            for p in self.propositions
            if concept_name in p.lhs.concepts() and p.active_in(domain)
        ]

    def effective_propositions(self, concept_name, domain=GENERAL, nonpref_depth=1):
        """Direct plus inherited propositions of a concept in a domain.

        Inheritance runs up the domain's preferential chain and
        ``nonpref_depth`` levels of non-preferential superordinates.
        Prototypical status is preserved.  An inherited proposition is
        overridden (dropped) when a direct one has the same relation
        and an equal or more specialized right-hand side.
        """
        direct = [
            replace(p, provenance="direct")
            for p in self.direct_propositions(concept_name, domain)
        ]
        ancestors = list(self.preferential_chain(concept_name, domain))
        frontier = [concept_name]
        for _ in range(nonpref_depth):
            next_frontier = []
            for node in frontier:
                for sup in self.non_preferential_superordinates(node, domain):
                    if sup not in ancestors and sup != concept_name:
                        ancestors.append(sup)
                        next_frontier.append(sup)
            frontier = next_frontier
        inherited = []
        for ancestor in ancestors:
            for p in self.direct_propositions(ancestor, domain):
                overridden = False
                canon, inv = canonical_relation(p.relation)
                for d in direct:
                    d_canon, d_inv = canonical_relation(d.relation)
                    if (d_canon, d_inv) != (canon, inv):
                        continue
                    if self.expr_specializes(d.rhs, p.rhs, domain):
                        overridden = True
                        break
                if not overridden:
                    inherited.append(
                        replace(p, provenance=f"inherited from {ancestor}")
                    )
        return direct + inherited

    # -- redundancy --------------------------------------------------------

    def detect_redundant(self, prop, domain=GENERAL):
        """Classify a new proposition against what the KB already implies.

        Returns ``duplicate-of-inheritable``, ``duplicate-of-inferable``
        or ``novel``.  A proposition whose right-hand side strictly
        specializes the inheritable one is novel.
        """
        canon, inverted = canonical_relation(prop.relation)
        for name in prop.lhs.concepts():
            for entry in self.effective_propositions(name, domain):
                if entry.provenance == "direct":
                    continue
                e_canon, e_inv = canonical_relation(entry.relation)
                if (e_canon, e_inv) != (canon, inverted) or entry.rhs != prop.rhs:
                    continue
                return "duplicate-of-inheritable"
        if canon == "affects" and not inverted:
            # A affects X follows from A causes/effects P, P affects X
            for name in prop.lhs.concepts():
                for mid in self.query_relation(name, "causes", domain) + \
                        self.query_relation(name, "effects", domain):
                    for mid_concept in mid.rhs.concepts():
                        for downstream in self.query_relation(
                            mid_concept, "affects", domain
                        ):
                            if downstream.rhs == prop.rhs:
                                return "duplicate-of-inferable"
        return "novel"
