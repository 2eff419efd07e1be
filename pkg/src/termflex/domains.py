"""Domain codes for the environmental-science corpus family.

Fifteen specialised corpora share one umbrella subject field.  ``ENV``
(general environment) is the parent of the other fourteen; ``GENERAL``
is not a corpus but the knowledge-base scope meaning "all domains".
"""

GENERAL = "GENERAL"

# code -> (label, parent code or None)
DOMAINS = {
    "AGR": ("agronomy", "ENV"),
    "AIR": ("air quality management", "ENV"),
    "ATM": ("atmospheric sciences", "ENV"),
    "BIO": ("biology", "ENV"),
    "CEN": ("chemical engineering", "ENV"),
    "CHE": ("chemistry", "ENV"),
    "CIV": ("civil engineering", "ENV"),
    "ENE": ("energy engineering", "ENV"),
    "ENV": ("general environment", None),
    "GEO": ("geology", "ENV"),
    "HYD": ("hydrology", "ENV"),
    "PHY": ("physics", "ENV"),
    "SOI": ("soil sciences", "ENV"),
    "WAS": ("waste management", "ENV"),
    "WAT": ("water treatment and supply", "ENV"),
}

# Canonical presentation order (alphabetical by code).
DOMAIN_ORDER = sorted(DOMAINS)


def domain_label(code):
    return DOMAINS[code][0]


def domain_parent(code):
    return DOMAINS[code][1]


def sort_domains(codes):
    """Order arbitrary domain codes canonically; unknown codes go last."""
    known = [c for c in codes if c in DOMAINS]
    unknown = sorted(c for c in codes if c not in DOMAINS)
    return sorted(known, key=DOMAIN_ORDER.index) + unknown
