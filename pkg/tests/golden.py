"""Golden reference values the scenario engine is expected to reproduce.

``R10`` / ``P10`` / ``EPSILON`` are the published twelve-scenario reference
table (three-decimal prints); ``TABLE4_PCT`` the pinned integer percent
changes.  Keys are preset names.
"""

R10 = {
    "limited/baseline/no-opp": 0.170,
    "limited/baseline/opp": 0.171,
    "limited/moonshot/no-opp": 0.003,
    "limited/moonshot/opp": 0.003,
    "disruptive/baseline/no-opp": 0.261,
    "disruptive/baseline/opp": 0.361,
    "disruptive/moonshot/no-opp": 0.132,
    "disruptive/moonshot/opp": 0.133,
    "transformative/baseline/no-opp": 0.403,
    "transformative/baseline/opp": 1.441,
    "transformative/moonshot/no-opp": 0.388,
    "transformative/moonshot/opp": 0.899,
}

P10 = {
    "limited/baseline/no-opp": 0.157,
    "limited/baseline/opp": 0.157,
    "limited/moonshot/no-opp": 0.003,
    "limited/moonshot/opp": 0.003,
    "disruptive/baseline/no-opp": 0.230,
    "disruptive/baseline/opp": 0.303,
    "disruptive/moonshot/no-opp": 0.124,
    "disruptive/moonshot/opp": 0.124,
    "transformative/baseline/no-opp": 0.332,
    "transformative/baseline/opp": 0.763,
    "transformative/moonshot/no-opp": 0.321,
    "transformative/moonshot/opp": 0.593,
}

EPSILON = {
    "limited/baseline/no-opp": -0.348,
    "limited/baseline/opp": -0.345,
    "limited/moonshot/no-opp": -0.989,
    "limited/moonshot/opp": -0.989,
    "disruptive/baseline/no-opp": 0.000,
    "disruptive/baseline/opp": 0.383,
    "disruptive/moonshot/no-opp": -0.494,
    "disruptive/moonshot/opp": -0.492,
    "transformative/baseline/no-opp": 0.543,
    "transformative/baseline/opp": 4.516,
    "transformative/moonshot/no-opp": 0.485,
    "transformative/moonshot/opp": 2.441,
}

# Pinned integer percent changes relative to each regime's plain baseline.
TABLE4_PCT = {
    "limited/moonshot/no-opp": (-98, 1),
    "disruptive/baseline/opp": (38, 2),
    "transformative/baseline/opp": (258, 5),
}

# Reference constants computed with 40-digit arithmetic.
PET_LIMITED_AT_10 = 79.93103451153160
T_STAR_LIMITED = 6.27123403378667  # ln(275/65) / 0.23
BOUND_LOWER_DELTA30 = 1.7359750712090845
