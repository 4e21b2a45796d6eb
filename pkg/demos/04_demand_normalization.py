"""Industry demand: raw snapshot to commensurable unit scores.

Run: python demos/04_demand_normalization.py
"""

import langscore as ls
from langscore.demand import SUB_FEATURES

dataset = ls.load_bundled_dataset()
snapshot = dataset.demand

print(f"Snapshot as of {snapshot.as_of}; sources:")
for source in snapshot.sources:
    print(f"  - {source}")

print("\nRaw values (a percentage and two counts, not comparable as-is):")
print(f"{'subject':<9} {'web share %':>12} {'repositories':>14} {'job posts':>11}")
for entry in snapshot.entries:
    print(
        f"{entry.subject:<9} {entry.web_search_share:>12} "
        f"{entry.active_repositories:>14.0f} {entry.job_posts:>11.0f}"
    )

print("\nDividing each column by its maximum puts all three on [0, 1]")
print("(at least one subject hits 1.0 per column); the demand score is the")
print("mean of the three ratios:")
normalized = ls.normalize_demand(snapshot)
print(f"{'subject':<9}" + "".join(f"{f:>22}" for f in SUB_FEATURES) + f"{'score':>9}")
for subject, ratios in normalized.items():
    print(
        f"{subject:<9}"
        + "".join(f"{ratios[f]:>22.4f}" for f in SUB_FEATURES)
        + f"{ratios['score']:>9.4f}"
    )

print("\nScale invariance: multiplying a whole column by any c > 0 changes")
print("nothing (ratios cancel). Doubling every repository count:")
doubled = snapshot
for entry in snapshot.entries:
    doubled = doubled.with_value(entry.subject, "active-repositories", entry.active_repositories * 2)
renormalized = ls.normalize_demand(doubled)
for subject in normalized:
    assert abs(renormalized[subject]["score"] - normalized[subject]["score"]) < 1e-12
print("  scores identical, as expected")
