"""From qualitative cells to a ranking, step by step.

Run: python demos/01_scoring_walkthrough.py
"""

import langscore as ls

dataset = ls.load_bundled_dataset()
profile = dataset.profile()

print("The rating scale maps four ordered levels onto unit scores:")
for level, score in ls.list_levels(dataset.framework.scale):
    print(f"  {level.token:<9} -> {score}")

print("\nA parameter's unit score is the mean of its mapped cells.")
print("Take 'Relationships Among Objects' for Java:")
parameter = dataset.framework.parameter("object-relationships")
for sub in parameter.sub_parameters:
    cell = dataset.cell("java", parameter.id, sub.id)
    mapped = ls.map_level(cell.value, dataset.framework.scale)
    print(f"  {sub.name:<40} {cell.value.token:<9} -> {mapped}")
score = ls.parameter_score(dataset, "java", parameter.id)
print(f"  mean of the six mapped cells = {score.unit_score:.4f}")

print("\nThe demand parameter is quantitative: raw statistics divided by the")
print("per-sub-feature maximum, then averaged (see demo 04). The IDE")
print("parameter has no per-facet cells; its unit score is stored directly")
print("with provenance 'inferred':")
ide = ls.parameter_score(dataset, "java", "foolproof-ide")
print(f"  foolproof-ide(java) = {ide.unit_score} (provenance {ide.provenance})")

print("\nA score card sums weight * unit score over all nine parameters.")
card = ls.score_subject(dataset, "java", profile)
for p in card.parameters:
    print(f"  {p.parameter:<26} unit {p.unit_score:.4f}  weight {card.weights[p.parameter]:g}")
print(f"  ls          = {card.ls:.4f}   (unbounded: grows with the framework)")
print(f"  ls_bounded  = {card.ls_bounded:.4f}   (= ls / {sum(card.weights.values()):g}, reads as % conformance)")
print(f"  technical   = {card.ls_tech:.4f}, environmental = {card.ls_env:.4f} (they partition ls)")

print("\nRanking all four subjects (bounded score, best first):")
for c in ls.rank(dataset, profile):
    bar = "#" * round(c.ls_bounded * 40)
    print(f"  {c.subject:<8} {c.ls_bounded:0.2%}  {bar}")
