"""Transition costs: pairwise unit costs, totals, transferability ratings.

Run: python demos/03_transition_costs.py
"""

import langscore as ls

dataset = ls.load_bundled_dataset()
matrix = dataset.transition_costs

print("Each directed pair carries three 0/1 unit costs:")
print("(paradigm shift, static->dynamic, strong->weak)\n")
subjects = list(dataset.subject_ids)
header = "        " + "".join(f"{s:>9}" for s in subjects)
print(header)
for source in subjects:
    row = [
        "      -  "
        if source == target
        else "   " + "/".join(str(c) for c in ls.pair_cost(source, target, matrix).components)
        for target in subjects
    ]
    print(f"{source:<8}" + "".join(f"{cell:>9}" for cell in row))

n = matrix.n
print(f"\nTotals map to ratings through thresholds in N={n}:")
print(f"  fully <= {2*n} < mostly <= {2.5*n:g} < partially <= {3*n} < no")
for subject in subjects:
    total = ls.total_cost(subject, matrix)
    rating = ls.subject_rating(subject, matrix)
    print(f"  {subject:<8} total {total:>2}  -> {rating.token}")

print("\nThe matrix is data. A rule-based generator over subject attributes")
print("(paradigm differs / static->dynamic / strong->weak) sketches vectors")
print("for new subjects, but does not reproduce every stored judgment call:")
cpp, python = dataset.subject("cpp"), dataset.subject("python")
derived = ls.derive_cost_vector(cpp, python)
stored = ls.pair_cost("cpp", "python", matrix)
print(f"  cpp->python derived {derived.components} vs stored {stored.components}")
print("  (both are multiparadigm, yet the stored vector charges a paradigm")
print("   unit; the matrix wins; the generator is advisory only)")
