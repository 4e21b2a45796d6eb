"""Auditing published score tables against recomputation.

The engine has exactly one computation path: recompute from rating cells.
The published per-parameter tables bundled with the dataset are comparison
targets only, and every figure they print that recomputation does not
reproduce (|delta| > 0.005) becomes a discrepancy entry.

Run: python demos/05_discrepancy_audit.py
"""

import langscore as ls

dataset = ls.load_bundled_dataset()
published = ls.load_bundled_published()

report = ls.discrepancy_report(dataset, published)
print(f"{len(report.entries)} published figures differ from recomputation "
      f"(threshold {report.threshold}):\n")
print(f"{'location':<52} {'published':>9} {'recomputed':>10} {'delta':>8}")
for entry in report.entries:
    print(f"{entry.location:<52} {entry.published:>9.2f} {entry.recomputed:>10.4f} {entry.delta:>+8.4f}")

print("\nPatterns worth noticing:")
print("- every abstract-encapsulation cell sits exactly +0.07 above the")
print("  mean of its own rating cells (a uniform offset in the source);")
print("- the naming-encapsulation column is irreproducible under any single")
print("  mapping (deltas are not even uniform);")
print("- csharp's demand score prints as 0.46 but recomputes to 0.4696 (the")
print("  source truncated its display);")
print("- the reweighted bounded column divides by the full-profile weight")
print("  sum (11) although only environmental parameters are in scope (6).")

print("\nScoring the published per-parameter grid itself (every parameter as")
print("a direct override) reproduces the published totals:")
recon = ls.reconstruction_dataset(dataset, published)
for card in ls.rank(recon, recon.profile()):
    row = published.overall_row(card.subject)
    print(f"  {card.subject:<8} reconstructed ls {card.ls:.2f}  vs published {row.ls:.2f}")
print("(java's published 6.59 is 0.06 above even its own per-parameter row;")
print(" the remaining gap has no identifiable source cell.)")
