/**
 * Display formatting of service-provided numbers.
 *
 * Every number the UI shows passes through one of these helpers with a
 * value taken verbatim from a response payload; nothing is recomputed
 * client-side. Tests rely on that: they rebuild the set of admissible
 * strings from the raw response and check the rendered text against it.
 */

/** Bounded score as integer percent: 0.77 -> "77%". */
export function fmtPercent(boundedScore: number): string {
  return `${Math.round(boundedScore * 100)}%`;
}

/** Scores and weights at fixed precision. */
export function fmtScore(value: number, decimals = 2): string {
  return value.toFixed(decimals);
}

/** Crossover weights a little finer. */
export function fmtWeight(value: number): string {
  return value.toFixed(4);
}
