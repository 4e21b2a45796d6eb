/**
 * Ranking view: one horizontal bar per subject, best first, exactly as the
 * service ordered them. Bar length is the bounded score; each bar is
 * segmented by per-parameter weighted contribution. The percent label is
 * the bounded score formatted as a percentage.
 */

import { fmtPercent, fmtScore } from "../format";
import type { ScoreCardDoc, ScoreResponse, SubjectDoc } from "../types";
import { h, type VNode } from "../vdom";

// Stable categorical palette, keyed by parameter position.
const SEGMENT_COLORS = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
];

export function segmentColor(index: number): string {
  return SEGMENT_COLORS[index % SEGMENT_COLORS.length] ?? "#999999";
}

function bar(card: ScoreCardDoc, subjectName: string, parameterOrder: string[]): VNode {
  // segment widths are layout geometry (shares of the bar); the numbers
  // shown to the user are the response's own values
  const segments: VNode[] = [];
  for (const score of card.parameters) {
    if (card.ls <= 0 || score.weighted_score <= 0) {
      continue;
    }
    const fraction = score.weighted_score / card.ls;
    const index = parameterOrder.indexOf(score.parameter);
    segments.push(
      h("div", {
        class: "bar-segment",
        style: `width:${(fraction * 100).toFixed(3)}%;background:${segmentColor(index)}`,
        title: `${score.parameter}: weighted ${fmtScore(score.weighted_score)} (unit ${fmtScore(
          score.unit_score,
        )})`,
        "data-parameter": score.parameter,
        "data-weighted": String(score.weighted_score),
      }),
    );
  }
  return h("div", { class: "bar-row", "data-subject": card.subject }, [
    h("div", { class: "bar-label" }, [subjectName]),
    h("div", { class: "bar-track" }, [
      h(
        "div",
        {
          class: "bar-fill",
          style: `width:${(card.ls_bounded * 100).toFixed(3)}%`,
          "data-ls": String(card.ls),
          "data-ls-bounded": String(card.ls_bounded),
        },
        segments,
      ),
    ]),
    h("div", { class: "bar-percent" }, [fmtPercent(card.ls_bounded)]),
  ]);
}

export function renderRanking(
  response: ScoreResponse,
  subjects: SubjectDoc[],
  parameterOrder: string[],
  stale: boolean,
): VNode {
  const names = new Map(subjects.map((s) => [s.id, s.name]));
  const rows = response.scorecards.map((card) =>
    bar(card, names.get(card.subject) ?? card.subject, parameterOrder),
  );
  return h("div", { class: `ranking${stale ? " stale" : ""}`, "data-stale": String(stale) }, [
    h("h2", {}, ["Ranking"]),
    h(
      "div",
      { class: "ranking-meta" },
      [`profile ${response.profile}, scope ${response.category}`],
    ),
    ...rows,
  ]);
}

export function renderLegend(parameterOrder: string[], names: Map<string, string>): VNode {
  return h(
    "div",
    { class: "legend" },
    parameterOrder.map((id, index) =>
      h("span", { class: "legend-item" }, [
        h("span", {
          class: "legend-swatch",
          style: `background:${segmentColor(index)}`,
        }),
        names.get(id) ?? id,
      ]),
    ),
  );
}
