/**
 * Sweep view: for the selected parameter, the rankings at both ends of the
 * weight axis and every crossover in between, with markers positioned along
 * the axis. All numbers shown are the service's.
 */

import { fmtWeight } from "../format";
import type { SweepResponse } from "../types";
import { h, type VNode } from "../vdom";

export function renderSweep(response: SweepResponse | null, parameter: string | null): VNode {
  if (!parameter) {
    return h("div", { class: "sweep" }, [
      h("h2", {}, ["Weight sweep"]),
      h("p", { class: "sweep-hint" }, ["pick a parameter to see where the ranking flips"]),
    ]);
  }
  if (!response) {
    return h("div", { class: "sweep" }, [
      h("h2", {}, ["Weight sweep"]),
      h("p", { class: "sweep-hint" }, [`sweeping ${parameter}…`]),
    ]);
  }
  const first = response.grid[0] ?? 0;
  const last = response.grid[response.grid.length - 1] ?? 1;
  const span = last - first || 1;
  const markers = response.crossovers.map((crossover) => {
    const position = ((crossover.weight - first) / span) * 100;
    return h(
      "div",
      {
        class: "sweep-marker",
        style: `left:${position.toFixed(3)}%`,
        title: `${crossover.subjects[0]} and ${crossover.subjects[1]} swap at ${fmtWeight(crossover.weight)}`,
        "data-weight": String(crossover.weight),
      },
      [],
    );
  });
  const firstRanking = response.rankings[0];
  const lastRanking = response.rankings[response.rankings.length - 1];
  const crossoverLines = response.crossovers.map((crossover) =>
    h("li", {}, [
      `${crossover.subjects[0]} ↔ ${crossover.subjects[1]} at weight ${fmtWeight(crossover.weight)}`,
    ]),
  );
  return h("div", { class: "sweep" }, [
    h("h2", {}, [`Weight sweep: ${response.parameter}`]),
    h("div", { class: "sweep-axis" }, [
      h("span", { class: "sweep-end" }, [fmtWeight(first)]),
      h("div", { class: "sweep-track" }, markers),
      h("span", { class: "sweep-end" }, [fmtWeight(last)]),
    ]),
    h("div", { class: "sweep-rankings" }, [
      h("div", {}, [`at ${fmtWeight(first)}: ${(firstRanking ?? []).join(" > ")}`]),
      h("div", {}, [`at ${fmtWeight(last)}: ${(lastRanking ?? []).join(" > ")}`]),
    ]),
    response.crossovers.length
      ? h("ul", { class: "sweep-crossovers" }, crossoverLines)
      : h("p", { class: "sweep-hint" }, ["no rank crossovers in this range"]),
  ]);
}
