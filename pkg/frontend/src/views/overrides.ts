/**
 * Rating-override grid: one table per qualitative parameter (subjects x
 * sub-parameters, a level select in each cell) and a unit-score input per
 * direct-override parameter. Overridden cells are marked; service-side
 * validation failures (422) surface as inline messages on the cell that
 * caused them.
 */

import {
  effectiveLevel,
  overrideFor,
  type Interaction,
  type UiSessionState,
} from "../state";
import { LEVEL_TOKENS, type DatasetDoc, type LevelToken, type ParameterDoc } from "../types";
import { h, type VNode } from "../vdom";

export type Dispatch = (event: Interaction) => void;

export function cellKey(subject: string, parameter: string, subParameter?: string): string {
  return subParameter ? `${subject}:${parameter}:${subParameter}` : `${subject}:${parameter}`;
}

function levelSelect(
  dataset: DatasetDoc,
  state: UiSessionState,
  subject: string,
  parameter: ParameterDoc,
  subParameter: string,
  dispatch: Dispatch,
): VNode {
  const current = effectiveLevel(dataset, state, subject, parameter.id, subParameter);
  const overridden = overrideFor(state, subject, parameter.id, subParameter) !== undefined;
  const options = LEVEL_TOKENS.map((token) =>
    h(
      "option",
      token === current ? { value: token, selected: "selected" } : { value: token },
      [token],
    ),
  );
  return h(
    "select",
    {
      class: overridden ? "cell-select overridden" : "cell-select",
      "data-cell": cellKey(subject, parameter.id, subParameter),
    },
    options,
    {
      change: (event) => {
        const value = (event.target as HTMLSelectElement).value as LevelToken;
        dispatch({
          kind: "override",
          override: {
            subject,
            parameter: parameter.id,
            sub_parameter: subParameter,
            level: value,
          },
        });
      },
    },
  );
}

function qualitativeTable(
  dataset: DatasetDoc,
  state: UiSessionState,
  parameter: ParameterDoc,
  dispatch: Dispatch,
  cellErrors: Map<string, string>,
): VNode {
  const header = h("tr", {}, [
    h("th", {}, [""]),
    ...parameter.sub_parameters.map((sub) => h("th", { title: sub.name }, [sub.name])),
  ]);
  const rows = dataset.subjects.map((subject) =>
    h("tr", {}, [
      h("th", {}, [subject.name]),
      ...parameter.sub_parameters.map((sub) => {
        const key = cellKey(subject.id, parameter.id, sub.id);
        const error = cellErrors.get(key);
        const children: VNode[] = [levelSelect(dataset, state, subject.id, parameter, sub.id, dispatch)];
        if (error) {
          children.push(h("div", { class: "cell-error" }, [error]));
        }
        return h("td", error ? { class: "has-error" } : {}, children);
      }),
    ]),
  );
  return h("table", { class: "override-grid" }, [header, ...rows]);
}

function directOverrideRow(
  dataset: DatasetDoc,
  state: UiSessionState,
  parameter: ParameterDoc,
  dispatch: Dispatch,
  cellErrors: Map<string, string>,
): VNode {
  const cells = dataset.subjects.map((subject) => {
    const override = overrideFor(state, subject.id, parameter.id);
    const stored = dataset.ratings.find(
      (r) => r.subject === subject.id && r.parameter === parameter.id && r.sub_parameter === undefined,
    );
    const value = override?.score ?? (typeof stored?.value === "number" ? stored.value : 0);
    const key = cellKey(subject.id, parameter.id);
    const error = cellErrors.get(key);
    const children: VNode[] = [
      h(
        "input",
        {
          type: "number",
          min: "0",
          max: "1",
          step: "0.01",
          value: String(value),
          class: override ? "score-input overridden" : "score-input",
          "data-cell": key,
        },
        [],
        {
          change: (event) => {
            const next = Number((event.target as HTMLInputElement).value);
            dispatch({
              kind: "override",
              override: { subject: subject.id, parameter: parameter.id, score: next },
            });
          },
        },
      ),
    ];
    if (error) {
      children.push(h("div", { class: "cell-error" }, [error]));
    }
    return h("td", error ? { class: "has-error" } : {}, children);
  });
  return h("table", { class: "override-grid" }, [
    h("tr", {}, [h("th", {}, [""]), ...dataset.subjects.map((s) => h("th", {}, [s.name]))]),
    h("tr", {}, [h("th", {}, ["unit score"]), ...cells]),
  ]);
}

export function renderOverridePanel(
  dataset: DatasetDoc,
  state: UiSessionState,
  dispatch: Dispatch,
  cellErrors: Map<string, string>,
): VNode {
  const sections: VNode[] = [];
  for (const parameter of dataset.framework.parameters) {
    if (parameter.score_mode === "direct-override") {
      sections.push(
        h("details", {}, [
          h("summary", {}, [`${parameter.name} (stored unit scores)`]),
          directOverrideRow(dataset, state, parameter, dispatch, cellErrors),
        ]),
      );
    } else if (parameter.sub_parameters.every((s) => s.kind === "qualitative")) {
      sections.push(
        h("details", {}, [
          h("summary", {}, [parameter.name]),
          qualitativeTable(dataset, state, parameter, dispatch, cellErrors),
        ]),
      );
    }
    // quantitative-raw parameters are driven by the demand snapshot and are
    // not editable from the grid
  }
  const active = state.overrides.length;
  return h("div", { class: "overrides" }, [
    h("h2", {}, ["Rating overrides"]),
    h("div", { class: "override-count" }, [
      active === 0 ? "no overrides" : `${active} cell override${active === 1 ? "" : "s"} active`,
    ]),
    ...sections,
  ]);
}
