/**
 * UI session state: slider positions, rating overrides, category filter,
 * selected sweep parameter.
 *
 * The state mirrors a valid what-if request at all times; encode/decode are
 * exact inverses (sliders live on a 0..5 grid with 0.1 steps, so values
 * survive the round trip unchanged). Reset restores the default profile.
 */

import type {
  Category,
  DatasetDoc,
  LevelToken,
  OverrideBody,
  WhatIfBody,
} from "./types";

export const SLIDER_MIN = 0;
export const SLIDER_MAX = 5;
export const SLIDER_STEP = 0.1;

export interface UiSessionState {
  profile: string;
  /** Slider position per parameter id. */
  weights: Record<string, number>;
  /** Active rating-cell overrides, in application order. */
  overrides: OverrideBody[];
  category: Category;
  sweepParameter: string | null;
}

/** Quantize a slider position onto the 0.1 grid inside [0, 5].

    Weights must stay positive to form a valid request, so the low end
    clamps to one step above zero. */
export function clampSlider(value: number): number {
  const clamped = Math.min(SLIDER_MAX, Math.max(SLIDER_MIN + SLIDER_STEP, value));
  return Math.round(clamped * 10) / 10;
}

export function initialState(dataset: DatasetDoc, profile = "default"): UiSessionState {
  const stored = dataset.weight_profiles.find((p) => p.name === profile);
  if (!stored) {
    throw new Error(`dataset has no weight profile named ${profile}`);
  }
  const weights: Record<string, number> = {};
  for (const parameter of dataset.framework.parameters) {
    weights[parameter.id] = clampSlider(stored.weights[parameter.id] ?? 1);
  }
  return {
    profile,
    weights,
    overrides: [],
    category: "all",
    sweepParameter: null,
  };
}

/** Serialize the session as a what-if request body. */
export function encodeRequest(state: UiSessionState): WhatIfBody {
  return {
    profile: state.profile,
    weights: { ...state.weights },
    overrides: state.overrides.map((o) => ({ ...o })),
    category: state.category,
  };
}

/** Rebuild session state from a request body (sweep selection is view
    state and not part of the wire format). */
export function decodeRequest(body: WhatIfBody, sweepParameter: string | null = null): UiSessionState {
  return {
    profile: body.profile ?? "default",
    weights: { ...(body.weights ?? {}) },
    overrides: (body.overrides ?? []).map((o) => ({ ...o })),
    category: body.category ?? "all",
    sweepParameter,
  };
}

// ---------------------------------------------------------------------------
// Interactions

export type Interaction =
  | { kind: "weight"; parameter: string; value: number }
  | { kind: "override"; override: OverrideBody }
  | { kind: "clear-override"; subject: string; parameter: string; subParameter?: string }
  | { kind: "category"; category: Category }
  | { kind: "sweep-select"; parameter: string | null }
  | { kind: "reset"; dataset: DatasetDoc };

function sameCell(a: OverrideBody, subject: string, parameter: string, subParameter?: string): boolean {
  return (
    a.subject === subject &&
    a.parameter === parameter &&
    (a.sub_parameter ?? undefined) === (subParameter ?? undefined)
  );
}

/** Pure reducer: every control event yields a new session state. */
export function applyInteraction(state: UiSessionState, event: Interaction): UiSessionState {
  switch (event.kind) {
    case "weight":
      return {
        ...state,
        weights: { ...state.weights, [event.parameter]: clampSlider(event.value) },
      };
    case "override": {
      const kept = state.overrides.filter(
        (o) => !sameCell(o, event.override.subject, event.override.parameter, event.override.sub_parameter),
      );
      return { ...state, overrides: [...kept, { ...event.override }] };
    }
    case "clear-override":
      return {
        ...state,
        overrides: state.overrides.filter(
          (o) => !sameCell(o, event.subject, event.parameter, event.subParameter),
        ),
      };
    case "category":
      return { ...state, category: event.category };
    case "sweep-select":
      return { ...state, sweepParameter: event.parameter };
    case "reset":
      return initialState(event.dataset, state.profile);
  }
}

export function overrideFor(
  state: UiSessionState,
  subject: string,
  parameter: string,
  subParameter?: string,
): OverrideBody | undefined {
  return state.overrides.find((o) => sameCell(o, subject, parameter, subParameter));
}

/** The cell level the grid should display: override if present, else the
    dataset's stored value. */
export function effectiveLevel(
  dataset: DatasetDoc,
  state: UiSessionState,
  subject: string,
  parameter: string,
  subParameter: string,
): LevelToken | null {
  const override = overrideFor(state, subject, parameter, subParameter);
  if (override?.level) {
    return override.level;
  }
  const cell = dataset.ratings.find(
    (r) => r.subject === subject && r.parameter === parameter && r.sub_parameter === subParameter,
  );
  return cell && typeof cell.value === "string" ? cell.value : null;
}
