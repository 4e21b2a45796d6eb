/**
 * App wiring: load the dataset and baseline ranking, build the controls,
 * and funnel every interaction through the debounced scheduler. All scoring
 * happens server-side; this file only moves state and pixels.
 */

import { ApiClient, ServiceError, ServiceUnreachable, type ApiResult } from "./api";
import { DEBOUNCE_MS, RequestScheduler } from "./scheduler";
import {
  applyInteraction,
  encodeRequest,
  initialState,
  SLIDER_MAX,
  SLIDER_MIN,
  SLIDER_STEP,
  type Interaction,
  type UiSessionState,
} from "./state";
import type { DatasetDoc, ScoreResponse, SweepBody, SweepResponse } from "./types";
import { replaceChildren } from "./vdom";
import { renderOverridePanel, cellKey } from "./views/overrides";
import { renderLegend, renderRanking } from "./views/ranking";
import { renderSweep } from "./views/sweep";

const api = new ApiClient("");

interface AppElements {
  banner: HTMLElement;
  controls: HTMLElement;
  ranking: HTMLElement;
  legend: HTMLElement;
  overrides: HTMLElement;
  sweep: HTMLElement;
}

function el(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing #${id}`);
  }
  return found;
}

class App {
  private state: UiSessionState;
  private lastResponse: ScoreResponse;
  private sweepResponse: SweepResponse | null = null;
  private stale = false;
  private cellErrors = new Map<string, string>();
  private readonly whatIfScheduler: RequestScheduler<ReturnType<typeof encodeRequest>, ApiResult<ScoreResponse>>;
  private readonly sweepScheduler: RequestScheduler<SweepBody, ApiResult<SweepResponse>>;
  private readonly sliders = new Map<string, { input: HTMLInputElement; label: HTMLElement }>();

  constructor(
    private readonly dataset: DatasetDoc,
    baseline: ScoreResponse,
    private readonly ui: AppElements,
  ) {
    this.state = initialState(dataset);
    this.lastResponse = baseline;
    this.whatIfScheduler = new RequestScheduler(
      (body) => api.postWhatIf(body),
      {
        onResult: (result) => {
          this.cellErrors.clear();
          this.lastResponse = result.data;
          this.stale = false;
          this.renderResults();
          this.clearBanner();
        },
        onError: (error) => this.handleError(error),
        onBusy: (busy) => {
          this.stale = busy;
          this.renderResults();
        },
      },
      DEBOUNCE_MS,
    );
    this.sweepScheduler = new RequestScheduler(
      (body) => api.postSweep(body),
      {
        onResult: (result) => {
          this.sweepResponse = result.data;
          this.renderResults();
        },
        onError: (error) => this.handleError(error),
      },
      DEBOUNCE_MS,
    );
    this.buildControls();
    this.renderResults();
  }

  private dispatch = (event: Interaction): void => {
    this.state = applyInteraction(this.state, event);
    if (event.kind === "weight") {
      this.syncSlider(event.parameter);
    }
    if (event.kind === "reset") {
      for (const parameter of Object.keys(this.state.weights)) {
        this.syncSlider(parameter);
      }
      const category = document.getElementById("category-select") as HTMLSelectElement | null;
      if (category) {
        category.value = this.state.category;
      }
    }
    if (event.kind === "sweep-select") {
      this.sweepResponse = null;
      this.requestSweep();
      this.renderResults();
      return;
    }
    // scoring-relevant change: debounce into one what-if request
    this.whatIfScheduler.request(encodeRequest(this.state));
    this.requestSweep();
    this.renderOverrides();
  };

  private requestSweep(): void {
    if (!this.state.sweepParameter) {
      return;
    }
    this.sweepScheduler.request({
      parameter: this.state.sweepParameter,
      from: SLIDER_MIN + SLIDER_STEP,
      to: SLIDER_MAX,
      steps: 50,
      profile: this.state.profile,
      category: this.state.category,
    });
  }

  private handleError(error: unknown): void {
    if (error instanceof ServiceUnreachable) {
      this.showBanner("service unreachable; is `langscore serve` running?", "error");
    } else if (error instanceof ServiceError && error.status === 422) {
      // surface validation failures inline at the offending cell when the
      // message names one; otherwise banner it
      const message = error.detail.error;
      const target = this.state.overrides[this.state.overrides.length - 1];
      if (target) {
        this.cellErrors.set(
          cellKey(target.subject, target.parameter, target.sub_parameter),
          message,
        );
        this.renderOverrides();
      } else {
        this.showBanner(message, "error");
      }
    } else if (error instanceof ServiceError) {
      this.showBanner(`${error.status}: ${error.detail.error}`, "error");
    } else {
      this.showBanner(String(error), "error");
    }
  }

  private showBanner(message: string, kind: "error" | "info"): void {
    this.ui.banner.textContent = message;
    this.ui.banner.className = `banner ${kind}`;
  }

  private clearBanner(): void {
    this.ui.banner.textContent = "";
    this.ui.banner.className = "banner";
  }

  private syncSlider(parameter: string): void {
    const slider = this.sliders.get(parameter);
    const weight = this.state.weights[parameter];
    if (slider && weight !== undefined) {
      slider.input.value = String(weight);
      slider.label.textContent = weight.toFixed(1);
    }
  }

  private buildControls(): void {
    const controls = this.ui.controls;
    controls.replaceChildren();

    const category = document.createElement("select");
    category.id = "category-select";
    for (const [value, label] of [
      ["all", "all parameters"],
      ["technical-only", "technical only"],
      ["environmental-only", "environmental only"],
    ] as const) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = label;
      category.appendChild(option);
    }
    category.addEventListener("change", () =>
      this.dispatch({ kind: "category", category: category.value as UiSessionState["category"] }),
    );
    const categoryRow = document.createElement("div");
    categoryRow.className = "control-row";
    const categoryLabel = document.createElement("label");
    categoryLabel.textContent = "scope";
    categoryRow.append(categoryLabel, category);
    controls.appendChild(categoryRow);

    const sweepSelect = document.createElement("select");
    sweepSelect.id = "sweep-select";
    const none = document.createElement("option");
    none.value = "";
    none.textContent = "(no sweep)";
    sweepSelect.appendChild(none);
    for (const parameter of this.dataset.framework.parameters) {
      const option = document.createElement("option");
      option.value = parameter.id;
      option.textContent = parameter.name;
      sweepSelect.appendChild(option);
    }
    sweepSelect.addEventListener("change", () =>
      this.dispatch({ kind: "sweep-select", parameter: sweepSelect.value || null }),
    );
    const sweepRow = document.createElement("div");
    sweepRow.className = "control-row";
    const sweepLabel = document.createElement("label");
    sweepLabel.textContent = "sweep";
    sweepRow.append(sweepLabel, sweepSelect);
    controls.appendChild(sweepRow);

    for (const parameter of this.dataset.framework.parameters) {
      const row = document.createElement("div");
      row.className = "control-row slider-row";
      const label = document.createElement("label");
      label.textContent = parameter.name;
      label.title = `${parameter.id} (${parameter.category})`;
      const input = document.createElement("input");
      input.type = "range";
      input.min = String(SLIDER_MIN + SLIDER_STEP);
      input.max = String(SLIDER_MAX);
      input.step = String(SLIDER_STEP);
      input.value = String(this.state.weights[parameter.id] ?? 1);
      input.setAttribute("data-parameter", parameter.id);
      const value = document.createElement("span");
      value.className = "slider-value";
      value.textContent = (this.state.weights[parameter.id] ?? 1).toFixed(1);
      input.addEventListener("input", () =>
        this.dispatch({ kind: "weight", parameter: parameter.id, value: Number(input.value) }),
      );
      row.append(label, input, value);
      controls.appendChild(row);
      this.sliders.set(parameter.id, { input, label: value });
    }

    const reset = document.createElement("button");
    reset.id = "reset-button";
    reset.textContent = "reset to defaults";
    reset.addEventListener("click", () => this.dispatch({ kind: "reset", dataset: this.dataset }));
    controls.appendChild(reset);

    this.renderOverrides();
  }

  private renderOverrides(): void {
    replaceChildren(
      this.ui.overrides,
      renderOverridePanel(this.dataset, this.state, this.dispatch, this.cellErrors),
    );
  }

  private renderResults(): void {
    const parameterOrder = this.dataset.framework.parameters.map((p) => p.id);
    const names = new Map(this.dataset.framework.parameters.map((p) => [p.id, p.name]));
    replaceChildren(
      this.ui.ranking,
      renderRanking(this.lastResponse, this.dataset.subjects, parameterOrder, this.stale),
    );
    replaceChildren(this.ui.legend, renderLegend(parameterOrder, names));
    replaceChildren(this.ui.sweep, renderSweep(this.sweepResponse, this.state.sweepParameter));
  }
}

async function boot(): Promise<void> {
  const banner = el("banner");
  try {
    const [dataset, baseline] = await Promise.all([api.getDataset(), api.getScore()]);
    new App(dataset.data, baseline.data, {
      banner,
      controls: el("controls"),
      ranking: el("ranking"),
      legend: el("legend"),
      overrides: el("overrides"),
      sweep: el("sweep"),
    });
  } catch (error) {
    banner.textContent =
      error instanceof ServiceUnreachable
        ? "service unreachable; start it with: langscore serve --ui frontend/dist"
        : String(error);
    banner.className = "banner error";
  }
}

void boot();
