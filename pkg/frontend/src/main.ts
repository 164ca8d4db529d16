import { ApiClient, defaultBaseUrl } from "./api.js";
import { PARAM_METAS } from "./params.js";
import { EvaluationScheduler } from "./scheduler.js";
import {
  CHART_KINDS,
  type ChartKind,
  type ViewState,
  applyError,
  applyPreset,
  applyResult,
  badgeDeltaPct,
  buildRequest,
  currentParams,
  initialState,
  setChart,
  setOverride,
  withPresets,
} from "./state.js";
import type { ScalarParam } from "./types.js";
import { decodeShared, encodeShared } from "./url.js";
import { badgeText, chartSvg, summaryCards } from "./views.js";

const CHART_TITLES: Record<ChartKind, string> = {
  race: "capability race over time",
  detection: "detection probability vs advantage",
  hazard: "attempt hazard vs advantage",
  risk: "cumulative risk over time",
};

const api = new ApiClient(defaultBaseUrl(window.location));
let state: ViewState = initialState();

const scheduler = new EvaluationScheduler(
  (request, signal) => api.evaluate(request, signal),
  {
    onResult: (response) => {
      state = applyResult(state, response);
      render();
    },
    onError: (message) => {
      state = applyError(state, message);
      render();
    },
  },
  150,
);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function evaluateNow(): void {
  const request = buildRequest(state);
  if (request) scheduler.dispatch(request);
}

function evaluateDebounced(): void {
  const request = buildRequest(state);
  if (request) scheduler.schedule(request);
}

function syncUrl(): void {
  const hash = encodeShared({ preset: state.activePreset, overrides: state.overrides });
  history.replaceState(null, "", hash ? `#${hash}` : "#");
}

function selectPreset(name: string): void {
  state = applyPreset(state, name);
  syncUrl();
  render();
  evaluateNow();
}

function adjustParameter(key: ScalarParam, value: number): void {
  state = setOverride(state, key, value);
  syncUrl();
  render();
  evaluateDebounced();
}

function renderPresetButtons(): void {
  const host = el<HTMLDivElement>("presets");
  host.replaceChildren();
  for (const preset of state.presets) {
    const button = document.createElement("button");
    button.textContent = preset.display_name;
    button.title = preset.name;
    button.className = preset.name === state.activePreset ? "preset active" : "preset";
    button.addEventListener("click", () => selectPreset(preset.name));
    host.appendChild(button);
  }
}

function renderSliders(): void {
  const host = el<HTMLDivElement>("sliders");
  const params = currentParams(state);
  host.replaceChildren();
  if (!params) return;
  for (const meta of PARAM_METAS) {
    const row = document.createElement("label");
    row.className = "slider-row";
    const value = (params as unknown as Record<string, number>)[meta.key];

    const name = document.createElement("span");
    name.className = "slider-name";
    name.textContent = meta.label;

    const input = document.createElement("input");
    input.type = "range";
    input.min = String(meta.min);
    input.max = String(meta.max);
    input.step = String(meta.step);
    input.value = String(value);
    input.addEventListener("input", () => adjustParameter(meta.key, Number(input.value)));

    const readout = document.createElement("span");
    readout.className = "slider-value";
    readout.textContent = value.toFixed(meta.digits);

    row.append(name, input, readout);
    host.appendChild(row);
  }
}

function renderChartTabs(): void {
  const host = el<HTMLDivElement>("chart-tabs");
  host.replaceChildren();
  for (const kind of CHART_KINDS) {
    const button = document.createElement("button");
    button.textContent = CHART_TITLES[kind];
    button.className = kind === state.chart ? "tab active" : "tab";
    button.addEventListener("click", () => {
      state = setChart(state, kind);
      render();
    });
    host.appendChild(button);
  }
}

function render(): void {
  renderPresetButtons();
  renderSliders();
  renderChartTabs();

  const banner = el<HTMLDivElement>("banner");
  if (state.status === "error") {
    banner.hidden = false;
    banner.textContent =
      `service error: ${state.errorMessage ?? "unreachable"}` +
      (state.stale ? " — showing stale data" : "");
  } else {
    banner.hidden = true;
  }

  const chartHost = el<HTMLDivElement>("chart");
  const cards = el<HTMLDivElement>("cards");
  if (state.lastResponse) {
    chartHost.innerHTML = chartSvg(state.chart, state.lastResponse);
    chartHost.classList.toggle("stale", state.stale);
    const summary = summaryCards(state.lastResponse);
    el<HTMLSpanElement>("card-r").textContent = summary.r;
    el<HTMLSpanElement>("card-p").textContent = summary.p;
    el<HTMLSpanElement>("card-crossing").textContent = summary.crossing;
    el<HTMLSpanElement>("badge").textContent = badgeText(badgeDeltaPct(state));
    cards.hidden = false;
  } else {
    cards.hidden = true;
    chartHost.textContent = state.status === "loading" ? "evaluating…" : "pick a preset";
  }

  el<HTMLSpanElement>("status").textContent = state.status;
}

async function boot(): Promise<void> {
  try {
    const presets = await api.presets();
    state = withPresets(state, presets);
  } catch (error) {
    state = applyError(state, error instanceof Error ? error.message : String(error));
    render();
    return;
  }
  const shared = decodeShared(window.location.hash);
  const initial =
    shared.preset && state.presets.some((p) => p.name === shared.preset)
      ? shared.preset
      : state.presets[0]?.name;
  if (initial) {
    state = applyPreset(state, initial);
    state = { ...state, overrides: shared.overrides };
    render();
    evaluateNow();
  }
}

void boot();
