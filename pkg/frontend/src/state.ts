import type {
  EvaluateRequest,
  EvaluateResponse,
  ModelParams,
  Preset,
  ScalarParam,
} from "./types.js";

export type ChartKind = "race" | "detection" | "hazard" | "risk";

export const CHART_KINDS: ChartKind[] = ["race", "detection", "hazard", "risk"];

/**
 * The whole view state.  The displayed summary always belongs to
 * `lastResponse`, which is only replaced by the most recent completed
 * evaluation (the scheduler enforces the token ordering); `stale` flags the
 * charts when the latest request failed and older data is still shown.
 */
export interface ViewState {
  presets: Preset[];
  activePreset: string | null;
  overrides: Partial<Record<ScalarParam, number>>;
  chart: ChartKind;
  resolution: number;
  lastResponse: EvaluateResponse | null;
  /** R(10) of the active preset without overrides (the badge reference). */
  presetBaselineR: number | null;
  status: "idle" | "loading" | "ready" | "error";
  errorMessage: string | null;
  stale: boolean;
}

export function initialState(): ViewState {
  return {
    presets: [],
    activePreset: null,
    overrides: {},
    chart: "race",
    resolution: 100,
    lastResponse: null,
    presetBaselineR: null,
    status: "idle",
    errorMessage: null,
    stale: false,
  };
}

export function withPresets(state: ViewState, presets: Preset[]): ViewState {
  return { ...state, presets };
}

export function findPreset(state: ViewState, name: string): Preset | undefined {
  return state.presets.find((p) => p.name === name);
}

/** Selecting a preset clears overrides and the baseline badge reference. */
export function applyPreset(state: ViewState, name: string): ViewState {
  if (!findPreset(state, name)) return state;
  return {
    ...state,
    activePreset: name,
    overrides: {},
    presetBaselineR: null,
    status: "loading",
    errorMessage: null,
  };
}

export function setOverride(state: ViewState, key: ScalarParam, value: number): ViewState {
  return {
    ...state,
    overrides: { ...state.overrides, [key]: value },
    status: "loading",
  };
}

export function setChart(state: ViewState, chart: ChartKind): ViewState {
  return { ...state, chart };
}

export function hasOverrides(state: ViewState): boolean {
  return Object.keys(state.overrides).length > 0;
}

/** Active preset parameters with the slider overrides applied. */
export function currentParams(state: ViewState): ModelParams | null {
  const preset = state.activePreset ? findPreset(state, state.activePreset) : undefined;
  if (!preset) return null;
  const params: ModelParams = { ...preset.params, det_steps: preset.params.det_steps };
  for (const [key, value] of Object.entries(state.overrides)) {
    (params as unknown as Record<string, number>)[key] = value as number;
  }
  return params;
}

export function buildRequest(state: ViewState): EvaluateRequest | null {
  const params = currentParams(state);
  if (!params) return null;
  return { ...params, resolution: state.resolution };
}

/** A completed evaluation for the current view. */
export function applyResult(state: ViewState, response: EvaluateResponse): ViewState {
  const next: ViewState = {
    ...state,
    lastResponse: response,
    status: "ready",
    errorMessage: null,
    stale: false,
  };
  if (!hasOverrides(state)) {
    next.presetBaselineR = response.summary.r;
  }
  return next;
}

/** A failed evaluation: keep previous charts, flag them stale. */
export function applyError(state: ViewState, message: string): ViewState {
  return {
    ...state,
    status: "error",
    errorMessage: message,
    stale: state.lastResponse !== null,
  };
}

/** Percent delta of the displayed R against the active preset's own R. */
export function badgeDeltaPct(state: ViewState): number | null {
  if (
    state.lastResponse === null ||
    state.presetBaselineR === null ||
    state.presetBaselineR === 0
  ) {
    return null;
  }
  return (100 * (state.lastResponse.summary.r - state.presetBaselineR)) / state.presetBaselineR;
}
