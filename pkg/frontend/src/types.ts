/** Wire types of the evaluation service. */

export interface DetStep {
  t: number;
  delta: number;
}

export interface ModelParams {
  p0: number;
  d0: number;
  g_p: number;
  p_max: number;
  kappa: number;
  theta: number;
  pi0: number;
  lambda0: number;
  eta: number;
  beta: number;
  tau: number;
  det_steps: DetStep[];
  horizon: number;
}

export interface EvaluateRequest extends ModelParams {
  resolution: number;
}

export interface SeriesPayload {
  t: number[];
  p: number[];
  d: number[];
  rai: number[];
  pr_detect: number[];
  hazard: number[];
  cumulative_r: number[];
}

export interface Summary {
  r: number;
  p: number;
  crossing: number | null;
}

export interface EvaluateResponse {
  series: SeriesPayload;
  summary: Summary;
}

export interface Preset {
  name: string;
  display_name: string;
  params: ModelParams;
}

/** Scalar parameters adjustable through sliders. */
export type ScalarParam =
  | "p0"
  | "d0"
  | "g_p"
  | "p_max"
  | "kappa"
  | "theta"
  | "pi0"
  | "lambda0"
  | "eta"
  | "beta"
  | "tau"
  | "horizon";
