import type { ScalarParam } from "./types.js";

export interface ParamMeta {
  key: ScalarParam;
  label: string;
  min: number;
  max: number;
  /** Slider step: 1% of the range. */
  step: number;
  digits: number;
}

function meta(key: ScalarParam, label: string, min: number, max: number, digits: number): ParamMeta {
  const step = (max - min) / 100;
  return { key, label, min, max, step, digits };
}

/**
 * Slider metadata for every scalar parameter.  Bounds follow the documented
 * robustness ranges where those exist; the rest get sensible display spans.
 */
export const PARAM_METAS: ParamMeta[] = [
  meta("p0", "initial concealment level", 5, 100, 1),
  meta("d0", "initial detection level", 10, 100, 1),
  meta("g_p", "concealment growth rate (1/yr)", 0.05, 1.5, 3),
  meta("p_max", "concealment ceiling", 100, 140, 0),
  meta("kappa", "detection slope", 0.25, 0.6, 3),
  meta("theta", "detection intercept", -20, 20, 1),
  meta("pi0", "detection floor", 0.05, 0.2, 3),
  meta("lambda0", "baseline hazard (1/yr)", 0, 0.2, 3),
  meta("eta", "opportunism boost", 0, 5, 2),
  meta("beta", "opportunism slope", 0.05, 0.15, 3),
  meta("tau", "opportunism threshold", 20, 60, 0),
  meta("horizon", "horizon (years)", 1, 20, 0),
];

export const PARAM_BY_KEY: ReadonlyMap<ScalarParam, ParamMeta> = new Map(
  PARAM_METAS.map((m) => [m.key, m]),
);

export function clampToBounds(key: ScalarParam, value: number): number {
  const m = PARAM_BY_KEY.get(key);
  if (!m) return value;
  return Math.min(m.max, Math.max(m.min, value));
}
