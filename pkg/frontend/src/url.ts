import type { ScalarParam } from "./types.js";
import { PARAM_BY_KEY } from "./params.js";

/** Shareable view state carried in the URL hash. */
export interface SharedState {
  preset: string | null;
  overrides: Partial<Record<ScalarParam, number>>;
}

export function encodeShared(state: SharedState): string {
  const search = new URLSearchParams();
  if (state.preset) search.set("preset", state.preset);
  for (const [key, value] of Object.entries(state.overrides)) {
    search.set(`o.${key}`, String(value));
  }
  return search.toString();
}

export function decodeShared(hash: string): SharedState {
  const search = new URLSearchParams(hash.replace(/^#/, ""));
  const overrides: Partial<Record<ScalarParam, number>> = {};
  for (const [key, raw] of search.entries()) {
    if (!key.startsWith("o.")) continue;
    const param = key.slice(2) as ScalarParam;
    if (!PARAM_BY_KEY.has(param)) continue;
    const value = Number(raw);
    if (Number.isFinite(value)) overrides[param] = value;
  }
  return { preset: search.get("preset"), overrides };
}
