import { lineChartSvg } from "./charts.js";
import { fmt, pct } from "./format.js";
import type { ChartKind } from "./state.js";
import type { EvaluateResponse } from "./types.js";

/**
 * Chart and summary renderers.  Every number shown originates in the
 * service response; the only arithmetic here is formatting and the badge's
 * percent display.
 */

export function chartSvg(kind: ChartKind, response: EvaluateResponse): string {
  const s = response.series;
  switch (kind) {
    case "race":
      return lineChartSvg({
        plots: [
          { label: "concealment P", xs: s.t, ys: s.p, color: "#b2443c" },
          { label: "detection D", xs: s.t, ys: s.d, color: "#2b6cb0" },
          { label: "advantage RAI", xs: s.t, ys: s.rai, color: "#6b7280", dash: "5 3" },
        ],
        markerX: response.summary.crossing,
        markerLabel:
          response.summary.crossing === null
            ? ""
            : `crossing ${fmt(response.summary.crossing, 2)}`,
        referenceY: 0,
        xLabel: "years",
      });
    case "detection":
      return lineChartSvg({
        plots: [{ label: "Pr(detect) vs RAI", xs: s.rai, ys: s.pr_detect, color: "#2b6cb0" }],
        yDomain: [0, 1.05],
        referenceY: 0.5,
        xLabel: "advantage",
      });
    case "hazard":
      return lineChartSvg({
        plots: [{ label: "attempt hazard vs RAI", xs: s.rai, ys: s.hazard, color: "#b2443c" }],
        xLabel: "advantage",
      });
    case "risk":
      return lineChartSvg({
        plots: [{ label: "cumulative risk R(t)", xs: s.t, ys: s.cumulative_r, color: "#1f7a53" }],
        xLabel: "years",
      });
  }
}

export interface SummaryCards {
  r: string;
  p: string;
  crossing: string;
}

/** Two-decimal summary cards straight from the service summary. */
export function summaryCards(response: EvaluateResponse): SummaryCards {
  const { r, p, crossing } = response.summary;
  return {
    r: fmt(r, 2),
    p: fmt(p, 2),
    crossing: crossing === null ? "never" : fmt(crossing, 2),
  };
}

export function badgeText(deltaPct: number | null): string {
  if (deltaPct === null) return "preset baseline";
  return `${pct(deltaPct, 1)} vs preset R`;
}
