import { describe, expect, it } from "vitest";

import { extent, linearScale, lineChartSvg, pathFrom, ticks } from "../src/charts.js";
import { chartSvg } from "../src/views.js";
import type { EvaluateResponse } from "../src/types.js";

describe("scales and paths", () => {
  it("linear scale maps the domain ends onto the range ends", () => {
    const s = linearScale(0, 10, 100, 200);
    expect(s(0)).toBe(100);
    expect(s(10)).toBe(200);
    expect(s(5)).toBe(150);
  });

  it("extent handles flat and empty arrays", () => {
    expect(extent([3, 3, 3])).toEqual([2.5, 3.5]);
    expect(extent([])).toEqual([0, 1]);
    expect(extent([2, -1, 5])).toEqual([-1, 5]);
  });

  it("ticks are evenly spaced and inclusive", () => {
    expect(ticks(0, 4, 4)).toEqual([0, 1, 2, 3, 4]);
  });

  it("path has exactly one vertex per sample, in order", () => {
    const id = linearScale(0, 1, 0, 1);
    const d = pathFrom([0, 0.25, 0.5, 1], [0, 1, 0, 1], id, id);
    expect(d).toBe("M0 0 L0.25 1 L0.5 0 L1 1");
    expect(d.split("L").length - 1).toBe(3); // n-1 segments, no resampling
  });
});

function fakeResponse(crossing: number | null): EvaluateResponse {
  const t = [0, 2, 4, 6, 8, 10];
  return {
    series: {
      t,
      p: [20, 30, 40, 52, 66, 80],
      d: [50, 50, 55, 55, 59, 59],
      rai: [-30, -20, -15, -3, 7, 21],
      pr_detect: [1, 0.99, 0.95, 0.7, 0.2, 0.1],
      hazard: [0.05, 0.05, 0.05, 0.051, 0.055, 0.07],
      cumulative_r: [0, 0.001, 0.01, 0.04, 0.1, 0.17],
    },
    summary: { r: 0.17, p: 0.156, crossing },
  };
}

describe("chart views", () => {
  it("race chart marks the advantage crossing", () => {
    const svg = chartSvg("race", fakeResponse(6.27));
    expect(svg).toContain('class="marker"');
    expect(svg).toContain("crossing 6.27");
  });

  it("no marker when the advantage never turns", () => {
    const svg = chartSvg("race", fakeResponse(null));
    expect(svg).not.toContain('class="marker"');
  });

  it("marker sits at the right fraction of the x axis", () => {
    const svg = lineChartSvg({
      width: 520,
      height: 260,
      plots: [{ label: "y", xs: [0, 10], ys: [0, 1], color: "#000" }],
      markerX: 5,
    });
    const m = svg.match(/class="marker" x1="([0-9.]+)"/);
    expect(m).not.toBeNull();
    // x-range is [46, 508]; the midpoint of the domain lands midway
    expect(Number(m![1])).toBeCloseTo((46 + 508) / 2, 1);
  });

  it("detection and hazard charts plot service arrays against advantage", () => {
    const resp = fakeResponse(null);
    for (const kind of ["detection", "hazard"] as const) {
      const svg = chartSvg(kind, resp);
      const paths = svg.match(/<path d="[^"]+"/g) ?? [];
      expect(paths.length).toBe(1);
      // one vertex per sample
      expect(paths[0].split("L").length - 1).toBe(resp.series.t.length - 1);
    }
  });
});
