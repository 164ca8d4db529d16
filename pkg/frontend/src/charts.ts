/**
 * Dependency-free SVG line charts.
 *
 * Plot data is used exactly as provided: one path vertex per sample, no
 * client-side resampling or smoothing, so the rendered geometry is a pure
 * affine image of the service's series.
 */

export interface Scale {
  (value: number): number;
}

export function linearScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

export function extent(values: ArrayLike<number>): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (let i = 0; i < values.length; i++) {
    const v = values[i];
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 0.5, hi + 0.5];
  return [lo, hi];
}

export function ticks(lo: number, hi: number, count = 5): number[] {
  const out: number[] = [];
  for (let i = 0; i <= count; i++) out.push(lo + ((hi - lo) * i) / count);
  return out;
}

const round2 = (v: number) => Math.round(v * 100) / 100;

/** `M x0 y0 L x1 y1 ...` through every point, in order. */
export function pathFrom(xs: ArrayLike<number>, ys: ArrayLike<number>, sx: Scale, sy: Scale): string {
  if (xs.length === 0) return "";
  const parts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    parts.push(`${i === 0 ? "M" : "L"}${round2(sx(xs[i]))} ${round2(sy(ys[i]))}`);
  }
  return parts.join(" ");
}

export interface LinePlot {
  label: string;
  xs: ArrayLike<number>;
  ys: ArrayLike<number>;
  color: string;
  dash?: string;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  plots: LinePlot[];
  xLabel?: string;
  yLabel?: string;
  /** Vertical marker (e.g. a zero-crossing time), in x-domain units. */
  markerX?: number | null;
  markerLabel?: string;
  /** Horizontal reference line, in y-domain units. */
  referenceY?: number | null;
  yDomain?: [number, number];
}

const MARGIN = { left: 46, right: 12, top: 10, bottom: 30 };

function escapeXml(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function lineChartSvg(options: ChartOptions): string {
  const width = options.width ?? 520;
  const height = options.height ?? 260;
  const xs = options.plots.flatMap((p) => [extent(p.xs)[0], extent(p.xs)[1]]);
  const ys = options.plots.flatMap((p) => [extent(p.ys)[0], extent(p.ys)[1]]);
  const [x0, x1] = extent(xs);
  const [y0raw, y1raw] = options.yDomain ?? extent(ys);
  const pad = (y1raw - y0raw) * 0.05 || 0.5;
  const [y0, y1] = options.yDomain ?? [y0raw - pad, y1raw + pad];

  const sx = linearScale(x0, x1, MARGIN.left, width - MARGIN.right);
  const sy = linearScale(y0, y1, height - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" class="chart">`,
  ];

  for (const t of ticks(y0, y1, 4)) {
    const y = round2(sy(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" class="grid"/>`,
      `<text x="${MARGIN.left - 6}" y="${y + 3}" class="tick" text-anchor="end">${escapeXml(formatTick(t))}</text>`,
    );
  }
  for (const t of ticks(x0, x1, 5)) {
    const x = round2(sx(t));
    parts.push(
      `<text x="${x}" y="${height - MARGIN.bottom + 16}" class="tick" text-anchor="middle">${escapeXml(formatTick(t))}</text>`,
    );
  }

  if (options.referenceY !== null && options.referenceY !== undefined) {
    const y = round2(sy(options.referenceY));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${width - MARGIN.right}" y2="${y}" class="reference" stroke-dasharray="2 3"/>`,
    );
  }

  for (const plot of options.plots) {
    const d = pathFrom(plot.xs, plot.ys, sx, sy);
    const dash = plot.dash ? ` stroke-dasharray="${plot.dash}"` : "";
    parts.push(`<path d="${d}" fill="none" stroke="${plot.color}" stroke-width="1.6"${dash}/>`);
  }

  if (options.markerX !== null && options.markerX !== undefined) {
    const x = round2(sx(options.markerX));
    parts.push(
      `<line class="marker" x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${height - MARGIN.bottom}" stroke-dasharray="4 3"/>`,
      `<text class="marker-label" x="${x + 4}" y="${MARGIN.top + 12}">${escapeXml(options.markerLabel ?? "")}</text>`,
    );
  }

  let legendX = MARGIN.left + 4;
  for (const plot of options.plots) {
    parts.push(
      `<rect x="${legendX}" y="${height - 12}" width="10" height="3" fill="${plot.color}"/>`,
      `<text x="${legendX + 14}" y="${height - 8}" class="legend">${escapeXml(plot.label)}</text>`,
    );
    legendX += 14 + 8 * plot.label.length + 14;
  }

  parts.push("</svg>");
  return parts.join("");
}

function formatTick(value: number): string {
  if (Math.abs(value) >= 100 || value === Math.round(value)) return String(Math.round(value));
  if (Math.abs(value) >= 1) return value.toFixed(1);
  return value.toFixed(2);
}
