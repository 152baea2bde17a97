/** Minimal deterministic SVG chart builder: multi-panel line charts with
 * linear or log axes. String assembly only, so identical inputs always give
 * byte-identical output. */

export interface SeriesPoint {
  x: number;
  y: number;
  /** true when the value was clamped for log display (e.g. zero estimates) */
  clamped?: boolean;
}

export interface Series {
  label: string;
  points: SeriesPoint[];
}

export interface Panel {
  title: string;
  series: Series[];
}

export interface ChartOptions {
  yScale: 'log' | 'linear';
  xLabel: string;
  yLabel: string;
  footnote?: string;
  panelWidth?: number;
  panelHeight?: number;
}

export const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];

const MARGIN = { top: 36, right: 16, bottom: 44, left: 64 };

function fmt(v: number): string {
  if (v === 0) return '0';
  const abs = Math.abs(v);
  if (abs >= 1e5 || abs < 1e-3) return v.toExponential(0);
  return String(Number(v.toPrecision(4)));
}

function niceLinearTicks(lo: number, hi: number, count = 5): number[] {
  if (lo === hi) return [lo];
  const step = (hi - lo) / (count - 1);
  return Array.from({ length: count }, (_, i) => lo + i * step);
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    ticks.push(10 ** e);
  }
  return ticks;
}

export function renderPanels(panels: Panel[], opts: ChartOptions): string {
  const pw = opts.panelWidth ?? 420;
  const ph = opts.panelHeight ?? 320;
  const cols = Math.min(2, panels.length);
  const rows = Math.ceil(panels.length / cols);
  const footH = opts.footnote ? 24 : 0;
  const width = cols * pw;
  const height = rows * ph + footH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif" font-size="12">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);

  panels.forEach((panel, p) => {
    const ox = (p % cols) * pw;
    const oy = Math.floor(p / cols) * ph;
    const plotW = pw - MARGIN.left - MARGIN.right;
    const plotH = ph - MARGIN.top - MARGIN.bottom;

    const xs = panel.series.flatMap((s) => s.points.map((pt) => pt.x));
    const ys = panel.series.flatMap((s) => s.points.map((pt) => pt.y));
    const xLo = Math.min(...xs);
    const xHi = Math.max(...xs);
    let yLo = Math.min(...ys);
    let yHi = Math.max(...ys);
    if (opts.yScale === 'log') {
      if (yLo <= 0) throw new Error('log scale requires positive values (clamp zeros first)');
      yLo = 10 ** Math.floor(Math.log10(yLo));
      yHi = 10 ** Math.ceil(Math.log10(yHi));
      if (yLo === yHi) yHi = yLo * 10;
    } else if (yLo === yHi) {
      yHi = yLo + 1;
    }

    const sx = (x: number) =>
      ox + MARGIN.left + (xHi === xLo ? plotW / 2 : ((x - xLo) / (xHi - xLo)) * plotW);
    const sy = (y: number) => {
      const t =
        opts.yScale === 'log'
          ? (Math.log10(y) - Math.log10(yLo)) / (Math.log10(yHi) - Math.log10(yLo))
          : (y - yLo) / (yHi - yLo);
      return oy + MARGIN.top + plotH - t * plotH;
    };

    parts.push(`<g class="panel" data-title="${panel.title}">`);
    parts.push(
      `<text x="${ox + MARGIN.left + plotW / 2}" y="${oy + 18}" text-anchor="middle" ` +
        `font-weight="bold">${panel.title}</text>`,
    );
    // axes
    const x0 = ox + MARGIN.left;
    const y0 = oy + MARGIN.top + plotH;
    parts.push(
      `<line x1="${x0}" y1="${oy + MARGIN.top}" x2="${x0}" y2="${y0}" stroke="black"/>`,
      `<line x1="${x0}" y1="${y0}" x2="${x0 + plotW}" y2="${y0}" stroke="black"/>`,
    );
    const xTicks = [...new Set(xs)].sort((a, b) => a - b);
    const shownX = xTicks.length > 8 ? niceLinearTicks(xLo, xHi, 6) : xTicks;
    for (const t of shownX) {
      parts.push(
        `<line x1="${sx(t)}" y1="${y0}" x2="${sx(t)}" y2="${y0 + 4}" stroke="black"/>`,
        `<text x="${sx(t)}" y="${y0 + 16}" text-anchor="middle">${fmt(t)}</text>`,
      );
    }
    const yTicks = opts.yScale === 'log' ? logTicks(yLo, yHi) : niceLinearTicks(yLo, yHi);
    for (const t of yTicks) {
      parts.push(
        `<line x1="${x0 - 4}" y1="${sy(t)}" x2="${x0}" y2="${sy(t)}" stroke="black"/>`,
        `<text x="${x0 - 6}" y="${sy(t) + 4}" text-anchor="end">${fmt(t)}</text>`,
      );
    }
    parts.push(
      `<text x="${x0 + plotW / 2}" y="${y0 + 34}" text-anchor="middle">${opts.xLabel}</text>`,
      `<text x="${ox + 14}" y="${oy + MARGIN.top + plotH / 2}" text-anchor="middle" ` +
        `transform="rotate(-90 ${ox + 14} ${oy + MARGIN.top + plotH / 2})">${opts.yLabel}</text>`,
    );

    panel.series.forEach((series, s) => {
      const color = PALETTE[s % PALETTE.length];
      const pts = [...series.points].sort((a, b) => a.x - b.x);
      const coords = pts.map((pt) => `${sx(pt.x).toFixed(2)},${sy(pt.y).toFixed(2)}`).join(' ');
      parts.push(
        `<polyline class="series" data-label="${series.label}" points="${coords}" ` +
          `fill="none" stroke="${color}" stroke-width="1.5"/>`,
      );
      for (const pt of pts) {
        const fill = pt.clamped ? 'white' : color;
        parts.push(
          `<circle cx="${sx(pt.x).toFixed(2)}" cy="${sy(pt.y).toFixed(2)}" r="3" ` +
            `fill="${fill}" stroke="${color}"${pt.clamped ? ' data-clamped="true"' : ''}/>`,
        );
      }
      // legend entry
      const lx = ox + MARGIN.left + 8;
      const ly = oy + MARGIN.top + 8 + s * 14;
      parts.push(
        `<line x1="${lx}" y1="${ly}" x2="${lx + 16}" y2="${ly}" stroke="${color}" stroke-width="1.5"/>`,
        `<text x="${lx + 20}" y="${ly + 4}">${series.label}</text>`,
      );
    });
    parts.push('</g>');
  });

  if (opts.footnote) {
    parts.push(
      `<text x="8" y="${height - 8}" font-style="italic">${opts.footnote}</text>`,
    );
  }
  parts.push('</svg>');
  return parts.join('\n');
}
