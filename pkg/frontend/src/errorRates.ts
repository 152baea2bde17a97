/** Render error-rate-vs-signature-length figures from simulation CSV output. */

import { ErrorRateRow, parseErrorRateCsv } from './csv.js';
import { Panel, Series, SeriesPoint, renderPanels } from './svg.js';

export interface PanelKey {
  n: number;
  h: number;
}

export interface ErrorRateFigureSpec {
  csvText: string;
  panelKeys: PanelKey[];
  yScale: 'log' | 'linear';
}

function keyOf(row: ErrorRateRow): string {
  return `${row.n},${row.h}`;
}

/** Build an SVG figure with one panel per (n, h) pair; each panel has one
 * curve per algorithm, error rate over signature length m. On log axes,
 * zero error rates are clamped to 1/(2*trials) and marked with open dots. */
export function renderErrorRates(spec: ErrorRateFigureSpec): string {
  const rows = parseErrorRateCsv(spec.csvText);
  if (rows.length === 0) {
    throw new Error('error-rate CSV contains no data rows');
  }
  const byKey = new Map<string, ErrorRateRow[]>();
  for (const row of rows) {
    const k = keyOf(row);
    if (!byKey.has(k)) byKey.set(k, []);
    byKey.get(k)!.push(row);
  }

  let anyClamped = false;
  const panels: Panel[] = spec.panelKeys.map((pk) => {
    const k = `${pk.n},${pk.h}`;
    const panelRows = byKey.get(k);
    if (!panelRows) {
      const available = [...byKey.keys()].sort().map((s) => `(${s})`).join(', ');
      throw new Error(`no rows for panel (n=${pk.n}, h=${pk.h}); available: ${available}`);
    }
    const algorithms = [...new Set(panelRows.map((r) => r.algorithm))];
    const series: Series[] = algorithms.map((alg) => {
      const points: SeriesPoint[] = panelRows
        .filter((r) => r.algorithm === alg)
        .sort((a, b) => a.m - b.m)
        .map((r) => {
          if (spec.yScale === 'log' && r.errorRate === 0) {
            anyClamped = true;
            return { x: r.m, y: 1 / (2 * r.trials), clamped: true };
          }
          return { x: r.m, y: r.errorRate };
        });
      return { label: alg, points };
    });
    return { title: `n=${pk.n}, h=${pk.h}`, series };
  });

  return renderPanels(panels, {
    yScale: spec.yScale,
    xLabel: 'signature length m',
    yLabel: 'error rate',
    footnote: anyClamped
      ? 'open markers: zero observed errors, shown at 1/(2*trials)'
      : undefined,
  });
}
