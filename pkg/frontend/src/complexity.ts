/** Render operation-count comparison figures from complexity CSV output. */

import { parseComplexityCsv } from './csv.js';
import { Panel, Series, renderPanels } from './svg.js';

/** Build an SVG figure from a complexity grid: one panel per hop count h,
 * with tree-search and path-constrained operation counts (plus their
 * difference) over list size L, on a log axis.
 *
 * The rows must form a rectangular grid: every h value must cover the same
 * set of L values. */
export function renderComplexity(csvText: string): string {
  const rows = parseComplexityCsv(csvText);
  if (rows.length === 0) {
    throw new Error('complexity CSV contains no data rows');
  }

  const hValues = [...new Set(rows.map((r) => r.h))].sort((a, b) => a - b);
  const lValues = [...new Set(rows.map((r) => r.L))].sort((a, b) => a - b);
  for (const h of hValues) {
    const ls = rows.filter((r) => r.h === h).map((r) => r.L).sort((a, b) => a - b);
    if (ls.length !== lValues.length || ls.some((l, i) => l !== lValues[i])) {
      throw new Error(
        `non-rectangular grid: h=${h} covers L={${ls.join(',')}} but expected L={${lValues.join(',')}}`,
      );
    }
  }

  const panels: Panel[] = hValues.map((h) => {
    const panelRows = rows.filter((r) => r.h === h).sort((a, b) => a.L - b.L);
    const series: Series[] = [
      { label: 'lomp_ops', points: panelRows.map((r) => ({ x: r.L, y: r.lompOps })) },
      { label: 'plomp_ops', points: panelRows.map((r) => ({ x: r.L, y: r.plompOps })) },
      { label: 'savings', points: panelRows.map((r) => ({ x: r.L, y: r.savings })) },
    ];
    return { title: `n=${panelRows[0].n}, h=${h}, m=${panelRows[0].m}`, series };
  });

  return renderPanels(panels, {
    yScale: 'log',
    xLabel: 'list size L',
    yLabel: 'operations',
  });
}
