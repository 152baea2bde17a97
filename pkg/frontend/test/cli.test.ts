import { mkdtempSync, readFileSync, writeFileSync, existsSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { describe, expect, it } from 'vitest';

import { run } from '../src/cli.js';

const fixturesDir = new URL('./fixtures/', import.meta.url).pathname;
const ratesCsv = join(fixturesDir, 'error_rates_fig4.csv');
const opsCsv = join(fixturesDir, 'complexity_grid.csv');

function tmp(name: string): string {
  return join(mkdtempSync(join(tmpdir(), 'plots-')), name);
}

describe('cli run', () => {
  it('renders an error-rate figure to SVG', () => {
    const out = tmp('rates.svg');
    const code = run(['error-rates', '--input', ratesCsv, '--output', out, '--panels', '6:3,6:5,9:3,9:5']);
    expect(code).toBe(0);
    expect(readFileSync(out, 'utf8')).toContain('<polyline class="series"');
  });

  it('renders a complexity figure to SVG', () => {
    const out = tmp('ops.svg');
    expect(run(['complexity', '--input', opsCsv, '--output', out])).toBe(0);
    expect(readFileSync(out, 'utf8')).toContain('data-label="savings"');
  });

  it('rejects non-SVG output with a usage error', () => {
    expect(run(['complexity', '--input', opsCsv, '--output', tmp('ops.png')])).toBe(2);
  });

  it('rejects an unknown command', () => {
    expect(run(['histogram'])).toBe(2);
  });

  it('requires --panels for error-rates', () => {
    expect(run(['error-rates', '--input', ratesCsv, '--output', tmp('x.svg')])).toBe(2);
  });

  it('rejects a malformed panel spec', () => {
    const out = tmp('x.svg');
    expect(run(['error-rates', '--input', ratesCsv, '--output', out, '--panels', '6-3'])).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it('returns 1 and writes nothing when the panel key is missing', () => {
    const out = tmp('x.svg');
    expect(run(['error-rates', '--input', ratesCsv, '--output', out, '--panels', '7:2'])).toBe(1);
    expect(existsSync(out)).toBe(false);
  });

  it('returns 1 on a header mismatch', () => {
    const bad = tmp('bad.csv');
    writeFileSync(bad, 'a,b,c\n1,2,3\n');
    expect(run(['complexity', '--input', bad, '--output', tmp('x.svg')])).toBe(1);
  });
});
