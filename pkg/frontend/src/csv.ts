/** Parsers for the two provtrace CSV schemas. Headers are bit-exact contracts. */

export const ERROR_RATE_HEADER =
  'algorithm,n,h,m,L,v,w,trials,errors,error_rate,seed,elapsed_ms';
export const COMPLEXITY_HEADER = 'n,h,L,m,lomp_ops,plomp_ops,savings';

export interface ErrorRateRow {
  algorithm: string;
  n: number;
  h: number;
  m: number;
  L: number;
  v: number;
  w: number;
  trials: number;
  errors: number;
  errorRate: number;
  seed: number;
  elapsedMs: number;
}

export interface ComplexityRow {
  n: number;
  h: number;
  L: number;
  m: number;
  lompOps: number;
  plompOps: number;
  savings: number;
}

function splitLines(text: string): string[] {
  return text.split(/\r?\n/).filter((line) => line.trim().length > 0);
}

export function parseErrorRateCsv(text: string): ErrorRateRow[] {
  const lines = splitLines(text);
  if (lines.length === 0 || lines[0] !== ERROR_RATE_HEADER) {
    throw new Error(
      `not an error-rate CSV: expected header "${ERROR_RATE_HEADER}", got "${lines[0] ?? ''}"`,
    );
  }
  return lines.slice(1).map((line, idx) => {
    const f = line.split(',');
    if (f.length !== 12) {
      throw new Error(`row ${idx + 2}: expected 12 fields, got ${f.length}`);
    }
    return {
      algorithm: f[0],
      n: Number(f[1]),
      h: Number(f[2]),
      m: Number(f[3]),
      L: Number(f[4]),
      v: Number(f[5]),
      w: Number(f[6]),
      trials: Number(f[7]),
      errors: Number(f[8]),
      errorRate: Number(f[9]),
      seed: Number(f[10]),
      elapsedMs: Number(f[11]),
    };
  });
}

export function parseComplexityCsv(text: string): ComplexityRow[] {
  const lines = splitLines(text);
  if (lines.length === 0 || lines[0] !== COMPLEXITY_HEADER) {
    throw new Error(
      `not a complexity CSV: expected header "${COMPLEXITY_HEADER}", got "${lines[0] ?? ''}"`,
    );
  }
  return lines.slice(1).map((line, idx) => {
    const f = line.split(',');
    if (f.length !== 7) {
      throw new Error(`row ${idx + 2}: expected 7 fields, got ${f.length}`);
    }
    return {
      n: Number(f[0]),
      h: Number(f[1]),
      L: Number(f[2]),
      m: Number(f[3]),
      lompOps: Number(f[4]),
      plompOps: Number(f[5]),
      savings: Number(f[6]),
    };
  });
}
