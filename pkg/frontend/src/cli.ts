#!/usr/bin/env node
/** Command-line entry point: render simulation CSV files to SVG figures.
 *
 * Usage:
 *   provtrace-plots error-rates --input rates.csv --output fig.svg \
 *       --panels 6:3,6:5,9:3,9:5 [--linear]
 *   provtrace-plots complexity --input ops.csv --output fig.svg
 */

import { readFileSync, writeFileSync } from 'node:fs';
import { pathToFileURL } from 'node:url';
import { parseArgs } from 'node:util';

import { renderErrorRates, PanelKey } from './errorRates.js';
import { renderComplexity } from './complexity.js';

function parsePanels(raw: string): PanelKey[] {
  return raw.split(',').map((part) => {
    const m = /^(\d+):(\d+)$/.exec(part.trim());
    if (!m) {
      throw new Error(`bad panel spec '${part}': expected n:h, e.g. 6:3`);
    }
    return { n: Number(m[1]), h: Number(m[2]) };
  });
}

export function run(argv: string[]): number {
  const [command, ...rest] = argv;
  if (command !== 'error-rates' && command !== 'complexity') {
    process.stderr.write(
      'usage: provtrace-plots <error-rates|complexity> --input FILE --output FILE [options]\n',
    );
    return 2;
  }

  let values;
  try {
    ({ values } = parseArgs({
      args: rest,
      options: {
        input: { type: 'string' },
        output: { type: 'string' },
        panels: { type: 'string' },
        linear: { type: 'boolean', default: false },
      },
    }));
  } catch (err) {
    process.stderr.write(`${(err as Error).message}\n`);
    return 2;
  }
  if (!values.input || !values.output) {
    process.stderr.write('--input and --output are required\n');
    return 2;
  }
  if (!values.output.endsWith('.svg')) {
    process.stderr.write(
      `unsupported output format '${values.output}': only .svg output is supported\n`,
    );
    return 2;
  }

  try {
    const csvText = readFileSync(values.input, 'utf8');
    let svg: string;
    if (command === 'error-rates') {
      if (!values.panels) {
        process.stderr.write('--panels is required for error-rates (e.g. 6:3,6:5)\n');
        return 2;
      }
      svg = renderErrorRates({
        csvText,
        panelKeys: parsePanels(values.panels),
        yScale: values.linear ? 'linear' : 'log',
      });
    } else {
      svg = renderComplexity(csvText);
    }
    writeFileSync(values.output, svg);
    process.stdout.write(`wrote ${values.output}\n`);
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${(err as Error).message}\n`);
    return 1;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === pathToFileURL(process.argv[1]).href;
if (invokedDirectly) {
  process.exit(run(process.argv.slice(2)));
}
