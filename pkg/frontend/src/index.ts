export * from './csv.js';
export * from './svg.js';
export * from './errorRates.js';
export * from './complexity.js';
