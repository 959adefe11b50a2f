/* tslint:disable */
/* eslint-disable */

/**
 * One search run; `horizon` = 0 means the default heuristic. Returns the
 * per-step success probabilities with the detected peak.
 */
export function evolve_curve(family: string, a: number, b: number, loop_weight: number, horizon: number): string;

/**
 * Graph parameters for the UI: N, d, and the hypothesized weight d/N.
 */
export function graph_info(family: string, a: number, b: number): string;

/**
 * Full walk vs the exact 4D subspace model on the complete graph, plus the
 * perturbative predictions σ, t*, p*.
 */
export function reduced_compare(n: number, loop_weight: number, horizon: number): string;

/**
 * Sweep ℓ = c·d/N over a multiplier grid and run the d/N-optimality check.
 * `first_local_max` picks the peak definition (the cycle wants it).
 */
export function sweep_multiplier_grid(family: string, a: number, b: number, multipliers: Float64Array, horizon: number, first_local_max: boolean): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly evolve_curve: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly graph_info: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly reduced_compare: (a: number, b: number, c: number) => [number, number, number, number];
    readonly sweep_multiplier_grid: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
