/* tslint:disable */
/* eslint-disable */

/**
 * Adds each act outside `base` (comma-separated) to it in turn and
 * classifies the effect.
 */
export function decoy_scan(problem: string, rule: string, base: string): string;

/**
 * Ranks the problem's menu under `rule` (same syntax as the CLI).
 */
export function rank(problem: string, rule: string): string;

/**
 * Ranks the problem under the state-quantile anchor at `q`.
 */
export function rank_quantile(problem: string, q: number): string;

/**
 * Looks for a dominated act that makes `target` the unique safety choice.
 */
export function synthesize(problem: string, base: string, target: string, epsilon: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly decoy_scan: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly rank: (a: number, b: number, c: number, d: number) => [number, number];
    readonly rank_quantile: (a: number, b: number, c: number) => [number, number];
    readonly synthesize: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
