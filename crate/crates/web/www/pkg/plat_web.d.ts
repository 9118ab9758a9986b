/* tslint:disable */
/* eslint-disable */

/**
 * Canonical form, symmetry group and braid word of a twist matrix given in
 * the text or JSON format.
 */
export function canonicalize(text: string): string;

/**
 * Closure invariants; the Jones polynomial is omitted above `cap`
 * crossings (never more than the library default).
 */
export function closure_invariants(text: string, style: string, cap: number): string;

/**
 * A rational `p/q` is expanded; a comma-separated list is turned into its
 * Schubert pair.
 */
export function twobridge(input: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly canonicalize: (a: number, b: number) => [number, number];
    readonly closure_invariants: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly twobridge: (a: number, b: number) => [number, number];
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
