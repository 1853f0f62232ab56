// Client-side view state and the two small pieces of async discipline the
// panels rely on: trailing-edge debounce for slider scrubbing and monotone
// sequence numbers so stale responses never overwrite fresh ones.

import type {
  Annotation,
  BootstrapSummaryJson,
  LassoPathJson,
  SessionView,
  SurrogateFamily,
  SurrogateResponse,
  SweepEntryJson,
  SweepResultJson,
} from "./types.js";

export interface ViewState {
  session: SessionView | null;
  radius: number;
  radiusRange: [number, number];
  family: SurrogateFamily;
  C: number | null; // logistic_l1 only
  maxDepth: number | null; // tree only
  surrogate: SurrogateResponse | null;
  sweep: SweepResultJson | null;
  bootstrap: BootstrapSummaryJson[] | null;
  path: LassoPathJson | null;
  pathHover: number | null; // index into path.entries
  annotations: Annotation[];
  error: string | null;
  jobProgress: { kind: string; progress: number } | null;
}

export const DEFAULT_RADIUS_RANGE: [number, number] = [0.25, 3.0];

export function initialState(): ViewState {
  return {
    session: null,
    radius: DEFAULT_RADIUS_RANGE[0],
    radiusRange: DEFAULT_RADIUS_RANGE,
    family: "logistic",
    C: null,
    maxDepth: null,
    surrogate: null,
    sweep: null,
    bootstrap: null,
    path: null,
    pathHover: null,
    annotations: [],
    error: null,
    jobProgress: null,
  };
}

// The current radius is always kept inside the configured sweep range.
export function clampRadius(state: ViewState, radius: number): number {
  const [lo, hi] = state.radiusRange;
  if (!Number.isFinite(radius)) return lo;
  return Math.min(hi, Math.max(lo, radius));
}

export function setRadius(state: ViewState, radius: number): ViewState {
  return { ...state, radius: clampRadius(state, radius) };
}

export function setSweep(state: ViewState, sweep: SweepResultJson): ViewState {
  const radii = sweep.radii;
  const range: [number, number] = [radii[0], radii[radii.length - 1]];
  const next = { ...state, sweep, radiusRange: range };
  return { ...next, radius: clampRadius(next, state.radius) };
}

// Exact-radius cache hit: panels reuse swept entries instead of re-querying.
export function cachedSweepEntry(state: ViewState, radius: number): SweepEntryJson | null {
  const entries = state.sweep?.entries ?? [];
  for (const entry of entries) {
    if (entry.radius === radius) return entry;
  }
  return null;
}

export function addAnnotation(state: ViewState, interval: [number, number], label: string): ViewState {
  const [a, b] = interval;
  const ordered: [number, number] = a <= b ? [a, b] : [b, a];
  return { ...state, annotations: [...state.annotations, { interval: ordered, label }] };
}

export interface Timers {
  set(fn: () => void, ms: number): unknown;
  clear(handle: unknown): void;
}

export const realTimers: Timers = {
  set: (fn, ms) => setTimeout(fn, ms),
  clear: (handle) => clearTimeout(handle as Parameters<typeof clearTimeout>[0]),
};

export const SLIDER_DEBOUNCE_MS = 150;

// Trailing-edge debounce: only the last call within the window fires.
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
  timers: Timers = realTimers,
): (...args: A) => void {
  let handle: unknown = null;
  return (...args: A) => {
    if (handle !== null) timers.clear(handle);
    handle = timers.set(() => {
      handle = null;
      fn(...args);
    }, ms);
  };
}

// One gate per panel: begin() stamps a request, accept() rejects anything
// older than the newest accepted stamp, so out-of-order responses drop.
export class SequenceGate {
  private next = 1;
  private newest = 0;

  begin(): number {
    return this.next++;
  }

  accept(seq: number): boolean {
    if (seq <= this.newest) return false;
    this.newest = seq;
    return true;
  }
}
