import { describe, expect, it, vi } from "vitest";

import {
  addAnnotation,
  cachedSweepEntry,
  clampRadius,
  debounce,
  initialState,
  SequenceGate,
  setRadius,
  setSweep,
} from "../src/state.js";
import { fixture } from "./helpers.js";

describe("radius clamping", () => {
  it("keeps the radius inside the configured range", () => {
    const state = initialState();
    expect(clampRadius(state, 1.0)).toBe(1.0);
    expect(clampRadius(state, -5)).toBe(state.radiusRange[0]);
    expect(clampRadius(state, 99)).toBe(state.radiusRange[1]);
    expect(clampRadius(state, Number.NaN)).toBe(state.radiusRange[0]);
  });

  it("setRadius returns a new state with the clamped value", () => {
    const state = initialState();
    const next = setRadius(state, 99);
    expect(next.radius).toBe(state.radiusRange[1]);
    expect(state.radius).not.toBe(next.radius);
  });

  it("a sweep result re-anchors the range and re-clamps", () => {
    const sweep = fixture("sweep_job").result;
    let state = { ...initialState(), radius: 0.25, radiusRange: [0.01, 99] as [number, number] };
    state = setSweep(state, sweep);
    expect(state.radiusRange).toEqual([sweep.radii[0], sweep.radii[sweep.radii.length - 1]]);
    expect(state.radius).toBe(sweep.radii[0]);
  });
});

describe("sweep entry cache", () => {
  it("returns the entry on an exact radius match and null otherwise", () => {
    const sweep = fixture("sweep_job").result;
    const state = setSweep(initialState(), sweep);
    const radius = sweep.radii[3];
    expect(cachedSweepEntry(state, radius)).toBe(sweep.entries[3]);
    expect(cachedSweepEntry(state, radius + 1e-9)).toBeNull();
    expect(cachedSweepEntry(initialState(), radius)).toBeNull();
  });
});

describe("annotations", () => {
  it("normalizes the interval ordering and appends", () => {
    let state = initialState();
    state = addAnnotation(state, [0.9, 0.3], "flip zone");
    state = addAnnotation(state, [1.0, 2.0], "stable");
    expect(state.annotations).toEqual([
      { interval: [0.3, 0.9], label: "flip zone" },
      { interval: [1.0, 2.0], label: "stable" },
    ]);
  });

  it("annotations survive radius changes", () => {
    let state = addAnnotation(initialState(), [0.4, 0.6], "keep me");
    state = setRadius(state, 2.0);
    expect(state.annotations).toHaveLength(1);
  });
});

describe("debounce", () => {
  it("fires only the trailing call after the window", () => {
    vi.useFakeTimers();
    try {
      const calls: number[] = [];
      const fn = debounce((v: number) => calls.push(v), 150);
      fn(1);
      vi.advanceTimersByTime(100);
      fn(2);
      vi.advanceTimersByTime(100);
      expect(calls).toEqual([]);
      vi.advanceTimersByTime(50);
      expect(calls).toEqual([2]);
      fn(3);
      vi.advanceTimersByTime(150);
      expect(calls).toEqual([2, 3]);
    } finally {
      vi.useRealTimers();
    }
  });
});

describe("sequence gate", () => {
  it("rejects responses older than the newest accepted one", () => {
    const gate = new SequenceGate();
    const a = gate.begin();
    const b = gate.begin();
    expect(gate.accept(b)).toBe(true);
    expect(gate.accept(a)).toBe(false);
    const c = gate.begin();
    expect(gate.accept(c)).toBe(true);
  });

  it("accepts in-order responses", () => {
    const gate = new SequenceGate();
    for (let i = 0; i < 5; i++) {
      expect(gate.accept(gate.begin())).toBe(true);
    }
  });
});
