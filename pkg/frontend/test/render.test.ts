import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { convexHullFloat, fitViewport, toScreen, toWorld, witnessCircleForEdge } from "../src/render.js";
import { SessionState } from "../src/session.js";

function dummyState(): SessionState {
  const api = new ApiClient("http://unused", async () => ({
    status: 200,
    text: async () => JSON.stringify({ ok: true, result: {} }),
  }));
  return new SessionState(api);
}

describe("viewport", () => {
  it("screen/world transforms are inverse", () => {
    const state = dummyState();
    state.P = [
      { x: 0, y: 0, rx: "0/1", ry: "0/1" },
      { x: 10, y: 5, rx: "10/1", ry: "5/1" },
    ];
    const v = fitViewport(state, 800, 600);
    for (const [x, y] of [[0, 0], [10, 5], [3.25, -1.5]] as const) {
      const [sx, sy] = toScreen(v, x, y);
      const [wx, wy] = toWorld(v, sx, sy);
      expect(wx).toBeCloseTo(x, 9);
      expect(wy).toBeCloseTo(y, 9);
    }
  });
});

describe("convexHullFloat", () => {
  it("drops interior points", () => {
    const pts = [
      { x: 0, y: 0, rx: "0/1", ry: "0/1" },
      { x: 4, y: 0, rx: "4/1", ry: "0/1" },
      { x: 4, y: 4, rx: "4/1", ry: "4/1" },
      { x: 0, y: 4, rx: "0/1", ry: "4/1" },
      { x: 2, y: 2, rx: "2/1", ry: "2/1" },
    ];
    expect(convexHullFloat(pts)).toHaveLength(4);
  });
});

describe("witnessCircleForEdge", () => {
  it("reconstructs a circle through both endpoints from the interval", () => {
    const state = dummyState();
    state.P = [
      { x: 0, y: 0, rx: "0/1", ry: "0/1" },
      { x: 1, y: 0, rx: "1/1", ry: "0/1" },
      { x: 0.5, y: 0.1, rx: "1/2", ry: "1/10" },
    ];
    state.scene.delaunay = {
      edges: [[0, 1]],
      witness_intervals: [
        { edge: [0, 1], empty: false, lo: "-inf", hi: "-6/5", lo_closed: false, hi_closed: true },
      ],
    };
    const w = witnessCircleForEdge(state, 0)!;
    expect(w).not.toBeNull();
    // The circle passes through both edge endpoints...
    expect(Math.hypot(0 - w.cx, 0 - w.cy)).toBeCloseTo(w.r, 9);
    expect(Math.hypot(1 - w.cx, 1e-12 - w.cy)).toBeCloseTo(w.r, 9);
    // ...and, at the interval endpoint, through the constraining third point.
    expect(Math.hypot(0.5 - w.cx, 0.1 - w.cy)).toBeCloseTo(w.r, 9);
  });

  it("returns null for empty intervals", () => {
    const state = dummyState();
    state.P = [
      { x: 0, y: 0, rx: "0/1", ry: "0/1" },
      { x: 1, y: 0, rx: "1/1", ry: "0/1" },
    ];
    state.scene.delaunay = {
      edges: [[0, 1]],
      witness_intervals: [
        { edge: [0, 1], empty: true, lo: "0/1", hi: "0/1", lo_closed: false, hi_closed: false },
      ],
    };
    expect(witnessCircleForEdge(state, 0)).toBeNull();
  });
});
