// Session state and orchestration. The UI performs no geometry itself: every
// verdict displayed comes from the service, and coordinates are snapped to
// bounded-denominator rationals before any call.

import { ApiClient } from "./api.js";
import { RateLimiter } from "./debounce.js";
import { parseRational, snapToString } from "./rational.js";
import type {
  BlocksResult,
  ConstructResult,
  DelaunayResult,
  JsonCircle,
  JsonPointSet,
  Pt,
  SolveResult,
} from "./types.js";

export type Mode = "place-P" | "place-Q" | "drag";

export interface Overlays {
  delaunay: boolean;
  witnesses: boolean;
  hull: boolean;
  circles: boolean;
  certificate: boolean;
}

export interface Scene {
  delaunay: DelaunayResult | null;
  verdict: BlocksResult | null;
  suggestion: SolveResult | null;
}

/** What the session needs from a rate limiter (RateLimiter satisfies it). */
export interface Scheduler {
  schedule(op: () => void): void;
  cancel(): void;
}

export class SessionState {
  P: Pt[] = [];
  Q: Pt[] = [];
  circles: JsonCircle[] = [];
  mode: Mode = "place-P";
  exteriorOnly = true;
  overlays: Overlays = {
    delaunay: true,
    witnesses: true,
    hull: true,
    circles: true,
    certificate: false,
  };
  scene: Scene = { delaunay: null, verdict: null, suggestion: null };

  constructor(
    private api: ApiClient,
    private limiter: Scheduler = new RateLimiter(10),
    private onScene: (s: SessionState) => void = () => {},
  ) {}

  static toPt(x: number, y: number): Pt {
    const rx = snapToString(x);
    const ry = snapToString(y);
    // Mirror the snapped value so dragging stays consistent with the server.
    return { x: parseRational(rx), y: parseRational(ry), rx, ry };
  }

  pointSet(points: Pt[]): JsonPointSet {
    return { points: points.map((p) => ({ x: p.rx, y: p.ry })) };
  }

  addPoint(x: number, y: number): void {
    const pt = SessionState.toPt(x, y);
    if (this.mode === "place-Q") this.Q.push(pt);
    else this.P.push(pt);
    this.requestUpdate();
  }

  movePoint(kind: "P" | "Q", index: number, x: number, y: number): void {
    const arr = kind === "P" ? this.P : this.Q;
    if (index < 0 || index >= arr.length) return;
    arr[index] = SessionState.toPt(x, y);
    this.requestUpdate();
  }

  clear(): void {
    this.P = [];
    this.Q = [];
    this.circles = [];
    this.scene = { delaunay: null, verdict: null, suggestion: null };
    this.onScene(this);
  }

  async loadGadget(kind: string, k: number, tau?: string): Promise<ConstructResult> {
    const result = await this.api.construct(kind, k, tau);
    this.P = result.points.map((p) => ({
      x: parseRational(p.x),
      y: parseRational(p.y),
      rx: p.x,
      ry: p.y,
    }));
    this.Q = [];
    this.circles = result.circles ?? [];
    await this.liveUpdate();
    return result;
  }

  async suggestBlockers(): Promise<SolveResult> {
    const res = await this.api.solve(this.pointSet(this.P), this.exteriorOnly);
    this.scene.suggestion = res;
    this.onScene(this);
    return res;
  }

  adoptSuggestion(): void {
    const s = this.scene.suggestion;
    if (!s) return;
    this.Q = s.Q.points.map((p) => ({
      x: parseRational(p.x),
      y: parseRational(p.y),
      rx: p.x,
      ry: p.y,
    }));
    this.scene.suggestion = null;
    this.requestUpdate();
  }

  /** Portable session snapshot: the exact rationals the server sees. */
  exportSession(): string {
    return JSON.stringify({
      P: this.pointSet(this.P),
      Q: this.pointSet(this.Q),
      exterior_only: this.exteriorOnly,
    });
  }

  importSession(text: string): void {
    const data = JSON.parse(text) as {
      P: JsonPointSet;
      Q: JsonPointSet;
      exterior_only?: boolean;
    };
    const toPts = (ps: JsonPointSet): Pt[] =>
      ps.points.map((p) => ({
        x: parseRational(p.x),
        y: parseRational(p.y),
        rx: p.x,
        ry: p.y,
      }));
    this.P = toPts(data.P);
    this.Q = toPts(data.Q);
    this.exteriorOnly = data.exterior_only ?? this.exteriorOnly;
    this.circles = [];
    this.requestUpdate();
  }

  /** Debounced edit path: at most 10 live updates per second, last edit wins. */
  requestUpdate(): void {
    this.limiter.schedule(() => {
      void this.liveUpdate();
    });
  }

  /** One round trip: Delaunay graph of P, and the blocking verdict when Q exists. */
  async liveUpdate(): Promise<Scene> {
    if (this.P.length < 2) {
      this.scene = { delaunay: null, verdict: null, suggestion: this.scene.suggestion };
      this.onScene(this);
      return this.scene;
    }
    try {
      const delaunay = await this.api.delaunay(this.pointSet(this.P));
      let verdict: BlocksResult | null = null;
      if (this.Q.length > 0) {
        verdict = await this.api.blocks(
          this.pointSet(this.P),
          this.pointSet(this.Q),
          this.exteriorOnly,
        );
      }
      this.scene = { delaunay, verdict, suggestion: this.scene.suggestion };
    } catch (err) {
      // Degrade to the last good scene; surface the error code to the UI.
      if ((err as { name?: string }).name !== "AbortError") {
        this.scene = { ...this.scene };
        this.lastError = String(err);
      }
    }
    this.onScene(this);
    return this.scene;
  }

  lastError: string | null = null;
}
