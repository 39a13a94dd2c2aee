// Canvas rendering: points, Delaunay edges, certificate circles, hull, and
// blocker suggestions. Pure drawing; all data comes from the session scene.

import { parseRational } from "./rational.js";
import { SessionState } from "./session.js";
import type { Pt } from "./types.js";

export interface Viewport {
  scale: number;
  offsetX: number;
  offsetY: number;
}

export function fitViewport(
  state: SessionState,
  width: number,
  height: number,
): Viewport {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const p of [...state.P, ...state.Q]) {
    xs.push(p.x);
    ys.push(p.y);
  }
  for (const c of state.circles) {
    const r = Math.sqrt(parseRational(c.radius_sq));
    xs.push(parseRational(c.center.x) - r, parseRational(c.center.x) + r);
    ys.push(parseRational(c.center.y) - r, parseRational(c.center.y) + r);
  }
  if (xs.length === 0) return { scale: 40, offsetX: width / 2, offsetY: height / 2 };
  const minX = Math.min(...xs), maxX = Math.max(...xs);
  const minY = Math.min(...ys), maxY = Math.max(...ys);
  const pad = 0.1 * Math.max(maxX - minX, maxY - minY, 1);
  const scale = Math.min(
    width / (maxX - minX + 2 * pad),
    height / (maxY - minY + 2 * pad),
  );
  return {
    scale,
    offsetX: width / 2 - scale * (minX + maxX) / 2,
    offsetY: height / 2 + scale * (minY + maxY) / 2,
  };
}

export function toScreen(v: Viewport, x: number, y: number): [number, number] {
  return [v.offsetX + v.scale * x, v.offsetY - v.scale * y];
}

export function toWorld(v: Viewport, sx: number, sy: number): [number, number] {
  return [(sx - v.offsetX) / v.scale, (v.offsetY - sy) / v.scale];
}

const ROLE_COLORS: Record<string, string> = {
  F1: "#c0392b", G1: "#2980b9", F2: "#d35400", G2: "#16a085",
  F3: "#8e44ad", G3: "#27ae60", H: "#7f8c8d", I2: "#d35400",
};

export function draw(
  ctx: CanvasRenderingContext2D,
  state: SessionState,
  view: Viewport,
  width: number,
  height: number,
  hoveredEdge: number | null = null,
): void {
  ctx.clearRect(0, 0, width, height);
  const { scene, overlays } = state;

  if (overlays.hull && state.P.length >= 3) {
    const hull = convexHullFloat(state.P);
    ctx.beginPath();
    hull.forEach((p, i) => {
      const [sx, sy] = toScreen(view, p.x, p.y);
      i === 0 ? ctx.moveTo(sx, sy) : ctx.lineTo(sx, sy);
    });
    ctx.closePath();
    ctx.fillStyle = "rgba(190, 200, 210, 0.25)";
    ctx.fill();
    ctx.strokeStyle = "#b0bac3";
    ctx.stroke();
  }

  if (overlays.circles) {
    for (const c of state.circles) {
      const r = Math.sqrt(parseRational(c.radius_sq)) * view.scale;
      const [sx, sy] = toScreen(view, parseRational(c.center.x), parseRational(c.center.y));
      ctx.beginPath();
      ctx.arc(sx, sy, r, 0, 2 * Math.PI);
      ctx.strokeStyle = ROLE_COLORS[c.role] ?? "#555";
      ctx.lineWidth = 1;
      ctx.stroke();
    }
  }

  if (overlays.delaunay && scene.delaunay) {
    const unblocked = new Set(
      (scene.verdict?.unblocked_edges ?? []).map(([a, b]) => `${a},${b}`),
    );
    scene.delaunay.edges.forEach(([a, b], idx) => {
      const pa = state.P[a];
      const pb = state.P[b];
      if (!pa || !pb) return;
      const [x1, y1] = toScreen(view, pa.x, pa.y);
      const [x2, y2] = toScreen(view, pb.x, pb.y);
      ctx.beginPath();
      ctx.moveTo(x1, y1);
      ctx.lineTo(x2, y2);
      const survived = scene.verdict ? unblocked.has(`${a},${b}`) : true;
      ctx.strokeStyle = scene.verdict
        ? survived
          ? "#e74c3c"
          : "#bdc3c7"
        : "#34495e";
      ctx.lineWidth = idx === hoveredEdge ? 3 : survived && scene.verdict ? 2.5 : 1.2;
      ctx.stroke();
    });
  }

  if (overlays.witnesses && hoveredEdge !== null && scene.delaunay) {
    const witness = witnessCircleForEdge(state, hoveredEdge);
    if (witness) {
      const [sx, sy] = toScreen(view, witness.cx, witness.cy);
      ctx.beginPath();
      ctx.arc(sx, sy, witness.r * view.scale, 0, 2 * Math.PI);
      ctx.setLineDash([6, 4]);
      ctx.strokeStyle = "#2980b9";
      ctx.lineWidth = 1.5;
      ctx.stroke();
      ctx.setLineDash([]);
    }
  }

  for (const p of state.P) drawDot(ctx, view, p, "#2c3e50", 5);
  for (const q of state.Q) drawDot(ctx, view, q, "#e74c3c", 5);
  if (scene.suggestion) {
    for (const s of scene.suggestion.Q.points) {
      drawDot(
        ctx,
        view,
        { x: parseRational(s.x), y: parseRational(s.y), rx: s.x, ry: s.y },
        "rgba(231, 76, 60, 0.45)",
        6,
      );
    }
  }
}

function drawDot(
  ctx: CanvasRenderingContext2D,
  view: Viewport,
  p: Pt,
  color: string,
  radius: number,
): void {
  const [sx, sy] = toScreen(view, p.x, p.y);
  ctx.beginPath();
  ctx.arc(sx, sy, radius, 0, 2 * Math.PI);
  ctx.fillStyle = color;
  ctx.fill();
}

/** Display-only reconstruction of one empty witness circle for a hovered
 * Delaunay edge, from the server-reported bisector-parameter interval:
 * center(c) = midpoint + c * rot90(q - p). Picks a parameter inside the
 * interval (midpoint of finite ends, else the finite end, else 0). */
export function witnessCircleForEdge(
  state: SessionState,
  edgeIndex: number,
): { cx: number; cy: number; r: number } | null {
  const d = state.scene.delaunay;
  if (!d || edgeIndex < 0 || edgeIndex >= d.edges.length) return null;
  const itv = d.witness_intervals[edgeIndex];
  if (!itv || itv.empty) return null;
  const [ia, ib] = d.edges[edgeIndex];
  const a = state.P[ia];
  const b = state.P[ib];
  if (!a || !b) return null;
  const lo = itv.lo === "-inf" ? null : parseRational(itv.lo);
  const hi = itv.hi === "+inf" ? null : parseRational(itv.hi);
  const c = lo !== null && hi !== null ? (lo + hi) / 2 : lo ?? hi ?? 0;
  const mx = (a.x + b.x) / 2;
  const my = (a.y + b.y) / 2;
  const nx = -(b.y - a.y);
  const ny = b.x - a.x;
  const cx = mx + c * nx;
  const cy = my + c * ny;
  return { cx, cy, r: Math.hypot(a.x - cx, a.y - cy) };
}

/** Float convex hull for display only; verdicts always come from the server. */
export function convexHullFloat(points: Pt[]): Pt[] {
  const pts = [...points].sort((a, b) => a.x - b.x || a.y - b.y);
  const cross = (o: Pt, a: Pt, b: Pt) =>
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  const build = (input: Pt[]) => {
    const chain: Pt[] = [];
    for (const p of input) {
      while (chain.length >= 2 && cross(chain[chain.length - 2], chain[chain.length - 1], p) <= 0) {
        chain.pop();
      }
      chain.push(p);
    }
    return chain;
  };
  const lower = build(pts);
  const upper = build([...pts].reverse());
  return lower.slice(0, -1).concat(upper.slice(0, -1));
}
