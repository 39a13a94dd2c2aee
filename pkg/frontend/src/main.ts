// DOM wiring for the explorer: canvas interactions, gadget menu, overlay
// toggles, and the suggest-blockers button.

import { ApiClient } from "./api.js";
import { draw, fitViewport, toWorld, Viewport } from "./render.js";
import { SessionState } from "./session.js";

const canvas = document.getElementById("canvas") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const statusEl = document.getElementById("status")!;
const api = new ApiClient(window.location.origin);

let view: Viewport = { scale: 40, offsetX: canvas.width / 2, offsetY: canvas.height / 2 };
let dragging: { kind: "P" | "Q"; index: number } | null = null;

const state = new SessionState(api, undefined, (s) => {
  view = fitViewport(s, canvas.width, canvas.height);
  draw(ctx, s, view, canvas.width, canvas.height);
  const v = s.scene.verdict;
  statusEl.textContent = s.lastError
    ? `error: ${s.lastError}`
    : v
      ? v.verdict === "blocked"
        ? "BLOCKED: no two P-points are Delaunay-adjacent"
        : v.verdict === "exterior_violation"
          ? `exterior violation: Q point(s) ${v.violating_points} inside the hull`
          : `unblocked edges: ${v.unblocked_edges?.length}`
      : `${s.P.length} points, ${s.scene.delaunay?.edges.length ?? 0} Delaunay edges`;
  s.lastError = null;
});

function hitTest(x: number, y: number): { kind: "P" | "Q"; index: number } | null {
  const tol = 8 / view.scale;
  for (const [kind, arr] of [["Q", state.Q], ["P", state.P]] as const) {
    for (let i = 0; i < arr.length; i++) {
      if (Math.hypot(arr[i].x - x, arr[i].y - y) < tol) return { kind, index: i };
    }
  }
  return null;
}

canvas.addEventListener("mousedown", (ev) => {
  const [x, y] = toWorld(view, ev.offsetX, ev.offsetY);
  const hit = hitTest(x, y);
  if (state.mode === "drag" && hit) {
    dragging = hit;
  } else if (state.mode !== "drag") {
    state.addPoint(x, y);
  }
});

let hoveredEdge: number | null = null;

function edgeHitTest(x: number, y: number): number | null {
  const d = state.scene.delaunay;
  if (!d) return null;
  const tol = 6 / view.scale;
  for (let i = 0; i < d.edges.length; i++) {
    const [ia, ib] = d.edges[i];
    const a = state.P[ia];
    const b = state.P[ib];
    if (!a || !b) continue;
    const len2 = (b.x - a.x) ** 2 + (b.y - a.y) ** 2;
    if (len2 === 0) continue;
    const t = Math.max(0, Math.min(1, ((x - a.x) * (b.x - a.x) + (y - a.y) * (b.y - a.y)) / len2));
    const dist = Math.hypot(x - (a.x + t * (b.x - a.x)), y - (a.y + t * (b.y - a.y)));
    if (dist < tol) return i;
  }
  return null;
}

canvas.addEventListener("mousemove", (ev) => {
  const [x, y] = toWorld(view, ev.offsetX, ev.offsetY);
  if (dragging) {
    state.movePoint(dragging.kind, dragging.index, x, y);
    return;
  }
  const hit = edgeHitTest(x, y);
  if (hit !== hoveredEdge) {
    hoveredEdge = hit;
    draw(ctx, state, view, canvas.width, canvas.height, hoveredEdge);
  }
});

canvas.addEventListener("mouseup", () => {
  dragging = null;
});

for (const mode of ["place-P", "place-Q", "drag"] as const) {
  document.getElementById(`mode-${mode}`)!.addEventListener("click", () => {
    state.mode = mode;
    document
      .querySelectorAll(".mode-btn")
      .forEach((b) => b.classList.toggle("active", b.id === `mode-${mode}`));
  });
}

for (const overlay of ["delaunay", "witnesses", "hull", "circles"] as const) {
  const box = document.getElementById(`overlay-${overlay}`) as HTMLInputElement | null;
  box?.addEventListener("change", () => {
    state.overlays[overlay] = box.checked;
    draw(ctx, state, view, canvas.width, canvas.height);
  });
}

(document.getElementById("exterior") as HTMLInputElement).addEventListener("change", (ev) => {
  state.exteriorOnly = (ev.target as HTMLInputElement).checked;
  state.requestUpdate();
});

document.getElementById("load-gadget")!.addEventListener("click", () => {
  const kind = (document.getElementById("gadget-kind") as HTMLSelectElement).value;
  const k = Number((document.getElementById("gadget-k") as HTMLInputElement).value);
  void state.loadGadget(kind, k, kind === "c0prime" ? "1/65536" : undefined);
});

document.getElementById("suggest")!.addEventListener("click", () => {
  void state.suggestBlockers();
});

document.getElementById("adopt")!.addEventListener("click", () => {
  state.adoptSuggestion();
});

document.getElementById("clear")!.addEventListener("click", () => {
  state.clear();
});

document.getElementById("export-log")!.addEventListener("click", () => {
  const blob = new Blob([JSON.stringify(api.log, null, 2)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "session-log.json";
  a.click();
});

document.getElementById("export-session")!.addEventListener("click", () => {
  const blob = new Blob([state.exportSession()], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "session.json";
  a.click();
});

(document.getElementById("import-session") as HTMLInputElement).addEventListener(
  "change",
  async (ev) => {
    const file = (ev.target as HTMLInputElement).files?.[0];
    if (file) state.importSession(await file.text());
  },
);

draw(ctx, state, view, canvas.width, canvas.height);
