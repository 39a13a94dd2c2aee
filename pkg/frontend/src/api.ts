// Thin client over the /api/v1 endpoints with a replay log: every call and
// the exact response text are recorded, so a session can be re-driven against
// a server build and compared byte for byte.

import type {
  ApiEnvelope,
  BlocksResult,
  ConstructResult,
  DelaunayResult,
  JsonPointSet,
  SolveResult,
} from "./types.js";

export interface LogEntry {
  op: string;
  request: string; // exact request body text
  response: string; // exact response body text
  status: number;
}

export type FetchLike = (url: string, init: {
  method: string;
  headers: Record<string, string>;
  body?: string;
  signal?: AbortSignal;
}) => Promise<{ status: number; text(): Promise<string> }>;

export class ApiClient {
  readonly log: LogEntry[] = [];
  private inflight: AbortController | null = null;

  constructor(
    private baseUrl: string,
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  /** Canonical body text: stable key order so replays are byte-identical. */
  static canonical(body: unknown): string {
    const sort = (v: unknown): unknown => {
      if (Array.isArray(v)) return v.map(sort);
      if (v && typeof v === "object") {
        const out: Record<string, unknown> = {};
        for (const k of Object.keys(v as Record<string, unknown>).sort()) {
          out[k] = sort((v as Record<string, unknown>)[k]);
        }
        return out;
      }
      return v;
    };
    return JSON.stringify(sort(body));
  }

  async call<T>(op: string, body: unknown, cancelPrevious = false): Promise<T> {
    if (cancelPrevious) {
      this.inflight?.abort();
      this.inflight = new AbortController();
    }
    const request = ApiClient.canonical(body);
    const resp = await this.fetchImpl(`${this.baseUrl}/api/v1/${op}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: request,
      signal: cancelPrevious ? this.inflight!.signal : undefined,
    });
    const text = await resp.text();
    this.log.push({ op, request, response: text, status: resp.status });
    const envelope = JSON.parse(text) as ApiEnvelope<T>;
    if (!envelope.ok || envelope.result === undefined) {
      throw new ApiError(envelope.error?.code ?? "Unknown", envelope.error?.message ?? text);
    }
    return envelope.result;
  }

  delaunay(ps: JsonPointSet): Promise<DelaunayResult> {
    return this.call("delaunay", ps, true);
  }

  blocks(P: JsonPointSet, Q: JsonPointSet, exteriorOnly: boolean): Promise<BlocksResult> {
    return this.call("blocks", { P, Q, exterior_only: exteriorOnly }, true);
  }

  construct(kind: string, k: number, tau?: string): Promise<ConstructResult> {
    const body: Record<string, unknown> = { kind, k };
    if (tau !== undefined) body.tau = tau;
    return this.call("construct", body);
  }

  solve(P: JsonPointSet, exteriorOnly: boolean): Promise<SolveResult> {
    return this.call("solve", { P, exterior_only: exteriorOnly });
  }

  /** The response bytes in call order: the replay comparison artifact. */
  responseLog(): string[] {
    return this.log.map((e) => `${e.op} ${e.status} ${e.response}`);
  }
}

export class ApiError extends Error {
  constructor(public code: string, message: string) {
    super(`${code}: ${message}`);
  }
}
