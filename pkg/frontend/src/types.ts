// Mirrors of the service's JSON schemas. Rationals travel as "num/den" strings.

export interface JsonPoint {
  x: string;
  y: string;
  label?: string;
}

export interface JsonPointSet {
  points: JsonPoint[];
}

export interface JsonCircle {
  role: string;
  gadget: number;
  center: { x: string; y: string };
  radius_sq: string;
}

export interface WitnessInterval {
  edge: [number, number];
  empty: boolean;
  lo: string;
  hi: string;
  lo_closed: boolean;
  hi_closed: boolean;
}

export interface DelaunayResult {
  edges: [number, number][];
  witness_intervals: WitnessInterval[];
}

export type VerdictStatus = "blocked" | "unblocked" | "exterior_violation";

export interface BlocksResult {
  verdict: VerdictStatus;
  unblocked_edges?: [number, number][];
  violating_points?: number[];
}

export interface ConstructResult extends JsonPointSet {
  circles?: JsonCircle[];
}

export interface SolveResult {
  Q: JsonPointSet;
  verified: boolean;
  size: number;
  unblocked_history: number[];
  rounds: number;
}

export interface ApiEnvelope<T> {
  ok: boolean;
  result?: T;
  error?: { code: string; message: string };
}

export interface Pt {
  x: number; // float mirror for canvas work only
  y: number;
  rx: string; // exact rational the server sees
  ry: string;
}
