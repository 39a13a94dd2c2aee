// Rational snapping: every coordinate is pinned to num/den with a bounded
// denominator before it leaves the client, so the server's exact geometry and
// any replay of the call log see identical inputs.

export const DENOMINATOR_CAP = 1 << 16;

/** Best rational approximation with denominator <= cap (continued fractions). */
export function snap(value: number, cap: number = DENOMINATOR_CAP): [bigint, bigint] {
  if (!Number.isFinite(value)) throw new Error(`cannot snap ${value}`);
  const negative = value < 0 || Object.is(value, -0);
  let x = Math.abs(value);
  // Convergents p/q of the continued fraction of x.
  let p0 = 0n, q0 = 1n, p1 = 1n, q1 = 0n;
  let rest = x;
  for (let i = 0; i < 64; i++) {
    const a = BigInt(Math.floor(rest));
    const p2 = a * p1 + p0;
    const q2 = a * q1 + q0;
    if (q2 > BigInt(cap)) {
      // Largest semiconvergent still under the cap.
      const k = (BigInt(cap) - q0) / q1;
      const ps = k * p1 + p0;
      const qs = k * q1 + q0;
      const better =
        qs > 0n &&
        Math.abs(x - Number(ps) / Number(qs)) < Math.abs(x - Number(p1) / Number(q1));
      const [pn, qn] = better ? [ps, qs] : [p1, q1];
      return [negative ? -pn : pn, qn];
    }
    [p0, q0, p1, q1] = [p1, q1, p2, q2];
    const frac = rest - Math.floor(rest);
    if (frac < 1e-15) break;
    rest = 1 / frac;
  }
  return [negative ? -p1 : p1, q1];
}

export function formatRational(num: bigint, den: bigint): string {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num < 0n ? -num : num, den);
  return `${num / (g || 1n)}/${den / (g || 1n)}`;
}

export function snapToString(value: number, cap: number = DENOMINATOR_CAP): string {
  const [num, den] = snap(value, cap);
  return formatRational(num, den);
}

export function parseRational(text: string): number {
  const parts = text.split("/");
  if (parts.length === 1) return Number(parts[0]);
  if (parts.length !== 2) throw new Error(`bad rational ${text}`);
  const num = Number(parts[0]);
  const den = Number(parts[1]);
  if (!Number.isFinite(num) || !Number.isFinite(den) || den === 0) {
    throw new Error(`bad rational ${text}`);
  }
  return num / den;
}

function gcd(a: bigint, b: bigint): bigint {
  while (b) {
    [a, b] = [b, a % b];
  }
  return a < 0n ? -a : a;
}
