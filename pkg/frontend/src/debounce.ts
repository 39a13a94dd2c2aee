// Drag interactions must not flood the service: at most maxPerSecond calls,
// always ending with the latest state (trailing edge wins).

export class RateLimiter {
  private last = 0;
  private pending: (() => void) | null = null;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private readonly interval: number;

  constructor(maxPerSecond = 10, private now: () => number = Date.now) {
    this.interval = 1000 / maxPerSecond;
  }

  /** Run op now if the budget allows, otherwise queue it; a newer op replaces
   * any queued one. */
  schedule(op: () => void): void {
    const t = this.now();
    const wait = this.last + this.interval - t;
    if (wait <= 0 && this.pending === null) {
      this.last = t;
      op();
      return;
    }
    this.pending = op;
    if (this.timer === null) {
      this.timer = setTimeout(() => this.flush(), Math.max(wait, 0));
    }
  }

  private flush(): void {
    this.timer = null;
    const op = this.pending;
    this.pending = null;
    if (op) {
      this.last = this.now();
      op();
    }
  }

  cancel(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.pending = null;
  }
}
