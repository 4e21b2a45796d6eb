/**
 * Debounced what-if dispatch with at most one outstanding request.
 *
 * Slider drags fire many state changes; they collapse into one request per
 * quiet 150 ms window. While a request is in flight, newer bodies are not
 * sent; they supersede each other in a one-slot queue (last write wins)
 * and the newest is dispatched when the in-flight request settles. Each
 * dispatch carries a sequence number and a response is ignored unless it is
 * newer than the last applied one, so a stale answer can never overwrite a
 * fresher view. The busy callback drives the stale-state indicator.
 */

export const DEBOUNCE_MS = 150;

export interface SchedulerCallbacks<T> {
  onResult: (result: T) => void;
  onError: (error: unknown) => void;
  /** True while a request is outstanding. */
  onBusy?: (busy: boolean) => void;
}

export class RequestScheduler<B, T> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private nextSeq = 0;
  private appliedSeq = 0;
  private outstanding = 0;
  private pendingBody: B | null = null;
  private lastBusyNotified = false;

  constructor(
    private readonly send: (body: B) => Promise<T>,
    private readonly callbacks: SchedulerCallbacks<T>,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  /** Schedule a request; a newer body supersedes any queued one. */
  request(body: B): void {
    this.pendingBody = body;
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => void this.fire(), this.debounceMs);
  }

  /** Dispatch the queued request immediately (initial load, tests). */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    void this.fire();
  }

  get busy(): boolean {
    return this.outstanding > 0;
  }

  /** Notify only on actual busy-state changes (no flicker, no duplicates). */
  private notifyBusy(): void {
    if (this.busy !== this.lastBusyNotified) {
      this.lastBusyNotified = this.busy;
      this.callbacks.onBusy?.(this.busy);
    }
  }

  private async fire(): Promise<void> {
    this.timer = null;
    if (this.pendingBody === null || this.outstanding > 0) {
      // nothing to send, or one request already in flight: the queued body
      // waits and the freshest one is dispatched on settle
      return;
    }
    const body = this.pendingBody;
    this.pendingBody = null;
    const seq = ++this.nextSeq;
    this.outstanding += 1;
    this.notifyBusy();
    try {
      const result = await this.send(body);
      if (seq > this.appliedSeq) {
        this.appliedSeq = seq;
        this.callbacks.onResult(result);
      }
    } catch (error) {
      if (seq > this.appliedSeq) {
        // errors do not advance the sequence; the next dispatch retries
        this.callbacks.onError(error);
      }
    } finally {
      this.outstanding -= 1;
      if (this.pendingBody !== null && this.timer === null) {
        void this.fire(); // runs synchronously up to its await, so busy
        // stays true across the chained dispatch without flicker
      }
      this.notifyBusy();
    }
  }
}
