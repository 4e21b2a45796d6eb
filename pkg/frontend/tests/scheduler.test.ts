import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { DEBOUNCE_MS, RequestScheduler } from "../src/scheduler";

describe("debounced request scheduler", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("collapses a burst of requests into one send after 150 ms", async () => {
    const sent: number[] = [];
    const scheduler = new RequestScheduler<number, number>(
      async (body) => {
        sent.push(body);
        return body;
      },
      { onResult: () => {}, onError: () => {} },
    );
    scheduler.request(1);
    scheduler.request(2);
    vi.advanceTimersByTime(DEBOUNCE_MS - 1);
    scheduler.request(3); // restarts the quiet window
    vi.advanceTimersByTime(DEBOUNCE_MS - 1);
    expect(sent).toEqual([]);
    await vi.advanceTimersByTimeAsync(1);
    expect(sent).toEqual([3]);
  });

  it("keeps at most one request outstanding and supersedes queued bodies", async () => {
    const sent: number[] = [];
    const applied: number[] = [];
    const resolvers: ((value: number) => void)[] = [];
    const scheduler = new RequestScheduler<number, number>(
      (body) => {
        sent.push(body);
        return new Promise((resolve) => resolvers.push((v) => resolve(v)));
      },
      { onResult: (r) => applied.push(r), onError: () => {} },
    );

    scheduler.request(1);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(sent).toEqual([1]);

    // while 1 is in flight, 2 then 3 arrive: only the newest may ever be sent
    scheduler.request(2);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    scheduler.request(3);
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(sent).toEqual([1]);

    resolvers[0]!(1);
    await vi.runAllTimersAsync();
    expect(sent).toEqual([1, 3]); // 2 was superseded without being sent
    resolvers[1]!(3);
    await vi.runAllTimersAsync();
    expect(applied).toEqual([1, 3]);
  });

  it("reports busy while a request is outstanding, without flicker across a chained dispatch", async () => {
    const transitions: boolean[] = [];
    const resolvers: ((value: string) => void)[] = [];
    const scheduler = new RequestScheduler<string, string>(
      () => new Promise((resolve) => resolvers.push(resolve)),
      { onResult: () => {}, onError: () => {}, onBusy: (b) => transitions.push(b) },
    );
    scheduler.request("a");
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(transitions).toEqual([true]);

    scheduler.request("b"); // queued behind the in-flight request
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    resolvers[0]!("a");
    await vi.runAllTimersAsync();
    // the chained dispatch keeps busy true with no intermediate transition
    expect(transitions).toEqual([true]);
    resolvers[1]!("b");
    await vi.runAllTimersAsync();
    expect(transitions).toEqual([true, false]);
  });

  it("routes failures to onError but lets newer results supersede them", async () => {
    const events: string[] = [];
    let fail = true;
    const scheduler = new RequestScheduler<string, string>(
      async (body) => {
        if (fail) {
          throw new Error("boom");
        }
        return body;
      },
      { onResult: (r) => events.push(`ok:${r}`), onError: () => events.push("err") },
    );
    scheduler.request("first");
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    fail = false;
    scheduler.request("second");
    await vi.advanceTimersByTimeAsync(DEBOUNCE_MS);
    expect(events).toEqual(["err", "ok:second"]);
  });

  it("flush fires the queued request immediately", async () => {
    const sent: string[] = [];
    const scheduler = new RequestScheduler<string, string>(
      async (body) => {
        sent.push(body);
        return body;
      },
      { onResult: () => {}, onError: () => {} },
    );
    scheduler.request("now");
    scheduler.flush();
    await vi.runAllTimersAsync();
    expect(sent).toEqual(["now"]);
  });
});
