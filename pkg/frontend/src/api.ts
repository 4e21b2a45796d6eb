/**
 * Thin fetch client for the query service.
 *
 * Responses keep their raw body text alongside the parsed JSON so callers
 * can compare service answers byte-for-byte (the UI's displayed numbers are
 * those bytes, never local arithmetic).
 */

import type {
  ApiError,
  DatasetDoc,
  ScoreResponse,
  SweepBody,
  SweepResponse,
  WhatIfBody,
} from "./types";

export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly detail: ApiError,
  ) {
    super(detail.error);
  }
}

export class ServiceUnreachable extends Error {
  constructor(cause: unknown) {
    super(`service unreachable: ${String(cause)}`);
  }
}

export interface ApiResult<T> {
  /** Parsed payload. */
  data: T;
  /** Exact response body, for bit-for-bit comparisons. */
  text: string;
}

export class ApiClient {
  constructor(
    readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<ApiResult<T>> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (cause) {
      throw new ServiceUnreachable(cause);
    }
    const text = await response.text();
    if (!response.ok) {
      let detail: ApiError;
      try {
        detail = JSON.parse(text) as ApiError;
      } catch {
        detail = { error: text || response.statusText };
      }
      throw new ServiceError(response.status, detail);
    }
    return { data: JSON.parse(text) as T, text };
  }

  getDataset(): Promise<ApiResult<DatasetDoc>> {
    return this.request<DatasetDoc>("/api/v1/dataset");
  }

  getScore(profile = "default"): Promise<ApiResult<ScoreResponse>> {
    return this.request<ScoreResponse>(`/api/v1/score?profile=${encodeURIComponent(profile)}`);
  }

  postWhatIf(body: WhatIfBody): Promise<ApiResult<ScoreResponse>> {
    return this.request<ScoreResponse>("/api/v1/whatif", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  postSweep(body: SweepBody): Promise<ApiResult<SweepResponse>> {
    return this.request<SweepResponse>("/api/v1/sweep", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }
}
