/**
 * Typed client for the crediteq HTTP service.
 *
 * Solve-style calls are issued through a token guard: each panel keeps a
 * single in-flight request, and responses arriving after a newer request
 * was started are discarded.
 */

import type {
  CompareReport,
  EquilibriumReport,
  FcfSummary,
  PresetMap,
  ScenarioConfig,
} from "./types.js";

export class ServiceError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function request<T>(
  fetchFn: FetchLike,
  url: string,
  init?: RequestInit,
): Promise<T> {
  const resp = await fetchFn(url, init);
  const body = await resp.json().catch(() => ({}));
  if (!resp.ok) {
    const detail =
      typeof body === "object" && body !== null && "error" in body
        ? String((body as { error: unknown }).error)
        : resp.statusText;
    throw new ServiceError(detail, resp.status);
  }
  return body as T;
}

function post(config: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(config),
  };
}

export class ApiClient {
  constructor(
    readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  solve(config: ScenarioConfig): Promise<EquilibriumReport> {
    return request(this.fetchFn, `${this.baseUrl}/api/scenario/solve`, post(config));
  }

  compare(base: ScenarioConfig, variant: ScenarioConfig): Promise<CompareReport> {
    return request(
      this.fetchFn,
      `${this.baseUrl}/api/scenario/compare`,
      post({ base, variant }),
    );
  }

  fcf(config: ScenarioConfig): Promise<FcfSummary> {
    return request(this.fetchFn, `${this.baseUrl}/api/scenario/fcf`, post(config));
  }

  presets(): Promise<PresetMap> {
    return request(this.fetchFn, `${this.baseUrl}/api/presets`);
  }
}

/**
 * Serialises solve requests for one panel: only the latest response is
 * delivered; superseded responses resolve to null.
 */
export class LatestRequestGate {
  private token = 0;

  async run<T>(job: () => Promise<T>): Promise<T | null> {
    const mine = ++this.token;
    const result = await job();
    return mine === this.token ? result : null;
  }

  /** Invalidate anything currently in flight. */
  cancel(): void {
    this.token++;
  }
}
