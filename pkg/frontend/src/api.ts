import type { EvaluateRequest, EvaluateResponse, Preset } from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`service returned ${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin client over the evaluation service; all numbers come from here. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  private async parseFailure(resp: Response): Promise<never> {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    } catch {
      /* keep the status text */
    }
    throw new ApiError(resp.status, detail);
  }

  async presets(): Promise<Preset[]> {
    const resp = await this.fetchFn(this.url("/api/presets"));
    if (!resp.ok) await this.parseFailure(resp);
    const payload = await resp.json();
    return payload.presets as Preset[];
  }

  async evaluate(request: EvaluateRequest, signal?: AbortSignal): Promise<EvaluateResponse> {
    const resp = await this.fetchFn(this.url("/api/evaluate"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(request),
      signal,
    });
    if (!resp.ok) await this.parseFailure(resp);
    return (await resp.json()) as EvaluateResponse;
  }
}

/** Service location: `?api=` query override, else same-host default port. */
export function defaultBaseUrl(loc?: { search: string; protocol: string; hostname: string }): string {
  if (loc) {
    const fromQuery = new URLSearchParams(loc.search).get("api");
    if (fromQuery) return fromQuery;
    if (loc.protocol.startsWith("http") && loc.hostname) {
      return `${loc.protocol}//${loc.hostname}:8000`;
    }
  }
  return "http://127.0.0.1:8000";
}
