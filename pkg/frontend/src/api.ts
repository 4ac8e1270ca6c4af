/** Typed client for the session service. Pure transport: every string the
 * UI shows comes verbatim from these response payloads. */

export interface QuiverJson {
  v?: number;
  n: number;
  m: number;
  b: number[][];
}

export interface SeedJson {
  v?: number;
  quiver: QuiverJson;
  vars: string[];
}

export interface ExchangeJson {
  out: string;
  in: string;
}

export interface HistoryEntry {
  vertex: number | null;
  seed: SeedJson;
}

export interface SessionRecord {
  v: number;
  id: string;
  mode: "X" | "Y";
  seed: SeedJson;
  history: HistoryEntry[];
}

export interface MutateResponse {
  v: number;
  seed: SeedJson;
  exchange: ExchangeJson | null;
}

export interface NeighborPreview {
  vertex: number;
  denominator_vector: number[] | null;
}

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class SessionApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const message =
        typeof body === "object" && body !== null && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${response.status}`;
      throw new ApiError(response.status, message);
    }
    return body as T;
  }

  create(quiver: QuiverJson, mode: "X" | "Y"): Promise<{ id: string; seed: SeedJson }> {
    return this.request("/session", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ quiver, mode }),
    });
  }

  get(id: string): Promise<SessionRecord> {
    return this.request(`/session/${id}`);
  }

  mutate(id: string, vertex: number): Promise<MutateResponse> {
    return this.request(`/session/${id}/mutate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<{ seed: SeedJson }> {
    return this.request(`/session/${id}/undo`, { method: "POST" });
  }

  neighbors(id: string): Promise<{ neighbors: NeighborPreview[] }> {
    return this.request(`/session/${id}/neighbors`);
  }
}
