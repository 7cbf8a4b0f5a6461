// Typed client for the two server endpoints. All UI traffic goes through
// this module; there is no other API surface.

import type {
  ModelInfo,
  ModelsResponse,
  TranslateRequest,
  TranslateResponse,
} from "./types";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const payload = await response.json();
    if (payload && typeof payload.error === "string") {
      return payload.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${response.status}`;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async listModels(type?: string, source?: string): Promise<ModelInfo[]> {
    const params = new URLSearchParams();
    if (type) params.set("type", type);
    if (source) params.set("source", source);
    const query = params.toString();
    const url = `${this.baseUrl}/models${query ? `?${query}` : ""}`;
    const response = await this.fetchFn(url);
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    const payload = (await response.json()) as ModelsResponse;
    return payload.models;
  }

  async translate(request: TranslateRequest): Promise<TranslateResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/translate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ schema_version: 1, ...request }),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    return (await response.json()) as TranslateResponse;
  }
}
