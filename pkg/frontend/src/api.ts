// Thin client for the patchwork service. Every number shown in the UI
// originates from these responses; nothing topological is computed here.

import { AnalyzeResponse, BuildResponse, ExampleInfo, PatchworkDocument } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
  ) {
    super(message);
  }
}

export class Client {
  constructor(
    private base: string = "http://127.0.0.1:8787",
    private fetchImpl: FetchLike = (u, i) => fetch(u, i),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(this.base + path, init);
    const body = await res.json();
    if (!res.ok) {
      throw new ApiError(body.code ?? "error", body.message ?? res.statusText, res.status);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  analyze(doc: PatchworkDocument): Promise<AnalyzeResponse> {
    return this.post<AnalyzeResponse>("/api/v1/analyze", doc);
  }

  build(doc: PatchworkDocument): Promise<BuildResponse> {
    return this.post<BuildResponse>("/api/v1/build", doc);
  }

  regularity(doc: PatchworkDocument): Promise<Record<string, unknown>> {
    return this.post("/api/v1/regularity", doc);
  }

  async examples(): Promise<ExampleInfo[]> {
    const body = await this.request<{ examples: ExampleInfo[] }>("/api/v1/examples");
    return body.examples;
  }

  example(id: string): Promise<PatchworkDocument> {
    return this.request<PatchworkDocument>(`/api/v1/examples/${id}`);
  }

  invariants(n: number, d: number): Promise<Record<string, unknown>> {
    return this.request(`/api/v1/invariants?n=${n}&d=${d}`);
  }
}
