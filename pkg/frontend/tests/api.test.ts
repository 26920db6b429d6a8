import { describe, expect, it } from "vitest";

import { ApiError, Client, FetchLike } from "../src/api.js";

function mockFetch(
  handler: (url: string, init?: RequestInit) => { status: number; body: unknown },
): { fetch: FetchLike; calls: { url: string; init?: RequestInit }[] } {
  const calls: { url: string; init?: RequestInit }[] = [];
  const fetchImpl: FetchLike = async (url, init) => {
    calls.push({ url, init });
    const { status, body } = handler(url, init);
    return {
      ok: status >= 200 && status < 300,
      status,
      statusText: String(status),
      json: async () => body,
    } as Response;
  };
  return { fetch: fetchImpl, calls };
}

describe("Client", () => {
  it("posts documents to /api/v1/analyze", async () => {
    const { fetch: f, calls } = mockFetch(() => ({ status: 200, body: { ok: 1 } }));
    const client = new Client("http://svc", f);
    await client.analyze({ dim: 2, degree: 1, cells: [], signs: {} });
    expect(calls[0].url).toBe("http://svc/api/v1/analyze");
    expect(calls[0].init?.method).toBe("POST");
    const sent = JSON.parse(String(calls[0].init?.body));
    expect(sent.degree).toBe(1);
  });

  it("builds invariants query strings", async () => {
    const { fetch: f, calls } = mockFetch(() => ({ status: 200, body: {} }));
    const client = new Client("http://svc", f);
    await client.invariants(3, 4);
    expect(calls[0].url).toBe("http://svc/api/v1/invariants?n=3&d=4");
  });

  it("unwraps the examples listing", async () => {
    const { fetch: f } = mockFetch(() => ({
      status: 200,
      body: { examples: [{ id: "d3-mcurve", dim: 2, degree: 3, description: "" }] },
    }));
    const client = new Client("http://svc", f);
    const ex = await client.examples();
    expect(ex.length).toBe(1);
    expect(ex[0].id).toBe("d3-mcurve");
  });

  it("raises structured errors on 4xx", async () => {
    const { fetch: f } = mockFetch(() => ({
      status: 400,
      body: { code: "invalid-argument", message: "bad document", pointer: "/" },
    }));
    const client = new Client("http://svc", f);
    await expect(client.analyze({ dim: 2, degree: 1, cells: [], signs: {} })).rejects.toThrow(
      ApiError,
    );
    try {
      await client.analyze({ dim: 2, degree: 1, cells: [], signs: {} });
    } catch (err) {
      expect((err as ApiError).code).toBe("invalid-argument");
      expect((err as ApiError).status).toBe(400);
    }
  });
});
