import type { HostSpec, SessionEnvelope } from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function request(method: "GET" | "POST", path: string, body?: unknown): Promise<SessionEnvelope> {
  const response = await fetch(path, {
    method,
    headers: body === undefined ? undefined : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = await response.json();
  if (!response.ok) {
    const error = payload?.error ?? { code: "unknown", message: `HTTP ${response.status}` };
    throw new ApiRequestError(response.status, error.code, error.message);
  }
  return payload as SessionEnvelope;
}

export class MontyClient {
  constructor(private base: string = "") {}

  createSession(host: HostSpec, prior?: string, seed?: number): Promise<SessionEnvelope> {
    const body: Record<string, unknown> = { host };
    if (prior !== undefined) body.prior = prior;
    if (seed !== undefined) body.seed = seed;
    return request("POST", `${this.base}/api/v1/session`, body);
  }

  pick(sessionId: string, door: number): Promise<SessionEnvelope> {
    return request("POST", `${this.base}/api/v1/session/${sessionId}/pick`, { door });
  }

  decide(sessionId: string, decision: "stay" | "switch"): Promise<SessionEnvelope> {
    return request("POST", `${this.base}/api/v1/session/${sessionId}/decision`, { decision });
  }

  getSession(sessionId: string): Promise<SessionEnvelope> {
    return request("GET", `${this.base}/api/v1/session/${sessionId}`);
  }
}
