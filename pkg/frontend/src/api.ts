// Thin typed client over the service's HTTP/JSON API. The fetch function is
// injectable so tests can intercept traffic without a server.

import type {
  JobView,
  SessionExport,
  SessionView,
  SurrogateQuery,
  SurrogateResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type JobKind = "sweep" | "bootstrap" | "path";

export interface Sleeper {
  (ms: number): Promise<void>;
}

const realSleep: Sleeper = (ms) => new Promise((res) => setTimeout(res, ms));

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
    private readonly sleep: Sleeper = realSleep,
  ) {}

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(this.base + path, {
        method,
        headers: body === undefined ? undefined : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (exc) {
      throw new ApiError("network", String(exc), 0);
    }
    const payload = await response.json();
    if (!response.ok || (payload && typeof payload === "object" && "error" in payload)) {
      const err = (payload as { error?: { code?: string; message?: string } }).error;
      throw new ApiError(err?.code ?? "http_error", err?.message ?? response.statusText, response.status);
    }
    return payload as T;
  }

  health(): Promise<{ status: string }> {
    return this.call("GET", "/healthz");
  }

  createSession(body: unknown): Promise<SessionView> {
    return this.call("POST", "/sessions", body);
  }

  getSession(id: string): Promise<SessionView> {
    return this.call("GET", `/sessions/${id}`);
  }

  querySurrogate(id: string, query: SurrogateQuery): Promise<SurrogateResponse> {
    return this.call("POST", `/sessions/${id}/surrogate`, query);
  }

  submitJob(id: string, kind: JobKind, params: Record<string, unknown>): Promise<{ job_id: string; status: string }> {
    return this.call("POST", `/sessions/${id}/jobs/${kind}`, params);
  }

  getJob(jobId: string): Promise<JobView> {
    return this.call("GET", `/jobs/${jobId}`);
  }

  exportSession(id: string): Promise<SessionExport> {
    return this.call("GET", `/sessions/${id}/export`);
  }

  importSession(record: SessionExport): Promise<SessionView> {
    return this.call("POST", "/sessions/import", record);
  }

  // Submit and poll until the job settles; onProgress sees every poll.
  async runJob<T>(
    id: string,
    kind: JobKind,
    params: Record<string, unknown>,
    onProgress?: (progress: number, status: string) => void,
    pollMs = 150,
  ): Promise<T> {
    const { job_id } = await this.submitJob(id, kind, params);
    for (;;) {
      const job = await this.getJob(job_id);
      onProgress?.(job.progress, job.status);
      if (job.status === "done") return job.result as T;
      if (job.status === "failed") {
        const err = job.error;
        throw new ApiError(err?.code ?? "analysis_error", err?.message ?? "job failed", 200);
      }
      await this.sleep(pollMs);
    }
  }
}
