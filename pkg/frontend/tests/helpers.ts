// Replays recorded service responses through a fetch stub and keeps every
// body that went over the wire, so tests can cross-check displayed values
// against intercepted traffic.

import { readFileSync } from "node:fs";
import { join } from "node:path";

import type { FetchLike } from "../src/api.js";

export function fixture<T = any>(name: string): T {
  const path = join(process.cwd(), "tests", "fixtures", `${name}.json`);
  return JSON.parse(readFileSync(path, "utf-8"));
}

// Python prints integral floats with a trailing ".0"; JavaScript does not.
export function radiusKey(radius: number): string {
  return Number.isInteger(radius) ? `${radius}.0` : String(radius);
}

export interface InterceptedFetch {
  fetchFn: FetchLike;
  responses: unknown[]; // parsed body of every reply the stub produced
  requests: { url: string; body: unknown }[];
}

export function fixtureFetch(): InterceptedFetch {
  const session = fixture("session");
  const surrogate = fixture("surrogate_by_radius");
  const jobs: Record<string, unknown> = {
    sweep: fixture("sweep_job"),
    bootstrap: fixture("bootstrap_job"),
    path: fixture("path_job"),
  };
  const responses: unknown[] = [];
  const requests: { url: string; body: unknown }[] = [];

  const reply = (body: unknown, status = 200): Response => {
    responses.push(body);
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  };

  const fetchFn: FetchLike = async (url, init) => {
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    requests.push({ url, body });
    if (url.endsWith("/sessions") || url.endsWith("/sessions/import")) {
      return reply(session);
    }
    if (url.endsWith("/surrogate")) {
      const recorded = surrogate[radiusKey(body.radius)];
      if (recorded === undefined) {
        return reply({ error: { code: "invalid_config", message: `no fixture for radius ${body.radius}` } }, 400);
      }
      return reply(recorded, "error" in recorded ? 400 : 200);
    }
    const jobSubmit = url.match(/\/jobs\/(\w+)$/);
    if (jobSubmit) {
      return reply({ job_id: `job-${jobSubmit[1]}`, status: "pending" });
    }
    const jobPoll = url.match(/\/jobs\/job-(\w+)$/);
    if (jobPoll) {
      return reply(jobs[jobPoll[1]]);
    }
    if (url.endsWith("/export")) {
      return reply(fixture("export"));
    }
    return reply({ error: { code: "not_found", message: `no stub for ${url}` } }, 404);
  };

  return { fetchFn, responses, requests };
}

// Every number reachable in the intercepted bodies, keyed SameValueZero.
export function collectNumbers(values: unknown[]): Set<number> {
  const out = new Set<number>();
  const walk = (value: unknown): void => {
    if (typeof value === "number") out.add(value);
    else if (Array.isArray(value)) value.forEach(walk);
    else if (value !== null && typeof value === "object") {
      Object.values(value).forEach(walk);
    }
  };
  values.forEach(walk);
  return out;
}

export function displayedNumbers(root: ParentNode): string[] {
  return Array.from(root.querySelectorAll(".num"))
    .map((el) => el.textContent?.trim() ?? "")
    .filter((text) => text !== "" && text !== "n/a");
}
