/** Shared test plumbing: a fetch stub routed through recorded fixture-server
 * payloads, call logging, and number-sweep utilities. */

import { readFileSync } from "node:fs";

// vitest runs with the frontend/ directory as cwd
export const PAYLOADS: Record<string, unknown> = JSON.parse(
  readFileSync("tests/fixtures/payloads.json", "utf-8"),
);

export interface FetchCall {
  method: string;
  url: string;
  body: unknown;
}

export interface FetchStub {
  calls: FetchCall[];
  /** Bodies served so far (the intercepted API responses). */
  responses: unknown[];
  /** Force the next POST /api/survey to fail with a network error. */
  failNextSurveyPost(): void;
  restore(): void;
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function installFetchStub(): FetchStub {
  const calls: FetchCall[] = [];
  const responses: unknown[] = [];
  let failSurveyPost = false;
  const original = globalThis.fetch;

  const serve = (body: unknown, status = 200): Response => {
    responses.push(body);
    return jsonResponse(body, status);
  };

  globalThis.fetch = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    calls.push({ method, url: path, body });

    if (method === "POST" && path === "/api/survey") {
      if (failSurveyPost) {
        failSurveyPost = false;
        throw new TypeError("network down");
      }
      const key = `POST /api/survey ${JSON.stringify((body as { chosen_song_ids: string[] }).chosen_song_ids)}`;
      if (key in PAYLOADS) return serve(PAYLOADS[key]);
      return serve({ code: "invalid_survey_response", message: "unknown picks" }, 400);
    }

    const key = `GET ${path}`;
    if (key in PAYLOADS) return serve(PAYLOADS[key]);
    return serve({ code: "not_found", message: `no recorded payload for ${path}` }, 404);
  }) as typeof fetch;

  return {
    calls,
    responses,
    failNextSurveyPost() {
      failSurveyPost = true;
    },
    restore() {
      globalThis.fetch = original;
    },
  };
}

/** Let queued promise callbacks and timers run. */
export async function flush(rounds = 12): Promise<void> {
  for (let i = 0; i < rounds; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

/** Poll until the predicate holds (real I/O needs wall time, not just ticks). */
export async function waitFor(predicate: () => boolean, timeoutMs = 15000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    if (predicate()) return;
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
  if (!predicate()) throw new Error("condition not met within " + timeoutMs + "ms");
}

/** Every number appearing anywhere in the given payloads, as String(n). */
export function payloadNumberSet(payloads: Iterable<unknown>): Set<string> {
  const numbers = new Set<string>();
  const walk = (value: unknown): void => {
    if (typeof value === "number") {
      numbers.add(String(value));
    } else if (Array.isArray(value)) {
      value.forEach(walk);
    } else if (value && typeof value === "object") {
      Object.values(value).forEach(walk);
    }
  };
  for (const payload of payloads) walk(payload);
  return numbers;
}

/** Text of every element the renderers marked as a metric. */
export function renderedMetrics(root: Element): string[] {
  return [...root.querySelectorAll("[data-metric]")].map(
    (node) => (node.textContent ?? "").trim(),
  );
}

/** Decimal-looking tokens in all visible text (feature values and the like). */
export function decimalTokens(root: Element): string[] {
  const text = root.textContent ?? "";
  return text.match(/-?\d+\.\d+/g) ?? [];
}
