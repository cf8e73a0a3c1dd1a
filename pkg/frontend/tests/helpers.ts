/**
 * Test helpers: fixture loading and a fetch stub routing to canned
 * service responses, so the suite runs without the Python service.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf-8")) as T;
}

export interface Route {
  match: (url: string, body: unknown) => boolean;
  payload: unknown;
  status?: number;
}

export function fakeFetch(routes: Route[]): FetchLike & { calls: string[] } {
  const calls: string[] = [];
  const fn = (async (url: string, init?: RequestInit) => {
    calls.push(url);
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    for (const route of routes) {
      if (route.match(url, body)) {
        return new Response(JSON.stringify(route.payload), {
          status: route.status ?? 200,
          headers: { "Content-Type": "application/json" },
        });
      }
    }
    return new Response(JSON.stringify({ error: `no route for ${url}` }), {
      status: 404,
    });
  }) as FetchLike & { calls: string[] };
  fn.calls = calls;
  return fn;
}

/** Maturity of the first loan in a posted scenario body. */
export function bodyMaturity(body: unknown): number | undefined {
  const cfg = body as { debt?: { loans?: Array<{ n_installments: number }> } };
  return cfg.debt?.loans?.[0]?.n_installments;
}
