/** Shared test scaffolding: a scripted fetch stub and DOM wait utilities. */

import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";

export interface Call {
  method: string;
  path: string;
  query: URLSearchParams;
  body: unknown;
  headers: Record<string, string>;
}

export type Reply = unknown | [number, unknown];

export interface FakeService {
  impl: (input: string, init?: RequestInit) => Promise<Response>;
  calls: Call[];
}

/**
 * Build a fetch stand-in driven by a `${method} ${path}` handler. The handler
 * returns a JSON body (200) or a `[status, body]` pair; an unhandled route
 * rejects loudly so tests never silently pass on a missed request.
 */
export function fakeService(handle: (call: Call) => Reply): FakeService {
  const calls: Call[] = [];
  const impl = async (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input, "http://stub.test");
    const call: Call = {
      method: init?.method ?? "GET",
      path: url.pathname,
      query: url.searchParams,
      body: init?.body ? JSON.parse(String(init.body)) : undefined,
      headers: (init?.headers as Record<string, string>) ?? {},
    };
    calls.push(call);
    const reply = handle(call);
    if (reply === undefined) {
      throw new Error(`unhandled request: ${call.method} ${call.path}`);
    }
    const isPair =
      Array.isArray(reply) &&
      reply.length === 2 &&
      typeof reply[0] === "number" &&
      reply[0] >= 100;
    const [status, body] = isPair ? (reply as [number, unknown]) : [200, reply];
    return new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });
  };
  return { impl, calls };
}

/** Mount a fresh App over the scripted service and finish the first render. */
export async function mountApp(service: FakeService): Promise<App> {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app") as HTMLElement;
  const client = new ApiClient("", service.impl);
  const app = new App(root, client);
  await app.start();
  return app;
}

/** Poll until `probe` returns a value (DOM changes from async handlers). */
export async function waitFor<T>(probe: () => T | null | undefined, timeoutMs = 3000): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    const found = probe();
    if (found !== null && found !== undefined) return found;
    if (Date.now() > deadline) throw new Error("waitFor timed out");
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
}

export function submitForm(form: HTMLFormElement): void {
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

export function typeInto(field: HTMLTextAreaElement | HTMLInputElement, text: string): void {
  field.value = text;
  field.dispatchEvent(new Event("input", { bubbles: true }));
}
