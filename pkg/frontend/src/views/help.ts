/** Help pages served by the translation service. */

import type { App } from "../app.js";
import { el } from "../dom.js";

export async function renderHelp(app: App, page?: string): Promise<HTMLElement> {
  if (page) {
    const content = await app.client.helpPage(page);
    return el(
      "section",
      {},
      el("h2", {}, `Help: ${page}`),
      el("p", { class: "muted" }, app.navLink("All help pages", { kind: "help" })),
      el("pre", { class: "help-page", "data-role": "help-content" }, content),
    );
  }

  const pages = await app.client.helpIndex();
  const box = el("section", {}, el("h2", {}, "Help"));
  const list = el("ul", { "data-role": "help-pages" });
  for (const name of pages) {
    list.append(el("li", {}, app.navLink(name, { kind: "help", page: name })));
  }
  box.append(list);
  return box;
}
