/** Whole-page view: every item on a page in document order, with whatever
 * translations exist, so a snippet can be read in its full surroundings.
 */

import type { App } from "../app.js";
import { el, verbatim } from "../dom.js";

export async function renderPage(app: App, pageId: string): Promise<HTMLElement> {
  const language = app.state.language ?? undefined;
  const items = await app.client.listItems({ language, page: pageId });
  const box = el("section", {}, el("h2", {}, `Page "${pageId}"`));
  box.append(
    el(
      "p",
      { class: "muted" },
      "Every translatable item on this page, in order. Pick one to work on it.",
    ),
  );

  const table = el(
    "table",
    { class: "listing" },
    el(
      "tr",
      {},
      el("th", {}, "item"),
      el("th", {}, "source"),
      el("th", {}, "category"),
      el("th", {}, language ? `status (${language})` : "status"),
      el("th", {}, ""),
    ),
  );
  for (const item of items) {
    const status = item.status;
    const statusText = !language
      ? "choose a language"
      : status?.translated
        ? `translated, mean rating ${verbatim(status.rating_mean)}`
        : "untranslated";
    table.append(
      el(
        "tr",
        { "data-item": item.item_id },
        el("td", {}, item.key),
        el("td", {}, item.source_text),
        el("td", {}, item.category),
        el("td", {}, statusText),
        el(
          "td",
          {},
          el(
            "button",
            {
              class: "action",
              onclick: () => app.navigate({ kind: "translate", itemId: item.item_id }),
            },
            "open",
          ),
        ),
      ),
    );
  }
  box.append(table);
  return box;
}
