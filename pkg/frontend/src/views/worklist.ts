/** Priority-ordered listing of items to translate or edit. */

import type { App } from "../app.js";
import { el, verbatim } from "../dom.js";

export async function renderWorklist(app: App): Promise<HTMLElement> {
  const language = app.state.language;
  const box = el("section", {}, el("h2", {}, "Worklist"));
  if (!language) {
    box.append(el("p", {}, "Choose a working language in the header first."));
    return box;
  }

  const [listing, items] = await Promise.all([
    app.client.worklist(language),
    app.client.listItems({ language }),
  ]);
  const translated = new Map(items.map((it) => [it.item_id, it.status?.translated ?? false]));

  const randomButton = el(
    "button",
    {
      class: "action",
      onclick: async () => {
        const item = await app.client.randomItem(language);
        app.navigate({ kind: "translate", itemId: item.item_id });
      },
    },
    "random item",
  );
  box.append(
    el(
      "p",
      {},
      `Items for ${language}, most urgent first. Not sure where to start? `,
      randomButton,
    ),
  );

  if (listing.entries.length === 0) {
    box.append(el("p", { class: "empty-state" }, "Nothing to work on in this language."));
    return box;
  }

  const table = el(
    "table",
    { class: "listing" },
    el(
      "tr",
      {},
      el("th", {}, "item"),
      el("th", {}, "source"),
      el("th", {}, "category"),
      el("th", {}, "priority"),
      el("th", {}, ""),
    ),
  );
  for (const entry of listing.entries) {
    const isDone = translated.get(entry.item.item_id) ?? false;
    table.append(
      el(
        "tr",
        { "data-item": entry.item.item_id },
        el("td", {}, entry.item.key),
        el("td", {}, entry.item.source_text),
        el("td", {}, entry.item.category),
        el("td", { class: "score" }, verbatim(entry.score.total)),
        el(
          "td",
          {},
          el(
            "button",
            {
              class: "action",
              onclick: () =>
                app.navigate({ kind: "translate", itemId: entry.item.item_id }),
            },
            isDone ? "edit" : "translate",
          ),
        ),
      ),
    );
  }
  box.append(table);
  return box;
}
