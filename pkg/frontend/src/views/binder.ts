/** Personal binder: translations you authored, requests you filed with their
 * fulfillment state, and notifications about fulfilled requests.
 */

import type { App } from "../app.js";
import { el, verbatim } from "../dom.js";

export async function renderBinder(app: App): Promise<HTMLElement> {
  const resume = { kind: "binder" as const };
  const box = el("section", {}, el("h2", {}, "Your binder"));
  if (!app.requireSession(resume)) return box;

  try {
    const [binder, notifications] = await Promise.all([
      app.client.binder(),
      app.client.notifications(),
    ]);

    if (notifications.length > 0) {
      const list = el("ul", { "data-role": "notifications" });
      for (const note of notifications) {
        list.append(
          el(
            "li",
            {},
            `${note.author} translated "${note.item_key}" into ${note.language}`,
          ),
        );
      }
      box.append(
        el("h3", {}, `Unread notifications (${notifications.length})`),
        list,
        el(
          "button",
          {
            class: "action",
            onclick: async () => {
              await app.client.markNotificationsRead();
              app.navigate(resume);
            },
          },
          "mark all read",
        ),
      );
    }

    box.append(el("h3", {}, "Translations you authored"));
    if (binder.translated.length === 0) {
      box.append(el("p", { class: "empty-state" }, "Nothing yet; the worklist is waiting."));
    } else {
      const table = el(
        "table",
        { class: "listing" },
        el(
          "tr",
          {},
          el("th", {}, "item"),
          el("th", {}, "language"),
          el("th", {}, "your latest version"),
          el("th", {}, ""),
        ),
      );
      for (const entry of binder.translated) {
        table.append(
          el(
            "tr",
            { "data-item": entry.item_id },
            el("td", {}, entry.item_key),
            el("td", {}, entry.language),
            el("td", {}, verbatim(entry.latest_version_authored)),
            el(
              "td",
              {},
              el(
                "button",
                {
                  class: "action",
                  onclick: () =>
                    app.navigate({ kind: "translate", itemId: entry.item_id }),
                },
                "revisit",
              ),
            ),
          ),
        );
      }
      box.append(table);
    }

    box.append(el("h3", {}, "Your requests"));
    if (binder.requested.length === 0) {
      box.append(el("p", { class: "empty-state" }, "You have not requested anything."));
    } else {
      const list = el("ul", { "data-role": "requests" });
      for (const request of binder.requested) {
        const fulfilled = request.fulfilled_languages;
        list.append(
          el(
            "li",
            { "data-request": request.request_id },
            `${request.target_kind} "${request.target}": `,
            fulfilled.length === 0
              ? el("em", {}, "not fulfilled yet")
              : el("strong", {}, `fulfilled in ${fulfilled.join(", ")}`),
          ),
        );
      }
      box.append(list);
    }
  } catch (err) {
    if (!app.handleError(err, resume)) throw err;
  }
  return box;
}
