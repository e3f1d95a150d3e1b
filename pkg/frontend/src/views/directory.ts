/** Member directory: opted-in translators and how to reach them. */

import type { App } from "../app.js";
import { el, verbatim } from "../dom.js";

export async function renderDirectory(app: App): Promise<HTMLElement> {
  const resume = { kind: "directory" as const };
  const members = await app.client.directory();
  const box = el(
    "section",
    {},
    el("h2", {}, "Translator directory"),
    el(
      "p",
      { class: "muted" },
      "Members who opted in to be contacted about translation work.",
    ),
  );

  if (members.length === 0) {
    box.append(el("p", { class: "empty-state" }, "Nobody has opted in yet."));
  } else {
    const table = el(
      "table",
      { class: "listing" },
      el(
        "tr",
        {},
        el("th", {}, "member"),
        el("th", {}, "contact"),
        el("th", {}, "translations"),
      ),
    );
    for (const member of members) {
      table.append(
        el(
          "tr",
          { "data-member": member.member_id },
          el("td", {}, member.display_name),
          el("td", {}, member.contact),
          el("td", {}, verbatim(member.translated_count)),
        ),
      );
    }
    box.append(table);
  }

  const contactInput = el("input", {
    type: "text",
    placeholder: "how to reach you (left to you)",
  });
  box.append(
    el("h3", {}, "Your listing"),
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          try {
            await app.client.updateDirectory(true, contactInput.value.trim() || undefined);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      contactInput,
      el("button", { class: "action", type: "submit" }, "opt in"),
      el(
        "button",
        {
          class: "action",
          type: "button",
          onclick: async () => {
            if (!app.requireSession(resume)) return;
            try {
              await app.client.updateDirectory(false);
              app.navigate(resume);
            } catch (err) {
              if (!app.handleError(err, resume)) throw err;
            }
          },
        },
        "opt out",
      ),
    ),
  );
  return box;
}
