/** Front page: per-language progress meters and entry links. */

import type { App } from "../app.js";
import { el, verbatim } from "../dom.js";
import type { Meter } from "../types.js";

function meterBlock(meter: Meter): HTMLElement {
  const width = Math.max(0, Math.min(100, meter.percent));
  return el(
    "div",
    { class: "meter", "data-language": meter.language },
    el(
      "div",
      {},
      el("strong", {}, meter.language),
      " ",
      el(
        "span",
        { class: "meter-reading" },
        `${verbatim(meter.translated)}/${verbatim(meter.total)} translated (${verbatim(meter.percent)}%)`,
      ),
    ),
    el("div", { class: "bar" }, el("span", { style: `width: ${width}%` })),
  );
}

export async function renderHome(app: App): Promise<HTMLElement> {
  const box = el("section", {}, el("h2", {}, "Welcome, translators"));

  let meters: Meter[];
  try {
    meters = await app.client.allMeters();
  } catch (err) {
    box.append(
      el(
        "div",
        { class: "banner error", role: "alert" },
        `Could not reach the translation service: ${String(err)}`,
      ),
    );
    return box;
  }

  if (meters.length === 0) {
    box.append(
      el(
        "p",
        { class: "empty-state" },
        "No languages are registered yet. Sign in and add the first one to open the catalog for translation.",
      ),
    );
  } else {
    const list = el("div", { class: "meters" });
    for (const meter of meters) list.append(meterBlock(meter));
    box.append(el("h3", {}, "Progress by language"), list);
  }

  box.append(
    el("h3", {}, "Start here"),
    el(
      "ul",
      {},
      el("li", {}, app.navLink("Pick an item from the worklist", { kind: "worklist" })),
      el("li", {}, app.navLink("Check your binder", { kind: "binder" })),
      el("li", {}, app.navLink("Join the forums", { kind: "forum" })),
      el("li", {}, app.navLink("Vote in polls", { kind: "poll" })),
      el("li", {}, app.navLink("Browse the glossary", { kind: "glossary" })),
      el("li", {}, app.navLink("Meet other translators", { kind: "directory" })),
      el("li", {}, app.navLink("Read the tutorial", { kind: "help", page: "tutorial" })),
    ),
  );
  return box;
}
