/** Shared glossary: troublesome terms, their agreed translations per language,
 * regional notes, and discussion.
 */

import type { App } from "../app.js";
import { el } from "../dom.js";

async function termView(app: App, term: string): Promise<HTMLElement> {
  const entry = await app.client.getTerm(term);
  const resume = { kind: "glossary" as const, term };
  const box = el(
    "section",
    {},
    el("h2", {}, `Glossary: ${entry.term}`),
    el("p", {}, entry.definition),
    el(
      "p",
      { class: "muted" },
      `added by ${entry.creator}. `,
      app.navLink("All terms", { kind: "glossary" }),
    ),
  );

  box.append(el("h3", {}, "Translations"));
  if (entry.translations.length === 0) {
    box.append(el("p", { class: "empty-state" }, "No translations recorded yet."));
  } else {
    const list = el("ul", { "data-role": "term-translations" });
    for (const t of entry.translations) {
      list.append(
        el(
          "li",
          {},
          el("strong", {}, t.language),
          `: ${t.text}`,
          t.regional_note ? el("em", { class: "muted" }, ` (${t.regional_note})`) : null,
          ` by ${t.author}`,
        ),
      );
    }
    box.append(list);
  }

  const languageInput = el("input", { type: "text", placeholder: "language code" });
  if (app.state.language) languageInput.value = app.state.language;
  const textInput = el("input", { type: "text", placeholder: "translation of the term" });
  const noteInput = el("input", { type: "text", placeholder: "regional note (optional)" });
  box.append(
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!languageInput.value.trim() || !textInput.value.trim()) return;
          try {
            await app.client.addTermTranslation(
              entry.term,
              languageInput.value.trim(),
              textInput.value,
              noteInput.value.trim() || undefined,
            );
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      languageInput,
      textInput,
      noteInput,
      el("button", { class: "action", type: "submit" }, "add translation"),
    ),
  );

  box.append(el("h3", {}, "Discussion"));
  const comments = el("div", { "data-role": "term-comments" });
  for (const post of entry.comments) {
    comments.append(
      el("div", { class: "comment" }, el("strong", {}, post.author), ": ", post.body),
    );
  }
  box.append(comments);
  const commentInput = el("input", { type: "text", placeholder: "discuss this term" });
  box.append(
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!commentInput.value.trim()) return;
          try {
            await app.client.commentOnTerm(entry.term, commentInput.value);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      commentInput,
      el("button", { class: "action", type: "submit" }, "post"),
    ),
  );
  return box;
}

export async function renderGlossary(app: App, term?: string): Promise<HTMLElement> {
  if (term) return termView(app, term);

  const resume = { kind: "glossary" as const };
  const entries = await app.client.glossary();
  const box = el(
    "section",
    {},
    el("h2", {}, "Glossary"),
    el(
      "p",
      { class: "muted" },
      "Troublesome terms and how this community translates them.",
    ),
  );

  if (entries.length === 0) {
    box.append(el("p", { class: "empty-state" }, "The glossary is empty so far."));
  } else {
    const list = el("ul", { "data-role": "terms" });
    for (const entry of entries) {
      list.append(
        el(
          "li",
          { "data-term": entry.term },
          app.navLink(entry.term, { kind: "glossary", term: entry.term }),
          ` (${entry.translations.length} translations)`,
        ),
      );
    }
    box.append(list);
  }

  const termInput = el("input", { type: "text", placeholder: "term" });
  const definitionInput = el("input", { type: "text", placeholder: "what it means here" });
  box.append(
    el("h3", {}, "Add a term"),
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!termInput.value.trim() || !definitionInput.value.trim()) return;
          try {
            await app.client.addTerm(termInput.value.trim(), definitionInput.value);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      termInput,
      definitionInput,
      el("button", { class: "action", type: "submit" }, "add term"),
    ),
  );
  return box;
}
