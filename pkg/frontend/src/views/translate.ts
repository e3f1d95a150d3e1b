/** The translation form: context with the item highlighted, a character
 * palette, versioned submit/edit, comments, and reviews.
 *
 * Typed work lives in a local draft at every keystroke, so losing a version
 * race (or navigating away) never loses the text.
 */

import { ApiError } from "../api.js";
import type { App } from "../app.js";
import { el, clear, verbatim } from "../dom.js";
import { clearDraft, loadDraft, saveDraft } from "../drafts.js";
import { splitSnippet } from "../highlight.js";
import { attachPalette } from "../palette.js";
import type { Item, Review, Translation } from "../types.js";

function helpLinks(app: App): HTMLElement {
  return el(
    "p",
    { class: "help-links" },
    "Need guidance? ",
    app.navLink("tutorial", { kind: "help", page: "tutorial" }),
    " · ",
    app.navLink("FAQ", { kind: "help", page: "faq" }),
    " · ",
    app.navLink("glossary", { kind: "glossary" }),
  );
}

function contextBlock(app: App, item: Item): HTMLElement {
  const { before, span, after } = splitSnippet(
    item.context.snippet,
    item.context.start,
    item.context.end,
  );
  return el(
    "div",
    {},
    el(
      "div",
      { class: "context" },
      before,
      el("mark", { "data-role": "context-span" }, span),
      after,
    ),
    el(
      "p",
      { class: "muted" },
      `Appears on page "${item.page_id}" as ${item.category}. `,
      app.navLink("See the whole page", { kind: "page", pageId: item.page_id }),
    ),
  );
}

function reviewLine(review: Review): HTMLElement {
  return el(
    "div",
    { class: "review" },
    el(
      "div",
      {},
      el("strong", {}, review.reviewer),
      ` rated ${verbatim(review.rating)}/5 on v${verbatim(review.reviewed_version)}`,
      review.stale ? el("em", { class: "muted" }, " (stale: the text changed since)") : null,
    ),
    review.body ? el("div", {}, review.body) : null,
  );
}

export async function renderTranslate(app: App, itemId: string): Promise<HTMLElement> {
  const language = app.state.language;
  const box = el("section", {});
  if (!language) {
    box.append(
      el("h2", {}, "Translate"),
      el("p", {}, "Choose a working language in the header first."),
    );
    return box;
  }

  const item = await app.client.getItem(itemId, language);
  let translation: Translation | null = item.translation ?? null;
  const resume = { kind: "translate" as const, itemId };

  box.append(
    el("h2", {}, `Translate "${item.source_text}"`),
    helpLinks(app),
    contextBlock(app, item),
  );

  // current state panel, kept fresh after version races
  const currentPanel = el("div", { "data-role": "current" });
  const renderCurrent = () => {
    clear(currentPanel);
    if (translation) {
      currentPanel.append(
        el(
          "p",
          {},
          "Current translation (v",
          el("span", { "data-role": "current-version" }, verbatim(translation.version)),
          ` by ${translation.current_author}): `,
          el("strong", { "data-role": "current-text" }, translation.current_text),
        ),
      );
    } else {
      currentPanel.append(el("p", {}, "Not translated yet. Yours can be the first."));
    }
  };
  renderCurrent();
  box.append(currentPanel);

  const notice = el("div", { "data-role": "notice" });
  box.append(notice);
  const say = (kind: "error" | "stale" | "ok", message: string) => {
    clear(notice);
    notice.append(el("div", { class: `banner ${kind}`, role: "alert" }, message));
  };

  const draft = loadDraft(itemId, language);
  const textarea = el("textarea", { "data-role": "draft" });
  textarea.value = draft?.text ?? translation?.current_text ?? "";
  const noteInput = el("input", { type: "text", placeholder: "revision note (optional)" });
  noteInput.value = draft?.note ?? "";
  const persist = () => saveDraft(itemId, language, textarea.value, noteInput.value);
  textarea.addEventListener("input", persist);
  noteInput.addEventListener("input", persist);

  const paletteBox = el("div", { class: "palette", "data-role": "palette" });
  const profile = app.activeLanguage();
  attachPalette(paletteBox, textarea, profile?.character_palette ?? [], persist);

  const submit = async () => {
    if (!app.requireSession(resume)) return;
    const text = textarea.value;
    if (!text.trim()) {
      say("error", "Enter a translation first; empty text cannot be submitted.");
      return;
    }
    const note = noteInput.value.trim() || undefined;
    try {
      translation = translation
        ? await app.client.editTranslation(itemId, language, translation.version, text, note)
        : await app.client.submitTranslation(itemId, language, text, note);
      clearDraft(itemId, language);
      renderCurrent();
      say("ok", `Saved as version ${verbatim(translation.version)}. Thank you!`);
    } catch (err) {
      if (err instanceof ApiError && err.isStale) {
        // someone else won the race; reload their version, keep the draft
        translation = await app.client.getTranslation(itemId, language);
        renderCurrent();
        say(
          "stale",
          `Someone updated this translation to version ${verbatim(translation.version)} while you typed. ` +
            "Your text is untouched below; review theirs and submit again to replace it.",
        );
        return;
      }
      if (app.handleError(err, resume)) return;
      say("error", String(err));
    }
  };

  const form = el(
    "form",
    {
      class: "stack",
      onsubmit: (event: Event) => {
        event.preventDefault();
        void submit();
      },
    },
    el("label", {}, `Your translation into ${language}:`),
    textarea,
    paletteBox,
    noteInput,
    el("button", { class: "action", type: "submit" }, "save translation"),
  );
  box.append(form);

  // comments live with the translation and crosspost to the language forum
  const commentsBox = el("div", { "data-role": "comments" }, el("h3", {}, "Comments"));
  const renderComments = () => {
    commentsBox.querySelectorAll(".comment").forEach((node) => node.remove());
    for (const comment of translation?.comments ?? []) {
      commentsBox.append(
        el(
          "div",
          { class: "comment" },
          el("strong", {}, comment.author),
          ": ",
          comment.body,
        ),
      );
    }
  };
  renderComments();
  const commentInput = el("input", {
    type: "text",
    placeholder: "translation-specific concern or comment",
  });
  commentsBox.append(
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!commentInput.value.trim()) return;
          try {
            await app.client.addComment(itemId, language, commentInput.value);
            translation = await app.client.getTranslation(itemId, language);
            commentInput.value = "";
            renderComments();
          } catch (err) {
            if (!app.handleError(err, resume)) say("error", String(err));
          }
        },
      },
      commentInput,
      el("button", { class: "action", type: "submit" }, "post comment"),
    ),
  );
  box.append(commentsBox);

  // peer reviews of the current translation
  const reviewsBox = el("div", { "data-role": "reviews" }, el("h3", {}, "Reviews"));
  if (translation) {
    const { reviews, rating } = await app.client.listReviews(itemId, language);
    reviewsBox.append(
      el(
        "p",
        {},
        rating.mean === null
          ? "No ratings yet."
          : `Mean rating ${verbatim(rating.mean)} from ${verbatim(rating.count)} review(s).`,
      ),
    );
    for (const review of reviews) reviewsBox.append(reviewLine(review));

    const select = el("select", { "aria-label": "rating" });
    for (const value of [5, 4, 3, 2, 1]) {
      select.append(el("option", { value: String(value) }, `${value}/5`));
    }
    const reviewBody = el("input", { type: "text", placeholder: "say why (optional)" });
    reviewsBox.append(
      el(
        "form",
        {
          class: "stack",
          onsubmit: async (event: Event) => {
            event.preventDefault();
            if (!app.requireSession(resume)) return;
            try {
              await app.client.rate(
                itemId,
                language,
                Number(select.value),
                reviewBody.value.trim() || undefined,
              );
              app.navigate(resume);
            } catch (err) {
              if (!app.handleError(err, resume)) say("error", String(err));
            }
          },
        },
        el("label", {}, "Rate this translation:"),
        select,
        reviewBody,
        el("button", { class: "action", type: "submit" }, "submit review"),
      ),
    );
  } else {
    reviewsBox.append(el("p", {}, "Reviews open once a translation exists."));
  }
  box.append(reviewsBox);

  box.append(helpLinks(app));
  return box;
}
