/** Polls: vote and watch the tally move, or open a new question.
 *
 * Tallies render exactly what the service returns; a vote repaints the tally
 * from the response body, never from local arithmetic.
 */

import type { App } from "../app.js";
import { el, clear, verbatim } from "../dom.js";
import type { Poll, Tally } from "../types.js";

function tallyList(tally: Tally): HTMLElement {
  const list = el("ul", { "data-role": "tally" });
  tally.options.forEach((option, index) => {
    list.append(
      el(
        "li",
        { "data-option": String(index) },
        `${option}: ${verbatim(tally.counts[index] ?? null)}`,
      ),
    );
  });
  list.append(el("li", { class: "muted" }, `${verbatim(tally.voters)} voters`));
  return list;
}

function pollBlock(app: App, poll: Poll, tally: Tally): HTMLElement {
  const resume = { kind: "poll" as const };
  const tallyBox = el("div", {}, tallyList(tally));
  const notice = el("div", {});
  const closed = poll.closes_at !== null && poll.closes_at * 1000 <= Date.now();

  const buttons = el("div", { class: "palette" });
  poll.options.forEach((option, index) => {
    buttons.append(
      el(
        "button",
        {
          class: "action",
          type: "button",
          "data-vote": String(index),
          onclick: async () => {
            if (!app.requireSession(resume)) return;
            try {
              const updated = await app.client.vote(poll.poll_id, index);
              clear(tallyBox);
              tallyBox.append(tallyList(updated));
              clear(notice);
            } catch (err) {
              if (app.handleError(err, resume)) return;
              clear(notice);
              notice.append(
                el("div", { class: "banner error", role: "alert" }, String(err)),
              );
            }
          },
        },
        `vote: ${option}`,
      ),
    );
  });

  return el(
    "div",
    { class: "poll", "data-poll": poll.poll_id },
    el("h3", {}, poll.question),
    el(
      "p",
      { class: "muted" },
      `scope ${poll.scope}, asked by ${poll.creator}` + (closed ? ", closed" : ""),
    ),
    tallyBox,
    closed ? el("p", { class: "muted" }, "Voting has closed.") : buttons,
    notice,
  );
}

export async function renderPolls(app: App): Promise<HTMLElement> {
  const resume = { kind: "poll" as const };
  const box = el("section", {}, el("h2", {}, "Polls"));

  const polls = await app.client.listPolls();
  if (polls.length === 0) {
    box.append(el("p", { class: "empty-state" }, "No polls are open. Ask the first question."));
  } else {
    const tallies = await Promise.all(polls.map((poll) => app.client.tally(poll.poll_id)));
    polls.forEach((poll, index) => {
      const tally = tallies[index];
      if (tally) box.append(pollBlock(app, poll, tally));
    });
  }

  const scopeSelect = el("select", { "aria-label": "poll scope" });
  scopeSelect.append(el("option", { value: "global" }, "everyone"));
  for (const language of app.languages) {
    scopeSelect.append(
      el("option", { value: `language:${language.code}` }, `${language.display_name} community`),
    );
  }
  const questionInput = el("input", { type: "text", placeholder: "question" });
  const optionsInput = el("textarea", { placeholder: "one option per line" });
  box.append(
    el("h3", {}, "Open a poll"),
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          const options = optionsInput.value
            .split("\n")
            .map((line) => line.trim())
            .filter((line) => line.length > 0);
          if (!questionInput.value.trim() || options.length < 2) return;
          try {
            await app.client.createPoll(scopeSelect.value, questionInput.value, options);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      scopeSelect,
      questionInput,
      optionsInput,
      el("button", { class: "action", type: "submit" }, "open poll"),
    ),
  );
  return box;
}
