/** Forums: fixed boards plus one per registered language, with threads and
 * replies.
 */

import type { App } from "../app.js";
import { el } from "../dom.js";

const FIXED_FORUMS = ["general", "help", "suggestion"];

function forumIndex(app: App): HTMLElement {
  const box = el("section", {}, el("h2", {}, "Forums"));
  const list = el("ul", { "data-role": "forums" });
  for (const name of FIXED_FORUMS) {
    list.append(el("li", {}, app.navLink(name, { kind: "forum", forum: name })));
  }
  for (const language of app.languages) {
    const name = `language:${language.code}`;
    list.append(
      el(
        "li",
        {},
        app.navLink(`${language.display_name} board (${name})`, {
          kind: "forum",
          forum: name,
        }),
      ),
    );
  }
  box.append(list);
  return box;
}

async function threadView(app: App, threadId: string): Promise<HTMLElement> {
  const thread = await app.client.getThread(threadId);
  const resume = { kind: "forum" as const, forum: thread.forum, threadId };
  const box = el(
    "section",
    {},
    el("h2", {}, thread.title),
    el(
      "p",
      { class: "muted" },
      `in ${thread.forum}, started by ${thread.author}. `,
      app.navLink("Back to the board", { kind: "forum", forum: thread.forum }),
    ),
  );

  const posts = el("div", { "data-role": "posts" });
  for (const post of thread.posts ?? []) {
    posts.append(
      el(
        "div",
        { class: "comment", "data-post": post.post_id },
        el("strong", {}, post.author),
        post.reply_to ? el("em", { class: "muted" }, " (in reply)") : null,
        ": ",
        post.body,
      ),
    );
  }
  box.append(posts);

  const replyInput = el("textarea", { placeholder: "write a reply" });
  box.append(
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!replyInput.value.trim()) return;
          try {
            await app.client.replyToThread(threadId, replyInput.value);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      replyInput,
      el("button", { class: "action", type: "submit" }, "post reply"),
    ),
  );
  return box;
}

async function boardView(app: App, forum: string): Promise<HTMLElement> {
  const threads = await app.client.forumThreads(forum);
  const resume = { kind: "forum" as const, forum };
  const box = el(
    "section",
    {},
    el("h2", {}, `Forum: ${forum}`),
    el("p", { class: "muted" }, app.navLink("All forums", { kind: "forum" })),
  );

  if (threads.length === 0) {
    box.append(el("p", { class: "empty-state" }, "No threads yet. Start the first one."));
  } else {
    const list = el("ul", { "data-role": "threads" });
    for (const thread of threads) {
      list.append(
        el(
          "li",
          { "data-thread": thread.thread_id },
          app.navLink(thread.title, { kind: "forum", forum, threadId: thread.thread_id }),
          ` by ${thread.author} (${thread.post_count} posts)`,
        ),
      );
    }
    box.append(list);
  }

  const titleInput = el("input", { type: "text", placeholder: "thread title" });
  const bodyInput = el("textarea", { placeholder: "first post" });
  box.append(
    el("h3", {}, "Start a thread"),
    el(
      "form",
      {
        class: "stack",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          if (!app.requireSession(resume)) return;
          if (!titleInput.value.trim() || !bodyInput.value.trim()) return;
          try {
            await app.client.createThread(forum, titleInput.value, bodyInput.value);
            app.navigate(resume);
          } catch (err) {
            if (!app.handleError(err, resume)) throw err;
          }
        },
      },
      titleInput,
      bodyInput,
      el("button", { class: "action", type: "submit" }, "create thread"),
    ),
  );
  return box;
}

export async function renderForum(
  app: App,
  forum?: string,
  threadId?: string,
): Promise<HTMLElement> {
  if (threadId) return threadView(app, threadId);
  if (forum) return boardView(app, forum);
  return forumIndex(app);
}
