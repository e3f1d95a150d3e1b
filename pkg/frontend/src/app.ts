/** Single-page shell: header with the pinned language choice, view routing,
 * and the sign-in redirect for unauthenticated mutations.
 */

import { ApiClient, ApiError } from "./api.js";
import { clear, el } from "./dom.js";
import { clearSession, loadSession, saveSession } from "./session.js";
import type { Language, Session } from "./types.js";
import { renderBinder } from "./views/binder.js";
import { renderDirectory } from "./views/directory.js";
import { renderForum } from "./views/forum.js";
import { renderGlossary } from "./views/glossary.js";
import { renderHelp } from "./views/help.js";
import { renderHome } from "./views/home.js";
import { renderPage } from "./views/page.js";
import { renderPolls } from "./views/polls.js";
import { renderRubric } from "./views/rubric.js";
import { renderSignin } from "./views/signin.js";
import { renderTranslate } from "./views/translate.js";
import { renderWorklist } from "./views/worklist.js";

export type View =
  | { kind: "home" }
  | { kind: "worklist" }
  | { kind: "translate"; itemId: string }
  | { kind: "page"; pageId: string }
  | { kind: "binder" }
  | { kind: "forum"; forum?: string; threadId?: string }
  | { kind: "poll" }
  | { kind: "glossary"; term?: string }
  | { kind: "directory" }
  | { kind: "rubric" }
  | { kind: "help"; page?: string }
  | { kind: "signin"; resume?: View };

export interface AppState {
  session: Session | null;
  language: string | null;
  view: View;
}

const LANGUAGE_KEY = "tc.language";

export class App {
  state: AppState;
  languages: Language[] = [];
  rendering: Promise<void> = Promise.resolve();

  constructor(
    public root: HTMLElement,
    public client: ApiClient,
  ) {
    const session = loadSession();
    if (session) client.setToken(session.token);
    let language: string | null = null;
    try {
      language = localStorage.getItem(LANGUAGE_KEY);
    } catch {
      /* default to no selection */
    }
    this.state = { session, language, view: { kind: "home" } };
  }

  async start(): Promise<void> {
    await this.render();
  }

  navigate(view: View): void {
    this.state.view = view;
    this.rendering = this.render();
  }

  setLanguage(code: string | null): void {
    this.state.language = code;
    try {
      if (code) localStorage.setItem(LANGUAGE_KEY, code);
      else localStorage.removeItem(LANGUAGE_KEY);
    } catch {
      /* selection survives in memory only */
    }
    this.rendering = this.render();
  }

  /** The active language's profile, once languages have loaded. */
  activeLanguage(): Language | null {
    return this.languages.find((l) => l.code === this.state.language) ?? null;
  }

  signedIn(session: Session): void {
    this.state.session = session;
    saveSession(session);
    this.client.setToken(session.token);
  }

  signOut(): void {
    this.state.session = null;
    clearSession();
    this.client.setToken(null);
    this.navigate({ kind: "home" });
  }

  /** Gate for mutating screens: no session means a detour through sign-in. */
  requireSession(resume: View): Session | null {
    if (this.state.session) return this.state.session;
    this.navigate({ kind: "signin", resume });
    return null;
  }

  /** Re-route auth failures to sign-in; everything else bubbles. */
  handleError(err: unknown, resume: View): boolean {
    if (err instanceof ApiError && err.needsAuth) {
      this.state.session = null;
      clearSession();
      this.client.setToken(null);
      this.navigate({ kind: "signin", resume });
      return true;
    }
    return false;
  }

  async render(): Promise<void> {
    try {
      this.languages = await this.client.listLanguages();
    } catch {
      this.languages = [];
    }
    clear(this.root);
    this.root.append(this.header());
    const main = el("main", {});
    this.root.append(main);
    try {
      main.append(await this.dispatch());
    } catch (err) {
      // a broken view never takes the shell down with it
      main.append(
        el(
          "div",
          { class: "banner error", role: "alert" },
          `Could not reach the translation service: ${String(err)}`,
        ),
      );
    }
  }

  private dispatch(): Promise<HTMLElement> {
    const view = this.state.view;
    switch (view.kind) {
      case "home":
        return renderHome(this);
      case "worklist":
        return renderWorklist(this);
      case "translate":
        return renderTranslate(this, view.itemId);
      case "page":
        return renderPage(this, view.pageId);
      case "binder":
        return renderBinder(this);
      case "forum":
        return renderForum(this, view.forum, view.threadId);
      case "poll":
        return renderPolls(this);
      case "glossary":
        return renderGlossary(this, view.term);
      case "directory":
        return renderDirectory(this);
      case "rubric":
        return renderRubric(this);
      case "help":
        return renderHelp(this, view.page);
      case "signin":
        return Promise.resolve(renderSignin(this, view.resume));
    }
  }

  navLink(label: string, view: View): HTMLElement {
    return el(
      "button",
      { class: "linklike", onclick: () => this.navigate(view) },
      label,
    );
  }

  private header(): HTMLElement {
    const select = el("select", {
      "aria-label": "Working language",
      onchange: (event: Event) => {
        const value = (event.target as HTMLSelectElement).value;
        this.setLanguage(value || null);
      },
    });
    select.append(el("option", { value: "" }, "choose language"));
    for (const language of this.languages) {
      const option = el(
        "option",
        { value: language.code },
        `${language.display_name} (${language.code})`,
      );
      if (language.code === this.state.language) option.selected = true;
      select.append(option);
    }

    const sessionBox = el("span", { class: "session" });
    if (this.state.session) {
      sessionBox.append(
        `signed in as ${this.state.session.handle} `,
        el("button", { class: "linklike", onclick: () => this.signOut() }, "sign out"),
      );
    } else {
      sessionBox.append(
        el(
          "button",
          {
            class: "linklike",
            onclick: () => this.navigate({ kind: "signin" }),
          },
          "sign in",
        ),
      );
    }

    return el(
      "header",
      { class: "site" },
      el("h1", {}, "Translation Center"),
      select,
      el(
        "nav",
        {},
        this.navLink("home", { kind: "home" }),
        this.navLink("worklist", { kind: "worklist" }),
        this.navLink("binder", { kind: "binder" }),
        this.navLink("forums", { kind: "forum" }),
        this.navLink("polls", { kind: "poll" }),
        this.navLink("glossary", { kind: "glossary" }),
        this.navLink("directory", { kind: "directory" }),
        this.navLink("quality", { kind: "rubric" }),
        this.navLink("help", { kind: "help" }),
      ),
      sessionBox,
    );
  }
}
