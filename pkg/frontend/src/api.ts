/** Typed client for the translation service JSON API.
 *
 * Every domain value shown in the workbench comes out of these calls; the
 * client never recomputes scores, totals, percents, or tallies.
 */

import type {
  Binder,
  DirectoryEntry,
  EvaluationRecord,
  GlossaryEntry,
  Item,
  Language,
  Meter,
  Notification,
  Poll,
  Post,
  RatingAggregate,
  Review,
  RubricReport,
  Session,
  Tally,
  Thread,
  Translation,
  TranslationComment,
  TranslationRequest,
  WorklistEntry,
} from "./types.js";

const PREFIX = "/api/v1";

export class ApiError extends Error {
  constructor(
    public status: number,
    public error: string,
    public detail: string,
  ) {
    super(`${error}: ${detail}`);
    this.name = "ApiError";
  }

  get isStale(): boolean {
    return this.error === "StaleVersion";
  }

  get needsAuth(): boolean {
    return this.error === "AuthRequired" || this.error === "AuthFailed";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

type Query = Record<string, string | number | boolean | undefined>;

export class ApiClient {
  private token: string | null = null;

  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (input, init) => globalThis.fetch(input, init),
  ) {}

  setToken(token: string | null) {
    this.token = token;
  }

  hasToken(): boolean {
    return this.token !== null;
  }

  private url(path: string, query?: Query): string {
    let full = `${this.baseUrl}${PREFIX}${path}`;
    if (query) {
      const params = new URLSearchParams();
      for (const [key, value] of Object.entries(query)) {
        if (value !== undefined) params.set(key, String(value));
      }
      const encoded = params.toString();
      if (encoded) full += `?${encoded}`;
    }
    return full;
  }

  private async request<T>(
    method: string,
    path: string,
    opts: { query?: Query; body?: unknown; auth?: boolean } = {},
  ): Promise<T> {
    const headers: Record<string, string> = {};
    if (opts.body !== undefined) headers["Content-Type"] = "application/json";
    if (opts.auth) {
      // mutations never leave the client without a session token
      if (!this.token) throw new ApiError(0, "AuthRequired", "sign in first");
      headers["Authorization"] = `Bearer ${this.token}`;
    }
    const res = await this.fetchImpl(this.url(path, opts.query), {
      method,
      headers,
      body: opts.body === undefined ? undefined : JSON.stringify(opts.body),
    });
    if (!res.ok) {
      let error = "HttpError";
      let detail = res.statusText;
      try {
        const parsed = (await res.json()) as { error?: string; detail?: string };
        error = parsed.error ?? error;
        detail = parsed.detail ?? detail;
      } catch {
        /* non-JSON error body */
      }
      throw new ApiError(res.status, error, detail);
    }
    const type = res.headers.get("content-type") ?? "";
    if (type.includes("json")) return (await res.json()) as T;
    return (await res.text()) as unknown as T;
  }

  // -- members and sessions --------------------------------------------------

  register(handle: string, credential: string) {
    return this.request<{ member_id: string; handle: string }>("POST", "/members", {
      body: { handle, credential },
    });
  }

  async openSession(handle: string, credential: string): Promise<Session> {
    const session = await this.request<Session>("POST", "/sessions", {
      body: { handle, credential },
    });
    this.token = session.token;
    return session;
  }

  // -- catalog ---------------------------------------------------------------

  async listLanguages(): Promise<Language[]> {
    const data = await this.request<{ languages: Language[] }>("GET", "/languages");
    return data.languages;
  }

  registerLanguage(code: string, displayName?: string, palette?: string[]) {
    return this.request<Language>("POST", "/languages", {
      body: { code, display_name: displayName, palette },
      auth: true,
    });
  }

  async listItems(query: { language?: string; filter?: string; page?: string } = {}) {
    const data = await this.request<{ items: Item[] }>("GET", "/items", { query });
    return data.items;
  }

  getItem(itemId: string, language?: string): Promise<Item> {
    return this.request<Item>("GET", `/item/${itemId}`, { query: { language } });
  }

  worklist(language: string, filter?: string) {
    return this.request<{ language: string; entries: WorklistEntry[] }>(
      "GET",
      "/worklist",
      { query: { language, filter } },
    );
  }

  randomItem(language: string, seed?: number): Promise<Item> {
    return this.request<Item>("GET", "/random", { query: { language, seed } });
  }

  // -- translations ----------------------------------------------------------

  getTranslation(itemId: string, language: string): Promise<Translation> {
    return this.request<Translation>("GET", `/translations/${itemId}/${language}`);
  }

  submitTranslation(itemId: string, language: string, text: string, note?: string) {
    return this.request<Translation>("POST", `/translations/${itemId}/${language}`, {
      body: { text, note },
      auth: true,
    });
  }

  editTranslation(
    itemId: string,
    language: string,
    baseVersion: number,
    text: string,
    note?: string,
  ) {
    return this.request<Translation>("PUT", `/translations/${itemId}/${language}`, {
      body: { base_version: baseVersion, text, note },
      auth: true,
    });
  }

  addComment(itemId: string, language: string, body: string) {
    return this.request<TranslationComment>(
      "POST",
      `/translations/${itemId}/${language}/comments`,
      { body: { body }, auth: true },
    );
  }

  // -- reviews ---------------------------------------------------------------

  listReviews(itemId: string, language: string) {
    return this.request<{ reviews: Review[]; rating: RatingAggregate }>(
      "GET",
      "/reviews",
      { query: { item: itemId, language } },
    );
  }

  rate(itemId: string, language: string, rating: number, body?: string) {
    return this.request<Review>("POST", "/reviews", {
      body: { item_id: itemId, language, rating, body },
      auth: true,
    });
  }

  // -- requests, binder, notifications ---------------------------------------

  requestTranslation(target: string) {
    return this.request<TranslationRequest>("POST", "/requests", {
      body: { target },
      auth: true,
    });
  }

  async myRequests(): Promise<TranslationRequest[]> {
    const data = await this.request<{ requests: TranslationRequest[] }>(
      "GET",
      "/requests/mine",
      { auth: true },
    );
    return data.requests;
  }

  binder(): Promise<Binder> {
    return this.request<Binder>("GET", "/binder", { auth: true });
  }

  async notifications(includeRead = false): Promise<Notification[]> {
    const data = await this.request<{ notifications: Notification[] }>(
      "GET",
      "/notifications",
      { query: { include_read: includeRead }, auth: true },
    );
    return data.notifications;
  }

  markNotificationsRead(ids?: string[]) {
    return this.request<{ marked: number }>("POST", "/notifications/read", {
      body: { ids },
      auth: true,
    });
  }

  // -- community -------------------------------------------------------------

  async forumThreads(kind: string): Promise<Thread[]> {
    const data = await this.request<{ threads: Thread[] }>(
      "GET",
      `/forums/${encodeURIComponent(kind)}/threads`,
    );
    return data.threads;
  }

  createThread(kind: string, title: string, body: string) {
    return this.request<Thread>("POST", `/forums/${encodeURIComponent(kind)}/threads`, {
      body: { title, body },
      auth: true,
    });
  }

  getThread(threadId: string): Promise<Thread> {
    return this.request<Thread>("GET", `/threads/${threadId}`);
  }

  replyToThread(threadId: string, body: string, replyTo?: string) {
    return this.request<Post>("POST", `/threads/${threadId}/posts`, {
      body: { body, reply_to: replyTo },
      auth: true,
    });
  }

  async listPolls(): Promise<Poll[]> {
    const data = await this.request<{ polls: Poll[] }>("GET", "/polls");
    return data.polls;
  }

  createPoll(scope: string, question: string, options: string[], closesAt?: number) {
    return this.request<Poll>("POST", "/polls", {
      body: { scope, question, options, closes_at: closesAt },
      auth: true,
    });
  }

  vote(pollId: string, optionIndex: number): Promise<Tally> {
    return this.request<Tally>("POST", `/polls/${pollId}/votes`, {
      body: { option_index: optionIndex },
      auth: true,
    });
  }

  tally(pollId: string): Promise<Tally> {
    return this.request<Tally>("GET", `/polls/${pollId}/tally`);
  }

  async glossary(): Promise<GlossaryEntry[]> {
    const data = await this.request<{ terms: GlossaryEntry[] }>("GET", "/glossary");
    return data.terms;
  }

  addTerm(term: string, definition: string) {
    return this.request<GlossaryEntry>("POST", "/glossary", {
      body: { term, definition },
      auth: true,
    });
  }

  getTerm(term: string): Promise<GlossaryEntry> {
    return this.request<GlossaryEntry>("GET", `/glossary/${encodeURIComponent(term)}`);
  }

  addTermTranslation(term: string, language: string, text: string, regionalNote?: string) {
    return this.request<GlossaryEntry>(
      "POST",
      `/glossary/${encodeURIComponent(term)}/translations`,
      { body: { language, text, regional_note: regionalNote }, auth: true },
    );
  }

  commentOnTerm(term: string, body: string, replyTo?: string) {
    return this.request<Post>("POST", `/glossary/${encodeURIComponent(term)}/comments`, {
      body: { body, reply_to: replyTo },
      auth: true,
    });
  }

  async directory(): Promise<DirectoryEntry[]> {
    const data = await this.request<{ members: DirectoryEntry[] }>("GET", "/directory");
    return data.members;
  }

  updateDirectory(optedIn: boolean, contact?: string) {
    return this.request<{ member_id: string; opted_in: boolean }>("POST", "/directory", {
      body: { opted_in: optedIn, contact },
      auth: true,
    });
  }

  // -- meters and rubric -----------------------------------------------------

  meter(language: string, scope = "all"): Promise<Meter> {
    return this.request<Meter>("GET", "/meters", { query: { language, scope } });
  }

  async allMeters(): Promise<Meter[]> {
    const data = await this.request<{ meters: Meter[] }>("GET", "/meters");
    return data.meters;
  }

  async rubricRecords(): Promise<EvaluationRecord[]> {
    const data = await this.request<{ records: EvaluationRecord[] }>(
      "GET",
      "/rubric/records",
    );
    return data.records;
  }

  recordEvaluation(
    pageLabel: string,
    language: string,
    method: string,
    judgments: Record<string, number> | null,
  ) {
    return this.request<EvaluationRecord>("POST", "/rubric/records", {
      body: { page_label: pageLabel, language, method, judgments },
      auth: true,
    });
  }

  rubricReport(groupBy: "method" | "language" | "page" = "method") {
    return this.request<RubricReport>("GET", "/rubric/report", {
      query: { group_by: groupBy },
    });
  }

  // -- help ------------------------------------------------------------------

  async helpIndex(): Promise<string[]> {
    const data = await this.request<{ pages: string[] }>("GET", "/help");
    return data.pages;
  }

  helpPage(name: string): Promise<string> {
    return this.request<string>("GET", `/help/${encodeURIComponent(name)}`);
  }
}
