/** Wire shapes of the translation service JSON API. */

export interface Language {
  code: string;
  display_name: string;
  character_palette: string[];
  enabled: boolean;
}

export interface ContextSnippet {
  snippet: string;
  start: number;
  end: number;
  full_page_ref: string;
}

export interface ItemStatus {
  translated: boolean;
  request_count: number;
  rating_mean: number | null;
}

export interface Item {
  item_id: string;
  key: string;
  source_text: string;
  page_id: string;
  category: string;
  context: ContextSnippet;
  view_count: number;
  status?: ItemStatus;
  translation?: Translation;
}

export interface PriorityScore {
  item_id: string;
  language: string;
  components: { cat: number; view: number; req: number; rev: number };
  total: number;
}

export interface WorklistEntry {
  item: Item;
  score: PriorityScore;
}

export interface Revision {
  version: number;
  text: string;
  author: string;
  timestamp: number;
  note: string | null;
}

export interface TranslationComment {
  author: string;
  body: string;
  timestamp: number;
  crosspost_ref: { thread_id: string; post_id: string } | null;
}

export interface Translation {
  item_id: string;
  language: string;
  version: number;
  current_text: string;
  current_author: string;
  revisions: Revision[];
  comments: TranslationComment[];
  rating?: RatingAggregate;
}

export interface RatingAggregate {
  count: number;
  mean: number | null;
}

export interface Review {
  reviewer: string;
  item_id: string;
  language: string;
  reviewed_version: number;
  rating: number;
  body: string | null;
  timestamp: number;
  stale: boolean;
}

export interface TranslationRequest {
  request_id: string;
  requester: string;
  target_kind: "item" | "page";
  target: string;
  timestamp: number;
  fulfilled_languages: string[];
}

export interface Notification {
  notification_id: string;
  member_id: string;
  request_id: string;
  item_key: string;
  language: string;
  author: string;
  timestamp: number;
  read: boolean;
}

export interface BinderEntry {
  item_id: string;
  item_key: string;
  language: string;
  latest_version_authored: number;
}

export interface Binder {
  member_id: string;
  translated: BinderEntry[];
  requested: TranslationRequest[];
}

export interface Post {
  post_id: string;
  author: string;
  body: string;
  timestamp: number;
  reply_to: string | null;
}

export interface Thread {
  thread_id: string;
  forum: string;
  title: string;
  author: string;
  created_at: number;
  post_count: number;
  posts?: Post[];
}

export interface Poll {
  poll_id: string;
  scope: string;
  question: string;
  options: string[];
  creator: string;
  created_at: number;
  closes_at: number | null;
  voters: number;
}

export interface Tally {
  poll_id: string;
  options: string[];
  counts: number[];
  voters: number;
}

export interface TermTranslation {
  language: string;
  text: string;
  regional_note: string | null;
  author: string;
  timestamp: number;
}

export interface GlossaryEntry {
  term: string;
  definition: string;
  creator: string;
  created_at: number;
  translations: TermTranslation[];
  comments: Post[];
}

export interface DirectoryEntry {
  member_id: string;
  display_name: string;
  contact: string;
  translated_count: number;
}

export interface Meter {
  language: string;
  scope: string;
  translated: number;
  total: number;
  percent: number;
}

export interface EvaluationRecord {
  record_id: string;
  page_label: string;
  language: string;
  method: string;
  scorecard: { scores: Record<string, number>; total: number } | null;
  evaluator: string;
  timestamp: number;
  total: number | null;
}

export interface ReportMean {
  group: string;
  mean: number;
  count: number;
}

export interface RubricReport {
  group_by: string;
  rows: Array<{
    record_id: string;
    page_label: string;
    language: string;
    method: string;
    total: number | null;
  }>;
  means: ReportMean[];
  rendered: string;
}

export interface Session {
  token: string;
  member_id: string;
  handle: string;
}

export interface MergeSummary {
  added: number;
  updated: number;
  unchanged: number;
  conflicts: Array<{ key: string; reason: string }>;
}

/** Component bounds mirrored from the service's 13-point quality rubric. */
export const RUBRIC_BOUNDS: Record<string, number> = {
  structure: 3,
  vocabulary_cognates: 3,
  vocabulary_meanings: 1,
  vocabulary_spellings: 1,
  style_consistency: 1,
  style_punctuation: 1,
  message: 3,
};

export const RUBRIC_METHODS = [
  "source",
  "machine",
  "developer",
  "community",
  "machine-roundtrip",
] as const;
