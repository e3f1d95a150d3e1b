/** localStorage persistence for in-progress translations.
 *
 * Drafts are keyed by item and language so neither navigation nor a stale
 * version rejection loses typed work.
 */

export interface Draft {
  text: string;
  note: string;
  savedAt: number;
}

const PREFIX = "tc.draft";

function draftKey(itemId: string, language: string): string {
  return `${PREFIX}.${language}.${itemId}`;
}

export function saveDraft(itemId: string, language: string, text: string, note = ""): void {
  try {
    const draft: Draft = { text, note, savedAt: Date.now() };
    localStorage.setItem(draftKey(itemId, language), JSON.stringify(draft));
  } catch {
    /* storage full or unavailable; typing continues unpersisted */
  }
}

export function loadDraft(itemId: string, language: string): Draft | null {
  try {
    const raw = localStorage.getItem(draftKey(itemId, language));
    if (!raw) return null;
    const parsed = JSON.parse(raw) as Draft;
    return typeof parsed.text === "string" ? parsed : null;
  } catch {
    return null;
  }
}

export function clearDraft(itemId: string, language: string): void {
  try {
    localStorage.removeItem(draftKey(itemId, language));
  } catch {
    /* nothing to clear */
  }
}
