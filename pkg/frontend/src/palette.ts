/** Character palette: special-character buttons that type into a textarea. */

export interface InsertResult {
  value: string;
  caret: number;
}

/**
 * Insert a character where the caret sits, replacing any selection.
 *
 * Selection offsets are UTF-16 code units, exactly what a textarea reports,
 * so slicing by them is lossless even around astral characters.
 */
export function insertAtCaret(
  value: string,
  selectionStart: number,
  selectionEnd: number,
  ch: string,
): InsertResult {
  const start = Math.max(0, Math.min(selectionStart, value.length));
  const end = Math.max(start, Math.min(selectionEnd, value.length));
  return {
    value: value.slice(0, start) + ch + value.slice(end),
    caret: start + ch.length,
  };
}

/** Wire palette buttons to a textarea; keeps focus and caret in the field. */
export function attachPalette(
  container: HTMLElement,
  textarea: HTMLTextAreaElement,
  chars: string[],
  onInsert?: (value: string) => void,
): void {
  for (const ch of chars) {
    const button = document.createElement("button");
    button.type = "button";
    button.textContent = ch;
    button.addEventListener("click", () => {
      const { value, caret } = insertAtCaret(
        textarea.value,
        textarea.selectionStart ?? textarea.value.length,
        textarea.selectionEnd ?? textarea.value.length,
        ch,
      );
      textarea.value = value;
      textarea.setSelectionRange(caret, caret);
      textarea.focus();
      if (onInsert) onInsert(value);
    });
    container.append(button);
  }
}
