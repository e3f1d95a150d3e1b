/** Context-snippet splitting for the translate view.
 *
 * The service reports [start, end) offsets counted in Unicode code points.
 * JavaScript strings index UTF-16 code units, so astral characters (emoji,
 * some CJK) would shift a naive slice; splitting over the code-point array
 * keeps the highlight exact.
 */

export interface SnippetParts {
  before: string;
  span: string;
  after: string;
}

export function splitSnippet(snippet: string, start: number, end: number): SnippetParts {
  const points = Array.from(snippet);
  if (start < 0 || end < start || end > points.length) {
    throw new RangeError(`offsets [${start}, ${end}) out of range for snippet`);
  }
  return {
    before: points.slice(0, start).join(""),
    span: points.slice(start, end).join(""),
    after: points.slice(end).join(""),
  };
}
