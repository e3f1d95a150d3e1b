/** Quality rubric: record 13-point evaluations and read the grouped report.
 *
 * Component bounds are checked before anything is sent, so an impossible
 * judgment (say structure=4) never reaches the service. Totals, means, and
 * the rendered report all come back from the service and display verbatim.
 */

import type { App } from "../app.js";
import { el, clear, verbatim } from "../dom.js";
import { RUBRIC_BOUNDS, RUBRIC_METHODS } from "../types.js";

export async function renderRubric(app: App): Promise<HTMLElement> {
  const resume = { kind: "rubric" as const };
  const box = el(
    "section",
    {},
    el("h2", {}, "Translation quality"),
    el(
      "p",
      { class: "muted" },
      "Evaluations score seven components for at most 13 points: structure (3), " +
        "cognate vocabulary (3), word meanings (1), spellings (1), style consistency (1), " +
        "punctuation (1), and overall message (3).",
    ),
  );

  const records = await app.client.rubricRecords();
  box.append(el("h3", {}, "Recorded evaluations"));
  if (records.length === 0) {
    box.append(el("p", { class: "empty-state" }, "No evaluations recorded yet."));
  } else {
    const table = el(
      "table",
      { class: "listing" },
      el(
        "tr",
        {},
        el("th", {}, "page"),
        el("th", {}, "language"),
        el("th", {}, "method"),
        el("th", {}, "total"),
        el("th", {}, "evaluator"),
      ),
    );
    for (const record of records) {
      table.append(
        el(
          "tr",
          { "data-record": record.record_id },
          el("td", {}, record.page_label),
          el("td", {}, record.language),
          el("td", {}, record.method),
          el("td", { class: "score" }, verbatim(record.total)),
          el("td", {}, record.evaluator),
        ),
      );
    }
    box.append(table);
  }

  // recording form with client-side bound checks
  const notice = el("div", { "data-role": "rubric-notice" });
  const pageInput = el("input", { type: "text", placeholder: "page label" });
  const languageInput = el("input", { type: "text", placeholder: "language" });
  if (app.state.language) languageInput.value = app.state.language;
  const methodSelect = el("select", { "aria-label": "method" });
  for (const method of RUBRIC_METHODS) {
    methodSelect.append(el("option", { value: method }, method));
  }
  const noScorecard = el("input", { type: "checkbox", "data-role": "no-scorecard" });

  const judgmentInputs = new Map<string, HTMLInputElement>();
  const grid = el("div", { class: "stack" });
  for (const [component, bound] of Object.entries(RUBRIC_BOUNDS)) {
    const input = el("input", {
      type: "number",
      value: "0",
      "data-component": component,
    });
    judgmentInputs.set(component, input);
    grid.append(el("label", {}, `${component} (0 to ${bound}): `, input));
  }

  const submit = async () => {
    clear(notice);
    if (!app.requireSession(resume)) return;
    let judgments: Record<string, number> | null = null;
    if (!noScorecard.checked) {
      judgments = {};
      for (const [component, input] of judgmentInputs) {
        const bound = RUBRIC_BOUNDS[component] ?? 0;
        const value = Number(input.value);
        if (!Number.isInteger(value) || value < 0 || value > bound) {
          notice.append(
            el(
              "div",
              { class: "banner error", role: "alert" },
              `${component} must be between 0 and ${bound}`,
            ),
          );
          return;
        }
        judgments[component] = value;
      }
    }
    try {
      await app.client.recordEvaluation(
        pageInput.value.trim(),
        languageInput.value.trim(),
        methodSelect.value,
        judgments,
      );
      app.navigate(resume);
    } catch (err) {
      if (app.handleError(err, resume)) return;
      notice.append(el("div", { class: "banner error", role: "alert" }, String(err)));
    }
  };

  box.append(
    el("h3", {}, "Record an evaluation"),
    notice,
    el(
      "form",
      {
        class: "stack",
        "data-role": "rubric-form",
        onsubmit: (event: Event) => {
          event.preventDefault();
          void submit();
        },
      },
      pageInput,
      languageInput,
      methodSelect,
      el("label", {}, noScorecard, " no scorecard (source-language reference)"),
      grid,
      el("button", { class: "action", type: "submit" }, "record"),
    ),
  );

  // grouped report, rendered by the service
  const reportBox = el("pre", { class: "report", "data-role": "report" });
  const groupSelect = el("select", { "aria-label": "group report by" });
  for (const group of ["method", "language", "page"] as const) {
    groupSelect.append(el("option", { value: group }, `by ${group}`));
  }
  const loadReport = async () => {
    const report = await app.client.rubricReport(
      groupSelect.value as "method" | "language" | "page",
    );
    reportBox.textContent = report.rendered;
  };
  groupSelect.addEventListener("change", () => void loadReport());
  box.append(el("h3", {}, "Report"), groupSelect, reportBox);
  await loadReport();
  return box;
}
