import { describe, expect, it } from "vitest";

import { attachPalette, insertAtCaret } from "../src/palette.js";

describe("insertAtCaret", () => {
  it("inserts at the caret position", () => {
    expect(insertAtCaret("hola", 2, 2, "ñ")).toEqual({ value: "hoñla", caret: 3 });
  });

  it("replaces an active selection", () => {
    expect(insertAtCaret("hooola", 2, 5, "ñ")).toEqual({ value: "hoña", caret: 3 });
  });

  it("appends at the end", () => {
    expect(insertAtCaret("mañana", 6, 6, "¡")).toEqual({ value: "mañana¡", caret: 7 });
  });

  it("moves the caret by UTF-16 units for astral characters", () => {
    // a textarea reports selection in UTF-16 units, so "🌍" advances by 2
    expect(insertAtCaret("ab", 1, 1, "🌍")).toEqual({ value: "a🌍b", caret: 3 });
  });

  it("clamps out-of-range offsets", () => {
    expect(insertAtCaret("ab", 9, 11, "x")).toEqual({ value: "abx", caret: 3 });
    expect(insertAtCaret("ab", -3, -1, "x")).toEqual({ value: "xab", caret: 1 });
  });
});

describe("attachPalette", () => {
  function setup(chars: string[]) {
    const container = document.createElement("div");
    const textarea = document.createElement("textarea");
    document.body.append(container, textarea);
    const inserted: string[] = [];
    attachPalette(container, textarea, chars, (value) => inserted.push(value));
    return { container, textarea, inserted };
  }

  it("renders one non-submitting button per character", () => {
    const { container } = setup(["ñ", "á", "¿"]);
    const buttons = container.querySelectorAll("button");
    expect(buttons.length).toBe(3);
    expect([...buttons].map((b) => b.textContent)).toEqual(["ñ", "á", "¿"]);
    for (const button of buttons) expect(button.type).toBe("button");
  });

  it("click inserts the character at the caret and advances it", () => {
    const { container, textarea } = setup(["ñ"]);
    textarea.value = "maana";
    textarea.setSelectionRange(2, 2);
    (container.querySelector("button") as HTMLButtonElement).click();
    expect(textarea.value).toBe("mañana");
    expect(textarea.selectionStart).toBe(3);
    expect(textarea.selectionEnd).toBe(3);
  });

  it("click replaces the selection and reports the new value", () => {
    const { container, textarea, inserted } = setup(["ñ"]);
    textarea.value = "maXXana";
    textarea.setSelectionRange(2, 4);
    (container.querySelector("button") as HTMLButtonElement).click();
    expect(textarea.value).toBe("mañana");
    expect(inserted).toEqual(["mañana"]);
  });
});
