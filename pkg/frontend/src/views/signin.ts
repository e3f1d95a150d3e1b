/** Sign-in and registration. A mutation attempted while signed out lands
 * here with the interrupted view in `resume`, and returns there on success.
 */

import type { App, View } from "../app.js";
import { el, clear } from "../dom.js";

export function renderSignin(app: App, resume?: View): HTMLElement {
  const box = el(
    "section",
    {},
    el("h2", {}, "Sign in"),
    el(
      "p",
      { class: "muted" },
      resume
        ? "That action needs an account. Sign in (or join) and you will be returned to it."
        : "Welcome back.",
    ),
  );
  const notice = el("div", { "data-role": "signin-notice" });
  box.append(notice);
  const fail = (message: string) => {
    clear(notice);
    notice.append(el("div", { class: "banner error", role: "alert" }, message));
  };
  const finish = () => app.navigate(resume ?? { kind: "home" });

  const handleInput = el("input", { type: "text", placeholder: "handle", "data-role": "handle" });
  const credentialInput = el("input", {
    type: "password",
    placeholder: "credential",
    "data-role": "credential",
  });
  box.append(
    el(
      "form",
      {
        class: "stack",
        "data-role": "signin-form",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          try {
            const session = await app.client.openSession(
              handleInput.value.trim(),
              credentialInput.value,
            );
            app.signedIn(session);
            finish();
          } catch (err) {
            fail(String(err));
          }
        },
      },
      handleInput,
      credentialInput,
      el("button", { class: "action", type: "submit" }, "sign in"),
    ),
  );

  const newHandle = el("input", { type: "text", placeholder: "pick a handle" });
  const newCredential = el("input", { type: "password", placeholder: "pick a credential" });
  box.append(
    el("h3", {}, "New here?"),
    el(
      "form",
      {
        class: "stack",
        "data-role": "register-form",
        onsubmit: async (event: Event) => {
          event.preventDefault();
          try {
            await app.client.register(newHandle.value.trim(), newCredential.value);
            const session = await app.client.openSession(
              newHandle.value.trim(),
              newCredential.value,
            );
            app.signedIn(session);
            finish();
          } catch (err) {
            fail(String(err));
          }
        },
      },
      newHandle,
      newCredential,
      el("button", { class: "action", type: "submit" }, "join"),
    ),
  );
  return box;
}
