/** Browser entry point. `window.TC_API_BASE` points the workbench at a
 * translation service origin; empty means same-origin.
 */

import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    TC_API_BASE?: string;
  }
}

const root = document.getElementById("app");
if (root) {
  const client = new ApiClient(window.TC_API_BASE ?? "");
  const app = new App(root, client);
  void app.start();
}
