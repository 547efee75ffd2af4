/** Browser entry point: mounts the explorer on #app against the API
 * served from the same origin (lexdiv serve). */

import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

const root = document.getElementById("app");
if (root) {
  const app = ExplorerApp.fromLocation(root, new ApiClient("/v1"));
  void app.render();
}
