import { mountApp } from "./main.js";

const root = document.getElementById("app");
if (root !== null) {
  mountApp(root);
}
