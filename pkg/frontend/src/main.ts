import { ApiClient } from "./api";
import { bindApp } from "./app";
import { TranslatorController } from "./state";

// Server origin: ?api=<url> wins, then same-origin, then the dev default.
const params = new URLSearchParams(window.location.search);
const baseUrl =
  params.get("api") ??
  (window.location.origin.startsWith("http")
    ? window.location.origin
    : "http://127.0.0.1:8900");

bindApp(document, new TranslatorController(new ApiClient(baseUrl)));
