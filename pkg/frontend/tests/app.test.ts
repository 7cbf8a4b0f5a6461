// @vitest-environment happy-dom

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { bindApp } from "../src/app";
import { TranslatorController } from "../src/state";
import { cipherText, makeFixtureServer } from "./fixture-server";

const here = dirname(fileURLToPath(import.meta.url));
// The module script is bound manually in these tests; drop the tag so the
// DOM environment does not try to fetch the built bundle.
const pageHtml = readFileSync(join(here, "..", "index.html"), "utf-8").replace(
  /<script[^>]*><\/script>/,
  "",
);

function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

describe("bound page", () => {
  beforeEach(() => {
    document.documentElement.innerHTML = pageHtml;
  });

  function boot(server = makeFixtureServer()) {
    const controller = new TranslatorController(
      new ApiClient("http://fixture.test", server.fetchFn),
    );
    bindApp(document, controller);
    return { controller, server };
  }

  it("fills the selectors from the server and enables translate on input", async () => {
    boot();
    await flush();
    const typeSelect = document.getElementById("model-type") as HTMLSelectElement;
    const categorySelect = document.getElementById("training-category") as HTMLSelectElement;
    expect([...typeSelect.options].map((o) => o.value)).toEqual(["toy", "nllb"]);
    expect([...categorySelect.options].map((o) => o.value)).toEqual(["baseline", "ft"]);

    const button = document.getElementById("translate-button") as HTMLButtonElement;
    expect(button.disabled).toBe(true);
    const input = document.getElementById("source-text") as HTMLTextAreaElement;
    input.value = "abc";
    input.dispatchEvent(new Event("input"));
    await flush();
    expect(button.disabled).toBe(false);
  });

  it("translate click renders the cipher output and the model used", async () => {
    boot();
    await flush();
    const input = document.getElementById("source-text") as HTMLTextAreaElement;
    input.value = "abc klm";
    input.dispatchEvent(new Event("input"));
    const button = document.getElementById("translate-button") as HTMLButtonElement;
    button.click();
    await flush();
    expect(document.getElementById("translation-output")!.textContent).toBe(
      cipherText("abc klm"),
    );
    expect(document.getElementById("model-used")!.textContent).toContain("toy-baseline");
  });

  it("direction toggle swaps labels and refetches", async () => {
    const { server } = boot();
    await flush();
    const before = server.counters.models;
    (document.getElementById("direction-toggle") as HTMLButtonElement).click();
    await flush();
    expect(document.getElementById("source-label")!.textContent).toBe("English");
    expect(document.getElementById("target-label")!.textContent).toBe("Cantonese");
    expect(server.counters.models).toBe(before + 1);
  });

  it("rapid double-click sends exactly one request", async () => {
    const { server } = boot();
    await flush();
    const input = document.getElementById("source-text") as HTMLTextAreaElement;
    input.value = "abc";
    input.dispatchEvent(new Event("input"));
    await flush();
    const hold = server.holdTranslations();
    const button = document.getElementById("translate-button") as HTMLButtonElement;
    button.click();
    button.click();
    hold.release();
    await flush();
    expect(server.counters.translate).toBe(1);
    expect(server.counters.translateInFlightMax).toBe(1);
  });
});
