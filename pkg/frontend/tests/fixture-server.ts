// In-memory stand-in for the translation server: implements the two
// endpoints over a fixed registry and an involution cipher, and counts
// requests (including the concurrent-translate high-water mark) so tests
// can assert on traffic, not just on rendered state.

import type { ModelInfo } from "../src/types";

const SOURCE_CHARS = "abcdefghijklm";
const TARGET_CHARS = "nopqrstuvwxyz";

export function cipherText(text: string): string {
  let out = "";
  for (const ch of text) {
    const si = SOURCE_CHARS.indexOf(ch);
    const ti = TARGET_CHARS.indexOf(ch);
    if (si >= 0) out += TARGET_CHARS[si];
    else if (ti >= 0) out += SOURCE_CHARS[ti];
    else out += ch;
  }
  return out;
}

export const FIXTURE_MODELS: ModelInfo[] = [
  {
    base: "toy",
    training_category: "baseline",
    source_lang: "yue",
    target_lang: "en",
    display_name: "toy-baseline",
  },
  {
    base: "toy",
    training_category: "ft",
    source_lang: "yue",
    target_lang: "en",
    display_name: "toy-ft",
  },
  {
    base: "toy",
    training_category: "baseline",
    source_lang: "en",
    target_lang: "yue",
    display_name: "toy-baseline",
  },
  {
    base: "nllb",
    training_category: "ft-syn-1:1-mbart",
    source_lang: "yue",
    target_lang: "en",
    display_name: "nllb-ft-syn-1:1-mbart",
  },
];

export interface FixtureCounters {
  models: number;
  translate: number;
  translateInFlight: number;
  translateInFlightMax: number;
}

export interface FixtureServer {
  fetchFn: (url: string, init?: RequestInit) => Promise<Response>;
  counters: FixtureCounters;
  /** Swap the model list (e.g. to an empty registry) for later fetches. */
  setModels(models: ModelInfo[]): void;
  /** Delay translate responses until release() is called. */
  holdTranslations(): { release: () => void };
}

function json(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function makeFixtureServer(
  models: ModelInfo[] = FIXTURE_MODELS,
): FixtureServer {
  let registry = [...models];
  const counters: FixtureCounters = {
    models: 0,
    translate: 0,
    translateInFlight: 0,
    translateInFlightMax: 0,
  };
  let gate: Promise<void> | null = null;
  let openGate: (() => void) | null = null;

  const fetchFn = async (url: string, init?: RequestInit): Promise<Response> => {
    const parsed = new URL(url, "http://fixture.test");
    if (parsed.pathname === "/models") {
      counters.models += 1;
      const type = parsed.searchParams.get("type");
      const source = parsed.searchParams.get("source");
      const matching = registry.filter(
        (m) =>
          (type === null || m.base === type) &&
          (source === null || m.source_lang === source),
      );
      return json(200, { schema_version: 1, models: matching });
    }
    if (parsed.pathname === "/translate" && init?.method === "POST") {
      counters.translate += 1;
      counters.translateInFlight += 1;
      counters.translateInFlightMax = Math.max(
        counters.translateInFlightMax,
        counters.translateInFlight,
      );
      try {
        if (gate) await gate;
        const body = JSON.parse(String(init.body));
        const model = registry.find(
          (m) =>
            m.base === body.model_type &&
            m.training_category === body.training_category &&
            m.source_lang === body.source_lang &&
            m.target_lang === body.target_lang,
        );
        if (!model) {
          return json(404, { schema_version: 1, error: "no such model" });
        }
        if (body.text.length > 2000) {
          return json(413, { schema_version: 1, error: "input too long", limit: 2000 });
        }
        return json(200, {
          schema_version: 1,
          translation: cipherText(body.text),
          model,
          latency_ms: 1.5,
        });
      } finally {
        counters.translateInFlight -= 1;
      }
    }
    return json(404, { schema_version: 1, error: "not found" });
  };

  return {
    fetchFn,
    counters,
    setModels(next: ModelInfo[]) {
      registry = [...next];
    },
    holdTranslations() {
      gate = new Promise((resolve) => {
        openGate = resolve;
      });
      return {
        release: () => {
          openGate?.();
          gate = null;
        },
      };
    },
  };
}
