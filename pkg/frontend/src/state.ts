// UI state and transitions, kept framework-free so the contract behavior
// (selection preservation, last-response-wins fetches, the single-in-flight
// translate guard) is testable without a DOM.

import { ApiClient, ApiError } from "./api";
import type { Direction, Lang, ModelInfo, TranslateResponse } from "./types";

export interface UiState {
  modelTypes: string[];
  modelType: string | null;
  categories: string[];
  selectedCategory: string | null;
  direction: Direction;
  input: string;
  translating: boolean;
  loadingModels: boolean;
  result: TranslateResponse | null;
  error: string | null; // inline translate error
  banner: string | null; // non-blocking notice (fetch failure, empty registry)
}

type Listener = (state: UiState) => void;

export class TranslatorController {
  private state: UiState = {
    modelTypes: [],
    modelType: null,
    categories: [],
    selectedCategory: null,
    direction: { source: "yue", target: "en" },
    input: "",
    translating: false,
    loadingModels: false,
    result: null,
    error: null,
    banner: null,
  };

  private listeners: Listener[] = [];
  private fetchSeq = 0; // stamps model fetches; only the latest response applies

  constructor(private readonly api: ApiClient) {}

  getState(): UiState {
    return {
      ...this.state,
      modelTypes: [...this.state.modelTypes],
      categories: [...this.state.categories],
      direction: { ...this.state.direction },
    };
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private update(patch: Partial<UiState>): void {
    this.state = { ...this.state, ...patch };
    const snapshot = this.getState();
    for (const listener of this.listeners) {
      listener(snapshot);
    }
  }

  /** Initial load: derive the model-type selector from the full registry. */
  async init(): Promise<void> {
    this.update({ loadingModels: true });
    try {
      const models = await this.api.listModels();
      const types = [...new Set(models.map((m) => m.base))];
      this.update({
        modelTypes: types,
        modelType: types[0] ?? null,
        banner: types.length ? null : "No models registered on the server.",
      });
    } catch (error) {
      this.update({ banner: describe(error) });
      return;
    } finally {
      this.update({ loadingModels: false });
    }
    await this.refreshModels();
  }

  /**
   * Fetch categories for the selected (type, source). The latest issued
   * request wins; stale responses are dropped. On failure the selectors
   * keep their last-known state and only the banner changes.
   */
  async refreshModels(): Promise<void> {
    if (!this.state.modelType) {
      return;
    }
    const seq = ++this.fetchSeq;
    this.update({ loadingModels: true });
    let models: ModelInfo[];
    try {
      models = await this.api.listModels(
        this.state.modelType,
        this.state.direction.source,
      );
    } catch (error) {
      if (seq === this.fetchSeq) {
        this.update({ loadingModels: false, banner: describe(error) });
      }
      return;
    }
    if (seq !== this.fetchSeq) {
      return; // a newer fetch is in flight or already applied
    }
    const categories = [...new Set(models.map((m) => m.training_category))];
    const previous = this.state.selectedCategory;
    const selectedCategory =
      previous !== null && categories.includes(previous)
        ? previous
        : (categories[0] ?? null);
    this.update({
      categories,
      selectedCategory,
      loadingModels: false,
      banner: categories.length
        ? null
        : "No models available for this selection.",
    });
  }

  async setModelType(type: string): Promise<void> {
    if (!this.state.modelTypes.includes(type)) {
      return;
    }
    this.update({ modelType: type });
    await this.refreshModels();
  }

  setCategory(category: string): void {
    if (this.state.categories.includes(category)) {
      this.update({ selectedCategory: category });
    }
  }

  /** Swap source/target and refetch the categories for the new source. */
  async toggleDirection(): Promise<void> {
    const { source, target } = this.state.direction;
    this.update({
      direction: { source: target as Lang, target: source as Lang },
      result: null,
    });
    await this.refreshModels();
  }

  setInput(text: string): void {
    this.update({ input: text });
  }

  canTranslate(): boolean {
    return (
      !this.state.translating &&
      this.state.input.trim().length > 0 &&
      this.state.modelType !== null &&
      this.state.selectedCategory !== null
    );
  }

  /**
   * Issue one translate request. Re-entrant calls while a request is in
   * flight are dropped (single-in-flight guard), so a double-click sends
   * exactly one request. Errors render inline and keep the input intact.
   */
  async translate(): Promise<void> {
    if (!this.canTranslate()) {
      return;
    }
    this.update({ translating: true, error: null });
    try {
      const result = await this.api.translate({
        model_type: this.state.modelType!,
        training_category: this.state.selectedCategory!,
        source_lang: this.state.direction.source,
        target_lang: this.state.direction.target,
        text: this.state.input,
      });
      this.update({ result });
    } catch (error) {
      this.update({ error: describe(error) });
    } finally {
      this.update({ translating: false });
    }
  }
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return error.message;
  }
  if (error instanceof Error) {
    return `Could not reach the server: ${error.message}`;
  }
  return "Unexpected error";
}
