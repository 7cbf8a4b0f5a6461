// DOM wiring: render the controller state into the static page and feed
// user events back in. Selector contents are entirely data-driven from the
// controller (which mirrors the last server response).

import { TranslatorController, UiState } from "./state";
import { LANG_LABELS } from "./types";
import type { Lang } from "./types";

interface Elements {
  modelType: HTMLSelectElement;
  category: HTMLSelectElement;
  directionButton: HTMLButtonElement;
  sourceLabel: HTMLElement;
  targetLabel: HTMLElement;
  input: HTMLTextAreaElement;
  translateButton: HTMLButtonElement;
  output: HTMLElement;
  modelUsed: HTMLElement;
  banner: HTMLElement;
  error: HTMLElement;
}

function grab(root: Document, id: string): HTMLElement {
  const element = root.getElementById(id);
  if (!element) {
    throw new Error(`missing element #${id}`);
  }
  return element;
}

export function bindApp(root: Document, controller: TranslatorController): void {
  const el: Elements = {
    modelType: grab(root, "model-type") as HTMLSelectElement,
    category: grab(root, "training-category") as HTMLSelectElement,
    directionButton: grab(root, "direction-toggle") as HTMLButtonElement,
    sourceLabel: grab(root, "source-label"),
    targetLabel: grab(root, "target-label"),
    input: grab(root, "source-text") as HTMLTextAreaElement,
    translateButton: grab(root, "translate-button") as HTMLButtonElement,
    output: grab(root, "translation-output"),
    modelUsed: grab(root, "model-used"),
    banner: grab(root, "banner"),
    error: grab(root, "error"),
  };

  el.modelType.addEventListener("change", () => {
    void controller.setModelType(el.modelType.value);
  });
  el.category.addEventListener("change", () => {
    controller.setCategory(el.category.value);
  });
  el.directionButton.addEventListener("click", () => {
    void controller.toggleDirection();
  });
  el.input.addEventListener("input", () => {
    controller.setInput(el.input.value);
  });
  el.translateButton.addEventListener("click", () => {
    void controller.translate();
  });

  controller.subscribe((state) => render(el, state, controller));
  void controller.init();
}

function fillSelect(select: HTMLSelectElement, options: string[], selected: string | null): void {
  select.innerHTML = "";
  for (const value of options) {
    const option = select.ownerDocument.createElement("option");
    option.value = value;
    option.textContent = value;
    option.selected = value === selected;
    select.appendChild(option);
  }
  select.disabled = options.length === 0;
}

function render(el: Elements, state: UiState, controller: TranslatorController): void {
  fillSelect(el.modelType, state.modelTypes, state.modelType);
  fillSelect(el.category, state.categories, state.selectedCategory);

  el.sourceLabel.textContent = LANG_LABELS[state.direction.source as Lang];
  el.targetLabel.textContent = LANG_LABELS[state.direction.target as Lang];

  el.translateButton.disabled = !controller.canTranslate();
  el.translateButton.textContent = state.translating ? "Translating…" : "Translate";

  el.banner.textContent = state.banner ?? "";
  el.banner.hidden = state.banner === null;
  el.error.textContent = state.error ?? "";
  el.error.hidden = state.error === null;

  if (state.result) {
    el.output.textContent = state.result.translation;
    el.modelUsed.textContent =
      `${state.result.model.display_name} · ${state.result.latency_ms.toFixed(1)} ms`;
  } else {
    el.output.textContent = "";
    el.modelUsed.textContent = "";
  }
}
