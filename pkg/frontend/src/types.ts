// Wire types for the translation server API (schema_version 1).

export type Lang = "yue" | "en";

export interface Direction {
  source: Lang;
  target: Lang;
}

export interface ModelInfo {
  base: string;
  training_category: string;
  source_lang: string;
  target_lang: string;
  display_name: string;
  path?: string;
}

export interface ModelsResponse {
  schema_version: number;
  models: ModelInfo[];
}

export interface TranslateRequest {
  model_type: string;
  training_category: string;
  source_lang: string;
  target_lang: string;
  text: string;
}

export interface TranslateResponse {
  schema_version: number;
  translation: string;
  model: ModelInfo;
  latency_ms: number;
}

export const LANG_LABELS: Record<Lang, string> = {
  yue: "Cantonese",
  en: "English",
};
