/**
 * Wire types for the langscore query service (/api/v1/*).
 *
 * These mirror the canonical JSON forms the service emits; the UI never
 * computes scores itself, it only displays fields from these payloads.
 */

export type LevelToken = "no" | "partially" | "mostly" | "fully";

export const LEVEL_TOKENS: LevelToken[] = ["no", "partially", "mostly", "fully"];

export type Category = "all" | "technical-only" | "environmental-only";

export interface SubParameterDoc {
  id: string;
  name: string;
  kind: "qualitative" | "quantitative-raw";
}

export interface ParameterDoc {
  id: string;
  name: string;
  category: "technical" | "environmental";
  score_mode: "aggregate-sub-ratings" | "direct-override";
  sub_parameters: SubParameterDoc[];
}

export interface SubjectDoc {
  id: string;
  name: string;
  attributes: { paradigm: string; typing: string; strength: string } | null;
}

export interface RatingDoc {
  subject: string;
  parameter: string;
  sub_parameter?: string;
  value: LevelToken | number;
  provenance: "paper" | "editorial" | "inferred" | "user";
}

export interface DatasetDoc {
  framework: {
    scale: Record<LevelToken, number>;
    parameters: ParameterDoc[];
  };
  subjects: SubjectDoc[];
  ratings: RatingDoc[];
  demand: unknown;
  transition_costs: unknown;
  weight_profiles: { name: string; weights: Record<string, number> }[];
}

export interface ParameterScoreDoc {
  parameter: string;
  unit_score: number;
  weight: number;
  weighted_score: number;
  sub_scores: Record<string, number> | null;
  provenance: string[];
}

export interface ScoreCardDoc {
  subject: string;
  profile: string;
  category: Category;
  ls: number;
  ls_bounded: number;
  ls_tech: number;
  ls_env: number;
  ls_tech_bounded: number;
  ls_env_bounded: number;
  parameters: ParameterScoreDoc[];
}

export interface ScoreResponse {
  profile: string;
  category: Category;
  ranking: string[];
  scorecards: ScoreCardDoc[];
}

/** One rating-cell override, exactly as POST /api/v1/whatif accepts it. */
export interface OverrideBody {
  subject: string;
  parameter: string;
  sub_parameter?: string;
  level?: LevelToken;
  score?: number;
  raw?: number;
}

export interface WhatIfBody {
  profile?: string;
  weights?: Record<string, number>;
  overrides?: OverrideBody[];
  category?: Category;
}

export interface SweepBody {
  parameter: string;
  from: number;
  to: number;
  steps: number;
  profile?: string;
  category?: Category;
}

export interface SweepResponse {
  parameter: string;
  grid: number[];
  rankings: string[][];
  crossovers: { weight: number; subjects: [string, string] }[];
}

export interface ApiError {
  error: string;
  field?: string;
}
