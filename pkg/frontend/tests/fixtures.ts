/** A miniature dataset document shaped like the service's, for unit tests
 * that should not need a live service. */

import type { DatasetDoc, ScoreResponse } from "../src/types";

export const tinyDataset: DatasetDoc = {
  framework: {
    scale: { no: 0, partially: 0.4, mostly: 0.7, fully: 1 },
    parameters: [
      {
        id: "alpha",
        name: "Alpha",
        category: "technical",
        score_mode: "aggregate-sub-ratings",
        sub_parameters: [
          { id: "a1", name: "A one", kind: "qualitative" },
          { id: "a2", name: "A two", kind: "qualitative" },
        ],
      },
      {
        id: "beta",
        name: "Beta",
        category: "environmental",
        score_mode: "direct-override",
        sub_parameters: [{ id: "b1", name: "B one", kind: "qualitative" }],
      },
    ],
  },
  subjects: [
    { id: "x", name: "X", attributes: null },
    { id: "y", name: "Y", attributes: null },
  ],
  ratings: [
    { subject: "x", parameter: "alpha", sub_parameter: "a1", value: "fully", provenance: "paper" },
    { subject: "x", parameter: "alpha", sub_parameter: "a2", value: "no", provenance: "paper" },
    { subject: "y", parameter: "alpha", sub_parameter: "a1", value: "mostly", provenance: "paper" },
    { subject: "y", parameter: "alpha", sub_parameter: "a2", value: "partially", provenance: "paper" },
    { subject: "x", parameter: "beta", value: 0.9, provenance: "inferred" },
    { subject: "y", parameter: "beta", value: 0.3, provenance: "inferred" },
  ],
  demand: null,
  transition_costs: null,
  weight_profiles: [{ name: "default", weights: { alpha: 1, beta: 1 } }],
};

export const tinyScore: ScoreResponse = {
  profile: "default",
  category: "all",
  ranking: ["x", "y"],
  scorecards: [
    {
      subject: "x",
      profile: "default",
      category: "all",
      ls: 1.4,
      ls_bounded: 0.7,
      ls_tech: 0.5,
      ls_env: 0.9,
      ls_tech_bounded: 0.5,
      ls_env_bounded: 0.9,
      parameters: [
        {
          parameter: "alpha",
          unit_score: 0.5,
          weight: 1,
          weighted_score: 0.5,
          sub_scores: { a1: 1, a2: 0 },
          provenance: ["paper"],
        },
        {
          parameter: "beta",
          unit_score: 0.9,
          weight: 1,
          weighted_score: 0.9,
          sub_scores: null,
          provenance: ["inferred"],
        },
      ],
    },
    {
      subject: "y",
      profile: "default",
      category: "all",
      ls: 0.85,
      ls_bounded: 0.425,
      ls_tech: 0.55,
      ls_env: 0.3,
      ls_tech_bounded: 0.55,
      ls_env_bounded: 0.3,
      parameters: [
        {
          parameter: "alpha",
          unit_score: 0.55,
          weight: 1,
          weighted_score: 0.55,
          sub_scores: { a1: 0.7, a2: 0.4 },
          provenance: ["paper"],
        },
        {
          parameter: "beta",
          unit_score: 0.3,
          weight: 1,
          weighted_score: 0.3,
          sub_scores: null,
          provenance: ["inferred"],
        },
      ],
    },
  ],
};
