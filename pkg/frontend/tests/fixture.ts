/** Mocked API fixture mirroring the backend's demo corpus: six languages
 * over four phyla, the rice concepts with the English and Swahili gaps,
 * the two fish cognate clusters, and the 67-concept cousins domain. */

import type {
  Clusters,
  Concept,
  DomainTree,
  LanguagePage,
  LayoutResult,
  Lexicalisations,
  Neighborhood,
  TreeNode,
  WordLookup,
} from "../src/types.js";

export const LANGUAGES: LanguagePage = {
  items: [
    { code: "eng", name: "English", phylum: "Indo-European", latitude: 52.0, longitude: -1.0, senses: 3 },
    { code: "fin", name: "Finnish", phylum: "Uralic", latitude: 62.0, longitude: 26.0, senses: 1 },
    { code: "hun", name: "Hungarian", phylum: "Uralic", latitude: 47.0, longitude: 19.5, senses: 1 },
    { code: "ita", name: "Italian", phylum: "Indo-European", latitude: 42.8, longitude: 12.8, senses: 2 },
    { code: "kan", name: "Kannada", phylum: "Dravidian", latitude: 13.6, longitude: 76.7, senses: 1 },
    { code: "swa", name: "Swahili", phylum: "Niger-Congo", latitude: -6.0, longitude: 35.0, senses: 1 },
  ],
  total: 6,
  offset: 0,
  limit: 100,
};

export const CONCEPTS: Record<string, Concept> = {
  "rice-general": {
    id: "rice-general", gloss: "cereal grain used as food", pos: "noun",
    pwn30_id: "pwn30-rice", interlingual: true,
  },
  "raw-rice": {
    id: "raw-rice", gloss: "rice in its raw, uncooked state", pos: "noun",
    pwn30_id: null, interlingual: true,
  },
  "cooked-rice": {
    id: "cooked-rice", gloss: "rice prepared by cooking", pos: "noun",
    pwn30_id: null, interlingual: true,
  },
  fish: {
    id: "fish", gloss: "aquatic vertebrate animal", pos: "noun",
    pwn30_id: "pwn30-fish", interlingual: true,
  },
};

export const LEXICALISATIONS: Record<string, Lexicalisations> = {
  "rice-general": {
    concept: "rice-general",
    languages: {
      eng: { status: "lexicalised", lemmas: ["rice"] },
      fin: { status: "unknown", lemmas: [] },
      hun: { status: "unknown", lemmas: [] },
      ita: { status: "lexicalised", lemmas: ["riso"] },
      kan: { status: "unknown", lemmas: [] },
      swa: { status: "gap", lemmas: [] },
    },
  },
  fish: {
    concept: "fish",
    languages: {
      eng: { status: "lexicalised", lemmas: ["fish"] },
      fin: { status: "lexicalised", lemmas: ["kala"] },
      hun: { status: "lexicalised", lemmas: ["hal"] },
      ita: { status: "lexicalised", lemmas: ["pesce"] },
      kan: { status: "unknown", lemmas: [] },
      swa: { status: "unknown", lemmas: [] },
    },
  },
};

export const CLUSTERS: Record<string, Clusters> = {
  "rice-general": {
    concept: "rice-general",
    clusters: [[
      { id: "eng:rice:rice-general", language: "eng", lemma: "rice", concept: "rice-general", source_id: "src1" },
      { id: "ita:riso:rice-general", language: "ita", lemma: "riso", concept: "rice-general", source_id: "src1" },
    ]],
    language_cluster: { eng: 0, ita: 0 },
    ambiguous: [],
  },
  fish: {
    concept: "fish",
    clusters: [
      [
        { id: "eng:fish:fish", language: "eng", lemma: "fish", concept: "fish", source_id: "src1" },
        { id: "ita:pesce:fish", language: "ita", lemma: "pesce", concept: "fish", source_id: "src1" },
      ],
      [
        { id: "fin:kala:fish", language: "fin", lemma: "kala", concept: "fish", source_id: "src1" },
        { id: "hun:hal:fish", language: "hun", lemma: "hal", concept: "fish", source_id: "src1" },
      ],
    ],
    language_cluster: { eng: 0, fin: 1, hun: 1, ita: 0 },
    ambiguous: [],
  },
};

export const NEIGHBORHOODS: Record<string, Neighborhood> = {
  "rice-general|eng": {
    focus: "rice-general",
    language: "eng",
    nodes: [
      { id: "rice-general", status: "lexicalised", lemmas: ["rice"] },
      { id: "cooked-rice", status: "unknown", lemmas: [] },
      { id: "raw-rice", status: "gap", lemmas: [] },
    ],
    edges: [
      { source: "raw-rice", kind: "is-a", target: "rice-general" },
      { source: "cooked-rice", kind: "is-a", target: "rice-general" },
    ],
  },
  "rice-general|swa": {
    focus: "rice-general",
    language: "swa",
    nodes: [
      { id: "rice-general", status: "gap", lemmas: [] },
      { id: "cooked-rice", status: "unknown", lemmas: [] },
      { id: "raw-rice", status: "lexicalised", lemmas: ["s-raw"] },
    ],
    edges: [
      { source: "raw-rice", kind: "is-a", target: "rice-general" },
      { source: "cooked-rice", kind: "is-a", target: "rice-general" },
    ],
  },
};

export const WORDS: Record<string, WordLookup> = {
  "eng|rice": {
    language: "eng",
    lemma: "rice",
    entries: [{
      sense: { id: "eng:rice:rice-general", language: "eng", lemma: "rice", concept: "rice-general", source_id: "src1" },
      concept: CONCEPTS["rice-general"],
      intra_relations: [],
      cognates: [{
        kind: "cognate",
        sense: { id: "ita:riso:rice-general", language: "ita", lemma: "riso", concept: "rice-general", source_id: "src1" },
        source_id: "src1",
      }],
    }],
  },
};

function cousinsTree(language: "eng" | "dra"): DomainTree {
  const children: string[] = [];
  for (let i = 1; i <= 66; i += 1) {
    children.push(`cousin-${String(i).padStart(3, "0")}`);
  }
  const nodes: TreeNode[] = [{
    id: "cousin",
    status: language === "eng" ? "lexicalised" : "unknown",
    lemmas: language === "eng" ? ["cousin"] : [],
    children,
  }];
  children.forEach((id, index) => {
    let status: TreeNode["status"];
    let lemmas: string[] = [];
    if (language === "eng") {
      status = "gap";
    } else if (index < 16) {
      status = "lexicalised";
      lemmas = [`dw${String(index + 1).padStart(2, "0")}`];
    } else {
      status = "unknown";
    }
    nodes.push({ id, status, lemmas, children: [] });
  });
  return { root: "cousin", language, nodes };
}

export const TREES: Record<string, DomainTree> = {
  "cousin|eng": cousinsTree("eng"),
  "cousin|dra": cousinsTree("dra"),
};

export const LAYOUT: LayoutResult = {
  threshold: 0.5,
  seed: 0,
  iterations: 100,
  nodes: ["eng", "fin", "hun", "ita"],
  positions: {
    eng: [1.2, -6.9],
    fin: [-1.1, 6.1],
    hun: [-0.9, 4.1],
    ita: [3.4, -7.0],
  },
  edges: [
    { a: "eng", b: "ita", weight: 1.0 },
    { a: "fin", b: "hun", weight: 1.0 },
  ],
};
