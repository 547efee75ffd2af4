/** Response shapes of the /v1 JSON API. The UI renders these verbatim and
 * never derives its own analytics. */

export type Status = "lexicalised" | "gap" | "unknown";

export interface Language {
  code: string;
  name: string;
  phylum: string | null;
  latitude: number | null;
  longitude: number | null;
  senses?: number;
}

export interface LanguagePage {
  items: Language[];
  total: number;
  offset: number;
  limit: number;
}

export interface Concept {
  id: string;
  gloss: string;
  pos: string;
  pwn30_id: string | null;
  interlingual: boolean;
}

export interface LexicalisationEntry {
  status: Status;
  lemmas: string[];
}

export interface Lexicalisations {
  concept: string;
  languages: Record<string, LexicalisationEntry>;
}

export interface SenseRef {
  id: string;
  language: string;
  lemma: string;
  concept: string;
  source_id: string;
}

export interface Clusters {
  concept: string;
  clusters: SenseRef[][];
  language_cluster: Record<string, number>;
  ambiguous: string[];
}

export interface WordEntry {
  sense: SenseRef;
  concept: Concept;
  intra_relations: { kind: string; source: string; target: string; source_id: string }[];
  cognates: { kind: string; sense: SenseRef; source_id: string }[];
}

export interface WordLookup {
  language: string;
  lemma: string;
  entries: WordEntry[];
}

export interface NeighborhoodNode {
  id: string;
  status: Status;
  lemmas: string[];
}

export interface Neighborhood {
  focus: string;
  language: string;
  nodes: NeighborhoodNode[];
  edges: { source: string; kind: string; target: string }[];
}

export interface TreeNode {
  id: string;
  status: Status;
  lemmas: string[];
  children: string[];
}

export interface DomainTree {
  root: string;
  language: string;
  nodes: TreeNode[];
}

export interface LayoutResult {
  threshold: number;
  seed: number;
  iterations: number;
  nodes: string[];
  positions: Record<string, [number, number]>;
  edges: { a: string; b: string; weight: number }[];
}
