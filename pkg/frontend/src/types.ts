// Wire types mirroring the patchwork service JSON.

export type Vertex = [number, number];

export interface PatchworkDocument {
  schema?: string;
  dim: number;
  degree: number;
  cells: number[][][];
  signs: Record<string, 1 | -1>;
  metadata?: Record<string, unknown>;
}

export interface RestrictionEntry {
  name: string;
  applicable: boolean;
  passed: boolean | null;
  slack: number | null;
  detail: string;
}

export interface RestrictionReport {
  entries: RestrictionEntry[];
  criticalAnomaly: boolean;
}

export interface NestingForest {
  parent: Record<string, number | null>;
  depth: Record<string, number>;
}

export interface TopologyReport {
  degree: number;
  dim: number;
  components: number;
  oneSided: number;
  ovals: {
    p: number;
    n: number;
    depthHistogram: Record<string, number>;
    forest: NestingForest | null;
    characteristics: Record<string, number>;
  };
  flags: Record<string, number>;
  regions: { id: number; chi: number; pieces: number }[];
  principal: number | null;
  chi: number;
  bTotal: number;
  aDefect: number;
  mod2Degree: number;
  seed: number;
  componentChi: number[];
}

export interface AnalyzeResponse {
  document: PatchworkDocument;
  topology: TopologyReport;
  restrictions: RestrictionReport;
  mCurve: boolean;
}

export interface BuildResponse {
  affine: ComplexJson;
  projective: ComplexJson;
}

export interface ComplexJson {
  dim: number;
  degree: number;
  model: string;
  nonprimitiveWarning: boolean;
  pieces: (number | string)[][][];
  adjacency: { pieces: number[] }[];
}

export interface ExampleInfo {
  id: string;
  dim: number;
  degree: number;
  description: string;
}
