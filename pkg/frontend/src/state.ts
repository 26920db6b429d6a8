// Editor state: current document, undo/redo stacks, response cache.
//
// Documents are stored as canonical strings so undo restores the prior
// state bit-exactly; the analyze cache is keyed by document hash, which
// also deduplicates concurrent in-flight requests.

import { canonicalJson, documentHash } from "./canon.js";
import { AnalyzeResponse, PatchworkDocument, Vertex } from "./types.js";

export function vertexKey(v: Vertex): string {
  return `${v[0]},${v[1]}`;
}

export function flipSign(doc: PatchworkDocument, v: Vertex): PatchworkDocument {
  const key = vertexKey(v);
  if (!(key in doc.signs)) {
    throw new Error(`vertex ${key} is not in the document`);
  }
  const signs = { ...doc.signs, [key]: (doc.signs[key] === 1 ? -1 : 1) as 1 | -1 };
  return { ...doc, signs };
}

export function flipEdge(
  doc: PatchworkDocument,
  edge: [Vertex, Vertex],
): PatchworkDocument {
  // replace the two triangles sharing [u, v] by the flipped pair; the
  // service re-validates the result, an invalid flip is rejected there
  const [u, v] = edge;
  const has = (cell: number[][], p: Vertex) =>
    cell.some((q) => q[0] === p[0] && q[1] === p[1]);
  const incident = doc.cells.filter((c) => has(c, u) && has(c, v));
  if (incident.length !== 2) {
    throw new Error("edge is not interior");
  }
  const apex = (cell: number[][]) =>
    cell.find((q) => !(q[0] === u[0] && q[1] === u[1]) && !(q[0] === v[0] && q[1] === v[1]))!;
  const a = apex(incident[0]);
  const b = apex(incident[1]);
  const rest = doc.cells.filter((c) => !incident.includes(c));
  return {
    ...doc,
    cells: [...rest, [a, b, [...u]], [a, b, [...v]]],
  };
}

export interface StateListener {
  (state: EditorState): void;
}

export class EditorState {
  private undoStack: string[] = [];
  private redoStack: string[] = [];
  private currentText: string | null = null;
  report: AnalyzeResponse | null = null;
  private cache = new Map<string, Promise<AnalyzeResponse>>();
  private listeners: StateListener[] = [];

  constructor(private analyzeFn: (doc: PatchworkDocument) => Promise<AnalyzeResponse>) {}

  get document(): PatchworkDocument | null {
    return this.currentText === null ? null : JSON.parse(this.currentText);
  }

  get documentText(): string | null {
    return this.currentText;
  }

  onChange(listener: StateListener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this);
  }

  /** Analyze with caching and in-flight deduplication by document hash. */
  analyzeCached(doc: PatchworkDocument): Promise<AnalyzeResponse> {
    const key = documentHash(doc);
    let hit = this.cache.get(key);
    if (!hit) {
      hit = this.analyzeFn(doc);
      this.cache.set(key, hit);
      hit.catch(() => this.cache.delete(key));
    }
    return hit;
  }

  /** Load a document as a fresh editing root (clears redo, keeps undo). */
  async load(doc: PatchworkDocument): Promise<AnalyzeResponse> {
    const report = await this.analyzeCached(doc);
    if (this.currentText !== null) {
      this.undoStack.push(this.currentText);
    }
    this.redoStack = [];
    this.currentText = canonicalJson(doc);
    this.report = report;
    this.emit();
    return report;
  }

  /** Apply an edit; rejected edits leave the state untouched. */
  async apply(edit: (doc: PatchworkDocument) => PatchworkDocument): Promise<AnalyzeResponse> {
    if (this.currentText === null) {
      throw new Error("no document loaded");
    }
    const next = edit(JSON.parse(this.currentText));
    const report = await this.analyzeCached(next); // throws on server rejection
    this.undoStack.push(this.currentText);
    this.redoStack = [];
    this.currentText = canonicalJson(next);
    this.report = report;
    this.emit();
    return report;
  }

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  async undo(): Promise<void> {
    const prev = this.undoStack.pop();
    if (prev === undefined) return;
    this.redoStack.push(this.currentText!);
    this.currentText = prev;
    this.report = await this.analyzeCached(JSON.parse(prev));
    this.emit();
  }

  async redo(): Promise<void> {
    const next = this.redoStack.pop();
    if (next === undefined) return;
    this.undoStack.push(this.currentText!);
    this.currentText = next;
    this.report = await this.analyzeCached(JSON.parse(next));
    this.emit();
  }

  /** What-if preview: component-count delta of flipping one vertex. */
  async whatIf(v: Vertex): Promise<number | null> {
    if (this.currentText === null || this.report === null) return null;
    const doc = JSON.parse(this.currentText) as PatchworkDocument;
    const flipped = flipSign(doc, v);
    const report = await this.analyzeCached(flipped);
    return report.topology.components - this.report.topology.components;
  }

  /**
   * Client-driven local search: repeatedly try single flips (steepest
   * ascent on the component count), keeping server round-trips within
   * `budget` analyze calls. Every evaluated state comes from the service.
   */
  async runLocalSearch(budget: number): Promise<AnalyzeResponse> {
    if (this.currentText === null || this.report === null) {
      throw new Error("no document loaded");
    }
    let spent = 0;
    let improved = true;
    while (improved && spent < budget) {
      improved = false;
      const doc = JSON.parse(this.currentText!) as PatchworkDocument;
      const verts = Object.keys(doc.signs);
      for (const key of verts) {
        if (spent >= budget) break;
        const v = key.split(",").map(Number) as Vertex;
        const candidate = flipSign(doc, v);
        const rep = await this.analyzeCached(candidate);
        spent += 1;
        if (rep.topology.components > this.report!.topology.components) {
          await this.apply(() => candidate);
          improved = true;
          break;
        }
      }
    }
    return this.report!;
  }
}
