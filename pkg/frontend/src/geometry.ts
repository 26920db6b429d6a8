// Pure geometry for the two synchronized views.
//
// Square view: the model |x| + |y| <= d drawn in a viewport, vertices of
// all four reflected copies clickable. Disk view: the homeomorphism
// p -> p * |p|_1 / (d * |p|_2) sends the model onto the unit disk with
// antipodal boundary points kept antipodal, so nesting reads off directly.

import { Vertex } from "./types.js";

export interface Viewport {
  size: number;
  margin: number;
}

export function squareToScreen(
  p: [number, number],
  degree: number,
  vp: Viewport,
): [number, number] {
  const span = vp.size - 2 * vp.margin;
  const x = vp.margin + ((p[0] + degree) / (2 * degree)) * span;
  const y = vp.margin + ((degree - p[1]) / (2 * degree)) * span;
  return [x, y];
}

export function screenToSquare(
  q: [number, number],
  degree: number,
  vp: Viewport,
): [number, number] {
  const span = vp.size - 2 * vp.margin;
  const x = ((q[0] - vp.margin) / span) * 2 * degree - degree;
  const y = degree - ((q[1] - vp.margin) / span) * 2 * degree;
  return [x, y];
}

export function modelToDisk(p: [number, number], degree: number): [number, number] {
  const l1 = Math.abs(p[0]) + Math.abs(p[1]);
  if (l1 === 0) return [0, 0];
  const l2 = Math.hypot(p[0], p[1]);
  const f = l1 / (degree * l2);
  return [p[0] * f, p[1] * f];
}

export function diskToScreen(p: [number, number], vp: Viewport): [number, number] {
  const r = (vp.size - 2 * vp.margin) / 2;
  const c = vp.size / 2;
  return [c + p[0] * r, c - p[1] * r];
}

/** All reflected copies of a base vertex, with their extended signs. */
export function reflectedVertices(
  v: Vertex,
  sign: 1 | -1,
): { point: [number, number]; sign: 1 | -1 }[] {
  const out: { point: [number, number]; sign: 1 | -1 }[] = [];
  const seen = new Set<string>();
  for (const e1 of [1, -1]) {
    for (const e2 of [1, -1]) {
      const point: [number, number] = [e1 * v[0], e2 * v[1]];
      const key = `${point[0]},${point[1]}`;
      if (seen.has(key)) continue;
      seen.add(key);
      const flips = (e1 < 0 ? v[0] : 0) + (e2 < 0 ? v[1] : 0);
      out.push({ point, sign: (flips % 2 === 1 ? -sign : sign) as 1 | -1 });
    }
  }
  return out;
}

/** Nearest base (first-quadrant) vertex to a square-model point. */
export function pickVertex(
  p: [number, number],
  vertices: Vertex[],
  radius: number,
): Vertex | null {
  let best: Vertex | null = null;
  let bestDist = radius;
  const candidates: [Vertex, [number, number]][] = [];
  for (const v of vertices) {
    for (const e1 of [1, -1]) {
      for (const e2 of [1, -1]) {
        candidates.push([v, [e1 * v[0], e2 * v[1]]]);
      }
    }
  }
  for (const [base, q] of candidates) {
    const d = Math.hypot(q[0] - p[0], q[1] - p[1]);
    if (d < bestDist) {
      bestDist = d;
      best = base;
    }
  }
  return best;
}

export function parseRational(x: number | string): number {
  if (typeof x === "number") return x;
  const [num, den] = x.split("/");
  return Number(num) / Number(den ?? "1");
}
