import { describe, expect, it } from "vitest";

import {
  diskToScreen,
  modelToDisk,
  parseRational,
  pickVertex,
  reflectedVertices,
  screenToSquare,
  squareToScreen,
} from "../src/geometry.js";

const VP = { size: 560, margin: 24 };

describe("square view transforms", () => {
  it("round-trips model coordinates", () => {
    for (const p of [[0, 0], [3, -2], [-6, 6], [1.5, 0.5]] as [number, number][]) {
      const q = screenToSquare(squareToScreen(p, 6, VP), 6, VP);
      expect(q[0]).toBeCloseTo(p[0], 9);
      expect(q[1]).toBeCloseTo(p[1], 9);
    }
  });

  it("maps the model center to the viewport center", () => {
    expect(squareToScreen([0, 0], 4, VP)).toEqual([280, 280]);
  });
});

describe("disk model", () => {
  it("sends the boundary onto the unit circle", () => {
    for (const p of [[6, 0], [3, 3], [-2, 4], [0, -6]] as [number, number][]) {
      const q = modelToDisk(p, 6);
      expect(Math.hypot(q[0], q[1])).toBeCloseTo(1, 9);
    }
  });

  it("keeps antipodal boundary points antipodal", () => {
    const a = modelToDisk([4, 2], 6);
    const b = modelToDisk([-4, -2], 6);
    expect(a[0]).toBeCloseTo(-b[0], 9);
    expect(a[1]).toBeCloseTo(-b[1], 9);
  });

  it("fixes the origin and stays inside the disk", () => {
    expect(modelToDisk([0, 0], 6)).toEqual([0, 0]);
    const q = modelToDisk([1, 1], 6);
    expect(Math.hypot(q[0], q[1])).toBeLessThan(1);
    const [cx, cy] = diskToScreen([0, 0], VP);
    expect([cx, cy]).toEqual([280, 280]);
  });
});

describe("reflectedVertices", () => {
  it("applies the sign extension rule", () => {
    // sigma(1,0) = +1: the copy at (-1,0) carries -1
    const copies = reflectedVertices([1, 0], 1);
    const at = (x: number, y: number) =>
      copies.find((c) => c.point[0] === x && c.point[1] === y)!.sign;
    expect(at(1, 0)).toBe(1);
    expect(at(-1, 0)).toBe(-1);
  });

  it("never flips even exponents and dedupes axis points", () => {
    const copies = reflectedVertices([2, 0], 1);
    expect(copies.length).toBe(2); // (2,0) and (-2,0) only
    expect(copies.every((c) => c.sign === 1)).toBe(true);
  });

  it("handles the origin once", () => {
    expect(reflectedVertices([0, 0], -1)).toEqual([{ point: [0, 0], sign: -1 }]);
  });
});

describe("pickVertex", () => {
  it("selects the nearest base vertex across reflections", () => {
    const verts: [number, number][] = [[0, 0], [1, 0], [0, 1]];
    expect(pickVertex([-0.95, 0.1], verts, 0.3)).toEqual([1, 0]);
    expect(pickVertex([0.02, -1.01], verts, 0.3)).toEqual([0, 1]);
    expect(pickVertex([0.5, 0.5], verts, 0.3)).toBeNull();
  });
});

describe("parseRational", () => {
  it("parses service rationals", () => {
    expect(parseRational("3/2")).toBe(1.5);
    expect(parseRational("-5/2")).toBe(-2.5);
    expect(parseRational(4)).toBe(4);
    expect(parseRational("7")).toBe(7);
  });
});
