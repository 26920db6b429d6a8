// Canvas rendering of the two views.

import {
  diskToScreen,
  modelToDisk,
  parseRational,
  reflectedVertices,
  squareToScreen,
  Viewport,
} from "./geometry.js";
import { ComplexJson, PatchworkDocument } from "./types.js";

const CURVE = "#c92a2a";
const GRID = "#d5d5d5";
const PLUS = "#1864ab";
const SQUARE_VP: Viewport = { size: 560, margin: 24 };
const DISK_VP: Viewport = { size: 560, margin: 24 };

export function drawSquare(
  ctx: CanvasRenderingContext2D,
  doc: PatchworkDocument,
  complex: ComplexJson,
  hover: [number, number] | null,
): void {
  const d = doc.degree;
  ctx.clearRect(0, 0, SQUARE_VP.size, SQUARE_VP.size);
  ctx.lineWidth = 1;
  ctx.strokeStyle = GRID;
  for (const cell of doc.cells) {
    for (const [e1, e2] of [[1, 1], [1, -1], [-1, 1], [-1, -1]]) {
      ctx.beginPath();
      cell.forEach((v, i) => {
        const [x, y] = squareToScreen([e1 * v[0], e2 * v[1]], d, SQUARE_VP);
        if (i === 0) ctx.moveTo(x, y);
        else ctx.lineTo(x, y);
      });
      ctx.closePath();
      ctx.stroke();
    }
  }
  // model boundary
  ctx.strokeStyle = "#555";
  ctx.lineWidth = 2;
  ctx.beginPath();
  const corners: [number, number][] = [[d, 0], [0, d], [-d, 0], [0, -d]];
  corners.forEach((c, i) => {
    const [x, y] = squareToScreen(c, d, SQUARE_VP);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.closePath();
  ctx.stroke();
  // pieces
  ctx.strokeStyle = CURVE;
  ctx.lineWidth = 2.5;
  for (const piece of complex.pieces) {
    ctx.beginPath();
    piece.forEach((pt, i) => {
      const p: [number, number] = [parseRational(pt[0]), parseRational(pt[1])];
      const [x, y] = squareToScreen(p, d, SQUARE_VP);
      if (i === 0) ctx.moveTo(x, y);
      else ctx.lineTo(x, y);
    });
    ctx.stroke();
  }
  // signed vertices across all four copies
  for (const [key, sign] of Object.entries(doc.signs)) {
    const v = key.split(",").map(Number) as [number, number];
    for (const { point, sign: s } of reflectedVertices(v, sign)) {
      const [x, y] = squareToScreen(point, d, SQUARE_VP);
      ctx.beginPath();
      ctx.arc(x, y, 4.5, 0, 2 * Math.PI);
      if (s === 1) {
        ctx.fillStyle = PLUS;
        ctx.fill();
      } else {
        ctx.fillStyle = "white";
        ctx.fill();
        ctx.strokeStyle = PLUS;
        ctx.lineWidth = 1.5;
        ctx.stroke();
      }
    }
  }
  if (hover) {
    const [x, y] = squareToScreen(hover, d, SQUARE_VP);
    ctx.beginPath();
    ctx.arc(x, y, 9, 0, 2 * Math.PI);
    ctx.strokeStyle = "#f08c00";
    ctx.lineWidth = 2;
    ctx.stroke();
  }
}

export function drawDisk(
  ctx: CanvasRenderingContext2D,
  doc: PatchworkDocument,
  complex: ComplexJson,
): void {
  const d = doc.degree;
  ctx.clearRect(0, 0, DISK_VP.size, DISK_VP.size);
  const [cx, cy] = diskToScreen([0, 0], DISK_VP);
  const [rx] = diskToScreen([1, 0], DISK_VP);
  ctx.beginPath();
  ctx.arc(cx, cy, rx - cx, 0, 2 * Math.PI);
  ctx.strokeStyle = "#555";
  ctx.lineWidth = 2;
  ctx.stroke();
  ctx.strokeStyle = CURVE;
  ctx.lineWidth = 2;
  for (const piece of complex.pieces) {
    ctx.beginPath();
    // sample along each segment: straight lines curve under the disk map
    const pts = piece.map(
      (pt) => [parseRational(pt[0]), parseRational(pt[1])] as [number, number],
    );
    for (let i = 0; i + 1 < pts.length || (pts.length > 2 && i < pts.length); i++) {
      const a = pts[i];
      const b = pts[(i + 1) % pts.length];
      for (let s = 0; s <= 8; s++) {
        const t = s / 8;
        const p: [number, number] = [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])];
        const [x, y] = diskToScreen(modelToDisk(p, d), DISK_VP);
        if (i === 0 && s === 0) ctx.moveTo(x, y);
        else ctx.lineTo(x, y);
      }
      if (pts.length === 2) break;
    }
    ctx.stroke();
  }
}
