// Explorer wiring: two synchronized canvases, sign editing, live dashboard.

import { Client, ApiError } from "./api.js";
import { dashboardRows } from "./dashboard.js";
import { pickVertex, screenToSquare } from "./geometry.js";
import { drawDisk, drawSquare } from "./render.js";
import { EditorState, flipSign } from "./state.js";
import { BuildResponse, PatchworkDocument, Vertex } from "./types.js";

const SERVICE = (window as unknown as { PATCHWORK_SERVICE?: string }).PATCHWORK_SERVICE
  ?? "http://127.0.0.1:8787";

const client = new Client(SERVICE);
const state = new EditorState((doc) => client.analyze(doc));

const squareCanvas = document.getElementById("square") as HTMLCanvasElement;
const diskCanvas = document.getElementById("disk") as HTMLCanvasElement;
const dashboard = document.getElementById("dashboard") as HTMLTableElement;
const exampleSelect = document.getElementById("examples") as HTMLSelectElement;
const statusLine = document.getElementById("status") as HTMLDivElement;
const undoBtn = document.getElementById("undo") as HTMLButtonElement;
const redoBtn = document.getElementById("redo") as HTMLButtonElement;
const searchBtn = document.getElementById("search") as HTMLButtonElement;
const whatIfLine = document.getElementById("whatif") as HTMLDivElement;

let currentBuild: BuildResponse | null = null;
let hover: [number, number] | null = null;

function setStatus(text: string): void {
  statusLine.textContent = text;
}

async function refreshViews(): Promise<void> {
  const doc = state.document;
  if (!doc || !state.report) return;
  currentBuild = await client.build(doc);
  const sq = squareCanvas.getContext("2d")!;
  const dk = diskCanvas.getContext("2d")!;
  drawSquare(sq, doc, currentBuild.projective, hover);
  if (doc.dim === 2) {
    drawDisk(dk, doc, currentBuild.projective);
  }
  renderDashboard();
  undoBtn.disabled = !state.canUndo;
  redoBtn.disabled = !state.canRedo;
}

function renderDashboard(): void {
  if (!state.report) return;
  const rows = dashboardRows(state.report);
  dashboard.innerHTML = "";
  for (const row of rows) {
    const tr = document.createElement("tr");
    tr.className = row.status;
    const label = document.createElement("td");
    label.textContent = row.label;
    const value = document.createElement("td");
    value.textContent = row.value;
    const status = document.createElement("td");
    status.textContent = row.status;
    tr.append(label, value, status);
    dashboard.appendChild(tr);
  }
}

async function loadExample(id: string): Promise<void> {
  setStatus(`loading ${id}...`);
  const t0 = performance.now();
  const doc = await client.example(id);
  await state.load(doc);
  await refreshViews();
  setStatus(`${id}: d=${doc.degree}, n=${doc.dim} (${(performance.now() - t0).toFixed(0)} ms)`);
}

squareCanvas.addEventListener("click", async (ev) => {
  const doc = state.document;
  if (!doc || doc.dim !== 2) return;
  const rect = squareCanvas.getBoundingClientRect();
  const p = screenToSquare([ev.clientX - rect.left, ev.clientY - rect.top], doc.degree, {
    size: 560,
    margin: 24,
  });
  const verts = Object.keys(doc.signs).map((k) => k.split(",").map(Number) as Vertex);
  const v = pickVertex(p, verts, 0.35 * Math.max(1, doc.degree / 3));
  if (!v) return;
  const t0 = performance.now();
  try {
    await state.apply((d) => flipSign(d, v));
    await refreshViews();
    setStatus(`flipped (${v}) in ${(performance.now() - t0).toFixed(0)} ms`);
  } catch (err) {
    setStatus(err instanceof ApiError ? `edit rejected: ${err.message}` : String(err));
  }
});

squareCanvas.addEventListener("mousemove", async (ev) => {
  const doc = state.document;
  if (!doc || doc.dim !== 2) return;
  const rect = squareCanvas.getBoundingClientRect();
  const p = screenToSquare([ev.clientX - rect.left, ev.clientY - rect.top], doc.degree, {
    size: 560,
    margin: 24,
  });
  const verts = Object.keys(doc.signs).map((k) => k.split(",").map(Number) as Vertex);
  const v = pickVertex(p, verts, 0.35 * Math.max(1, doc.degree / 3));
  if (!v) {
    if (hover) {
      hover = null;
      whatIfLine.textContent = "";
      await refreshViews();
    }
    return;
  }
  if (hover && hover[0] === v[0] && hover[1] === v[1]) return;
  hover = [v[0], v[1]];
  await refreshViews();
  const delta = await state.whatIf(v);
  if (delta !== null) {
    const sign = delta > 0 ? "+" : "";
    whatIfLine.textContent = `flip (${v}): ${sign}${delta} components`;
  }
});

undoBtn.addEventListener("click", async () => {
  await state.undo();
  await refreshViews();
  setStatus("undo");
});

redoBtn.addEventListener("click", async () => {
  await state.redo();
  await refreshViews();
  setStatus("redo");
});

searchBtn.addEventListener("click", async () => {
  setStatus("local search running...");
  const t0 = performance.now();
  const rep = await state.runLocalSearch(200);
  await refreshViews();
  setStatus(
    `search done in ${((performance.now() - t0) / 1000).toFixed(1)} s: ` +
      `${rep.topology.components} components`,
  );
});

async function boot(): Promise<void> {
  try {
    const examples = await client.examples();
    for (const ex of examples) {
      const opt = document.createElement("option");
      opt.value = ex.id;
      opt.textContent = `${ex.id} (d=${ex.degree}, n=${ex.dim})`;
      exampleSelect.appendChild(opt);
    }
    exampleSelect.addEventListener("change", () => loadExample(exampleSelect.value));
    const first = examples.find((e) => e.dim === 2);
    if (first) {
      exampleSelect.value = first.id;
      await loadExample(first.id);
    }
  } catch (err) {
    setStatus(`service unreachable at ${SERVICE}: ${err}`);
  }
}

void boot();
