// Dashboard rows: a formatting layer over the service's restriction
// entries. All numbers are lifted verbatim from the response (single
// source of truth); this module only selects and labels them.

import { AnalyzeResponse, RestrictionEntry } from "./types.js";

export interface DashboardRow {
  label: string;
  value: string;
  status: "pass" | "fail" | "n/a";
}

function entry(res: AnalyzeResponse, name: string): RestrictionEntry | undefined {
  return res.restrictions.entries.find((e) => e.name === name);
}

function rowFor(label: string, e: RestrictionEntry | undefined): DashboardRow {
  if (!e || !e.applicable) {
    return { label, value: e?.detail ?? "", status: "n/a" };
  }
  const slack = e.slack === null ? "" : ` (slack ${e.slack})`;
  return {
    label,
    value: e.detail + slack,
    status: e.passed ? "pass" : "fail",
  };
}

export function dashboardRows(res: AnalyzeResponse): DashboardRow[] {
  const t = res.topology;
  const rows: DashboardRow[] = [
    {
      label: "components",
      value: `${t.components} (${t.oneSided} one-sided)` + (res.mCurve ? " — M-curve" : ""),
      status: "pass",
    },
    {
      label: "ovals p / n",
      value: `${t.ovals.p} / ${t.ovals.n}, p−n mod 8 = ${(((t.ovals.p - t.ovals.n) % 8) + 8) % 8}`,
      status: "pass",
    },
    rowFor("Harnack", entry(res, "harnack")),
    rowFor("Gudkov–Rokhlin", entry(res, "gudkov-rokhlin")),
    rowFor("GKK", entry(res, "gudkov-krahnov-kharlamov")),
    rowFor("Petrovsky", entry(res, "petrovsky")),
    rowFor("Arnold", entry(res, "arnold")),
    rowFor("Smith", entry(res, "smith")),
  ];
  if (t.dim === 3) {
    rows.push(rowFor("mod 16", entry(res, "mod16")));
    rows.push(rowFor("Comessatti", entry(res, "comessatti")));
  }
  return rows;
}

export function harnackSlack(res: AnalyzeResponse): number | null {
  const e = entry(res, "harnack");
  return e && e.applicable ? e.slack : null;
}
