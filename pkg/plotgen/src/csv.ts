import { readFileSync } from "fs";
import Papa from "papaparse";

export type Row = Record<string, string>;

export interface BenchTable {
  columns: string[];
  rows: Row[];
}

export class UnreadableFileError extends Error {
  constructor(path: string, cause: string) {
    super(`unreadable file: ${path} (${cause})`);
    this.name = "UnreadableFileError";
  }
}

// Columns the harness always writes; extra columns pass through untouched.
export const CORE_COLUMNS = [
  "impl",
  "config",
  "phase",
  "ops",
  "total_ns",
  "ns_per_op",
  "backyard_len",
  "metadata_bits",
  "seed",
  "repetition",
] as const;

export function parseTable(text: string): BenchTable {
  const parsed = Papa.parse<Row>(text, {
    header: true,
    skipEmptyLines: true,
  });
  const columns = parsed.meta.fields ?? [];
  // Papaparse flags short rows but still yields them; keep only full rows so a
  // truncated trailing line cannot produce undefined cells downstream.
  const rows = parsed.data.filter((r) => r && Object.keys(r).length === columns.length);
  return { columns, rows };
}

export function readTable(path: string): BenchTable {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new UnreadableFileError(path, err instanceof Error ? err.message : String(err));
  }
  return parseTable(text);
}

export function numericCell(row: Row, column: string): number | undefined {
  const raw = row[column];
  if (raw === undefined || raw.trim() === "") return undefined;
  const value = Number(raw);
  return Number.isFinite(value) ? value : undefined;
}
