#!/usr/bin/env node
import { writeFileSync } from "fs";
import yargs from "yargs";
import { readTable, UnreadableFileError } from "./csv";
import {
  FIGURES,
  FigureKind,
  MissingColumnError,
  EmptySelectionError,
  buildFigure,
} from "./figures";
import { renderSvg } from "./svg";

class UsageError extends Error {}

interface CliArgs {
  csv: string;
  figure: FigureKind;
  metric: string;
  out: string;
}

function parseArgs(argv: string[]): CliArgs {
  const parser = yargs(argv)
    .scriptName("plotgen")
    .usage("$0 --csv <path> --figure <name> --metric <name> --out <path>")
    .option("csv", { type: "string", demandOption: true, describe: "benchmark CSV input" })
    .option("figure", {
      type: "string",
      demandOption: true,
      choices: FIGURES as unknown as string[],
      describe: "figure kind",
    })
    .option("metric", {
      type: "string",
      default: "ns_per_op",
      describe: "CSV column to plot (extra columns allowed)",
    })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .strict()
    .exitProcess(false)
    .fail((msg, err) => {
      throw new UsageError(msg ?? (err ? err.message : "bad arguments"));
    });
  const args = parser.parseSync();
  return {
    csv: args.csv,
    figure: args.figure as FigureKind,
    metric: args.metric,
    out: args.out,
  };
}

export function runCli(argv: string[], stderr: (line: string) => void = console.error): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    stderr(`error: ${err instanceof Error ? err.message : String(err)}`);
    return 1;
  }
  try {
    const table = readTable(args.csv);
    const figure = buildFigure(table, args.figure, args.metric);
    const svg = renderSvg(figure);
    try {
      writeFileSync(args.out, svg, "utf8");
    } catch (err) {
      stderr(`error: cannot write output: ${args.out} (${err instanceof Error ? err.message : err})`);
      return 1;
    }
    stderr(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    if (
      err instanceof UnreadableFileError ||
      err instanceof MissingColumnError ||
      err instanceof EmptySelectionError
    ) {
      stderr(`error: ${err.message}`);
      return 1;
    }
    throw err;
  }
}

if (require.main === module) {
  process.exit(runCli(process.argv.slice(2)));
}
