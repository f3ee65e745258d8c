import { describe, expect, it } from "vitest";
import { join } from "path";
import { parseTable, readTable } from "../src/csv";
import {
  EmptySelectionError,
  MissingColumnError,
  buildFigure,
} from "../src/figures";

const FIXTURE = join(__dirname, "fixtures", "grid.csv");

const HEADER = "impl,config,phase,ops,total_ns,ns_per_op,backyard_len,metadata_bits,seed,repetition";

function tinyTable(): ReturnType<typeof parseTable> {
  const lines = [
    HEADER,
    "slick,5_10_5_5,insert,100,1000,10.000,4,45,0,0",
    "slick,5_10_5_5,insert,100,3000,30.000,4,45,0,1",
    "slick,5_10_5_5,query,100,200,2.000,4,45,0,0",
    "slick,5_10_5_5,query,100,400,4.000,4,45,0,1",
    "unordered_map,,insert,100,500,5.000,,,0,0",
    "unordered_map,,insert,100,700,7.000,,,0,1",
    "unordered_map,,query,100,100,1.000,,,0,0",
    "unordered_map,,query,100,300,3.000,,,0,1",
  ];
  return parseTable(lines.join("\n") + "\n");
}

describe("buildFigure selection", () => {
  it("configs keeps only slick rows", () => {
    const fig = buildFigure(tinyTable(), "configs", "ns_per_op");
    expect(fig.barKinds).toHaveLength(1);
    expect(fig.groups.map((g) => g.phase)).toEqual(["insert", "query"]);
    for (const g of fig.groups) {
      expect(g.bars.map((b) => b.label)).toEqual(["5_10_5_5"]);
    }
  });

  it("baselines keeps every impl and config", () => {
    const fig = buildFigure(tinyTable(), "baselines", "ns_per_op");
    expect(fig.barKinds).toHaveLength(2);
    expect(fig.groups[0].bars.map((b) => b.label)).toEqual(["5_10_5_5", "unordered_map"]);
  });

  it("deletion keeps only the delete phase", () => {
    const t = parseTable(
      [
        HEADER,
        "slick,5_10_5_5,insert,100,1000,10.000,4,45,0,0",
        "slick,5_10_5_5,delete,100,800,8.000,4,45,0,0",
        "ordered_map,,delete,100,900,9.000,,,0,0",
      ].join("\n") + "\n"
    );
    const fig = buildFigure(t, "deletion", "ns_per_op");
    expect(fig.groups).toHaveLength(1);
    expect(fig.groups[0].phase).toBe("delete");
    expect(fig.groups[0].bars.map((b) => b.label)).toEqual(["5_10_5_5", "ordered_map"]);
  });
});

describe("buildFigure aggregation", () => {
  it("averages the metric over repetitions", () => {
    const fig = buildFigure(tinyTable(), "baselines", "ns_per_op");
    const insert = fig.groups.find((g) => g.phase === "insert")!;
    const slick = insert.bars.find((b) => b.label === "5_10_5_5")!;
    const um = insert.bars.find((b) => b.label === "unordered_map")!;
    expect(slick.value).toBeCloseTo(20.0);
    expect(slick.samples).toBe(2);
    expect(um.value).toBeCloseTo(6.0);
  });

  it("orders phases insert, query, delete regardless of file order", () => {
    const t = parseTable(
      [
        HEADER,
        "slick,5_10_5_5,delete,100,800,8.000,4,45,0,0",
        "slick,5_10_5_5,query,100,200,2.000,4,45,0,0",
        "slick,5_10_5_5,insert,100,1000,10.000,4,45,0,0",
      ].join("\n") + "\n"
    );
    const fig = buildFigure(t, "configs", "ns_per_op");
    expect(fig.groups.map((g) => g.phase)).toEqual(["insert", "query", "delete"]);
  });

  it("orders bars by first appearance in the file", () => {
    const fig = buildFigure(readTable(FIXTURE), "baselines", "ns_per_op");
    expect(fig.groups[0].bars[0].label).toBe("ordered_map");
    expect(fig.groups[0].bars.at(-1)!.label).toBe("unordered_map");
  });

  it("labels slick bars with the config and baselines with the impl", () => {
    const fig = buildFigure(readTable(FIXTURE), "baselines", "ns_per_op");
    const labels = fig.groups[0].bars.map((b) => b.label);
    expect(labels).toContain("10_20_10_10");
    expect(labels).toContain("unordered_map");
    expect(labels).not.toContain("slick");
  });

  it("drops rows whose metric cell is blank", () => {
    const fig = buildFigure(readTable(FIXTURE), "baselines", "backyard_len");
    for (const g of fig.groups) {
      for (const b of g.bars) expect(b.label).not.toMatch(/map/);
    }
  });
});

describe("buildFigure diagnostics", () => {
  it("rejects a metric column absent from the header", () => {
    expect(() => buildFigure(tinyTable(), "configs", "cache_misses")).toThrowError(
      MissingColumnError
    );
    expect(() => buildFigure(tinyTable(), "configs", "cache_misses")).toThrowError(
      /missing column: cache_misses/
    );
  });

  it("rejects an empty selection", () => {
    const headerOnly = parseTable(HEADER + "\n");
    expect(() => buildFigure(headerOnly, "configs", "ns_per_op")).toThrowError(
      EmptySelectionError
    );
    expect(() => buildFigure(headerOnly, "configs", "ns_per_op")).toThrowError(
      /empty selection/
    );
  });

  it("rejects a selection emptied by figure filtering", () => {
    const t = parseTable(HEADER + "\n" + "slick,5_10_5_5,insert,100,1000,10.000,4,45,0,0\n");
    expect(() => buildFigure(t, "deletion", "ns_per_op")).toThrowError(/empty selection/);
  });

  it("rejects a selection emptied by blank metric cells", () => {
    const t = parseTable(HEADER + "\n" + "unordered_map,,insert,100,500,5.000,,,0,0\n");
    expect(() => buildFigure(t, "baselines", "backyard_len")).toThrowError(/empty selection/);
  });

  it("accepts pass-through columns added outside the harness", () => {
    const t = parseTable(
      "impl,config,phase,cache_misses\nslick,5_10_5_5,insert,4200\nslick,5_10_5_5,insert,4400\n"
    );
    const fig = buildFigure(t, "configs", "cache_misses");
    expect(fig.groups[0].bars[0].value).toBeCloseTo(4300);
  });
});
