import { FigureData } from "./figures";

// Fixed layout in px; width grows with bar count, height is constant.
const BAR_W = 26;
const BAR_GAP = 6;
const GROUP_GAP = 48;
const PLOT_H = 320;
const MARGIN_LEFT = 76;
const MARGIN_TOP = 56;
const MARGIN_BOTTOM = 56;
const LEGEND_PAD = 18;
const FONT = 12;
const CHAR_W = 7.2;

const PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
  "#1f77b4",
  "#8c564b",
];

function px(n: number): string {
  return n.toFixed(2).replace(/\.?0+$/, "");
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmtValue(v: number): string {
  const abs = Math.abs(v);
  const compact = (scaled: number, suffix: string) => {
    const s = scaled >= 100 ? scaled.toFixed(0) : scaled.toFixed(1).replace(/\.0$/, "");
    return `${s}${suffix}`;
  };
  if (abs >= 1e9) return compact(v / 1e9, "G");
  if (abs >= 1e6) return compact(v / 1e6, "M");
  if (abs >= 1e3) return compact(v / 1e3, "k");
  if (Number.isInteger(v)) return v.toString();
  return v.toFixed(2).replace(/\.?0+$/, "");
}

// Tick step is the nearest 1/2/5 decade multiple of span/5.
function tickStep(maxValue: number): number {
  const rough = maxValue / 5;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  for (const m of [1, 2, 5, 10]) {
    if (rough <= m * mag) return m * mag;
  }
  return 10 * mag;
}

export function renderSvg(data: FigureData): string {
  const kinds = data.barKinds;
  const groupW = kinds.length * BAR_W + (kinds.length - 1) * BAR_GAP;
  const plotW = data.groups.length * groupW + (data.groups.length - 1) * GROUP_GAP;

  let maxValue = 0;
  for (const g of data.groups) {
    for (const b of g.bars) maxValue = Math.max(maxValue, b.value);
  }
  const step = maxValue > 0 ? tickStep(maxValue) : 1;
  const yMax = Math.max(step, Math.ceil(maxValue / step) * step);

  const kindLabel = new Map<string, string>();
  for (const g of data.groups) {
    for (const b of g.bars) {
      if (!kindLabel.has(b.key)) kindLabel.set(b.key, b.label);
    }
  }
  const legendLabels = kinds.map((k) => kindLabel.get(k) ?? k);
  const legendTextW = Math.max(0, ...legendLabels.map((s) => s.length)) * CHAR_W;
  const legendW = LEGEND_PAD + 14 + 6 + legendTextW + 12;

  const width = MARGIN_LEFT + plotW + legendW;
  const height = MARGIN_TOP + PLOT_H + MARGIN_BOTTOM;
  const baseY = MARGIN_TOP + PLOT_H;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${px(width)}" height="${px(height)}" ` +
      `viewBox="0 0 ${px(width)} ${px(height)}" font-family="monospace" font-size="${FONT}">`
  );
  parts.push(`<rect width="${px(width)}" height="${px(height)}" fill="#ffffff"/>`);
  parts.push(
    `<text x="${px(MARGIN_LEFT + plotW / 2)}" y="${px(MARGIN_TOP - 28)}" ` +
      `text-anchor="middle" font-size="${FONT + 2}">${escapeXml(data.title)}</text>`
  );

  for (let v = 0; v <= yMax + step / 2; v += step) {
    const y = baseY - (v / yMax) * PLOT_H;
    parts.push(
      `<line x1="${px(MARGIN_LEFT)}" y1="${px(y)}" x2="${px(MARGIN_LEFT + plotW)}" y2="${px(y)}" ` +
        `stroke="#dddddd" stroke-width="1"/>`
    );
    parts.push(
      `<text x="${px(MARGIN_LEFT - 8)}" y="${px(y + 4)}" text-anchor="end">${fmtValue(v)}</text>`
    );
  }
  parts.push(
    `<text x="${px(14)}" y="${px(MARGIN_TOP + PLOT_H / 2)}" text-anchor="middle" ` +
      `transform="rotate(-90 14 ${px(MARGIN_TOP + PLOT_H / 2)})">${escapeXml(data.metric)}</text>`
  );

  data.groups.forEach((group, gi) => {
    const gx = MARGIN_LEFT + gi * (groupW + GROUP_GAP);
    kinds.forEach((key, ki) => {
      const bar = group.bars.find((b) => b.key === key);
      if (!bar) return;
      const h = yMax > 0 ? (Math.max(0, bar.value) / yMax) * PLOT_H : 0;
      const x = gx + ki * (BAR_W + BAR_GAP);
      parts.push(
        `<rect class="bar" x="${px(x)}" y="${px(baseY - h)}" width="${px(BAR_W)}" ` +
          `height="${px(h)}" fill="${PALETTE[ki % PALETTE.length]}" ` +
          `data-phase="${escapeXml(group.phase)}" data-label="${escapeXml(bar.label)}">` +
          `<title>${escapeXml(`${group.phase} ${bar.label}: ${fmtValue(bar.value)}`)}</title></rect>`
      );
    });
    parts.push(
      `<text x="${px(gx + groupW / 2)}" y="${px(baseY + 20)}" text-anchor="middle">` +
        `${escapeXml(group.phase)}</text>`
    );
  });
  parts.push(
    `<line x1="${px(MARGIN_LEFT)}" y1="${px(baseY)}" x2="${px(MARGIN_LEFT + plotW)}" ` +
      `y2="${px(baseY)}" stroke="#000000" stroke-width="1"/>`
  );

  const legendX = MARGIN_LEFT + plotW + LEGEND_PAD;
  kinds.forEach((key, ki) => {
    const y = MARGIN_TOP + ki * 20;
    parts.push(
      `<rect x="${px(legendX)}" y="${px(y)}" width="14" height="14" ` +
        `fill="${PALETTE[ki % PALETTE.length]}"/>`
    );
    parts.push(
      `<text x="${px(legendX + 20)}" y="${px(y + 11)}">${escapeXml(kindLabel.get(key) ?? key)}</text>`
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
