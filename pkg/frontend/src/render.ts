// Pure string renderers for every panel. All of them draw geometry from
// server data but never alter a displayed number: visible text goes through
// num(), which prints the served value verbatim (class="num" marks it so
// tests can harvest and cross-check against intercepted responses).

import type {
  Annotation,
  BootstrapSummaryJson,
  BoundaryJson,
  LassoPathJson,
  LinearFitJson,
  SweepEntryJson,
  SweepResultJson,
  TreeFitJson,
} from "./types.js";

export function num(value: number | null | undefined): string {
  return value === null || value === undefined ? "n/a" : String(value);
}

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function span(value: number | null | undefined): string {
  return `<span class="num">${num(value)}</span>`;
}

// -- chart scaffolding ----------------------------------------------------

const CHART_W = 440;
const CHART_H = 150;
const PAD = { left: 14, right: 14, top: 10, bottom: 18 };

interface Scale {
  (v: number): number;
}

function linScale(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0;
  if (span === 0) return () => (r0 + r1) / 2;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function px(v: number): string {
  return v.toFixed(2);
}

function polyline(points: [number, number][], cls: string): string {
  if (points.length === 1) {
    const [[x, y]] = points;
    return `<circle class="${cls}" cx="${px(x)}" cy="${px(y)}" r="3"/>`;
  }
  const attr = points.map(([x, y]) => `${px(x)},${px(y)}`).join(" ");
  return `<polyline class="${cls}" points="${attr}" fill="none"/>`;
}

const SERIES_HUES = [210, 25, 130, 55, 280, 170, 335, 90];

function seriesColor(index: number): string {
  return `hsl(${SERIES_HUES[index % SERIES_HUES.length]} 70% 45%)`;
}

// -- surrogate panel -------------------------------------------------------

export function renderFidelity(entry: SweepEntryJson): string {
  const f = entry.fidelity;
  const complexity = Array.isArray(entry.complexity)
    ? `depth ${span(entry.complexity[0])}, leaves ${span(entry.complexity[1])}`
    : `l0 = ${span(entry.complexity)}`;
  const badge = entry.degenerate
    ? '<span class="badge degenerate">degenerate: one-class neighbourhood</span>'
    : "";
  return `<div class="fidelity">
    <div class="row">radius ${span(entry.radius)} ${badge}</div>
    <div class="row">accuracy ${span(f.accuracy)} · TPR ${span(f.tpr)} · TNR ${span(f.tnr)}</div>
    <div class="row">complexity ${complexity} · evaluated on ${span(f.n_eval)} fresh points</div>
  </div>`;
}

export function renderCoefficientBars(fit: LinearFitJson, featureNames: string[]): string {
  const maxAbs = Math.max(...fit.coefficients.map(Math.abs), Number.MIN_VALUE);
  const rows = fit.coefficients.map((coef, i) => {
    const width = (Math.abs(coef) / maxAbs) * 180;
    const side = coef < 0 ? "neg" : "pos";
    const bar = coef === 0
      ? '<span class="bar zero"></span>'
      : `<span class="bar ${side}" style="width:${px(width)}px"></span>`;
    return `<div class="coef-row" data-feature="${i}">
      <span class="feature">${esc(featureNames[i] ?? `f${i}`)}</span>${bar}
      <span class="num coef">${num(coef)}</span>
    </div>`;
  });
  return `<div class="coefficients">${rows.join("")}
    <div class="coef-row intercept"><span class="feature">intercept</span>
      <span class="num">${num(fit.intercept)}</span></div>
  </div>`;
}

function renderTreeNode(fit: TreeFitJson, index: number, featureNames: string[]): string {
  const node = fit.nodes[index];
  if (node.class !== undefined) {
    return `<li class="leaf">class ${span(node.class)}</li>`;
  }
  const name = esc(featureNames[node.split_feature!] ?? `f${node.split_feature}`);
  return `<li>${name} &le; ${span(node.threshold)}<ul>
    ${renderTreeNode(fit, node.left!, featureNames)}
    ${renderTreeNode(fit, node.right!, featureNames)}
  </ul></li>`;
}

export function renderTree(fit: TreeFitJson, featureNames: string[]): string {
  return `<div class="tree">
    <div class="row">depth ${span(fit.depth)} · leaves ${span(fit.n_leaves)}</div>
    <ul class="tree-nodes">${renderTreeNode(fit, 0, featureNames)}</ul>
  </div>`;
}

export function renderSurrogatePanel(entry: SweepEntryJson, featureNames: string[]): string {
  const fit = entry.surrogate;
  const body = fit.type === "linear_surrogate"
    ? renderCoefficientBars(fit, featureNames)
    : renderTree(fit, featureNames);
  return renderFidelity(entry) + body;
}

// -- decision boundary heatmap --------------------------------------------

// Black-box labels paint the background cells, the surrogate's boundary is
// overlaid as a contour along cell edges where its label changes, and the
// explained instance is marked with its sampling radius.
export function renderBoundary(
  boundary: BoundaryJson,
  instance: number[],
  radius: number,
): string {
  const res = boundary.resolution;
  const size = 280;
  const cell = size / res;
  const [b0, b1] = boundary.bounds;
  const sx = linScale(b0[0], b0[1], 0, size);
  const sy = linScale(b1[0], b1[1], size, 0);
  const at = (i: number, j: number) => boundary.blackbox_labels[i * res + j];
  const surAt = (i: number, j: number) => boundary.surrogate_labels[i * res + j];

  // one rect per same-label run within a row keeps the node count small
  const rects: string[] = [];
  for (let i = 0; i < res; i++) {
    let start = 0;
    for (let j = 1; j <= res; j++) {
      if (j === res || at(i, j) !== at(i, start)) {
        const x = i * cell;
        const y = size - j * cell;
        rects.push(
          `<rect class="cls${at(i, start)}" x="${px(x)}" y="${px(y)}" ` +
          `width="${px(cell)}" height="${px((j - start) * cell)}"/>`,
        );
        start = j;
      }
    }
  }

  const contour: string[] = [];
  for (let i = 0; i < res; i++) {
    for (let j = 0; j < res; j++) {
      if (i + 1 < res && surAt(i, j) !== surAt(i + 1, j)) {
        const x = (i + 1) * cell;
        const y = size - j * cell;
        contour.push(`M${px(x)} ${px(y)}V${px(y - cell)}`);
      }
      if (j + 1 < res && surAt(i, j) !== surAt(i, j + 1)) {
        const x = i * cell;
        const y = size - (j + 1) * cell;
        contour.push(`M${px(x)} ${px(y)}H${px(x + cell)}`);
      }
    }
  }

  const cx = sx(instance[0]);
  const cy = sy(instance[1]);
  const rPix = Math.abs(sx(instance[0] + radius) - cx);
  return `<svg class="boundary" viewBox="0 0 ${size} ${size}" role="img">
    <g class="cells">${rects.join("")}</g>
    <path class="surrogate-contour" d="${contour.join("")}" fill="none"/>
    <circle class="radius-ring" cx="${px(cx)}" cy="${px(cy)}" r="${px(rPix)}" fill="none"/>
    <path class="instance-mark" d="M${px(cx - 6)} ${px(cy)}H${px(cx + 6)}M${px(cx)} ${px(cy - 6)}V${px(cy + 6)}"/>
  </svg>`;
}

// -- sweep chart with radius cursor ----------------------------------------

export function renderSweepChart(sweep: SweepResultJson, currentRadius: number): string {
  const radii = sweep.radii;
  const accs = sweep.entries.map((e) => e.fidelity.accuracy);
  const xs = linScale(radii[0], radii[radii.length - 1], PAD.left, CHART_W - PAD.right);
  const lo = Math.min(...accs);
  const hi = Math.max(...accs);
  const ys = linScale(lo, hi, CHART_H - PAD.bottom, PAD.top);
  const pts: [number, number][] = radii.map((r, i) => [xs(r), ys(accs[i])]);
  const cursor = Math.min(Math.max(currentRadius, radii[0]), radii[radii.length - 1]);
  const markers = pts
    .map(([x, y], i) => `<circle class="pt" cx="${px(x)}" cy="${px(y)}" r="2.5" data-radius="${radii[i]}"/>`)
    .join("");
  return `<svg class="sweep-chart" viewBox="0 0 ${CHART_W} ${CHART_H}" role="img">
    ${polyline(pts, "accuracy-line")}${markers}
    <line class="cursor" x1="${px(xs(cursor))}" x2="${px(xs(cursor))}" y1="${PAD.top}" y2="${CHART_H - PAD.bottom}"/>
    <text class="axis num" x="${PAD.left}" y="${CHART_H - 4}">${num(radii[0])}</text>
    <text class="axis num" x="${CHART_W - PAD.right}" y="${CHART_H - 4}" text-anchor="end">${num(radii[radii.length - 1])}</text>
    <text class="axis num" x="${PAD.left}" y="${PAD.top + 4}">${num(hi)}</text>
    <text class="axis num" x="${PAD.left}" y="${CHART_H - PAD.bottom - 2}">${num(lo)}</text>
  </svg>`;
}

// -- bootstrap bands --------------------------------------------------------

function bandPolygon(
  xs: number[],
  upper: number[],
  lower: number[],
  cls: string,
): string {
  const forward = xs.map((x, i) => `${px(x)},${px(upper[i])}`);
  const back = xs.map((x, i) => `${px(x)},${px(lower[i])}`).reverse();
  return `<polygon class="${cls}" points="${forward.join(" ")} ${back.join(" ")}"/>`;
}

function annotationMarks(
  annotations: Annotation[],
  xs: Scale,
  height: number,
): string {
  return annotations
    .map((a, i) => {
      const x0 = xs(a.interval[0]);
      const x1 = xs(a.interval[1]);
      return `<g class="annotation" data-index="${i}">
      <rect x="${px(Math.min(x0, x1))}" y="${PAD.top}" width="${px(Math.abs(x1 - x0))}" height="${height - PAD.top - PAD.bottom}"/>
      <text x="${px(Math.min(x0, x1) + 2)}" y="${PAD.top + 10}">${esc(a.label)}</text>
    </g>`;
    })
    .join("");
}

// Top: fidelity mean +/- 1 std vs radius. Bottom: one band per coefficient.
// Band edges are positioned from the served mean and std; the numbers shown
// in the table below are the served values themselves.
export function renderBootstrapBands(
  summaries: BootstrapSummaryJson[],
  featureNames: string[],
  annotations: Annotation[],
): string {
  const radii = summaries.map((s) => s.radius);
  const xs = linScale(radii[0], radii[radii.length - 1], PAD.left, CHART_W - PAD.right);

  const accLo = summaries.map((s) => s.accuracy_mean - s.accuracy_std);
  const accHi = summaries.map((s) => s.accuracy_mean + s.accuracy_std);
  const accScale = linScale(
    Math.min(...accLo),
    Math.max(...accHi),
    CHART_H - PAD.bottom,
    PAD.top,
  );
  const accBand = bandPolygon(
    radii.map((r) => xs(r)),
    accHi.map(accScale),
    accLo.map(accScale),
    "band acc",
  );
  const accMean = polyline(radii.map((r, i) => [xs(r), accScale(summaries[i].accuracy_mean)]), "mean acc");

  const d = summaries[0].coef_mean.length;
  const coefLo = summaries.map((s) => Math.min(...s.coef_mean.map((m, k) => m - s.coef_std[k])));
  const coefHi = summaries.map((s) => Math.max(...s.coef_mean.map((m, k) => m + s.coef_std[k])));
  const coefScale = linScale(
    Math.min(...coefLo),
    Math.max(...coefHi),
    CHART_H - PAD.bottom,
    PAD.top,
  );
  const coefLayers: string[] = [];
  for (let k = 0; k < d; k++) {
    const hiEdge = summaries.map((s) => coefScale(s.coef_mean[k] + s.coef_std[k]));
    const loEdge = summaries.map((s) => coefScale(s.coef_mean[k] - s.coef_std[k]));
    const color = seriesColor(k);
    coefLayers.push(
      `<g class="coef-band" data-feature="${k}" style="color:${color}">` +
      bandPolygon(radii.map((r) => xs(r)), hiEdge, loEdge, "band") +
      polyline(radii.map((r, i) => [xs(r), coefScale(summaries[i].coef_mean[k])]), "mean") +
      "</g>",
    );
  }

  const header = `B ${span(summaries[0].B)} neighbourhoods of n ${span(summaries[0].n)} per radius`;
  const tableRows = summaries
    .map((s) => {
      const coefs = s.coef_mean
        .map((m, k) => `${span(m)} ± ${span(s.coef_std[k])}`)
        .join("</td><td>");
      return `<tr><td>${span(s.radius)}</td><td>${span(s.accuracy_mean)} ± ${span(s.accuracy_std)}</td><td>${coefs}</td></tr>`;
    })
    .join("");
  const coefHeads = featureNames.slice(0, d).map(esc).join("</th><th>");

  // data-* scale attributes let the drag handler map pixels back to radii
  return `<div class="bootstrap">
    <div class="row">${header}</div>
    <svg class="band-chart acc" viewBox="0 0 ${CHART_W} ${CHART_H}" role="img"
         data-x0="${PAD.left}" data-x1="${CHART_W - PAD.right}"
         data-r0="${radii[0]}" data-r1="${radii[radii.length - 1]}">
      ${accBand}${accMean}${annotationMarks(annotations, xs, CHART_H)}
    </svg>
    <svg class="band-chart coef" viewBox="0 0 ${CHART_W} ${CHART_H}" role="img">
      ${coefLayers.join("")}${annotationMarks(annotations, xs, CHART_H)}
    </svg>
    <table class="bootstrap-table">
      <thead><tr><th>radius</th><th>accuracy</th><th>${coefHeads}</th></tr></thead>
      <tbody>${tableRows}</tbody>
    </table>
  </div>`;
}

// -- lasso path -------------------------------------------------------------

// Three vertically linked charts over one log-C axis: coefficient paths,
// fidelity, and sparsity. Hover pins a C and echoes its served values.
export function renderLassoPath(
  path: LassoPathJson,
  featureNames: string[],
  hover: number | null,
): string {
  const entries = path.entries;
  const logC = entries.map((e) => Math.log10(e.C));
  const xs = linScale(logC[0], logC[logC.length - 1], PAD.left, CHART_W - PAD.right);
  const d = entries[0].coefficients.length;

  const coefValues = entries.flatMap((e) => e.coefficients);
  const cLo = Math.min(...coefValues, 0);
  const cHi = Math.max(...coefValues, 0);
  const coefScale = linScale(cLo, cHi, CHART_H - PAD.bottom, PAD.top);
  const coefLines: string[] = [];
  for (let k = 0; k < d; k++) {
    const pts: [number, number][] = entries.map((e, i) => [xs(logC[i]), coefScale(e.coefficients[k])]);
    coefLines.push(
      `<g class="coef-path" data-feature="${k}" style="color:${seriesColor(k)}">${polyline(pts, "line")}</g>`,
    );
  }
  const zeroY = coefScale(0);

  const accs = entries.map((e) => e.accuracy);
  const accScale = linScale(Math.min(...accs), Math.max(...accs), CHART_H - PAD.bottom, PAD.top);
  const accLine = polyline(entries.map((e, i) => [xs(logC[i]), accScale(e.accuracy)]), "line acc");

  const l0s = entries.map((e) => e.l0);
  const l0Scale = linScale(Math.min(...l0s), Math.max(...l0s), CHART_H - PAD.bottom, PAD.top);
  const l0Line = polyline(entries.map((e, i) => [xs(logC[i]), l0Scale(e.l0)]), "line l0");

  const rule = hover === null
    ? ""
    : `<line class="hover-rule" x1="${px(xs(logC[hover]))}" x2="${px(xs(logC[hover]))}" y1="${PAD.top}" y2="${CHART_H - PAD.bottom}"/>`;
  const chart = (body: string, cls: string, title: string) =>
    `<div class="path-chart-title">${title}</div>
     <svg class="path-chart ${cls}" viewBox="0 0 ${CHART_W} ${CHART_H}" role="img"
          data-x0="${PAD.left}" data-x1="${CHART_W - PAD.right}"
          data-n="${entries.length}">${body}${rule}</svg>`;

  let readout = "";
  if (hover !== null) {
    const e = entries[hover];
    const coefs = e.coefficients
      .map((c, k) => `${esc(featureNames[k] ?? `f${k}`)}: ${span(c)}`)
      .join(" · ");
    readout = `<div class="path-readout">C ${span(e.C)} · accuracy ${span(e.accuracy)} · l0 ${span(e.l0)}<br>${coefs}</div>`;
  }

  return `<div class="lasso" data-radius="${path.radius}">
    <div class="row">radius ${span(path.radius)} · strongest penalty at C ${span(path.C_grid[0])}, weakest at C ${span(path.C_grid[path.C_grid.length - 1])}</div>
    ${chart(`<line class="zero-axis" x1="${PAD.left}" x2="${CHART_W - PAD.right}" y1="${px(zeroY)}" y2="${px(zeroY)}"/>` + coefLines.join(""), "coef", "coefficients (original units)")}
    ${chart(accLine, "acc", "fidelity to the black box")}
    ${chart(l0Line, "l0", "nonzero coefficients")}
    ${readout}
  </div>`;
}

// -- chrome -----------------------------------------------------------------

export function renderError(message: string | null): string {
  if (message === null) return "";
  return `<div class="error-banner" role="alert">${esc(message)}</div>`;
}

export function renderJobProgress(job: { kind: string; progress: number } | null): string {
  if (job === null) return "";
  const width = Math.max(0, Math.min(1, job.progress)) * 100;
  return `<div class="job-progress">${esc(job.kind)} <span class="track"><span class="fill" style="width:${px(width)}%"></span></span> <span class="num">${num(job.progress)}</span></div>`;
}

export function renderSessionHeader(session: {
  id: string;
  dataset: { feature_names: string[]; dim: number; n_samples: number };
  blackbox: { kind: string; train_accuracy: number | null };
  instance: number[];
}): string {
  const inst = session.instance.map((v) => num(v)).join(", ");
  return `<div class="session-header">
    <span>session ${esc(session.id)}</span>
    <span>${esc(session.blackbox.kind)} · train accuracy ${span(session.blackbox.train_accuracy)}</span>
    <span>instance (<span class="num-list">${esc(inst)}</span>)</span>
  </div>`;
}
