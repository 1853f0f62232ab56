import { describe, expect, it } from "vitest";

import {
  esc,
  num,
  renderBoundary,
  renderBootstrapBands,
  renderCoefficientBars,
  renderError,
  renderFidelity,
  renderJobProgress,
  renderLassoPath,
  renderSweepChart,
  renderTree,
} from "../src/render.js";
import type { BootstrapSummaryJson, TreeFitJson } from "../src/types.js";
import { fixture } from "./helpers.js";

const FEATURES = ["f0", "f1"];

function mount(html: string): HTMLElement {
  const div = document.createElement("div");
  div.innerHTML = html;
  return div;
}

function polylinePoints(el: Element): [number, number][] {
  return (el.getAttribute("points") ?? "")
    .split(" ")
    .filter(Boolean)
    .map((pair) => pair.split(",").map(Number) as [number, number]);
}

describe("num", () => {
  it("prints served values verbatim and nulls as n/a", () => {
    expect(num(0.994140625)).toBe("0.994140625");
    expect(num(0.5555555555555556)).toBe("0.5555555555555556");
    expect(num(1)).toBe("1");
    expect(num(null)).toBe("n/a");
  });
});

describe("fidelity readout", () => {
  const sweepEntries = fixture("sweep_job").result.entries;

  it("shows accuracy, rates, and complexity from the entry", () => {
    const entry = sweepEntries[0];
    const dom = mount(renderFidelity(entry));
    const nums = Array.from(dom.querySelectorAll(".num")).map((n) => n.textContent);
    expect(nums).toContain(String(entry.fidelity.accuracy));
    expect(nums).toContain(String(entry.fidelity.n_eval));
    expect(nums).toContain(String(entry.complexity));
    expect(dom.querySelector(".badge.degenerate")).toBeNull();
  });

  it("marks one-class neighbourhoods and renders missing rates as n/a", () => {
    const entry = fixture("surrogate_by_radius")["0.0"].entry;
    expect(entry.degenerate).toBe(true);
    const dom = mount(renderFidelity(entry));
    expect(dom.querySelector(".badge.degenerate")).not.toBeNull();
    expect(entry.fidelity.tpr === null || entry.fidelity.tnr === null).toBe(true);
    expect(dom.textContent).toContain("n/a");
  });
});

describe("coefficient bars", () => {
  it("renders one signed bar per feature with the served value", () => {
    const fit = fixture("sweep_job").result.entries[0].surrogate;
    const dom = mount(renderCoefficientBars(fit, FEATURES));
    const rows = dom.querySelectorAll(".coef-row[data-feature]");
    expect(rows).toHaveLength(2);
    fit.coefficients.forEach((coef: number, i: number) => {
      expect(rows[i].querySelector(".coef")!.textContent).toBe(String(coef));
      const bar = rows[i].querySelector(".bar")!;
      expect(bar.classList.contains(coef < 0 ? "neg" : "pos")).toBe(true);
    });
    expect(dom.textContent).toContain(String(fit.intercept));
  });

  it("zero coefficients collapse to zero-width bars", () => {
    const fit = fixture("surrogate_by_radius")["0.0"].entry.surrogate;
    expect(fit.coefficients).toEqual([0, 0]);
    const dom = mount(renderCoefficientBars(fit, FEATURES));
    expect(dom.querySelectorAll(".bar.zero")).toHaveLength(2);
    const shown = Array.from(dom.querySelectorAll(".coef")).map((n) => n.textContent);
    expect(shown).toEqual(["0", "0"]);
  });
});

describe("tree rendering", () => {
  const fit: TreeFitJson = {
    type: "tree_surrogate",
    depth: 2,
    n_leaves: 3,
    nodes: [
      { split_feature: 1, threshold: 0.28, left: 1, right: 2 },
      { class: 1 },
      { split_feature: 0, threshold: 1.5, left: 3, right: 4 },
      { class: 0 },
      { class: 1 },
    ],
  };

  it("prints every split threshold and leaf class", () => {
    const dom = mount(renderTree(fit, FEATURES));
    expect(dom.textContent).toContain("0.28");
    expect(dom.textContent).toContain("1.5");
    expect(dom.querySelectorAll(".leaf")).toHaveLength(3);
    expect(dom.textContent).toContain("depth");
  });
});

describe("boundary heatmap", () => {
  const response = fixture("surrogate_by_radius")["0.25"];

  it("compresses label runs and overlays the surrogate contour", () => {
    const html = renderBoundary(response.boundary, [0.5, 0.25], 0.25);
    const dom = mount(html);
    const rects = dom.querySelectorAll("rect");
    const res = response.boundary.resolution;
    expect(rects.length).toBeGreaterThan(0);
    expect(rects.length).toBeLessThan((res * res) / 4);
    expect(dom.querySelector(".surrogate-contour")!.getAttribute("d")).toMatch(/M/);
    expect(dom.querySelector(".radius-ring")).not.toBeNull();
    expect(dom.querySelector(".instance-mark")).not.toBeNull();
  });

  it("is deterministic", () => {
    const a = renderBoundary(response.boundary, [0.5, 0.25], 0.25);
    const b = renderBoundary(response.boundary, [0.5, 0.25], 0.25);
    expect(a).toBe(b);
  });
});

describe("sweep chart", () => {
  const sweep = fixture("sweep_job").result;

  it("draws the fidelity line, one marker per radius, and the cursor", () => {
    const dom = mount(renderSweepChart(sweep, sweep.radii[4]));
    expect(dom.querySelectorAll(".pt")).toHaveLength(sweep.radii.length);
    const line = dom.querySelector(".accuracy-line")!;
    expect(polylinePoints(line)).toHaveLength(sweep.radii.length);
    const cursor = dom.querySelector(".cursor")!;
    const marker = dom.querySelectorAll(".pt")[4];
    expect(cursor.getAttribute("x1")).toBe(marker.getAttribute("cx"));
  });

  it("labels the axes with served radii only", () => {
    const dom = mount(renderSweepChart(sweep, 1.0));
    const labels = Array.from(dom.querySelectorAll("text")).map((t) => t.textContent);
    expect(labels).toContain(String(sweep.radii[0]));
    expect(labels).toContain(String(sweep.radii[sweep.radii.length - 1]));
  });
});

describe("bootstrap bands", () => {
  const summaries: BootstrapSummaryJson[] = fixture("bootstrap_job").result;

  it("renders an accuracy band, per-coefficient bands, and the value table", () => {
    const dom = mount(renderBootstrapBands(summaries, FEATURES, []));
    expect(dom.querySelectorAll("svg.band-chart")).toHaveLength(2);
    expect(dom.querySelectorAll(".coef-band")).toHaveLength(2);
    const text = dom.textContent!;
    for (const s of summaries) {
      expect(text).toContain(String(s.accuracy_mean));
      expect(text).toContain(String(s.coef_std[0]));
    }
  });

  it("collapses to the mean line when the spread is zero", () => {
    const flat = summaries.map((s) => ({
      ...s,
      accuracy_std: 0,
      coef_std: s.coef_std.map(() => 0),
    }));
    const dom = mount(renderBootstrapBands(flat, FEATURES, []));
    const polygon = dom.querySelector(".band.acc")!;
    const pts = (polygon.getAttribute("points") ?? "").split(" ");
    const n = flat.length;
    const forward = pts.slice(0, n);
    const back = pts.slice(n).reverse();
    expect(forward).toEqual(back);
  });

  it("draws labelled annotation intervals", () => {
    const dom = mount(
      renderBootstrapBands(summaries, FEATURES, [
        { interval: [0.5, 1.0], label: "flip zone" },
      ]),
    );
    expect(dom.querySelectorAll(".annotation")).toHaveLength(2);
    expect(dom.textContent).toContain("flip zone");
  });
});

describe("lasso path charts", () => {
  const path = fixture("path_job").result;

  it("renders three charts sharing the C axis with one trajectory per feature", () => {
    const dom = mount(renderLassoPath(path, FEATURES, null));
    expect(dom.querySelectorAll("svg.path-chart")).toHaveLength(3);
    expect(dom.querySelectorAll(".coef-path")).toHaveLength(2);
    expect(dom.textContent).toContain(String(path.C_grid[0]));
  });

  it("starts every coefficient line on the zero axis at the strongest C", () => {
    const dom = mount(renderLassoPath(path, FEATURES, null));
    const zeroY = dom.querySelector(".zero-axis")!.getAttribute("y1");
    for (const group of dom.querySelectorAll(".coef-path")) {
      const [first] = polylinePoints(group.querySelector("polyline")!);
      expect(first[1].toFixed(2)).toBe(zeroY);
    }
  });

  it("hover pins a C and echoes its served values", () => {
    const hover = 5;
    const dom = mount(renderLassoPath(path, FEATURES, hover));
    expect(dom.querySelectorAll(".hover-rule")).toHaveLength(3);
    const readout = dom.querySelector(".path-readout")!.textContent!;
    const entry = path.entries[hover];
    expect(readout).toContain(String(entry.C));
    expect(readout).toContain(String(entry.accuracy));
    expect(readout).toContain(String(entry.l0));
    expect(readout).toContain(String(entry.coefficients[0]));
  });

  it("degenerates to points on a single-C grid", () => {
    const single = fixture("path_single_C").result;
    const dom = mount(renderLassoPath(single, FEATURES, null));
    expect(dom.querySelectorAll("svg.path-chart polyline")).toHaveLength(0);
    expect(dom.querySelectorAll("svg.path-chart circle").length).toBeGreaterThanOrEqual(3);
  });
});

describe("chrome", () => {
  it("escapes error text", () => {
    const dom = mount(renderError('<img src=x onerror="pwn()"> & more'));
    expect(dom.querySelector("img")).toBeNull();
    expect(dom.textContent).toContain("& more");
    expect(esc("<b>")).toBe("&lt;b&gt;");
  });

  it("renders nothing when there is no error or job", () => {
    expect(renderError(null)).toBe("");
    expect(renderJobProgress(null)).toBe("");
  });

  it("shows job progress as a bar plus the raw fraction", () => {
    const dom = mount(renderJobProgress({ kind: "bootstrap", progress: 0.25 }));
    expect(dom.querySelector(".fill")!.getAttribute("style")).toContain("25.00%");
    expect(dom.querySelector(".num")!.textContent).toBe("0.25");
  });
});
