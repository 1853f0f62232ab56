// App controller: wires DOM events to the API client and re-renders panels
// from ViewState. One in-flight surrogate request at a time per panel; stale
// responses are dropped by sequence number, slider traffic is debounced.

import { ApiClient, ApiError } from "./api.js";
import {
  renderBoundary,
  renderBootstrapBands,
  renderError,
  renderJobProgress,
  renderLassoPath,
  renderSessionHeader,
  renderSurrogatePanel,
  renderSweepChart,
} from "./render.js";
import {
  addAnnotation,
  cachedSweepEntry,
  debounce,
  initialState,
  realTimers,
  SequenceGate,
  setRadius,
  setSweep,
  SLIDER_DEBOUNCE_MS,
  type Timers,
  type ViewState,
} from "./state.js";
import type {
  BootstrapSummaryJson,
  LassoPathJson,
  SessionExport,
  SweepResultJson,
} from "./types.js";

export const DEFAULT_SESSION_BODY = {
  dataset: { kind: "moons", n: 1000, noise: 0.1, seed: 7 },
  blackbox: { kind: "builtin_mlp" },
  instance: { kind: "inline", values: [0.5, 0.25] },
};

const QUERY_DEFAULTS = { n_samples: 512, tol: 1e-6, max_iter: 1000, seed: 0 };

export interface BootOptions {
  sessionBody?: unknown;
  timers?: Timers;
  debounceMs?: number;
}

export interface AppController {
  state(): ViewState;
  idle(): Promise<void>;
  setRadiusFromUi(radius: number): void;
}

const SHELL = `
  <div id="error-region"></div>
  <div id="session-header"></div>
  <section class="panel" id="controls">
    <label>radius
      <input type="range" id="radius-slider" min="0.25" max="3" step="0.001" value="0.25">
    </label>
    <label>family
      <select id="family">
        <option value="logistic">logistic</option>
        <option value="logistic_l1">logistic + L1</option>
        <option value="tree">tree</option>
      </select>
    </label>
    <label class="l1-only hidden">C <input type="number" id="C" value="1" step="any"></label>
    <label class="tree-only hidden">max depth <input type="number" id="max-depth" value="3" min="0"></label>
  </section>
  <section class="panel"><h2>local surrogate</h2><div id="surrogate-panel"></div></section>
  <section class="panel"><h2>decision boundary</h2><div id="boundary-panel"></div></section>
  <section class="panel">
    <h2>fidelity vs radius</h2>
    <button id="run-sweep">run sweep</button>
    <div id="sweep-panel"></div>
  </section>
  <section class="panel">
    <h2>uncertainty</h2>
    <button id="run-bootstrap">run bootstrap</button>
    <label>annotation label <input type="text" id="annotation-label" placeholder="drag on the chart"></label>
    <div id="bootstrap-panel"></div>
  </section>
  <section class="panel">
    <h2>regularization path</h2>
    <button id="run-path">run path at current radius</button>
    <div id="path-panel"></div>
  </section>
  <section class="panel">
    <h2>session</h2>
    <div id="job-region"></div>
    <button id="export-btn">export</button>
    <textarea id="export-output" rows="4" readonly></textarea>
    <textarea id="import-text" rows="4" placeholder="paste a session export"></textarea>
    <button id="import-btn">import</button>
  </section>
`;

function viewX(svg: SVGElement, clientX: number): number {
  const rect = svg.getBoundingClientRect();
  if (rect.width === 0) return clientX; // headless test DOMs report no layout
  const viewW = Number(svg.getAttribute("viewBox")?.split(" ")[2] ?? rect.width);
  return ((clientX - rect.left) / rect.width) * viewW;
}

export async function boot(
  root: HTMLElement,
  client: ApiClient,
  options: BootOptions = {},
): Promise<AppController> {
  const timers = options.timers ?? realTimers;
  let state = initialState();
  const gate = new SequenceGate();
  let inflight = 0;
  const idleWaiters: (() => void)[] = [];

  const track = async <T>(work: Promise<T>): Promise<T> => {
    inflight++;
    try {
      return await work;
    } finally {
      inflight--;
      if (inflight === 0) idleWaiters.splice(0).forEach((fn) => fn());
    }
  };

  root.innerHTML = SHELL;
  const el = <T extends HTMLElement>(id: string): T => root.querySelector<T>(`#${id}`)!;
  const slider = el<HTMLInputElement>("radius-slider");

  const featureNames = (): string[] => state.session?.dataset.feature_names ?? [];

  const syncSlider = () => {
    slider.min = String(state.radiusRange[0]);
    slider.max = String(state.radiusRange[1]);
    slider.value = String(state.radius);
  };

  const renderSurrogate = () => {
    const entry = state.surrogate?.entry ?? cachedSweepEntry(state, state.radius);
    el("surrogate-panel").innerHTML = entry
      ? renderSurrogatePanel(entry, featureNames())
      : "<p class=\"placeholder\">move the slider to fit a surrogate</p>";
    const boundary = state.surrogate?.boundary;
    el("boundary-panel").innerHTML = boundary && state.session
      ? renderBoundary(boundary, state.session.instance, state.surrogate!.entry.radius)
      : "<p class=\"placeholder\">available for 2-D datasets</p>";
  };

  const renderPanels = () => {
    el("error-region").innerHTML = renderError(state.error);
    el("job-region").innerHTML = renderJobProgress(state.jobProgress);
    if (state.session) el("session-header").innerHTML = renderSessionHeader(state.session);
    renderSurrogate();
    el("sweep-panel").innerHTML = state.sweep
      ? renderSweepChart(state.sweep, state.radius)
      : "";
    el("bootstrap-panel").innerHTML = state.bootstrap
      ? renderBootstrapBands(state.bootstrap, featureNames(), state.annotations)
      : "";
    el("path-panel").innerHTML = state.path
      ? renderLassoPath(state.path, featureNames(), state.pathHover)
      : "";
    bindChartEvents();
  };

  const fail = (exc: unknown) => {
    state = { ...state, error: exc instanceof Error ? exc.message : String(exc) };
    renderPanels();
  };

  const fitParams = (): Record<string, unknown> => {
    const params: Record<string, unknown> = { ...QUERY_DEFAULTS };
    if (state.family !== "logistic") params.family = state.family;
    if (state.family === "logistic_l1" && state.C !== null) params.C = state.C;
    if (state.family === "tree" && state.maxDepth !== null) params.max_depth = state.maxDepth;
    return params;
  };

  const querySurrogate = (radius: number) => {
    if (!state.session) return;
    const seq = gate.begin();
    void track(
      client
        .querySurrogate(state.session.id, { radius, ...fitParams() })
        .then((response) => {
          if (!gate.accept(seq)) return;
          state = { ...state, surrogate: response, error: null };
          renderPanels();
        })
        .catch((exc) => {
          if (!gate.accept(seq)) return;
          fail(exc);
        }),
    );
  };

  const scheduleQuery = debounce(
    () => querySurrogate(state.radius),
    options.debounceMs ?? SLIDER_DEBOUNCE_MS,
    timers,
  );

  const setRadiusFromUi = (radius: number) => {
    state = setRadius(state, radius);
    slider.value = String(state.radius);
    const cached = cachedSweepEntry(state, state.radius);
    if (cached) {
      // swept radii render instantly from cache; the query still refreshes
      // the boundary grid, returning identical values
      state = { ...state, surrogate: null };
      renderPanels();
    }
    scheduleQuery();
  };

  slider.addEventListener("input", () => setRadiusFromUi(Number(slider.value)));

  el<HTMLSelectElement>("family").addEventListener("change", (ev) => {
    state = { ...state, family: (ev.target as HTMLSelectElement).value as ViewState["family"] };
    root.querySelector(".l1-only")!.classList.toggle("hidden", state.family !== "logistic_l1");
    root.querySelector(".tree-only")!.classList.toggle("hidden", state.family !== "tree");
    querySurrogate(state.radius);
  });
  el<HTMLInputElement>("C").addEventListener("change", (ev) => {
    state = { ...state, C: Number((ev.target as HTMLInputElement).value) };
    querySurrogate(state.radius);
  });
  el<HTMLInputElement>("max-depth").addEventListener("change", (ev) => {
    state = { ...state, maxDepth: Number((ev.target as HTMLInputElement).value) };
    querySurrogate(state.radius);
  });

  const runJob = (kind: "sweep" | "bootstrap" | "path", params: Record<string, unknown>) => {
    if (!state.session) return;
    return track(
      client
        .runJob(state.session.id, kind, params, (progress) => {
          state = { ...state, jobProgress: { kind, progress } };
          el("job-region").innerHTML = renderJobProgress(state.jobProgress);
        })
        .then((result) => {
          state = { ...state, jobProgress: null, error: null };
          if (kind === "sweep") {
            state = setSweep(state, result as SweepResultJson);
            syncSlider();
          } else if (kind === "bootstrap") {
            state = { ...state, bootstrap: result as BootstrapSummaryJson[] };
          } else {
            state = { ...state, path: result as LassoPathJson, pathHover: null };
          }
          renderPanels();
        })
        .catch(fail),
    );
  };

  const sweepRadii = (): number[] => {
    const [lo, hi] = state.radiusRange;
    const out: number[] = [];
    for (let i = 0; i < 10; i++) out.push(lo + (i * (hi - lo)) / 9);
    return out;
  };

  el("run-sweep").addEventListener("click", () => {
    void runJob("sweep", { radii: sweepRadii(), ...fitParams() });
  });
  el("run-bootstrap").addEventListener("click", () => {
    const { family: _f, ...params } = fitParams();
    void runJob("bootstrap", { radii: sweepRadii(), B: 100, n: 200, eval_n: 512, ...params });
  });
  el("run-path").addEventListener("click", () => {
    const { family: _f, C: _c, ...params } = fitParams();
    void runJob("path", { radius: state.radius, ...params });
  });

  el("export-btn").addEventListener("click", () => {
    if (!state.session) return;
    void track(
      client
        .exportSession(state.session.id)
        .then((record) => {
          record.annotations = state.annotations;
          el<HTMLTextAreaElement>("export-output").value = JSON.stringify(record);
        })
        .catch(fail),
    );
  });

  el("import-btn").addEventListener("click", () => {
    let record: SessionExport;
    try {
      record = JSON.parse(el<HTMLTextAreaElement>("import-text").value);
    } catch {
      fail(new ApiError("invalid_request", "import payload is not valid JSON", 0));
      return;
    }
    void track(
      client.importSession(record).then((session) => {
        state = { ...initialState(), session, annotations: session.annotations };
        syncSlider();
        renderPanels();
        querySurrogate(state.radius);
      }).catch(fail),
    );
  });

  // drag on the accuracy band chart creates an annotated radius interval
  let dragStart: number | null = null;
  const bindChartEvents = () => {
    const band = root.querySelector<SVGElement>(".band-chart.acc");
    if (band && !band.dataset.bound) {
      band.dataset.bound = "1";
      const toRadius = (clientX: number) => {
        const x0 = Number(band.dataset.x0);
        const x1 = Number(band.dataset.x1);
        const r0 = Number(band.dataset.r0);
        const r1 = Number(band.dataset.r1);
        const x = Math.min(Math.max(viewX(band, clientX), x0), x1);
        return r0 + ((x - x0) / (x1 - x0)) * (r1 - r0);
      };
      band.addEventListener("mousedown", (ev) => {
        dragStart = toRadius((ev as MouseEvent).clientX);
      });
      band.addEventListener("mouseup", (ev) => {
        if (dragStart === null) return;
        const end = toRadius((ev as MouseEvent).clientX);
        const label = el<HTMLInputElement>("annotation-label").value || "interval";
        state = addAnnotation(state, [dragStart, end], label);
        dragStart = null;
        renderPanels();
      });
    }

    for (const chart of root.querySelectorAll<SVGElement>(".path-chart")) {
      if (chart.dataset.bound) continue;
      chart.dataset.bound = "1";
      chart.addEventListener("mousemove", (ev) => {
        const n = Number(chart.dataset.n);
        const x0 = Number(chart.dataset.x0);
        const x1 = Number(chart.dataset.x1);
        const x = viewX(chart, (ev as MouseEvent).clientX);
        const index = n === 1
          ? 0
          : Math.min(n - 1, Math.max(0, Math.round(((x - x0) / (x1 - x0)) * (n - 1))));
        if (index !== state.pathHover) {
          state = { ...state, pathHover: index };
          renderPanels();
        }
      });
      chart.addEventListener("mouseleave", () => {
        if (state.pathHover !== null) {
          state = { ...state, pathHover: null };
          renderPanels();
        }
      });
    }
  };

  const session = await track(
    client.createSession(options.sessionBody ?? DEFAULT_SESSION_BODY),
  );
  state = { ...state, session, annotations: session.annotations };
  syncSlider();
  renderPanels();
  querySurrogate(state.radius);

  return {
    state: () => state,
    idle: () =>
      inflight === 0
        ? Promise.resolve()
        : new Promise((res) => idleWaiters.push(res)),
    setRadiusFromUi,
  };
}
