// JSON shapes of the surrogate service API. Field names mirror the wire
// format exactly; nothing here is recomputed client-side.

export interface DatasetView {
  feature_names: string[];
  n_samples: number;
  dim: number;
  bounds: [number, number][];
}

export interface BlackboxView {
  kind: string;
  train_accuracy: number | null; // null for external processes
}

export interface Annotation {
  interval: [number, number]; // radius interval, lo <= hi
  label: string;
}

export interface SessionView {
  id: string;
  created_at: number;
  dataset: DatasetView;
  blackbox: BlackboxView;
  instance: number[];
  defaults: Record<string, unknown>;
  annotations: Annotation[];
}

export interface LinearFitJson {
  type: "linear_surrogate";
  coefficients: number[];
  intercept: number;
  C: number | null;
  n_iter: number;
  objective: number;
  degenerate: boolean;
}

export interface TreeNodeJson {
  split_feature?: number;
  threshold?: number;
  left?: number;
  right?: number;
  class?: number;
}

export interface TreeFitJson {
  type: "tree_surrogate";
  nodes: TreeNodeJson[];
  depth: number;
  n_leaves: number;
}

export type SurrogateFitJson = LinearFitJson | TreeFitJson;

export interface FidelityJson {
  type: "fidelity_report";
  accuracy: number;
  tpr: number | null; // null when the eval draw has no positives
  tnr: number | null;
  tp: number;
  fp: number;
  tn: number;
  fn: number;
  n_eval: number;
  eval_kind: string;
}

export interface SweepEntryJson {
  type: "sweep_entry";
  radius: number;
  surrogate: SurrogateFitJson;
  fidelity: FidelityJson;
  complexity: number | [number, number]; // l0, or [depth, leaves]
  degenerate: boolean;
}

export interface SweepResultJson {
  type: "sweep_result";
  radii: number[];
  entries: SweepEntryJson[];
}

export interface BootstrapSummaryJson {
  type: "bootstrap_summary";
  radius: number;
  B: number;
  n: number;
  accuracy_mean: number;
  accuracy_std: number;
  coef_mean: number[];
  coef_std: number[];
  replicate_seeds: number[];
}

export interface PathEntryJson {
  type: "path_entry";
  C: number;
  coefficients: number[];
  intercept: number;
  l0: number;
  accuracy: number;
}

export interface LassoPathJson {
  type: "lasso_path_result";
  radius: number;
  C_grid: number[];
  entries: PathEntryJson[];
}

export interface BoundaryJson {
  bounds: [number, number][];
  resolution: number;
  blackbox_labels: number[]; // row-major, row index walks feature 0
  surrogate_labels: number[];
}

export interface SurrogateResponse {
  entry: SweepEntryJson;
  boundary: BoundaryJson | null; // only for 2-D datasets
}

export type JobStatus = "pending" | "running" | "done" | "failed";

export interface JobView {
  status: JobStatus;
  progress: number;
  result?: unknown;
  error?: ApiErrorBody;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export type SurrogateFamily = "logistic" | "logistic_l1" | "tree";

export interface SurrogateQuery {
  radius: number;
  family?: SurrogateFamily;
  C?: number;
  max_depth?: number;
  max_leaves?: number;
  n_samples?: number;
  eval_n?: number;
  tol?: number;
  max_iter?: number;
  kernel_width?: number;
  seed?: number;
  boundary_resolution?: number;
}

export interface SessionExport {
  type: "session_export";
  dataset: unknown;
  blackbox: unknown;
  instance: number[];
  defaults: Record<string, unknown>;
  annotations: Annotation[];
  created_at: number;
}
