/**
 * Navigation over the screen tree: a view state is a root-to-node path of
 * cluster label sets.  Everything here is a pure function of
 * (model, state, input); callers keep the returned state.
 */

import { ClickableScreen, clusterKey } from "./model.js";

export interface ViewState {
  path: string[];            // cluster keys below the root, in descent order
  showLabels: boolean;
  showPasteRays: boolean;
}

export function initialState(): ViewState {
  return { path: [], showLabels: true, showPasteRays: true };
}

export function resolveScreen(model: ClickableScreen, state: ViewState): ClickableScreen {
  let screen = model;
  for (const key of state.path) {
    const child = screen.children.find((c) => clusterKey(c.cluster) === key);
    if (!child) {
      throw new Error(`path entry ${key} is not a child screen`);
    }
    screen = child;
  }
  return screen;
}

/** Click on a cluster: descend iff it is a nontrivial child of the screen. */
export function navigate(model: ClickableScreen, state: ViewState,
                         clicked: number[]): ViewState {
  const screen = resolveScreen(model, state);
  const key = clusterKey(clicked);
  const child = screen.children.find((c) => clusterKey(c.cluster) === key);
  if (!child) {
    return state;              // singleton or unknown target: no-op
  }
  return { ...state, path: [...state.path, key] };
}

export function back(model: ClickableScreen, state: ViewState): ViewState {
  if (state.path.length === 0) {
    return state;              // already at the root: no-op
  }
  return { ...state, path: state.path.slice(0, -1) };
}

export function breadcrumb(model: ClickableScreen, state: ViewState): string[] {
  const names = [clusterKey(model.cluster)];
  let screen = model;
  for (const key of state.path) {
    screen = screen.children.find((c) => clusterKey(c.cluster) === key)!;
    names.push(key);
  }
  return names;
}

/** Deep-linkable path encoding for the URL hash. */
export function encodePath(state: ViewState): string {
  return state.path.map((key) => key.replace(/,/g, ".")).join("/");
}

export function decodePath(model: ClickableScreen, hash: string): ViewState {
  const state = initialState();
  const cleaned = hash.replace(/^#/, "");
  if (!cleaned) {
    return state;
  }
  let current = state;
  for (const segment of cleaned.split("/")) {
    const labels = segment.split(".").map((v) => parseInt(v, 10));
    if (labels.some((v) => !Number.isInteger(v))) {
      return initialState();   // malformed: fall back to the root
    }
    const next = navigate(model, current, labels);
    if (next === current) {
      return initialState();   // not a valid descent: fall back
    }
    current = next;
  }
  return current;
}

/**
 * Pure hit test: the cluster (or singleton) whose position is within
 * `radius` of the click, in screen coordinates.
 */
export function hitTarget(screen: ClickableScreen, x: number, y: number,
                          radius: number): number[] | null {
  const positions = clusterPositions(screen);
  let best: { labels: number[]; d: number } | null = null;
  for (const { labels, at } of positions) {
    const d = Math.hypot(at[0] - x, at[1] - y);
    if (d <= radius && (best === null || d < best.d)) {
      best = { labels, d };
    }
  }
  return best ? best.labels : null;
}

export function clusterPositions(screen: ClickableScreen):
    { labels: number[]; at: number[] }[] {
  const out: { labels: number[]; at: number[] }[] = [];
  for (const cell of screen.cells) {
    const members = screen.sites.filter((s) => cell.owner.includes(s.label));
    if (members.length === 0) {
      continue;
    }
    out.push({ labels: [...cell.owner], at: [members[0].x, members[0].y] });
  }
  return out;
}
