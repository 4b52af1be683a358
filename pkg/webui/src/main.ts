/**
 * Browser wiring: load a clickable-diagram JSON, render the current screen,
 * descend by clicking cluster markers, go back via button or breadcrumb.
 * All geometry comes precomputed from the file; this module only dispatches
 * events into the pure navigation/render functions.
 */

import { ClickableScreen, SchemaError, loadModel } from "./model.js";
import { DEFAULT_OPTIONS, frameOf, fromScreen, renderScreen } from "./render.js";
import { ViewState, back, breadcrumb, decodePath, encodePath, hitTarget,
         initialState, navigate, resolveScreen } from "./navigation.js";

let model: ClickableScreen | null = null;
let state: ViewState = initialState();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function setStatus(text: string): void {
  el<HTMLElement>("status").textContent = text;
}

function render(): void {
  if (!model) {
    return;
  }
  const screen = resolveScreen(model, state);
  const host = el<HTMLElement>("viewer");
  host.innerHTML = renderScreen(screen, {
    showLabels: state.showLabels,
    showPasteRays: state.showPasteRays && state.path.length === 0,
  });
  const crumbs = breadcrumb(model, state);
  const nav = el<HTMLElement>("breadcrumb");
  nav.innerHTML = "";
  crumbs.forEach((name, index) => {
    const button = document.createElement("button");
    button.textContent = `{${name}}`;
    button.disabled = index === crumbs.length - 1;
    button.addEventListener("click", () => {
      state = { ...state, path: state.path.slice(0, index) };
      syncHash();
      render();
    });
    nav.appendChild(button);
    if (index < crumbs.length - 1) {
      nav.appendChild(document.createTextNode(" > "));
    }
  });
  const svg = host.querySelector("svg");
  if (svg) {
    svg.addEventListener("click", onCanvasClick);
  }
}

function onCanvasClick(event: MouseEvent): void {
  if (!model) {
    return;
  }
  const svg = event.currentTarget as SVGSVGElement;
  const rect = svg.getBoundingClientRect();
  const px = (event.clientX - rect.left) * (DEFAULT_OPTIONS.width / rect.width);
  const py = (event.clientY - rect.top) * (DEFAULT_OPTIONS.height / rect.height);
  const screen = resolveScreen(model, state);
  const frame = frameOf(screen, DEFAULT_OPTIONS.width, DEFAULT_OPTIONS.height);
  const [x, y] = fromScreen(frame, px, py);
  const target = hitTarget(screen, x, y, DEFAULT_OPTIONS.hitRadiusPx / frame.scale);
  if (!target) {
    return;
  }
  const next = navigate(model, state, target);
  if (next !== state) {
    state = next;
    syncHash();
    render();
  }
}

function syncHash(): void {
  window.location.hash = encodePath(state);
}

function loadText(text: string): void {
  try {
    model = loadModel(JSON.parse(text));
  } catch (err) {
    if (err instanceof SchemaError) {
      setStatus(`schema error: ${err.message}`);
    } else {
      setStatus(`could not parse file: ${err}`);
    }
    model = null;
    return;
  }
  state = decodePath(model, window.location.hash);
  setStatus(`loaded diagram on ${model.cluster.length} sites`);
  render();
}

export function boot(): void {
  el<HTMLInputElement>("file").addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    const file = input.files && input.files[0];
    if (!file) {
      return;
    }
    file.text().then(loadText);
  });
  el<HTMLButtonElement>("back").addEventListener("click", () => {
    if (!model) {
      return;
    }
    state = back(model, state);
    syncHash();
    render();
  });
  el<HTMLInputElement>("toggle-labels").addEventListener("change", (event) => {
    state = { ...state, showLabels: (event.target as HTMLInputElement).checked };
    render();
  });
  el<HTMLInputElement>("toggle-rays").addEventListener("change", (event) => {
    state = { ...state,
              showPasteRays: (event.target as HTMLInputElement).checked };
    render();
  });
  window.addEventListener("hashchange", () => {
    if (model) {
      state = decodePath(model, window.location.hash);
      render();
    }
  });
  const params = new URLSearchParams(window.location.search);
  const preset = params.get("file");
  if (preset) {
    fetch(preset).then((r) => r.text()).then(loadText)
      .catch((err) => setStatus(`fetch failed: ${err}`));
  } else {
    setStatus("choose a clickable-diagram JSON file");
  }
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", boot);
}
