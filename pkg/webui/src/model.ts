/**
 * The clickable-diagram model: a rooted tree of screens, one per nontrivial
 * cluster, with precomputed cell polygons.  The viewer never recomputes
 * geometry; everything rendered comes straight from this file format.
 */

export interface ClickableCell {
  owner: number[];
  polygon: number[][];
  rays: number[][];
}

export interface PasteRay {
  at: number[];
  cluster: number[];
  dirs: number[][];
}

export interface SiteMark {
  label: number;
  x: number;
  y: number;
}

export interface ClickableScreen {
  cluster: number[];
  orientation: number;
  sites: SiteMark[];
  cells: ClickableCell[];
  paste_rays: PasteRay[];
  children: ClickableScreen[];
}

export class SchemaError extends Error {}

function fail(path: string, why: string): never {
  throw new SchemaError(`${path}: ${why}`);
}

function checkNumberArray(value: unknown, length: number, path: string): number[] {
  if (!Array.isArray(value) || value.length !== length
      || !value.every((v) => typeof v === "number" && Number.isFinite(v))) {
    fail(path, `expected ${length} finite numbers`);
  }
  return value as number[];
}

function checkLabels(value: unknown, path: string): number[] {
  if (!Array.isArray(value) || value.length === 0
      || !value.every((v) => Number.isInteger(v) && v >= 1)) {
    fail(path, "expected a nonempty list of positive integer labels");
  }
  return value as number[];
}

export function loadModel(data: unknown, path = "root"): ClickableScreen {
  if (typeof data !== "object" || data === null) {
    fail(path, "expected an object");
  }
  const record = data as Record<string, unknown>;
  const cluster = checkLabels(record.cluster, `${path}.cluster`);
  if (typeof record.orientation !== "number") {
    fail(path, "orientation must be a number");
  }
  if (!Array.isArray(record.sites)) {
    fail(path, "sites must be a list");
  }
  const sites = record.sites.map((s, i) => {
    const entry = s as Record<string, unknown>;
    if (typeof entry.label !== "number" || typeof entry.x !== "number"
        || typeof entry.y !== "number") {
      fail(`${path}.sites[${i}]`, "needs numeric label, x, y");
    }
    return { label: entry.label as number, x: entry.x as number, y: entry.y as number };
  });
  if (!Array.isArray(record.cells)) {
    fail(path, "cells must be a list");
  }
  const cells = record.cells.map((c, i) => {
    const entry = c as Record<string, unknown>;
    const owner = checkLabels(entry.owner, `${path}.cells[${i}].owner`);
    if (!Array.isArray(entry.polygon)) {
      fail(`${path}.cells[${i}]`, "polygon must be a list");
    }
    const polygon = (entry.polygon as unknown[]).map(
      (p, j) => checkNumberArray(p, 2, `${path}.cells[${i}].polygon[${j}]`));
    const rays = ((entry.rays ?? []) as unknown[]).map(
      (r, j) => checkNumberArray(r, 2, `${path}.cells[${i}].rays[${j}]`));
    return { owner, polygon, rays };
  });
  const paste = ((record.paste_rays ?? []) as unknown[]).map((pr, i) => {
    const entry = pr as Record<string, unknown>;
    return {
      at: checkNumberArray(entry.at, 2, `${path}.paste_rays[${i}].at`),
      cluster: checkLabels(entry.cluster, `${path}.paste_rays[${i}].cluster`),
      dirs: ((entry.dirs ?? []) as unknown[]).map(
        (d, j) => checkNumberArray(d, 2, `${path}.paste_rays[${i}].dirs[${j}]`)),
    };
  });
  const children = ((record.children ?? []) as unknown[]).map(
    (c, i) => loadModel(c, `${path}.children[${i}]`));
  for (const child of children) {
    const inside = child.cluster.every((l) => cluster.includes(l));
    if (!inside || child.cluster.length < 2) {
      fail(path, `child cluster ${child.cluster} is not a nontrivial subcluster`);
    }
  }
  return { cluster, orientation: record.orientation as number, sites, cells,
           paste_rays: paste, children };
}

export function clusterKey(labels: number[]): string {
  return [...labels].sort((a, b) => a - b).join(",");
}
